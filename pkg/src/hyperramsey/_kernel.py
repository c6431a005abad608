"""Compiled DPLL kernel for the two-colour avoidance search.

Clauses are embedding images: a list of edge variables plus the colour that
must not cover all of them (1 = red, 0 = blue). Propagation keeps, per clause,
the number of edges already in the forbidden colour and in the other colour;
a clause with no escaping edge and one unassigned edge forces that edge.
Decisions take the lowest unassigned variable and try red first.
"""

from __future__ import annotations

import numpy as np
from numba import njit

UNSAT = 0
SAT = 1
LIMIT = 2

_FNV_PRIME = np.uint64(1099511628211)
_FNV_OFFSET = np.uint64(14695981039346656037)


@njit(cache=True, nogil=True)
def _undo(to_pos, trail_len, qhead, trail, vals, cl_bad, nb, ng, occ_start, occ):
    for t in range(trail_len - 1, to_pos - 1, -1):
        v = trail[t]
        if t < qhead:
            val = vals[v]
            for j in range(occ_start[v], occ_start[v + 1]):
                c = occ[j]
                if val == cl_bad[c]:
                    nb[c] -= 1
                else:
                    ng[c] -= 1
        vals[v] = -1
    return to_pos


@njit(cache=True, nogil=True)
def dpll(n_vars, cl_start, cl_vars, cl_bad, occ_start, occ, assume_vars, assume_vals, node_limit):
    """Return (status, values, nodes, decisions, conflicts, trace_hash)."""
    n_cl = cl_start.shape[0] - 1
    vals = np.full(n_vars, -1, np.int8)
    nb = np.zeros(n_cl, np.int32)
    ng = np.zeros(n_cl, np.int32)
    trail = np.empty(n_vars, np.int32)
    dec_pos = np.empty(n_vars + 1, np.int32)
    dec_var = np.empty(n_vars + 1, np.int32)
    dec_flip = np.zeros(n_vars + 1, np.bool_)
    trail_len = 0
    qhead = 0
    level = 0
    nodes = 0
    decisions = 0
    conflicts = 0
    h = _FNV_OFFSET

    for c in range(n_cl):
        if cl_start[c + 1] == cl_start[c]:
            return UNSAT, vals, nodes, decisions, 1, h

    conflict = False
    for i in range(assume_vars.shape[0]):
        v = assume_vars[i]
        if vals[v] == -1:
            vals[v] = assume_vals[i]
            trail[trail_len] = v
            trail_len += 1
        elif vals[v] != assume_vals[i]:
            conflict = True
    if conflict:
        return UNSAT, vals, nodes, decisions, 1, h

    while True:
        # unit propagation
        conflict = False
        while qhead < trail_len:
            v = trail[qhead]
            qhead += 1
            val = vals[v]
            for j in range(occ_start[v], occ_start[v + 1]):
                c = occ[j]
                if val == cl_bad[c]:
                    nb[c] += 1
                    if ng[c] == 0 and not conflict:
                        size = cl_start[c + 1] - cl_start[c]
                        if nb[c] == size:
                            conflict = True
                        elif nb[c] == size - 1:
                            for t in range(cl_start[c], cl_start[c + 1]):
                                u = cl_vars[t]
                                if vals[u] == -1:
                                    vals[u] = 1 - cl_bad[c]
                                    trail[trail_len] = u
                                    trail_len += 1
                                    break
                else:
                    ng[c] += 1
            if conflict:
                break

        if conflict:
            conflicts += 1
            # chronological backtracking
            while True:
                if level == 0:
                    return UNSAT, vals, nodes, decisions, conflicts, h
                top = level - 1
                trail_len = _undo(dec_pos[top], trail_len, qhead, trail, vals, cl_bad, nb, ng, occ_start, occ)
                qhead = trail_len
                if not dec_flip[top]:
                    dec_flip[top] = True
                    v = dec_var[top]
                    vals[v] = 0
                    trail[trail_len] = v
                    trail_len += 1
                    nodes += 1
                    h = (h ^ np.uint64(2 * v + 1)) * _FNV_PRIME
                    break
                level -= 1
            if nodes >= node_limit:
                return LIMIT, vals, nodes, decisions, conflicts, h
            continue

        pick = -1
        for v in range(n_vars):
            if vals[v] == -1:
                pick = v
                break
        if pick == -1:
            return SAT, vals, nodes, decisions, conflicts, h
        if nodes >= node_limit:
            return LIMIT, vals, nodes, decisions, conflicts, h
        dec_pos[level] = trail_len
        dec_var[level] = pick
        dec_flip[level] = False
        level += 1
        vals[pick] = 1
        trail[trail_len] = pick
        trail_len += 1
        nodes += 1
        decisions += 1
        h = (h ^ np.uint64(2 * pick + 2)) * _FNV_PRIME
