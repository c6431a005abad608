"""Search and size caps.

All exponential routines consult these defaults unless a caller passes an
explicit cap. The CLI overrides them from flags; there is no config file.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    vertex_cap: int = 64  # constructed hypergraphs and colorings
    alpha_cap: int = 30  # vertices per component for the exact invariant searches
    variable_cap: int = 120  # C(N, k) for the Ramsey search and CNF export
    image_cap: int = 5_000_000  # embedding images of one pattern into K_N^k
    kneser_n_cap: int = 12
    subset_cap: int = 20  # |V1| for the covering criterion


_caps = Caps()


def caps() -> Caps:
    return _caps


def set_caps(**changes: int) -> Caps:
    """Replace selected default caps process-wide; returns the new value."""
    global _caps
    _caps = replace(_caps, **changes)
    return _caps
