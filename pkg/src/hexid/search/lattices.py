"""Enumeration of translation lattices by area."""

from __future__ import annotations

from typing import List

from ..codes import Lattice


def enumerate_lattices(max_area: int) -> List[Lattice]:
    """All even-sum sublattices of area at most ``max_area``, one HNF
    representative each, ordered by (area, a, b)."""
    if max_area < 1:
        raise ValueError("max_area must be at least 1")
    out = []
    for a in range(2, max_area + 1, 2):
        for d in range(1, max_area // a + 1):
            for b in range((d & 1), a, 2):
                out.append(Lattice(a, b, d))
    out.sort(key=lambda L: (L.area, L.a, L.b))
    return out
