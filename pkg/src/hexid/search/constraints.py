"""Identifying codes on a torus as a hitting-set problem.

Every condition of the identifying property says that some set of domain
vertices contains a codeword: ``B_r(u)`` for coverage, ``B_r(u) Δ B_r(v)``
(reduced into the domain) for separating ``u`` from ``v``.  Sets are bit
masks over :meth:`Lattice.domain` indices.
"""

from __future__ import annotations

from typing import List, Optional

from ..codes import Lattice
from ..grid import ball


def constraint_masks(lat: Lattice, r: int) -> Optional[List[int]]:
    """Minimal family of masks a code must hit, sorted by (popcount, value).

    Returns ``None`` when some condition can never be met (two vertices
    with identical balls), i.e. no code on this lattice is identifying.
    Masks that contain another mask are dropped.
    """
    idx = lat.index
    masks = set()
    for u in lat.domain():
        bu = set(ball(u, r))
        masks.add(sum(1 << i for i in {idx(w) for w in bu}))
        for v in ball(u, 2 * r):
            if v == u:
                continue
            diff = bu.symmetric_difference(ball(v, r))
            m = 0
            for w in diff:
                m |= 1 << idx(w)
            if m == 0:
                return None
            masks.add(m)
    ordered = sorted(masks, key=lambda m: (bin(m).count("1"), m))
    kept: List[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept
