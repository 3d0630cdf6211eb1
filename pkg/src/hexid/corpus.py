"""Generators for test codes.

``greedy_sparse`` starts from the full code on a lattice and drops
codewords in random order while the code stays identifying, ending at an
inclusion-minimal identifying code.  Such codes are locally tight, which is
where the shifting rules actually fire.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, List, Optional

from .codes import Lattice, PeriodicCode
from .search.constraints import constraint_masks

# Two density-4/19 codes found by the search on area-38 lattices.
OPTIMAL_CODES = (
    (Lattice(38, 15, 1), (0, 3, 7, 13, 20, 26, 30, 33)),
    (Lattice(38, 23, 1), (0, 4, 10, 17, 23, 27, 30, 35)),
)


def optimal_codes() -> List[PeriodicCode]:
    return [PeriodicCode.build(lat, [(x, 0) for x in xs]) for lat, xs in OPTIMAL_CODES]


def greedy_sparse(lat: Lattice, r: int = 2, seed: int = 0,
                  keep: float = 0.0) -> Optional[PeriodicCode]:
    """A random inclusion-minimal ``r``-identifying code with period ``lat``.

    With ``keep > 0`` each removal is skipped with that probability, giving
    denser (non-minimal) codes.  ``None`` if no code on ``lat`` is
    identifying.
    """
    masks = constraint_masks(lat, r)
    if masks is None:
        return None
    n = lat.area
    rng = random.Random(seed)
    hits = [bin(m).count("1") for m in masks]
    by_elem: List[List[int]] = [[] for _ in range(n)]
    for j, m in enumerate(masks):
        i = 0
        while m:
            if m & 1:
                by_elem[i].append(j)
            m >>= 1
            i += 1
    alive = [True] * n
    order = list(range(n))
    rng.shuffle(order)
    for i in order:
        if keep and rng.random() < keep:
            continue
        if all(hits[j] > 1 for j in by_elem[i]):
            alive[i] = False
            for j in by_elem[i]:
                hits[j] -= 1
    dom = lat.domain()
    return PeriodicCode(lat, frozenset(dom[i] for i in range(n) if alive[i]))


def random_lattice(rng: random.Random, min_area: int, max_area: int) -> Lattice:
    while True:
        a = 2 * rng.randint(1, max_area // 2)
        d = rng.randint(1, max(1, max_area // a))
        if not min_area <= a * d <= max_area:
            continue
        b = rng.randrange(d & 1, a, 2) if a > (d & 1) else 0
        return Lattice(a, b, d)


def sparse_corpus(count: int, seed: int = 0, min_area: int = 40,
                  max_area: int = 160, r: int = 2) -> Iterator[PeriodicCode]:
    rng = random.Random(seed)
    made = 0
    while made < count:
        lat = random_lattice(rng, min_area, max_area)
        code = greedy_sparse(lat, r, rng.randrange(1 << 30))
        if code is not None:
            made += 1
            yield code


def density(code: PeriodicCode) -> Fraction:
    return Fraction(len(code), code.area)
