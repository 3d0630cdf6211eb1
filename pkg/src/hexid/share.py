"""Shares of codewords and the class-counting upper bound on them.

The share of a codeword ``c`` spreads each vertex of ``B_r(c)`` evenly over
the codewords covering it: ``s_r(c) = sum_{u in B_r(c)} 1 / |I_r(u)|``.
Summed over all codewords of one period it gives the number of vertices in
the period.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .codes import PeriodicCode
from .grid import Vertex, ball


class UncoveredError(ValueError):
    """A vertex of the ball has an empty I-set, so the share is undefined."""

    def __init__(self, vertex: Vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not covered by any codeword")


def share(code: PeriodicCode, c: Vertex, r: int = 2) -> Fraction:
    if not code.is_codeword(c):
        raise ValueError(f"{c} is not a codeword")
    total = Fraction(0)
    for u in ball(c, r):
        k = len(code.iset(u, r))
        if k == 0:
            raise UncoveredError(u)
        total += Fraction(1, k)
    return total


def iset_classes(D: Iterable[Vertex], c: Vertex, r: int) -> Counter:
    """Group ``B_r(c)`` by the I-set each vertex has with respect to ``D``.

    Returns a counter mapping each distinct I-set to the number of ball
    vertices that have it.
    """
    dset = frozenset(D)
    classes: Counter = Counter()
    for u in ball(c, r):
        classes[frozenset(w for w in ball(u, r) if w in dset)] += 1
    return classes


def share_upper_bound(D: Iterable[Vertex], c: Vertex, r: int = 2) -> Fraction:
    """Upper bound on ``s_r(C; c)`` valid for every ``r``-identifying code
    ``C`` containing the finite set ``D``.

    Ball vertices sharing an I-set w.r.t. ``D`` can keep that I-set in ``C``
    for at most one of them; the rest pick up another codeword.  So a class
    of ``i`` vertices with I-set size ``k`` contributes ``1/k + (i-1)/(k+1)``.
    Every class contains ``c`` itself, so ``k >= 1``.
    """
    dset = frozenset(D)
    if c not in dset:
        raise ValueError(f"{c} is not in D")
    total = Fraction(0)
    for I, i in iset_classes(dset, c, r).items():
        k = len(I)
        total += Fraction(1, k) + Fraction(i - 1, k + 1)
    return total


@dataclass(frozen=True)
class ShareReport:
    shares: Tuple[Tuple[Vertex, Fraction], ...]
    area: int

    @property
    def max_share(self) -> Fraction:
        return max(s for _, s in self.shares)

    @property
    def total(self) -> Fraction:
        return sum((s for _, s in self.shares), Fraction(0))

    @property
    def average(self) -> Fraction:
        return self.total / len(self.shares)

    def as_dict(self) -> Dict[Vertex, Fraction]:
        return dict(self.shares)


def share_report(code: PeriodicCode, r: int = 2) -> ShareReport:
    """Shares of every codeword of one period, in lexicographic order."""
    isets: Dict[Vertex, int] = {}

    def size(u: Vertex) -> int:
        key = code.lattice.reduce(u)
        k = isets.get(key)
        if k is None:
            k = isets[key] = len(code.iset(u, r))
            if k == 0:
                raise UncoveredError(u)
        return k

    rows: List[Tuple[Vertex, Fraction]] = []
    for c in code.sorted_codewords():
        rows.append((c, sum((Fraction(1, size(u)) for u in ball(c, r)), Fraction(0))))
    return ShareReport(tuple(rows), code.area)
