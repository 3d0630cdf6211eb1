"""Slow, independent reference implementations used only by the tests.

Neighbours come straight from the edge set and distances from plain BFS;
nothing here calls the library's grid code.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Set, Tuple

Vertex = Tuple[int, int]


def edge_neighbors(v: Vertex) -> Set[Vertex]:
    """Neighbours straight from the edge set: {u, w} is an edge when
    u = (i, j) and u - w is (+-1, 0) or (0, (-1)^(i+j+1))."""
    i, j = v
    return {(i + 1, j), (i - 1, j), (i, j - (-1) ** (i + j + 1))}


def bfs_ball(v: Vertex, r: int) -> Set[Vertex]:
    seen = {v}
    frontier = [v]
    for _ in range(r):
        nxt = []
        for w in frontier:
            for z in edge_neighbors(w):
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def bfs_dist(u: Vertex, v: Vertex) -> int:
    dist = {u: 0}
    q = deque([u])
    while q:
        w = q.popleft()
        if w == v:
            return dist[w]
        for z in edge_neighbors(w):
            if z not in dist:
                dist[z] = dist[w] + 1
                q.append(z)
    raise AssertionError


def hnf_reduce(a: int, b: int, d: int, v: Vertex) -> Vertex:
    """The translate of v inside the box [0,a) x [0,d): shift by (b, d)
    until 0 <= y < d, then by (a, 0)."""
    x, y = v
    k = y // d
    x -= k * b
    y -= k * d
    x %= a
    return x, y


def window_identifying(code_has, n: int, r: int) -> bool:
    """Materialise the code on Q_n and brute-force every vertex of Q_{n-r}:
    I-sets nonempty and pairwise distinct."""
    inner = [(x, y) for x in range(-(n - r), n - r + 1) for y in range(-(n - r), n - r + 1)]
    groups: Dict[FrozenSet[Vertex], Vertex] = {}
    for u in inner:
        I = frozenset(w for w in bfs_ball(u, r) if code_has(w))
        if not I:
            return False
        if I in groups:
            return False
        groups[I] = u
    return True


def brute_lattices(max_area: int) -> Set[Tuple[int, int, int]]:
    """All even-sum lattices of area <= max_area, found by enumerating small
    integer bases and reducing each to HNF by hand."""
    out = set()
    R = max_area
    vecs = [(x, y) for x in range(-R, R + 1) for y in range(-R, R + 1) if (x + y) % 2 == 0 and (x, y) != (0, 0)]
    for v1 in vecs:
        for v2 in vecs:
            det = v1[0] * v2[1] - v1[1] * v2[0]
            if det == 0 or abs(det) > max_area:
                continue
            out.add(_hnf_by_search(v1, v2, abs(det)))
    return out


def _hnf_by_search(v1: Vertex, v2: Vertex, area: int) -> Tuple[int, int, int]:
    # d = smallest positive y in the lattice; a = area / d; b = x mod a of a
    # lattice vector with y = d
    def in_lattice(p):
        det = v1[0] * v2[1] - v1[1] * v2[0]
        s = p[0] * v2[1] - p[1] * v2[0]
        t = v1[0] * p[1] - v1[1] * p[0]
        return s % det == 0 and t % det == 0
    d = next(y for y in range(1, area + 1) if any(in_lattice((x, y)) for x in range(area)))
    a = area // d
    b = next(x for x in range(a) if in_lattice((x, d)))
    assert in_lattice((a, 0))
    return a, b, d


def min_code_size_unpruned(lat, r: int, verify) -> Optional[int]:
    """Smallest k such that some k-subset of the domain is identifying,
    trying every subset in order of size."""
    dom = lat.domain()
    from hexid.codes import PeriodicCode
    for k in range(1, len(dom) + 1):
        for S in combinations(dom, k):
            if verify(PeriodicCode(lat, frozenset(S)), r):
                return k
    return None
