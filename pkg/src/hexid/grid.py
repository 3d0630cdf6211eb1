"""The hexagonal grid in brick-wall coordinates.

Vertices are integer pairs ``(x, y)``.  Every vertex has the two horizontal
neighbours ``(x +- 1, y)`` and one vertical neighbour whose direction is set
by the parity of ``x + y``: up for even vertices, down for odd ones.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple

Vertex = Tuple[int, int]

# Coordinates stay far below this; asserted at the API boundary.
COORD_LIMIT = 1 << 62


def parity(v: Vertex) -> int:
    return (v[0] + v[1]) & 1


def vertical_step(v: Vertex) -> int:
    """+1 if the vertical edge at ``v`` points up, -1 if it points down."""
    return 1 if parity(v) == 0 else -1


def neighbors(v: Vertex) -> Tuple[Vertex, Vertex, Vertex]:
    """The three neighbours of ``v``: right, left, vertical."""
    x, y = v
    return ((x + 1, y), (x - 1, y), (x, y + vertical_step(v)))


def is_adjacent(u: Vertex, v: Vertex) -> bool:
    return v in neighbors(u)


def bfs_distances(source: Vertex, radius: int) -> Dict[Vertex, int]:
    """Plain breadth-first search; the reference definition of distance."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d == radius:
            continue
        for w in neighbors(v):
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def bfs_distance(u: Vertex, v: Vertex) -> int:
    dist = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            return dist[w]
        for z in neighbors(w):
            if z not in dist:
                dist[z] = dist[w] + 1
                queue.append(z)
    raise AssertionError("unreachable: the grid is connected")


def distance(u: Vertex, v: Vertex) -> int:
    """Graph distance between ``u`` and ``v``.

    Closed form, checked against :func:`bfs_distance` in the tests.  A path
    making ``k`` vertical moves in one direction needs a horizontal move
    between consecutive vertical ones (to flip parity), plus one more at the
    start when ``u``'s vertical edge points the wrong way.  The horizontal
    count must also have the parity of the horizontal displacement.
    """
    dx = abs(v[0] - u[0])
    dy = v[1] - u[1]
    if dy == 0:
        return dx
    ady = abs(dy)
    need = ady - 1 if (dy > 0) == (parity(u) == 0) else ady
    h = max(dx, need)
    if (h - dx) & 1:
        h += 1
    return ady + h


@lru_cache(maxsize=None)
def _ball_offsets(par: int, r: int) -> Tuple[Vertex, ...]:
    origin = (par, 0)
    ball = bfs_distances(origin, r)
    return tuple(sorted((x - par, y) for (x, y) in ball))


def ball_offsets(par: int, r: int) -> Tuple[Vertex, ...]:
    """Offsets ``w - v`` of the radius-``r`` ball around a vertex of parity ``par``."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return _ball_offsets(par, r)


def ball(v: Vertex, r: int) -> List[Vertex]:
    """Vertices within distance ``r`` of ``v``, sorted."""
    x, y = v
    return [(x + dx, y + dy) for dx, dy in ball_offsets(parity(v), r)]


def sphere(v: Vertex, r: int) -> List[Vertex]:
    return [w for w in ball(v, r) if distance(v, w) == r]


def check_coords(*vs: Vertex) -> None:
    for x, y in vs:
        if not (-COORD_LIMIT < x < COORD_LIMIT and -COORD_LIMIT < y < COORD_LIMIT):
            raise OverflowError(f"coordinate out of range: {(x, y)}")


def translate(v: Vertex, t: Vertex) -> Vertex:
    return (v[0] + t[0], v[1] + t[1])


class Automorphism:
    """A graph automorphism given by where it sends one anchor vertex and
    its three neighbours.

    The honeycomb is two interleaved copies of the even-sum lattice: a vertex
    ``p`` with the anchor's parity is joined to ``p + e_i`` (or ``p - e_i``),
    where ``e_i`` are the anchor's neighbour offsets.  Fixing the images
    ``f_i`` of the ``e_i`` fixes a linear map ``L`` on the even-sum lattice
    with ``L(e_i - e_j) = f_i - f_j``; every other image follows from it.
    """

    __slots__ = ("anchor", "anchor_image", "neighbor_images", "_e1", "_f1",
                 "_basis", "_images", "_det")

    def __init__(self, anchor: Vertex, anchor_image: Vertex,
                 neighbor_images: Iterable[Vertex]):
        imgs = tuple(neighbor_images)
        if len(imgs) != 3 or sorted(imgs) != sorted(neighbors(anchor_image)):
            raise ValueError("neighbour images must be a bijection onto the "
                             "anchor image's neighbours")
        self.anchor = anchor
        self.anchor_image = anchor_image
        self.neighbor_images = imgs
        ax, ay = anchor
        bx, by = anchor_image
        e = [(w[0] - ax, w[1] - ay) for w in neighbors(anchor)]
        f = [(w[0] - bx, w[1] - by) for w in imgs]
        self._e1 = e[0]
        self._f1 = f[0]
        # basis of the even-sum lattice and its images
        b1 = (e[0][0] - e[2][0], e[0][1] - e[2][1])
        b2 = (e[1][0] - e[2][0], e[1][1] - e[2][1])
        self._basis = (b1, b2)
        self._det = b1[0] * b2[1] - b1[1] * b2[0]
        self._images = ((f[0][0] - f[2][0], f[0][1] - f[2][1]),
                        (f[1][0] - f[2][0], f[1][1] - f[2][1]))

    def _linear(self, dx: int, dy: int) -> Vertex:
        (b1x, b1y), (b2x, b2y) = self._basis
        det = self._det
        an = dx * b2y - dy * b2x
        bn = b1x * dy - b1y * dx
        assert an % det == 0 and bn % det == 0, "offset outside the even-sum lattice"
        a, b = an // det, bn // det
        (g1x, g1y), (g2x, g2y) = self._images
        return (a * g1x + b * g2x, a * g1y + b * g2y)

    def __call__(self, v: Vertex) -> Vertex:
        dx = v[0] - self.anchor[0]
        dy = v[1] - self.anchor[1]
        bx, by = self.anchor_image
        if (dx + dy) & 1 == 0:
            lx, ly = self._linear(dx, dy)
            return (bx + lx, by + ly)
        lx, ly = self._linear(dx - self._e1[0], dy - self._e1[1])
        return (bx + self._f1[0] + lx, by + self._f1[1] + ly)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self o other``."""
        a = other.anchor
        return Automorphism(a, self(other(a)), [self(other(w)) for w in neighbors(a)])

    def inverse(self) -> "Automorphism":
        a = self.anchor_image
        pre = {self(w): w for w in neighbors(self.anchor)}
        return Automorphism(a, self.anchor, [pre[w] for w in neighbors(a)])

    def agrees_with(self, other: "Automorphism", vertices: Iterable[Vertex]) -> bool:
        return all(self(v) == other(v) for v in vertices)

    def __repr__(self) -> str:
        return (f"Automorphism({self.anchor} -> {self.anchor_image}, "
                f"{neighbors(self.anchor)} -> {self.neighbor_images})")


def extend_automorphism(a: Automorphism, v: Vertex) -> Vertex:
    return a(v)


def identity(anchor: Vertex = (0, 0)) -> Automorphism:
    return Automorphism(anchor, anchor, neighbors(anchor))


def vertex_stabilizer(v: Vertex) -> List[Automorphism]:
    """The six automorphisms fixing ``v``; the identity comes first."""
    nb = neighbors(v)
    return [Automorphism(v, v, perm) for perm in permutations(nb)]


def automorphisms_onto(source: Vertex, target: Vertex) -> List[Automorphism]:
    """The six automorphisms sending ``source`` to ``target``."""
    return [Automorphism(source, target, perm)
            for perm in permutations(neighbors(target))]


class OffsetMap(NamedTuple):
    """An automorphism fixing the origin (or sending it to ``(1, 0)``),
    tabulated on a finite set of offsets.

    Placing a pattern at vertex ``s`` is then: look up each offset, add the
    even-sum translation that moves ``base`` onto ``s``.
    """

    base: Vertex
    table: Dict[Vertex, Vertex]

    def place(self, s: Vertex, offset: Vertex) -> Vertex:
        ix, iy = self.table[offset]
        return (ix + s[0] - self.base[0], iy + s[1] - self.base[1])


@lru_cache(maxsize=None)
def offset_maps(parity_of_target: int, radius: int) -> Tuple[OffsetMap, ...]:
    """The six automorphisms sending the origin to a vertex of the given
    parity, tabulated on the radius-``radius`` ball around the origin."""
    base = (parity_of_target, 0)
    pts = ball((0, 0), radius)
    out = []
    for a in automorphisms_onto((0, 0), base):
        out.append(OffsetMap(base, {p: a(p) for p in pts}))
    return tuple(out)


def window(n: int) -> Iterator[Vertex]:
    """The square ``Q_n``: all ``(x, y)`` with ``|x|, |y| <= n``."""
    for y in range(-n, n + 1):
        for x in range(-n, n + 1):
            yield (x, y)
