"""Periodic codes on the hexagonal grid.

A periodic code is a translation lattice (spanned by two even-sum vectors, so
every lattice translation is a grid automorphism) together with the
codewords of one fundamental domain.  The domain is the Hermite-normal-form
box ``0 <= x < a, 0 <= y < d`` of the lattice basis ``(a, 0), (b, d)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .grid import Vertex, ball, check_coords, window


class CodeFormatError(ValueError):
    """Malformed code file, or a lattice/code violating its invariants."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, s, t)`` with ``g = gcd(a, b) >= 0`` and ``s*a + t*b = g``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(b1: Vertex, b2: Vertex) -> Tuple[int, int, int]:
    """Return ``(a, b, d)`` with the lattice spanned by ``(a, 0)`` and ``(b, d)``,
    ``a, d > 0`` and ``0 <= b < a``."""
    det = b1[0] * b2[1] - b1[1] * b2[0]
    if det == 0:
        raise CodeFormatError("lattice basis is degenerate (zero determinant)")
    g, s, t = _ext_gcd(b1[1], b2[1])
    d = g
    b = s * b1[0] + t * b2[0]
    a = abs(det) // d
    return a, b % a, d


@dataclass(frozen=True)
class Lattice:
    """A full-rank sublattice of the even-sum translations, stored in HNF."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a <= 0 or self.d <= 0 or not 0 <= self.b < self.a:
            raise CodeFormatError(f"not in Hermite normal form: {self}")
        if self.a % 2 or (self.b + self.d) % 2:
            raise CodeFormatError("lattice vectors must have even coordinate sum")

    @classmethod
    def from_basis(cls, b1: Vertex, b2: Vertex) -> "Lattice":
        check_coords(b1, b2)
        if (b1[0] + b1[1]) % 2 or (b2[0] + b2[1]) % 2:
            raise CodeFormatError("lattice vectors must have even coordinate sum")
        return cls(*hermite_normal_form(b1, b2))

    @property
    def area(self) -> int:
        return self.a * self.d

    @property
    def basis(self) -> Tuple[Vertex, Vertex]:
        return (self.a, 0), (self.b, self.d)

    def reduce(self, v: Vertex) -> Vertex:
        x, y = v
        k, y0 = divmod(y, self.d)
        return ((x - k * self.b) % self.a, y0)

    def contains(self, t: Vertex) -> bool:
        return self.reduce(t) == (0, 0)

    def domain(self) -> List[Vertex]:
        """The fundamental domain, sorted lexicographically."""
        return [(x, y) for x in range(self.a) for y in range(self.d)]

    def index(self, v: Vertex) -> int:
        """Position of ``reduce(v)`` in :meth:`domain`."""
        x, y = self.reduce(v)
        return x * self.d + y


def reduce(v: Vertex, lat: Lattice) -> Vertex:
    return lat.reduce(v)


@dataclass(frozen=True)
class PeriodicCode:
    lattice: Lattice
    codewords: FrozenSet[Vertex] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.codewords:
            raise CodeFormatError("a code must contain at least one codeword")
        for c in self.codewords:
            if self.lattice.reduce(c) != c:
                raise CodeFormatError(f"codeword {c} is not reduced")

    @classmethod
    def build(cls, lattice: Lattice, words: Iterable[Vertex],
              strict: bool = True) -> "PeriodicCode":
        """Reduce ``words`` into the fundamental domain.  With ``strict``,
        two words landing on the same representative is an error."""
        seen = set()
        for w in words:
            check_coords(w)
            rw = lattice.reduce(w)
            if rw in seen and strict:
                raise CodeFormatError(f"duplicate codeword {w} (reduces to {rw})")
            seen.add(rw)
        return cls(lattice, frozenset(seen))

    @classmethod
    def everything(cls, lattice: Optional[Lattice] = None) -> "PeriodicCode":
        """The code containing every vertex."""
        lattice = lattice or Lattice(2, 1, 1)
        return cls(lattice, frozenset(lattice.domain()))

    @classmethod
    def from_finite(cls, words: Iterable[Vertex], r: int = 2,
                    margin: Optional[int] = None) -> "PeriodicCode":
        """Embed a finite set of vertices as a sparse periodic code.

        The period is a square at least ``4r + 3`` wider than the set's
        bounding box, so no radius-``r`` ball around a vertex near the set
        sees a second copy of it.
        """
        words = list(words)
        xs = [w[0] for w in words]
        ys = [w[1] for w in words]
        span = max(max(xs) - min(xs), max(ys) - min(ys))
        side = span + (margin if margin is not None else 4 * r + 3)
        side += side % 2
        lat = Lattice(side, 0, side)
        return cls.build(lat, words)

    @property
    def area(self) -> int:
        return self.lattice.area

    def __len__(self) -> int:
        return len(self.codewords)

    def sorted_codewords(self) -> List[Vertex]:
        return sorted(self.codewords)

    def __contains__(self, v: Vertex) -> bool:
        return self.lattice.reduce(v) in self.codewords

    def is_codeword(self, v: Vertex) -> bool:
        return self.lattice.reduce(v) in self.codewords

    def iset(self, u: Vertex, r: int) -> FrozenSet[Vertex]:
        """Codewords (as actual vertices, not representatives) within ``r`` of ``u``."""
        if r < 1:
            raise ValueError("radius must be positive")
        red = self.lattice.reduce
        cw = self.codewords
        return frozenset(w for w in ball(u, r) if red(w) in cw)

    def with_codeword(self, v: Vertex) -> "PeriodicCode":
        return PeriodicCode(self.lattice, self.codewords | {self.lattice.reduce(v)})

    def relabel(self, auto) -> "PeriodicCode":
        """Image of the code under a grid automorphism ``auto``.

        The image lattice is spanned by the images of the basis translations.
        """
        (a, _), (b, d) = self.lattice.basis
        o = auto((0, 0))
        i1 = auto((a, 0))
        i2 = auto((b, d))
        lat = Lattice.from_basis((i1[0] - o[0], i1[1] - o[1]), (i2[0] - o[0], i2[1] - o[1]))
        return PeriodicCode.build(lat, (auto(c) for c in self.codewords))


def is_codeword(code: PeriodicCode, v: Vertex) -> bool:
    return code.is_codeword(v)


def iset(code: PeriodicCode, u: Vertex, r: int) -> FrozenSet[Vertex]:
    return code.iset(u, r)


def is_r_separated(code: PeriodicCode, u: Vertex, v: Vertex, r: int) -> bool:
    if u == v:
        raise ValueError("separation is defined for distinct vertices")
    return code.iset(u, r) != code.iset(v, r)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    uncovered: Optional[Vertex] = None
    pair: Optional[Tuple[Vertex, Vertex]] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.uncovered is not None:
            return f"uncovered vertex {self.uncovered}"
        u, v = self.pair
        return f"vertices {u} and {v} have the same I-set"


def verify_identifying(code: PeriodicCode, r: int) -> Verdict:
    """Decide whether ``code`` is ``r``-identifying.

    By periodicity it is enough to look at vertices ``u`` of one fundamental
    domain.  A pair ``u, v`` with ``d(u, v) > 2r`` has disjoint balls, so once
    every I-set is nonempty such pairs are separated automatically; only
    partners within ``2r`` need checking.  The first failure in lexicographic
    order is reported.
    """
    if r < 1:
        raise ValueError("radius must be positive")
    cache: Dict[Vertex, FrozenSet[Vertex]] = {}

    def I(v: Vertex) -> FrozenSet[Vertex]:
        s = cache.get(v)
        if s is None:
            s = cache[v] = code.iset(v, r)
        return s

    domain = code.lattice.domain()
    for u in domain:
        if not I(u):
            return Verdict(False, uncovered=u)
    for u in domain:
        iu = I(u)
        for v in ball(u, 2 * r):
            if v != u and I(v) == iu:
                return Verdict(False, pair=(u, v))
    return Verdict(True)


def density(code: PeriodicCode) -> Fraction:
    return Fraction(len(code.codewords), code.area)


def density_profile(code: PeriodicCode, n: int) -> Fraction:
    """``|C ∩ Q_n| / |Q_n|`` exactly."""
    if n < 0:
        raise ValueError("window size must be nonnegative")
    hits = sum(1 for v in window(n) if code.is_codeword(v))
    return Fraction(hits, (2 * n + 1) ** 2)


# -- file format ------------------------------------------------------------

def parse_code(text: str) -> PeriodicCode:
    """Parse the line-oriented code format::

        lattice <b1x> <b1y> <b2x> <b2y>
        codeword <x> <y>
        ...
    """
    lattice = None
    words: List[Tuple[int, Vertex]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise CodeFormatError(f"expected integers, got {' '.join(args)!r}", lineno) from None
        if key == "lattice":
            if lattice is not None:
                raise CodeFormatError("second lattice line", lineno)
            if words:
                raise CodeFormatError("lattice must precede codewords", lineno)
            if len(nums) != 4:
                raise CodeFormatError("lattice needs four integers", lineno)
            try:
                lattice = Lattice.from_basis((nums[0], nums[1]), (nums[2], nums[3]))
            except (CodeFormatError, OverflowError) as exc:
                raise CodeFormatError(str(exc), lineno) from None
        elif key == "codeword":
            if lattice is None:
                raise CodeFormatError("codeword before lattice", lineno)
            if len(nums) != 2:
                raise CodeFormatError("codeword needs two integers", lineno)
            words.append((lineno, (nums[0], nums[1])))
        else:
            raise CodeFormatError(f"unknown directive {key!r}", lineno)
    if lattice is None:
        raise CodeFormatError("missing lattice line")
    if not words:
        raise CodeFormatError("empty codeword list")
    seen: Dict[Vertex, int] = {}
    for lineno, w in words:
        try:
            check_coords(w)
        except OverflowError as exc:
            raise CodeFormatError(str(exc), lineno) from None
        rw = lattice.reduce(w)
        if rw in seen:
            raise CodeFormatError(
                f"codeword {w} duplicates line {seen[rw]} after reduction", lineno)
        seen[rw] = lineno
    return PeriodicCode(lattice, frozenset(seen))


def format_code(code: PeriodicCode, comment: Optional[str] = None) -> str:
    (a, _), (b, d) = code.lattice.basis
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"lattice {a} 0 {b} {d}")
    lines.extend(f"codeword {x} {y}" for x, y in code.sorted_codewords())
    return "\n".join(lines) + "\n"


def load_code(path) -> PeriodicCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def parse_dset(text: str) -> List[Vertex]:
    """A finite vertex set: one ``codeword <x> <y>`` (or bare ``<x> <y>``) per line."""
    out: List[Vertex] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "codeword":
            parts = parts[1:]
        if len(parts) != 2:
            raise CodeFormatError("expected two integers", lineno)
        try:
            v = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise CodeFormatError(f"expected integers, got {line!r}", lineno) from None
        if v in out:
            raise CodeFormatError(f"duplicate vertex {v}", lineno)
        out.append(v)
    if not out:
        raise CodeFormatError("empty vertex set")
    return out
