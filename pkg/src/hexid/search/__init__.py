"""Exhaustive search for sparse periodic identifying codes.

Each lattice is an independent work unit: its identifying codes are the
hitting sets of :func:`constraint_masks`, and a branch and bound finds a
smallest one.  The kernel is compiled when the extension is built and pure
Python otherwise; both explore the same tree.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Dict, Iterable, List, Optional, Tuple

from ..codes import Lattice, PeriodicCode, format_code, verify_identifying
from . import _pykernel
from .constraints import constraint_masks
from .lattices import enumerate_lattices

try:
    from . import _kernel as _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"

__all__ = [
    "BACKEND", "SearchConfig", "LatticeResult", "SearchFrontier",
    "constraint_masks", "enumerate_lattices", "frontier_report",
    "min_code_on_lattice", "search_min_density", "solve",
]


def solve(masks: List[int], n: int, upper: int, budget: int,
          backend: Optional[str] = None):
    """Dispatch to a kernel.  ``backend`` is ``"cython"``, ``"python"`` or
    ``None`` for the best available."""
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if n <= _ckernel.MAX_N:
            return _ckernel.solve(masks, n, upper, budget)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _pykernel.solve(masks, n, upper, budget)


@dataclass(frozen=True)
class SearchConfig:
    r: int = 2
    max_area: int = 12
    budget: int = 10_000_000
    target: Optional[Fraction] = None
    threads: int = 1
    min_area: int = 1
    backend: Optional[str] = None

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.max_area < 2:
            raise ValueError("max_area must be at least 2")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")


@dataclass(frozen=True)
class LatticeResult:
    lattice: Lattice
    best: Optional[PeriodicCode]
    nodes: int
    exhausted: bool

    @property
    def k(self) -> Optional[int]:
        return len(self.best) if self.best is not None else None


def min_code_on_lattice(lat: Lattice, r: int, budget: int,
                        upper: Optional[int] = None,
                        backend: Optional[str] = None) -> LatticeResult:
    """Smallest identifying code with period ``lat`` and fewer than
    ``upper`` codewords (default: any size)."""
    n = lat.area
    if upper is None:
        upper = n + 1
    masks = constraint_masks(lat, r)
    if masks is None:
        return LatticeResult(lat, None, 0, True)
    sol, nodes, done = solve(masks, n, upper, budget, backend)
    code = None
    if sol is not None:
        dom = lat.domain()
        code = PeriodicCode(lat, frozenset(dom[i] for i in range(n) if sol >> i & 1))
    return LatticeResult(lat, code, nodes, done)


def _upper_for(lat: Lattice, target: Optional[Fraction]) -> Optional[int]:
    """Codeword counts at or above this are not wanted."""
    if target is None:
        return None
    return min(lat.area + 1, ceil(target * lat.area))


def _work(args) -> LatticeResult:
    lat, cfg = args
    return min_code_on_lattice(lat, cfg.r, cfg.budget,
                               _upper_for(lat, cfg.target), cfg.backend)


@dataclass
class SearchFrontier:
    """Per-area optimum over all lattices of that area."""

    r: int
    rows: Dict[int, Tuple[Optional[int], Optional[PeriodicCode], bool]] = field(default_factory=dict)
    results: List[LatticeResult] = field(default_factory=list)

    def add(self, res: LatticeResult) -> None:
        self.results.append(res)
        area = res.lattice.area
        k, wit, ex = self.rows.get(area, (None, None, True))
        if res.best is not None and (k is None or len(res.best) < k):
            k, wit = len(res.best), res.best
        self.rows[area] = (k, wit, ex and res.exhausted)

    @property
    def exhausted(self) -> bool:
        return all(ex for _, _, ex in self.rows.values())

    def best_density(self) -> Optional[Fraction]:
        ds = [Fraction(k, a) for a, (k, _, _) in self.rows.items() if k is not None]
        return min(ds) if ds else None


def search_min_density(cfg: SearchConfig,
                       lattices: Optional[Iterable[Lattice]] = None) -> SearchFrontier:
    """Run the per-lattice search over every lattice with area in
    ``[min_area, max_area]`` (or the given lattices).  Deterministic: each
    lattice is searched independently, and results are merged in lattice
    order whatever the thread count."""
    if lattices is None:
        lattices = [L for L in enumerate_lattices(cfg.max_area) if L.area >= cfg.min_area]
    lattices = list(lattices)
    jobs = [(L, cfg) for L in lattices]
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as ex:
            results = list(ex.map(_work, jobs))
    else:
        results = [_work(j) for j in jobs]
    frontier = SearchFrontier(cfg.r)
    for res in results:
        if res.best is not None:
            assert verify_identifying(res.best, cfg.r), "search produced a non-identifying code"
        frontier.add(res)
    return frontier


def witness_name(code: PeriodicCode) -> str:
    L = code.lattice
    return f"area{L.area}_a{L.a}_b{L.b}_d{L.d}_k{len(code)}.code"


def write_witnesses(frontier: SearchFrontier, out_dir: str) -> Dict[int, str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = {}
    for area, (_, wit, _) in sorted(frontier.rows.items()):
        if wit is None:
            continue
        path = os.path.join(out_dir, witness_name(wit))
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_code(wit, comment=f"r={frontier.r} density {len(wit)}/{area}"))
        paths[area] = path
    return paths


def frontier_report(frontier: SearchFrontier, paths: Optional[Dict[int, str]] = None,
                    fmt: str = "text") -> str:
    """Table with one row per area: min k, density, exhausted flag, witness."""
    paths = paths or {}
    header = ("area", "min_k", "density", "exhausted", "witness")
    rows = []
    for area, (k, wit, ex) in sorted(frontier.rows.items()):
        dens = str(Fraction(k, area)) if k is not None else "-"
        rows.append((str(area), str(k) if k is not None else "-", dens,
                     "yes" if ex else "no", paths.get(area, "-")))
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in [header] + rows) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in [header] + rows]
    return "\n".join(lines) + "\n"
