"""Command-line front end.

Exit status: 0 success, 1 property violated (a witness is printed),
2 input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence

from . import selftest as _selftest
from .codes import CodeFormatError, load_code, parse_dset, verify_identifying
from .discharge import (BOUND, DENSITY_BOUND, NotIdentifyingError, RuleFormatError,
                        STANDARD_RULES, apply_scheme, certify, load_rules_file,
                        audit_instances)
from .grid import Vertex
from .search import SearchConfig, frontier_report, search_min_density, write_witnesses
from .share import UncoveredError, share, share_upper_bound

OK, VIOLATION, INPUT_ERROR, EXHAUSTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _vertex(text: str) -> Vertex:
    try:
        x, y = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}")
    return x, y


def _windows(text: str) -> List[int]:
    try:
        ns = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n1,n2,..., got {text!r}")
    if not ns or min(ns) < 2:
        raise argparse.ArgumentTypeError("window sizes must be at least 2")
    return ns


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _load_code(path: str):
    try:
        return load_code(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    except CodeFormatError as e:
        raise InputError(f"{path}: {e}")


def _load_rules(path: Optional[str]):
    path = path or str(STANDARD_RULES)
    try:
        return load_rules_file(path, standard=path == str(STANDARD_RULES))
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    except RuleFormatError as e:
        raise InputError(f"{path}: {e}")


def _row(fmt: str, *cells) -> str:
    return ("\t" if fmt == "tsv" else "  ").join(str(c) for c in cells)


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    verdict = verify_identifying(code, args.r)
    print(f"r={args.r} {verdict.describe()}")
    return OK if verdict else VIOLATION


def cmd_share(args) -> int:
    code = _load_code(args.code)
    if not code.is_codeword(args.at):
        raise InputError(f"{args.at} is not a codeword")
    try:
        print(share(code, args.at, args.r))
    except UncoveredError as e:
        print(f"share undefined: {e}")
        return VIOLATION
    return OK


def cmd_bound(args) -> int:
    try:
        with open(args.dset, encoding="utf-8") as fh:
            dset = parse_dset(fh.read())
    except OSError as e:
        raise InputError(f"cannot read {args.dset}: {e.strerror}")
    except CodeFormatError as e:
        raise InputError(f"{args.dset}: {e}")
    if args.at not in dset:
        raise InputError(f"{args.at} is not in the set")
    print(share_upper_bound(dset, args.at, args.r))
    return OK


def _require_identifying(code, r: int) -> Optional[int]:
    verdict = verify_identifying(code, r)
    if not verdict:
        print(f"code is not {r}-identifying: {verdict.describe()}")
        return VIOLATION
    return None


def cmd_discharge(args) -> int:
    code = _load_code(args.code)
    rs = _load_rules(args.rules)
    bad = _require_identifying(code, 2)
    if bad is not None:
        return bad
    rep = apply_scheme(code, rs)
    fmt = args.format
    print(_row(fmt, "x", "y", "s2", "ms2"))
    for c in sorted(rep.shares):
        print(_row(fmt, c[0], c[1], rep.shares[c], rep.modified[c]))
    counts = rep.counts()
    print(f"instances: {len(rep.instances)}"
          + "".join(f" {k}:{counts[k]}" for k in sorted(counts, key=_rule_key)))
    print(f"sum s2 = {rep.share_total}, sum ms2 = {rep.modified_total}, "
          f"conserved: {'yes' if rep.conserved else 'NO'}")
    print(f"max s2 = {rep.max_share}, max ms2 = {rep.max_modified} (bound {BOUND})")
    problems = audit_instances(code, rs, rep.instances)
    for p in problems:
        print(f"audit: {p}")
    if rep.max_modified > BOUND:
        w = rep.worst()
        print(f"violation: ms2{w} = {rep.modified[w]} > {BOUND}")
    ok = rep.conserved and rep.max_modified <= BOUND and not problems
    return OK if ok else VIOLATION


def _rule_key(rid: str):
    return tuple(int(p) for p in rid.split("."))


def cmd_certify(args) -> int:
    code = _load_code(args.code)
    rs = _load_rules(args.rules)
    try:
        rep = certify(code, rs, args.windows)
    except NotIdentifyingError as e:
        print(e)
        return VIOLATION
    yn = lambda b: "yes" if b else "NO"  # noqa: E731
    print(f"density = {rep.density} (>= {DENSITY_BOUND}: {yn(rep.density_ok)})")
    print(f"max s2 = {rep.max_share}")
    print(f"max ms2 = {rep.max_modified} (<= {BOUND}: {yn(rep.bound_ok)})")
    print(f"conservation: {yn(rep.conserved)}; instances: {rep.instances}")
    for p in rep.audit:
        print(f"audit: {p}")
    fmt = args.format
    print(_row(fmt, "n", "sum_s2", "lower", "eq1", "sum_ms2", "eq2"))
    for w in rep.windows:
        print(_row(fmt, w.n, w.share_sum, w.lower, yn(w.eq1), w.modified_sum, yn(w.eq2)))
    return OK if rep.ok else VIOLATION


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(r=args.r, max_area=args.max_area, budget=args.budget,
                           threads=args.threads or os.cpu_count() or 1,
                           min_area=args.min_area)
    except ValueError as e:
        raise InputError(str(e))
    frontier = search_min_density(cfg)
    paths = write_witnesses(frontier, args.out)
    table = frontier_report(frontier, paths, args.format)
    summary = frontier_report(frontier, paths, "tsv")
    with open(os.path.join(args.out, "frontier.tsv"), "w", encoding="utf-8") as fh:
        fh.write(summary)
    sys.stdout.write(table)
    best = frontier.best_density()
    if best is not None:
        print(f"best density: {best}")
    if args.r == 2 and best is not None and best < DENSITY_BOUND:
        print(f"violation: density {best} < {DENSITY_BOUND}")
        return VIOLATION
    if not frontier.exhausted:
        print("budget exhausted on at least one lattice")
        return EXHAUSTED
    return OK


def cmd_selftest(args) -> int:
    return OK if _selftest.run(sys.stdout) else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hexid", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, code=True):
        sp.add_argument("--r", type=_positive, default=2, help="radius (default 2)")
        if code:
            sp.add_argument("--code", required=True, help="code file")

    sp = sub.add_parser("verify", help="check the identifying property")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("share", help="share of one codeword")
    common(sp)
    sp.add_argument("--at", type=_vertex, required=True, metavar="X,Y")
    sp.set_defaults(func=cmd_share)

    sp = sub.add_parser("bound", help="upper bound on the share from a finite set")
    common(sp, code=False)
    sp.add_argument("--dset", required=True, help="file listing the finite set")
    sp.add_argument("--at", type=_vertex, required=True, metavar="X,Y")
    sp.set_defaults(func=cmd_bound)

    for name, func, hlp in (("discharge", cmd_discharge, "modified shares after shifting"),
                            ("certify", cmd_certify, "density, shares and window checks")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--code", required=True)
        sp.add_argument("--rules", help="rules file (default: the bundled one)")
        sp.add_argument("--format", choices=("text", "tsv"), default="text")
        if name == "certify":
            sp.add_argument("--windows", type=_windows, default=[5, 10, 15],
                            metavar="N1,N2,...")
        sp.set_defaults(func=func)

    sp = sub.add_parser("search", help="minimum codes over all lattices up to an area")
    common(sp, code=False)
    sp.add_argument("--max-area", type=_positive, required=True)
    sp.add_argument("--min-area", type=_positive, default=1)
    sp.add_argument("--budget", type=_positive, default=10_000_000,
                    help="node budget per lattice")
    sp.add_argument("--out", default="results", help="directory for witnesses")
    sp.add_argument("--threads", type=_positive, default=None,
                    help="worker processes (default: all cores)")
    sp.add_argument("--format", choices=("text", "tsv"), default="text")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("selftest", help="check the reference values")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
