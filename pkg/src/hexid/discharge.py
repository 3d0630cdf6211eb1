"""Data-driven shifting (discharging) of share between codewords.

A rule is a constellation around a source codeword ``u`` drawn at the
origin: offsets that must be codewords, offsets that must not be, groups of
offsets of which at least one must be a codeword, and transfers of share
from ``u`` to codewords of the constellation.  A rule may list overrides:
modifications that replace its transfers when an extra offset is a
codeword.  Overrides are tried in the order written; the first whose
trigger holds wins.

Rules are placed at every codeword under each of the six automorphisms
taking the origin onto it, so translations, rotations and reflections are
all covered.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .codes import Lattice, PeriodicCode, verify_identifying
from .grid import Vertex, automorphisms_onto, distance, offset_maps, parity, window
from .share import share_report

ALLOWED_AMOUNTS = frozenset({Fraction(1, 4), Fraction(1, 6), Fraction(1, 12)})
STANDARD_IDS = frozenset({"1", "1.1", "1.2", "2", "2.1", "2.2", "2.3", "3", "4",
                          "5", "6", "7", "7.1", "8", "9", "10"})
BOUND = Fraction(19, 4)
DENSITY_BOUND = Fraction(4, 19)
ORIGIN = (0, 0)

STANDARD_RULES = Path(__file__).resolve().parent / "rules" / "paper-fig7.rules"


class RuleFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Override:
    rule_id: str
    trigger: Vertex


@dataclass
class Rule:
    id: str
    codewords: List[Vertex] = field(default_factory=list)
    noncodewords: List[Vertex] = field(default_factory=list)
    anyof: List[List[Vertex]] = field(default_factory=list)
    transfers: List[Tuple[Vertex, Fraction]] = field(default_factory=list)
    overrides: List[Override] = field(default_factory=list)
    line: int = 0

    @property
    def base_id(self) -> Optional[str]:
        """Id of the rule this one modifies, or ``None`` for a base rule."""
        return self.id.rsplit(".", 1)[0] if "." in self.id else None

    def offsets(self) -> List[Vertex]:
        out = list(self.codewords) + list(self.noncodewords)
        for grp in self.anyof:
            out.extend(grp)
        out.extend(t for t, _ in self.transfers)
        out.extend(o.trigger for o in self.overrides)
        return out


@dataclass
class RuleSet:
    rules: List[Rule]

    def __post_init__(self):
        self.by_id: Dict[str, Rule] = {r.id: r for r in self.rules}

    @property
    def ids(self) -> List[str]:
        return [r.id for r in self.rules]

    def base_rules(self) -> List[Rule]:
        return [r for r in self.rules if r.base_id is None]

    def radius(self) -> int:
        return max((distance(ORIGIN, o) for r in self.rules for o in r.offsets()), default=0)


# -- parsing -----------------------------------------------------------------

_INT = r"(-?\d+)"
_PAIR = re.compile(rf"^{_INT}\s+{_INT}$")


def _pair(text: str, lineno: int) -> Vertex:
    m = _PAIR.match(text.strip())
    if not m:
        raise RuleFormatError(f"expected two integers, got {text.strip()!r}", lineno)
    return int(m.group(1)), int(m.group(2))


def _amount(text: str, lineno: int) -> Fraction:
    m = re.match(r"^(\d+)/(\d+)$", text)
    if not m or int(m.group(2)) == 0:
        raise RuleFormatError(f"bad amount {text!r}; expected p/q", lineno)
    amt = Fraction(int(m.group(1)), int(m.group(2)))
    if amt not in ALLOWED_AMOUNTS:
        raise RuleFormatError(f"transfer amount {amt} is not one of 1/4, 1/6, 1/12", lineno)
    return amt


def load_rules(text: str, standard: bool = False) -> RuleSet:
    """Parse a rules file.  With ``standard`` the set of ids must be exactly
    the ten rules and their six modifications."""
    rules: List[Rule] = []
    cur: Optional[Rule] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "rule":
            if cur is not None:
                raise RuleFormatError(f"rule {cur.id} is missing 'end'", lineno)
            if not re.match(r"^\d+(\.\d+)?$", rest):
                raise RuleFormatError(f"bad rule id {rest!r}", lineno)
            if any(r.id == rest for r in rules):
                raise RuleFormatError(f"duplicate rule {rest}", lineno)
            cur = Rule(rest, line=lineno)
            continue
        if cur is None:
            raise RuleFormatError(f"{word!r} outside a rule block", lineno)
        if word == "end":
            if rest:
                raise RuleFormatError("unexpected text after 'end'", lineno)
            rules.append(cur)
            cur = None
        elif word == "codeword":
            cur.codewords.append(_pair(rest, lineno))
        elif word == "noncodeword":
            cur.noncodewords.append(_pair(rest, lineno))
        elif word == "anyof":
            grp = [_pair(p, lineno) for p in rest.split(";")]
            if len(grp) < 2:
                raise RuleFormatError("anyof needs at least two offsets", lineno)
            cur.anyof.append(grp)
        elif word == "transfer":
            parts = rest.split()
            if len(parts) != 3:
                raise RuleFormatError("expected 'transfer dx dy p/q'", lineno)
            cur.transfers.append((_pair(" ".join(parts[:2]), lineno), _amount(parts[2], lineno)))
        elif word == "override":
            m = re.match(rf"^(\d+(?:\.\d+)?)\s+when\s+codeword\s+{_INT}\s+{_INT}$", rest)
            if not m:
                raise RuleFormatError("expected 'override <id> when codeword dx dy'", lineno)
            cur.overrides.append(Override(m.group(1), (int(m.group(2)), int(m.group(3)))))
        else:
            raise RuleFormatError(f"unknown directive {word!r}", lineno)
    if cur is not None:
        raise RuleFormatError(f"rule {cur.id} is missing 'end'", None)
    if not rules:
        raise RuleFormatError("no rules")
    rs = RuleSet(rules)
    _validate(rs)
    if standard and set(rs.ids) != STANDARD_IDS:
        missing = sorted(STANDARD_IDS - set(rs.ids))
        extra = sorted(set(rs.ids) - STANDARD_IDS)
        raise RuleFormatError(f"rule ids differ from the standard set "
                              f"(missing {missing}, unexpected {extra})")
    return rs


def _validate(rs: RuleSet) -> None:
    referenced: Dict[str, Rule] = {}
    for r in rs.rules:
        err = lambda msg: RuleFormatError(f"rule {r.id}: {msg}", r.line)  # noqa: E731
        if not r.transfers:
            raise err("no transfers")
        if r.base_id is not None:
            if r.codewords or r.noncodewords or r.anyof or r.overrides:
                raise err("a modification may only list transfers")
            continue
        cw, ncw = set(r.codewords), set(r.noncodewords)
        if ORIGIN not in cw:
            raise err("the source (0, 0) must be a codeword")
        if cw & ncw:
            raise err(f"offsets both required and forbidden: {sorted(cw & ncw)}")
        for grp in r.anyof:
            if set(grp) & (cw | ncw):
                raise err("anyof offsets must not be otherwise constrained")
        for t, _ in r.transfers:
            if t not in cw or t == ORIGIN:
                raise err(f"transfer target {t} is not a required codeword")
        for o in r.overrides:
            if o.trigger in cw or o.trigger in ncw:
                raise err(f"override trigger {o.trigger} is already constrained")
            if o.rule_id.rsplit(".", 1)[0] != r.id or "." not in o.rule_id:
                raise err(f"override {o.rule_id} is not a modification of rule {r.id}")
            if o.rule_id in referenced:
                raise err(f"override {o.rule_id} listed twice")
            referenced[o.rule_id] = r
    for r in rs.rules:
        if r.base_id is None:
            continue
        base = referenced.get(r.id)
        if base is None:
            raise RuleFormatError(f"rule {r.id}: no base rule overrides to it", r.line)
        trig = next(o.trigger for o in base.overrides if o.rule_id == r.id)
        for t, _ in r.transfers:
            if (t not in base.codewords and t != trig) or t == ORIGIN:
                raise RuleFormatError(f"rule {r.id}: transfer target {t} is not a required codeword", r.line)
    for o_id in referenced:
        if o_id not in rs.by_id:
            raise RuleFormatError(f"override names unknown rule {o_id}",
                                  referenced[o_id].line)


def load_rules_file(path, standard: bool = False) -> RuleSet:
    return load_rules(Path(path).read_text(encoding="utf-8"), standard=standard)


def load_standard_rules() -> RuleSet:
    return load_rules_file(STANDARD_RULES, standard=True)


# -- matching ----------------------------------------------------------------

@dataclass(frozen=True)
class RuleInstance:
    rule_id: str
    placement: int
    source: Vertex
    transfers: Tuple[Tuple[Vertex, Fraction], ...]

    @property
    def targets(self) -> Tuple[Vertex, ...]:
        return tuple(t for t, _ in self.transfers)


def _holds(rule: Rule, code: PeriodicCode, place) -> bool:
    isc = code.is_codeword
    return (all(isc(place(o)) for o in rule.codewords)
            and not any(isc(place(o)) for o in rule.noncodewords)
            and all(any(isc(place(o)) for o in grp) for grp in rule.anyof))


def _fired(rule: Rule, rs: RuleSet, code: PeriodicCode, place) -> Rule:
    for o in rule.overrides:
        if code.is_codeword(place(o.trigger)):
            return rs.by_id[o.rule_id]
    return rule


def match_instances(code: PeriodicCode, rs: RuleSet) -> List[RuleInstance]:
    """Every placement of every rule with its source in one fundamental
    domain, after overrides, deduplicated by (source, rule, transfers)."""
    radius = rs.radius()
    out: List[RuleInstance] = []
    seen = set()
    for s in code.sorted_codewords():
        for pi, om in enumerate(offset_maps(parity(s), radius)):
            place = lambda o, om=om, s=s: om.place(s, o)  # noqa: E731
            for rule in rs.base_rules():
                if not _holds(rule, code, place):
                    continue
                fired = _fired(rule, rs, code, place)
                tr = tuple((place(t), a) for t, a in fired.transfers)
                key = (s, fired.id, tr)
                if key in seen:
                    continue
                seen.add(key)
                out.append(RuleInstance(fired.id, pi, s, tr))
    return out


def audit_instances(code: PeriodicCode, rs: RuleSet,
                    instances: Iterable[RuleInstance]) -> List[str]:
    """Re-check each instance with an independently built automorphism.
    Returns a list of problems (empty when all is well)."""
    problems = []
    for inst in instances:
        auto = automorphisms_onto(ORIGIN, inst.source)[inst.placement]
        fired = rs.by_id[inst.rule_id]
        base = rs.by_id[fired.base_id] if fired.base_id else fired
        if not _holds(base, code, auto):
            problems.append(f"{inst}: constraints fail on re-check")
            continue
        if _fired(base, rs, code, auto).id != fired.id:
            problems.append(f"{inst}: wrong override chosen")
        tr = tuple((auto(t), a) for t, a in fired.transfers)
        if tr != inst.transfers:
            problems.append(f"{inst}: targets differ on re-check")
        if not all(code.is_codeword(t) for t in inst.targets):
            problems.append(f"{inst}: target is not a codeword")
    return problems


@dataclass
class ModifiedShareReport:
    shares: Dict[Vertex, Fraction]
    modified: Dict[Vertex, Fraction]
    instances: List[RuleInstance]
    lattice: Lattice

    @property
    def area(self) -> int:
        return self.lattice.area

    @property
    def share_total(self) -> Fraction:
        return sum(self.shares.values(), Fraction(0))

    @property
    def modified_total(self) -> Fraction:
        return sum(self.modified.values(), Fraction(0))

    @property
    def conserved(self) -> bool:
        return self.share_total == self.modified_total

    @property
    def max_share(self) -> Fraction:
        return max(self.shares.values())

    @property
    def max_modified(self) -> Fraction:
        return max(self.modified.values())

    def worst(self) -> Vertex:
        return max(sorted(self.modified), key=lambda c: self.modified[c])

    def counts(self) -> Counter:
        return Counter(i.rule_id for i in self.instances)

    def per_source_rule(self) -> Counter:
        """How often each rule fires from each source; compare with the
        proofs' "at most once/twice" claims."""
        return Counter((i.source, i.rule_id) for i in self.instances)

    def incoming(self, c: Vertex) -> List[Tuple[RuleInstance, Fraction]]:
        out = []
        for inst in self.instances:
            for t, a in inst.transfers:
                if self.lattice.reduce(t) == c:
                    out.append((inst, a))
        return out


def apply_scheme(code: PeriodicCode, rs: RuleSet, r: int = 2) -> ModifiedShareReport:
    """Shares before and after every matched instance moves its amounts."""
    shares = share_report(code, r).as_dict()
    ms = dict(shares)
    instances = match_instances(code, rs)
    red = code.lattice.reduce
    for inst in instances:
        for t, a in inst.transfers:
            ms[inst.source] -= a
            ms[red(t)] += a
    return ModifiedShareReport(shares, ms, instances, code.lattice)


# -- certification -------------------------------------------------------------

@dataclass
class WindowCheck:
    n: int
    share_sum: Fraction
    lower: int
    modified_sum: Fraction
    annulus: int

    @property
    def eq1(self) -> bool:
        """``sum of s_2 over C ∩ Q_n >= |Q_{n-2}|``."""
        return self.share_sum >= self.lower

    @property
    def eq2(self) -> bool:
        """``sum of s_2 <= sum of ms_2 + (19/4) |Q_{n+6} \\ Q_n|`` over the same codewords."""
        return self.share_sum <= self.modified_sum + BOUND * self.annulus


@dataclass
class CertificateReport:
    density: Fraction
    max_share: Fraction
    max_modified: Fraction
    conserved: bool
    windows: List[WindowCheck]
    instances: int
    audit: List[str]

    @property
    def density_ok(self) -> bool:
        return self.density >= DENSITY_BOUND

    @property
    def bound_ok(self) -> bool:
        return self.max_modified <= BOUND

    @property
    def ok(self) -> bool:
        return (self.density_ok and self.bound_ok and self.conserved and not self.audit
                and all(w.eq1 and w.eq2 for w in self.windows))


class NotIdentifyingError(ValueError):
    pass


def window_checks(code: PeriodicCode, report: ModifiedShareReport,
                  ns: Sequence[int]) -> List[WindowCheck]:
    red = code.lattice.reduce
    out = []
    for n in ns:
        if n < 2:
            raise ValueError("window size must be at least 2")
        s = Fraction(0)
        m = Fraction(0)
        for v in window(n):
            if code.is_codeword(v):
                s += report.shares[red(v)]
                m += report.modified[red(v)]
        out.append(WindowCheck(n, s, (2 * n - 3) ** 2, m,
                               (2 * n + 13) ** 2 - (2 * n + 1) ** 2))
    return out


def certify(code: PeriodicCode, rs: RuleSet, windows: Sequence[int] = (5, 10, 15),
            r: int = 2) -> CertificateReport:
    verdict = verify_identifying(code, r)
    if not verdict:
        raise NotIdentifyingError(f"code is not {r}-identifying: {verdict.describe()}")
    rep = apply_scheme(code, rs, r)
    return CertificateReport(
        density=Fraction(len(code), code.area),
        max_share=rep.max_share,
        max_modified=rep.max_modified,
        conserved=rep.conserved,
        windows=window_checks(code, rep, windows),
        instances=len(rep.instances),
        audit=audit_instances(code, rs, rep.instances),
    )
