import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hexid.codes import PeriodicCode
from hexid.corpus import greedy_sparse, optimal_codes, random_lattice
from hexid.discharge import (BOUND, STANDARD_IDS, NotIdentifyingError, RuleFormatError,
                             apply_scheme, audit_instances, certify, load_rules,
                             load_standard_rules, match_instances)
from hexid.grid import automorphisms_onto

RULE1 = [(0, 0), (-1, 2), (0, 2)]


@pytest.fixture(scope="module")
def rs():
    return load_standard_rules()


def test_standard_ids(rs):
    assert set(rs.ids) == STANDARD_IDS
    assert len(rs.base_rules()) == 10
    assert rs.radius() >= 4


@pytest.mark.parametrize("extra, rule, target, amount", [
    ([], "1", (0, 2), F(1, 4)),
    ([(0, -1)], "1.1", (0, 2), F(1, 12)),
    ([(-3, 2)], "1.2", (-1, 2), F(1, 4)),
    ([(0, -1), (-3, 2)], "1.1", (0, 2), F(1, 12)),
])
def test_rule1_and_overrides(rs, extra, rule, target, amount):
    code = PeriodicCode.from_finite(RULE1 + extra)
    (inst,) = match_instances(code, rs)
    assert inst.rule_id == rule and inst.source == (0, 0)
    assert inst.transfers == ((target, amount),)


@pytest.mark.parametrize("k", range(6))
def test_rule_fires_in_every_orientation(rs, k):
    auto = automorphisms_onto((0, 0), (5, 3))[k]
    code = PeriodicCode.from_finite([auto(v) for v in RULE1])
    (inst,) = match_instances(code, rs)
    assert inst.rule_id == "1"
    assert code.lattice.reduce(inst.targets[0]) == code.lattice.reduce(auto((0, 2)))
    assert not audit_instances(code, rs, [inst])


def test_noncodeword_blocks(rs):
    code = PeriodicCode.from_finite(RULE1 + [(1, 2)])
    assert all(i.rule_id not in ("1", "1.1", "1.2") or i.source != (0, 0)
               for i in match_instances(code, rs))


def test_optimal_codes_are_tight(rs):
    for code in optimal_codes():
        rep = apply_scheme(code, rs)
        assert rep.conserved
        assert set(rep.modified.values()) == {BOUND}
        assert rep.counts() == {"9": 6}
        assert not audit_instances(code, rs, rep.instances)
        cert = certify(code, rs)
        assert cert.ok and cert.density == F(4, 19)


def test_incoming_accounts_for_difference(rs):
    code = optimal_codes()[0]
    rep = apply_scheme(code, rs)
    for c in rep.shares:
        given_away = sum(a for i in rep.instances if i.source == c for _, a in i.transfers)
        got = sum(a for _, a in rep.incoming(c))
        assert rep.modified[c] == rep.shares[c] - given_away + got


@st.composite
def identifying_codes(draw):
    rng = random.Random(draw(st.integers(0, 10**6)))
    while True:
        code = greedy_sparse(random_lattice(rng, 30, 100), 2, rng.randrange(10**6))
        if code is not None:
            return code


@given(identifying_codes())
@settings(max_examples=40, deadline=None)
def test_scheme_bound_and_conservation(rs, code):
    rep = apply_scheme(code, rs)
    assert rep.conserved
    assert rep.share_total == code.area
    assert rep.max_modified <= BOUND
    assert not audit_instances(code, rs, rep.instances)


@given(identifying_codes())
@settings(max_examples=15, deadline=None)
def test_window_inequalities(rs, code):
    cert = certify(code, rs, (5, 10))
    for w in cert.windows:
        assert w.share_sum >= (2 * w.n - 3) ** 2
        assert w.eq1 and w.eq2


def test_certify_rejects_non_identifying(rs):
    with pytest.raises(NotIdentifyingError):
        certify(PeriodicCode.from_finite(RULE1), rs)


MINIMAL = "rule 1\ncodeword 0 0\ncodeword 1 0\ntransfer 1 0 1/4\nend\n"


def test_minimal_rules_file():
    rs = load_rules(MINIMAL)
    assert rs.ids == ["1"]
    with pytest.raises(RuleFormatError):
        load_rules(MINIMAL, standard=True)


@pytest.mark.parametrize("text, line", [
    ("codeword 0 0\n", 1),
    ("rule 1\ncodeword 0 0\nrule 2\n", 3),
    ("rule x\n", 1),
    ("rule 1\ncodeword 0\nend\n", 2),
    ("rule 1\ncodeword 0 0\ntransfer 1 0 1/3\nend\n", 3),
    ("rule 1\ncodeword 0 0\ntransfer 1 0 1/0\nend\n", 3),
    ("rule 1\nfrobnicate 1 2\nend\n", 2),
    ("rule 1\nanyof 1 0\nend\n", 2),
    ("rule 1\noverride 1.1 if 0 1\nend\n", 2),
    ("rule 1\ncodeword 0 0\ntransfer 1 0 1/4\nend junk\n", 4),
    (MINIMAL + "rule 1\ncodeword 0 0\ntransfer 1 0 1/4\nend\n", 6),
])
def test_syntax_errors_have_lines(text, line):
    with pytest.raises(RuleFormatError) as e:
        load_rules(text)
    assert e.value.line == line


@pytest.mark.parametrize("text, fragment", [
    ("", "no rules"),
    ("rule 1\ncodeword 0 0\n", "missing 'end'"),
    ("rule 1\ncodeword 0 0\nend\n", "no transfers"),
    ("rule 1\ncodeword 1 0\ntransfer 1 0 1/4\nend\n", "source"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\nnoncodeword 1 0\ntransfer 1 0 1/4\nend\n", "both"),
    ("rule 1\ncodeword 0 0\ntransfer 1 0 1/4\nend\n", "not a required codeword"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\nanyof 1 0 ; 0 1\ntransfer 1 0 1/4\nend\n", "anyof"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 1.1 when codeword 1 0\n"
     "transfer 1 0 1/4\nend\n", "already constrained"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 1.1 when codeword 0 1\n"
     "transfer 1 0 1/4\nend\n", "unknown rule 1.1"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 2.1 when codeword 0 1\n"
     "transfer 1 0 1/4\nend\n", "not a modification"),
    (MINIMAL + "rule 1.1\ntransfer 1 0 1/12\nend\n", "no base rule"),
    (MINIMAL.replace("rule 1", "rule 1.1"), "only list transfers"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 1.1 when codeword 0 1\n"
     "transfer 1 0 1/4\nend\nrule 1.1\ncodeword 0 0\ntransfer 1 0 1/12\nend\n", "only list transfers"),
    ("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 1.1 when codeword 0 1\n"
     "transfer 1 0 1/4\nend\nrule 1.1\ntransfer 2 0 1/12\nend\n", "not a required codeword"),
])
def test_semantic_errors(text, fragment):
    with pytest.raises(RuleFormatError) as e:
        load_rules(text)
    assert fragment in str(e.value)


def test_override_may_target_its_trigger():
    rs = load_rules("rule 1\ncodeword 0 0\ncodeword 1 0\noverride 1.1 when codeword 0 1\n"
                    "transfer 1 0 1/4\nend\nrule 1.1\ntransfer 0 1 1/12\nend\n")
    assert rs.by_id["1.1"].base_id == "1"
