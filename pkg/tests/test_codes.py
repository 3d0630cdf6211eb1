from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from hexid.codes import (CodeFormatError, Lattice, PeriodicCode, density, density_profile,
                         format_code, hermite_normal_form, parse_code, parse_dset,
                         verify_identifying)
from hexid.corpus import greedy_sparse, optimal_codes, random_lattice
from hexid.grid import automorphisms_onto

import oracles


@st.composite
def lattices(draw, max_area=60):
    import random
    return random_lattice(random.Random(draw(st.integers(0, 10**6))), 2, max_area)


even_vec = st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(lambda v: (v[0] + v[1]) % 2 == 0)


@given(even_vec, even_vec)
def test_hnf_spans_same_lattice(b1, b2):
    det = b1[0] * b2[1] - b1[1] * b2[0]
    assume(det != 0)
    lat = Lattice.from_basis(b1, b2)
    assert lat.area == abs(det)
    assert lat.contains(b1) and lat.contains(b2)
    assert (lat.a, lat.b, lat.d) == oracles._hnf_by_search(b1, b2, abs(det))


@given(lattices(), st.integers(-100, 100), st.integers(-100, 100))
def test_reduce_is_canonical(lat, x, y):
    v = lat.reduce((x, y))
    assert v in set(lat.domain())
    assert lat.reduce(v) == v
    for t in lat.basis:
        assert lat.reduce((x + t[0], y + t[1])) == v
    assert lat.domain()[lat.index((x, y))] == v


def test_reduce_matches_oracle():
    lat = Lattice(6, 1, 3)
    for x in range(-10, 10):
        for y in range(-10, 10):
            assert lat.reduce((x, y)) == oracles.hnf_reduce(6, 1, 3, (x, y))


def test_odd_lattice_rejected():
    with pytest.raises(CodeFormatError):
        Lattice(4, 0, 3)
    with pytest.raises(CodeFormatError):
        Lattice.from_basis((1, 0), (0, 2))
    with pytest.raises(CodeFormatError):
        hermite_normal_form((2, 0), (4, 0))


def test_everything_and_optimal():
    assert verify_identifying(PeriodicCode.everything(), 2)
    for c in optimal_codes():
        assert verify_identifying(c, 2)
        assert density(c) == F(4, 19)


def test_sparse_code_fails_with_witness():
    lat = Lattice(10, 0, 10)
    v = verify_identifying(PeriodicCode(lat, frozenset({(0, 0)})), 2)
    assert not v and v.uncovered is not None
    twin = verify_identifying(PeriodicCode(Lattice(4, 0, 4), frozenset({(0, 0), (1, 2)})), 2)
    assert not twin and twin.pair == ((0, 0), (-1, -1))


def test_everything_is_r1_identifying():
    # closed neighbourhoods in a triangle-free cubic graph are all distinct
    assert verify_identifying(PeriodicCode.everything(), 1)


@given(lattices(40), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_greedy_codes_are_minimal(lat, seed):
    code = greedy_sparse(lat, 2, seed)
    if code is None:
        return
    assert verify_identifying(code, 2)
    if len(code) > 1:
        drop = code.sorted_codewords()[0]
        smaller = PeriodicCode(lat, code.codewords - {drop})
        assert not verify_identifying(smaller, 2)


@given(lattices(40), st.integers(0, 10**6), st.integers(0, 5))
@settings(max_examples=20, deadline=None)
def test_relabel_preserves_identifying(lat, seed, k):
    code = greedy_sparse(lat, 2, seed, keep=0.3)
    if code is None:
        return
    auto = automorphisms_onto((0, 0), (3, 1))[k]
    img = code.relabel(auto)
    assert img.area == code.area and len(img) == len(code)
    assert bool(verify_identifying(img, 2)) == bool(verify_identifying(code, 2))


@given(lattices(), st.integers(0, 10**6))
@settings(max_examples=30)
def test_format_roundtrip(lat, seed):
    import random
    rng = random.Random(seed)
    dom = lat.domain()
    code = PeriodicCode(lat, frozenset(rng.sample(dom, rng.randint(1, len(dom)))))
    assert parse_code(format_code(code, comment="x\ny")) == code


def test_parse_reduces_and_accepts_any_basis():
    code = parse_code("lattice 0 2 4 0  # comment\ncodeword 5 -2\n")
    assert code.lattice == Lattice(4, 0, 2)
    assert code.codewords == {(1, 0)}


@pytest.mark.parametrize("text, line", [
    ("codeword 0 0\n", 1),
    ("lattice 2 0 1 1\nlattice 2 0 1 1\n", 2),
    ("lattice 2 0 1 1\ncodeword 0\n", 2),
    ("lattice 2 0 1 1\ncodeword 0 x\n", 2),
    ("lattice 2 0 1 1\nfoo 1 2\n", 2),
    ("lattice 2 0 1 1\ncodeword 0 0\ncodeword 2 0\n", 3),
    ("lattice 1 0 0 2\ncodeword 0 0\n", 1),
    ("lattice 2 0 4 0\ncodeword 0 0\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(CodeFormatError) as e:
        parse_code(text)
    assert e.value.line == line


@pytest.mark.parametrize("text", ["", "# only\n", "lattice 2 0 1 1\n"])
def test_parse_errors_without_line(text):
    with pytest.raises(CodeFormatError):
        parse_code(text)


def test_dset():
    assert parse_dset("0 0\ncodeword 0 1\n\n# c\n1 -1\n") == [(0, 0), (0, 1), (1, -1)]
    for bad in ("", "0 0\n0 0\n", "0\n", "a b\n"):
        with pytest.raises(CodeFormatError):
            parse_dset(bad)


def test_density_profile_converges():
    code = optimal_codes()[0]
    assert abs(density_profile(code, 60) - F(4, 19)) < F(1, 50)
    with pytest.raises(ValueError):
        density_profile(code, -1)
