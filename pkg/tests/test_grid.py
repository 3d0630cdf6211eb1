from hypothesis import given, settings, strategies as st

from hexid.grid import (Automorphism, automorphisms_onto, ball, bfs_distance, distance,
                        is_adjacent, neighbors, offset_maps, sphere, vertex_stabilizer, window)

import oracles

coord = st.integers(-40, 40)
vertex = st.tuples(coord, coord)
small = st.tuples(st.integers(-8, 8), st.integers(-8, 8))


def test_origin_neighbours():
    assert set(neighbors((0, 0))) == {(1, 0), (-1, 0), (0, 1)}
    assert set(neighbors((1, 0))) == {(0, 0), (2, 0), (1, -1)}


@given(vertex)
def test_neighbours_match_edge_set(v):
    assert set(neighbors(v)) == oracles.edge_neighbors(v)


@given(vertex)
def test_adjacency_symmetric(v):
    for w in neighbors(v):
        assert v in neighbors(w)
        assert is_adjacent(w, v)


def test_ball_sizes():
    assert [len(ball((0, 0), r)) for r in range(5)] == [1, 4, 10, 19, 31]
    assert len(ball((3, 4), 2)) == 10


@given(small, st.integers(0, 4))
def test_ball_matches_bfs(v, r):
    assert set(ball(v, r)) == oracles.bfs_ball(v, r)


@given(small, small)
def test_closed_form_distance(u, v):
    d = distance(u, v)
    assert d == bfs_distance(u, v) == oracles.bfs_dist(u, v)
    assert d == distance(v, u)


@given(vertex, vertex)
@settings(max_examples=50)
def test_distance_triangle(u, v):
    w = neighbors(u)[0]
    assert distance(w, v) <= distance(u, v) + 1


def test_sphere_partition():
    for r in range(4):
        assert set(sphere((0, 0), r)) == {w for w in ball((0, 0), r) if distance((0, 0), w) == r}


def test_window_size():
    assert sum(1 for _ in window(3)) == 49


def test_stabiliser_has_six_distinct_maps():
    maps = vertex_stabilizer((0, 0))
    pts = ball((0, 0), 3)
    images = {tuple(m(p) for p in pts) for m in maps}
    assert len(images) == 6


@given(small, small, small)
@settings(max_examples=60)
def test_automorphisms_preserve_edges(s, t, p):
    for a in automorphisms_onto(s, t):
        assert a(s) == t
        for q in neighbors(p):
            assert is_adjacent(a(p), a(q))


@given(small, small)
@settings(max_examples=40)
def test_inverse_and_compose(s, t):
    for a in automorphisms_onto(s, t):
        inv = a.inverse()
        assert inv(t) == s
        ident = inv.compose(a)
        assert all(ident(p) == p for p in ball(s, 3))


def test_automorphism_rejects_non_bijection():
    try:
        Automorphism((0, 0), (0, 0), [(1, 0), (1, 0), (0, 1)])
    except ValueError:
        return
    raise AssertionError("accepted a non-bijection")


def test_offset_maps_agree_with_automorphisms():
    for par in (0, 1):
        maps = offset_maps(par, 3)
        assert len(maps) == 6
        for m in maps:
            assert m.table[(0, 0)] == (par, 0)
            s = (4 + par, 2)
            placed = {p: m.place(s, p) for p in m.table}
            for p in m.table:
                for q in neighbors(p):
                    if q in placed:
                        assert is_adjacent(placed[p], placed[q])
