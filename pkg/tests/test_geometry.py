from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sfreecut.errors import DimensionError, NotFacetError
from sfreecut.linalg import matvec, nullspace, rank, rat, solve_linear
from sfreecut.polyhedron import (
    HPolyhedron,
    Location,
    basic_solutions,
    double_description,
    facet_rel_interior_test,
    facet_rows,
    in_convex_hull,
    is_bounded,
    membership,
    vertices_to_hpolyhedron,
)

from strategies import rationals, small_ints, vectors

EX1_B = HPolyhedron.from_rows([[4, 4], [4, -4]], [4, 0])
UNIT = HPolyhedron.box([0, 0], [1, 1])


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat("6/8") == F(3, 4)


@pytest.mark.parametrize(
    "M, v, expected",
    [
        ([[1, 0], [0, 1]], [F(1, 4), F(1, 2)], (F(1, 4), F(1, 2))),
        ([[1, 1], [1, -1]], [1, 0], (F(1, 2), F(1, 2))),
    ],
)
def test_solve_linear_examples(M, v, expected):
    sol = solve_linear(M, v)
    assert sol.solution == expected
    assert sol.rank == 2


def test_solve_linear_inconsistent():
    sol = solve_linear([[1, 1], [2, 2]], [1, 3])
    assert not sol.consistent and sol.rank == 1


def test_solve_linear_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_linear([[1, 2]], [1, 2])


@given(st.lists(vectors(3, small_ints), min_size=1, max_size=4), vectors(3, small_ints))
def test_solve_linear_residual_is_zero(M, x):
    v = matvec(M, x)
    sol = solve_linear(M, v)
    assert sol.consistent
    assert matvec(M, sol.solution) == v
    assert sol.rank == rank(M)


@given(st.lists(vectors(3, small_ints), min_size=1, max_size=3))
def test_nullspace_annihilates(M):
    N = nullspace(M, 3)
    assert len(N) == 3 - rank(M)
    for z in N:
        assert all(c == 0 for c in matvec(M, z))


def test_dd_halfplane():
    G = double_description(HPolyhedron.from_rows([[-1, 0]], [0]))
    assert G.lineality == ((0, 1),)
    assert G.rays == ((1, 0),)
    assert G.vertices == ()


def test_dd_unit_box():
    G = double_description(UNIT)
    assert sorted(G.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert G.rays == () and G.lineality == ()


def test_dd_example_wedge():
    G = double_description(EX1_B)
    assert G.vertices == ((F(1, 2), F(1, 2)),)
    assert sorted(G.rays) == [(-1, -1), (-1, 1)]


def test_dd_empty_flagged():
    G = double_description(HPolyhedron.from_rows([[1, 0], [-1, 0]], [0, -1]))
    assert G.empty and G.vertices == ()


def test_is_bounded():
    assert is_bounded(UNIT)
    assert not is_bounded(HPolyhedron.from_rows([[-1, 0]], [0]))
    assert not is_bounded(EX1_B)


@pytest.mark.parametrize(
    "x, loc",
    [((0, 1), Location.BOUNDARY), ((1, 1), Location.OUTSIDE), ((F(1, 4), F(1, 2)), Location.INTERIOR)],
)
def test_membership_examples(x, loc):
    assert membership(EX1_B, x) is loc


def test_facet_rel_interior_examples():
    assert facet_rel_interior_test(EX1_B, 0, (0, 1))
    assert not facet_rel_interior_test(EX1_B, 0, (F(1, 2), F(1, 2)))
    assert facet_rel_interior_test(EX1_B, 1, (0, 0))


def test_facet_rel_interior_rejects_redundant_row():
    P = UNIT.add_row((1, 1), 5)
    assert facet_rows(P) == [0, 1, 2, 3]
    with pytest.raises(NotFacetError):
        facet_rel_interior_test(P, 4, (1, 1))


def test_facet_test_respects_implied_equalities():
    # a segment in R^2: rows 0/1 pin x2 = 0, both ends are facets of the segment
    seg = HPolyhedron.from_rows([[0, 1], [0, -1], [1, 0], [-1, 0]], [0, 0, 2, 0])
    assert facet_rel_interior_test(seg, 2, (2, 0))
    assert not facet_rel_interior_test(seg, 2, (1, 0))


@given(st.lists(vectors(2, small_ints), min_size=3, max_size=7))
def test_round_trip_h_v_h(points):
    P = vertices_to_hpolyhedron(points)
    G = double_description(P)
    Q = vertices_to_hpolyhedron(G.points, G.rays)
    for p in points:
        assert P.contains(p) and Q.contains(p)
    for v in G.points:
        assert in_convex_hull(v, points) is not None
    # generators of each rebuild satisfy the other's inequalities
    for v in double_description(Q).points:
        assert P.contains(v)


@given(st.lists(vectors(2, small_ints), min_size=1, max_size=5), vectors(2, rationals))
def test_interior_means_positive_slack(rows, x):
    P = HPolyhedron.from_rows(rows, [1] * len(rows))
    if membership(P, x) is Location.INTERIOR:
        assert all(s > 0 for s in P.slacks(x))


@given(vectors(2, rationals))
def test_generated_points_feasible(x):
    P = EX1_B.add_row((-1, 0), 3)
    G = double_description(P)
    for v in G.points:
        assert P.contains(v)
    for r in G.rays:
        assert all(c <= 0 for c in matvec(P.A, r))
    assert (membership(P, x) is not Location.OUTSIDE) == P.contains(x)


def test_basic_solutions_cover_vertices():
    # {s >= 0 : s1 + s2 = 1}
    sols = sorted(s for _, s in basic_solutions([[1, 1]], [1], 2))
    assert sols == [(0, 1), (1, 0)]


def test_in_convex_hull():
    lam = in_convex_hull((4, 4), [(4, 8), (4, -8)])
    assert lam == (F(3, 4), F(1, 4))
    assert in_convex_hull((4, 8), [(4, 4), (4, -4)]) is None
