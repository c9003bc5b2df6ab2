from fractions import Fraction as F

import pytest
from hypothesis import given

from sfreecut import SDescription, SearchBox, SFreeBody
from sfreecut.errors import CertificationError, NotSFreeError, PreconditionError
from sfreecut.gauge import GaugeFunction, gauge_eval
from sfreecut.lattice import enumerate_integer_points
from sfreecut.polyhedron import HPolyhedron, Location, facet_rel_interior_test, in_convex_hull, membership
from sfreecut.sfree import (
    Verdict,
    facet_certificates,
    is_maximal_s_free,
    is_s_free,
    lineality_extend,
    shell,
    tighten_lattice,
    tilt_to_maximal,
)

from instances import BOX, sweep_with_bodies
from strategies import rationals, vectors

Z2 = SDescription.lattice(2)
UPPER_BOX = SearchBox((-5, 0), (5, 5))


def test_body_canonical_form(f1, wedge):
    assert wedge.to_hpolyhedron() == HPolyhedron.from_rows([[4, 4], [4, -4]], [4, 0])
    assert SFreeBody.from_inequalities([[4, 4], [4, -4]], [4, 0], f1) == wedge


def test_body_rejects_duplicate_rows(f1):
    with pytest.raises(ValueError):
        SFreeBody(f1, [(4, 4), (4, 4)])


def test_s_free_examples(halfplane_S, box5, wedge, wide_wedge, f1):
    assert is_s_free(wedge, halfplane_S, box5).free
    assert is_s_free(wide_wedge, halfplane_S, box5).free
    shifted = SFreeBody.from_inequalities([[1, 0], [-1, 0]], [F(3, 2), F(-1, 2)], (1, F(1, 2)))
    check = is_s_free(shifted, halfplane_S, UPPER_BOX)
    assert not check.free and check.witness == (1, 0)
    assert is_s_free(shifted, halfplane_S, box5).witness == (1, -5)


def test_certificates_example_body(halfplane_S, box5, wedge):
    certs, redundant = facet_certificates(wedge, halfplane_S, box5)
    assert certs == ((0, 1), (0, 0)) and redundant == ()


def test_certificates_psi_body_absent(halfplane_S, box5, wide_wedge):
    assert facet_certificates(wide_wedge, halfplane_S, box5).certificates == (None, None)


def test_certificates_split(halfplane_S, split_body):
    # smallest certificate depends on the box; with x2 >= 0 they sit on the x1 axis
    assert facet_certificates(split_body, halfplane_S, UPPER_BOX).certificates == ((1, 0), (0, 0))
    assert facet_certificates(split_body, halfplane_S, BOX).certificates == ((1, -5), (0, -5))


def test_maximality_suite(halfplane_S, box5, wedge, wide_wedge, split_body):
    rep = is_maximal_s_free(wedge, halfplane_S, box5)
    assert rep.verdict is Verdict.MAXIMAL_CASE_I and rep.violating_point is None
    assert rep.box_used == box5
    assert is_maximal_s_free(wide_wedge, halfplane_S, box5).verdict is Verdict.NOT_MAXIMAL
    assert is_maximal_s_free(split_body, halfplane_S, box5).verdict is Verdict.MAXIMAL_CASE_I
    half = HPolyhedron.from_rows([[1, 0]], [0])
    assert is_maximal_s_free(half, halfplane_S, box5).verdict is Verdict.MAXIMAL_CASE_II


def test_triangle_maximal_in_lattice():
    T = SFreeBody((F(1, 2), F(1, 2)), [(-2, 0), (0, -2), (1, 1)])
    rep = is_maximal_s_free(T, Z2, SearchBox.cube(2, 4))
    assert rep.verdict is Verdict.MAXIMAL_CASE_I
    assert rep.facet_certificates == ((0, 1), (1, 0), (1, 1))


def test_violating_point_reported(halfplane_S, box5):
    big = SFreeBody((F(1, 4), F(1, 2)), [(1, 0), (-1, 0)])
    rep = is_maximal_s_free(big, halfplane_S, box5)
    assert rep.verdict is Verdict.NOT_MAXIMAL and rep.violating_point is not None


def test_half_space_not_supporting(halfplane_S, box5):
    # x1 <= -1 leaves a gap to S, the half-space can grow
    half = HPolyhedron.from_rows([[1, 0]], [-1])
    assert is_maximal_s_free(half, halfplane_S, box5).verdict is Verdict.NOT_MAXIMAL


def test_lineality_extend():
    split = SFreeBody((F(1, 2), F(1, 2)), [(2, 0), (-2, 0)])
    assert lineality_extend(split, (0, 1), Z2, BOX) == split
    half_split = split.with_rows([(2, 0), (-2, 0), (0, -2)])
    assert lineality_extend(half_split, (0, 1), Z2, BOX) == split
    square = SFreeBody((F(1, 2), F(1, 2)), [(2, 0), (-2, 0), (0, 2), (0, -2)])
    with pytest.raises(PreconditionError):
        lineality_extend(square, (0, 1), Z2, BOX)


def test_lineality_extend_catches_bad_input():
    # thin strip around x2 = 1/2 is lattice-free only while capped
    capped = SFreeBody((F(1, 2), F(1, 2)), [(2, 0), (-2, 0), (0, -2), (F(1, 2), 1)])
    with pytest.raises((CertificationError, PreconditionError)):
        lineality_extend(capped, (0, 1), Z2, BOX)


def test_shell_examples():
    assert shell(SDescription.from_rows([[-1, 0]], [0])) == HPolyhedron.from_rows([[-1, 0]], [F(1, 2)])
    sq = shell(SDescription(HPolyhedron.box([0, 0], [2, 2])))
    assert set(sq.rows()) == {((1, 0), F(5, 2)), ((0, 1), F(5, 2)), ((-1, 0), F(1, 2)), ((0, -1), F(1, 2))}
    assert shell(SDescription.from_rows([[2, 2]], [3])) == HPolyhedron.from_rows([[2, 2]], [F(7, 2)])


def test_shell_invariant():
    S = SDescription.from_rows([[2, 2], [-1, 0], [0, -3]], [3, 0, 1])
    P = shell(S)
    for x in enumerate_integer_points(HPolyhedron.whole_space(2), BOX):
        loc = membership(P, x)
        if S.contains(x):
            assert loc is Location.INTERIOR
        else:
            assert loc is not Location.INTERIOR


def test_tighten_example(halfplane_S, box5, wedge):
    K = tighten_lattice(wedge, halfplane_S, box5)
    assert K == HPolyhedron.from_rows([[4, 4], [4, -4], [-1, 0]], [4, 0, 1])
    assert facet_rel_interior_test(K, 2, (-1, 0))
    interior = [x for x in enumerate_integer_points(K, box5) if membership(K, x) is Location.INTERIOR]
    assert interior == []


def test_tighten_split_fixed_point(halfplane_S, box5, split_body):
    assert tighten_lattice(split_body, halfplane_S, box5) == split_body.to_hpolyhedron()


def test_tighten_contains_body_in_shell(halfplane_S, box5, wide_wedge):
    K = tighten_lattice(wide_wedge, halfplane_S, box5)
    inner = wide_wedge.to_hpolyhedron().intersect(shell(halfplane_S))
    for x in enumerate_integer_points(inner, box5):
        assert K.contains(x)
    assert all(membership(K, x) is not Location.INTERIOR for x in enumerate_integer_points(K, box5))


def test_tilt_example(halfplane_S, box5, wide_wedge):
    res = tilt_to_maximal(wide_wedge, halfplane_S, box5)
    assert set(res.body.rows) == {(4, 4), (4, -4)}
    assert res.verdict is Verdict.MAXIMAL_CASE_I and res.complete and not res.box_only
    first, second = res.trace
    assert (first.tilted_row, first.partner_row) == ((4, 8), (4, -8))
    assert (first.lambda_star, first.x_bar, first.lambda_bar, first.new_row) == (F(1, 2), (0, 1), F(3, 4), (4, 4))
    assert (second.lambda_star, second.x_bar, second.lambda_bar, second.new_row) == (F(1, 3), (0, 0), F(2, 3), (4, -4))


def test_tilt_split_unchanged(halfplane_S, box5, split_body):
    res = tilt_to_maximal(split_body, halfplane_S, box5)
    assert res.body == split_body and res.trace == ()


def test_tilt_rejects_non_free(halfplane_S, box5):
    big = SFreeBody((F(1, 4), F(1, 2)), [(1, 0), (-1, 0)])
    with pytest.raises(NotSFreeError) as err:
        tilt_to_maximal(big, halfplane_S, box5)
    assert err.value.witness is not None


def test_tilt_rejects_missing_lineality(box5):
    wedge = SFreeBody((F(1, 2), F(1, 2)), [(2, 0), (-2, 0), (0, -2)])
    with pytest.raises(PreconditionError):
        tilt_to_maximal(wedge, Z2, box5)


def test_tilt_rejects_empty_S(box5, wedge):
    far = SDescription.from_rows([[-1, 0], [1, 0]], [-100, 101])
    with pytest.raises(PreconditionError):
        tilt_to_maximal(wedge, far, box5)


def _tilt_invariants(C, S, box):
    res = tilt_to_maximal(C, S, box)
    assert len(res.trace) <= len(C.rows)
    for a in res.body.rows:
        assert in_convex_hull(a, C.rows) is not None
    for st in res.trace:
        if st.action == "tilt":
            assert st.lambda_bar > st.lambda_star
    if res.verdict is Verdict.MAXIMAL_CASE_I:
        assert is_maximal_s_free(res.body, S, box).verdict is Verdict.MAXIMAL_CASE_I
    assert is_s_free(res.body, S, box).free
    return res


SWEEP = [(inst, B) for inst, B in sweep_with_bodies(count=16) if B is not None]


@pytest.mark.parametrize("inst, C", SWEEP)
def test_tilt_invariants_random(inst, C):
    res = _tilt_invariants(C, inst.S, BOX)
    psi_in, psi_out = GaugeFunction.of_body(C), GaugeFunction.of_body(res.body)
    for r in [(1, 0), (0, 1), (-1, 0), (0, -1), (F(1, 3), F(-2, 5)), (-2, 3)]:
        assert gauge_eval(psi_out, r) <= gauge_eval(psi_in, r)


@given(vectors(2, rationals))
def test_tilt_output_contains_input(x):
    S = SDescription.from_rows([[-1, 0]], [0])
    C = SFreeBody((F(1, 4), F(1, 2)), [(4, 8), (4, -8)])
    B = tilt_to_maximal(C, S, SearchBox.cube(2, 5)).body
    if C.to_hpolyhedron().contains(x):
        assert B.to_hpolyhedron().contains(x)
