import pytest

from conftest import cable_staircase, torus_staircase
from cfk.complexes import (BifilteredComplex, DiffTerm, Generator,
                           cancel_filtered_pairs, dual, staircase, tensor,
                           unknot_complex, validate)
from cfk.errors import ValidationError
from cfk.invariants import V, epsilon, nu, nu_plus, tau
from cfk.laurent import LaurentPoly, torus_alexander


def positions(C):
    return [(g.i, g.j) for g in C.generators]


def maslovs(C):
    return [g.maslov for g in C.generators]


def term_triples(C):
    return sorted((t.source, t.target, t.upower) for t in C.terms)


def test_unknot_complex():
    U = unknot_complex()
    assert positions(U) == [(0, 0)] and maslovs(U) == [0]
    assert U.terms == ()
    assert validate(U) == []


def test_staircase_frozen_positions():
    assert positions(torus_staircase(2, 3)) == [(0, 1), (1, 1), (1, 0)]
    assert positions(torus_staircase(2, 5)) == [
        (0, 2), (1, 2), (1, 1), (2, 1), (2, 0)]
    assert positions(torus_staircase(2, 9)) == [
        (0, 4), (1, 4), (1, 3), (2, 3), (2, 2), (3, 2), (3, 1), (4, 1), (4, 0)]
    assert positions(torus_staircase(3, 4)) == [
        (0, 3), (1, 3), (1, 1), (3, 1), (3, 0)]
    assert positions(torus_staircase(3, 5)) == [
        (0, 4), (1, 4), (1, 2), (2, 2), (2, 1), (4, 1), (4, 0)]
    assert positions(cable_staircase()) == [
        (0, 4), (1, 4), (1, 1), (4, 1), (4, 0)]


def test_staircase_structure():
    C = torus_staircase(2, 9)
    assert maslovs(C) == [0, 1, 0, 1, 0, 1, 0, 1, 0]
    assert term_triples(C) == [
        ("x1", "x0", 0), ("x1", "x2", 0),
        ("x3", "x2", 0), ("x3", "x4", 0),
        ("x5", "x4", 0), ("x5", "x6", 0),
        ("x7", "x6", 0), ("x7", "x8", 0)]
    # alexander gradings read the polynomial exponents back off
    assert [g.alexander for g in C.generators] == [4, 3, 2, 1, 0, -1, -2, -3, -4]
    assert validate(C) == []


def test_staircase_rejects_non_lspace_polynomial():
    with pytest.raises(ValueError):
        staircase(LaurentPoly({1: 1, 0: 1}))
    with pytest.raises(ValueError):
        staircase(LaurentPoly({1: 1, 0: 1, -1: 1}))  # +1,+1,+1 not alternating


def test_dual_negates_coordinates_and_reverses_arrows():
    D = dual(cable_staircase(prefix="y"))
    assert positions(D) == [(0, -4), (-1, -4), (-1, -1), (-4, -1), (-4, 0)]
    assert maslovs(D) == [0, -1, 0, -1, 0]
    assert term_triples(D) == [
        ("y0", "y1", 0), ("y2", "y1", 0), ("y2", "y3", 0), ("y4", "y3", 0)]
    assert validate(D) == []


def test_dual_is_an_involution():
    for C in [unknot_complex(), torus_staircase(2, 5), cable_staircase()]:
        assert dual(dual(C)) == C


def test_tensor_counts_and_validity(knot_45, knot_225):
    assert len(knot_45.generators) == 45
    assert len(knot_45.terms) == 9 * 4 + 8 * 5  # Leibniz: |G1||T2| + |T1||G2|
    assert validate(knot_45) == []
    assert len(knot_225.generators) == 225
    assert validate(knot_225) == []


def test_tensor_differential_spot_checks(knot_45):
    by_name = {g.name: g for g in knot_45.generators}
    g = by_name["x1*y0"]
    assert (g.i, g.j) == (1, 0)
    outs = sorted((t.target, t.upower) for t in knot_45.terms_from("x1*y0"))
    assert outs == [("x0*y0", 0), ("x1*y1", 0), ("x2*y0", 0)]
    g2 = by_name["x0*y1"]
    assert (g2.i, g2.j) == (-1, 0)
    assert list(knot_45.terms_from("x0*y1")) == []


def test_tensor_is_symmetric_up_to_invariants():
    A = torus_staircase(2, 5)
    B = dual(torus_staircase(2, 3, prefix="y"))
    AB, BA = tensor(A, B), tensor(B, A)
    for f in (tau, nu, nu_plus, epsilon):
        assert f(AB) == f(BA)
    for k in range(-3, 4):
        assert V(AB, k) == V(BA, k)


def test_validate_duplicate_and_undeclared_names():
    base = torus_staircase(2, 3)
    dup = BifilteredComplex(
        list(base.generators) + [Generator("x0", 7, 7, 0)], base.terms)
    kinds = [v.kind for v in validate(dup)]
    assert "duplicate-name" in kinds

    loose = BifilteredComplex(base.generators,
                              list(base.terms) + [DiffTerm("x1", "ghost", 0)])
    kinds = [v.kind for v in validate(loose)]
    assert "undeclared-name" in kinds


def test_validate_filtration_and_grading():
    base = torus_staircase(2, 3)
    bad_filt = BifilteredComplex(
        base.generators, list(base.terms) + [DiffTerm("x2", "x1", 0)])
    kinds = [v.kind for v in validate(bad_filt)]
    assert "filtration" in kinds

    # x1 -> U^1 x2 respects filtration but drops maslov by 3, not 1
    bad_grading = BifilteredComplex(
        base.generators, [DiffTerm("x1", "x0", 0), DiffTerm("x1", "x2", 1)])
    kinds = [v.kind for v in validate(bad_grading)]
    assert "grading" in kinds


def test_validate_d_squared():
    C = BifilteredComplex(
        [Generator("a", 0, 0, 2), Generator("b", 0, 0, 1),
         Generator("c", 0, 0, 0), Generator("z", 0, 0, 0)],
        [DiffTerm("a", "b", 0), DiffTerm("b", "c", 0)])
    violations = validate(C)
    assert [v.kind for v in violations] == ["d-squared"]
    assert "d^2(a)" in violations[0].message


def test_validate_vertical_homology():
    base = torus_staircase(2, 9)
    # dropping one vertical arrow leaves three surviving classes
    kept = [t for t in base.terms if (t.source, t.target) != ("x1", "x2")]
    C = BifilteredComplex(base.generators, kept)
    violations = validate(C)
    assert [v.kind for v in violations] == ["vertical-homology"]
    assert "dimension 3" in violations[0].message


def test_require_valid_raises():
    C = BifilteredComplex([Generator("a", 0, 0, 0), Generator("b", 0, 0, 0)], [])
    from cfk.complexes import require_valid
    with pytest.raises(ValidationError):
        require_valid(C)


def test_cancel_simple_pair():
    # a box at the origin next to a free dot: cancelling kills the box
    C = BifilteredComplex(
        [Generator("a", 0, 0, 1), Generator("b", 0, 0, 0),
         Generator("c", 0, 0, 0)],
        [DiffTerm("a", "b", 0)])
    assert validate(C) == []
    R = cancel_filtered_pairs(C)
    assert [g.name for g in R.generators] == ["c"]
    assert R.terms == ()


def test_cancel_with_corrections_reduces_to_torus_knot():
    box = BifilteredComplex(
        [Generator("a", 0, 0, 1), Generator("b", 0, 0, 0),
         Generator("c", 0, 0, 0)],
        [DiffTerm("a", "b", 0)])
    T = torus_staircase(2, 5)
    R = cancel_filtered_pairs(tensor(box, T))
    assert len(R.generators) == 5
    assert validate(R) == []
    for f in (tau, nu, nu_plus, epsilon):
        assert f(R) == f(T)
    for k in range(-2, 3):
        assert V(R, k) == V(T, k)


def test_cancel_leaves_staircase_tensors_alone(knot_45):
    # every arrow in a staircase tensor moves in i or j, so nothing cancels
    assert cancel_filtered_pairs(knot_45) == knot_45


def test_complex_equality_ignores_label_and_term_order(trefoil):
    reordered = BifilteredComplex(trefoil.generators,
                                  list(reversed(trefoil.terms)),
                                  label="renamed")
    assert reordered == trefoil
