import random

import pytest

from conftest import cable_staircase, torus_staircase
from cfk.complexes import BifilteredComplex, Generator, dual, tensor, unknot_complex
from cfk.errors import KnotTypeError
from cfk.invariants import (FreeUComplex, H, V, a_minus, epsilon, hat_a,
                            hfk_hat, homology_over_U, nu, nu_plus,
                            seifert_genus, tau, vertical_complex)


def test_a_minus_trefoil_shifts(trefoil):
    X = a_minus(trefoil, 0)
    # every generator needs one U to get under max(i, j) = 0
    assert X.basis == (("x0", -2), ("x1", -1), ("x2", -2))
    assert X.terms == (("x1", "x0", 0), ("x1", "x2", 0))
    X1 = a_minus(trefoil, 1)
    assert X1.basis == (("x0", 0), ("x1", -1), ("x2", -2))
    assert X1.terms == (("x1", "x0", 1), ("x1", "x2", 0))


def test_homology_over_u_examples(trefoil):
    # unknot: the single tower survives untouched
    assert homology_over_U(a_minus(unknot_complex(), 0)).free_gradings == (0,)
    assert homology_over_U(a_minus(unknot_complex(), 0)).torsion == ()
    # one box: a -> U b is pure torsion with exponent 1
    box = FreeUComplex(basis=(("a", 1), ("b", 2)), terms=(("a", "b", 1),))
    summary = homology_over_U(box)
    assert summary.free_gradings == ()
    assert summary.torsion == ((2, 1),)
    # trefoil at k = 0: both arrows have exponent 0, so one pair cancels
    # without leaving torsion and one free generator remains in grading -2
    summary = homology_over_U(a_minus(trefoil, 0))
    assert summary.free_gradings == (-2,)
    assert summary.torsion == ()
    # at k = 1 the tower top moves up to 0
    assert homology_over_U(a_minus(trefoil, 1)).free_gradings == (0,)


def test_homology_over_u_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        homology_over_U(FreeUComplex(basis=(("a", 0), ("b", 0)),
                                     terms=(("a", "b", 0),)))


def test_v_and_h_frozen_values(trefoil):
    assert V(trefoil, 0) == 1
    assert V(trefoil, 1) == 0
    assert V(trefoil, -1) == 1
    assert H(trefoil, 1) == 1
    assert H(trefoil, 0) == 1
    for k in range(-5, 6):
        assert V(unknot_complex(), k) == max(0, -k)
        assert H(unknot_complex(), k) == max(0, k)


def test_v_requires_knot_type():
    # two parallel towers: validate would reject this, and V refuses too
    C = BifilteredComplex([Generator("a", 0, 0, 0), Generator("b", 0, 0, 0)], [])
    with pytest.raises(KnotTypeError):
        V(C, 0)


def test_nu_plus_values(trefoil, knot_45):
    assert nu_plus(unknot_complex()) == 0
    assert nu_plus(trefoil) == 1
    assert nu_plus(dual(trefoil)) == 0
    assert nu_plus(knot_45) == 2


def test_vertical_and_hat_complexes(trefoil):
    Vc = vertical_complex(torus_staircase(2, 9))
    assert len(Vc.basis) == 9
    # only the downward (i-preserving) arrows survive
    assert sorted(Vc.terms) == [
        ("x1", "x2"), ("x3", "x4"), ("x5", "x6"), ("x7", "x8")]
    Ha = hat_a(trefoil, 0)
    # both trefoil arrows have induced exponent 0 at k = 0
    assert sorted(Ha.terms) == [("x1", "x0"), ("x1", "x2")]
    Ha1 = hat_a(trefoil, 1)
    assert sorted(Ha1.terms) == [("x1", "x2")]


def test_tau_nu_epsilon_small_cases(trefoil):
    U = unknot_complex()
    assert (tau(U), nu(U), epsilon(U)) == (0, 0, 0)
    assert (tau(trefoil), nu(trefoil), epsilon(trefoil)) == (1, 1, 1)
    m = dual(trefoil)
    assert (tau(m), nu(m), epsilon(m)) == (-1, 0, -1)
    c = cable_staircase()
    assert tau(c) == 4 and tau(dual(c)) == -4


def test_tau_additivity_on_staircases():
    pieces = [torus_staircase(2, 3), torus_staircase(2, 5, prefix="y"),
              dual(torus_staircase(3, 4, prefix="z"))]
    taus = [tau(p) for p in pieces]
    assert taus == [1, 2, -3]
    K = tensor(tensor(pieces[0], pieces[1]), pieces[2])
    assert tau(K) == sum(taus)
    assert tau(dual(K)) == -sum(taus)


def test_45_generator_full_profile(knot_45):
    assert (tau(knot_45), nu(knot_45), nu_plus(knot_45)) == (0, 1, 2)
    assert epsilon(knot_45) == -1
    assert V(knot_45, 0) == 1 and V(knot_45, 1) == 1 and V(knot_45, 2) == 0


def test_hfk_hat_tables(trefoil, knot_45):
    assert hfk_hat(unknot_complex()) == {(0, 0): 1}
    assert hfk_hat(trefoil) == {(1, 0): 1, (0, -1): 1, (-1, -2): 1}
    t29 = hfk_hat(torus_staircase(2, 9))
    assert sorted(t29) == [(a, a - 4) for a in range(-4, 5)]
    assert set(t29.values()) == {1}
    table = hfk_hat(knot_45)
    assert sum(table.values()) == 45
    assert max(a for (a, _m) in table) == 8


def test_seifert_genus(trefoil, knot_45):
    assert seifert_genus(unknot_complex()) == 0
    assert seifert_genus(trefoil) == 1
    assert seifert_genus(torus_staircase(3, 5)) == 4
    assert seifert_genus(knot_45) == 8


def test_invariants_ignore_term_order(knot_45):
    rng = random.Random(7)
    terms = list(knot_45.terms)
    rng.shuffle(terms)
    shuffled = BifilteredComplex(knot_45.generators, terms)
    assert (tau(shuffled), nu(shuffled), nu_plus(shuffled)) == (0, 1, 2)
    for k in range(-2, 3):
        assert V(shuffled, k) == V(knot_45, k)
    assert homology_over_U(a_minus(shuffled, 0)) == homology_over_U(
        a_minus(knot_45, 0))
