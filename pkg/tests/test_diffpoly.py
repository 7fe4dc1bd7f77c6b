import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sepdiff import errors
from sepdiff.diffpoly import (DerivVar, DiffRing, Rank, delta, delta_n, degree, evaluate,
                              initial, leader, nonvanishing_witness, order, partial, rank,
                              separant)
from sepdiff.field import make_presentation
from sepdiff.sampling import random_dpoly, random_nonzero_dpoly

from oracles import T, dpoly_to_sympy, element_to_sympy, zero_mod_p


def test_delta_examples(R5, P5):
    assert delta(P5("x")) == P5("x'")
    assert delta(P5("t*x")) == P5("x + t*x'")
    assert delta(P5("x'^2 - x")) == P5("2*x'*x'' - x'")


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_delta_matches_sympy_oracle(r):
    K = make_presentation(5, ["c"])
    R = DiffRing(K)
    f = random_dpoly(R, r, max_order=2, max_degree=2, coeff_degree=1, fraction_prob=0.3)
    diff = sympy.diff(dpoly_to_sympy(f), T) - dpoly_to_sympy(delta(f))
    assert zero_mod_p(diff, 5)


def test_sympy_oracle_detects_error(P5):
    f = P5("x'^2 - x")
    wrong = delta(f) + P5("x")
    assert not zero_mod_p(sympy.diff(dpoly_to_sympy(f), T) - dpoly_to_sympy(wrong), 5)


def test_delta_n(P5):
    assert delta_n(P5("x"), 3) == P5("d(x,3)")
    assert delta_n(P5("t^2*x"), 2) == P5("2*x + 4*t*x' + t^2*x''")


def test_rank_data(P5):
    f = P5("x'^2 - x")
    assert order(f) == 1 and leader(f) == DerivVar(0, 1)
    assert degree(f) == 2 and rank(f) == Rank(1, 2)
    g = P5("x*x''^3 + x'")
    assert order(g) == 2 and degree(g) == 3


def test_rank_undefined_on_K(P5):
    with pytest.raises(errors.ElementOfK):
        rank(P5("t"))
    assert order(P5("t")) == 0
    with pytest.raises(errors.ZeroPolynomial):
        order(P5("0"))


def test_separant_initial(P5):
    assert separant(P5("x'^5 - x")).is_zero()
    f = P5("x'^2 - x")
    assert separant(f) == P5("2*x'") and initial(f) == P5("1")
    assert initial(P5("x*x''^3 + x'")) == P5("x")


def test_partial(P5):
    assert partial(P5("x'^2"), DerivVar(0, 1)) == P5("2*x'")
    assert partial(P5("x*x'"), DerivVar(0, 0)) == P5("x'")


def test_identity_worked_example(P5):
    f = P5("x'^2 - x")
    lhs = partial(delta(f), DerivVar(0, 1))
    rhs = delta(partial(f, DerivVar(0, 1))) + partial(f, DerivVar(0, 0))
    assert lhs == rhs == P5("2*x'' - 1")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_partial_delta_commutation(seed):
    r = random.Random(seed)
    R = DiffRing(make_presentation(5))
    f = random_nonzero_dpoly(R, r, max_order=3, max_degree=3, coeff_degree=2)
    for i in range(5):
        rhs = delta(partial(f, DerivVar(0, i)))
        if i:
            rhs = rhs + partial(f, DerivVar(0, i - 1))
        assert partial(delta(f), DerivVar(0, i)) == rhs


def test_evaluate(P5, K5):
    t = K5.t
    assert evaluate(P5("x'"), (t,)) == 1
    assert evaluate(P5("x'^2 - x"), (t ** 2,)) == 3 * t ** 2
    K = make_presentation(3, ["c"])
    R = DiffRing(K)
    assert evaluate(R.x(1), (K.gen("c"),)) == 0


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_evaluate_matches_sympy(r):
    K = make_presentation(5)
    R = DiffRing(K)
    f = random_dpoly(R, r, max_order=2, max_degree=2, coeff_degree=1)
    a = K.t ** 2 + 1
    value = element_to_sympy(evaluate(f, (a,)))
    expected = dpoly_to_sympy(f).subs(sympy.Function("x")(T), T ** 2 + 1).doit()
    assert zero_mod_p(value - expected, 5)


def test_nonvanishing_witness(P5, K5):
    assert nonvanishing_witness(P5("x'")) == K5.t
    assert nonvanishing_witness(P5("x")) == 1
    K = make_presentation(2, ["c"], False)
    with pytest.raises(errors.Exhausted):
        nonvanishing_witness(DiffRing(K).x(1), budget=200)


def test_nonvanishing_witness_rejects_zero(P5):
    with pytest.raises(errors.ZeroPolynomial):
        nonvanishing_witness(P5("0"))


def test_ring_name_clash():
    with pytest.raises(errors.DuplicateGeneratorName):
        DiffRing(make_presentation(3, ["c"]), ("c",))
