import random

import pytest

from sepdiff import errors
from sepdiff.diffpoly import DiffRing, evaluate
from sepdiff.field import make_presentation
from sepdiff.parsing import parse_dpoly
from sepdiff.prolongation import (AlgebraicSystem, check_membership, formally_compatible,
                                  lift_point, prolong, substitute_derivatives)
from sepdiff.sampling import random_dpoly, random_element


def system(K, names, *texts):
    R = DiffRing(K, names)
    return AlgebraicSystem(R, [parse_dpoly(s, R) for s in texts])


def pair_strings(tau):
    return [(str(f), str(df)) for f, df in tau.pairs]


def test_prolong_examples(K5):
    assert pair_strings(prolong(system(K5, ("x",), "x"))) == [("x", "y1")]
    tau = prolong(system(K5, ("x",), "x^2 - t"))
    f, df = tau.pairs[0]
    assert df == parse_dpoly("2*x*y1 - 1", tau.ring)
    tau = prolong(system(K5, ("x1", "x2"), "x1*x2 - 1"))
    assert tau.pairs[0][1] == parse_dpoly("x2*y1 + x1*y2", tau.ring)


def test_derivatives_refused(K5):
    with pytest.raises(errors.DerivativeVariablePresent):
        system(K5, ("x",), "x' + x")


def test_lift_point(K3c):
    c, t = K3c.gen("c"), K3c.t
    assert lift_point((K3c.zero(),)) == (0, 0)
    assert lift_point((t,)) == (t, 1)
    assert lift_point((c * t ** 2,)) == (c * t ** 2, 2 * c * t)


def test_check_membership(K5):
    t = K5.t
    tau = prolong(system(K5, ("x",), "x^2 - t^2"))
    assert check_membership(lift_point((t,)), tau)
    assert not check_membership((t, K5(2)), tau)
    assert check_membership(lift_point((K5.zero(),)), prolong(system(K5, ("x",), "x")))
    with pytest.raises(errors.ArityMismatch):
        check_membership((t,), tau)


def test_linear_in_y():
    K = make_presentation(5, ["c"])
    rng = random.Random(4)
    R = DiffRing(K, ("x1", "x2"))
    for _ in range(20):
        f = random_dpoly(R, rng, max_order=0, max_degree=3)
        tau = prolong(AlgebraicSystem(R, [f]))
        df = tau.pairs[0][1]
        for mono in df.terms:
            assert sum(e for v, e in mono if v.var >= 2) <= 1


def test_formal_compatibility_and_lifts():
    K = make_presentation(5, ["c"])
    rng = random.Random(8)
    R = DiffRing(K, ("x1", "x2"))
    for _ in range(20):
        polys = [random_dpoly(R, rng, max_order=0, max_degree=2, coeff_degree=2) for _ in range(2)]
        tau = prolong(AlgebraicSystem(R, polys))
        assert formally_compatible(tau)
        a = (random_element(K, rng), random_element(K, rng))
        shifted = [f - R.const(evaluate(f, a)) for f in polys]
        assert check_membership(lift_point(a), prolong(AlgebraicSystem(R, shifted)))


def test_compatibility_detects_corruption(K5):
    tau = prolong(system(K5, ("x",), "x^2 - t"))
    f, df = tau.pairs[0]
    corrupted = type(tau)(tau.base, tau.ring, ((f, df + tau.ring.one()),))
    assert not formally_compatible(corrupted)
    assert substitute_derivatives(df, tau) == parse_dpoly("2*x*x' - 1", tau.base.ring)
