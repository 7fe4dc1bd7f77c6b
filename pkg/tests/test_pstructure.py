import random

import pytest

from sepdiff import errors
from sepdiff.field import frobenius, is_constant, make_presentation
from sepdiff.pstructure import (adjoin_pth_root, degree_of_imperfection, differential_p_basis,
                                extend_with_constants, is_diff_p_independent, is_p_independent,
                                lambda_finite, lambda_infinite, p_monomials)
from sepdiff.sampling import random_constant, random_element


@pytest.fixture
def K2c():
    return make_presentation(2, ["c"])


def test_p_monomials(K3c, K2c):
    c = K3c.gen("c")
    assert p_monomials((c,)).monomials == (1, c, c ** 2)
    assert p_monomials((), K3c).monomials == (1,)
    c2, t2 = K2c.gen("c"), K2c.t
    assert p_monomials((c2, t2)).monomials == (1, t2, c2, c2 * t2)


def test_p_independence(K3c, K2c):
    assert is_p_independent((K3c.gen("c"),))
    assert not is_p_independent((K2c.t ** 2,))
    assert not is_p_independent((K3c.one(),))
    assert is_p_independent((K3c.gen("c"), K3c.t))
    assert not is_p_independent((K3c.gen("c"), K3c.t, K3c.t + K3c.gen("c")))


def test_diff_p_independence(K3c):
    c, t = K3c.gen("c"), K3c.t
    assert is_diff_p_independent((c,))
    assert not is_diff_p_independent((t,))
    assert not is_diff_p_independent((t ** 3,))


def test_degree_examples():
    assert degree_of_imperfection(make_presentation(3, ["c"])) == (1, 2)
    assert degree_of_imperfection(make_presentation(5)) == (0, 1)
    assert degree_of_imperfection(make_presentation(2, ["t1", "t2"], False)) == (2, 2)


def test_degree_agrees_with_elimination():
    # constants of GF(3)(c)(t): c is p-independent, (c, t^3) is not since t^3 is a cube
    K = make_presentation(3, ["c"])
    rng = random.Random(5)
    c = K.gen("c")
    for _ in range(20):
        b = random_constant(K, rng)
        assert not is_p_independent((c, b)) or not is_constant(b)
    assert is_p_independent((c, K.t))


def test_basis_examples():
    K = make_presentation(3, ["c"])
    assert differential_p_basis(K) == (K.gen("c"),)
    assert differential_p_basis(make_presentation(5)) == ()
    L = make_presentation(2, ["a", "b"], False)
    assert differential_p_basis(L) == (L.gen("a"), L.gen("b"))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("m", [0, 1, 2])
@pytest.mark.parametrize("has_t", [True, False])
def test_basis_is_diff_independent(p, m, has_t):
    K = make_presentation(p, [f"c{i}" for i in range(m)], has_t)
    basis = differential_p_basis(K)
    assert len(basis) == degree_of_imperfection(K)[0]
    assert is_diff_p_independent(basis, K)


def test_lambda_finite_examples(K3c):
    c, t = K3c.gen("c"), K3c.t
    res = lambda_finite(t)
    assert res.case == "non-constant" and all(not v for v in res.values)
    assert lambda_finite(c ** 2).values == (0, 0, 1)
    assert lambda_finite(t ** 3).values == (t, 0, 0)


def test_lambda_finite_reconstruction(K3c):
    rng = random.Random(11)
    for _ in range(30):
        b = random_constant(K3c, rng)
        res = lambda_finite(b)
        assert res.case == "solved"
        # oracle: expand sum l_i^3 * c^i directly
        c = K3c.gen("c")
        assert sum((v ** 3 * c ** i for i, v in enumerate(res.values)), K3c.zero()) == b


def test_lambda_infinite_examples(K3c, K2c):
    assert lambda_infinite((K3c.t,), K3c.gen("c")).case == "non-constant"
    res = lambda_infinite((K2c.t ** 2,), K2c.gen("c"))
    assert res.case == "dependent" and all(not v for v in res.values)
    c = K3c.gen("c")
    res = lambda_infinite((c,), c ** 2)
    assert res.case == "solved" and res.values == (0, 0, 1)
    K = make_presentation(3, ["c", "d"])
    assert lambda_infinite((K.gen("c"),), K.gen("d")).case == "independent"


def test_lambda_infinite_cases_exclusive():
    K = make_presentation(3, ["c", "d"])
    rng = random.Random(3)
    seen = set()
    for _ in range(40):
        A = tuple(random_constant(K, rng, 1) for _ in range(rng.randrange(0, 3)))
        b = random_constant(K, rng, 1) if rng.random() < 0.8 else random_element(K, rng)
        res = lambda_infinite(A, b)
        seen.add(res.case)
        if res.case == "solved":
            assert res.reconstruct() == b
        else:
            assert all(not v for v in res.values)
    assert {"solved", "dependent", "independent"} <= seen


def test_extend_with_constants():
    K = make_presentation(5)
    K1 = extend_with_constants(K, ["c"])
    assert str(K1) == "GF(5)(c;t)"
    assert degree_of_imperfection(K1)[0] == 1
    K3 = make_presentation(3, ["c"])
    assert degree_of_imperfection(extend_with_constants(K3, ["d"]))[0] == 2
    assert extend_with_constants(K3, []) == K3
    with pytest.raises(errors.DuplicateGeneratorName):
        extend_with_constants(K3, ["c"])


def test_extension_is_monotone():
    K = make_presentation(3, ["c"])
    L = extend_with_constants(K, ["d"])
    A = (K.gen("c"),)
    assert is_diff_p_independent(A, K)
    assert is_diff_p_independent(tuple(L.embed(a, K) for a in A), L)


def test_adjoin_pth_root(K3c):
    new, rewrite = adjoin_pth_root(K3c, "c")
    r, t = new.gen("r"), new.t
    assert rewrite(K3c.gen("c") * K3c.t) == r ** 3 * t
    assert degree_of_imperfection(new)[0] == degree_of_imperfection(K3c)[0] == 1
    with pytest.raises(errors.NotAConstantGenerator):
        adjoin_pth_root(K3c, "t")


def test_adjoin_rewrite_is_homomorphism(K3c):
    new, rewrite = adjoin_pth_root(K3c, "c", "s")
    rng = random.Random(9)
    for _ in range(20):
        a = random_element(K3c, rng)
        b = random_element(K3c, rng)
        assert rewrite(a * b + b) == rewrite(a) * rewrite(b) + rewrite(b)
        assert rewrite(frobenius(a)) == frobenius(rewrite(a))
