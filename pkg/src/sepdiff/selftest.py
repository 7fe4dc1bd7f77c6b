"""Randomized property suites run by ``sepdiff selftest``.

Each suite returns ``(passed, total)``.  Suites are independent and seeded
from ``(seed, suite index)``, so results do not depend on execution order.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor

from .diffpoly import DerivVar, DiffRing, delta, evaluate, order, partial, separant
from .field import frobenius, is_constant, make_presentation, p_coordinates, pth_root
from .prolongation import AlgebraicSystem, check_membership, formally_compatible, lift_point, prolong
from .pstructure import (adjoin_pth_root, degree_of_imperfection, differential_p_basis,
                         extend_with_constants, is_diff_p_independent, lambda_finite)
from .quotient import sdcf_witness
from .reduction import full_reduce, make_satideal, member, verify_certificate
from .sampling import random_constant, random_dpoly, random_element, random_nonzero_dpoly


def suite_lemma33(rng, count):
    K = make_presentation(5)
    R = DiffRing(K)
    passed = 0
    for _ in range(count):
        f = random_nonzero_dpoly(R, rng, max_order=3, max_degree=3, coeff_degree=2)
        df = delta(f)
        top = order(df) if df else 0
        ok = True
        for i in range(top + 1):
            v = DerivVar(0, i)
            lhs = partial(df, v)
            rhs = delta(partial(f, v))
            if i > 0:
                rhs = rhs + partial(f, DerivVar(0, i - 1))
            ok = ok and lhs == rhs
        passed += ok
    return passed, count


def random_reducer(R, rng, max_order=3, max_degree=3):
    while True:
        f = random_dpoly(R, rng, max_order=max_order, max_degree=max_degree, coeff_degree=1,
                         nterms=3)
        if f and not f.in_K() and separant(f):
            return f


def suite_certificates(rng, count):
    K = make_presentation(5)
    R = DiffRing(K)
    passed = 0
    for _ in range(count):
        f = random_reducer(R, rng, max_order=2, max_degree=2)
        g = random_dpoly(R, rng, max_order=3, max_degree=2, coeff_degree=1, nterms=3)
        cert = full_reduce(g, f)
        passed += verify_certificate(cert, g, f)
    return passed, count


def _membership_setup():
    K = make_presentation(5)
    R = DiffRing(K)
    x0, x1 = R.x(0), R.x(1)
    f = x1 ** 2 - x0
    return R, f, make_satideal(f)


def random_member(R, f, rng):
    total = R.zero()
    df = f
    for _ in range(3):
        h = random_dpoly(R, rng, max_order=2, max_degree=2, coeff_degree=1, nterms=2)
        total = total + h * df
        df = delta(df)
    return total


def random_below(R, f, rng):
    """Nonzero polynomial of rank below ``x'^2 - x``: order <= 1, degree <= 1 in x'."""
    K = R.field
    while True:
        g = R.zero()
        for k in range(3):
            g = g + R.const(random_element(K, rng, 1, 0.2)) * R.x(0) ** k
            g = g + R.const(random_element(K, rng, 1, 0.2)) * R.x(0) ** k * R.x(1)
        if g:
            return g


def suite_membership(rng, count):
    R, f, P = _membership_setup()
    passed = 0
    for _ in range(count):
        passed += member(random_member(R, f, rng), P)
        passed += not member(random_below(R, f, rng), P)
    return passed, 2 * count


def suite_primality(rng, count):
    R, f, P = _membership_setup()
    passed = 0
    for _ in range(count):
        g = random_member(R, f, rng)
        h = random_dpoly(R, rng, max_order=2, max_degree=2, coeff_degree=1, nterms=3)
        if rng.random() < 0.5:
            g, h = h, g
        gh_in = member(g * h, P)
        passed += (not gh_in) or member(g, P) or member(h, P)
    return passed, count


def suite_lambda(rng, count):
    K = make_presentation(3, ["c"])
    passed = total = 0
    for _ in range(count):
        b = random_constant(K, rng)
        res = lambda_finite(b)
        passed += res.case == "solved" and res.reconstruct() == b
        nb = random_element(K, rng)
        while is_constant(nb):
            nb = random_element(K, rng)
        res = lambda_finite(nb)
        passed += res.case == "non-constant" and all(not v for v in res.values)
        total += 2
    return passed, total


def suite_degrees(rng, count):
    passed = total = 0
    for p in (2, 3, 5):
        for m in range(4):
            names = [f"c{i}" for i in range(1, m + 1)]
            for has_t in (True, False):
                K = make_presentation(p, names, has_t)
                eps, e = degree_of_imperfection(K)
                ok = eps == m and e == m + has_t
                ok = ok and len(differential_p_basis(K)) == eps
                ok = ok and is_diff_p_independent(differential_p_basis(K), K)
                if m:
                    K2, _ = adjoin_pth_root(K, names[0])
                    ok = ok and degree_of_imperfection(K2)[0] == eps
                K3 = extend_with_constants(K, ["d1", "d2"])
                ok = ok and degree_of_imperfection(K3)[0] == eps + 2
                passed += ok
                total += 1
    return passed, total


def suite_witness(rng, count):
    K = make_presentation(5)
    R = DiffRing(K)
    x = R.x
    cases = [(x(m + 1), x(m)) for m in range(3)]
    f = x(1) ** 2 - x(0)
    cases += [(f, x(0)), (f, x(1)), (f, R.const(K.t))]
    passed = 0
    for f, g in cases:
        report = sdcf_witness(f, g)
        passed += report.f_value_zero and report.g_value_nonzero and report.recheck()
    return passed, len(cases)


def suite_prolongation(rng, count):
    K = make_presentation(5, ["c"])
    passed = total = 0
    for _ in range(count):
        n = rng.randrange(1, 3)
        names = ("x",) if n == 1 else ("x1", "x2")
        R = DiffRing(K, names)
        polys = tuple(random_dpoly(R, rng, max_order=0, max_degree=3, coeff_degree=2)
                      for _ in range(rng.randrange(1, 3)))
        tau = prolong(AlgebraicSystem(R, polys))
        passed += formally_compatible(tau)
        # build a system vanishing at a chosen point
        a = tuple(random_element(K, rng) for _ in range(n))
        shifted = tuple(f - R.const(evaluate(f, a)) for f in polys)
        tau = prolong(AlgebraicSystem(R, shifted))
        passed += check_membership(lift_point(a), tau)
        total += 2
    return passed, total


def suite_frobenius(rng, count):
    K = make_presentation(3, ["c"])
    passed = 0
    for _ in range(count):
        a = random_element(K, rng)
        ok = pth_root(frobenius(a)) == a
        r = pth_root(a)
        ok = ok and (r is None or frobenius(r) == a)
        coords = p_coordinates(a)
        ok = ok and coords.reconstruct() == a
        ok = ok and all(pth_root(x) is not None for x in coords.entries)
        passed += ok
    return passed, count


SUITES = [
    ("lemma33", suite_lemma33, 40),
    ("certificates", suite_certificates, 40),
    ("membership", suite_membership, 20),
    ("primality", suite_primality, 20),
    ("lambda", suite_lambda, 40),
    ("degrees", suite_degrees, 1),
    ("witness", suite_witness, 1),
    ("prolongation", suite_prolongation, 30),
    ("frobenius", suite_frobenius, 100),
]


def run_selftest(seed=0, scale=1.0, workers=1):
    """Run every suite; returns a list of ``(name, passed, total)`` in suite order."""

    def run(index):
        name, fn, count = SUITES[index]
        rng = random.Random(seed * 1000 + index)
        passed, total = fn(rng, max(1, int(count * scale)))
        return name, passed, total

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(run, range(len(SUITES))))
    return [run(i) for i in range(len(SUITES))]
