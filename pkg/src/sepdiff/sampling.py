"""Random generators for field elements and differential polynomials.

All functions take an explicit ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

from itertools import product

from .diffpoly import DerivVar, DiffPoly, _mono_from
from .field import RationalFunction


def random_poly(K, rng, degree=2, density=0.5):
    terms = {}
    for exps in product(range(degree + 1), repeat=K.nvars):
        if sum(exps) <= degree and rng.random() < density:
            c = rng.randrange(K.p)
            if c:
                terms[exps] = c
    return K.poly(terms)


def random_element(K, rng, degree=2, fraction_prob=0.4):
    num = random_poly(K, rng, degree)
    if rng.random() < fraction_prob:
        den = random_poly(K, rng, degree)
        if not den.is_zero():
            return RationalFunction(K, num, den)
    return K.element(num)


def random_nonzero_element(K, rng, degree=2, fraction_prob=0.4):
    while True:
        a = random_element(K, rng, degree, fraction_prob)
        if a:
            return a


def random_constant(K, rng, degree=2, fraction_prob=0.4):
    """A random element of C_K: substitute ``t -> t^p`` into a random element."""
    a = random_element(K, rng, degree, fraction_prob)
    if not K.has_diff_gen:
        return a
    i, p = K.t_index, K.p

    def up(poly):
        return poly.map_exponents(lambda e: e[:i] + (e[i] * p,) + e[i + 1:])

    return RationalFunction(K, up(a.num), up(a.den))


def random_dpoly(ring, rng, max_order=3, max_degree=3, coeff_degree=2, nterms=4,
                 fraction_prob=0.0):
    """Sparse random element of K{x}; each monomial has degree <= max_degree per variable."""
    K = ring.field
    terms = {}
    for _ in range(nterms):
        d = {}
        for _ in range(rng.randrange(0, 3)):
            v = DerivVar(rng.randrange(ring.arity), rng.randrange(max_order + 1))
            d[v] = min(d.get(v, 0) + rng.randrange(1, max_degree + 1), max_degree)
        mono = _mono_from(d)
        c = random_element(K, rng, coeff_degree, fraction_prob)
        if c:
            s = terms.get(mono)
            s = c if s is None else s + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
    return DiffPoly(ring, terms)


def random_nonzero_dpoly(ring, rng, **kwargs):
    while True:
        f = random_dpoly(ring, rng, **kwargs)
        if f:
            return f
