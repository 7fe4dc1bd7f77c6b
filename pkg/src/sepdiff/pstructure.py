"""p-monomials, (differential) p-independence, p-bases and lambda-functions.

For ``K = GF(p)(c1..cm)(t)`` with dt = 1 the constants are
``C_K = GF(p)(c1..cm, t^p)``, so ``(c1..cm)`` is a differential p-basis and
the differential degree of imperfection is ``m``.  With the trivial
derivation every element is constant and all generators form the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import errors
from .field import (FieldPresentation, RationalFunction, is_constant, p_coordinates,
                    pth_power_rank, pth_root, solve_over_pth_powers)


@dataclass(frozen=True)
class PMonomialSet:
    source: tuple
    exponents: tuple
    monomials: tuple

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


def p_monomials(A, K=None):
    """All products ``a1^i1 * ... * an^in`` with ``0 <= ik < p``.

    The last entry varies fastest, e.g. ``(c, t)`` gives ``1, t, c, c*t``.
    """
    A = tuple(A)
    if K is None:
        if not A:
            raise ValueError("the field is required for the empty tuple")
        K = A[0].field
    exponents = tuple(product(range(K.p), repeat=len(A)))
    powers = [[K.one()] for _ in A]
    for k, a in enumerate(A):
        for _ in range(1, K.p):
            powers[k].append(powers[k][-1] * a)
    monomials = []
    for exps in exponents:
        m = K.one()
        for k, e in enumerate(exps):
            if e:
                m = m * powers[k][e]
        monomials.append(m)
    return PMonomialSet(A, exponents, tuple(monomials))


def is_p_independent(A, K=None):
    A = tuple(A)
    if not A:
        return True
    K = K or A[0].field
    if len(A) > K.nvars:
        # [K : K^p] = p^nvars bounds the number of p-independent elements
        return False
    coords = [p_coordinates(m) for m in p_monomials(A, K)]
    return pth_power_rank(coords) == len(coords)


def is_diff_p_independent(A, K=None):
    A = tuple(A)
    return all(is_constant(a) for a in A) and is_p_independent(A, K)


def degree_of_imperfection(K):
    """``(epsilon, e)`` with ``[C_K : K^p] = p^epsilon`` and ``[K : K^p] = p^e``."""
    return K.m if K.has_diff_gen else K.nvars, K.nvars


def differential_p_basis(K):
    names = K.constant_gens
    return tuple(K.gen(name) for name in names)


# -- lambda-functions ---------------------------------------------------------


@dataclass(frozen=True)
class LambdaResult:
    values: tuple
    case: str
    monomials: PMonomialSet | None = None

    def reconstruct(self):
        K = self.values[0].field
        total = K.zero()
        for value, m in zip(self.values, self.monomials):
            if value:
                total = total + value ** K.p * m
        return total


def _solve_lambda(b, monomials):
    coords = [p_coordinates(m) for m in monomials]
    solution = solve_over_pth_powers(coords, p_coordinates(b))
    if solution is None:
        return None
    roots = tuple(pth_root(x) for x in solution)
    if any(r is None for r in roots):
        raise errors.InvariantBreach("lambda coefficient outside K^p")
    return roots


def lambda_finite(b, K=None):
    """Differential lambda-functions of ``b`` w.r.t. the standard differential p-basis."""
    K = K or b.field
    basis = differential_p_basis(K)
    monomials = p_monomials(basis, K)
    zeros = tuple(K.zero() for _ in monomials)
    if not is_constant(b):
        return LambdaResult(zeros, "non-constant", monomials)
    roots = _solve_lambda(b, monomials)
    if roots is None:
        raise errors.InvariantBreach("constant outside the span of the p-basis monomials")
    return LambdaResult(roots, "solved", monomials)


def lambda_infinite(A, b):
    """The lambda-functions ``l_{n,i}(a1..an; b)`` for ``n = len(A)``."""
    A = tuple(A)
    K = b.field
    monomials = p_monomials(A, K)
    zeros = tuple(K.zero() for _ in monomials)
    if not all(is_constant(a) for a in A + (b,)):
        return LambdaResult(zeros, "non-constant", monomials)
    if not is_p_independent(A, K):
        return LambdaResult(zeros, "dependent", monomials)
    if is_p_independent(A + (b,), K):
        return LambdaResult(zeros, "independent", monomials)
    roots = _solve_lambda(b, monomials)
    if roots is None:
        raise errors.InvariantBreach("p-dependent tuple without a solution")
    return LambdaResult(roots, "solved", monomials)


# -- presentation constructions -------------------------------------------------


def extend_with_constants(K, names):
    """Adjoin new constant generators (transcendental, derivative zero)."""
    names = tuple(names)
    return FieldPresentation(K.p, K.constant_gens + names, K.has_diff_gen)


@dataclass(frozen=True)
class RewriteMap:
    """Embedding of the old presentation into the new one, by generator images."""

    source: FieldPresentation
    target: FieldPresentation
    images: dict = field(default_factory=dict)

    def __call__(self, a):
        src = self.source
        tgt = self.target
        gens = [self.images.get(name) or tgt.gen(name) for name in src.gens]

        def apply(poly):
            total = tgt.zero()
            for exps, c in poly.terms.items():
                term = tgt(c)
                for g, e in zip(gens, exps):
                    if e:
                        term = term * g ** e
                total = total + term
            return total

        return apply(a.num) / apply(a.den)


def _fresh_name(K, base="r"):
    if base not in K.gens:
        return base
    k = 1
    while f"{base}{k}" in K.gens:
        k += 1
    return f"{base}{k}"


def adjoin_pth_root(K, target, root_name=None):
    """Adjoin a p-th root of a constant generator: ``target`` becomes ``r^p``."""
    if target not in K.constant_gens:
        raise errors.NotAConstantGenerator(f"{target!r} is not a constant generator")
    name = root_name or _fresh_name(K)
    if name in K.gens and name != target:
        raise errors.DuplicateGeneratorName(f"{name!r} is already a generator")
    gens = tuple(name if g == target else g for g in K.constant_gens)
    new = FieldPresentation(K.p, gens, K.has_diff_gen)
    rewrite = RewriteMap(K, new, {target: new.gen(name) ** K.p})
    return new, rewrite
