"""Ritt reduction with checkable certificates, and membership in [f]:s_f^oo.

Everything here works in a ring with a single differential indeterminate.
A :class:`ReductionCertificate` for ``(g, f)`` records exponents ``n, m``,
cofactors ``h_j`` of the derivatives of ``f``, a quotient ``q`` and a
remainder ``r`` such that

    i_f^m * s_f^n * g == i_f^m * sum_j h_j * delta^j(f) + q * f + r

holds exactly in K{x}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import errors
from .diffpoly import (DerivVar, DiffPoly, delta, degree, initial, leader, order, partial,
                       rank_lower, separant)


def _check_univariate(*polys):
    for f in polys:
        if f.ring.arity != 1:
            raise errors.MultivariateInput("reduction is implemented for one differential indeterminate")


def _require_nonconstant(f):
    if f.is_zero():
        raise errors.ZeroPolynomial("cannot reduce by the zero polynomial")
    if f.in_K():
        raise errors.ElementOfK("cannot reduce by an element of K")


@dataclass(frozen=True)
class ReductionCertificate:
    n: int
    m: int
    cofactors: dict = field(default_factory=dict)
    quotient: DiffPoly | None = None
    remainder: DiffPoly | None = None

    def to_record(self):
        lines = [f"n = {self.n}", f"m = {self.m}"]
        for j in sorted(self.cofactors):
            lines.append(f"cofactor[{j}] = {self.cofactors[j]}")
        lines.append(f"quotient = {self.quotient}")
        lines.append(f"remainder = {self.remainder}")
        return lines

    @classmethod
    def from_record(cls, lines, ring):
        from .parsing import parse_dpoly

        values = {}
        cofactors = {}
        for line in lines:
            key, _, value = line.partition(" = ")
            key = key.strip()
            if key.startswith("cofactor["):
                cofactors[int(key[len("cofactor["):-1])] = parse_dpoly(value, ring)
            elif key in ("n", "m"):
                values[key] = int(value)
            elif key in ("quotient", "remainder"):
                values[key] = parse_dpoly(value, ring)
        return cls(values["n"], values["m"], cofactors, values["quotient"], values["remainder"])


def partial_remainder(g, f):
    """Eliminate derivatives of order above ``order(f)``.

    Returns ``(n, g1, cofactors)`` with
    ``s_f^n * g == sum_j cofactors[j] * delta^j(f) + g1`` and
    ``order(g1) <= order(f)``.
    """
    _check_univariate(g, f)
    _require_nonconstant(f)
    s = separant(f)
    if s.is_zero():
        raise errors.ZeroSeparant(f"separant of {f} is zero")
    o = order(f)
    s_unit = s.in_K()
    s_inv = s.constant_value().inverse() if s_unit else None
    n = 0
    cofactors = {}
    derivs = {0: f}
    cur = g
    while not cur.is_zero() and order(cur) > o:
        k = order(cur) - o
        for j in range(len(derivs), k + 1):
            derivs[j] = delta(derivs[j - 1])
        top = DerivVar(0, o + k)
        d = cur.degree_in(top)
        # delta^k f = s_f * top + (terms of lower order)
        lead = cur.coeffs_in(top)[d].mul_var(top, d - 1)
        if s_unit:
            c = lead.scale(s_inv)
            cur = cur - c * derivs[k]
        else:
            c = lead
            cur = s * cur - c * derivs[k]
            cofactors = {j: s * h for j, h in cofactors.items()}
            n += 1
        h = cofactors.get(k)
        cofactors[k] = c if h is None else h + c
        if cofactors[k].is_zero():
            del cofactors[k]
    return n, cur, cofactors


def pseudo_remainder(h, f):
    """Algebraic division by ``f`` in its leader.

    Returns ``(m, q, h0)`` with ``i_f^m * h == q * f + h0`` and ``h0`` zero or
    of rank below ``rank(f)``.
    """
    _require_nonconstant(f)
    if not h.is_zero() and order(h) > order(f):
        raise errors.OrderTooHigh(f"order of {h} exceeds order of {f}")
    v = leader(f)
    d = degree(f)
    ini = initial(f)
    ini_unit = ini.in_K()
    ini_inv = ini.constant_value().inverse() if ini_unit else None
    ring = f.ring
    m = 0
    q = ring.zero()
    cur = h
    while not cur.is_zero():
        dc = cur.degree_in(v)
        if dc < d:
            break
        lead = cur.coeffs_in(v)[dc].mul_var(v, dc - d)
        if ini_unit:
            c = lead.scale(ini_inv)
            cur = cur - c * f
            q = q + c
        else:
            cur = ini * cur - lead * f
            q = ini * q + lead
            m += 1
    return m, q, cur


def full_reduce(g, f):
    n, g1, cofactors = partial_remainder(g, f)
    m, q, r = pseudo_remainder(g1, f)
    return ReductionCertificate(n, m, cofactors, q, r)


def verify_certificate(cert, g, f):
    """Check the certificate identity by expansion."""
    try:
        s = separant(f)
        ini = initial(f)
    except errors.SepdiffError:
        return False
    if cert.n < 0 or cert.m < 0 or cert.quotient is None or cert.remainder is None:
        return False
    ring = f.ring
    lhs = ini ** cert.m * s ** cert.n * g
    acc = ring.zero()
    df = f
    top = max(cert.cofactors, default=0)
    for j in range(1, top + 1):
        df = delta(df)
        h = cert.cofactors.get(j)
        if h is not None:
            acc = acc + h * df
    rhs = ini ** cert.m * acc + cert.quotient * f + cert.remainder
    if lhs != rhs:
        return False
    r = cert.remainder
    if r.is_zero():
        return True
    return order(r) <= order(f) and rank_lower(r, f)


# -- irreducibility gate ----------------------------------------------------


class Irreducibility(Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: Irreducibility
    factor: DiffPoly | None = None
    reason: str = ""


def _univariate_gcd(a, b, v):
    """Monic gcd over K of two polynomials involving only the variable ``v``."""
    while not b.is_zero():
        db = b.degree_in(v)
        lcb = b.coeffs_in(v)[db].constant_value().inverse()
        while not a.is_zero() and a.degree_in(v) >= db:
            da = a.degree_in(v)
            lead = a.coeffs_in(v)[da].mul_var(v, da - db).scale(lcb)
            a = a - lead * b
        a, b = b, a
    if a.is_zero():
        return a
    return a.scale(a.coeffs_in(v)[a.degree_in(v)].constant_value().inverse())


def check_irreducible_heuristic(f):
    """Sound sufficient tests for irreducibility, plus cheap factor detection."""
    _require_nonconstant(f)
    variables = f.variables()
    if f.total_degree() == 1:
        return IrreducibilityVerdict(Irreducibility.IRREDUCIBLE, reason="total degree 1")
    # a variable dividing every term splits off
    for v in sorted(variables, key=DerivVar.key):
        if all(any(w == v for w, _ in mono) for mono in f.terms):
            return IrreducibilityVerdict(Irreducibility.REDUCIBLE, _var_poly(f, v),
                                         reason="every term divisible by a variable")
    for v in sorted(variables, key=DerivVar.key):
        coeffs = f.coeffs_in(v)
        if f.degree_in(v) == 1 and coeffs[1].in_K():
            return IrreducibilityVerdict(Irreducibility.IRREDUCIBLE,
                                         reason="degree 1 in a variable with unit coefficient")
    # Eisenstein at the prime w of K[...] for f viewed in v
    for v in sorted(variables, key=DerivVar.key):
        coeffs = f.coeffs_in(v)
        top = f.degree_in(v)
        if top < 1 or not coeffs[top].in_K():
            continue
        for w in sorted(variables - {v}, key=DerivVar.key):
            lower = [c for k, c in coeffs.items() if k < top]
            if 0 not in coeffs:
                continue
            if all(all(any(u == w for u, _ in mono) for mono in c.terms) for c in lower):
                c0 = coeffs[0]
                if not all(any(u == w and e >= 2 for u, e in mono) for mono in c0.terms):
                    return IrreducibilityVerdict(Irreducibility.IRREDUCIBLE,
                                                 reason="Eisenstein at a derivative variable")
    if len(variables) == 1:
        (v,) = variables
        g = _univariate_gcd(f, partial(f, v), v)
        if not g.is_zero() and not g.in_K() and g.degree_in(v) < f.degree_in(v):
            return IrreducibilityVerdict(Irreducibility.REDUCIBLE, g, reason="repeated factor")
    return IrreducibilityVerdict(Irreducibility.UNKNOWN, reason="outside the sufficient criteria")


def _var_poly(f, v):
    return DiffPoly(f.ring, {((v, 1),): f.ring.field.one()})


class Provenance(Enum):
    VERIFIED_HEURISTIC = "verified-heuristic"
    ASSERTED = "asserted-by-caller"


@dataclass(frozen=True)
class SatIdeal:
    """The saturated differential ideal [f]:s_f^oo of an irreducible ``f``."""

    f: DiffPoly
    provenance: Provenance
    separant: DiffPoly

    @property
    def ring(self):
        return self.f.ring


def make_satideal(f, assert_irreducible=False):
    _check_univariate(f)
    _require_nonconstant(f)
    s = separant(f)
    if s.is_zero():
        raise errors.ZeroSeparant(f"separant of {f} is zero")
    verdict = check_irreducible_heuristic(f)
    if verdict.status is Irreducibility.REDUCIBLE:
        raise errors.Reducible(f"{f} is reducible (factor {verdict.factor})", verdict.factor)
    if verdict.status is Irreducibility.IRREDUCIBLE:
        return SatIdeal(f, Provenance.VERIFIED_HEURISTIC, s)
    if assert_irreducible:
        return SatIdeal(f, Provenance.ASSERTED, s)
    raise errors.IrreducibilityUnknown(
        f"cannot verify that {f} is irreducible; pass an explicit assertion")


def member(g, P):
    """Decide ``g in [f]:s_f^oo`` by full Ritt reduction."""
    _check_univariate(g)
    if g.is_zero():
        return True
    return full_reduce(g, P.f).remainder.is_zero()


def member_with_certificate(g, P):
    cert = full_reduce(g, P.f)
    return cert.remainder.is_zero(), cert
