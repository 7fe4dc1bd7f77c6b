"""The fraction field of K{x}/P for P = [f]:s_f^oo, and SDCF witnesses.

Elements are unnormalized fractions ``num/den`` of differential
polynomials; equality and zero tests go through :func:`member`, which is
exact because P is prime for irreducible ``f`` with nonzero separant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import errors
from .diffpoly import DiffPoly, delta, order, rank, rank_lower, separant
from .reduction import SatIdeal, full_reduce, make_satideal, member


@dataclass(frozen=True, eq=False)
class QuotientElement:
    ideal: SatIdeal
    num: DiffPoly
    den: DiffPoly

    def _check(self, other):
        if not isinstance(other, QuotientElement):
            other = image(self.ideal.ring.coerce(other), self.ideal)
        if other.ideal is not self.ideal and other.ideal != self.ideal:
            raise errors.MixedIdeals("quotient elements over different ideals")
        return other

    def __add__(self, other):
        return q_add(self, self._check(other))

    def __sub__(self, other):
        return q_add(self, q_neg(self._check(other)))

    def __mul__(self, other):
        return q_mul(self, self._check(other))

    def __neg__(self):
        return q_neg(self)

    def __truediv__(self, other):
        return q_mul(self, q_inv(self._check(other)))

    def representative(self):
        """Reduced numerator and denominator, for display only."""
        f = self.ideal.f
        return full_reduce(self.num, f).remainder, full_reduce(self.den, f).remainder

    def __str__(self):
        num, den = self.representative()
        if den == 1:
            return str(num)
        return f"({num})/({den})"


def image(g, P):
    """The class of ``g`` in K{x}/P, inside its fraction field."""
    g = P.ring.coerce(g)
    return QuotientElement(P, g, P.ring.one())


def generic_point(P):
    return image(P.ring.x(0), P)


def _same(a, b):
    if a.ideal is not b.ideal and a.ideal != b.ideal:
        raise errors.MixedIdeals("quotient elements over different ideals")


def q_add(a, b):
    _same(a, b)
    if a.den == b.den:
        return QuotientElement(a.ideal, a.num + b.num, a.den)
    return QuotientElement(a.ideal, a.num * b.den + b.num * a.den, a.den * b.den)


def q_neg(a):
    return QuotientElement(a.ideal, -a.num, a.den)


def q_mul(a, b):
    _same(a, b)
    return QuotientElement(a.ideal, a.num * b.num, a.den * b.den)


def q_is_zero(a):
    return member(a.num, a.ideal)


def q_inv(a):
    if q_is_zero(a):
        raise errors.DivisionByZeroClass("inverse of the zero class")
    return QuotientElement(a.ideal, a.den, a.num)


def q_eq(a, b):
    _same(a, b)
    return member(a.num * b.den - b.num * a.den, a.ideal)


def q_delta(a):
    num = delta(a.num) * a.den - a.num * delta(a.den)
    return QuotientElement(a.ideal, num, a.den * a.den)


# -- SDCF witnesses -----------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    ideal: SatIdeal
    g: DiffPoly
    generic_point: QuotientElement
    f_value_zero: bool
    g_value_nonzero: bool
    separability_flag: bool
    precondition_log: tuple = field(default_factory=tuple)

    def recheck(self):
        a = self.generic_point
        return (member(self.ideal.f, a.ideal) == self.f_value_zero
                and (not member(self.g, a.ideal)) == self.g_value_nonzero)

    def to_record(self):
        lines = [
            f"ideal.f = {self.ideal.f}",
            f"g = {self.g}",
            f"generic_point = {self.generic_point}",
            f"f_at_a = {'0' if self.f_value_zero else 'nonzero'}",
            f"g_at_a = {'nonzero' if self.g_value_nonzero else '0'}",
            f"separant_nonzero = {str(self.separability_flag).lower()}",
            f"irreducibility = {self.ideal.provenance.value}",
        ]
        for i, entry in enumerate(self.precondition_log):
            lines.append(f"precondition[{i}] = {entry}")
        return lines


def sdcf_witness(f, g, assert_irreducible=False):
    """Build the generic zero of ``f`` in Frac(K{x}/[f]:s_f^oo) and check ``g`` there.

    ``g`` must have lower order than ``f``; equal order is accepted when
    ``rank(g) < rank(f)``, which still keeps ``g`` out of the ideal.
    """
    if f.is_zero() or g.is_zero():
        raise errors.ZeroInput("f and g must be nonzero")
    if f.in_K():
        raise errors.ElementOfK("f must not lie in K")
    log = []
    s = separant(f)
    if s.is_zero():
        raise errors.ZeroSeparant(f"separant of {f} is zero")
    log.append("separant(f) != 0")
    og, of = order(g), order(f)
    if og < of:
        log.append(f"order(g) = {og} < order(f) = {of}")
    elif og == of and rank_lower(g, f):
        r = rank(g)
        log.append(f"order(g) = order(f) = {of}, rank(g) = ({r.order},{r.degree}) < rank(f)")
    else:
        raise errors.OrderNotLower(f"order(g) = {og} is not below order(f) = {of}")
    P = make_satideal(f, assert_irreducible=assert_irreducible)
    log.append(f"irreducible({P.provenance.value})")
    a = generic_point(P)
    f_zero = q_is_zero(image(f, P))
    g_nonzero = not q_is_zero(image(g, P))
    sep = separating_basis_check(P)
    if not (f_zero and g_nonzero and sep):
        raise errors.InvariantBreach("generic point failed its own witness checks")
    return WitnessReport(P, g, a, f_zero, g_nonzero, sep, tuple(log))


def separating_basis_check(P):
    """Audit that the stored separant is outside P."""
    return not member(P.separant, P)
