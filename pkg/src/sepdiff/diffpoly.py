"""Differential polynomials K{x1, ..., xn} and their rank calculus.

A monomial is a tuple of ``(DerivVar, exponent)`` pairs sorted by
``(order, var)``; a :class:`DiffPoly` maps monomials to nonzero field
elements.  ``DerivVar(var=i, order=j)`` stands for the j-th derivative of
the i-th differential indeterminate (0-based ``var``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product
from typing import NamedTuple

from . import errors
from .field import FieldPresentation, RationalFunction, derive, format_element


class DerivVar(NamedTuple):
    var: int
    order: int

    def key(self):
        return (self.order, self.var)

    def shifted(self, k=1):
        return DerivVar(self.var, self.order + k)


class Rank(NamedTuple):
    order: int
    degree: int


def _mono_key(mono):
    return tuple((v.key(), e) for v, e in reversed(mono))


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda item: item[0].key()))


def _mono_from(d):
    return tuple(sorted(((v, e) for v, e in d.items() if e), key=lambda item: item[0].key()))


@dataclass(frozen=True)
class DiffRing:
    field: FieldPresentation
    names: tuple = ("x",)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise errors.DuplicateGeneratorName("duplicate differential variable name")
        clash = set(self.names) & set(self.field.gens)
        if clash:
            raise errors.DuplicateGeneratorName(f"variable names clash with generators: {sorted(clash)}")

    @property
    def arity(self):
        return len(self.names)

    def zero(self):
        return DiffPoly(self, {})

    def one(self):
        return self.const(self.field.one())

    def const(self, a):
        a = self.field(a)
        return DiffPoly(self, {(): a} if a else {})

    def var(self, i=0, order=0, exp=1):
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} outside arity {self.arity}")
        return DiffPoly(self, {((DerivVar(i, order), exp),): self.field.one()})

    def x(self, order=0):
        """The order-th derivative of the first indeterminate."""
        return self.var(0, order)

    def coerce(self, value):
        if isinstance(value, DiffPoly):
            if value.ring != self:
                raise TypeError("differential polynomials from different rings")
            return value
        return self.const(value)


class DiffPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic protocol ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, DiffPoly):
            if other.ring != self.ring:
                raise TypeError("differential polynomials from different rings")
            return other
        if isinstance(other, (int, RationalFunction)):
            return self.ring.const(other)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def in_K(self):
        return all(not m for m in self.terms)

    def constant_value(self):
        """The element of K represented, for polynomials with ``in_K()``."""
        return self.terms.get((), self.ring.field.zero())

    def __eq__(self, other):
        if not isinstance(other, DiffPoly):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _mono_key(item[0]), reverse=True)

    def __str__(self):
        return format_dpoly(self)

    def __repr__(self):
        return f"DiffPoly({self})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return DiffPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                out[m] = c if s is None else s + c
        return DiffPoly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, a):
        if not a:
            return self.ring.zero()
        return DiffPoly(self.ring, {m: c * a for m, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_var(self, v, exp):
        """Multiply by the power ``v**exp`` of a derivative variable."""
        if exp == 0:
            return self
        mono = ((v, exp),)
        return DiffPoly(self.ring, {_mono_mul(m, mono): c for m, c in self.terms.items()})

    # -- structure --------------------------------------------------------

    def variables(self):
        return {v for m in self.terms for v, _ in m}

    def degree_in(self, v):
        return max((e for m in self.terms for w, e in m if w == v), default=0)

    def total_degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def coeffs_in(self, v):
        """Split as ``sum_k coeff_k * v**k`` with coefficients free of ``v``."""
        out = {}
        for m, c in self.terms.items():
            k = 0
            rest = []
            for w, e in m:
                if w == v:
                    k = e
                else:
                    rest.append((w, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: DiffPoly(self.ring, t) for k, t in out.items()}

    def substitute_vars(self, mapping):
        """Rename derivative variables; ``mapping`` sends DerivVar to DerivVar."""
        terms = {}
        for m, c in self.terms.items():
            d = {}
            for v, e in m:
                w = mapping.get(v, v)
                d[w] = d.get(w, 0) + e
            key = _mono_from(d)
            s = terms.get(key)
            s = c if s is None else s + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return DiffPoly(self.ring, terms)

    def change_ring(self, ring, var_map=None):
        """Reinterpret in another ring with the same field, renumbering indeterminates."""
        var_map = var_map or {}
        terms = {}
        for m, c in self.terms.items():
            d = {}
            for v, e in m:
                w = DerivVar(var_map.get(v.var, v.var), v.order)
                d[w] = d.get(w, 0) + e
            terms[_mono_from(d)] = c
        return DiffPoly(ring, terms)


# -- the derivation ---------------------------------------------------------


def delta(f):
    """Total derivative: coefficientwise derivation plus the chain rule."""
    ring = f.ring
    out = {}

    def add(m, c):
        s = out.get(m)
        s = c if s is None else s + c
        out[m] = s

    for m, c in f.terms.items():
        dc = derive(c)
        if dc:
            add(m, dc)
        for idx, (v, e) in enumerate(m):
            k = e % ring.field.p
            if not k:
                continue
            d = dict(m)
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            w = v.shifted()
            d[w] = d.get(w, 0) + 1
            add(_mono_from(d), c * k)
    return DiffPoly(ring, {m: c for m, c in out.items() if c})


def delta_n(f, n):
    for _ in range(n):
        f = delta(f)
    return f


def partial(f, v):
    ring = f.ring
    p = ring.field.p
    out = {}
    for m, c in f.terms.items():
        for w, e in m:
            if w != v:
                continue
            if e % p == 0:
                break
            d = dict(m)
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = _mono_from(d)
            s = out.get(key)
            cc = c * (e % p)
            out[key] = cc if s is None else s + cc
            break
    return DiffPoly(ring, {m: c for m, c in out.items() if c})


# -- rank calculus ----------------------------------------------------------


def order(f):
    """Highest derivative order present; nonzero elements of K get order 0."""
    if f.is_zero():
        raise errors.ZeroPolynomial("order of the zero polynomial is undefined")
    return max((v.order for v in f.variables()), default=0)


def leader(f):
    if f.is_zero():
        raise errors.ZeroPolynomial("zero polynomial has no leader")
    vs = f.variables()
    if not vs:
        raise errors.ElementOfK("leader is undefined on elements of K")
    return max(vs, key=DerivVar.key)


def degree(f):
    return f.degree_in(leader(f))


def rank(f):
    v = leader(f)
    return Rank(v.order, f.degree_in(v))


def separant(f):
    return partial(f, leader(f))


def initial(f):
    v = leader(f)
    return f.coeffs_in(v)[f.degree_in(v)]


def rank_lower(g, f):
    """True when ``g`` is nonzero and of strictly lower rank than ``f`` (K counts as lowest)."""
    if g.is_zero():
        return False
    if g.in_K():
        return True
    return rank(g) < rank(f)


# -- evaluation -------------------------------------------------------------


def evaluate(f, point):
    """Value of ``f`` at a tuple of field elements (one per indeterminate)."""
    ring = f.ring
    K = ring.field
    point = tuple(K(a) for a in point)
    if len(point) != ring.arity:
        raise errors.ArityMismatch(f"expected {ring.arity} values, got {len(point)}")
    derivs = {}
    for v in f.variables():
        if v not in derivs:
            a = point[v.var]
            for j in range(v.order):
                a = derive(a)
            derivs[v] = a
    total = K.zero()
    for m, c in f.terms.items():
        term = c
        for v, e in m:
            term = term * derivs[v] ** e
        total = total + term
    return total


DEFAULT_BUDGET = 10_000


def _t_polys(K, degree):
    """Polynomials in t of exactly the given degree, by lead then remaining coefficients."""
    t = K.t
    for lead in range(1, K.p):
        for rest in product(range(K.p), repeat=degree):
            a = K(lead) * t ** degree
            for k, coeff in enumerate(rest):
                if coeff:
                    a = a + K(coeff) * t ** (degree - 1 - k)
            yield a


def _compositions(total, parts):
    """Exponent tuples of the given length and sum, in lexicographic order."""
    if parts <= 1:
        if parts or total == 0:
            yield (total,) * parts
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def witness_candidates(K):
    """Deterministic enumeration of field elements for nonvanishing searches."""
    for k in range(K.p):
        yield K(k)
    consts = [K.gen(name) for name in K.constant_gens]
    if not consts and not K.has_diff_gen:
        return
    for d in count(1):
        if K.has_diff_gen:
            yield from _t_polys(K, d)
        for exps in _compositions(d, len(consts)):
            mono = K.one()
            for g, e in zip(consts, exps):
                mono = mono * g ** e
            yield mono
            if K.has_diff_gen:
                for dt in range(1, d + 1):
                    for q in _t_polys(K, dt):
                        yield mono * q


def nonvanishing_witness(g, budget=DEFAULT_BUDGET):
    """First enumerated ``a`` in K with ``g(a) != 0`` (single indeterminate)."""
    if g.is_zero():
        raise errors.ZeroPolynomial("the zero polynomial vanishes everywhere")
    if g.ring.arity != 1:
        raise errors.MultivariateInput("witness search is for one indeterminate")
    for tried, a in enumerate(witness_candidates(g.ring.field)):
        if tried >= budget:
            break
        if evaluate(g, (a,)):
            return a
    raise errors.Exhausted(f"no nonvanishing point among {budget} candidates")


# -- printing ---------------------------------------------------------------


def format_derivvar(ring, v):
    name = ring.names[v.var]
    if v.order <= 2:
        return name + "'" * v.order
    return f"d({name},{v.order})"


def format_dpoly(f):
    if f.is_zero():
        return "0"
    parts = []
    for m, c in f.sorted_terms():
        cs = format_element(c)
        if not m:
            parts.append(f"({cs})" if " " in cs else cs)
            continue
        factors = []
        for v, e in reversed(m):
            s = format_derivvar(f.ring, v)
            factors.append(s if e == 1 else f"{s}^{e}")
        mono = "*".join(factors)
        if c.is_one():
            parts.append(mono)
        else:
            parts.append((f"({cs})" if (" " in cs or "/" in cs) else cs) + "*" + mono)
    return " + ".join(parts)
