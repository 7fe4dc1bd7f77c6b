"""The coefficient field K = GF(p)(c1, ..., cm)(t).

Elements are reduced fractions of :class:`~sepdiff.gfpoly.Poly` values.
The constant generators ``ci`` have derivative zero; the optional
generator ``t`` has derivative one.  Without ``t`` the derivation is
identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import errors
from .gfpoly import Poly, gcd


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldPresentation:
    p: int
    constant_gens: tuple = ()
    has_diff_gen: bool = True

    def __post_init__(self):
        object.__setattr__(self, "constant_gens", tuple(self.constant_gens))
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise errors.NonPrimeCharacteristic(f"characteristic {self.p} is not prime")
        seen = set()
        for name in self.constant_gens:
            if not name:
                raise errors.ReservedName("generator names must be nonempty")
            if name == "t":
                raise errors.ReservedName("'t' is reserved for the differential generator")
            if name in seen:
                raise errors.DuplicateGeneratorName(f"duplicate generator {name!r}")
            seen.add(name)

    @property
    def m(self):
        return len(self.constant_gens)

    @property
    def gens(self):
        return self.constant_gens + (("t",) if self.has_diff_gen else ())

    @property
    def nvars(self):
        return len(self.gens)

    @property
    def t_index(self):
        return self.m if self.has_diff_gen else None

    # -- element constructors ---------------------------------------------

    def poly(self, terms=None):
        return Poly(self.p, self.nvars, terms)

    def element(self, num, den=None):
        if den is None:
            return RationalFunction(self, num, self.poly().one(), _reduced=True)
        return RationalFunction(self, num, den)

    def __call__(self, value):
        """Coerce an integer (or an element of this field) into the field."""
        if isinstance(value, RationalFunction):
            if value.field != self:
                raise TypeError("element belongs to a different presentation")
            return value
        return self.element(Poly.constant(self.p, self.nvars, value))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self, name):
        try:
            i = self.gens.index(name)
        except ValueError:
            raise KeyError(name) from None
        return self.element(Poly.variable(self.p, self.nvars, i))

    @property
    def t(self):
        if not self.has_diff_gen:
            raise AttributeError("presentation has no differential generator")
        return self.gen("t")

    def embed(self, a, source):
        """Embed an element of ``source`` whose generators all occur here, by name."""
        positions = [self.gens.index(g) for g in source.gens]
        if source.has_diff_gen and not self.has_diff_gen:
            raise ValueError("cannot embed a differential generator into a trivial presentation")
        return RationalFunction(self, a.num.embed(self.nvars, positions),
                                a.den.embed(self.nvars, positions))

    def __str__(self):
        inner = ",".join(self.constant_gens)
        if self.has_diff_gen:
            inner += ";t"
        return f"GF({self.p})({inner})"


def make_presentation(p, constant_gens=(), has_diff_gen=True):
    return FieldPresentation(p, tuple(constant_gens), has_diff_gen)


class RationalFunction:
    """A reduced fraction with monic denominator; zero is ``0/1``."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, _reduced=False):
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                den = den.one()
            elif den.is_constant():
                num = num.scale(pow(den.constant_value(), field.p - 2, field.p))
                den = den.one()
            else:
                g = gcd(num, den)
                if not g.is_one():
                    num, den = num.exquo(g), den.exquo(g)
                _, lc = den.leading_term()
                if lc != 1:
                    inv = pow(lc, field.p - 2, field.p)
                    num, den = num.scale(inv), den.scale(inv)
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("elements of different presentations")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den.is_one() and self.num.is_one()

    def is_scalar(self):
        return self.den.is_one() and self.num.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RationalFunction) else other
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.field, self.num + other.num, self.den, _reduced=True)
        if self.den == other.den:
            return RationalFunction(self.field, self.num + other.num, self.den)
        return RationalFunction(self.field, self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, -self.num, self.den, _reduced=True)

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
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.field, self.num * other.num, self.den, _reduced=True)
        # cross-cancel before multiplying keeps the gcds small
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        num = self.num.exquo(g1) * other.num.exquo(g2)
        den = self.den.exquo(g2) * other.den.exquo(g1)
        return RationalFunction(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.field, self.num ** n, self.den ** n, _reduced=True)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.field}: {self}>"


# -- printing -------------------------------------------------------------


def format_poly(poly, names):
    if poly.is_zero():
        return "0"
    parts = []
    for e, c in poly.sorted_terms():
        # descending order lists the dominant generator first
        factors = []
        for i in reversed(range(len(names))):
            if e[i] == 1:
                factors.append(names[i])
            elif e[i] > 1:
                factors.append(f"{names[i]}^{e[i]}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


def format_element(a):
    names = a.field.gens
    if a.den.is_one():
        return format_poly(a.num, names)
    return f"({format_poly(a.num, names)})/({format_poly(a.den, names)})"


# -- derivation and Frobenius ---------------------------------------------


def derive(a):
    """The derivation of K: d/dt on the t-generator, zero on constants."""
    K = a.field
    if not K.has_diff_gen or a.is_zero():
        return K.zero()
    i = K.t_index
    dn = a.num.derivative(i)
    if a.den.is_one():
        return RationalFunction(K, dn, a.den, _reduced=True)
    dd = a.den.derivative(i)
    return RationalFunction(K, dn * a.den - a.num * dd, a.den * a.den)


def is_constant(a):
    K = a.field
    if not K.has_diff_gen:
        return True
    i, p = K.t_index, K.p
    return all(e[i] % p == 0 for poly in (a.num, a.den) for e in poly.terms)


def frobenius(a):
    return RationalFunction(a.field, a.num.frobenius(), a.den.frobenius(), _reduced=True)


def is_pth_power(a):
    return a.num.is_pth_power() and a.den.is_pth_power()


def pth_root(a):
    """The unique ``b`` with ``b**p == a``, or ``None`` when ``a`` is not in K^p."""
    if not is_pth_power(a):
        return None
    return RationalFunction(a.field, a.num.pth_root(), a.den.pth_root(), _reduced=True)


# -- K over K^p -------------------------------------------------------------


def standard_basis(K):
    """Exponent vectors of the monomial basis of K over K^p, first generator most significant."""
    return tuple(product(range(K.p), repeat=K.nvars))


def basis_element(K, exps):
    return K.element(K.poly({tuple(exps): 1}))


@dataclass(frozen=True)
class PCoordinates:
    field: FieldPresentation
    basis: tuple
    entries: tuple

    def reconstruct(self):
        K = self.field
        total = K.zero()
        for exps, coord in zip(self.basis, self.entries):
            if coord:
                total = total + coord * basis_element(K, exps)
        return total


def p_coordinates(a):
    K = a.field
    p = K.p
    basis = standard_basis(K)
    num = a.num * a.den ** (p - 1) if not a.den.is_one() else a.num
    den = a.den.frobenius()
    buckets = {}
    for e, c in num.terms.items():
        r = tuple(x % p for x in e)
        buckets.setdefault(r, {})[tuple(x - x % p for x in e)] = c
    entries = []
    for exps in basis:
        terms = buckets.get(exps)
        entries.append(K.zero() if terms is None else RationalFunction(K, K.poly(terms), den))
    return PCoordinates(K, basis, tuple(entries))


def _row_reduce(columns, target=None):
    """Gauss-Jordan elimination over K on the matrix whose columns are given.

    Returns ``(rank, solution)``; ``solution`` is ``None`` if ``target`` is
    absent or outside the column span.
    """
    ncols = len(columns)
    nrows = len(columns[0]) if columns else (len(target) if target is not None else 0)
    rows = []
    for r in range(nrows):
        row = [columns[c][r] for c in range(ncols)]
        if target is not None:
            row.append(target[r])
        rows.append(row)
    pivots = []
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv if x else x for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][c]:
                factor = rows[r][c]
                rows[r] = [x - factor * y if y else x for x, y in zip(rows[r], rows[rank])]
        pivots.append(c)
        rank += 1
    if target is None:
        return rank, None
    if any(rows[r][ncols] for r in range(rank, nrows)):
        return rank, None
    K = target[0].field
    solution = [K.zero()] * ncols
    for r, c in enumerate(pivots):
        solution[c] = rows[r][ncols]
    return rank, tuple(solution)


def solve_over_pth_powers(vectors, target):
    """Coefficients ``x_i`` in K^p with ``sum x_i * v_i == target``, or ``None``.

    Entries of p-coordinate vectors lie in K^p, so elimination over K stays
    inside K^p; when the vectors are dependent a particular solution (free
    coefficients zero) is returned.
    """
    columns = [v.entries for v in vectors]
    if not columns:
        return () if all(not x for x in target.entries) else None
    _, solution = _row_reduce(columns, list(target.entries))
    return solution


def pth_power_rank(vectors):
    """Rank of the given p-coordinate vectors over K^p."""
    if not vectors:
        return 0
    rank, _ = _row_reduce([v.entries for v in vectors])
    return rank
