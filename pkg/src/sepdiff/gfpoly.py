"""Sparse multivariate polynomials over GF(p).

A polynomial is a map from exponent tuples to residues in ``range(1, p)``.
All generators share one fixed arity; the monomial order is graded
lexicographic with the *last* generator most significant, so for a field
``GF(p)(c1, ..., cm)(t)`` the order is ``c1 < ... < cm < t``.

Values are treated as immutable once built.
"""

from __future__ import annotations

from functools import lru_cache, reduce

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None


def monomial_key(exps):
    """Sort key for the graded lexicographic order (last variable dominant)."""
    return (sum(exps), exps[::-1])


class Poly:
    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p, nvars, terms=None):
        self.p = p
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, p, nvars, c):
        c %= p
        return cls(p, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, p, nvars, i, exp=1):
        e = [0] * nvars
        e[i] = exp
        return cls(p, nvars, {tuple(e): 1})

    def _new(self, terms):
        return Poly(self.p, self.nvars, terms)

    def zero(self):
        return self._new({})

    def one(self):
        return self._new({(0,) * self.nvars: 1})

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0,) * self.nvars) == 1

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, 0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        p = self.p
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = (terms.get(e, 0) + c) % p
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return self._new(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = self.p
        return self._new({e: p - c for e, c in self.terms.items()})

    def scale(self, k):
        k %= self.p
        if not k:
            return self.zero()
        if k == 1:
            return self
        p = self.p
        return self._new({e: c * k % p for e, c in self.terms.items()})

    def __mul__(self, other):
        if len(other.terms) < len(self.terms):
            self, other = other, self
        if not self.terms:
            return self._new({})
        p = self.p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % p
        return self._new({e: c for e, c in out.items() if c})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exps, c=1):
        p = self.p
        c %= p
        if not c:
            return self.zero()
        return self._new({tuple(a + b for a, b in zip(e, exps)): v * c % p
                          for e, v in self.terms.items()})

    # -- structure --------------------------------------------------------

    def leading_term(self):
        e = max(self.terms, key=monomial_key)
        return e, self.terms[e]

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading_term()
        return self.scale(pow(lc, self.p - 2, self.p))

    def degree(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return used

    def coeffs_in(self, i):
        """Split as ``sum_k coeff_k * x_i^k``; the coefficients do not involve ``x_i``."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[rest] = c
        return {k: self._new(t) for k, t in out.items()}

    def derivative(self, i):
        p = self.p
        terms = {}
        for e, c in self.terms.items():
            k = e[i] % p
            if k and e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * k % p
        return self._new(terms)

    def map_exponents(self, fn):
        """Apply ``fn`` to every exponent tuple (must be injective on the support)."""
        return self._new({fn(e): c for e, c in self.terms.items()})

    def embed(self, nvars, positions):
        """Re-index into arity ``nvars``; generator ``i`` moves to ``positions[i]``."""
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, a in enumerate(e):
                ne[positions[i]] += a
            terms[tuple(ne)] = c
        return Poly(self.p, nvars, terms)

    def frobenius(self):
        # GF(p) coefficients are fixed by x -> x^p
        p = self.p
        return self._new({tuple(a * p for a in e): c for e, c in self.terms.items()})

    def is_pth_power(self):
        p = self.p
        return all(a % p == 0 for e in self.terms for a in e)

    def pth_root(self):
        p = self.p
        return self._new({tuple(a // p for a in e): c for e, c in self.terms.items()})

    # -- division ---------------------------------------------------------

    def exquo(self, other):
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self.scale(pow(other.constant_value(), self.p - 2, self.p))
        p = self.p
        le, lc = other.leading_term()
        inv = pow(lc, p - 2, p)
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=monomial_key)
            if any(a < b for a, b in zip(e, le)):
                raise ArithmeticError("inexact polynomial division")
            qe = tuple(a - b for a, b in zip(e, le))
            qc = rem[e] * inv % p
            quot[qe] = qc
            for oe, oc in other.terms.items():
                te = tuple(a + b for a, b in zip(oe, qe))
                v = (rem.get(te, 0) - qc * oc) % p
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return self._new(quot)

    def __repr__(self):
        return f"Poly(p={self.p}, {self.sorted_terms()!r})"


def _prem(a, b, i):
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in ``x_i`` (scaling ignored)."""
    db = b.degree(i)
    bc = b.coeffs_in(i)
    lcb = bc[db]
    shift = [0] * a.nvars
    r = a
    while not r.is_zero():
        dr = r.degree(i)
        if dr < db:
            break
        lcr = r.coeffs_in(i)[dr]
        shift[i] = dr - db
        r = lcb * r - (lcr * b).mul_monomial(tuple(shift))
    return r


def content_in(a, i):
    return reduce(prs_gcd, a.coeffs_in(i).values(), a.zero())


def _primitive_in(a, i):
    c = content_in(a, i)
    return a.exquo(c)


@lru_cache(maxsize=None)
def _flint_ctx(p, nvars):
    names = tuple(f"v{i}" for i in range(nvars))
    return flint.nmod_mpoly_ctx.get(names, ordering="deglex", modulus=p)


def gcd(a, b):
    """Monic greatest common divisor.

    Uses FLINT's multivariate gcd when available, else :func:`prs_gcd`.
    """
    if flint is None or a.nvars == 0:
        return prs_gcd(a, b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return a.one()
    ctx = _flint_ctx(a.p, a.nvars)
    g = ctx.from_dict(a.terms).gcd(ctx.from_dict(b.terms))
    return a._new({tuple(e): int(c) for e, c in g.to_dict().items()}).monic()


def prs_gcd(a, b):
    """Monic gcd by a recursive primitive remainder sequence (pure Python)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return a.one()
    used = a.variables() | b.variables()
    i = max(used)
    if a.degree(i) <= 0:
        return prs_gcd(a, content_in(b, i))
    if b.degree(i) <= 0:
        return prs_gcd(content_in(a, i), b)
    ca, cb = content_in(a, i), content_in(b, i)
    a1, b1 = a.exquo(ca), b.exquo(cb)
    if a1.degree(i) < b1.degree(i):
        a1, b1 = b1, a1
    while not b1.is_zero() and b1.degree(i) > 0:
        r = _prem(a1, b1, i)
        a1 = b1
        b1 = _primitive_in(r, i) if not r.is_zero() else r
    g = a1 if b1.is_zero() else a.one()
    if not g.is_constant():
        g = _primitive_in(g, i)
    return (prs_gcd(ca, cb) * g).monic()
