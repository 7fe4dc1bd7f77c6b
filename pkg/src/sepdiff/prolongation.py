"""Prolongation equations of algebraic systems.

For ``f`` in ``K[x1..xn]`` the prolongation adds

    Df = sum_i (df/dxi) * yi + f^delta

where ``f^delta`` differentiates the coefficients only.  A point ``a`` of
the variety lifts to ``(a, delta a)`` on the prolonged system.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .diffpoly import DerivVar, DiffPoly, DiffRing, delta, evaluate, partial
from .field import derive


def default_names(n):
    return ("x",) if n == 1 else tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class AlgebraicSystem:
    ring: DiffRing
    polys: tuple

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        for f in self.polys:
            if f.ring != self.ring:
                raise TypeError("polynomial from a different ring")
            if any(v.order > 0 for v in f.variables()):
                raise errors.DerivativeVariablePresent(f"{f} involves derivatives")

    @property
    def arity(self):
        return self.ring.arity


@dataclass(frozen=True)
class ProlongedSystem:
    base: AlgebraicSystem
    ring: DiffRing
    pairs: tuple

    @property
    def arity(self):
        return self.ring.arity

    def equations(self):
        return [eq for pair in self.pairs for eq in pair]

    def to_lines(self):
        return [str(eq) for eq in self.equations()]


def coefficient_derivative(f):
    """``f^delta``: apply the field derivation to every coefficient."""
    terms = {}
    for m, c in f.terms.items():
        dc = derive(c)
        if dc:
            terms[m] = dc
    return DiffPoly(f.ring, terms)


def prolonged_ring(ring):
    n = ring.arity
    ynames = tuple(f"y{i}" for i in range(1, n + 1))
    return DiffRing(ring.field, ring.names + ynames)


def prolong(system):
    n = system.arity
    ring2 = prolonged_ring(system.ring)
    pairs = []
    for f in system.polys:
        f2 = f.change_ring(ring2)
        df = coefficient_derivative(f2)
        for i in range(n):
            df = df + partial(f2, DerivVar(i, 0)) * ring2.var(n + i)
        pairs.append((f2, df))
    return ProlongedSystem(system, ring2, tuple(pairs))


def lift_point(a):
    a = tuple(a)
    return a + tuple(derive(ai) for ai in a)


def check_membership(point, tau):
    point = tuple(point)
    if len(point) != tau.arity:
        raise errors.ArityMismatch(f"expected {tau.arity} coordinates, got {len(point)}")
    return all(evaluate(eq, point).is_zero() for eq in tau.equations())


def substitute_derivatives(df, tau):
    """Replace each ``yi`` by the first derivative of ``xi`` (back in the base ring)."""
    n = tau.base.arity
    mapping = {DerivVar(n + i, 0): DerivVar(i, 1) for i in range(n)}
    return df.substitute_vars(mapping).change_ring(tau.base.ring)


def formally_compatible(tau):
    """Check that substituting ``yi -> xi'`` turns every ``Df`` into ``delta(f)``."""
    base = tau.base
    for f, (_, df) in zip(base.polys, tau.pairs):
        if substitute_derivatives(df, tau) != delta(f):
            return False
    return True
