"""Independent reference computations built on sympy."""

import sympy

T = sympy.Symbol("t")


def element_to_sympy(a):
    names = [sympy.Symbol(n) for n in a.field.gens]

    def poly(pl):
        return sum((c * sympy.prod([s ** e for s, e in zip(names, exps)])
                    for exps, c in pl.terms.items()), sympy.Integer(0))

    return poly(a.num) / poly(a.den)


def dpoly_to_sympy(f, fn=None):
    """Substitute the function x(t) and its t-derivatives for the indeterminates."""
    fns = [sympy.Function(name)(T) for name in f.ring.names]
    total = sympy.Integer(0)
    for mono, c in f.terms.items():
        term = element_to_sympy(c)
        for v, e in mono:
            term *= sympy.diff(fns[v.var], T, v.order) ** e
        total += term
    return total


def zero_mod_p(expr, p):
    """True when a rational expression vanishes identically over GF(p)."""
    derivs = sorted(expr.atoms(sympy.Derivative), key=lambda d: -d.derivative_count)
    funcs = expr.atoms(sympy.core.function.AppliedUndef)
    subs = {d: sympy.Symbol(f"_d{i}") for i, d in enumerate(derivs)}
    expr = expr.subs(subs)
    expr = expr.subs({fn: sympy.Symbol(f"_f{i}") for i, fn in enumerate(funcs)})
    num, _ = sympy.fraction(sympy.together(expr))
    num = sympy.expand(num)
    if num == 0:
        return True
    gens = sorted(num.free_symbols, key=str)
    if not gens:
        return int(num) % p == 0
    return sympy.Poly(num, *gens, modulus=p).is_zero
