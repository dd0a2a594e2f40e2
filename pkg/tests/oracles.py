"""Slow, obviously-correct reference implementations.

Nothing here imports the package under test except for data types, so
every comparison against these is a genuine second route.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def naive_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if naive_is_prime(n)]


def naive_next_prime(n: int) -> int:
    n += 1
    while not naive_is_prime(n):
        n += 1
    return n


def naive_prev_prime(n: int) -> int:
    n -= 1
    while not naive_is_prime(n):
        n -= 1
    return n


def naive_totatives(n: int) -> list[int]:
    return [t for t in range(2, n) if math.gcd(t, n) == 1]


def least_prime_factor(n: int) -> int:
    return next(d for d in range(2, n + 1) if n % d == 0)


def naive_p_good(n: int, p) -> bool:
    """Definition read literally: every totative whose prime factors all
    exceed ``p`` is prime.  ``p=None`` drops the factor condition."""
    for t in naive_totatives(n):
        if p is not None and least_prime_factor(t) <= p:
            continue
        if not naive_is_prime(t):
            return False
    return True


def brute_k(p: int) -> int:
    """Greatest k with ``k * S(p) < S(S(p))**2``, by counting up."""
    s = naive_next_prime(p)
    target = naive_next_prime(s) ** 2
    k = 0
    while (k + 1) * s < target:
        k += 1
    return k


# -- polynomials ------------------------------------------------------------------------

_X = sympy.Symbol("X")


def to_sympy(coeffs) -> sympy.Poly:
    """Low-degree-first coefficients to a sympy polynomial over QQ."""
    expr = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * _X**i
               for i, c in enumerate(coeffs))
    return sympy.Poly(expr, _X, domain="QQ")


def sympy_irreducible_over_z(coeffs) -> bool:
    """Irreducible as an element of Z[X]: not a unit, and no factorization
    into two non-units (integer content counts as a factor)."""
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return False
    if len(c) == 1:
        return naive_is_prime(abs(c[0]))
    poly = sympy.Poly(sum(a * _X**i for i, a in enumerate(c)), _X, domain="ZZ")
    content, factors = poly.factor_list()
    if abs(content) != 1:
        return False
    return len(factors) == 1 and factors[0][1] == 1


def sympy_irreducible_over_q(coeffs) -> bool:
    poly = to_sympy(coeffs)
    if poly.degree() < 1:
        return False
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def poly_lt(a, b) -> bool:
    """Cone order on coefficient lists: sign of the leading coefficient of b - a."""
    n = max(len(a), len(b))
    d = [Fraction(b[i] if i < len(b) else 0) - Fraction(a[i] if i < len(a) else 0) for i in range(n)]
    while d and d[-1] == 0:
        d.pop()
    return bool(d) and d[-1] > 0


# -- formulas -----------------------------------------------------------------------------


def finite_truth(f, carrier, env: dict) -> bool:
    """Exhaustive two-valued truth of a formula in N with quantifiers
    relativised to ``carrier``; defined predicates keep their meaning in N."""
    from schatunowsky.folio import syntax as S

    def term(t):
        if isinstance(t, S.Var):
            return env[t.name]
        if isinstance(t, S.Zero):
            return 0
        if isinstance(t, S.One):
            return 1
        if isinstance(t, S.Add):
            return term(t.left) + term(t.right)
        if isinstance(t, S.Mul):
            return term(t.left) * term(t.right)
        raise TypeError(t)

    def pred(name, args):
        if name in ("prime", "irreducible"):
            return naive_is_prime(args[0])
        if name == "divides":
            x, y = args
            return y == 0 if x == 0 else y % x == 0
        if name == "le":
            return args[0] <= args[1]
        if name == "coprime":
            return math.gcd(*args) == 1
        if name == "consecutive":
            a, b = args
            return naive_is_prime(a) and naive_is_prime(b) and a < b and naive_next_prime(a) == b
        raise KeyError(name)

    def go(g):
        if isinstance(g, S.Eq):
            return term(g.left) == term(g.right)
        if isinstance(g, S.Lt):
            return term(g.left) < term(g.right)
        if isinstance(g, S.Pred):
            return pred(g.name, [term(a) for a in g.args])
        if isinstance(g, S.Not):
            return not go(g.body)
        if isinstance(g, S.And):
            return go(g.left) and go(g.right)
        if isinstance(g, S.Or):
            return go(g.left) or go(g.right)
        if isinstance(g, S.Implies):
            return (not go(g.left)) or go(g.right)
        if isinstance(g, (S.Forall, S.Exists)):
            saved = env.get(g.var, _MISSING)
            results = []
            for a in carrier:
                env[g.var] = a
                results.append(go(g.body))
            if saved is _MISSING:
                env.pop(g.var, None)
            else:
                env[g.var] = saved
            return all(results) if isinstance(g, S.Forall) else any(results)
        raise TypeError(g)

    env = dict(env)
    return go(f)


_MISSING = object()


def guarded_truth(f, env: dict) -> bool:
    """Exact truth in N for formulas whose quantifiers all have the shape
    ``Q u. (u < t  or  le(u, t)) op body`` with ``t`` free of ``u``.

    Bounded shapes are exhausted.  The two unbounded shapes are decided by
    a single witness: ``forall u. guard & ...`` fails at ``u = t`` (or
    ``t + 1``), and ``exists u. guard -> ...`` holds there.
    """
    from schatunowsky.folio import syntax as S

    def bound(guard, e):
        strict = isinstance(guard, S.Lt)
        t = guard.right if strict else guard.args[1]
        top = finite_truth_term(t, e)
        return range(top) if strict else range(top + 1), (top if strict else top + 1)

    def go(g, e):
        if isinstance(g, (S.Forall, S.Exists)):
            body = g.body
            guard, rest = body.left, body.right
            rng, outside = bound(guard, e)
            if isinstance(g, S.Forall) and isinstance(body, S.Implies):
                return all(go(rest, {**e, g.var: a}) for a in rng)
            if isinstance(g, S.Exists) and isinstance(body, S.And):
                return any(go(rest, {**e, g.var: a}) for a in rng)
            if isinstance(g, S.Forall):
                return False
            return True
        if isinstance(g, S.Not):
            return not go(g.body, e)
        if isinstance(g, S.And):
            return go(g.left, e) and go(g.right, e)
        if isinstance(g, S.Or):
            return go(g.left, e) or go(g.right, e)
        if isinstance(g, S.Implies):
            return (not go(g.left, e)) or go(g.right, e)
        return finite_truth(g, (), e)

    return go(f, dict(env))


def finite_truth_term(t, env: dict) -> int:
    from schatunowsky.folio import syntax as S

    if isinstance(t, S.Var):
        return env[t.name]
    if isinstance(t, S.Zero):
        return 0
    if isinstance(t, S.One):
        return 1
    if isinstance(t, S.Add):
        return finite_truth_term(t.left, env) + finite_truth_term(t.right, env)
    return finite_truth_term(t.left, env) * finite_truth_term(t.right, env)
