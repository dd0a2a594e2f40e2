"""Exact irreducibility and factor search for integer polynomials.

The search is Kronecker's method: a factor of degree ``<= d`` is fixed by
its values at ``d + 1`` integer points, and each value must divide the
value of ``f`` there.  Points are chosen where ``|f|`` has few divisors,
which keeps the candidate count small at the degrees used here (default
budget 6).

Polynomials are passed as coefficient tuples, low degree first.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import reduce

from . import arith
from .errors import DegreeBudget

DEFAULT_DEGREE_BOUND = 6


def trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def content(c) -> int:
    return reduce(math.gcd, (abs(int(x)) for x in c), 0)


def primitive(c) -> tuple:
    """Primitive part with positive leading coefficient."""
    g = content(c)
    if g == 0:
        return ()
    if c[-1] < 0:
        g = -g
    return tuple(x // g for x in c)


def mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_exact(f, g):
    """Quotient and remainder of ``f / g`` over Q, as Fractions."""
    f = [Fraction(x) for x in f]
    g = [Fraction(x) for x in g]
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    for i in range(len(f) - len(g), -1, -1):
        coef = f[i + len(g) - 1] / g[-1]
        q[i] = coef
        if coef:
            for j, y in enumerate(g):
                f[i + j] -= coef * y
    return trim(q), trim(f)


def int_quotient(f, g):
    """``f / g`` when it is an integer polynomial, else None."""
    q, r = divmod_exact(f, g)
    if r or any(x.denominator != 1 for x in q):
        return None
    return tuple(int(x) for x in q)


def gcd_rational(f, g) -> tuple:
    """Monic-free gcd over Q, returned as a primitive integer polynomial."""
    a, b = trim(Fraction(x) for x in f), trim(Fraction(x) for x in g)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    if not a:
        return ()
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (x.denominator for x in a), 1)
    return primitive(tuple(int(x * den) for x in a))


def gcd_int(f, g) -> tuple:
    """gcd in Z[X] with positive leading coefficient."""
    f, g = trim(f), trim(g)
    if not f:
        return primitive(g) if g else ()
    if not g:
        return primitive(f)
    c = math.gcd(content(f), content(g))
    return tuple(c * x for x in gcd_rational(f, g))


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in arith.factorize(abs(n)).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _lagrange_basis(points):
    """Integer numerators ``B_i`` and common denominator ``D`` with
    ``L_i = B_i / D`` the Lagrange basis (monomial coefficients)."""
    m = len(points)
    basis = []
    for i, xi in enumerate(points):
        num = (1,)
        den = 1
        for j, xj in enumerate(points):
            if j != i:
                num = mul(num, (-xj, 1))
                den *= xi - xj
        basis.append((num, den))
    common = reduce(lambda a, b: a * b // math.gcd(a, b), (abs(d) for _, d in basis), 1)
    out = []
    for num, den in basis:
        scale = common // den
        out.append(tuple(c * scale for c in num) + (0,) * (m - len(num)))
    return out, common


def find_factor(f, max_points_scan: int = 40):
    """A factor of ``f`` with ``1 <= deg <= deg(f) // 2``, or None.

    ``f`` is an integer coefficient tuple of degree >= 1.  A factor is
    returned primitive with positive leading coefficient.  None means ``f``
    has no factor of positive degree below its own, so its primitive part
    is irreducible over Q.
    """
    f = trim(f)
    n = len(f) - 1
    if n <= 1:
        return None
    if f[0] == 0:
        return (0, 1)
    half = n // 2
    samples = []
    for k in range(max_points_scan):
        x = (k + 1) // 2 * (1 if k % 2 else -1)
        v = sum(c * x**i for i, c in enumerate(f))
        if v == 0:
            return (-x, 1)
        samples.append((len(_divisors(v)), abs(x), x, v))
    samples.sort()
    chosen = samples[: half + 1]
    points = [x for _, _, x, _ in chosen]
    divs = []
    for idx, (_, _, _, v) in enumerate(chosen):
        ds = _divisors(v)
        divs.append(ds if idx == 0 else ds + [-d for d in ds])
    basis, common = _lagrange_basis(points)
    lead_f, const_f = f[-1], f[0]
    for values in itertools.product(*divs):
        raw = [sum(v * b[i] for v, b in zip(values, basis)) for i in range(half + 1)]
        if any(c % common for c in raw):
            continue
        g = trim(c // common for c in raw)
        if len(g) < 2:
            continue
        if g[0] == 0 or lead_f % g[-1] or const_f % g[0]:
            continue
        if int_quotient(f, g) is not None:
            return primitive(g)
    return None


def prime_constant_certificate(c) -> bool:
    """True when ``|c_0|`` is a prime exceeding the sum of the absolute
    values of the other coefficients; such a polynomial is irreducible."""
    c = trim(c)
    if len(c) < 2:
        return False
    p = abs(c[0])
    return arith.is_prime(p) and p > sum(abs(x) for x in c[1:])


def is_irreducible_coeffs(c, degree_bound: int = DEFAULT_DEGREE_BOUND) -> bool:
    """Irreducibility of a positive element of Z[X] (in the cone, above 1)."""
    c = trim(c)
    if not c or c[-1] <= 0:
        return False
    if len(c) == 1:
        return arith.is_prime(c[0])
    if content(c) != 1:
        return False
    if prime_constant_certificate(c):
        return True
    if len(c) - 1 > degree_bound:
        raise DegreeBudget(
            f"degree {len(c) - 1} exceeds the exhaustive bound {degree_bound}"
        )
    return find_factor(c) is None


def factor_rational(c, degree_bound: int = DEFAULT_DEGREE_BOUND) -> list[tuple]:
    """Irreducible factors over Q of a nonconstant polynomial, each
    returned primitive; the product matches ``c`` up to a rational scalar."""
    c = trim(c)
    if len(c) - 1 > degree_bound:
        raise DegreeBudget(f"degree {len(c) - 1} exceeds the exhaustive bound {degree_bound}")
    work = [primitive(c)]
    out = []
    while work:
        g = work.pop()
        h = find_factor(g)
        if h is None:
            out.append(g)
        else:
            work.append(h)
            work.append(primitive(int_quotient(g, h)))
    return sorted(out)
