"""Operations of the two nonstandard models: the positive cones of Z[X]
and of Q_Z[X].

In the Z[X] cone every irreducible is prime, successor and predecessor
primes exist for every prime, yet there is no largest prime whose square
lies below ``X**3``.  In the Q_Z[X] cone ``X + 1`` is prime but has no
successor prime: between it and any degree-one prime ``cX +- 1`` there is
another one.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from . import arith, factor
from .errors import (
    BadShape,
    DegreeBudget,
    NoFloor,
    NotIrreducible,
    OutOfRange,
    Underflow,
)
from .factor import DEFAULT_DEGREE_BOUND
from .polys import IntPoly, QZPoly, _Poly

Poly = Union[IntPoly, QZPoly]


class QZVerdict(NamedTuple):
    irreducible: bool
    witness: Optional[tuple] = None

    def __str__(self):
        if self.irreducible:
            return "irreducible"
        a, b = self.witness
        return f"composite: {_factor_str(a)} * {_factor_str(b)}"


def _factor_str(f: _Poly) -> str:
    return str(f) if f.is_constant() else f"({f})"


# -- ring and order ---------------------------------------------------------------


def ring_add(f: Poly, g: Poly) -> Poly:
    out = f + g
    assert out.in_cone(), "the cone is closed under addition"
    return out


def ring_mul(f: Poly, g: Poly) -> Poly:
    out = f * g
    assert out.in_cone(), "the cone is closed under multiplication"
    return out


def compare(f: Poly, g: Poly) -> int:
    return f.compare(g)


def monus(f: Poly, g: Poly) -> Poly:
    """The ``z`` with ``g + z == f``; requires ``g <= f``."""
    if f < g:
        raise Underflow(f"{f} < {g}")
    return f - g


# -- Z[X] -------------------------------------------------------------------------


def is_irreducible_int(f: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> bool:
    return factor.is_irreducible_coeffs(f.coeffs, degree_bound)


def prime_constant_certificate(f: IntPoly) -> bool:
    """Certificate of irreducibility: the constant term is ``+-p`` for a
    prime ``p`` larger than the sum of ``|a_i|`` over the other terms."""
    if f.degree < 1:
        raise ValueError("the certificate concerns polynomials of degree >= 1")
    return factor.prime_constant_certificate(f.coeffs)


def _offset_prime(f: IntPoly) -> int:
    """A prime above ``sum |a_i|`` (i >= 1) and ``|a_0|``: shifting the
    constant term to ``+-`` this prime certainly gives an irreducible."""
    bound = max(sum(abs(c) for c in f.coeffs[1:]), abs(f.constant))
    return arith.successor_prime(arith.default_ctx().prime_at_most(max(bound, 2)))


def _require_irreducible_int(f: IntPoly, degree_bound: int) -> None:
    if not is_irreducible_int(f, degree_bound):
        raise NotIrreducible(f"{f} is not irreducible in Z[X]")


def successor_prime_int(f: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> IntPoly:
    _require_irreducible_int(f, degree_bound)
    if f.is_constant():
        return IntPoly.const(arith.successor_prime(f.constant))
    cap = _offset_prime(f) - f.constant
    for c in range(1, cap + 1):
        g = f + c
        if is_irreducible_int(g, degree_bound):
            return g
    raise AssertionError(f"no irreducible within the certified offset {cap} above {f}")


def predecessor_prime_int(f: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> IntPoly:
    _require_irreducible_int(f, degree_bound)
    if f.is_constant():
        return IntPoly.const(arith.predecessor_prime(f.constant))
    cap = _offset_prime(f) + f.constant
    for c in range(1, cap + 1):
        g = f - c
        if is_irreducible_int(g, degree_bound):
            return g
    raise AssertionError(f"no irreducible within the certified offset {cap} below {f}")


def divides_int(d: IntPoly, m: IntPoly) -> bool:
    """``d | m`` in the cone of Z[X]."""
    if d.is_zero():
        return m.is_zero()
    return factor.int_quotient(m.coeffs, d.coeffs) is not None


def gcd_int(f: IntPoly, g: IntPoly) -> IntPoly:
    return IntPoly(factor.gcd_int(f.coeffs, g.coeffs))


def floor_div_int(m: IntPoly, d: IntPoly) -> IntPoly:
    """The ``k`` in the cone with ``k*d <= m < (k+1)*d``.

    All coefficients of ``k`` above the constant are forced by requiring
    ``m - k*d`` to have degree at most ``deg d``; the constant of ``k`` is
    one of two integers.  Raises NoFloor when no such ``k`` exists.
    """
    if not (m.in_cone() and d.in_cone()) or d < 1:
        raise ValueError("floor division needs m >= 0 and d >= 1 in the cone")
    e = d.degree
    if m.degree < e:
        return IntPoly()
    k = [0] * (m.degree - e + 1)
    rem = list(m.coeffs)
    a = d.lead
    for j in range(m.degree - e, 0, -1):
        top = rem[j + e]
        if top % a:
            raise NoFloor(f"no floor of {m} / {d}: coefficient of X^{j + e} is not divisible")
        k[j] = top // a
        for i, c in enumerate(d.coeffs):
            rem[i + j] -= k[j] * c
    base = rem[e] // a
    for k0 in (base, base - 1):
        k[0] = k0
        cand = IntPoly(k)
        lower = cand * d
        if lower <= m < lower + d:
            if not cand.in_cone():
                break
            return cand
    raise NoFloor(f"no floor of {m} / {d}")


def a18_bigger_prime(n: IntPoly, p: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> IntPoly:
    """A prime ``q > p`` with ``q**2 < n``, for ``n`` of odd degree >= 3.

    The successor prime of ``p`` has the degree of ``p``, so its square
    stays below ``n``; no prime is the largest with square below ``n``.
    """
    if n.degree < 3 or n.degree % 2 == 0 or not n.in_cone():
        raise BadShape(f"{n}: expected a cone element of odd degree >= 3")
    _require_irreducible_int(p, degree_bound)
    if not p * p < n:
        raise OutOfRange(f"({p})^2 is not below {n}")
    q = successor_prime_int(p, degree_bound)
    assert p < q and q * q < n
    return q


def a19_check_int(q: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> bool:
    """``q**2 < 2 * P(q) * P(P(q))`` for a nonstandard prime ``q``."""
    if q.degree < 1:
        raise OutOfRange("use the integer scanners for numeral primes")
    p1 = predecessor_prime_int(q, degree_bound)
    p2 = predecessor_prime_int(p1, degree_bound)
    return q * q < 2 * p1 * p2


def kp_floor_int(p: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> IntPoly:
    """``k`` with ``k*S(p) < S(S(p))**2 < (k+1)*S(p)``."""
    s = successor_prime_int(p, degree_bound)
    ss = successor_prime_int(s, degree_bound)
    target = ss * ss
    k = floor_div_int(target, s)
    if not (k * s < target < (k + 1) * s):
        raise AssertionError(f"S(p) divides S(S(p))^2 for p = {p}")
    return k


def strong_bound_int(p: IntPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> IntPoly:
    """``S(p) * k_p``, the largest p-good element for a nonstandard prime ``p``."""
    if p.degree < 1:
        raise OutOfRange("nonstandard primes only; see pgood.strong_bound")
    return successor_prime_int(p, degree_bound) * kp_floor_int(p, degree_bound)


# -- Q_Z[X] -----------------------------------------------------------------------


def _as_integer_poly(f: QZPoly) -> tuple:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in f.coeffs)


def _normalize_unit_const(g: tuple) -> QZPoly:
    """Scale an integer factor so its constant term is 1 and its leading
    coefficient positive (constant -1 then)."""
    q = QZPoly(Fraction(c, g[0]) for c in g)
    return -q if q.lead < 0 else q


def _unit_const_factors(f: QZPoly, degree_bound: int) -> list[QZPoly]:
    """Irreducible factors of ``f`` (constant term +-1) normalised to
    constant term +-1 and positive leading coefficient."""
    parts = factor.factor_rational(_as_integer_poly(f), degree_bound)
    out = [_normalize_unit_const(g) for g in parts]
    prod = QZPoly.const(1)
    for g in out:
        prod = prod * g
    # leftover scalar is +-1 (constant terms) and positive (leading terms)
    assert prod == f
    return out


def _require_qz_element(f: QZPoly) -> None:
    if not f.in_cone() or f.is_zero() or f == 1:
        raise ValueError(f"{f}: expected a cone element other than 0 and 1")


def is_irreducible_qz(f: QZPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> QZVerdict:
    _require_qz_element(f)
    c0 = int(f.constant)
    if f.is_constant():
        if arith.is_prime(c0):
            return QZVerdict(True)
        d = arith.smallest_prime_factor(c0)
        return QZVerdict(False, (QZPoly.const(d), QZPoly.const(c0 // d)))
    if f.degree > degree_bound:
        raise DegreeBudget(f"degree {f.degree} exceeds the exhaustive bound {degree_bound}")
    if c0 == 0:
        return QZVerdict(False, (QZPoly.const(2), f * Fraction(1, 2)))
    if abs(c0) >= 2:
        d = arith.smallest_prime_factor(abs(c0))
        return QZVerdict(False, (QZPoly.const(d), f * Fraction(1, d)))
    parts = _unit_const_factors(f, degree_bound)
    if len(parts) == 1:
        return QZVerdict(True)
    g = parts[0]
    h = QZPoly(factor.divmod_exact(f.coeffs, g.coeffs)[0])
    g, h = sorted((g, h), reverse=True)
    return QZVerdict(False, (g, h))


def prime_divisor_qz(f: QZPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> QZPoly:
    """The least prime of the cone dividing ``f`` (``f > 1``)."""
    if not f.in_cone() or f <= 1:
        raise ValueError(f"{f}: expected a cone element above 1")
    c0 = int(f.constant)
    if f.is_constant():
        return QZPoly.const(arith.smallest_prime_factor(c0))
    if c0 == 0:
        return QZPoly.const(2)
    if abs(c0) >= 2:
        return QZPoly.const(arith.smallest_prime_factor(abs(c0)))
    if f.degree > degree_bound:
        raise DegreeBudget(f"degree {f.degree} exceeds the exhaustive bound {degree_bound}")
    return min(_unit_const_factors(f, degree_bound))


def divides_qz(d: QZPoly, m: QZPoly) -> bool:
    """``d | m`` in the cone of Q_Z[X]: the quotient must lie in Q_Z[X]."""
    if d.is_zero():
        return m.is_zero()
    q, r = factor.divmod_exact(m.coeffs, d.coeffs)
    if r:
        return False
    return not q or q[0].denominator == 1


def _unit_linear(f: QZPoly) -> bool:
    return f.degree == 1 and abs(f.constant) == 1 and f.lead > 0


def between_prime_qz(a: QZPoly, b: QZPoly) -> QZPoly:
    """A prime strictly between the degree-one primes ``a < b``.

    Both must have the shape ``cX +- 1`` with the leading coefficient of
    ``a`` below that of ``b``; the answer averages the two leading
    coefficients and takes constant term 1.
    """
    if not (_unit_linear(a) and _unit_linear(b)) or not a.lead < b.lead:
        raise BadShape(f"expected degree-one primes cX +- 1 with {a} below {b} in the leading coefficient")
    q = QZPoly((1, (a.lead + b.lead) / 2))
    assert a < q < b
    return q


def successor_candidate_refuted(a: QZPoly, b: QZPoly) -> bool:
    """True when ``b`` is not the successor prime of ``a``: some prime
    lies strictly between (checked via :func:`between_prime_qz`)."""
    q = between_prime_qz(a, b)
    return a < q < b and is_irreducible_qz(q).irreducible


# -- sampling ---------------------------------------------------------------------


def random_int_poly(rng: random.Random, max_degree: int = 3, coef_bound: int = 10) -> IntPoly:
    """A cone element of Z[X] with coefficients in ``[-coef_bound, coef_bound]``."""
    deg = rng.randint(0, max_degree)
    if deg == 0:
        return IntPoly.const(rng.randint(0, coef_bound))
    cs = [rng.randint(-coef_bound, coef_bound) for _ in range(deg)]
    return IntPoly(cs + [rng.randint(1, coef_bound)])


def random_irreducible_int(rng: random.Random, max_degree: int = 3, coef_bound: int = 10,
                           min_degree: int = 1) -> IntPoly:
    while True:
        deg = rng.randint(min_degree, max_degree)
        cs = [rng.randint(-coef_bound, coef_bound) for _ in range(deg)]
        f = IntPoly(cs + [rng.randint(1, coef_bound)])
        if f.degree >= 1 and is_irreducible_int(f):
            return f


def random_qz_poly(rng: random.Random, max_degree: int = 3, bound: int = 20,
                   const_bound: int = 50) -> QZPoly:
    """A cone element of Q_Z[X]: rational coefficients with numerator and
    denominator at most ``bound``, integer constant term at most
    ``const_bound`` in absolute value."""
    deg = rng.randint(0, max_degree)
    if deg == 0:
        return QZPoly.const(rng.randint(0, const_bound))
    cs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(deg - 1)]
    lead = Fraction(rng.randint(1, bound), rng.randint(1, bound))
    return QZPoly([rng.randint(-const_bound, const_bound)] + cs + [lead])
