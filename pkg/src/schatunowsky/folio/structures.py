"""Interpretations of the arithmetic signature.

A :class:`Structure` bundles the operations with

* a seeded sampler, used to draw witness pools for quantifiers;
* optional *deciders*: exact procedures for defined predicates.  A decider
  may return None to decline, in which case the evaluator unfolds the
  definition instead;
* optional *helpers*: computable witnesses (successor prime, monus, ...)
  that guided instantiation offers as quantifier candidates;
* ``below``: all elements ``<= t`` when that set is finite and small.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .. import arith, pgood, polymodels as pm
from ..errors import SchatunowskyError
from ..polys import IntPoly, QZPoly

BELOW_CAP = 10**5


@dataclass
class Structure:
    name: str
    zero: Any
    one: Any
    add: Callable
    mul: Callable
    less: Callable
    sampler: Callable[[random.Random], Any]
    fixed: tuple = ()
    equal: Callable = lambda a, b: a == b
    deciders: dict = field(default_factory=dict)
    helpers: dict = field(default_factory=dict)
    below: Optional[Callable] = None
    finite_carrier: Optional[tuple] = None
    fmt: Callable[[Any], str] = str
    _pools: dict = field(default_factory=dict, repr=False)

    def pool(self, seed: int, size: int) -> list:
        """First ``size`` elements of the seeded candidate stream: the fixed
        elements, then distinct samples.  Larger sizes extend, never reorder."""
        entry = self._pools.get(seed)
        if entry is None:
            entry = (random.Random(seed), list(self.fixed), set(self.fixed))
            self._pools[seed] = entry
        rng, items, seen = entry
        attempts = 0
        while len(items) < size and attempts < 50 * size:
            x = self.sampler(rng)
            attempts += 1
            if x not in seen:
                seen.add(x)
                items.append(x)
        return items[:size]

    def random_element(self, rng: random.Random):
        return self.sampler(rng)

    def decide(self, name: str, args) -> Optional[bool]:
        fn = self.deciders.get(name)
        if fn is None:
            return None
        try:
            return fn(*args)
        except SchatunowskyError:
            return None

    def helper(self, name: str, *args) -> list:
        """Candidates proposed by a helper; failures propose nothing."""
        fn = self.helpers.get(name)
        if fn is None or any(a is None for a in args):
            return []
        try:
            out = fn(*args)
        except (SchatunowskyError, ValueError, ArithmeticError):
            return []
        return [] if out is None else [out]


# -- the standard model ---------------------------------------------------------------


def _nat_sampler(rng: random.Random) -> int:
    r = rng.random()
    if r < 0.5:
        return rng.randint(0, 100)
    if r < 0.8:
        return rng.randint(0, 10**4)
    return rng.randint(0, 10**9)


def _nat_consecutive(a: int, b: int) -> bool:
    return arith.is_prime(a) and arith.is_prime(b) and a < b and arith.successor_prime(a) == b


def _nat_between(a: int, b: int):
    """Least prime strictly between ``a`` and ``b``, or None."""
    if b - a < 2:
        return None
    q = arith.successor_prime(a) if arith.is_prime(a) else arith.default_ctx().successor(a)
    return q if q < b else None


def _nat_pgood_witness(p: int, m: int):
    if not arith.is_prime(p) or m > 10**6:
        return None
    return pgood.is_p_good(m, p).witness


def _nat_bigger_prime(n: int, p: int):
    q = arith.default_ctx().successor(p)
    return q if q * q < n else None


def natural_numbers() -> Structure:
    return Structure(
        name="N",
        zero=0,
        one=1,
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        less=lambda a, b: a < b,
        sampler=_nat_sampler,
        fixed=tuple(range(0, 21)),
        deciders={
            "prime": arith.is_prime,
            "irreducible": arith.is_prime,
            "divides": lambda x, y: y == 0 if x == 0 else y % x == 0,
            "coprime": lambda m, n: arith.gcd(m, n) == 1,
            "le": lambda a, b: a <= b,
            "consecutive": _nat_consecutive,
        },
        helpers={
            "monus": lambda y, x: y - x if x <= y else None,
            "successor_prime": lambda p: arith.successor_prime(p),
            "predecessor_prime": lambda p: arith.predecessor_prime(p),
            "prime_between": _nat_between,
            "max_prime_sq_below": arith.max_prime_sq_below,
            "bigger_prime_sq_below": _nat_bigger_prime,
            "prime_divisor": lambda n: arith.smallest_prime_factor(n),
            "floor_div": lambda m, d: m // d if d > 0 else None,
            "weak_bound": pgood.weak_bound,
            "largest_p_good": lambda p: pgood.largest_p_good(p) if p <= 1000 else None,
            "pgood_witness": _nat_pgood_witness,
        },
        below=lambda t: list(range(t + 1)) if t <= BELOW_CAP else None,
    )


def finite_naturals(n: int) -> Structure:
    """N with quantifiers relativised to ``{0, ..., n}``.

    Terms are still computed in N; only the quantifier range is finite,
    so every quantifier is decided by exhaustion.
    """
    s = natural_numbers()
    s.name = f"N<={n}"
    s.finite_carrier = tuple(range(n + 1))
    s.sampler = lambda rng: rng.randint(0, n)
    s.fixed = ()
    return s


# -- the cone of Z[X] -----------------------------------------------------------------------

_ZX_FIXED = tuple(
    IntPoly.parse(t)
    for t in ("0", "1", "2", "3", "5", "7", "X", "X + 1", "X - 1", "X + 2", "2X + 1", "2X - 1", "X^2 + 1", "X^3")
)


def _zx_sampler(rng: random.Random) -> IntPoly:
    r = rng.random()
    if r < 0.3:
        return pm.random_irreducible_int(rng, max_degree=2, coef_bound=10)
    return pm.random_int_poly(rng, max_degree=3, coef_bound=10)


def _zx_prime(f: IntPoly):
    if not f.in_cone() or f <= 1:
        return False
    return pm.is_irreducible_int(f)


def _zx_consecutive(a: IntPoly, b: IntPoly):
    if not (_zx_prime(a) and _zx_prime(b) and a < b):
        return False
    return pm.successor_prime_int(a) == b


def _cone_below(cls):
    def below(t):
        if not t.is_constant():
            return None
        c = int(t.constant)
        return [cls.const(i) for i in range(c + 1)] if c <= BELOW_CAP else None

    return below


def _zx_between(a: IntPoly, b: IntPoly):
    if not _zx_prime(a):
        return None
    q = pm.successor_prime_int(a)
    return q if q < b else None


def zx_cone() -> Structure:
    return Structure(
        name="C(Z[X])",
        zero=IntPoly(),
        one=IntPoly.const(1),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        less=lambda a, b: a < b,
        sampler=_zx_sampler,
        fixed=_ZX_FIXED,
        deciders={
            "prime": _zx_prime,
            "irreducible": _zx_prime,
            "divides": pm.divides_int,
            "coprime": lambda m, n: pm.gcd_int(m, n) == 1,
            "le": lambda a, b: a <= b,
            "consecutive": _zx_consecutive,
        },
        helpers={
            "monus": lambda y, x: pm.monus(y, x),
            "successor_prime": pm.successor_prime_int,
            "predecessor_prime": pm.predecessor_prime_int,
            "prime_between": _zx_between,
            "bigger_prime_sq_below": pm.a18_bigger_prime,
            "floor_div": pm.floor_div_int,
        },
        below=_cone_below(IntPoly),
    )


# -- the cone of Q_Z[X] ----------------------------------------------------------------------

_QZ_FIXED = tuple(
    QZPoly.parse(t)
    for t in ("0", "1", "2", "3", "5", "X", "X + 1", "X - 1", "X + 2", "2X + 1", "3/2X + 1", "1/2X + 1", "3X - 1")
)


def _qz_sampler(rng: random.Random) -> QZPoly:
    r = rng.random()
    if r < 0.2:
        # degree-one unit-constant primes cX +- 1
        c = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        return QZPoly((rng.choice((1, -1)), c))
    return pm.random_qz_poly(rng)


def _qz_prime(f: QZPoly):
    if not f.in_cone() or f <= 1:
        return False
    return pm.is_irreducible_qz(f).irreducible


def _qz_consecutive(a: QZPoly, b: QZPoly):
    if not (_qz_prime(a) and _qz_prime(b) and a < b):
        return False
    if a.is_constant() and b.is_constant():
        return arith.successor_prime(int(a.constant)) == int(b.constant)
    if a.is_constant():
        # the next numeral prime lies strictly between
        return False
    return None


def _qz_between(a: QZPoly, b: QZPoly):
    if a.is_constant() and b.is_constant():
        q = _nat_between(int(a.constant), int(b.constant))
        return None if q is None else QZPoly.const(q)
    if a.is_constant():
        return QZPoly.const(arith.default_ctx().successor(int(a.constant)))
    try:
        return pm.between_prime_qz(a, b)
    except SchatunowskyError:
        return None


def qz_cone() -> Structure:
    return Structure(
        name="C(Q_Z[X])",
        zero=QZPoly(),
        one=QZPoly.const(1),
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        less=lambda a, b: a < b,
        sampler=_qz_sampler,
        fixed=_QZ_FIXED,
        deciders={
            "prime": _qz_prime,
            "irreducible": _qz_prime,
            "divides": pm.divides_qz,
            "le": lambda a, b: a <= b,
            "consecutive": _qz_consecutive,
        },
        helpers={
            "monus": lambda y, x: pm.monus(y, x),
            "prime_between": _qz_between,
            "prime_divisor": pm.prime_divisor_qz,
        },
        below=_cone_below(QZPoly),
    )


STRUCTURES = {
    "N": natural_numbers,
    "ZX": zx_cone,
    "QZ": qz_cone,
}


def get_structure(name: str) -> Structure:
    try:
        return STRUCTURES[name]()
    except KeyError:
        raise KeyError(f"unknown structure {name!r}; expected one of {sorted(STRUCTURES)}") from None


def parse_element(s: Structure, text: str):
    """Read a carrier element from text in the structure's own syntax."""
    if s.name.startswith("N"):
        v = int(text)
        if v < 0:
            raise ValueError("natural numbers are nonnegative")
        return v
    cls = IntPoly if s.name == "C(Z[X])" else QZPoly
    f = cls.parse(text)
    if not f.in_cone():
        raise ValueError(f"{f} is not in the positive cone")
    return f
