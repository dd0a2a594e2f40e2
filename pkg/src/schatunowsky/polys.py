"""Elements of the rings Z[X] and Q_Z[X] (rational polynomials with an
integer constant term), ordered by the sign of the leading coefficient.

The positive cone of either ring is a discretely ordered semiring: zero
plus every polynomial with positive leading coefficient.  Values are
immutable and hashable; coefficients are stored low degree first with no
trailing zeros.

Text syntax::

    3X^2 - 5/2X + 1      # rational coefficients written a/b
    (3/2)X + 1           # parenthesised coefficients are accepted too
    2*X^3 + X - 7
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@total_ordering
class _Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = _trim(self._coerce(x) for x in coeffs)
        self._validate(c)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    # subclasses define the coefficient domain
    @staticmethod
    def _coerce(x):
        raise NotImplementedError

    @staticmethod
    def _validate(coeffs: tuple) -> None:
        pass

    @classmethod
    def const(cls, c) -> "_Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "_Poly":
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> "_Poly":
        return cls(parse_coeffs(text))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self._coerce(0)

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else self._coerce(0)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._coerce(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def sign(self) -> int:
        if not self.coeffs:
            return 0
        return 1 if self.coeffs[-1] > 0 else -1

    def in_cone(self) -> bool:
        return self.sign() >= 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ---------------------------------------------------

    def _other(self, other) -> "_Poly":
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return type(self)(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self)(other * c for c in self.coeffs)
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return type(self)()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = type(self).const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- order ---------------------------------------------------------------

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __lt__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return (other - self).sign() > 0

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def compare(self, other) -> int:
        """-1, 0 or 1 as ``self`` is less than, equal to or greater than ``other``."""
        return (self - other).sign()

    # -- text ------------------------------------------------------------------

    def __str__(self):
        return format_coeffs(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class IntPoly(_Poly):
    """Element of Z[X]."""

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer coefficient {x} in Z[X]")
            return int(x.numerator)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"bad coefficient {x!r}")
        return x

    def to_qz(self) -> "QZPoly":
        return QZPoly(self.coeffs)


class QZPoly(_Poly):
    """Element of Q_Z[X]: rational coefficients, integer constant term."""

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        if isinstance(x, bool):
            raise TypeError(f"bad coefficient {x!r}")
        return Fraction(x)

    @staticmethod
    def _validate(coeffs):
        if coeffs and coeffs[0].denominator != 1:
            raise ValueError(f"constant term {coeffs[0]} of a Q_Z[X] element must be an integer")

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        return IntPoly(self.coeffs)


# -- text syntax ----------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          \(\s*(?P<pnum>\d+)\s*(?:/\s*(?P<pden>\d+)\s*)?\)
        | (?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?
        )?
        \s*(?P<star>\*)?\s*
        (?P<x>[Xx](?:\s*\^\s*(?P<exp>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_coeffs(text: str) -> list[Fraction]:
    """Parse the polynomial text syntax into coefficients, low degree first."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos, first = 0, True
    out: dict[int, Fraction] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, has_x = m.group("sign"), m.group("x")
        num = m.group("pnum") or m.group("num")
        den = m.group("pden") or m.group("den")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        if num is None and not has_x:
            raise ValueError(f"empty term in {text!r} at position {pos}")
        if m.group("star") and (num is None or not has_x):
            raise ValueError(f"stray '*' in {text!r}")
        c = Fraction(int(num), int(den or 1)) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        e = (int(m.group("exp")) if m.group("exp") else 1) if has_x else 0
        out[e] = out.get(e, Fraction(0)) + c
        pos, first = m.end(), False
    deg = max(out)
    return [out.get(i, Fraction(0)) for i in range(deg + 1)]


def format_coeffs(coeffs: tuple) -> str:
    if not coeffs:
        return "0"
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            body = "" if mag == 1 else str(mag)
            body += "X" if e == 1 else f"X^{e}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


X = IntPoly.x()
QX = QZPoly.x()
