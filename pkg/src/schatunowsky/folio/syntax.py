"""Terms and formulas over the signature ``{+, *, 0, 1, <}``.

Grammar (ASCII or Unicode)::

    formula  := ("forall" | "exists" | "∀" | "∃") var+ "." formula
              | disj [("->" | "→") formula]            right associative
    disj     := conj {("|" | "or" | "∨") conj}
    conj     := neg {("&" | "and" | "∧") neg}
    neg      := ("~" | "not" | "¬") neg | atom
    atom     := "(" formula ")" | pred "(" term {"," term} ")"
              | term rel term
    rel      := "=" | "<" | ">" | "<=" | ">=" | "≤" | "≥"
    term     := prod {"+" prod}
    prod     := power {("*" | "·") power}
    power    := primary ["^" digits]
    primary  := digits | var | "(" term ")"

Decimal literals are numerals: ``0`` and ``1`` are the constants and
``n >= 2`` is the left-nested sum ``((1 + 1) + ...) + 1``.  ``t^k`` is the
left-nested product of ``k`` copies of ``t``.  ``a > b`` is read as
``b < a``.  ``<=`` and ``>=`` produce the defined predicate ``le``.

Predicate names: ``prime`` (alias ``pi2``, ``π₂``), ``irreducible``
(``pi1``, ``π₁``), ``divides``, ``coprime`` (``rho``, ``ϱ``), ``le``,
``consecutive`` (``sigma``, ``σ``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Union

from ..errors import FormulaSyntaxError


# -- terms -------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable names must be nonempty")


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, Zero, One, Add, Mul]

ZERO, ONE = Zero(), One()


# Numerals expand to left-nested sums of ones, so their depth is their value;
# the cap keeps every recursive walk well inside the interpreter's stack.
MAX_NUMERAL = 200


def numeral(u: int) -> Term:
    if u < 0:
        raise ValueError("numerals are nonnegative")
    if u == 0:
        return ZERO
    t: Term = ONE
    for _ in range(u - 1):
        t = Add(t, ONE)
    return t


def numeral_value(t: Term):
    """``u`` if ``t`` is the numeral for ``u``, else None."""
    if t == ZERO:
        return 0
    count = 0
    while isinstance(t, Add) and t.right == ONE:
        count += 1
        t = t.left
    return count + 1 if t == ONE else None


# -- formulas -------------------------------------------------------------------------


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Eq, Lt, Pred, Not, And, Or, Implies, Forall, Exists]
Quantifier = (Forall, Exists)

PRED_ARITY = {
    "prime": 1,
    "irreducible": 1,
    "divides": 2,
    "coprime": 2,
    "le": 2,
    "consecutive": 2,
}
PRED_ALIASES = {
    "pi2": "prime", "π₂": "prime", "π2": "prime",
    "pi1": "irreducible", "π₁": "irreducible", "π1": "irreducible",
    "rho": "coprime", "ϱ": "coprime", "ρ": "coprime",
    "sigma": "consecutive", "σ": "consecutive",
}


def forall(names, body):
    for n in reversed(list(names)):
        body = Forall(n, body)
    return body


def conj(*parts):
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


# -- variables and substitution ---------------------------------------------------------


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, (Add, Mul)):
        return term_vars(t.left) | term_vars(t.right)
    return set()


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, (Eq, Lt)):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Pred):
        return set().union(*(term_vars(a) for a in f.args))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Quantifier):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def all_vars(f: Formula) -> set[str]:
    if isinstance(f, Quantifier):
        return all_vars(f.body) | {f.var}
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return all_vars(f.left) | all_vars(f.right)
    return free_vars(f)


def subst_term(t: Term, m: dict) -> Term:
    if isinstance(t, Var):
        return m.get(t.name, t)
    if isinstance(t, Add):
        return Add(subst_term(t.left, m), subst_term(t.right, m))
    if isinstance(t, Mul):
        return Mul(subst_term(t.left, m), subst_term(t.right, m))
    return t


def fresh(avoid: set[str], base: str) -> str:
    for i in itertools.count(1):
        name = f"{base}_{i}"
        if name not in avoid:
            return name
    raise AssertionError


def subst(f: Formula, m: dict) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, m), subst_term(f.right, m))
    if isinstance(f, Lt):
        return Lt(subst_term(f.left, m), subst_term(f.right, m))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(subst_term(a, m) for a in f.args))
    if isinstance(f, Not):
        return Not(subst(f.body, m))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(subst(f.left, m), subst(f.right, m))
    if isinstance(f, Quantifier):
        inner = {k: v for k, v in m.items() if k != f.var}
        if not inner:
            return f
        incoming = set().union(*(term_vars(v) for v in inner.values()))
        var, body = f.var, f.body
        if var in incoming:
            new = fresh(incoming | all_vars(body) | set(inner), var)
            body = subst(body, {var: Var(new)})
            var = new
        return type(f)(var, subst(body, inner))
    raise TypeError(f"not a formula: {f!r}")


# -- lexer -------------------------------------------------------------------------------

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+)
      | (?P<op>->|<=|>=|!=|[()<>=+*·,.^~&|¬∧∨→∀∃≤≥≠])
      | (?P<name>[A-Za-z_πϱρσ][A-Za-z0-9_₁₂']*)
    )""",
    re.VERBOSE,
)
_KEYWORDS = {
    "forall": "∀", "exists": "∃", "not": "¬", "and": "∧", "or": "∨", "implies": "→",
}
_CANON = {"~": "¬", "&": "∧", "|": "∨", "->": "→", "*": "·", "<=": "≤", ">=": "≥", "!=": "≠"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        if m.group("num") is not None:
            out.append(("num", m.group("num"), start))
        elif m.group("op") is not None:
            op = m.group("op")
            out.append(("op", _CANON.get(op, op), start))
        else:
            name = m.group("name")
            if name in _KEYWORDS:
                out.append(("op", _KEYWORDS[name], start))
            else:
                out.append(("name", name, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind == "op" and v == value

    def expect(self, value: str):
        kind, v, pos = self.peek()
        if kind != "op" or v != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {v or 'end of input'!r}", pos)
        self.i += 1

    def fail(self, msg: str):
        raise FormulaSyntaxError(msg, self.peek()[2])

    # formulas

    def formula(self) -> Formula:
        if self.at("∀") or self.at("∃"):
            kind = self.peek()[1]
            self.i += 1
            names = []
            while self.peek()[0] == "name":
                names.append(self.peek()[1])
                self.i += 1
            if not names:
                self.fail("quantifier needs at least one variable")
            self.expect(".")
            body = self.formula()
            cls = Forall if kind == "∀" else Exists
            for n in reversed(names):
                body = cls(n, body)
            return body
        left = self.disj()
        if self.at("→"):
            self.i += 1
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        out = self.conj()
        while self.at("∨"):
            self.i += 1
            out = Or(out, self.conj())
        return out

    def conj(self) -> Formula:
        out = self.neg()
        while self.at("∧"):
            self.i += 1
            out = And(out, self.neg())
        return out

    def neg(self) -> Formula:
        if self.at("¬"):
            self.i += 1
            return Not(self.neg())
        if self.at("∀") or self.at("∃"):
            return self.formula()
        return self.atom()

    def atom(self) -> Formula:
        kind, v, pos = self.peek()
        if kind == "op" and v == "(":
            save = self.i
            try:
                self.i += 1
                inner = self.formula()
                self.expect(")")
            except FormulaSyntaxError:
                self.i = save
            else:
                if not self._at_relation():
                    return inner
                self.i = save
            return self.relation()
        if kind == "name" and self.peek(1)[1] == "(" and self._pred_name(v) is not None:
            name = self._pred_name(v)
            self.i += 2
            args = [self.term()]
            while self.at(","):
                self.i += 1
                args.append(self.term())
            self.expect(")")
            if len(args) != PRED_ARITY[name]:
                raise FormulaSyntaxError(
                    f"{name} takes {PRED_ARITY[name]} argument(s), got {len(args)}", pos
                )
            return Pred(name, tuple(args))
        return self.relation()

    @staticmethod
    def _pred_name(v: str):
        v = PRED_ALIASES.get(v, v)
        return v if v in PRED_ARITY else None

    def _at_relation(self) -> bool:
        kind, v, _ = self.peek()
        return kind == "op" and v in ("=", "≠", "<", ">", "≤", "≥", "+", "·", "^")

    def relation(self) -> Formula:
        left = self.term()
        kind, v, pos = self.peek()
        if kind != "op" or v not in ("=", "≠", "<", ">", "≤", "≥"):
            raise FormulaSyntaxError(f"expected a relation, found {v or 'end of input'!r}", pos)
        self.i += 1
        right = self.term()
        if v == "=":
            return Eq(left, right)
        if v == "≠":
            return Not(Eq(left, right))
        if v == "<":
            return Lt(left, right)
        if v == ">":
            return Lt(right, left)
        if v == "≤":
            return Pred("le", (left, right))
        return Pred("le", (right, left))

    # terms

    def term(self) -> Term:
        out = self.prod()
        while self.at("+"):
            self.i += 1
            out = Add(out, self.prod())
        return out

    def prod(self) -> Term:
        out = self.power()
        while self.at("·"):
            self.i += 1
            out = Mul(out, self.power())
        return out

    def power(self) -> Term:
        base = self.primary()
        if self.at("^"):
            self.i += 1
            kind, v, pos = self.peek()
            if kind != "num":
                raise FormulaSyntaxError("exponent must be a decimal literal", pos)
            self.i += 1
            k = int(v)
            if k == 0:
                return ONE
            out = base
            for _ in range(k - 1):
                out = Mul(out, base)
            return out
        return base

    def primary(self) -> Term:
        kind, v, pos = self.peek()
        if kind == "num":
            if int(v) > MAX_NUMERAL:
                raise FormulaSyntaxError(f"numeral {v} exceeds {MAX_NUMERAL} (numerals are unary terms)", pos)
            self.i += 1
            return numeral(int(v))
        if kind == "name":
            if v in PRED_ARITY or v in PRED_ALIASES:
                raise FormulaSyntaxError(f"predicate {v!r} used as a term", pos)
            self.i += 1
            return Var(v)
        if kind == "op" and v == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        raise FormulaSyntaxError(f"expected a term, found {v or 'end of input'!r}", pos)


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    kind, v, pos = p.peek()
    if kind != "end":
        raise FormulaSyntaxError(f"unexpected {v!r}", pos)
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    kind, v, pos = p.peek()
    if kind != "end":
        raise FormulaSyntaxError(f"unexpected {v!r}", pos)
    return t


# -- printer -------------------------------------------------------------------------------

_ASCII = {"∀": "forall ", "∃": "exists ", "¬": "~", "∧": "&", "∨": "|", "→": "->", "·": "*"}
_UNICODE = {"∀": "∀", "∃": "∃", "¬": "¬", "∧": "∧", "∨": "∨", "→": "→", "·": "·"}


def pretty_term(t: Term, unicode: bool = False, _min: int = 0) -> str:
    sym = _UNICODE if unicode else _ASCII
    u = numeral_value(t)
    if u is not None:
        return str(u)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Add):
        s = f"{pretty_term(t.left, unicode, 1)} + {pretty_term(t.right, unicode, 2)}"
        return f"({s})" if _min > 1 else s
    if isinstance(t, Mul):
        s = f"{pretty_term(t.left, unicode, 2)} {sym['·']} {pretty_term(t.right, unicode, 3)}"
        return f"({s})" if _min > 2 else s
    raise TypeError(f"not a term: {t!r}")


def pretty(f: Formula, unicode: bool = False, _min: int = 0) -> str:
    """Render a formula; ``parse(pretty(f)) == f`` for every formula."""
    sym = _UNICODE if unicode else _ASCII
    t = lambda x: pretty_term(x, unicode)  # noqa: E731

    def wrap(s: str, prec: int) -> str:
        return f"({s})" if prec < _min else s

    if isinstance(f, Eq):
        return wrap(f"{t(f.left)} = {t(f.right)}", 5)
    if isinstance(f, Lt):
        return wrap(f"{t(f.left)} < {t(f.right)}", 5)
    if isinstance(f, Pred):
        if f.name == "le":
            op = "≤" if unicode else "<="
            return wrap(f"{t(f.args[0])} {op} {t(f.args[1])}", 5)
        return f"{f.name}({', '.join(t(a) for a in f.args)})"
    if isinstance(f, Not):
        return f"{sym['¬']}({pretty(f.body, unicode, 0)})"
    if isinstance(f, And):
        return wrap(f"{pretty(f.left, unicode, 3)} {sym['∧']} {pretty(f.right, unicode, 4)}", 3)
    if isinstance(f, Or):
        return wrap(f"{pretty(f.left, unicode, 2)} {sym['∨']} {pretty(f.right, unicode, 3)}", 2)
    if isinstance(f, Implies):
        return wrap(f"{pretty(f.left, unicode, 2)} {sym['→']} {pretty(f.right, unicode, 1)}", 1)
    if isinstance(f, Quantifier):
        cls, names, body = type(f), [f.var], f.body
        while type(body) is cls:
            names.append(body.var)
            body = body.body
        head = sym["∀" if cls is Forall else "∃"]
        sep = "" if unicode else ""
        s = f"{head}{sep}{' '.join(names)}. {pretty(body, unicode, 0)}"
        return f"({s})" if _min > 0 else s
    raise TypeError(f"not a formula: {f!r}")
