"""The axioms A1-A21, the weak and strong p-good bound statements and
the defined predicates, as parsed formulas.

Axioms written with free variables are universally closed.
Where the displayed formula's literal bracketing would not express its
stated meaning, the intended reading is encoded:

* A16/A17: the minimality clause is its own implication inside the
  consequent; A17 carries the guard ``2 < p`` (2 has no predecessor).
* A19/A21: ``consecutive(a, b)`` quantifies its comparison variable
  internally (``a`` and ``b`` are consecutive primes).
* GSs: the quantifier over the small primes ``v`` sits inside the
  antecedent that it restricts.
"""

from __future__ import annotations

from .syntax import Formula, Pred, Var, free_vars, parse, subst

AXIOM_TEXT = {
    "A1": "forall x y z. (x + y) + z = x + (y + z)",
    "A2": "forall x y. x + y = y + x",
    "A3": "forall x y z. (x * y) * z = x * (y * z)",
    "A4": "forall x y. x * y = y * x",
    "A5": "forall x y z. x * (y + z) = x * y + x * z",
    "A6": "forall x. x + 0 = x & x * 0 = 0",
    "A7": "forall x. x * 1 = x",
    "A8": "forall x y z. x < y & y < z -> x < z",
    "A9": "forall x. ~(x < x)",
    "A10": "forall x y. x < y | x = y | y < x",
    "A11": "forall x y z. x < y -> x + z < y + z",
    "A12": "forall x y z. 0 < z & x < y -> x * z < y * z",
    "A13": "forall x y. exists z. x < y -> x + z = y",
    "A14": "forall x. 0 < 1 & (x > 0 -> x > 1 | x = 1)",
    "A15": "forall x. x > 0 | x = 0",
    "A16": "forall p. exists q. forall u. prime(p) -> p < q & prime(q) & (prime(u) & p < u -> q <= u)",
    "A17": "forall p. exists q. forall u. prime(p) & 2 < p -> q < p & prime(q) & (prime(u) & u < p -> u <= q)",
    "A18": "forall n. exists p. forall q. 4 < n -> prime(p) & p * p < n & (p < q & prime(q) -> n <= q * q)",
    "A19": "forall r p q. 17 < q & consecutive(r, p) & consecutive(p, q) -> q * q < 2 * p * r",
    "A20": "forall n. exists p. 1 < n -> prime(p) & divides(p, n)",
    "A21": "forall p q. exists k. consecutive(p, q) -> k * p < q * q & q * q < (k + 1) * p",
    "GSw": (
        "forall p. exists n. forall m. exists q. forall u. prime(p) & n <= m -> "
        "coprime(q, m) & q < m & 1 < q & (u <= p & prime(u) -> coprime(u, q)) & ~(prime(q))"
    ),
    "GSs": (
        "forall p. exists n. forall t m. exists q. forall u. prime(p) -> "
        "(1 < t & t < n & coprime(t, n) & (forall v. v <= p & prime(v) -> coprime(v, t)) -> prime(t)) & "
        "(n <= m -> coprime(q, m) & q < m & 1 < q & (u <= p & prime(u) -> coprime(u, q)) & ~(prime(q)))"
    ),
}

EXTRA_TEXT = {
    "Eq3": "forall x. prime(x) -> irreducible(x)",
}

# name -> (parameters, body); bodies use only the primitive signature and
# other defined predicates.
DEFINITION_TEXT = {
    "irreducible": (("x",), "forall a b. 1 < x & (x = a * b -> a = 1 | b = 1)"),
    "prime": (("x",), "forall a b c. exists d. 1 < x & (x * c = a * b -> x * d = a | x * d = b)"),
    "divides": (("x", "y"), "exists z. x * z = y"),
    "le": (("x", "y"), "x < y | x = y"),
    "coprime": (("m", "n"), "forall d. divides(d, m) & divides(d, n) -> d = 1"),
    "consecutive": (
        ("a", "b"),
        "prime(a) & prime(b) & a < b & (forall u. a < u & prime(u) -> b <= u)",
    ),
}

AXIOMS: dict[str, Formula] = {k: parse(v) for k, v in AXIOM_TEXT.items()}
EXTRAS: dict[str, Formula] = {k: parse(v) for k, v in EXTRA_TEXT.items()}
DEFINITIONS: dict[str, tuple] = {
    k: (params, parse(body)) for k, (params, body) in DEFINITION_TEXT.items()
}
PA_MINUS = tuple(f"A{i}" for i in range(1, 16))


def axiom_catalog() -> dict[str, Formula]:
    """A1-A21, GSw and GSs (23 closed formulas)."""
    return dict(AXIOMS)


def lookup(name: str) -> Formula:
    """A catalog axiom or one of the extra statements (``Eq3``)."""
    if name in AXIOMS:
        return AXIOMS[name]
    if name in EXTRAS:
        return EXTRAS[name]
    raise KeyError(f"unknown catalog entry {name!r}")


def expand(p: Pred) -> Formula:
    """One-step unfolding of a defined predicate applied to terms."""
    params, body = DEFINITIONS[p.name]
    return subst(body, dict(zip(params, p.args)))


def _check_closed():
    for name, f in {**AXIOMS, **EXTRAS}.items():
        assert not free_vars(f), f"{name} has free variables {free_vars(f)}"
    for name, (params, body) in DEFINITIONS.items():
        assert free_vars(body) <= set(params), name


_check_closed()
__all__ = ["AXIOMS", "EXTRAS", "DEFINITIONS", "PA_MINUS", "axiom_catalog", "lookup", "expand", "Var"]
