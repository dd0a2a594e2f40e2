"""Three-valued bounded evaluation of formulas in a structure.

Quantifier-free formulas evaluate exactly.  A universal is False only
when a candidate falsifies its body, and True only when the candidates
exhaust the quantifier's range (a finite carrier, or a bounded guard such
as ``u <= p`` where the structure can list everything below ``p``).
Existentials are dual.  Everything else is Unknown.  Connectives follow
Kleene's strong three-valued tables.

Every decisive verdict carries its certificate: the chain of quantifier
bindings that led to it.  :func:`certify` replays that chain.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import catalog
from .structures import Structure
from .syntax import (
    Add, And, Eq, Exists, Forall, Implies, Lt, Mul, Not, One, Or, Pred, Var, Zero,
    Formula, Term, Quantifier, pretty, term_vars,
)


class TriBool(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __invert__(self):
        if self is TriBool.TRUE:
            return TriBool.FALSE
        if self is TriBool.FALSE:
            return TriBool.TRUE
        return self

    @classmethod
    def of(cls, b: bool) -> "TriBool":
        return cls.TRUE if b else cls.FALSE


T, F, U = TriBool.TRUE, TriBool.FALSE, TriBool.UNKNOWN


@dataclass
class Budget:
    per_quantifier: int = 16
    max_steps: int = 200_000

    @classmethod
    def of(cls, b) -> "Budget":
        if isinstance(b, Budget):
            return b
        return cls(per_quantifier=int(b))


@dataclass
class Verdict:
    value: TriBool
    bindings: tuple = ()
    exhausted: bool = False
    refuted: tuple = ()

    @property
    def decisive(self) -> bool:
        return self.value is not U


Hints = dict  # var name -> Callable[[Structure, dict], list]


@dataclass
class _Ctx:
    s: Structure
    budget: Budget
    seed: int
    hints: dict
    steps: int = 0
    exhausted: bool = False
    max_refuted: int = 64


def eval_term(t: Term, s: Structure, env: dict):
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise KeyError(f"unassigned variable {t.name!r}") from None
    if isinstance(t, Zero):
        return s.zero
    if isinstance(t, One):
        return s.one
    if isinstance(t, Add):
        return s.add(eval_term(t.left, s, env), eval_term(t.right, s, env))
    if isinstance(t, Mul):
        return s.mul(eval_term(t.left, s, env), eval_term(t.right, s, env))
    raise TypeError(f"not a term: {t!r}")


def _conjuncts(f: Formula):
    if isinstance(f, And):
        yield from _conjuncts(f.left)
        yield from _conjuncts(f.right)
    else:
        yield f


def _bounded_range(var: str, guard: Formula, ctx: _Ctx, env: dict):
    """Finite candidate list when ``guard`` contains ``var < t`` or
    ``var <= t`` with ``t`` free of ``var``."""
    if ctx.s.below is None:
        return None
    for c in _conjuncts(guard):
        if isinstance(c, Lt) and c.left == Var(var) and var not in term_vars(c.right):
            strict, bound = True, c.right
        elif (isinstance(c, Pred) and c.name == "le" and c.args[0] == Var(var)
              and var not in term_vars(c.args[1])):
            strict, bound = False, c.args[1]
        else:
            continue
        try:
            top = eval_term(bound, ctx.s, env)
        except KeyError:
            continue
        items = ctx.s.below(top)
        if items is not None:
            return [x for x in items if not (strict and ctx.s.equal(x, top))]
    return None


def _candidates(q: Formula, ctx: _Ctx, env: dict):
    """(candidates, exhaustive) for quantifier ``q``."""
    s = ctx.s
    if s.finite_carrier is not None:
        return list(s.finite_carrier), True
    # a universal is bounded only by an implication's antecedent, an
    # existential by a conjunct of its body
    if isinstance(q, Forall):
        guard = q.body.left if isinstance(q.body, Implies) else None
    else:
        guard = q.body
    bounded = None if guard is None else _bounded_range(q.var, guard, ctx, env)
    if bounded is not None:
        return bounded, True
    out, seen = [], set()
    hint = ctx.hints.get(q.var)
    if hint is not None:
        for x in hint(s, env) or ():
            if x not in seen:
                seen.add(x)
                out.append(x)
    for x in s.pool(ctx.seed, ctx.budget.per_quantifier):
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out, False


def _eval(f: Formula, ctx: _Ctx, env: dict) -> Verdict:
    s = ctx.s
    if isinstance(f, Eq):
        return Verdict(TriBool.of(s.equal(eval_term(f.left, s, env), eval_term(f.right, s, env))))
    if isinstance(f, Lt):
        return Verdict(TriBool.of(s.less(eval_term(f.left, s, env), eval_term(f.right, s, env))))
    if isinstance(f, Pred):
        args = [eval_term(a, s, env) for a in f.args]
        if f.name == "le":
            return Verdict(TriBool.of(s.less(args[0], args[1]) or s.equal(args[0], args[1])))
        decided = s.decide(f.name, args)
        if decided is not None:
            return Verdict(TriBool.of(bool(decided)))
        # unfold with fresh parameter names bound in the environment
        params, _ = catalog.DEFINITIONS[f.name]
        names = [f"#{f.name}{i}" for i in range(len(params))]
        inner = catalog.expand(Pred(f.name, tuple(Var(n) for n in names)))
        return _eval(inner, ctx, {**env, **dict(zip(names, args))})
    if isinstance(f, Not):
        v = _eval(f.body, ctx, env)
        return Verdict(~v.value, v.bindings, v.exhausted)
    if isinstance(f, (And, Or, Implies)):
        if isinstance(f, Implies):
            left = _eval(f.left, ctx, env)
            left = Verdict(~left.value, left.bindings, left.exhausted)
            absorbing = T
        else:
            left = _eval(f.left, ctx, env)
            absorbing = F if isinstance(f, And) else T
        if left.value is absorbing:
            return left
        right = _eval(f.right, ctx, env)
        if right.value is absorbing:
            return right
        if left.value is U or right.value is U:
            return Verdict(U, exhausted=left.exhausted or right.exhausted)
        return Verdict(left.value, left.bindings + right.bindings)
    if isinstance(f, Quantifier):
        return _eval_quantifier(f, ctx, env)
    raise TypeError(f"not a formula: {f!r}")


def _eval_quantifier(f, ctx: _Ctx, env: dict) -> Verdict:
    decisive = F if isinstance(f, Forall) else T
    cands, exhaustive = _candidates(f, ctx, env)
    unknown = False
    refuted = []
    for a in cands:
        if ctx.steps >= ctx.budget.max_steps:
            ctx.exhausted = True
            return Verdict(U, exhausted=True, refuted=tuple(refuted))
        ctx.steps += 1
        v = _eval(f.body, ctx, {**env, f.var: a})
        if v.value is decisive:
            return Verdict(decisive, ((f.var, a),) + v.bindings)
        if v.value is U:
            unknown = True
        elif isinstance(f, Exists) and len(refuted) < ctx.max_refuted:
            refuted.append((a, v.bindings))
    if exhaustive and not unknown:
        return Verdict(~decisive)
    return Verdict(U, exhausted=ctx.exhausted, refuted=tuple(refuted))


def eval_bounded(f: Formula, s: Structure, env: Optional[dict] = None, budget=16,
                 seed: int = 0, hints: Optional[Hints] = None) -> Verdict:
    """Evaluate ``f`` under ``env``; see the module docstring for semantics.

    ``hints`` maps a bound variable name to a callable ``(structure, env)
    -> candidates`` that is tried before the sampled pool (guided
    instantiation).
    """
    ctx = _Ctx(s, Budget.of(budget), seed, hints or {})
    return _eval(f, ctx, dict(env or {}))


def certify(f: Formula, s: Structure, env: dict, verdict: Verdict, budget=16, seed=0,
            hints=None) -> bool:
    """Replay a decisive verdict's bindings.

    Each binding instantiates the next quantifier on the decisive path; the
    remaining formula is re-evaluated and must give the same value.  When
    the bindings reach the quantifier-free matrix, the final check is exact.
    """
    if not verdict.decisive:
        return True
    env = dict(env)
    g = f
    for var, value in verdict.bindings:
        while not isinstance(g, Quantifier) and isinstance(g, Not):
            g = g.body
        if not isinstance(g, Quantifier) or g.var != var:
            # binding came from inside a connective; re-evaluate the whole
            break
        env[var] = value
        g = g.body
    polarity = _polarity(f, g)
    again = eval_bounded(g, s, env, budget, seed, hints)
    expected = verdict.value if polarity else ~verdict.value
    return again.value is expected


def _polarity(f: Formula, g: Formula) -> bool:
    """False when an odd number of negations separate ``f`` from ``g``."""
    pol = True
    while f is not g:
        if isinstance(f, Not):
            pol = not pol
            f = f.body
        elif isinstance(f, Quantifier):
            f = f.body
        else:
            break
    return pol


# -- bulk checking ----------------------------------------------------------------------------


def _h(name, *argvars, transform: Callable = None):
    def hint(s, env):
        args = [env.get(v) for v in argvars]
        if transform is not None:
            args = transform(s, *args)
            if args is None:
                return []
        return s.helper(name, *args)

    return hint


def _square(s, a, b):
    return (s.mul(b, b), a) if a is not None and b is not None else None


DEFAULT_HINTS: dict[str, dict[str, Callable]] = {
    "A13": {"z": _h("monus", "y", "x")},
    "A16": {"q": _h("successor_prime", "p"), "u": _h("prime_between", "p", "q")},
    "A17": {"q": _h("predecessor_prime", "p"), "u": _h("prime_between", "q", "p")},
    "A18": {"p": _h("max_prime_sq_below", "n"), "q": _h("bigger_prime_sq_below", "n", "p")},
    "A20": {"p": _h("prime_divisor", "n")},
    "A21": {"k": _h("floor_div", "p", "q", transform=_square)},
    "GSw": {"n": _h("weak_bound", "p"), "q": _h("pgood_witness", "p", "m")},
    "GSs": {"n": _h("largest_p_good", "p"), "q": _h("pgood_witness", "p", "m")},
}


@dataclass
class AxiomReport:
    name: str
    verdict: TriBool
    instances: int
    true_count: int
    unknown_count: int
    counterexamples: list = field(default_factory=list)
    refuted_candidates: list = field(default_factory=list)
    exhausted: bool = False

    def to_dict(self) -> dict:
        return {
            "axiom": self.name,
            "verdict": self.verdict.value,
            "instances": self.instances,
            "true": self.true_count,
            "unknown": self.unknown_count,
            "false": self.instances - self.true_count - self.unknown_count,
            "counterexamples": self.counterexamples,
            "refuted_candidates": self.refuted_candidates,
            "budget_exhausted": self.exhausted,
        }


@dataclass
class StructureReport:
    structure: str
    seed: int
    budget: int
    samples: int
    axioms: list

    @property
    def counterexample_count(self) -> int:
        return sum(len(a.counterexamples) for a in self.axioms)

    def to_dict(self) -> dict:
        return {
            "structure": self.structure,
            "seed": self.seed,
            "budget": self.budget,
            "samples": self.samples,
            "axioms": [a.to_dict() for a in self.axioms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _fmt_bindings(s: Structure, bindings) -> dict:
    return {str(k): s.fmt(v) for k, v in bindings}


def check_structure(s: Structure, names, seed: int = 0, budget=16, samples: int = 1000,
                    instantiate: Optional[dict] = None, hints: Optional[Hints] = None,
                    max_reported: int = 20) -> StructureReport:
    """Falsification harness over catalog entries.

    The leading universal block of each formula is instantiated with
    ``samples`` seeded random tuples (or values from ``instantiate``, a map
    from variable name to a list of elements cycled through); the rest is
    evaluated with :func:`eval_bounded`.
    """
    bud = Budget.of(budget)
    reports = []
    for name in names:
        f = catalog.lookup(name)
        prefix = []
        body = f
        while isinstance(body, Forall):
            prefix.append(body.var)
            body = body.body
        merged = {**DEFAULT_HINTS.get(name, {}), **(hints or {})}
        rng = random.Random(f"{seed}:{name}")
        rep = AxiomReport(name, U, 0, 0, 0)
        fixed_tuples = None
        if s.finite_carrier is not None:
            fixed_tuples = list(itertools.product(s.finite_carrier, repeat=len(prefix)))
        count = len(fixed_tuples) if fixed_tuples is not None else samples
        for i in range(count):
            if fixed_tuples is not None:
                env = dict(zip(prefix, fixed_tuples[i]))
            else:
                env = {}
                for v in prefix:
                    pool = (instantiate or {}).get(v)
                    env[v] = pool[i % len(pool)] if pool else s.random_element(rng)
            ctx = _Ctx(s, bud, seed, merged)
            verdict = _eval(body, ctx, env)
            rep.instances += 1
            rep.exhausted |= ctx.exhausted
            if verdict.value is T:
                rep.true_count += 1
            elif verdict.value is U:
                rep.unknown_count += 1
                if verdict.refuted and len(rep.refuted_candidates) < max_reported:
                    rep.refuted_candidates.append({
                        "assignment": _fmt_bindings(s, env.items()),
                        "refuted": [
                            {"candidate": s.fmt(a), "counter": _fmt_bindings(s, b)}
                            for a, b in verdict.refuted
                        ],
                    })
            else:
                if len(rep.counterexamples) < max_reported:
                    rep.counterexamples.append(_fmt_bindings(s, list(env.items()) + list(verdict.bindings)))
        if rep.counterexamples:
            rep.verdict = F
        elif fixed_tuples is not None and rep.unknown_count == 0:
            rep.verdict = T
        else:
            rep.verdict = U
        reports.append(rep)
    return StructureReport(s.name, seed, bud.per_quantifier, samples, reports)


__all__ = [
    "TriBool", "Budget", "Verdict", "eval_term", "eval_bounded", "certify",
    "check_structure", "StructureReport", "AxiomReport", "DEFAULT_HINTS", "pretty",
]
