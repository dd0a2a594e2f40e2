"""
Checking axioms by bounded evaluation
=====================================

Formulas are evaluated with three values. True and False are only
returned with a witness or counterexample that replays exactly; a
search that runs out of budget says Unknown.
"""

from schatunowsky.folio import (
    certify, check_structure, eval_bounded, lookup, natural_numbers, parse, pretty, qz_cone,
)

n = natural_numbers()

f = parse("exists z. 3 + z = 5")
v = eval_bounded(f, n)
print(v.value, v.bindings, certify(f, n, {}, v))

g = parse("forall x. x < 10")
print(eval_bounded(g, n).value, eval_bounded(g, n).bindings)

# every catalog axiom prints and parses back to itself
print(pretty(lookup("A19"), unicode=True))

# sampling the ordered-ring axioms in Q_Z[X]
rep = check_structure(qz_cone(), ["A1", "A5", "A13", "A19"], seed=1, samples=200)
for a in rep.axioms:
    print(a.name, a.verdict.value, a.true_count, len(a.counterexamples))
