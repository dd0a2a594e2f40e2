"""
The command line
================

Every capability is reachable from ``schatunowsky``. Here the entry
point is called in-process; the exit status is 0 when everything held,
1 on a counterexample and 2 on bad input.
"""

from schatunowsky.cli import run

run(["pgood", "largest", "--p", "7"])
run(["ineq", "scan", "--which", "chebyshev", "--limit", "100000"])
run(["model", "qz", "irreducible", "X + 2"])
run(["formula", "eval", "exists y. y * 2 = x", "--structure", "QZ", "--assign", "x=X + 2"])
print(run(["formula", "check-structure", "--structure", "N<=12", "--axioms", "A16", "--samples", "5"]))
