"""
Primes in polynomial cones
==========================

Polynomials with positive leading coefficient form a discretely ordered
cone. In Z[X] every irreducible element has a successor and a
predecessor prime. In Q_Z[X] (integer constant, rational coefficients
above) a linear prime has no successor: another prime sits in between.
"""

from schatunowsky import polymodels as pm
from schatunowsky.polys import IntPoly, QZPoly

X = IntPoly.parse("X")

f = IntPoly.parse("X^2 + 1")
print(pm.is_irreducible_int(f), pm.predecessor_prime_int(f), pm.successor_prime_int(f))

# the consecutive-prime inequality holds for nonstandard primes too
print(pm.a19_check_int(f))

# below X^3 there is always a bigger prime whose square still fits
p = IntPoly.parse("5X + 3")
print(pm.a18_bigger_prime(X**3, p))

# the largest X-good element
print(pm.strong_bound_int(X))

# in Q_Z[X], X + z splits off the factor z (or 2 when z = 0)
QX = QZPoly.parse("X")
for z in (0, 2, -3, 6):
    print(pm.is_irreducible_qz(QX + z))

a, b = QZPoly.parse("X + 1"), QZPoly.parse("2X - 1")
print(pm.between_prime_qz(a, b), pm.successor_candidate_refuted(a, b))
