"""
Prime gap inequalities
======================

Scans over consecutive primes, vectorised on a sieve. A report keeps the
count checked and every failure with both sides of the inequality.
"""

import time

from schatunowsky import inequalities as iq

for which in ("a19", "eq4", "chebyshev"):
    t = time.perf_counter()
    rep = iq.scan(which, 10**6)
    print(f"{which:10s} checked={rep.checked} failures={len(rep.failures)} {time.perf_counter() - t:.2f}s")

# Bonse: the (k+1)-th prime squared is below the product of the first k
print(iq.scan("bonse", 500).ok)

# reports over disjoint ranges merge into the report over their union
left, right = iq.scan("a19", 5000), iq.scan("a19", 10**4, 5001)
print(left.merge(right) == iq.scan("a19", 10**4))
