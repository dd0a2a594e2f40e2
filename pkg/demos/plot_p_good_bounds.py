"""
Largest p-good numbers
======================

Every totative of 30 is prime, and nothing larger has that property.
Relaxing the condition to totatives whose prime factors all exceed p
gives a largest p-good number for every p.
"""

from schatunowsky import arith, pgood

# the classic list: all totatives prime
print(pgood.enumerate_p_good(None, 200))

# a report carries the least offending totative when n is not good
print(pgood.all_totatives_prime(32).to_record())
print(pgood.is_p_good(290, 7).to_record())

# for p > 7 the largest p-good number is S(p) * k_p, found without search
for p in (7, 11, 13, 19, 23):
    print(p, pgood.largest_p_good(p), pgood.weak_bound(p), arith.kp_floor(p) if p > 7 else "-")
