"""Natural-number arithmetic for the standard model.

Primality, successor and predecessor primes, totatives and the two
witness functions used by the bound computations (largest prime whose
square is below ``n``, and the floor quotient ``k_p``).

Python integers are arbitrary precision, so ``int`` serves as the carrier
type throughout; negative inputs are rejected where they would be
meaningless.
"""

from __future__ import annotations

import math
import os
import threading
from bisect import bisect_left, bisect_right
from typing import Iterator

import numpy as np

from .errors import CacheFormatError, NoPredecessor, NotPrime, TooSmall

CACHE_ENV_VAR = "SCHATUNOWSKY_PRIME_CACHE"
CACHE_FORMAT_VERSION = 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the bases above is deterministic below this bound.
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_TRIAL_LIMIT = 10**10
# beyond this the table stops growing and queries scan with is_prime
SIEVE_CEILING = 1 << 27


def sieve(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an ``int64`` array (sieve of Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(limit) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    return np.flatnonzero(flags).astype(np.int64)


def smallest_factor_table(limit: int) -> np.ndarray:
    """``spf[t]`` is the least prime factor of ``t`` for ``2 <= t <= limit``.

    Entries 0 and 1 are 0.
    """
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit < 2:
        return spf
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            seg = spf[i * i :: i]
            seg[seg == 0] = i
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[:2] = 0
    return spf


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division_is_prime(n: int) -> bool:
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def is_prime(n: int) -> bool:
    """True iff ``n`` is a prime number.

    Trial division below 10**10, deterministic Miller-Rabin up to
    3.3e24, trial division again beyond that (slow but exact).
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n < _TRIAL_LIMIT or n >= _MR_DETERMINISTIC_LIMIT:
        return _trial_division_is_prime(n)
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    return _miller_rabin(n)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


class PrimeCtx:
    """A growable table of all primes up to ``limit``.

    Extension doubles the limit and is guarded by a lock; the table is
    otherwise read-only.
    """

    def __init__(self, limit: int = 1 << 16, primes=None):
        self._lock = threading.Lock()
        if primes is None:
            primes = sieve(limit).tolist()
        self.limit = limit
        self.primes: list[int] = list(primes)

    def __repr__(self):
        return f"PrimeCtx(limit={self.limit}, count={len(self.primes)})"

    def ensure(self, limit: int) -> None:
        if limit <= self.limit:
            return
        with self._lock:
            if limit <= self.limit:
                return
            new_limit = self.limit
            while new_limit < limit:
                new_limit *= 2
            self.primes = sieve(new_limit).tolist()
            self.limit = new_limit

    def successor(self, p: int) -> int:
        """Least prime strictly above ``p`` (any integer ``p``)."""
        if 2 * p + 2 > SIEVE_CEILING:
            q = p + 1
            while not is_prime(q):
                q += 1
            return q
        while not self.primes or self.primes[-1] <= p:
            self.ensure(max(2 * self.limit, 2 * p + 2))
        return self.primes[bisect_right(self.primes, p)]

    def predecessor(self, p: int) -> int:
        """Greatest prime strictly below ``p``."""
        if p <= 2:
            raise NoPredecessor(f"no prime below {p}")
        return self.prime_at_most(p - 1)

    def prime_at_most(self, n: int) -> int:
        if n < 2:
            raise TooSmall(f"no prime <= {n}")
        if n > SIEVE_CEILING:
            while not is_prime(n):
                n -= 1
            return n
        self.ensure(n)
        return self.primes[bisect_right(self.primes, n) - 1]

    def primes_between(self, lo: int, hi: int) -> list[int]:
        """Primes ``p`` with ``lo <= p <= hi``."""
        self.ensure(hi)
        return self.primes[bisect_left(self.primes, lo) : bisect_right(self.primes, hi)]

    def nth(self, k: int) -> int:
        """The ``k``-th prime, 1-based (``nth(1) == 2``)."""
        while len(self.primes) < k:
            self.ensure(2 * self.limit)
        return self.primes[k - 1]

    # -- cache file -------------------------------------------------------

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(
                f"# schatunowsky-primes version={CACHE_FORMAT_VERSION} "
                f"limit={self.limit} count={len(self.primes)}\n"
            )
            fh.write("\n".join(map(str, self.primes)))
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "PrimeCtx":
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline().split()
            if len(header) != 5 or header[:2] != ["#", "schatunowsky-primes"]:
                raise CacheFormatError(f"{path}: missing cache header")
            fields = dict(item.split("=", 1) for item in header[2:])
            if int(fields["version"]) != CACHE_FORMAT_VERSION:
                raise CacheFormatError(f"{path}: unsupported version {fields['version']}")
            primes = [int(line) for line in fh if line.strip()]
        if len(primes) != int(fields["count"]):
            raise CacheFormatError(f"{path}: count mismatch")
        return cls(int(fields["limit"]), primes)


_default_ctx: PrimeCtx | None = None
_default_lock = threading.Lock()


def default_ctx() -> PrimeCtx:
    """The process-wide table; seeded from the cache file when the
    environment variable points at one."""
    global _default_ctx
    if _default_ctx is None:
        with _default_lock:
            if _default_ctx is None:
                path = os.environ.get(CACHE_ENV_VAR)
                if path and os.path.exists(path):
                    _default_ctx = PrimeCtx.load(path)
                else:
                    _default_ctx = PrimeCtx()
    return _default_ctx


def set_default_ctx(ctx: PrimeCtx) -> None:
    global _default_ctx
    _default_ctx = ctx


def successor_prime(p: int, ctx: PrimeCtx | None = None) -> int:
    """Least prime greater than the prime ``p``."""
    _require_prime(p)
    return (ctx or default_ctx()).successor(p)


def predecessor_prime(p: int, ctx: PrimeCtx | None = None) -> int:
    """Greatest prime less than the prime ``p``; ``p`` must exceed 2."""
    _require_prime(p)
    if p == 2:
        raise NoPredecessor("2 has no predecessor prime")
    return (ctx or default_ctx()).predecessor(p)


def nth_successor(p: int, k: int, ctx: PrimeCtx | None = None) -> int:
    _require_prime(p)
    for _ in range(k):
        p = successor_prime(p, ctx)
    return p


def max_prime_sq_below(n: int, ctx: PrimeCtx | None = None) -> int:
    """The largest prime whose square is less than ``n`` (``n > 4``)."""
    if n <= 4:
        raise TooSmall(f"need n > 4, got {n}")
    return (ctx or default_ctx()).prime_at_most(math.isqrt(n - 1))


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; ``gcd(0, 0) == 0`` by convention."""
    return math.gcd(a, b)


def coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def totatives(n: int) -> Iterator[int]:
    """Lazily yield every ``t`` with ``1 < t < n`` and ``gcd(t, n) == 1``."""
    for t in range(2, n):
        if math.gcd(t, n) == 1:
            yield t


def smallest_prime_factor(n: int) -> int:
    if n <= 1:
        raise TooSmall(f"{n} has no prime factor")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    out: dict[int, int] = {}
    while n > 1:
        p = smallest_prime_factor(n)
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    return out


def kp_floor(p: int, ctx: PrimeCtx | None = None) -> int:
    """The ``k`` with ``k*S(p) < S(S(p))**2 < (k+1)*S(p)``."""
    _require_prime(p)
    s = successor_prime(p, ctx)
    ss = successor_prime(s, ctx)
    target = ss * ss
    assert target % s != 0, "distinct primes: S(p) cannot divide S(S(p))^2"
    k = target // s
    assert k * s < target < (k + 1) * s
    return k
