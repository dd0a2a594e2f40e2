"""p-good numbers: the predicate, enumeration, and the largest p-good number.

A number ``n`` is *p-good* when every totative of ``n`` whose prime
factors all exceed ``p`` is itself prime.  Passing ``p=None`` drops the
filter, giving the classic "all totatives are prime" property.

Counterexamples are composite, so the search only needs the composites
whose least prime factor exceeds ``p`` (the *rough composites*).  These are
taken from a smallest-prime-factor table and tested against ``n`` with a
vectorised gcd.
"""

from __future__ import annotations

import json
import threading
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from . import arith
from .errors import CertificationFailed, NotPrime, OutOfRange

CLASSIC_BOUND = 290


@dataclass(frozen=True)
class PGoodReport:
    n: int
    p: Optional[int]
    good: bool
    witness: Optional[int] = None

    def __post_init__(self):
        if self.good and self.witness is not None:
            raise ValueError("a good report carries no witness")
        if not self.good and self.witness is None:
            raise ValueError("a failed report needs a witness")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_record(self) -> str:
        p = "none" if self.p is None else str(self.p)
        w = "-" if self.witness is None else str(self.witness)
        return f"n={self.n} p={p} good={str(self.good).lower()} witness={w}"

    @classmethod
    def from_dict(cls, d: dict) -> "PGoodReport":
        return cls(n=d["n"], p=d["p"], good=d["good"], witness=d["witness"])

    @classmethod
    def from_record(cls, line: str) -> "PGoodReport":
        f = dict(item.split("=", 1) for item in line.split())
        return cls(
            n=int(f["n"]),
            p=None if f["p"] == "none" else int(f["p"]),
            good=f["good"] == "true",
            witness=None if f["witness"] == "-" else int(f["witness"]),
        )


class _RoughComposites:
    """Sorted composites with least prime factor above ``p``, grown on demand."""

    def __init__(self):
        self._lock = threading.Lock()
        self._limit = 0
        self._spf = np.zeros(1, dtype=np.int64)
        self._by_p: dict[int, np.ndarray] = {}

    def upto(self, p: Optional[int], n: int) -> np.ndarray:
        with self._lock:
            if n > self._limit:
                limit = max(n, 2 * self._limit, 1024)
                self._spf = arith.smallest_factor_table(limit)
                self._limit = limit
                self._by_p.clear()
            key = 0 if p is None else p
            arr = self._by_p.get(key)
            if arr is None:
                idx = np.arange(self._spf.size, dtype=np.int64)
                mask = (self._spf > key) & (self._spf != idx)
                arr = np.flatnonzero(mask).astype(np.int64)
                self._by_p[key] = arr
        return arr[: np.searchsorted(arr, n)]


_rough = _RoughComposites()


def _least_witness(n: int, p: Optional[int]) -> Optional[int]:
    cands = _rough.upto(p, n)
    if cands.size == 0:
        return None
    hits = np.flatnonzero(np.gcd(cands, n) == 1)
    return int(cands[hits[0]]) if hits.size else None


def is_p_good(n: int, p: int) -> PGoodReport:
    """Decide p-goodness of ``n``; a failure carries the least composite
    totative with no prime factor ``<= p``."""
    if not arith.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    w = _least_witness(n, p)
    return PGoodReport(n, p, w is None, w)


def all_totatives_prime(n: int) -> PGoodReport:
    w = _least_witness(n, None)
    return PGoodReport(n, None, w is None, w)


def enumerate_p_good(p: Optional[int], limit: int) -> list[int]:
    """All p-good ``n`` in ``1..limit``; ``p=None`` enumerates the classic case."""
    if p is not None and not arith.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return [n for n in range(1, limit + 1) if _least_witness(n, p) is None]


def weak_bound(p: int) -> int:
    """A number from which on nothing is p-good: ``S(S(S(p)))**2 + 1`` for
    ``p >= 7``, and 290 for the small primes."""
    if not arith.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 7:
        return CLASSIC_BOUND
    s3 = arith.nth_successor(p, 3)
    return s3 * s3 + 1


def strong_bound(p: int) -> int:
    """Closed form ``S(p) * k_p`` of the largest p-good number, ``p > 7``."""
    if not arith.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p <= 7:
        raise OutOfRange(f"closed form needs p > 7, got {p}; use largest_p_good")
    return arith.successor_prime(p) * arith.kp_floor(p)


def largest_p_good(p: int) -> int:
    """Largest p-good number, certified by brute force.

    For ``p > 7`` the closed form is re-checked: it must be p-good and
    nothing strictly between it and ``weak_bound(p)`` may be.  For small
    ``p`` the range below 290 is scanned.
    """
    wb = weak_bound(p)
    if p <= 7:
        return max(enumerate_p_good(p, wb - 1))
    sb = strong_bound(p)
    if _least_witness(sb, p) is not None:
        raise CertificationFailed(f"strong bound {sb} is not {p}-good")
    for m in range(sb + 1, wb):
        if _least_witness(m, p) is None:
            raise CertificationFailed(f"{m} > {sb} is {p}-good")
    return sb
