"""Scanners for the prime inequalities assumed as axioms.

* ``a19``: for consecutive primes ``r < p < q`` with ``q > 17``,
  ``q**2 < 2*p*r``.
* ``eq4``: for a prime ``q >= 17``, ``S(q)**2 < 2*q*P(q)`` (the same
  statement indexed by the middle prime).
* ``chebyshev``: for a prime ``q >= 3``, ``q < 2*P(q)``.
* ``bonse``: for ``k >= 4``, ``p_{k+1}**2 < p_1 * ... * p_k``.

Bulk scans run on a numpy sieve in ``int64``; the resource budget keeps
every product well inside that range.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

import numpy as np

from . import arith
from .errors import BudgetExceeded, NotPrime, OutOfRange

A19_GUARD = 17
MAX_SCAN_LIMIT = 10**8
MAX_BONSE_K = 10**5
WHICH = ("a19", "eq4", "chebyshev", "bonse")


class Triple(NamedTuple):
    r: int
    p: int
    q: int


class Failure(NamedTuple):
    inputs: tuple
    lhs: int
    rhs: int


@dataclass
class ScanReport:
    which: str
    range: tuple[int, int]
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "ScanReport") -> "ScanReport":
        if other.which != self.which:
            raise ValueError("cannot merge scans of different inequalities")
        return ScanReport(
            self.which,
            (min(self.range[0], other.range[0]), max(self.range[1], other.range[1])),
            self.checked + other.checked,
            sorted(self.failures + other.failures),
        )

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "range": list(self.range),
            "checked": self.checked,
            "failures": [
                {"inputs": list(f.inputs), "lhs": str(f.lhs), "rhs": str(f.rhs)}
                for f in self.failures
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "which", "inputs", "lhs", "rhs", "checked"])
        for f in self.failures:
            w.writerow(["failure", self.which, " ".join(map(str, f.inputs)), f.lhs, f.rhs, ""])
        w.writerow(["summary", self.which, f"{self.range[0]}..{self.range[1]}", "", "", self.checked])
        return buf.getvalue()


def consecutive_triples(limit: int) -> Iterator[Triple]:
    """Every triple of consecutive primes with largest member ``<= limit``."""
    ps = arith.sieve(limit).tolist()
    for i in range(2, len(ps)):
        yield Triple(ps[i - 2], ps[i - 1], ps[i])


def check_a19(t: Triple) -> bool:
    r, p, q = t
    return q <= A19_GUARD or q * q < 2 * p * r


def check_eq4(q: int) -> bool:
    if not arith.is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q < A19_GUARD:
        raise OutOfRange(f"eq4 needs q >= 17, got {q}")
    s = arith.successor_prime(q)
    return s * s < 2 * q * arith.predecessor_prime(q)


def check_chebyshev(q: int) -> bool:
    if not arith.is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q < 3:
        raise OutOfRange("chebyshev needs q >= 3")
    return q < 2 * arith.predecessor_prime(q)


def check_bonse(k: int) -> bool:
    if k < 4:
        raise OutOfRange(f"Bonse's inequality needs k >= 4, got {k}")
    ctx = arith.default_ctx()
    product = 1
    for i in range(1, k + 1):
        product *= ctx.nth(i)
    nxt = ctx.nth(k + 1)
    return nxt * nxt < product


def _primes_with_margin(hi: int) -> np.ndarray:
    """Sieve to ``hi`` plus enough slack to include the prime after ``hi``."""
    limit = max(hi + 64, 32)
    while True:
        ps = arith.sieve(limit)
        if ps.size and ps[-1] > hi:
            return ps
        limit *= 2


def _fail_list(inputs: np.ndarray, lhs: np.ndarray, rhs: np.ndarray) -> list[Failure]:
    return [
        Failure(tuple(int(x) for x in np.atleast_1d(i)), int(a), int(b))
        for i, a, b in zip(inputs, lhs, rhs)
    ]


def _scan_a19(lo: int, hi: int) -> ScanReport:
    ps = arith.sieve(hi)
    r, p, q = ps[:-2], ps[1:-1], ps[2:]
    sel = q >= lo
    r, p, q = r[sel], p[sel], q[sel]
    lhs, rhs = q * q, 2 * p * r
    bad = (q > A19_GUARD) & ~(lhs < rhs)
    return ScanReport(
        "a19", (lo, hi), int(q.size),
        _fail_list(np.stack([r[bad], p[bad], q[bad]], axis=1), lhs[bad], rhs[bad]),
    )


def _scan_eq4(lo: int, hi: int) -> ScanReport:
    ps = _primes_with_margin(hi)
    prev, q, nxt = ps[:-2], ps[1:-1], ps[2:]
    sel = (q >= max(lo, A19_GUARD)) & (q <= hi)
    prev, q, nxt = prev[sel], q[sel], nxt[sel]
    lhs, rhs = nxt * nxt, 2 * q * prev
    bad = ~(lhs < rhs)
    return ScanReport("eq4", (lo, hi), int(q.size), _fail_list(q[bad], lhs[bad], rhs[bad]))


def _scan_chebyshev(lo: int, hi: int) -> ScanReport:
    ps = arith.sieve(hi)
    prev, q = ps[:-1], ps[1:]
    sel = q >= max(lo, 3)
    prev, q = prev[sel], q[sel]
    rhs = 2 * prev
    bad = ~(q < rhs)
    return ScanReport("chebyshev", (lo, hi), int(q.size), _fail_list(q[bad], q[bad], rhs[bad]))


def _scan_bonse(lo: int, hi: int) -> ScanReport:
    lo = max(lo, 4)
    ctx = arith.default_ctx()
    product = 1
    for i in range(1, lo):
        product *= ctx.nth(i)
    report = ScanReport("bonse", (lo, hi))
    for k in range(lo, hi + 1):
        product *= ctx.nth(k)
        nxt = ctx.nth(k + 1)
        report.checked += 1
        if not nxt * nxt < product:
            report.failures.append(Failure((k,), nxt * nxt, product))
    return report


_SCANNERS = {
    "a19": _scan_a19,
    "eq4": _scan_eq4,
    "chebyshev": _scan_chebyshev,
    "bonse": _scan_bonse,
}


def scan(which: str, limit: int, lo: int = 0) -> ScanReport:
    """Check every instance indexed in ``[lo, limit]``.

    Instances are indexed by the largest prime of the triple (``a19``), by
    the prime ``q`` itself (``eq4``, ``chebyshev``) or by ``k`` (``bonse``).
    """
    if which not in _SCANNERS:
        raise ValueError(f"unknown inequality {which!r}; expected one of {WHICH}")
    cap = MAX_BONSE_K if which == "bonse" else MAX_SCAN_LIMIT
    if limit > cap:
        raise BudgetExceeded(f"{which} limit {limit} exceeds budget {cap}")
    return _SCANNERS[which](lo, limit)


def scan_parallel(which: str, limit: int, jobs: int = 1) -> ScanReport:
    """Split ``[0, limit]`` into ``jobs`` chunks and merge the reports."""
    if jobs <= 1:
        return scan(which, limit)
    from concurrent.futures import ProcessPoolExecutor

    edges = np.linspace(0, limit + 1, jobs + 1).astype(int).tolist()
    chunks = [(edges[i], edges[i + 1] - 1) for i in range(jobs) if edges[i + 1] > edges[i]]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_scan_chunk, [(which, lo, hi) for lo, hi in chunks]))
    out = parts[0]
    for part in parts[1:]:
        out = out.merge(part)
    return out


def _scan_chunk(args):
    which, lo, hi = args
    return scan(which, hi, lo)
