"""Useful pairs [n, c]: search, certification and the n in {6, 10, 15} analysis.

``[n, c]`` is useful when ``n >= 2``, ``c`` is a prime power with
``c = 1 (mod 2n)``, and ``c + n = k(k-1)/2`` for some ``k >= 2n``.  The
search runs over ``k`` rather than ``c`` since ``k`` fixes ``c``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterator

from .arith import PrimePower, binomial, is_prime_power, triangular_inverse
from .errors import DomainError
from .report import Report, check


@dataclass(frozen=True, order=True)
class UsefulPair:
    n: int
    c: int
    k: int
    d: int

    @property
    def prime_power(self) -> PrimePower:
        pp = is_prime_power(self.c)
        assert pp is not None
        return pp

    def invariant_report(self) -> Report:
        """Every defining condition plus the k-bounds lemma, re-derived from scratch."""
        n, c, k, d = self.n, self.c, self.k, self.d
        rep = Report()
        rep.add(check("useful.n", n >= 2, n=n))
        rep.add(check("useful.prime_power", c >= 2 and is_prime_power(c) is not None, c=c))
        rep.add(check("useful.congruence", c % (2 * n) == 1, c_mod_2n=c % (2 * n)))
        rep.add(check("useful.triangular", c + n == k * (k - 1) // 2, c_plus_n=c + n, k=k))
        rep.add(check("useful.k_ge_2n", k >= 2 * n, k=k, two_n=2 * n))
        rep.add(check("useful.d", (c - 1) % n == 0 and d == 1 + (c - 1) // n, d=d))
        rep.add(check("kbounds", 2 * n + 2 <= k <= n + d, lower=2 * n + 2, k=k, upper=n + d))
        rep.add(check("d_minus_1_even", (d - 1) % 2 == 0, d=d))
        return rep

    def as_row(self) -> tuple[int, int, int, int]:
        return (self.n, self.c, self.k, self.d)

    def as_dict(self) -> dict[str, int]:
        pp = self.prime_power
        return {"n": self.n, "c": self.c, "k": self.k, "d": self.d, "p": pp.p, "a": pp.a}


@dataclass(frozen=True, order=True)
class NearMiss:
    """All conditions of a useful pair except k >= 2n."""

    n: int
    c: int
    k: int
    d: int

    def as_row(self) -> tuple[int, int, int, int]:
        return (self.n, self.c, self.k, self.d)


def _classify(n: int, c: int, k: int) -> UsefulPair | NearMiss | None:
    if c < 2 or c % (2 * n) != 1 or is_prime_power(c) is None:
        return None
    d = 1 + (c - 1) // n
    if k >= 2 * n:
        pair = UsefulPair(n, c, k, d)
        bounds = pair.invariant_report()["kbounds"]
        if not bounds.ok:  # pragma: no cover - would contradict the k-bounds lemma
            raise AssertionError(f"k-bounds lemma violated by {pair}: {bounds.witness}")
        return pair
    return NearMiss(n, c, k, d)


def certify(n: int, c: int) -> UsefulPair | NearMiss | None:
    """Classify [n, c] as useful, a near-miss, or neither."""
    if n < 2 or c < 2:
        raise DomainError(f"certify needs n >= 2 and c >= 2, got n={n}, c={c}")
    k = triangular_inverse(c + n)
    if k is None:
        return None
    return _classify(n, c, k)


def _candidates(n: int, c_max: int, k_start: int = 2) -> Iterator[UsefulPair | NearMiss]:
    k = k_start
    while True:
        c = binomial(k) - n
        if c > c_max:
            return
        if c >= 2:
            found = _classify(n, c, k)
            if found is not None:
                yield found
        k += 1


def search_n(n: int, c_max: int) -> list[UsefulPair]:
    if n < 2:
        raise DomainError("n must be at least 2")
    return [p for p in _candidates(n, c_max, 2 * n) if isinstance(p, UsefulPair)]


def search(n_max: int, c_max: int) -> list[UsefulPair]:
    """All useful pairs with 2 <= n <= n_max and c <= c_max, sorted by (n, c)."""
    if n_max < 2 or c_max < 2:
        raise DomainError("search needs n_max >= 2 and c_max >= 2")
    found = []
    for n in range(2, n_max + 1):
        found.extend(search_n(n, c_max))
    return sorted(found)


def smallest_c(n: int, c_cap: int) -> UsefulPair | None:
    """The useful pair [n, c] with least c <= c_cap, if any.  The cap is mandatory."""
    if n < 2:
        raise DomainError("n must be at least 2")
    for pair in _candidates(n, c_cap, 2 * n):
        if isinstance(pair, UsefulPair):
            return pair
    return None


def near_misses(n: int, c_cap: int) -> list[NearMiss]:
    if n < 2:
        raise DomainError("n must be at least 2")
    return sorted(p for p in _candidates(n, c_cap) if isinstance(p, NearMiss))


# Factorisations of C(k,2) - n along k = 4nb + r, as (x1, y1, x0, y0) meaning
# (x1*b + x0)(y1*b + y0).
FACTOR_TABLE: dict[int, dict[int, tuple[int, int, int, int]]] = {
    6: {11: (12, 24, 7, 7), 14: (12, 24, 5, 17)},
    10: {14: (20, 40, 9, 9), 19: (20, 40, 7, 23), 22: (20, 40, 13, 17), 27: (20, 40, 11, 31)},
    15: {17: (30, 60, 11, 11), 29: (30, 60, 17, 23), 32: (30, 60, 13, 37), 44: (30, 60, 19, 49)},
}


def admissible_residues(n: int) -> list[int]:
    """Residues r mod 4n with C(r,2) = n + 1 (mod 2n)."""
    return [r for r in range(4 * n) if binomial(r) % (2 * n) == (n + 1) % (2 * n)]


def check_factor_identities(n: int, b_max: int) -> Report:
    """C(4nb + r, 2) - n equals the tabulated product for every b in [0, b_max]."""
    if n not in FACTOR_TABLE:
        raise DomainError("factor identities are tabulated only for n in {6, 10, 15}")
    rep = Report()
    rep.add(
        check(
            f"factor.{n}.residues",
            admissible_residues(n) == sorted(FACTOR_TABLE[n]),
            residues=admissible_residues(n),
        )
    )
    for r, (x1, y1, x0, y0) in sorted(FACTOR_TABLE[n].items()):
        bad = None
        for b in range(b_max + 1):
            k = 4 * n * b + r
            if binomial(k) - n != (x1 * b + x0) * (y1 * b + y0):
                bad = b
                break
        rep.add(
            check(
                f"factor.{n}.{r}",
                bad is None,
                product=f"({x1}b+{x0})({y1}b+{y0})",
                b_max=b_max,
                failing_b=bad,
            )
        )
    return rep


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "c", "k", "d"])
    for row in rows:
        writer.writerow(row.as_row())
    return buf.getvalue()


def to_json(pairs: list[UsefulPair]) -> str:
    return json.dumps([p.as_dict() for p in pairs], indent=2)
