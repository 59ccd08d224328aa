"""Singer-cycle designs: PG(2, q) with a cyclic point-imprimitive group.

Points of PG(2, q) are the nonzero elements of GF(q^3) modulo GF(q)^*, i.e.
discrete logarithms modulo ``v = q^2 + q + 1``.  Multiplication by the
primitive element is the shift ``i -> i + 1 (mod v)`` and the lines are the
shifts of one line, so the Singer cycle is regular on points and on lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .arith import PrimePower, is_prime_power
from .ddcore import (
    DDParams,
    Partition,
    check_max_rank_conditions,
    check_rank_bounds,
    dd_from_block,
    verify_orbital_pair_counts,
)
from .errors import DomainError
from .gf import field_new
from .permgrp import (
    GeneratorSet,
    OrbitalDecomposition,
    Perm,
    induced_on_blocks,
    orbitals,
    power,
    restrict,
)
from .report import Report, check


@dataclass(frozen=True)
class SingerPlane:
    q: PrimePower
    lines: tuple[tuple[int, ...], ...]
    singer: Perm

    @property
    def v(self) -> int:
        return self.q.value**2 + self.q.value + 1

    @property
    def k(self) -> int:
        return self.q.value + 1

    @property
    def points(self) -> range:
        return range(self.v)

    def line_export(self) -> list[list[int]]:
        return [list(line) for line in self.lines]

    def pair_coverage(self) -> np.ndarray:
        """cover[a, b] = number of lines through both a and b."""
        cover = np.zeros((self.v, self.v), dtype=np.int64)
        for line in self.lines:
            idx = np.asarray(line)
            cover[np.ix_(idx, idx)] += 1
        return cover

    def verify(self) -> Report:
        rep = Report()
        cover = self.pair_coverage()
        off = cover[~np.eye(self.v, dtype=bool)]
        rep.add(check("plane.lambda_one", bool((off == 1).all()), v=self.v, min=int(off.min()), max=int(off.max())))
        rep.add(check("plane.line_size", all(len(line) == self.k for line in self.lines), k=self.k))
        line_set = set(self.lines)
        shifted = {tuple(sorted(self.singer(x) for x in line)) for line in self.lines}
        rep.add(check("plane.line_count", len(line_set) == self.v, lines=len(line_set)))
        rep.add(check("plane.singer_on_lines", shifted == line_set))
        rep.add(
            check(
                "plane.singer_regular",
                all(self.singer(i) == (i + 1) % self.v for i in self.points),
            )
        )
        return rep


def build_plane(q: int) -> SingerPlane:
    """PG(2, q) via GF(q^3); lines are the shifts of the line through 1 and zeta."""
    pp = is_prime_power(q) if q >= 2 else None
    if pp is None:
        raise DomainError(f"q={q} is not a prime power")
    F = field_new(pp.p, 3 * pp.a)
    v = q * q + q + 1
    # GF(q) sits inside GF(q^3) as 0 and the powers of zeta^v
    sub = [0] + [F.zeta_pow(v * j) for j in range(q - 1)]
    span = {F.add(F.mul(s, 1), F.mul(t, F.zeta)) for s in sub for t in sub} - {0}
    base = tuple(sorted({F.dlog(x) % v for x in span}))
    if len(base) != q + 1:
        raise AssertionError("span of 1 and zeta is not a projective line")  # pragma: no cover
    lines = tuple(sorted(tuple(sorted((x + i) % v for x in base)) for i in range(v)))
    singer = Perm(tuple((i + 1) % v for i in range(v)))
    return SingerPlane(pp, lines, singer)


def singer_partition(plane: SingerPlane, c: int, d: int) -> Partition:
    """Orbits of <singer^d>: class j holds the points j, j+d, j+2d, ..."""
    if c * d != plane.v or c < 2 or d < 2:
        raise DomainError(f"need c*d = {plane.v} with c, d >= 2, got c={c}, d={d}")
    return Partition.from_classes([[j + d * t for t in range(c)] for j in range(d)])


@dataclass
class SingerAnalysis:
    dd: DDParams
    H: GeneratorSet
    K: GeneratorSet
    H_orbitals: OrbitalDecomposition
    K_orbitals: OrbitalDecomposition
    report: Report = field(default_factory=Report)

    @property
    def ok(self) -> bool:
        return self.report.ok

    def summary(self) -> str:
        dd = self.dd
        return (
            f"(m,n)=({dd.m},{dd.n}); Rank(H)={self.H_orbitals.rank}=2n+1; "
            f"Rank(K)={self.K_orbitals.rank}=2m+1"
        )


def induced_groups(plane: SingerPlane, P: Partition) -> tuple[GeneratorSet, GeneratorSet]:
    """H: the class stabiliser <singer^d> on class 0 (by position); K: singer on classes."""
    classes = P.classes()
    K = GeneratorSet.of(induced_on_blocks(plane.singer, P.class_of, P.d))
    H = GeneratorSet.of(restrict(power(plane.singer, P.d), classes[0]))
    return H, K


def singer_dd(plane: SingerPlane, c: int, d: int) -> SingerAnalysis:
    """DD parameters from every line, and the rank equalities for the induced cyclic groups."""
    P = singer_partition(plane, c, d)
    params = {dd_from_block(line, P) for line in plane.lines}
    rep = Report()
    rep.add(check("singer.all_lines_agree", len(params) == 1, distinct=len(params)))
    dd = min(params, key=lambda p: (p.m, p.n))
    rep.add(check("singer.m", 2 * dd.m == d - 1, m=dd.m, d=d))
    rep.add(check("singer.n", 2 * dd.n == c - 1, n=dd.n, c=c))
    H, K = induced_groups(plane, P)
    H_orb, K_orb = orbitals(H), orbitals(K)
    rep.add(check("singer.rank_H", H_orb.rank == c == 2 * dd.n + 1, rank=H_orb.rank, two_n_plus_1=2 * dd.n + 1))
    rep.add(check("singer.rank_K", K_orb.rank == d == 2 * dd.m + 1, rank=K_orb.rank, two_m_plus_1=2 * dd.m + 1))
    rep.extend(check_rank_bounds(H_orb, K_orb, dd.m, dd.n))
    rep.add(check("singer.pair_rank_H", H_orb.pair_rank == dd.n, pair_rank=H_orb.pair_rank))
    rep.add(check("singer.pair_rank_K", K_orb.pair_rank == dd.m, pair_rank=K_orb.pair_rank))
    rep.extend(check_max_rank_conditions(H, c, dd.n, decomposition=H_orb, prefix="maxrank.H"))
    rep.extend(check_max_rank_conditions(K, d, dd.m, decomposition=K_orb, prefix="maxrank.K"))
    for i, line in enumerate(plane.lines):
        sub = verify_orbital_pair_counts(line, P, H_orb, K_orb, dd.m, dd.n)
        if not sub.ok or i == 0:
            rep.extend(sub)
    return SingerAnalysis(dd, H, K, H_orb, K_orb, rep)


def square_prime_power_family(p: int, f: int) -> dict[str, int]:
    """For q = p^(2f): d = p^2f + p^f + 1, c = p^2f - p^f + 1 and the matching (m, n)."""
    if f < 1 or is_prime_power(p) != PrimePower(p, 1):
        raise DomainError("need p prime and f >= 1")
    s = p**f
    return {
        "q": s * s,
        "c": s * s - s + 1,
        "d": s * s + s + 1,
        "m": s * (s + 1) // 2,
        "n": s * (s - 1) // 2,
    }


def partition_export(P: Partition) -> list[int]:
    return list(P.class_of)
