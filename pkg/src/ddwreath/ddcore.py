"""Delandtsheer-Doyen parameters and the counting identities and rank bounds
that any block-transitive, point-imprimitive 2-design must satisfy.

Points are integers ``0..v-1``.  A :class:`Partition` also records the
position of every point inside its class; when a class group ``H`` is given
as a permutation group on positions, the same identification is used for
every class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

from .arith import binomial, divides, exact_div
from .errors import DomainError, NotDDConsistent, ResourceLimitError
from .permgrp import (
    DEFAULT_ENUMERATION_CAP,
    GeneratorSet,
    OrbitalDecomposition,
    group_order_by_enumeration,
    orbitals,
    unordered_pairs,
)
from .report import SKIP, Check, Report, check


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]
    position: tuple[int, ...]
    c: int
    d: int

    def __post_init__(self):
        if self.c < 2 or self.d < 2:
            raise DomainError(f"partition must be non-trivial, got c={self.c}, d={self.d}")
        if len(self.class_of) != self.c * self.d or len(self.position) != self.c * self.d:
            raise DomainError("partition does not cover c*d points")
        slots = set(zip(self.class_of, self.position))
        if len(slots) != self.c * self.d or not all(
            0 <= j < self.d and 0 <= x < self.c for j, x in slots
        ):
            raise DomainError("every class must have exactly c points")

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]]) -> "Partition":
        d = len(classes)
        c = len(classes[0]) if classes else 0
        v = sum(len(cl) for cl in classes)
        class_of = [-1] * v
        position = [-1] * v
        for j, cl in enumerate(classes):
            if len(cl) != c:
                raise DomainError("classes differ in size")
            for x, pt in enumerate(cl):
                class_of[pt] = j
                position[pt] = x
        return cls(tuple(class_of), tuple(position), c, d)

    @property
    def v(self) -> int:
        return self.c * self.d

    def classes(self) -> list[list[int]]:
        out = [[0] * self.c for _ in range(self.d)]
        for pt, (j, x) in enumerate(zip(self.class_of, self.position)):
            out[j][x] = pt
        return out

    def is_inner(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]


@dataclass(frozen=True)
class DDParams:
    m: int
    n: int
    k: int
    c: int
    d: int

    @property
    def inner_count(self) -> int:
        return self.n

    @property
    def outer_count(self) -> int:
        return self.m * self.c


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    lam: int
    b: int
    r: int


class RankData(Protocol):
    rank: int
    pair_rank: int


@dataclass(frozen=True)
class RankSummary:
    """Rank data recorded without an orbital computation (e.g. Sym(d) for large d)."""

    rank: int
    pair_rank: int
    source: str = "structural"


def inner_outer_counts(block: Iterable[int], P: Partition) -> tuple[int, int]:
    inner = outer = 0
    for a, b in unordered_pairs(block):
        if P.is_inner(a, b):
            inner += 1
        else:
            outer += 1
    return inner, outer


def dd_from_block(block: Iterable[int], P: Partition) -> DDParams:
    """Read off ``(m, n)`` from a block and a partition, enforcing both DD identities."""
    block = sorted(set(block))
    k = len(block)
    if k < 2:
        raise DomainError("a block needs at least two points")
    inner, outer = inner_outer_counts(block, P)
    counts = dict(k=k, c=P.c, d=P.d, inner=inner, outer=outer)
    if inner == 0 or outer == 0:
        raise NotDDConsistent(f"need inner and outer pairs, got {inner} and {outer}", **counts)
    if outer % P.c:
        raise NotDDConsistent(f"outer count {outer} is not a multiple of c={P.c}", **counts)
    m, n = outer // P.c, inner
    t = binomial(k)
    if (t - m) % n or (t - m) // n != P.d:
        raise NotDDConsistent(
            f"d = (C(k,2) - m)/n fails: ({t} - {m})/{n} != {P.d}", **counts
        )
    return DDParams(m=m, n=n, k=k, c=P.c, d=P.d)


def counting_block_number(c: int, d: int, n: int, lam: int) -> int:
    """b = c d (c-1) lambda / (2n), exactly."""
    return exact_div(c * d * (c - 1) * lam, 2 * n)


def check_counting_identities(
    c: int, d: int, k: int, m: int, n: int, lam: int | None = None
) -> Report:
    """Counting identities relating c, d, k, m, n (and b when lambda is given)."""
    if min(c, d, k, m, n) < 1 or (lam is not None and lam < 1):
        raise DomainError("all parameters must be positive")
    rep = Report()
    t = binomial(k)
    lhs = c * d - 1
    rep.add(
        check(
            "counting.a",
            divides(n, t * (c - 1)) and divides(m, t * (d - 1))
            and lhs == t * (c - 1) // n == t * (d - 1) // m,
            cd_minus_1=lhs,
            via_c=f"{t * (c - 1)}/{n}",
            via_d=f"{t * (d - 1)}/{m}",
        )
    )
    rep.add(check("counting.b", m * (c - 1) == n * (d - 1), lhs=m * (c - 1), rhs=n * (d - 1)))
    if lam is not None:
        num_c, num_d = c * d * (c - 1) * lam, c * d * (d - 1) * lam
        ok = divides(2 * n, num_c) and divides(2 * m, num_d) and num_c // (2 * n) == num_d // (2 * m)
        b = num_c // (2 * n) if divides(2 * n, num_c) else None
        rep.add(
            check(
                "counting.c",
                ok,
                b=b,
                via_c=f"{num_c}/{2 * n}",
                via_d=f"{num_d}/{2 * m}",
            )
        )
    return rep


def _rank_bound(prefix: str, data: RankData, bound: int, label: str) -> list[Check]:
    return [
        check(
            f"{prefix}.lower",
            data.rank - 1 <= 2 * data.pair_rank,
            rank=data.rank,
            pair_rank=data.pair_rank,
        ),
        check(f"{prefix}.upper", data.pair_rank <= bound, pair_rank=data.pair_rank, **{label: bound}),
    ]


def check_rank_bounds(H: RankData, K: RankData, m: int, n: int) -> Report:
    """(Rank-1)/2 <= PairRank <= n for H and <= m for K."""
    rep = Report()
    rep.extend(_rank_bound("rankbound.H", H, n, "n"))
    rep.extend(_rank_bound("rankbound.K", K, m, "m"))
    # pair-transitivity consequence when a DD parameter is 1
    if m == 1:
        rep.add(check("pairtransitive.K", K.pair_rank == 1, pair_rank=K.pair_rank))
    if n == 1:
        rep.add(check("pairtransitive.H", H.pair_rank == 1, pair_rank=H.pair_rank))
    return rep


def verify_orbital_pair_counts(
    block: Iterable[int],
    P: Partition,
    H_orbitals: OrbitalDecomposition,
    K_orbitals: OrbitalDecomposition,
    m: int,
    n: int,
) -> Report:
    """Per-orbital counts of block pairs against c n u/(c-1) and n u/(c-1).

    ``H_orbitals`` acts on positions inside a class, ``K_orbitals`` on class
    indices.
    """
    c = P.c
    block = sorted(set(block))
    pairs = unordered_pairs(block)
    rep = Report()

    outer_counts: dict[tuple, int] = {}
    inner_counts: dict[tuple, int] = {}
    k_class = {lab: cls for cls in K_orbitals.pair_classes for lab in cls}
    h_class = {lab: cls for cls in H_orbitals.pair_classes for lab in cls}
    for a, b in pairs:
        ja, jb = P.class_of[a], P.class_of[b]
        if ja != jb:
            cls = k_class[K_orbitals.orbital_id(ja, jb)]
            outer_counts[cls] = outer_counts.get(cls, 0) + 1
        else:
            cls = h_class[H_orbitals.orbital_id(P.position[a], P.position[b])]
            inner_counts[cls] = inner_counts.get(cls, 0) + 1

    total_outer = 0
    for cls in K_orbitals.pair_classes:
        u = K_orbitals.sym_subdegree[cls[0]]
        integral = divides(c - 1, n * u)
        expected = c * n * u // (c - 1) if integral else None
        actual = outer_counts.get(cls, 0)
        total_outer += actual
        rep.add(
            check(
                f"orbitalcount.K{list(cls[0])}",
                integral and actual == expected,
                u=u,
                expected=expected,
                actual=actual,
            )
        )
    total_inner = 0
    for cls in H_orbitals.pair_classes:
        u = H_orbitals.sym_subdegree[cls[0]]
        integral = divides(c - 1, n * u)
        expected = n * u // (c - 1) if integral else None
        actual = inner_counts.get(cls, 0)
        total_inner += actual
        rep.add(
            check(
                f"orbitalcount.H{list(cls[0])}",
                integral and actual == expected,
                u=u,
                expected=expected,
                actual=actual,
            )
        )
    rep.add(check("orbitalcount.total_outer", total_outer == m * c, total=total_outer, mc=m * c))
    rep.add(check("orbitalcount.total_inner", total_inner == n, total=total_inner, n=n))
    return rep


def check_max_rank_conditions(
    G: GeneratorSet,
    size: int,
    param: int,
    *,
    decomposition: OrbitalDecomposition | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    prefix: str = "maxrank",
) -> Report:
    """Consequences of Rank = 2*param + 1: odd order and constant subdegree (size-1)/(2 param)."""
    dec = decomposition or orbitals(G)
    rep = Report()
    rep.add(check(f"{prefix}.rank", dec.rank == 2 * param + 1, rank=dec.rank, expected=2 * param + 1))
    try:
        order = group_order_by_enumeration(G, cap)
        rep.add(check(f"{prefix}.odd_order", order % 2 == 1, order=order))
    except ResourceLimitError:
        rep.add(Check(f"{prefix}.odd_order", SKIP, {"reason": f"order exceeds cap {cap}"}))
    target = (size - 1) / (2 * param)
    subdegrees = sorted(set(dec.subdegree.values()))
    rep.add(
        check(
            f"{prefix}.subdegree",
            subdegrees == [target],
            subdegrees=subdegrees,
            expected=f"{size - 1}/{2 * param}",
        )
    )
    return rep


def design_params(v: int, k: int, lam: int) -> DesignParams:
    """r and b from v, k, lambda via the two standard 2-design identities."""
    if v < 2 or k < 2 or lam < 1:
        raise DomainError("need v >= 2, k >= 2, lambda >= 1")
    try:
        r = exact_div(lam * (v - 1), k - 1)
        b = exact_div(v * r, k)
    except ArithmeticError as exc:
        raise DomainError(f"not a 2-design parameter set: {exc}") from None
    return DesignParams(v=v, k=k, lam=lam, b=b, r=r)
