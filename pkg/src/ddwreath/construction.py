"""Block-transitive, point-imprimitive 2-designs from a useful pair [n, c].

Points are ``F x Z_d`` with ``F = GF(c)`` and ``d = 1 + (c-1)/n``; the point
``(x, j)`` is encoded as ``j*c + x``.  The group is ``G = H wr Sym(d)`` with
``H = N : <zeta^n>`` inside AGL(1, c), and the block set is the G-orbit of

    B = {(0, i), (zeta^i, i) : 0 <= i < n} u {(0, i) : n <= i < k - n}.

G is never materialised.  The 2-design property follows from the orbit-ratio
criterion, and block counts come from exact arithmetic cross-checked against
an enumeration of H (at most c(c-1)/n elements).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .arith import binomial, exact_div, factorial, is_prime_power
from .ddcore import (
    DDParams,
    Partition,
    RankSummary,
    check_counting_identities,
    check_rank_bounds,
    dd_from_block,
    design_params,
    verify_orbital_pair_counts,
)
from .errors import DomainError, NotDDConsistent, VerificationError
from .gf import Field, field_new
from .permgrp import GeneratorSet, OrbitalDecomposition, Perm, orbitals, symmetric_group
from .report import SKIP, Check, Report, check
from .usefulpairs import UsefulPair, certify as classify_pair

K_BFS_MAX_DEGREE = 2000
PAIR_CENSUS_MAX_PAIRS = 5 * 10**6
WORKERS_ENV = "DDWREATH_WORKERS"

Point = tuple[int, int]


# --------------------------------------------------------------------------
# the class group H


@dataclass(frozen=True)
class AffineGroup:
    """A subgroup of AGL(1, c) given by generators ``x -> u*x + t``.

    Generators are stored as ``(dlog(u), t)`` pairs.
    """

    field: Field
    generators: tuple[tuple[int, int], ...]

    def perm(self, gen: tuple[int, int]) -> Perm:
        ulog, t = gen
        F = self.field
        xs = np.arange(F.c)
        return Perm(tuple(F.add_arr(F.mul_arr(F.zeta_pow(ulog), xs), t).tolist()))

    def generator_set(self) -> GeneratorSet:
        return GeneratorSet(self.field.c, tuple(self.perm(g) for g in self.generators))

    @cached_property
    def elements(self) -> tuple[np.ndarray, np.ndarray]:
        """All elements as parallel arrays ``(dlog(u), t)``, by closure from the identity."""
        F = self.field
        q = F.c - 1
        seen = np.zeros((q, F.c), dtype=bool)
        seen[0, 0] = True
        frontier_u = np.array([0], dtype=np.int64)
        frontier_t = np.array([0], dtype=np.int64)
        found_u, found_t = [frontier_u], [frontier_t]
        while frontier_u.size:
            cand_u, cand_t = [], []
            for glog, gt in self.generators:
                # apply the current element first, then the generator
                cand_u.append((frontier_u + glog) % q)
                cand_t.append(F.add_arr(F.mul_arr(F.zeta_pow(glog), frontier_t), gt))
            nu = np.concatenate(cand_u)
            nt = np.concatenate(cand_t)
            keys = np.unique(nu * F.c + nt)
            nu, nt = np.divmod(keys, F.c)
            fresh = ~seen[nu, nt]
            nu, nt = nu[fresh], nt[fresh]
            seen[nu, nt] = True
            found_u.append(nu)
            found_t.append(nt)
            frontier_u, frontier_t = nu, nt
        return np.concatenate(found_u), np.concatenate(found_t)

    @property
    def order(self) -> int:
        return int(self.elements[0].size)

    def images(self, points: Sequence[int]) -> np.ndarray:
        """Array of shape (|H|, len(points)): the image of each point under each element."""
        F = self.field
        ulog, t = self.elements
        u = F.exp[ulog]
        pts = np.asarray(points, dtype=np.int64)
        return F.add_arr(F.mul_arr(u[:, None], pts[None, :]), t[:, None])

    def transporter_count(self, src: Sequence[int], dst: Sequence[int]) -> int:
        """#{h in H : src^h = dst} for subsets of F."""
        if len(src) != len(dst):
            return 0
        if not src:
            return self.order
        imgs = np.sort(self.images(sorted(src)), axis=1)
        return int(np.count_nonzero((imgs == np.asarray(sorted(dst))[None, :]).all(axis=1)))

    def set_stabilizer_order(self, subset: Sequence[int]) -> int:
        return self.transporter_count(subset, subset)


def _require_admissible(n: int, c: int) -> Field:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    pp = is_prime_power(c) if c >= 2 else None
    if pp is None:
        raise DomainError(f"c={c} is not a prime power")
    if c % (2 * n) != 1:
        raise DomainError(f"c={c} is not 1 mod 2n={2 * n}; -1 would not lie in <zeta^n>")
    return field_new(pp.p, pp.a)


def build_affine_H(n: int, c: int) -> AffineGroup:
    """H = N : <zeta^n>: one translation per basis vector of F over GF(p), plus x -> zeta^n x."""
    F = _require_admissible(n, c)
    translations = tuple((0, F.p**i) for i in range(F.a))
    return AffineGroup(F, translations + ((n % (c - 1), 0),))


def build_H(n: int, c: int) -> GeneratorSet:
    return build_affine_H(n, c).generator_set()


def h_orbit_label(F: Field, x: int, y: int, n: int) -> int:
    """Index i in [0, n) of the H-orbital containing (x, y): dlog(y - x) mod n."""
    if x == y:
        raise DomainError("h_orbit_label needs distinct points")
    return F.dlog(F.sub(y, x)) % n


# --------------------------------------------------------------------------
# the design


def encode(point: Point, c: int) -> int:
    x, j = point
    return j * c + x


def decode(code: int, c: int) -> Point:
    j, x = divmod(code, c)
    return (x, j)


def base_block(pair: UsefulPair, F: Field) -> list[Point]:
    """The base block as (element, class) pairs, in the order they are listed."""
    n, k = pair.n, pair.k
    pts: list[Point] = []
    for i in range(n):
        pts += [(0, i), (F.zeta_pow(i), i)]
    pts += [(0, i) for i in range(n, k - n)]
    return pts


def wreath_partition(c: int, d: int) -> Partition:
    return Partition(
        class_of=tuple(j for j in range(d) for _ in range(c)),
        position=tuple(x for _ in range(d) for x in range(c)),
        c=c,
        d=d,
    )


def wreath_apply(point: Point, hs: Sequence[Perm], sigma: Perm) -> Point:
    """Image of (x, j) under (h_1, ..., h_d) sigma: (x^{h_j}, j^sigma)."""
    x, j = point
    return (hs[j](x), sigma(j))


@dataclass(frozen=True)
class WreathDesign:
    pair: UsefulPair
    field: Field
    H: AffineGroup
    base_block: tuple[Point, ...]

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def c(self) -> int:
        return self.pair.c

    @property
    def d(self) -> int:
        return self.pair.d

    @property
    def k(self) -> int:
        return self.pair.k

    @property
    def v(self) -> int:
        return self.c * self.d

    @cached_property
    def H_gens(self) -> GeneratorSet:
        return self.H.generator_set()

    @cached_property
    def partition(self) -> Partition:
        return wreath_partition(self.c, self.d)

    @property
    def block_codes(self) -> list[int]:
        return sorted(encode(p, self.c) for p in self.base_block)

    def class_subsets(self) -> list[tuple[int, ...]]:
        """B intersected with each class, as sorted field elements."""
        out: list[list[int]] = [[] for _ in range(self.d)]
        for x, j in self.base_block:
            out[j].append(x)
        return [tuple(sorted(s)) for s in out]


def _as_useful(pair: UsefulPair | tuple[int, int]) -> UsefulPair:
    if isinstance(pair, UsefulPair):
        return pair
    n, c = pair
    found = classify_pair(n, c)
    if not isinstance(found, UsefulPair):
        raise DomainError(f"[{n}, {c}] is not a useful pair ({describe_rejection(n, c)})")
    return found


def describe_rejection(n: int, c: int) -> str:
    if n < 2 or c < 2:
        return "needs n >= 2 and c >= 2"
    found = classify_pair(n, c)
    if isinstance(found, UsefulPair):
        return "useful"
    if found is not None:
        return f"near-miss: k={found.k} < 2n={2 * n}"
    if is_prime_power(c) is None:
        return f"c={c} is not a prime power"
    if c % (2 * n) != 1:
        return f"c={c} is not 1 mod {2 * n}"
    return f"c+n={c + n} is not triangular"


def build_design(pair: UsefulPair | tuple[int, int], block: Iterable[Point] | None = None) -> WreathDesign:
    """The design of a useful pair; ``block`` overrides the base block (for negative controls)."""
    pair = _as_useful(pair)
    H = build_affine_H(pair.n, pair.c)
    F = H.field
    pts = tuple(block) if block is not None else tuple(base_block(pair, F))
    return WreathDesign(pair, F, H, pts)


# --------------------------------------------------------------------------
# orbit sizes and the 2-design criterion


def orbit_sizes(pair: UsefulPair) -> dict[str, object]:
    """Closed-form sizes of the G-orbits on 2-subsets of points."""
    n, c, d = pair.n, pair.c, pair.d
    inner = exact_div(d * c * (c - 1), 2 * n)
    return {"inner": [inner] * n, "outer": c * c * d * (d - 1) // 2}


def _inner_class_of(H_orb: OrbitalDecomposition) -> dict[tuple, int]:
    return {lab: i for i, cls in enumerate(H_orb.pair_classes) for lab in cls}


def orbit_sizes_by_enumeration(design: WreathDesign, H_orb: OrbitalDecomposition) -> dict[str, object]:
    """Classify every unordered pair of points; inner pairs by the computed H-orbitals."""
    v, c = design.v, design.c
    if v * (v - 1) // 2 > PAIR_CENSUS_MAX_PAIRS:
        raise DomainError(f"pair census of {v} points exceeds {PAIR_CENSUS_MAX_PAIRS} pairs")
    a, b = np.triu_indices(v, k=1)
    ja, xa = np.divmod(a, c)
    jb, xb = np.divmod(b, c)
    same = ja == jb
    outer = int(np.count_nonzero(~same))
    orb_idx = H_orb.component[xa[same] * c + xb[same]]
    # map ordered-orbital index to its {D, D*} class
    cls_of = _inner_class_of(H_orb)
    lookup = np.array([cls_of[lab] for lab in H_orb.labels])
    inner = np.bincount(lookup[orb_idx], minlength=len(H_orb.pair_classes))
    return {"inner": [int(x) for x in inner], "outer": outer}


def _block_pair_counts(design: WreathDesign, H_orb: OrbitalDecomposition) -> tuple[list[int], int]:
    cls_of = _inner_class_of(H_orb)
    inner = [0] * len(H_orb.pair_classes)
    outer = 0
    pts = sorted(set(design.base_block), key=lambda p: (p[1], p[0]))
    for i, (x, j) in enumerate(pts):
        for y, jj in pts[i + 1:]:
            if j != jj:
                outer += 1
            else:
                inner[cls_of[H_orb.orbital_id(x, y)]] += 1
    return inner, outer


def verify_two_design(
    design: WreathDesign | UsefulPair, H_orb: OrbitalDecomposition | None = None
) -> Report:
    """Orbit-ratio criterion: n_i / |O_inn,i| is the same for every i and equals n_out / |O_out|."""
    if not isinstance(design, WreathDesign):
        design = build_design(design)
    H_orb = H_orb or orbitals(design.H_gens)
    n, c, d, k = design.n, design.c, design.d, design.k
    rep = Report()
    rep.add(check("twodesign.block_size", len(set(design.base_block)) == k, size=len(set(design.base_block)), k=k))
    rep.add(check("twodesign.inner_orbit_count", H_orb.pair_rank == n, orbits=H_orb.pair_rank, n=n))
    inner, outer = _block_pair_counts(design, H_orb)
    # G-orbit on inner pairs of type i = d copies of the H-orbit on 2-subsets
    inner_sizes = []
    for cls in H_orb.pair_classes:
        ordered = sum(H_orb.sizes[H_orb.index(lab)] for lab in cls)
        inner_sizes.append(d * ordered // 2)
    outer_size = c * c * d * (d - 1) // 2
    closed = orbit_sizes(design.pair)
    rep.add(
        check(
            "twodesign.orbit_sizes",
            inner_sizes == closed["inner"] and outer_size == closed["outer"],
            inner=inner_sizes,
            outer=outer_size,
        )
    )
    rep.add(check("twodesign.n_i", inner == [1] * n, n_i=inner))
    ratios = [Fraction(x, s) for x, s in zip(inner, inner_sizes)] + [Fraction(outer, outer_size)]
    rep.add(
        check(
            "twodesign.ratio",
            len(set(ratios)) == 1,
            ratios=[str(r) for r in ratios],
            n_out=outer,
        )
    )
    rep.add(check("twodesign.n_out_is_c", outer == binomial(k) - n == c, n_out=outer, c=c))
    return rep


# --------------------------------------------------------------------------
# exact counts


@dataclass(frozen=True)
class Counts:
    lam: int
    b: int
    r: int
    stabilizer: int
    group_order: int
    H_order: int


def lambda_and_counts(pair: UsefulPair) -> Counts:
    """lambda, b, r, |G_B| and |G| from closed forms.

    |G_B| = 2^n (d-1)^(k-2n) |H|^(d-k+n) (k-2n)! (d-k+n)!.  The n pair-classes
    of B cannot be permuted among themselves, since their pairs lie in distinct
    H-orbits on 2-subsets.
    """
    n, c, k, d = pair.n, pair.c, pair.k, pair.d
    H = exact_div(c * (c - 1), n)
    group = H**d * factorial(d)
    stab = 2**n * (d - 1) ** (k - 2 * n) * H ** (d - k + n) * factorial(k - 2 * n) * factorial(d - k + n)
    b = exact_div(group, stab)
    lam = exact_div(2 * b, c * d * (d - 1))
    r = exact_div(b * k, c * d)
    return Counts(lam=lam, b=b, r=r, stabilizer=stab, group_order=group, H_order=H)


def lambda_closed_form(pair: UsefulPair) -> int:
    """lambda = c^(k-n-1) (d-1)^(n-1) (d-1)! / (2^(n-1) (k-2n)! (d-k+n)!), evaluated directly."""
    n, c, k, d = pair.n, pair.c, pair.k, pair.d
    num = c ** (k - n - 1) * (d - 1) ** (n - 1) * factorial(d - 1)
    return exact_div(num, 2 ** (n - 1) * factorial(k - 2 * n) * factorial(d - k + n))


def published_counts(pair: UsefulPair) -> Counts:
    """The printed closed forms, which also divide by n! for permuting the pair-classes.

    Kept for comparison: every value here is off from :func:`lambda_and_counts`
    by exactly that factor n!.
    """
    n, c, k, d = pair.n, pair.c, pair.k, pair.d
    true = lambda_and_counts(pair)
    stab = true.stabilizer * factorial(n)
    b = exact_div(true.group_order, stab)
    lam = exact_div(
        c ** (k - n - 1) * (d - 1) ** (n - 1) * factorial(d - 1),
        2 ** (n - 1) * factorial(n) * factorial(k - 2 * n) * factorial(d - k + n),
    )
    return Counts(
        lam=lam,
        b=b,
        r=exact_div(b * k, c * d),
        stabilizer=stab,
        group_order=true.group_order,
        H_order=true.H_order,
    )


def block_census(pair: UsefulPair) -> int:
    """Number of distinct blocks counted directly.

    A block of B^G picks a distinct class for each of the n pair types (ordered),
    an H-orbit member in each, then k-2n further classes holding one point each.
    """
    n, c, k, d = pair.n, pair.c, pair.k, pair.d
    classes = factorial(d) // (factorial(k - 2 * n) * factorial(d - k + n))
    return classes * exact_div(c * (c - 1), 2 * n) ** n * c ** (k - 2 * n)


@dataclass(frozen=True)
class StabilizerData:
    order: int
    H_order: int
    point_stabilizer: int
    pair_stabilizers: tuple[int, ...]
    transporter_classes: tuple[tuple[int, int], ...]  # (class count, common transporter count)
    report: Report


def transporter_matrix(design: WreathDesign) -> list[list[int]]:
    """T[j][j'] = #{h in H : (B n C_j)^h = B n C_j'} (dense; intended for small d)."""
    subsets = design.class_subsets()
    uniq = sorted(set(subsets))
    table = {(s, t): design.H.transporter_count(s, t) for s in uniq for t in uniq}
    return [[table[s, t] for t in subsets] for s in subsets]


def permanent_bruteforce(T: Sequence[Sequence[int]]) -> int:
    import itertools

    size = len(T)
    total = 0
    for sigma in itertools.permutations(range(size)):
        prod = 1
        for j, jj in enumerate(sigma):
            prod *= T[j][jj]
            if not prod:
                break
        total += prod
    return total


def stabilizer_order_by_transporters(design: WreathDesign | UsefulPair) -> StabilizerData:
    """|G_B| as the permanent of the class transporter matrix, from an enumeration of H.

    (h_1..h_d) sigma fixes B iff every h_j carries B n C_j onto B n C_{j sigma}, so
    |G_B| = sum over sigma of prod_j T[j][j sigma].  Classes with a non-zero
    transporter between them form equivalence classes E with a constant entry s_E,
    giving prod_E |E|! s_E^|E|.
    """
    if not isinstance(design, WreathDesign):
        design = build_design(design)
    H = design.H
    F = design.field
    subsets = design.class_subsets()
    uniq = sorted(set(subsets))
    table = {(s, t): H.transporter_count(s, t) for s in uniq for t in uniq}
    rep = Report()

    # group subsets into transporter-equivalence classes
    groups: list[list[tuple[int, ...]]] = []
    for s in uniq:
        for g in groups:
            if table[g[0], s]:
                g.append(s)
                break
        else:
            groups.append([s])
    consistent = all(
        (table[s, t] > 0) == any(s in g and t in g for g in groups)
        and (table[s, t] == table[s, s] or table[s, t] == 0)
        for s in uniq
        for t in uniq
    )
    rep.add(check("stabilizer.block_structure", consistent, subset_types=len(uniq), groups=len(groups)))

    order = 1
    classes = []
    for g in groups:
        size = sum(subsets.count(s) for s in g)
        s_E = table[g[0], g[0]]
        classes.append((size, s_E))
        order *= factorial(size) * s_E**size

    point_stab = H.set_stabilizer_order((0,))
    pair_stabs = tuple(H.set_stabilizer_order((0, F.zeta_pow(i))) for i in range(design.n))
    rep.add(check("stabilizer.H_order", H.order == design.c * (design.c - 1) // design.n, order=H.order))
    rep.add(check("stabilizer.point", point_stab == design.d - 1, order=point_stab, d_minus_1=design.d - 1))
    rep.add(check("stabilizer.pairs", all(s == 2 for s in pair_stabs), orders=list(pair_stabs)))
    return StabilizerData(
        order=order,
        H_order=H.order,
        point_stabilizer=point_stab,
        pair_stabilizers=pair_stabs,
        transporter_classes=tuple(classes),
        report=rep,
    )


def check_counts(design: WreathDesign, stab: StabilizerData | None = None) -> Report:
    """Four-way agreement of the exact counts."""
    pair = design.pair
    n, c, k, d, v = design.n, design.c, design.k, design.d, design.v
    counts = lambda_and_counts(pair)
    stab = stab or stabilizer_order_by_transporters(design)
    rep = Report()
    rep.add(check("counts.stabilizer_routes", stab.order == counts.stabilizer, closed_form=counts.stabilizer, transporters=stab.order))
    rep.add(check("counts.block_census", block_census(pair) == counts.b, census=block_census(pair), index=counts.b))
    rep.add(check("counts.lambda_closed_form", lambda_closed_form(pair) == counts.lam, closed_form=lambda_closed_form(pair), lam=counts.lam))
    rep.add(check("counts.b_counting", c * d * (c - 1) * counts.lam == 2 * n * counts.b, b=counts.b, lam=counts.lam))
    dp = design_params(v, k, counts.lam)
    rep.add(check("counts.design_params", dp.b == counts.b and dp.r == counts.r, r=dp.r, b=dp.b))
    rep.add(check("counts.bk_vr", counts.b * k == v * counts.r, bk=counts.b * k, vr=v * counts.r))
    pub = published_counts(pair)
    rep.add(
        Check(
            "counts.published_formula",
            SKIP,
            {"lam": pub.lam, "stabilizer": pub.stabilizer, "b": pub.b, "ratio": factorial(n)},
        )
    )
    return rep


# --------------------------------------------------------------------------
# certification


@dataclass
class DesignCertificate:
    design: WreathDesign
    counts: Counts
    dd: DDParams | None
    H_rank: int
    H_pair_rank: int
    K_rank: int
    K_pair_rank: int
    K_source: str
    stabilizer: StabilizerData
    report: Report = field(default_factory=Report)

    @property
    def ok(self) -> bool:
        return self.report.ok

    def summary_line(self) -> str:
        d = self.design
        mn = f"({self.dd.m},{self.dd.n})" if self.dd else "undefined"
        return f"2-({d.v},{d.k},{self.counts.lam}) with DD (m,n)={mn}"

    def summary(self) -> str:
        d = self.design
        lines = [
            f"[n,c] = [{d.n},{d.c}], k = {d.k}, d = {d.d}, F = GF({d.field.order}), zeta = {d.field.zeta}",
            f"2-({d.v}, {d.k}, {self.counts.lam}) design, b = {self.counts.b}, r = {self.counts.r}",
            f"G = H wr Sym({d.d}) is block-transitive and preserves the {d.d} classes F x {{j}}",
            f"|H| = {self.counts.H_order}, |G_B| = {self.counts.stabilizer}",
            f"Delandtsheer-Doyen parameters (m,n) = " + (f"({self.dd.m},{self.dd.n})" if self.dd else "undefined"),
            f"Rank(H) = PairRank(H) + 1 = {self.H_pair_rank} + 1 = {self.H_rank}",
            f"Rank(K) = PairRank(K) + 1 = {self.K_pair_rank} + 1 = {self.K_rank}",
            f"checks: {len(self.report.checks)} run, {len(self.report.failures)} failed",
        ]
        return "\n".join(lines)


def _k_rank(d: int) -> tuple[RankSummary | OrbitalDecomposition, str]:
    if d <= K_BFS_MAX_DEGREE:
        return orbitals(symmetric_group(d)), "bfs"
    return RankSummary(rank=2, pair_rank=1), "structural"


def certify(
    pair: UsefulPair | tuple[int, int],
    *,
    block: Iterable[Point] | None = None,
    raise_on_failure: bool = True,
) -> DesignCertificate:
    """Run every check for the design of ``pair`` and collect a certificate."""
    design = build_design(pair, block)
    pair = design.pair
    n, c, d = design.n, design.c, design.d
    rep = Report()

    rep.extend(pair.invariant_report())
    expected = tuple(base_block(pair, design.field))
    rep.add(check("base_block.matches", sorted(design.base_block) == sorted(expected), points=len(design.base_block)))
    rep.add(check("base_block.well_defined", n + 1 <= design.k - n - 1 <= d - 1, last_class=design.k - n - 1))

    H_orb = orbitals(design.H_gens)
    rep.add(check("H.rank", H_orb.rank == n + 1, rank=H_orb.rank, expected=n + 1))
    rep.add(check("H.pair_rank", H_orb.pair_rank == n, pair_rank=H_orb.pair_rank, expected=n))
    rep.add(check("H.self_paired", all(H_orb.is_self_paired(lab) for lab in H_orb.labels), orbitals=len(H_orb.labels)))
    # each suborbit of 0 carries a single dlog residue mod n, and the residues are 0..n-1
    residues = [
        {h_orbit_label(design.field, 0, y, n) for y in H_orb.suborbit(lab, 0)} for lab in H_orb.labels
    ]
    labels_ok = all(len(r) == 1 for r in residues) and sorted(min(r) for r in residues) == list(range(n))
    rep.add(check("H.orbital_labels", labels_ok))

    K_data, K_source = _k_rank(d)
    rep.add(check("K.rank", K_data.rank == 2 and K_data.pair_rank == 1, rank=K_data.rank, pair_rank=K_data.pair_rank, source=K_source))

    rep.extend(verify_two_design(design, H_orb))

    dd = None
    try:
        dd = dd_from_block(design.block_codes, design.partition)
        rep.add(check("dd.params", (dd.m, dd.n) == (1, n), m=dd.m, n=dd.n))
    except NotDDConsistent as exc:
        rep.add(check("dd.params", False, error=str(exc), inner=exc.inner, outer=exc.outer))

    counts = lambda_and_counts(pair)
    stab = stabilizer_order_by_transporters(design)
    rep.extend(stab.report)
    # the transporter route uses the actual block, so a corrupted block shows up here
    rep.extend(check_counts(design, stab))
    rep.extend(check_counting_identities(c, d, design.k, 1, n, counts.lam))
    rep.extend(check_rank_bounds(H_orb, K_data, 1, n))
    if isinstance(K_data, OrbitalDecomposition) and dd is not None:
        rep.extend(verify_orbital_pair_counts(design.block_codes, design.partition, H_orb, K_data, 1, n))

    cert = DesignCertificate(
        design=design,
        counts=counts,
        dd=dd,
        H_rank=H_orb.rank,
        H_pair_rank=H_orb.pair_rank,
        K_rank=K_data.rank,
        K_pair_rank=K_data.pair_rank,
        K_source=K_source,
        stabilizer=stab,
        report=rep,
    )
    if raise_on_failure and not rep.ok:
        raise VerificationError(rep)
    return cert


def _certify_ok(pair: UsefulPair) -> tuple[UsefulPair, bool, list[str]]:
    cert = certify(pair, raise_on_failure=False)
    return pair, cert.ok, [ch.check_id for ch in cert.report.failures]


def worker_count(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, default)))
    except ValueError:
        return default


def certify_many(pairs: Sequence[UsefulPair], workers: int | None = None) -> list[tuple[UsefulPair, bool, list[str]]]:
    """Certify several pairs, in parallel when ``workers`` (or $DDWREATH_WORKERS) > 1."""
    workers = workers or worker_count()
    if workers == 1:
        return [_certify_ok(p) for p in pairs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_certify_ok, pairs))
