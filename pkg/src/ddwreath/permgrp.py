"""Permutation groups given by generators: orbits, orbitals, rank and pair-rank.

Permutations act on the right: ``(g * h)(x) == h(g(x))``.  Orbitals are the
orbits on ordered pairs of distinct points; they are found as connected
components of the Schreier graph on all ``degree**2`` ordered pairs, so the
group itself is never enumerated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import ContractError, DomainError, ResourceLimitError

DEFAULT_ENUMERATION_CAP = 10**7

Pair = tuple[int, int]


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise DomainError("images do not form a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)


@dataclass(frozen=True)
class GeneratorSet:
    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise DomainError("a generator set needs at least one generator")
        if any(g.degree != self.degree for g in gens):
            raise DomainError("generators must share the degree")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: Perm) -> "GeneratorSet":
        return cls(gens[0].degree, gens)

    def to_lists(self) -> list[list[int]]:
        return [list(g.images) for g in self.generators]


def symmetric_group(d: int) -> GeneratorSet:
    """Sym(d) in its natural action, generated by a transposition and a d-cycle."""
    if d < 1:
        raise DomainError("degree must be positive")
    if d == 1:
        return GeneratorSet.of(Perm.identity(1))
    return GeneratorSet.of(Perm.from_cycles(d, (0, 1)), Perm.from_cycles(d, tuple(range(d))))


def cyclic_group(n: int) -> GeneratorSet:
    """The regular cyclic group Z_n generated by i -> i+1 mod n."""
    return GeneratorSet.of(Perm(tuple((i + 1) % n for i in range(n))))


def orbits(G: GeneratorSet) -> list[list[int]]:
    """Orbit partition of the domain, each orbit sorted, ordered by least point."""
    seen = [False] * G.degree
    result = []
    for start in range(G.degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in G.generators:
                y = g.images[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        result.append(sorted(orbit))
    return result


def is_transitive(G: GeneratorSet) -> bool:
    return len(orbits(G)) == 1


@dataclass(frozen=True)
class OrbitalDecomposition:
    """Non-trivial orbitals of a transitive group.

    Each orbital is labelled by the lexicographically least ordered pair it
    contains.  ``component`` maps the encoded pair ``a*degree + b`` to the
    index of its orbital in ``labels`` (``-1`` on the diagonal).
    """

    degree: int
    labels: tuple[Pair, ...]
    component: np.ndarray = field(repr=False, compare=False)
    sizes: tuple[int, ...]
    pairing: dict[Pair, Pair]

    def index(self, label: Pair) -> int:
        return self.labels.index(label)

    def orbital_id(self, alpha: int, beta: int) -> Pair:
        if alpha == beta:
            raise DomainError("the trivial orbital carries no label")
        return self.labels[int(self.component[alpha * self.degree + beta])]

    @cached_property
    def subdegree(self) -> dict[Pair, int]:
        return {lab: size // self.degree for lab, size in zip(self.labels, self.sizes)}

    @cached_property
    def sym_subdegree(self) -> dict[Pair, int]:
        return {
            lab: self.subdegree[lab] * (1 if self.pairing[lab] == lab else 2)
            for lab in self.labels
        }

    def is_self_paired(self, label: Pair) -> bool:
        return self.pairing[label] == label

    def suborbit(self, label: Pair, alpha: int) -> list[int]:
        idx = self.index(label)
        row = self.component[alpha * self.degree:(alpha + 1) * self.degree]
        return [int(b) for b in np.flatnonzero(row == idx)]

    @cached_property
    def pair_classes(self) -> list[tuple[Pair, ...]]:
        """The classes {D, D*}, each as a sorted tuple of labels."""
        return sorted({tuple(sorted({lab, self.pairing[lab]})) for lab in self.labels})

    @property
    def rank(self) -> int:
        return 1 + len(self.labels)

    @property
    def pair_rank(self) -> int:
        return len(self.pair_classes)


def _pair_graph_components(G: GeneratorSet) -> np.ndarray:
    deg = G.degree
    nodes = np.arange(deg * deg, dtype=np.int64)
    alpha, beta = np.divmod(nodes, deg)
    rows, cols = [], []
    for g in G.generators:
        img = g.as_array()
        rows.append(nodes)
        cols.append(img[alpha] * deg + img[beta])
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = csr_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(deg * deg,) * 2)
    # a finite group's Schreier graph has strongly = weakly connected components
    _, comp = connected_components(graph, directed=True, connection="weak")
    return comp


def orbitals(G: GeneratorSet) -> OrbitalDecomposition:
    """Orbitals of the transitive group generated by ``G``."""
    if not is_transitive(G):
        raise ContractError("orbitals() requires a transitive group")
    deg = G.degree
    if deg == 1:
        return OrbitalDecomposition(1, (), np.full(1, -1), (), {})
    comp = _pair_graph_components(G)
    nodes = np.arange(deg * deg)
    off_diag = (nodes // deg) != (nodes % deg)
    comp_off = comp[off_diag]
    nodes_off = nodes[off_diag]
    # least encoded pair in each component = lexicographically least pair
    first = {}
    for raw, node in zip(*np.unique(comp_off, return_index=True)):
        first[int(raw)] = int(nodes_off[node])
    ordered = sorted(first, key=first.get)
    remap = np.full(int(comp.max()) + 1, -1, dtype=np.int64)
    for i, raw in enumerate(ordered):
        remap[raw] = i
    component = np.where(off_diag, remap[comp], -1)
    component.setflags(write=False)
    labels = tuple(divmod(first[raw], deg) for raw in ordered)
    sizes = tuple(int(s) for s in np.bincount(component[off_diag], minlength=len(labels)))
    pairing = {}
    for lab in labels:
        a, b = lab
        pairing[lab] = labels[int(component[b * deg + a])]
    return OrbitalDecomposition(deg, labels, component, sizes, pairing)


def rank(G: GeneratorSet) -> int:
    return orbitals(G).rank


def pair_rank(G: GeneratorSet) -> int:
    return orbitals(G).pair_rank


def is_three_halves_transitive(G: GeneratorSet | OrbitalDecomposition) -> tuple[bool, int | None]:
    """True (with the common size) iff all non-trivial subdegrees are equal."""
    dec = G if isinstance(G, OrbitalDecomposition) else orbitals(G)
    sizes = set(dec.subdegree.values())
    if len(sizes) == 1:
        return True, sizes.pop()
    if not sizes:
        return True, None
    return False, None


def enumerate_group(G: GeneratorSet, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All elements of <G> as image tuples, by closure from the identity."""
    ident = tuple(range(G.degree))
    gens = [g.images for g in G.generators]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ResourceLimitError(f"group order exceeds cap {cap}")
                queue.append(y)
    return sorted(seen)


def group_order_by_enumeration(G: GeneratorSet, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    return len(enumerate_group(G, cap))


def restrict(g: Perm, subset: Sequence[int]) -> Perm:
    """The permutation induced by ``g`` on an invariant ``subset``, relabelled 0..len-1."""
    pos = {x: i for i, x in enumerate(subset)}
    try:
        return Perm(tuple(pos[g(x)] for x in subset))
    except KeyError:
        raise ContractError("subset is not invariant under the permutation") from None


def induced_on_blocks(g: Perm, block_of: Sequence[int], nblocks: int) -> Perm:
    """The permutation induced by ``g`` on the blocks of an invariant partition."""
    images = [-1] * nblocks
    for x, blk in enumerate(block_of):
        tgt = block_of[g(x)]
        if images[blk] == -1:
            images[blk] = tgt
        elif images[blk] != tgt:
            raise ContractError("partition is not invariant under the permutation")
    return Perm(tuple(images))


def power(g: Perm, e: int) -> Perm:
    result = Perm.identity(g.degree)
    for _ in range(e):
        result = result * g
    return result


def unordered_pairs(points: Iterable[int]) -> list[Pair]:
    pts = sorted(points)
    return [(a, b) for i, a in enumerate(pts) for b in pts[i + 1:]]
