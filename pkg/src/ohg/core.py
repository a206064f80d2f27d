"""Hypergraph data model, 2-section, cliques, structure checks, isomorphism.

Vertices are opaque string tokens. All heavy computation runs on dense
integer indices in declaration order, with vertex sets packed into Python
int bitmasks (bit ``i`` = vertex ``i``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    DuplicateContextError,
    EmptyContextError,
    InvalidVertexNameError,
    SubsetContextError,
)


def _check_name(name: object) -> str:
    if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
        raise InvalidVertexNameError(
            f"vertex names must be nonempty tokens without whitespace, got {name!r}"
        )
    return name


@dataclass(frozen=True)
class Hypergraph:
    """An orthogonality hypergraph: named vertices plus a family of contexts.

    Instances are immutable; use :func:`build` to construct a validated one.
    """

    vertices: tuple[str, ...]
    contexts: tuple[frozenset[str], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def context_masks(self) -> tuple[int, ...]:
        idx = self.index
        return tuple(
            sum(1 << idx[v] for v in ctx) for ctx in self.contexts
        )

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """For each vertex, the mask of vertices sharing some context with it."""
        nbr = [0] * len(self.vertices)
        for mask in self.context_masks:
            bits = mask
            while bits:
                low = bits & -bits
                nbr[low.bit_length() - 1] |= mask & ~low
                bits ^= low
        return tuple(nbr)

    def adjacent(self, u: str, v: str) -> bool:
        if u == v:
            return False
        return bool(self.neighbor_masks[self.index[u]] >> self.index[v] & 1)

    def __repr__(self) -> str:  # keep reprs short, fixtures have 100+ vertices
        return f"Hypergraph({len(self.vertices)} vertices, {len(self.contexts)} contexts)"


@dataclass(frozen=True)
class Graph:
    """A plain graph: named vertices and undirected edges."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        declared = set(self.vertices)
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"edge must join two distinct vertices: {set(edge)!r}")
            if not edge <= declared:
                raise ValueError(f"edge references undeclared vertex: {set(edge)!r}")

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        idx = self.index
        nbr = [0] * len(self.vertices)
        for edge in self.edges:
            u, v = tuple(edge)
            nbr[idx[u]] |= 1 << idx[v]
            nbr[idx[v]] |= 1 << idx[u]
        return tuple(nbr)

    def degree(self, v: str) -> int:
        return self.neighbor_masks[self.index[v]].bit_count()

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class ShapeReport:
    """Structural summary of a hypergraph against the quantum-logic shape laws."""

    clique_number: int
    uniform: bool
    conformal: bool
    completion_ok: bool
    max_degree: int


class FourCycle(NamedTuple):
    """Four contexts forming a closed intertwine chain, with the four
    (pairwise distinct) intertwining vertices witnessing it."""

    contexts: tuple[int, int, int, int]
    vertices: tuple[str, str, str, str]


def build(raw_contexts: Sequence[Iterable[str]]) -> Hypergraph:
    """Validate and construct a hypergraph from a sequence of contexts.

    Vertex order is first appearance over the given sequence, so pass ordered
    iterables when the column order matters. Duplicate or nested contexts are
    hard errors: the logics this package handles never contain them, and
    silently dropping input would mask transcription mistakes.
    """
    vertices: list[str] = []
    seen: dict[str, int] = {}
    contexts: list[frozenset[str]] = []
    for raw in raw_contexts:
        names = [_check_name(v) for v in raw]
        ctx = frozenset(names)
        if len(ctx) < 2:
            raise EmptyContextError(
                f"context needs at least two distinct vertices, got {sorted(ctx)!r}"
            )
        if ctx in contexts:
            raise DuplicateContextError(f"context {sorted(ctx)!r} appears twice")
        for v in names:
            if v not in seen:
                seen[v] = len(vertices)
                vertices.append(v)
        contexts.append(ctx)
    for i, a in enumerate(contexts):
        for b in contexts[i + 1:]:
            if a <= b or b <= a:
                small, big = (a, b) if a <= b else (b, a)
                raise SubsetContextError(
                    f"context {sorted(small)!r} is contained in {sorted(big)!r}"
                )
    if not contexts:
        raise EmptyContextError("a hypergraph needs at least one context")
    return Hypergraph(tuple(vertices), tuple(contexts))


def two_section(h: Hypergraph) -> Graph:
    """The graph joining every two vertices that share a context."""
    edges = set()
    for ctx in h.contexts:
        members = sorted(ctx)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.add(frozenset((u, v)))
    return Graph(h.vertices, frozenset(edges))


def maximal_cliques(g: Graph) -> tuple[frozenset[str], ...]:
    """All inclusion-maximal cliques of ``g``, sorted for determinism.

    Bron-Kerbosch with pivoting on bitmasks; instances here stay small
    (the largest composed hypergraph has 378 vertices).
    """
    nbr = g.neighbor_masks
    n = len(g.vertices)
    out: list[int] = []

    def expand(clique: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            out.append(clique)
            return
        pool = cand | excl
        pivot = pool & -pool
        best, best_deg = pivot.bit_length() - 1, -1
        while pool:
            low = pool & -pool
            pool ^= low
            v = low.bit_length() - 1
            d = (cand & nbr[v]).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        todo = cand & ~nbr[best]
        while todo:
            low = todo & -todo
            todo ^= low
            v = low.bit_length() - 1
            expand(clique | low, cand & nbr[v], excl & nbr[v])
            cand &= ~low
            excl |= low
    if n:
        expand(0, (1 << n) - 1, 0)
    cliques = []
    for mask in out:
        members = []
        while mask:
            low = mask & -mask
            members.append(g.vertices[low.bit_length() - 1])
            mask ^= low
        cliques.append(frozenset(members))
    return tuple(sorted(cliques, key=lambda c: sorted(c)))


def shape(h: Hypergraph) -> ShapeReport:
    """Check uniformity, conformality and the completion criterion.

    ``clique_number`` is the clique number of the 2-section. ``completion_ok``
    holds when no context is smaller than that number, i.e. every adjacency
    sits inside a full-size context.
    """
    g = two_section(h)
    cliques = maximal_cliques(g)
    n = max(len(c) for c in cliques)
    sizes = {len(ctx) for ctx in h.contexts}
    return ShapeReport(
        clique_number=n,
        uniform=sizes == {n},
        conformal=set(cliques) == set(h.contexts),
        completion_ok=min(sizes) >= n,
        max_degree=max(m.bit_count() for m in g.neighbor_masks),
    )


def _vertex_signature(h: Hypergraph) -> dict[str, tuple]:
    nbr = h.neighbor_masks
    idx = h.index
    degrees = {v: nbr[idx[v]].bit_count() for v in h.vertices}
    sig = {}
    for v in h.vertices:
        ctx_sizes = tuple(sorted(len(c) for c in h.contexts if v in c))
        mask = nbr[idx[v]]
        nd = []
        while mask:
            low = mask & -mask
            nd.append(degrees[h.vertices[low.bit_length() - 1]])
            mask ^= low
        sig[v] = (degrees[v], ctx_sizes, tuple(sorted(nd)))
    return sig


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> Optional[dict[str, str]]:
    """A vertex bijection mapping contexts onto contexts, or ``None``.

    Invariant-refined backtracking, not canonical labeling: fine for the
    desk-scale instances this package targets (~120 vertices).
    """
    if len(h1.vertices) != len(h2.vertices) or len(h1.contexts) != len(h2.contexts):
        return None
    if sorted(len(c) for c in h1.contexts) != sorted(len(c) for c in h2.contexts):
        return None
    sig1, sig2 = _vertex_signature(h1), _vertex_signature(h2)
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None
    classes: dict[tuple, list[str]] = {}
    for v, s in sig2.items():
        classes.setdefault(s, []).append(v)

    contexts2 = set(h2.contexts)
    # grow the mapping along adjacencies, most-constrained first: a vertex
    # with mapped neighbors has its image pinned down hard, which is what
    # keeps the search from thrashing on symmetric instances
    order: list[str] = []
    placed: set[str] = set()
    remaining = set(h1.vertices)
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (
                -sum(1 for u in placed if h1.adjacent(v, u)),
                len(classes[sig1[v]]),
                v,
            ),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.remove(nxt)
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def feasible(v: str, w: str) -> bool:
        for u, x in mapping.items():
            if h1.adjacent(v, u) != h2.adjacent(w, x):
                return False
        # any context fully mapped once v is placed must land on a context of h2
        trial = dict(mapping)
        trial[v] = w
        for ctx in h1.contexts:
            if v in ctx and all(u in trial for u in ctx):
                if frozenset(trial[u] for u in ctx) not in contexts2:
                    return False
        return True

    def assign(pos: int) -> bool:
        if pos == len(order):
            image = {frozenset(mapping[u] for u in ctx) for ctx in h1.contexts}
            return image == contexts2
        v = order[pos]
        for w in sorted(classes[sig1[v]]):
            if w in used or not feasible(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if assign(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if assign(0) else None


def four_cycle_lint(h: Hypergraph) -> list[FourCycle]:
    """Closed chains of four contexts with four distinct intertwining vertices.

    A nonempty result flags the hypergraph as having no faithful orthogonal
    representation: antipodal vertices of such a cycle would be forced
    colinear. Cycles are reported once, canonicalized up to rotation and
    reflection.
    """
    ctxs = h.contexts
    m = len(ctxs)
    inter = [[ctxs[i] & ctxs[j] for j in range(m)] for i in range(m)]
    found: dict[tuple, FourCycle] = {}
    for a in range(m):
        for b in range(m):
            if b == a or not inter[a][b]:
                continue
            for c in range(m):
                if c in (a, b) or not inter[b][c]:
                    continue
                for d in range(m):
                    if d in (a, b, c) or not inter[c][d] or not inter[d][a]:
                        continue
                    for vab in sorted(inter[a][b]):
                        for vbc in sorted(inter[b][c]):
                            if vbc == vab:
                                continue
                            for vcd in sorted(inter[c][d]):
                                if vcd in (vab, vbc):
                                    continue
                                for vda in sorted(inter[d][a]):
                                    if vda in (vab, vbc, vcd):
                                        continue
                                    key = _canonical_cycle((a, b, c, d))
                                    if key not in found:
                                        found[key] = FourCycle(
                                            (a, b, c, d), (vab, vbc, vcd, vda)
                                        )
    return [found[k] for k in sorted(found)]


def _canonical_cycle(cycle: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    variants = []
    for seq in (cycle, cycle[::-1]):
        for shift in range(4):
            variants.append(seq[shift:] + seq[:shift])
    return min(variants)
