"""Rebuilding a hypergraph from its table of two-valued states.

The adjacency criterion declares two vertices adjacent when no state makes
them jointly true. Taking maximal cliques of that graph and dropping cliques
below the clique number (the completion criterion) yields the canonical
reconstruction, which equals the source exactly for perfectly separable
hypergraphs and otherwise reveals surplus structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import core
from .core import Graph, Hypergraph
from .errors import AllZeroColumnError, OhgError, SizeLimitError
from .states import TravisMatrix, enumerate_states

_EQUIV_COLUMN_CAP = 32
_EQUIV_NODE_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ReconstructionResult:
    """Raw and completion-filtered reconstructions, with diffs to a source."""

    raw_graph: Graph
    raw_hypergraph: Hypergraph
    filtered_hypergraph: Hypergraph
    extra_contexts: tuple[frozenset[str], ...] = ()
    missing_contexts: tuple[frozenset[str], ...] = ()


@dataclass(frozen=True)
class Verdict:
    """Reconstructability verdict for a hypergraph.

    ``kind`` is one of ``reconstructable``, ``extra_structure``,
    ``non_separable``, ``empty``.
    """

    kind: str
    extra_contexts: tuple[frozenset[str], ...] = ()
    witness: Optional[tuple[str, str]] = None

    @property
    def reconstructable(self) -> bool:
        return self.kind == "reconstructable"


def adjacency_from_states(t: TravisMatrix) -> Graph:
    """The graph the adjacency criterion induces: an edge wherever two
    columns are never jointly 1.

    An identically zero column is refused rather than guessed around: the
    criterion would make that vertex adjacent to everything.
    """
    if t.n_rows == 0:
        raise OhgError("adjacency criterion needs at least one state")
    cooc = t.cooc
    colsum = t.column_sums
    for j in range(t.n_cols):
        if colsum[j] == 0:
            raise AllZeroColumnError(
                f"column {t.vertices[j]!r} is never true; the state table is not unital"
            )
    edges = set()
    for i in range(t.n_cols):
        for j in range(i + 1, t.n_cols):
            if cooc[i, j] == 0:
                edges.add(frozenset((t.vertices[i], t.vertices[j])))
    return Graph(t.vertices, frozenset(edges))


def reconstruct(
    t: TravisMatrix,
    n: int,
    source: Optional[Hypergraph] = None,
) -> ReconstructionResult:
    """Canonical reconstruction from a state table at clique number ``n``.

    The raw hypergraph takes every maximal clique of the adjacency-criterion
    graph as a context; filtering then drops cliques smaller than ``n``. The
    filter only removes, never invents: surplus cliques of full size (the
    binding-construction counterexample) survive and show up in
    ``extra_contexts`` when a source is given.
    """
    if n < 3:
        raise OhgError("reconstruction is defined for clique number n >= 3")
    raw_graph = adjacency_from_states(t)
    cliques = core.maximal_cliques(raw_graph)
    raw = Hypergraph(t.vertices, cliques)
    kept = tuple(c for c in cliques if len(c) >= n)
    filtered = Hypergraph(t.vertices, kept)
    extra: tuple[frozenset[str], ...] = ()
    missing: tuple[frozenset[str], ...] = ()
    if source is not None:
        src = set(source.contexts)
        got = set(kept)
        extra = tuple(sorted(got - src, key=sorted))
        missing = tuple(sorted(src - got, key=sorted))
    return ReconstructionResult(raw_graph, raw, filtered, extra, missing)


def evaluate(
    h: Hypergraph, *, n: Optional[int] = None
) -> tuple[Verdict, Optional[ReconstructionResult]]:
    """Reconstructability verdict plus the reconstruction diff behind it.

    ``empty`` when there are no states at all; ``non_separable`` with a
    witness pair when two columns coincide (no reconstruction is attempted in
    either case, so the second element is ``None``); ``reconstructable`` when
    the filtered reconstruction is isomorphic to ``h``; else
    ``extra_structure`` with the surplus contexts. ``n`` overrides the clique
    number used by the completion filter. Only the canonical reconstruction
    is tested, which is sound but does not quantify over every
    table-equivalent hypergraph. Non-unital input propagates
    :class:`AllZeroColumnError`.
    """
    t = enumerate_states(h)
    if t.n_rows == 0:
        return Verdict("empty"), None
    cooc = t.cooc
    colsum = t.column_sums
    for i in range(t.n_cols):
        for j in range(i + 1, t.n_cols):
            if cooc[i, j] == colsum[i] == colsum[j]:
                return Verdict(
                    "non_separable", witness=(t.vertices[i], t.vertices[j])
                ), None
    if n is None:
        n = core.shape(h).clique_number
    if n < 3:
        raise OhgError("reconstructability verdicts need clique number >= 3")
    rec = reconstruct(t, n, source=h)
    if core.is_isomorphic(h, rec.filtered_hypergraph) is not None:
        return Verdict("reconstructable"), rec
    return Verdict("extra_structure", extra_contexts=rec.extra_contexts), rec


def verdict(h: Hypergraph, *, n: Optional[int] = None) -> Verdict:
    """Reconstructability of ``h`` from its own two-valued states
    (see :func:`evaluate` for the verdict kinds)."""
    return evaluate(h, n=n)[0]


def _column_invariants(t: TravisMatrix) -> list[tuple]:
    cooc = t.cooc
    inv = []
    for i in range(t.n_cols):
        off = sorted(int(cooc[i, j]) for j in range(t.n_cols) if j != i)
        inv.append((int(cooc[i, i]), tuple(off)))
    return inv


def _permute_row(row: int, col_map: list[int], k: int) -> int:
    out = 0
    for i in range(k):
        if row >> (k - 1 - i) & 1:
            out |= 1 << (k - 1 - col_map[i])
    return out


def travis_equivalent(
    t1: TravisMatrix,
    t2: TravisMatrix,
    *,
    node_budget: int = _EQUIV_NODE_BUDGET,
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A witness (row permutation, column permutation) carrying t1 onto t2.

    On success returns ``(row_map, col_map)`` with
    ``t1.bit(r, c) == t2.bit(row_map[r], col_map[c])`` for all entries;
    ``None`` when no such pair exists. Search is column-signature refinement
    (column weight plus the multiset of pairwise co-truth counts) followed by
    backtracking, so it is meant for reference-table-scale matrices; exceeding the
    node budget or the column cap raises :class:`SizeLimitError`.
    """
    if t1.n_rows != t2.n_rows or t1.n_cols != t2.n_cols:
        return None
    k = t1.n_cols
    if k > _EQUIV_COLUMN_CAP:
        raise SizeLimitError(
            f"equivalence search supports at most {_EQUIV_COLUMN_CAP} columns"
        )
    inv1 = _column_invariants(t1)
    inv2 = _column_invariants(t2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [
        [j for j in range(k) if inv2[j] == inv1[i]] for i in range(k)
    ]
    order = sorted(range(k), key=lambda i: (len(candidates[i]), i))
    cooc1, cooc2 = t1.cooc, t2.cooc
    row_position = {row: s for s, row in enumerate(t2.rows)}
    assignment: dict[int, int] = {}
    used = [False] * k
    nodes = 0
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def place(pos: int) -> bool:
        nonlocal nodes
        if pos == k:
            col_map = [assignment[i] for i in range(k)]
            transformed = [_permute_row(r, col_map, k) for r in t1.rows]
            if all(row in row_position for row in transformed):
                found.append(
                    (tuple(row_position[row] for row in transformed), tuple(col_map))
                )
                return True
            return False
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SizeLimitError("equivalence search exceeded its node budget")
            if all(cooc1[i, i2] == cooc2[j, j2] for i2, j2 in assignment.items()):
                assignment[i] = j
                used[j] = True
                if place(pos + 1):
                    return True
                del assignment[i]
                used[j] = False
        return False

    if place(0):
        return found[0]
    return None
