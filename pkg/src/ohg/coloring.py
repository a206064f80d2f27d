"""Colorings, partition systems, and state-based coloring search.

A proper n-coloring of a conformal n-uniform hypergraph is the same thing as
a partition into n independent dominating cells, and each cell's indicator is
a two-valued state. The row-selection search (:func:`algorithm1`) exploits
that: it hunts for n pairwise non-conflicting rows of the state table, whose
sum is then the all-ones vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import core
from .core import Graph, Hypergraph
from .errors import (
    DisconnectedError,
    NotAStateError,
    NotDominatingError,
    NotProperError,
    OhgError,
    SizeLimitError,
)
from .states import TravisMatrix, TwoValuedState

_CHROMATIC_VERTEX_BUDGET = 64


@dataclass(frozen=True)
class PartitionSystem:
    """A partition of the vertices into independent dominating cells.

    Construction validates both properties: cells must be independent in the
    2-section (no two members adjacent) and dominating (every vertex is in or
    adjacent to each cell).
    """

    hypergraph: Hypergraph
    cells: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        h = self.hypergraph
        union: set[str] = set()
        total = 0
        for cell in self.cells:
            if not cell:
                raise OhgError("partition cells must be nonempty")
            union |= cell
            total += len(cell)
        if union != set(h.vertices) or total != len(h.vertices):
            raise OhgError("cells must partition the vertex set exactly")
        idx = h.index
        nbr = h.neighbor_masks
        for cell in self.cells:
            mask = sum(1 << idx[v] for v in cell)
            for v in sorted(cell):
                if nbr[idx[v]] & mask:
                    raise NotProperError(
                        f"cell {sorted(cell)!r} contains adjacent vertices near {v!r}"
                    )
            for v in h.vertices:
                if v in cell or nbr[idx[v]] & mask:
                    continue
                raise NotDominatingError(
                    f"cell {sorted(cell)!r} does not dominate vertex {v!r}"
                )


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with colors 1..m; properness is enforced."""

    hypergraph: Hypergraph
    color_of: dict[str, int]

    def __post_init__(self) -> None:
        h = self.hypergraph
        missing = set(h.vertices) - set(self.color_of)
        if missing:
            raise OhgError(f"coloring misses vertices {sorted(missing)!r}")
        for ctx in h.contexts:
            seen: dict[int, str] = {}
            for v in sorted(ctx):
                c = self.color_of[v]
                if c in seen:
                    raise NotProperError(
                        f"vertices {seen[c]!r} and {v!r} share a context and color {c}"
                    )
                seen[c] = v

    @property
    def num_colors(self) -> int:
        return len(set(self.color_of.values()))

    def color_class(self, color: int) -> frozenset[str]:
        return frozenset(v for v, c in self.color_of.items() if c == color)

    def colors(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.color_of.values())))


@dataclass(frozen=True)
class RowSelection:
    """Row indices into a state table, 1-based to match printed matrices."""

    rows: tuple[int, ...]


def partition_from_coloring(h: Hypergraph, coloring: Coloring) -> PartitionSystem:
    """Color classes as partition cells, verifying both partition properties.

    A proper coloring with more colors than the clique number typically fails
    domination (the surplus class cannot reach every vertex); that surfaces
    here as :class:`NotDominatingError`.
    """
    if set(coloring.color_of) != set(h.vertices):
        raise OhgError("coloring does not cover this hypergraph")
    cells = tuple(coloring.color_class(c) for c in coloring.colors())
    return PartitionSystem(h, cells)


def coloring_from_partition(p: PartitionSystem) -> Coloring:
    """The canonical coloring of a partition system: cell order = color order.

    Any of the n! cell orderings would do; this returns the one with color i
    assigned to the i-th cell.
    """
    color_of = {}
    for i, cell in enumerate(p.cells, start=1):
        for v in cell:
            color_of[v] = i
    return Coloring(p.hypergraph, color_of)


def partition_from_rows(
    h: Hypergraph, t: TravisMatrix, selection: RowSelection
) -> PartitionSystem:
    """Partition system whose cells are the true-sets of the selected rows."""
    for r in selection.rows:
        if not 1 <= r <= t.n_rows:
            raise OhgError(f"row index {r} out of range 1..{t.n_rows}")
    cells = tuple(t.row_true_set(r - 1) for r in selection.rows)
    return PartitionSystem(h, cells)


def algorithm1(t: TravisMatrix, n: int) -> Optional[RowSelection]:
    """Search for n rows of the state table that never share a 1.

    This is a faithful port of the published backtracking listing, with its
    AvailableRows / A / RemovedRows bookkeeping kept intact so the returned
    selection is the listing's first find, not just any valid one:

    * at level i the first available row is chosen, recorded in
      RemovedRows[i], and every row conflicting with it is moved to
      RemovedRows[i+1];
    * when AvailableRows empties, the rows removed at this level are
      restored, the level's pick is popped, and the search resumes one
      level down;
    * the loop stops on success (level n filled) or once level 1 has
      exhausted every row.

    Rows are 1-based in the result. ``None`` means the exhaustive search
    proved no such selection exists.
    """
    if n < 1:
        raise OhgError("the number of colors must be positive")
    rows = t.rows
    available = list(range(t.n_rows))
    chosen: list[int] = []
    removed: dict[int, list[int]] = {i: [] for i in range(1, n + 2)}
    i = 1
    while i <= n and (i != 1 or available):
        if not available:
            available.extend(removed[i])
            removed[i] = []
            if len(chosen) == i:
                chosen.pop()
            i -= 1
        else:
            pick = available.pop(0)
            if len(chosen) == i:
                chosen[i - 1] = pick
            else:
                chosen.append(pick)
            removed[i].append(pick)
            i += 1
            conflicts = [s for s in available if rows[s] & rows[pick]]
            removed[i].extend(conflicts)
            if conflicts:
                available = [s for s in available if not (rows[s] & rows[pick])]
    if i > n and len(chosen) == n:
        return RowSelection(tuple(r + 1 for r in chosen))
    return None


def verify_rows(t: TravisMatrix, selection: RowSelection) -> bool:
    """Whether the selected rows sum, componentwise over the integers, to the
    all-ones vector."""
    for r in selection.rows:
        if not 1 <= r <= t.n_rows:
            raise OhgError(f"row index {r} out of range 1..{t.n_rows}")
    k = t.n_cols
    sums = [0] * k
    for r in selection.rows:
        for j in range(k):
            sums[j] += t.bit(r - 1, j)
    return all(s == 1 for s in sums)


def color_to_state(coloring: Coloring, color: int) -> TwoValuedState:
    """Project one color class to the two-valued state it induces.

    Valid only when the class meets every context exactly once; a surplus
    class of an over-colored hypergraph fails with :class:`NotAStateError`.
    """
    h = coloring.hypergraph
    members = coloring.color_class(color)
    for ctx in h.contexts:
        hits = len(ctx & members)
        if hits != 1:
            raise NotAStateError(
                f"color {color} meets context {sorted(ctx)!r} {hits} times"
            )
    return TwoValuedState(h.vertices, members)


def _two_section_components(g: Graph) -> int:
    n = len(g.vertices)
    if n == 0:
        return 0
    nbr = g.neighbor_masks
    seen = 0
    comps = 0
    for start in range(n):
        if seen >> start & 1:
            continue
        comps += 1
        frontier = 1 << start
        while frontier:
            seen |= frontier
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                bits ^= low
                nxt |= nbr[low.bit_length() - 1]
            frontier = nxt & ~seen
    return comps


def _greedy_dsatur(nbr: tuple[int, ...], n: int) -> list[int]:
    colors = [0] * n
    for _ in range(n):
        best, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[u] for u in _bits(nbr[v]) if colors[u]})
            key = (sat, nbr[v].bit_count())
            if key > best_key:
                best, best_key = v, key
        used = {colors[u] for u in _bits(nbr[best])}
        c = 1
        while c in used:
            c += 1
        colors[best] = c
    return colors


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def exact_coloring(
    h: Hypergraph, *, vertex_budget: int = _CHROMATIC_VERTEX_BUDGET
) -> tuple[int, Coloring]:
    """Exact chromatic number of the 2-section plus one optimal coloring.

    Branch and bound with DSATUR vertex ordering, the clique number as the
    lower bound and a greedy coloring as the incumbent.
    """
    g = core.two_section(h)
    n = len(g.vertices)
    if n > vertex_budget:
        raise SizeLimitError(
            f"exact chromatic search capped at {vertex_budget} vertices, got {n}"
        )
    nbr = g.neighbor_masks
    lower = max(len(c) for c in core.maximal_cliques(g))
    greedy = _greedy_dsatur(nbr, n)
    best_count = max(greedy)
    best = list(greedy)
    if best_count > lower:
        colors = [0] * n

        def descend(colored: int, used: int) -> None:
            nonlocal best_count, best
            if used >= best_count:
                return
            if colored == n:
                best_count = used
                best = list(colors)
                return
            pick, pick_key = -1, (-1, -1)
            for v in range(n):
                if colors[v]:
                    continue
                sat = len({colors[u] for u in _bits(nbr[v]) if colors[u]})
                key = (sat, nbr[v].bit_count())
                if key > pick_key:
                    pick, pick_key = v, key
            taken = {colors[u] for u in _bits(nbr[pick])}
            limit = min(used + 1, best_count - 1)
            for c in range(1, limit + 1):
                if c in taken:
                    continue
                colors[pick] = c
                descend(colored + 1, max(used, c))
                colors[pick] = 0
                if best_count == lower:
                    return

        descend(0, 0)
    mapping = {g.vertices[v]: best[v] for v in range(n)}
    return best_count, Coloring(h, mapping)


def exact_chromatic(
    h: Hypergraph, *, vertex_budget: int = _CHROMATIC_VERTEX_BUDGET
) -> int:
    """Exact chromatic number of the 2-section (see :func:`exact_coloring`)."""
    count, _ = exact_coloring(h, vertex_budget=vertex_budget)
    return count


def brooks_bound(h: Hypergraph) -> int:
    """Brooks' upper bound on the chromatic number of the 2-section:
    the maximum degree, except one more for complete graphs and odd cycles.
    Requires a connected 2-section."""
    g = core.two_section(h)
    if _two_section_components(g) != 1:
        raise DisconnectedError("Brooks bound needs a connected 2-section")
    n = len(g.vertices)
    degrees = [m.bit_count() for m in g.neighbor_masks]
    delta = max(degrees)
    complete = all(d == n - 1 for d in degrees)
    odd_cycle = n % 2 == 1 and all(d == 2 for d in degrees)
    return delta + 1 if complete or odd_cycle else delta


def relaxed_coloring(
    t: TravisMatrix, h: Hypergraph, max_colors: int
) -> Optional[Coloring]:
    """State-guided greedy coloring that lets several states share one color.

    For each color in turn, walk the rows in matrix order and absorb a row's
    still-uncolored true vertices whenever the enlarged class stays
    independent; already-colored vertices keep their first color. This is a
    deterministic reading of the informal relaxation sketch, a heuristic for
    hypergraphs that admit no selection of disjoint rows; it is not the
    chromatic oracle. Returns ``None`` when ``max_colors`` runs out or no
    progress is possible.
    """
    idx = h.index
    nbr = h.neighbor_masks
    rows = [t.row_true_set(r) for r in range(t.n_rows)]
    uncolored = set(h.vertices)
    color_of: dict[str, int] = {}
    for color in range(1, max_colors + 1):
        if not uncolored:
            break
        current: set[str] = set()
        current_mask = 0
        for true_set in rows:
            contribution = true_set & uncolored
            if not contribution:
                continue
            add_mask = sum(1 << idx[v] for v in contribution)
            conflict = False
            for v in contribution:
                if nbr[idx[v]] & ((current_mask | add_mask) & ~(1 << idx[v])):
                    conflict = True
                    break
            if conflict:
                continue
            current |= contribution
            current_mask |= add_mask
            uncolored -= contribution
        if not current:
            return None
        for v in current:
            color_of[v] = color
    if uncolored:
        return None
    return Coloring(h, color_of)
