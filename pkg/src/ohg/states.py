"""Two-valued state enumeration and classification of the resulting table.

A two-valued state assigns 0/1 to every vertex so that each context carries
exactly one 1. The enumeration engine does depth-first branching on contexts
with unit propagation (a 1 forces 0 on all 2-section neighbors; a context with
one undetermined vertex left forces it to 1; an all-0 context kills the
branch). When the residual problem falls apart into independent components the
engine solves them separately and combines, which is what makes the 108-vertex
binding composition (2,239,488 states) enumerable in seconds.

Bit conventions: a state is stored as one Python int whose binary digits read
like a printed matrix row, i.e. column ``j`` (vertex ``j`` in declaration
order) sits at bit ``k - 1 - j``. Sorting these ints descending therefore
yields the canonical row order: descending as binary numbers under the column
order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .core import Hypergraph
from .errors import (
    ColumnCountMismatchError,
    NotAGadgetPairError,
    OhgError,
    RowLimitExceededError,
)

_COOC_CHUNK = 65536


@dataclass(frozen=True)
class TwoValuedState:
    """A single classical truth assignment over named vertices."""

    vertices: tuple[str, ...]
    true_set: frozenset[str]

    def value(self, vertex: str) -> int:
        return 1 if vertex in self.true_set else 0

    def bits(self) -> tuple[int, ...]:
        return tuple(1 if v in self.true_set else 0 for v in self.vertices)

    def satisfies(self, h: Hypergraph) -> bool:
        """Exactly one true vertex on every context of ``h``."""
        return all(len(ctx & self.true_set) == 1 for ctx in h.contexts)


@dataclass(frozen=True)
class TravisMatrix:
    """The 0/1 table of two-valued states: rows are states, columns vertices.

    Rows are packed ints in reading order (column 0 at the top bit). Matrices
    produced by :func:`enumerate_states` are in canonical row order; matrices
    transcribed from printed sources keep their source order.
    """

    vertices: tuple[str, ...]
    rows: tuple[int, ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.vertices)

    @property
    def nts(self) -> int:
        """Number of two-valued states."""
        return len(self.rows)

    def bit(self, row: int, col: int) -> int:
        return self.rows[row] >> (self.n_cols - 1 - col) & 1

    def row_bits(self, row: int) -> tuple[int, ...]:
        r = self.rows[row]
        k = self.n_cols
        return tuple(r >> (k - 1 - j) & 1 for j in range(k))

    def row_true_set(self, row: int) -> frozenset[str]:
        r = self.rows[row]
        k = self.n_cols
        return frozenset(v for j, v in enumerate(self.vertices) if r >> (k - 1 - j) & 1)

    def state(self, row: int) -> TwoValuedState:
        return TwoValuedState(self.vertices, self.row_true_set(row))

    def states(self) -> Iterable[TwoValuedState]:
        return (self.state(r) for r in range(self.n_rows))

    def column_int(self, col: int) -> int:
        """The column as an int with bit ``r`` set when row ``r`` has a 1.

        Bulk pairwise questions should go through :attr:`cooc` instead.
        """
        shift = self.n_cols - 1 - col
        buf = bytearray((len(self.rows) + 7) // 8)
        for r, m in enumerate(self.rows):
            if m >> shift & 1:
                buf[r >> 3] |= 1 << (r & 7)
        return int.from_bytes(buf, "little")

    @cached_property
    def cooc(self) -> np.ndarray:
        """Pairwise co-truth counts: ``cooc[i, j]`` = number of rows with both
        columns 1; the diagonal holds column sums. Computed once in chunks, so
        the 2.2M-row binding instance stays tractable."""
        k = self.n_cols
        nbytes = (k + 7) // 8
        pad = nbytes * 8 - k
        counts = np.zeros((k, k), dtype=np.int64)
        for start in range(0, len(self.rows), _COOC_CHUNK):
            chunk = self.rows[start:start + _COOC_CHUNK]
            buf = b"".join(r.to_bytes(nbytes, "big") for r in chunk)
            packed = np.frombuffer(buf, dtype=np.uint8).reshape(len(chunk), nbytes)
            bits = np.unpackbits(packed, axis=1)[:, pad:].astype(np.float32)
            counts += (bits.T @ bits).astype(np.int64)
        return counts

    @property
    def column_sums(self) -> np.ndarray:
        return np.diagonal(self.cooc)

    @classmethod
    def from_bit_rows(
        cls,
        vertices: Sequence[str],
        bit_rows: Iterable[Sequence[int]],
        *,
        canonical: bool = False,
    ) -> "TravisMatrix":
        vs = tuple(vertices)
        k = len(vs)
        rows = []
        for bits in bit_rows:
            if len(bits) != k:
                raise ValueError(f"row has {len(bits)} entries, expected {k}")
            m = 0
            for j, b in enumerate(bits):
                if b not in (0, 1):
                    raise ValueError(f"matrix entries must be 0/1, got {b!r}")
                if b:
                    m |= 1 << (k - 1 - j)
            rows.append(m)
        if len(set(rows)) != len(rows):
            raise ValueError("rows of a state table must be pairwise distinct")
        if canonical:
            rows.sort(reverse=True)
        return cls(vs, tuple(rows))

    def __repr__(self) -> str:
        return f"TravisMatrix({self.n_rows} states x {self.n_cols} vertices)"


@dataclass(frozen=True)
class StateClassification:
    """Separability-style verdicts over a complete state table."""

    nts: int
    unital: bool
    separable: bool
    perfectly_separable: bool
    fail_witness: Optional[tuple[str, str, int]]


@dataclass(frozen=True)
class GadgetProfile:
    """State counts at a (head, tail) pair that is never jointly true."""

    head: str
    tail: str
    n_a: int
    n_b: int
    n_n: int


class GadgetScan(NamedTuple):
    tifs_pairs: frozenset[tuple[str, str]]
    tits_pairs: frozenset[tuple[str, str]]


class _Problem:
    """Bitmask view of a hypergraph in reading order, plus the DFS engine."""

    __slots__ = ("k", "ctx_masks", "nbr")

    def __init__(self, k: int, ctx_masks: Sequence[int], nbr: Sequence[int]):
        self.k = k
        self.ctx_masks = tuple(ctx_masks)
        # nbr is indexed by bit position, not by vertex index
        self.nbr = tuple(nbr)

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> "_Problem":
        k = len(h.vertices)
        idx = h.index
        ctx_masks = []
        for ctx in h.contexts:
            m = 0
            for v in ctx:
                m |= 1 << (k - 1 - idx[v])
            ctx_masks.append(m)
        nbr = [0] * k
        for m in ctx_masks:
            bits = m
            while bits:
                low = bits & -bits
                nbr[low.bit_length() - 1] |= m & ~low
                bits ^= low
        return cls(k, ctx_masks, nbr)

    def propagate(self, ones: int, zeros: int, active: Sequence[int]):
        """Unit-propagate to fixpoint; ``None`` on contradiction, else the
        updated masks and the still-unresolved context indices."""
        masks = self.ctx_masks
        nbr = self.nbr
        while True:
            changed = False
            remaining = []
            for ci in active:
                c = masks[ci]
                if c & ones:
                    continue
                rem = c & ~zeros
                if rem == 0:
                    return None
                if rem & (rem - 1) == 0:
                    ones |= rem
                    nz = nbr[rem.bit_length() - 1] & ~zeros
                    if nz & ones:
                        return None
                    zeros |= nz
                    changed = True
                else:
                    remaining.append(ci)
            if not changed:
                return ones, zeros, remaining
            active = remaining

    def branch_context(self, zeros: int, active: Sequence[int]) -> int:
        """Unresolved context with fewest undetermined vertices; ties go to the
        lowest context index."""
        best = active[0]
        best_n = (self.ctx_masks[best] & ~zeros).bit_count()
        for ci in active[1:]:
            n = (self.ctx_masks[ci] & ~zeros).bit_count()
            if n < best_n:
                best, best_n = ci, n
        return best

    def components(self, zeros: int, active: Sequence[int]):
        """Group unresolved contexts that share undetermined vertices."""
        comps: list[tuple[int, list[int]]] = []
        for ci in active:
            und = self.ctx_masks[ci] & ~zeros
            merged_mask = und
            merged_group = [ci]
            rest = []
            for mask, group in comps:
                if mask & und:
                    merged_mask |= mask
                    merged_group.extend(group)
                else:
                    rest.append((mask, group))
            rest.append((merged_mask, merged_group))
            comps = rest
        return [sorted(group) for _, group in sorted(comps, key=lambda mg: min(mg[1]))]

    # -- counting -------------------------------------------------------------

    def count(self, ones: int = 0, zeros: int = 0, active: Optional[Sequence[int]] = None) -> int:
        if active is None:
            active = range(len(self.ctx_masks))
        res = self.propagate(ones, zeros, active)
        if res is None:
            return 0
        ones, zeros, active = res
        if not active:
            return 1
        comps = self.components(zeros, active)
        if len(comps) > 1:
            total = 1
            for group in comps:
                total *= self.count(ones, zeros, group)
                if total == 0:
                    return 0
            return total
        ci = self.branch_context(zeros, active)
        total = 0
        cand = self.ctx_masks[ci] & ~zeros
        while cand:
            low = cand & -cand
            cand ^= low
            nz = self.nbr[low.bit_length() - 1] & ~zeros
            if nz & ones:
                continue
            total += self.count(ones | low, zeros | nz, active)
        return total

    # -- row enumeration ------------------------------------------------------

    def rows(
        self,
        ones: int = 0,
        zeros: int = 0,
        active: Optional[Sequence[int]] = None,
        limit: Optional[int] = None,
    ) -> list[int]:
        if active is None:
            active = range(len(self.ctx_masks))
        res = self.propagate(ones, zeros, active)
        if res is None:
            return []
        ones, zeros, active = res
        if not active:
            return [ones]
        comps = self.components(zeros, active)
        if len(comps) > 1:
            partials = [ones]
            for group in comps:
                sub = self.rows(ones, zeros, group, limit)
                if not sub:
                    return []
                if limit is not None and len(partials) * len(sub) > limit:
                    raise RowLimitExceededError(
                        f"state enumeration exceeded the row limit of {limit}"
                    )
                partials = [p | s for p in partials for s in sub]
            return partials
        ci = self.branch_context(zeros, active)
        out: list[int] = []
        cand = self.ctx_masks[ci] & ~zeros
        while cand:
            low = cand & -cand
            cand ^= low
            nz = self.nbr[low.bit_length() - 1] & ~zeros
            if nz & ones:
                continue
            out.extend(self.rows(ones | low, zeros | nz, active, limit))
            if limit is not None and len(out) > limit:
                raise RowLimitExceededError(
                    f"state enumeration exceeded the row limit of {limit}"
                )
        return out

    def root_branches(self):
        """Child seeds of the root node, for progress reporting and for
        splitting the count across worker processes."""
        res = self.propagate(0, 0, range(len(self.ctx_masks)))
        if res is None:
            return [], None
        ones, zeros, active = res
        if not active:
            return [(ones, zeros)], []
        ci = self.branch_context(zeros, active)
        seeds = []
        cand = self.ctx_masks[ci] & ~zeros
        while cand:
            low = cand & -cand
            cand ^= low
            nz = self.nbr[low.bit_length() - 1] & ~zeros
            if nz & ones:
                continue
            seeds.append((ones | low, zeros | nz))
        return seeds, active


def _count_worker(args) -> int:
    k, ctx_masks, nbr, ones, zeros, active = args
    return _Problem(k, ctx_masks, nbr).count(ones, zeros, active)


def enumerate_states(h: Hypergraph, *, row_limit: Optional[int] = None) -> TravisMatrix:
    """All two-valued states of ``h`` as a canonically ordered matrix.

    A hypergraph admitting no state at all (the Kochen-Specker situation)
    yields an empty matrix, not an error. ``row_limit`` caps memory: going
    past it raises :class:`RowLimitExceededError`; use :func:`count_states`
    when only the number is needed.
    """
    prob = _Problem.from_hypergraph(h)
    rows = prob.rows(limit=row_limit)
    rows.sort(reverse=True)
    return TravisMatrix(h.vertices, tuple(rows))


def count_states(
    h: Hypergraph,
    *,
    jobs: int = 1,
    progress: Optional[Callable[[int], None]] = None,
) -> int:
    """Number of two-valued states, without storing rows.

    ``jobs`` > 1 splits the root branches over worker processes; the result is
    identical to a serial run. ``progress`` is invoked with the running total
    after each root branch completes.
    """
    prob = _Problem.from_hypergraph(h)
    if jobs <= 1 and progress is None:
        return prob.count()
    seeds, active = prob.root_branches()
    if active is None:
        return 0
    if not active:
        if progress:
            progress(len(seeds))
        return len(seeds)
    total = 0
    if jobs <= 1:
        for ones, zeros in seeds:
            total += prob.count(ones, zeros, active)
            if progress:
                progress(total)
        return total
    args = [(prob.k, prob.ctx_masks, prob.nbr, ones, zeros, tuple(active))
            for ones, zeros in seeds]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for sub in pool.map(_count_worker, args):
            total += sub
            if progress:
                progress(total)
    return total


def default_jobs() -> int:
    """Worker budget from the OHG_JOBS environment variable, else 1."""
    try:
        return max(1, int(os.environ.get("OHG_JOBS", "1")))
    except ValueError:
        return 1


def classify(h: Hypergraph, t: TravisMatrix) -> StateClassification:
    """Unitality and the separability ladder over a complete state table.

    Separable: every two columns differ in some row. Perfectly separable:
    additionally each ordered pair is distinguished in both directions and
    every non-adjacent pair is jointly true in some row. The witness names
    the first violating pair together with which of the three conditions
    failed (1: no row 0/1, 2: no row 1/0, 3: no row 1/1).
    """
    if t.vertices != h.vertices:
        raise ColumnCountMismatchError(
            "state table columns do not match the hypergraph's vertices"
        )
    k = t.n_cols
    nts = t.n_rows
    cooc = t.cooc
    colsum = t.column_sums
    unital = nts > 0 and bool((colsum > 0).all())
    separable = True
    perfectly = True
    witness: Optional[tuple[str, str, int]] = None
    for i in range(k):
        for j in range(i + 1, k):
            both = int(cooc[i, j])
            item1 = int(colsum[j]) - both > 0  # some row has i=0, j=1
            item2 = int(colsum[i]) - both > 0  # some row has i=1, j=0
            if not item1 and not item2:
                separable = False
            item3 = True
            if not h.adjacent(h.vertices[i], h.vertices[j]):
                item3 = both > 0
            if witness is None and not (item1 and item2 and item3):
                perfectly = False
                failed = 1 if not item1 else (2 if not item2 else 3)
                witness = (h.vertices[i], h.vertices[j], failed)
    return StateClassification(
        nts=nts,
        unital=unital,
        separable=separable,
        perfectly_separable=perfectly,
        fail_witness=witness,
    )


def gadget_scan(h: Hypergraph, t: TravisMatrix) -> GadgetScan:
    """True-implies-false and true-implies-true pairs of the state table.

    TIFS pairs are restricted to non-adjacent vertices: adjacency forbids
    co-truth trivially and would flood the output. TITS pairs require the
    head to be true in at least one state, so vacuous implications are out.
    """
    if t.vertices != h.vertices:
        raise ColumnCountMismatchError(
            "state table columns do not match the hypergraph's vertices"
        )
    if t.n_rows == 0:
        raise OhgError("gadget_scan needs at least one two-valued state")
    cooc = t.cooc
    colsum = t.column_sums
    k = t.n_cols
    tifs = set()
    tits = set()
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            u, v = h.vertices[i], h.vertices[j]
            if cooc[i, j] == 0 and not h.adjacent(u, v):
                tifs.add((u, v))
            if colsum[i] > 0 and cooc[i, j] == colsum[i]:
                tits.add((u, v))
    return GadgetScan(frozenset(tifs), frozenset(tits))


def gadget_profile(t: TravisMatrix, head: str, tail: str) -> GadgetProfile:
    """Count states with head true / tail true / both false.

    Raises :class:`NotAGadgetPairError` if some state sets both to 1 (the
    three counts would not partition the states)."""
    if head == tail:
        raise OhgError("head and tail of a gadget pair must differ")
    i = t.vertices.index(head)
    j = t.vertices.index(tail)
    if int(t.cooc[i, j]) > 0:
        raise NotAGadgetPairError(
            f"{head!r} and {tail!r} are jointly true in some state"
        )
    n_a = int(t.column_sums[i])
    n_b = int(t.column_sums[j])
    return GadgetProfile(head, tail, n_a, n_b, t.n_rows - n_a - n_b)
