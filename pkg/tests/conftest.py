"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's enumeration engine: brute
force over all 2^k assignments, quadratic pair scans, and quadruple scans, so
engine results are checked against something that cannot share its bugs.
"""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from ohg import core, gadgets, states


@pytest.fixture(scope="session")
def k3():
    return gadgets.fixture("k3").hypergraph


@pytest.fixture(scope="session")
def triangle():
    return gadgets.fixture("triangle").hypergraph


@pytest.fixture(scope="session")
def pentagon():
    return gadgets.fixture("pentagon").hypergraph


@pytest.fixture(scope="session")
def bug():
    return gadgets.fixture("bug").hypergraph


@pytest.fixture(scope="session")
def g32():
    return gadgets.fixture("g32").hypergraph


@pytest.fixture(scope="session")
def g32x():
    return gadgets.fixture("g32x").hypergraph


@pytest.fixture(scope="session")
def underlying():
    return gadgets.fixture("underlying").hypergraph


@pytest.fixture(scope="session")
def fig4():
    return gadgets.fixture("fig4").hypergraph


@pytest.fixture(scope="session")
def bind_bug():
    spec = gadgets.BindSpec(gadgets.fixture("bug").hypergraph, "v1", "v7")
    return gadgets.bind(spec)


@pytest.fixture(scope="session")
def bind_bug_matrix(bind_bug):
    return states.enumerate_states(bind_bug)


def brute_force_true_sets(h: core.Hypergraph) -> set[frozenset[str]]:
    """All two-valued states by filtering every one of the 2^k assignments."""
    k = len(h.vertices)
    assert k <= 22, "brute force oracle capped at 22 vertices"
    assignments = np.arange(1 << k, dtype=np.uint32)
    keep = np.ones(1 << k, dtype=bool)
    for mask in h.context_masks:
        x = assignments & np.uint32(mask)
        keep &= (x != 0) & ((x & (x - 1)) == 0)  # exactly one bit set
    out = set()
    for value in assignments[keep]:
        v = int(value)
        out.add(frozenset(h.vertices[i] for i in range(k) if v >> i & 1))
    return out


def engine_true_sets(t: states.TravisMatrix) -> set[frozenset[str]]:
    return {t.row_true_set(r) for r in range(t.n_rows)}


def brute_force_two_section_edges(h: core.Hypergraph) -> set[frozenset[str]]:
    edges = set()
    for ctx in h.contexts:
        for u, v in itertools.combinations(sorted(ctx), 2):
            edges.add(frozenset((u, v)))
    return edges


def brute_force_four_cycles(h: core.Hypergraph) -> bool:
    """Whether any four distinct contexts close an intertwine cycle with four
    distinct intertwining vertices."""
    m = len(h.contexts)
    for a, b, c, d in itertools.permutations(range(m), 4):
        for vab in h.contexts[a] & h.contexts[b]:
            for vbc in h.contexts[b] & h.contexts[c]:
                for vcd in h.contexts[c] & h.contexts[d]:
                    for vda in h.contexts[d] & h.contexts[a]:
                        if len({vab, vbc, vcd, vda}) == 4:
                            return True
    return False


def random_pasting(rng: random.Random, max_contexts: int = 6,
                   max_vertices: int = 22) -> core.Hypergraph:
    """A random connected pasting of 3-element contexts, any two contexts
    sharing at most one vertex (the Greechie drawing convention)."""
    fresh = itertools.count()

    def new_vertex() -> str:
        return f"t{next(fresh)}"

    contexts: list[tuple[str, ...]] = [tuple(new_vertex() for _ in range(3))]
    vertices = set(contexts[0])
    adjacent: dict[str, set[str]] = {v: set(contexts[0]) - {v} for v in contexts[0]}
    target = rng.randint(2, max_contexts)
    while len(contexts) < target and len(vertices) + 2 <= max_vertices:
        n_shared = rng.choice((1, 1, 1, 2))
        pool = sorted(vertices)
        shared: list[str] = []
        rng.shuffle(pool)
        for v in pool:
            if all(v not in adjacent[u] and v != u for u in shared):
                shared.append(v)
            if len(shared) == n_shared:
                break
        new = list(shared) + [new_vertex() for _ in range(3 - len(shared))]
        ctx = tuple(new)
        contexts.append(ctx)
        for v in ctx:
            vertices.add(v)
            adjacent.setdefault(v, set()).update(set(ctx) - {v})
    return core.build(contexts)


def assert_states_lawful(h: core.Hypergraph, t: states.TravisMatrix) -> None:
    """Every row must put exactly one 1 on every context (engine-independent
    check, straight from the definition)."""
    for r in range(t.n_rows):
        true_set = t.row_true_set(r)
        for ctx in h.contexts:
            assert len(ctx & true_set) == 1
