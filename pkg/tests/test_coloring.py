import numpy as np
import pytest

from ohg import core, gadgets, states
from ohg.coloring import (
    Coloring,
    PartitionSystem,
    RowSelection,
    algorithm1,
    brooks_bound,
    color_to_state,
    coloring_from_partition,
    exact_chromatic,
    exact_coloring,
    partition_from_coloring,
    partition_from_rows,
    relaxed_coloring,
    verify_rows,
)
from ohg.errors import (
    DisconnectedError,
    NotAStateError,
    NotDominatingError,
    NotProperError,
    SizeLimitError,
)
from ohg.reconstruction import reconstruct

TRIANGLE_COLORING = {
    "a1": 1, "a4": 1, "a2": 2, "a5": 2, "a3": 3, "a6": 3,
}


def sum_oracle(t, rows_one_based):
    """Independent summation check: stack the rows and add columnwise."""
    stacked = np.array([t.row_bits(r - 1) for r in rows_one_based])
    return (stacked.sum(axis=0) == 1).all()


class TestPartitions:
    def test_triangle_cells(self, triangle):
        c = Coloring(triangle, dict(TRIANGLE_COLORING))
        p = partition_from_coloring(triangle, c)
        assert set(p.cells) == {
            frozenset({"a1", "a4"}),
            frozenset({"a2", "a5"}),
            frozenset({"a3", "a6"}),
        }

    def test_k3_singletons(self, k3):
        c = Coloring(k3, {"a": 1, "b": 2, "c": 3})
        p = partition_from_coloring(k3, c)
        assert set(p.cells) == {frozenset("a"), frozenset("b"), frozenset("c")}

    def test_bug_four_colors_not_dominating(self, bug):
        _, three = exact_coloring(bug)
        recolored = dict(three.color_of)
        recolored["v13"] = 4
        c = Coloring(bug, recolored)
        with pytest.raises(NotDominatingError):
            partition_from_coloring(bug, c)

    def test_improper_rejected(self, k3):
        with pytest.raises(NotProperError):
            Coloring(k3, {"a": 1, "b": 1, "c": 2})

    def test_improper_cells_rejected(self, triangle):
        with pytest.raises(NotProperError):
            PartitionSystem(triangle, (
                frozenset({"a1", "a2"}),
                frozenset({"a3", "a6"}),
                frozenset({"a4", "a5"}),
            ))

    def test_round_trip_canonical(self, triangle):
        c = Coloring(triangle, dict(TRIANGLE_COLORING))
        p = partition_from_coloring(triangle, c)
        back = coloring_from_partition(p)
        assert {back.color_class(i) for i in back.colors()} == set(p.cells)

    def test_round_trip_on_fixtures(self):
        for name in ("k3", "triangle", "pentagon", "bug", "underlying", "fig4"):
            h = gadgets.fixture(name).hypergraph
            chi, c = exact_coloring(h)
            assert chi == core.shape(h).clique_number
            p = partition_from_coloring(h, c)
            back = coloring_from_partition(p)
            assert {back.color_class(i) for i in back.colors()} == set(p.cells)

    def test_pentagon_rows_give_coloring(self, pentagon):
        ref = gadgets.fixture("pentagon").travis
        p = partition_from_rows(pentagon, ref, RowSelection((1, 8, 11)))
        c = coloring_from_partition(p)
        assert c.num_colors == 3


class TestAlgorithm1:
    def test_triangle(self):
        ref = gadgets.fixture("triangle").travis
        assert algorithm1(ref, 3) == RowSelection((1, 2, 3))

    def test_pentagon(self):
        ref = gadgets.fixture("pentagon").travis
        assert algorithm1(ref, 3) == RowSelection((1, 8, 11))

    def test_ghz(self):
        ref = gadgets.fixture("ghz").travis
        selection = algorithm1(ref, 4)
        assert selection == RowSelection((1, 4, 5, 8))
        assert verify_rows(ref, selection)

    def test_g32_absent(self):
        ref = gadgets.fixture("g32").travis
        assert algorithm1(ref, 3) is None

    def test_bug(self):
        ref = gadgets.fixture("bug").travis
        selection = algorithm1(ref, 3)
        assert selection is not None
        assert verify_rows(ref, selection)
        assert sum_oracle(ref, selection.rows)

    def test_deterministic(self):
        ref = gadgets.fixture("pentagon").travis
        assert algorithm1(ref, 3) == algorithm1(ref, 3)

    def test_exhaustive_absence(self, g32):
        # backtracking must agree with an exhaustive scan over row triples
        import itertools
        ref = gadgets.fixture("g32").travis
        assert not any(
            sum_oracle(ref, combo)
            for combo in itertools.combinations(range(1, ref.n_rows + 1), 3)
        )

    def test_empty_matrix(self):
        t = states.TravisMatrix(("a", "b"), ())
        assert algorithm1(t, 2) is None

    def test_deep_backtracking_success(self):
        # picking rows 1 then 2 dead-ends at the third level; the search must
        # restore the removed rows, drop the second pick, and find (1, 3, 4)
        t = states.TravisMatrix.from_bit_rows(
            ("a", "b", "c", "d", "e", "f"),
            [
                (1, 0, 0, 1, 0, 0),
                (0, 1, 0, 0, 1, 0),
                (0, 0, 1, 0, 1, 0),
                (0, 1, 0, 0, 0, 1),
            ],
        )
        selection = algorithm1(t, 3)
        assert selection == RowSelection((1, 3, 4))
        assert verify_rows(t, selection)

    def test_deep_backtracking_absence(self):
        # same shape minus the completing row: every branch dead-ends and the
        # exhausted search reports absence
        t = states.TravisMatrix.from_bit_rows(
            ("a", "b", "c", "d", "e", "f"),
            [
                (1, 0, 0, 1, 0, 0),
                (0, 1, 0, 0, 1, 0),
                (0, 0, 1, 0, 1, 0),
            ],
        )
        assert algorithm1(t, 3) is None
        import itertools
        assert not any(
            sum_oracle(t, combo)
            for r in (2, 3)
            for combo in itertools.combinations(range(1, 4), r)
        )


class TestVerifyRows:
    def test_triangle_cases(self):
        ref = gadgets.fixture("triangle").travis
        assert verify_rows(ref, RowSelection((1, 2, 3)))
        assert not verify_rows(ref, RowSelection((1, 2, 4)))
        assert sum_oracle(ref, (1, 2, 3))
        assert not sum_oracle(ref, (1, 2, 4))

    def test_k3(self, k3):
        t = states.enumerate_states(k3)
        assert verify_rows(t, RowSelection((1, 2, 3)))

    def test_out_of_range(self):
        ref = gadgets.fixture("triangle").travis
        with pytest.raises(Exception):
            verify_rows(ref, RowSelection((0, 1, 2)))


class TestColorToState:
    def test_triangle_color_one(self, triangle):
        c = Coloring(triangle, dict(TRIANGLE_COLORING))
        s = color_to_state(c, 1)
        assert s.true_set == frozenset({"a1", "a4"})
        ref = gadgets.fixture("triangle").travis
        assert s.true_set == ref.row_true_set(0)

    def test_k3(self, k3):
        c = Coloring(k3, {"a": 1, "b": 2, "c": 3})
        assert color_to_state(c, 2).bits() == (0, 1, 0)

    def test_g32_surplus_color(self, g32):
        t = states.enumerate_states(g32)
        four = relaxed_coloring(t, g32, 4)
        assert four is not None
        with pytest.raises(NotAStateError):
            color_to_state(four, 4)

    def test_selection_round_trip(self, pentagon):
        # a verified selection induces a coloring whose classes are exactly
        # the selected rows' true sets
        ref = gadgets.fixture("pentagon").travis
        selection = algorithm1(ref, 3)
        assert verify_rows(ref, selection)
        c = coloring_from_partition(partition_from_rows(pentagon, ref, selection))
        classes = {color_to_state(c, i).true_set for i in c.colors()}
        assert classes == {ref.row_true_set(r - 1) for r in selection.rows}


class TestChromatic:
    @pytest.mark.parametrize("name,chi", [
        ("k3", 3), ("triangle", 3), ("pentagon", 3), ("bug", 3),
        ("g32", 4), ("g32x", 4), ("underlying", 3), ("fig4", 3),
    ])
    def test_fixture_values(self, name, chi):
        assert exact_chromatic(gadgets.fixture(name).hypergraph) == chi

    def test_lower_bound_is_clique_number(self):
        for name in ("triangle", "pentagon", "bug", "g32", "underlying"):
            h = gadgets.fixture(name).hypergraph
            assert exact_chromatic(h) >= core.shape(h).clique_number

    def test_size_limit(self, bind_bug):
        with pytest.raises(SizeLimitError):
            exact_chromatic(bind_bug)

    def test_k4(self):
        assert exact_chromatic(core.build([("a", "b", "c", "d")])) == 4


class TestBrooks:
    def test_g32(self, g32):
        assert brooks_bound(g32) == 4

    def test_k4_complete(self):
        assert brooks_bound(core.build([("a", "b", "c", "d")])) == 4

    def test_triangle(self, triangle):
        assert brooks_bound(triangle) == 4

    def test_disconnected(self):
        h = core.build([("a", "b", "c"), ("d", "e", "f")])
        with pytest.raises(DisconnectedError):
            brooks_bound(h)

    def test_bound_dominates_chromatic(self):
        for name in ("k3", "triangle", "pentagon", "bug", "g32", "underlying",
                     "fig4"):
            h = gadgets.fixture(name).hypergraph
            assert brooks_bound(h) >= exact_chromatic(h)


class TestRelaxedColoring:
    def test_g32_four(self, g32):
        t = states.enumerate_states(g32)
        c = relaxed_coloring(t, g32, 4)
        assert c is not None and c.num_colors == 4

    def test_g32_three_absent(self, g32):
        t = states.enumerate_states(g32)
        assert relaxed_coloring(t, g32, 3) is None

    def test_triangle(self, triangle):
        # the walk is row-order sensitive; the printed table's order succeeds
        ref = gadgets.fixture("triangle").travis
        c = relaxed_coloring(ref, triangle, 3)
        assert c is not None and c.num_colors == 3

    def test_never_beats_the_oracle(self):
        for name in ("triangle", "pentagon", "bug", "g32", "underlying"):
            h = gadgets.fixture(name).hypergraph
            chi = exact_chromatic(h)
            t = states.enumerate_states(h)
            c = relaxed_coloring(t, h, chi)
            if c is not None:
                assert c.num_colors >= chi


class TestColorabilityEquivalence:
    """The row search succeeds at n exactly when the hypergraph is
    n-chromatic, across every fixture where both sides run."""

    @pytest.mark.parametrize("name,n", [
        ("k3", 3), ("triangle", 3), ("pentagon", 3), ("bug", 3),
        ("g32", 3), ("underlying", 3), ("fig4", 3),
    ])
    def test_equivalence(self, name, n):
        h = gadgets.fixture(name).hypergraph
        t = states.enumerate_states(h)
        found = algorithm1(t, n) is not None
        assert found == (exact_chromatic(h) == n)

    def test_ghz_equivalence(self):
        ref = gadgets.fixture("ghz").travis
        found = algorithm1(ref, 4) is not None
        ghz_h = reconstruct(ref, 4).filtered_hypergraph
        assert found == (exact_chromatic(ghz_h) == 4)

    def test_selection_always_verifies(self):
        for name in ("k3", "triangle", "pentagon", "bug", "underlying", "fig4"):
            h = gadgets.fixture(name).hypergraph
            t = states.enumerate_states(h)
            selection = algorithm1(t, core.shape(h).clique_number)
            assert selection is not None
            assert verify_rows(t, selection)
            assert sum_oracle(t, selection.rows)
