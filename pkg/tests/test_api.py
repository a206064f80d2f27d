"""Surface-level checks: thread sharing, state objects, README example."""

import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ohg import classify, enumerate_states, fixture, gadget_scan
from ohg.states import TwoValuedState


class TestThreadSharing:
    def test_shared_hypergraph_across_threads(self):
        # immutable inputs, pure operations: concurrent runs must agree
        h = fixture("bug").hypergraph

        def work(_):
            t = enumerate_states(h)
            c = classify(h, t)
            scan = gadget_scan(h, t)
            return (t.rows, c.separable, c.perfectly_separable,
                    tuple(sorted(scan.tifs_pairs)))

        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(work, range(8)))
        assert len(set(results)) == 1


class TestStateObjects:
    def test_state_accessors(self):
        bug = fixture("bug").hypergraph
        t = enumerate_states(bug)
        first = t.state(0)
        assert first.satisfies(bug)
        assert first.bits() == t.row_bits(0)
        assert sum(first.value(v) for v in bug.vertices) == len(first.true_set)
        assert len(list(t.states())) == t.n_rows

    def test_unsatisfying_state(self):
        bug = fixture("bug").hypergraph
        wrong = TwoValuedState(bug.vertices, frozenset({"v1", "v2"}))
        assert not wrong.satisfies(bug)


class TestReadmeExample:
    def test_library_block_runs(self):
        readme = Path(__file__).resolve().parent.parent / "README.md"
        blocks = re.findall(r"```python\n(.*?)```", readme.read_text(), re.S)
        assert blocks, "README lost its library example"
        for block in blocks:
            exec(compile(block, "README.md", "exec"), {})
