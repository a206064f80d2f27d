"""Text formats: hypergraph files, state-table files, vector labelings.

A hypergraph file has one context per line, vertex names separated by
whitespace; ``#`` starts a comment. A matrix file opens with a
``vertices:`` header naming the columns, followed by one row of
space-separated 0/1 digits per state. A vector file has one line per
vertex: ``name: c1 c2 ... cn``.

Writers emit a canonical form (context members in vertex declaration order),
so canonical files round-trip byte-identically modulo comments.
"""

from __future__ import annotations

from .core import Hypergraph, build
from .errors import ParseError
from .geometry import VectorLabeling
from .states import TravisMatrix


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_ohg(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("hypergraph file contains no contexts")
    return build([tuple(line.split()) for line in lines])


def write_ohg(h: Hypergraph) -> str:
    idx = h.index
    out = []
    for ctx in h.contexts:
        out.append(" ".join(sorted(ctx, key=idx.__getitem__)))
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> TravisMatrix:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("vertices:"):
        raise ParseError('matrix file must start with a "vertices:" header')
    vertices = tuple(lines[0][len("vertices:"):].split())
    if not vertices:
        raise ParseError("matrix header names no vertices")
    rows = []
    for line in lines[1:]:
        digits = line.split()
        try:
            bits = [int(d) for d in digits]
        except ValueError:
            raise ParseError(f"matrix row is not 0/1 digits: {line!r}") from None
        rows.append(bits)
    try:
        return TravisMatrix.from_bit_rows(vertices, rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_matrix(t: TravisMatrix) -> str:
    out = ["vertices: " + " ".join(t.vertices)]
    for r in range(t.n_rows):
        out.append(" ".join(str(b) for b in t.row_bits(r)))
    return "\n".join(out) + "\n"


def parse_vectors(text: str) -> VectorLabeling:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("vector file is empty")
    vectors: dict[str, tuple[float, ...]] = {}
    dim = None
    for line in lines:
        if ":" not in line:
            raise ParseError(f'vector line needs "name: components": {line!r}')
        name, _, rest = line.partition(":")
        name = name.strip()
        try:
            comps = tuple(float(x) for x in rest.split())
        except ValueError:
            raise ParseError(f"vector components must be reals: {line!r}") from None
        if not name or not comps:
            raise ParseError(f"vector line needs a name and components: {line!r}")
        if dim is None:
            dim = len(comps)
        if name in vectors:
            raise ParseError(f"vertex {name!r} labeled twice")
        vectors[name] = comps
    return VectorLabeling(dim, vectors)


def write_vectors(labeling: VectorLabeling) -> str:
    out = []
    for name in sorted(labeling.vectors):
        comps = " ".join(repr(c) for c in labeling.vectors[name])
        out.append(f"{name}: {comps}")
    return "\n".join(out) + "\n"
