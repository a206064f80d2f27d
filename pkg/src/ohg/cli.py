"""Command-line front end.

Reports go to stdout, diagnostics and progress to stderr. Exit codes:
0 success, 1 negative verdict (no coloring, not reconstructable, labeling
rejected), 2 usage or input error. ``--format json`` makes every report
machine readable with the stable keys
{vertices, contexts, nTS, verdicts, rows, extraContexts} where applicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import coloring as coloring_mod
from . import core, gadgets, geometry, states
from .errors import OhgError, SizeLimitError
from .formats import parse_ohg, parse_vectors, write_matrix, write_ohg
from .reconstruction import evaluate as reconstruction_evaluate

_DOT_PALETTE = (
    "red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta",
    "olive", "teal", "gold", "gray", "pink", "navy", "limegreen", "salmon",
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise OhgError(f"cannot read {path}: {exc}") from None


def _load_hypergraph(path: str) -> core.Hypergraph:
    return parse_ohg(_read(path))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _rows_as_strings(t: states.TravisMatrix) -> list[str]:
    return ["".join(str(b) for b in t.row_bits(r)) for r in range(t.n_rows)]


def _dot_structure(h: core.Hypergraph, fills: Optional[dict[str, int]] = None) -> str:
    lines = ["graph hypergraph {", "  node [shape=circle];"]
    for v in h.vertices:
        if fills and v in fills:
            color = _DOT_PALETTE[(fills[v] - 1) % len(_DOT_PALETTE)]
            lines.append(f'  "{v}" [style=filled, fillcolor="{color}"];')
        else:
            lines.append(f'  "{v}";')
    idx = h.index
    for ci, ctx in enumerate(h.contexts):
        color = _DOT_PALETTE[ci % len(_DOT_PALETTE)]
        members = sorted(ctx, key=idx.__getitem__)
        for u, v in zip(members, members[1:]):
            lines.append(f'  "{u}" -- "{v}" [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands ----------------------------------------------------------------


def _cmd_states(args) -> int:
    h = _load_hypergraph(args.file)
    if args.count_only:
        progress = None
        if args.progress:
            def progress(total: int) -> None:
                print(f"states so far: {total}", file=sys.stderr)
        n = states.count_states(h, jobs=args.jobs, progress=progress)
        if args.format == "json":
            _emit_json({"vertices": list(h.vertices), "nTS": n})
        else:
            print(n)
        return 0
    t = states.enumerate_states(h, row_limit=args.limit)
    if args.out:
        Path(args.out).write_text(write_matrix(t))
        print(t.n_rows)
    elif args.format == "json":
        _emit_json({
            "vertices": list(h.vertices),
            "nTS": t.n_rows,
            "rows": _rows_as_strings(t),
        })
    else:
        sys.stdout.write(write_matrix(t))
    return 0


def _cmd_classify(args) -> int:
    h = _load_hypergraph(args.file)
    t = states.enumerate_states(h)
    c = states.classify(h, t)
    rep = core.shape(h)
    semi: Optional[bool]
    try:
        semi = coloring_mod.exact_chromatic(h) == rep.clique_number
    except SizeLimitError:
        semi = None
    if args.format == "json":
        _emit_json({
            "vertices": list(h.vertices),
            "nTS": c.nts,
            "verdicts": {
                "unital": c.unital,
                "separable": c.separable,
                "perfectlySeparable": c.perfectly_separable,
                "semiPerfect": semi,
            },
            "witness": list(c.fail_witness) if c.fail_witness else None,
        })
        return 0
    print(f"nTS: {c.nts}")
    print(f"unital: {'yes' if c.unital else 'no'}")
    print(f"separable: {'yes' if c.separable else 'no'}")
    print(f"perfectly-separable: {'yes' if c.perfectly_separable else 'no'}")
    if c.fail_witness:
        u, v, item = c.fail_witness
        print(f"witness: pair ({u}, {v}) misses condition {item}")
    if semi is None:
        print("semi-perfect: unknown (size limit)")
    else:
        print(f"semi-perfect: {'yes' if semi else 'no'}")
    return 0


def _cmd_reconstruct(args) -> int:
    h = _load_hypergraph(args.file)
    v, rec = reconstruction_evaluate(h, n=args.n)
    kind = v.kind.replace("_", "-")
    extra = [sorted(c) for c in (rec.extra_contexts if rec else ())]
    missing = [sorted(c) for c in (rec.missing_contexts if rec else ())]
    if args.format == "json":
        _emit_json({
            "vertices": list(h.vertices),
            "verdicts": {"reconstruction": kind},
            "extraContexts": extra,
            "missingContexts": missing,
            "witness": list(v.witness) if v.witness else None,
        })
    else:
        print(f"verdict: {kind}")
        for ctx in extra:
            print("extra context: " + " ".join(ctx))
        for ctx in missing:
            print("missing context: " + " ".join(ctx))
        if v.witness:
            print(f"witness: columns {v.witness[0]} and {v.witness[1]} coincide")
    return 0 if v.reconstructable else 1


def _cmd_color(args) -> int:
    h = _load_hypergraph(args.file)
    n = args.n
    rows_out: Optional[list[int]] = None
    col: Optional[coloring_mod.Coloring] = None
    if args.algorithm == "paper":
        t = states.enumerate_states(h)
        selection = coloring_mod.algorithm1(t, n)
        if selection is not None:
            rows_out = list(selection.rows)
            col = coloring_mod.coloring_from_partition(
                coloring_mod.partition_from_rows(h, t, selection)
            )
    elif args.algorithm == "relaxed":
        t = states.enumerate_states(h)
        col = coloring_mod.relaxed_coloring(t, h, n)
    else:
        chi, best = coloring_mod.exact_coloring(h)
        if chi <= n:
            col = best
    if col is None:
        print(f"no {n}-coloring from two-valued states")
        return 1
    if args.format == "json":
        payload = {
            "vertices": list(h.vertices),
            "coloring": {v: col.color_of[v] for v in h.vertices},
        }
        if rows_out is not None:
            payload["rows"] = rows_out
        _emit_json(payload)
    elif args.format == "dot":
        sys.stdout.write(_dot_structure(h, fills=col.color_of))
    else:
        if rows_out is not None:
            print("rows: " + " ".join(str(r) for r in rows_out))
        for c in col.colors():
            members = sorted(col.color_class(c), key=h.index.__getitem__)
            print(f"color {c}: " + " ".join(members))
    return 0


def _cmd_chroma(args) -> int:
    h = _load_hypergraph(args.file)
    if args.brooks:
        value = coloring_mod.brooks_bound(h)
        key = "brooksBound"
    else:
        value = coloring_mod.exact_chromatic(h)
        key = "chromatic"
    if args.format == "json":
        _emit_json({"vertices": list(h.vertices), key: value})
    else:
        print(value)
    return 0


def _cmd_gadget(args) -> int:
    fx = gadgets.fixture(args.name)
    if args.travis:
        if fx.travis is None:
            raise OhgError(f"fixture {args.name!r} has no reference state table")
        sys.stdout.write(write_matrix(fx.travis))
        return 0
    if fx.hypergraph is None:
        raise OhgError(
            f"fixture {args.name!r} ships as a state table only; use --travis"
        )
    sys.stdout.write(write_ohg(fx.hypergraph))
    return 0


def _cmd_compose(args) -> int:
    gadget = _load_hypergraph(args.file)
    spec = gadgets.BindSpec(gadget, args.head, args.tail)
    composed = gadgets.layer(spec) if args.kind == "layer" else gadgets.bind(spec)
    if args.format == "json":
        _emit_json({
            "vertices": list(composed.vertices),
            "contexts": [sorted(c, key=composed.index.__getitem__)
                         for c in composed.contexts],
        })
        return 0
    sys.stdout.write(write_ohg(composed))
    print(
        f"{args.kind}: {len(composed.vertices)} vertices, "
        f"{len(composed.contexts)} contexts",
        file=sys.stderr,
    )
    return 0


def _cmd_count(args) -> int:
    value = gadgets.predicted_bind_count(args.na, args.nb, args.nn)
    if args.format == "json":
        _emit_json({"count": value})
    else:
        print(value)
    return 0


def _cmd_verify_for(args) -> int:
    h = _load_hypergraph(args.file)
    labeling = parse_vectors(_read(args.vectors))
    report = geometry.verify_for(h, labeling, tol=args.tol)
    if args.format == "json":
        _emit_json({
            "vertices": list(h.vertices),
            "verdicts": {"faithfulRepresentation": report.ok},
            "violations": {
                "nonOrthogonalAdjacent": [list(x) for x in report.non_orthogonal_adjacent],
                "orthogonalNonAdjacent": [list(x) for x in report.orthogonal_non_adjacent],
                "colinear": [list(x) for x in report.colinear],
            },
        })
        return 0 if report.ok else 1
    if report.ok:
        print("valid faithful orthogonal representation")
        return 0
    for u, v, cos in report.non_orthogonal_adjacent:
        print(f"adjacent but not orthogonal: {u} {v} |cos|={cos:.3e}")
    for u, v, cos in report.orthogonal_non_adjacent:
        print(f"orthogonal but not adjacent: {u} {v} |cos|={cos:.3e}")
    for u, v, cos in report.colinear:
        print(f"colinear: {u} {v} |cos|={cos:.3e}")
    return 1


def _cmd_export(args) -> int:
    h = _load_hypergraph(args.file)
    if args.format == "json":
        _emit_json({
            "vertices": list(h.vertices),
            "contexts": [sorted(c, key=h.index.__getitem__) for c in h.contexts],
        })
    else:
        sys.stdout.write(_dot_structure(h))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohg",
        description="Analyze orthogonality hypergraphs via their two-valued states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("states", help="enumerate or count all two-valued states")
    p.add_argument("file")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", metavar="MATRIXFILE")
    p.add_argument("--limit", type=int, default=None, help="abort past this many rows")
    p.add_argument("--jobs", type=int, default=states.default_jobs())
    p.add_argument("--progress", action="store_true",
                   help="stream running counts to stderr")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_states)

    p = sub.add_parser("classify", help="unital/separable/perfectly-separable verdicts")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("reconstruct", help="rebuild the hypergraph from its states")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None, help="clique number override")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("color", help="search for a proper coloring")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algorithm", choices=("paper", "relaxed", "exact"),
                   default="paper")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("chroma", help="chromatic number or Brooks bound")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--brooks", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_chroma)

    p = sub.add_parser("gadget", help="emit a catalogued fixture")
    p.add_argument("name", choices=gadgets.FIXTURE_NAMES)
    p.add_argument("--travis", action="store_true",
                   help="emit the reference state table instead")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("compose", help="layer or bind a gadget")
    p.add_argument("kind", choices=("layer", "bind"))
    p.add_argument("file")
    p.add_argument("--head", required=True)
    p.add_argument("--tail", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("count", help="predicted state count of a binding")
    p.add_argument("--na", type=int, required=True)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--nn", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify-for", help="check a vector labeling")
    p.add_argument("file")
    p.add_argument("vectors")
    p.add_argument("--tol", type=float, default=geometry.DEFAULT_TOLERANCE)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify_for)

    p = sub.add_parser("export", help="emit the hypergraph as JSON or DOT")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "dot"), required=True)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OhgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
