"""Command-line interface.

Verbs: enumerate, render, movegraph, distance, orient, cohomology,
intersect, bijection, selftest.  Exit codes: 0 success, 1 invalid
input, 2 tripped internal consistency check.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from . import diagrams, movegraph, orientation, ringcalc, springer, tableaux
from .errors import InternalCheckError
from .selftest import selftest

_USER_ERRORS = (
    diagrams.DiagramError,
    orientation.OrientationError,
    movegraph.NoFiniteDistanceError,
    ringcalc.NotOrientableError,
    springer.MalformedIndexSetError,
    springer.UnequalRowShapeError,
    tableaux.TableauError,
    ValueError,
    KeyError,
    OSError,
    json.JSONDecodeError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(ValueError):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="cupcalc", description=__doc__)
    parser.add_argument("--version", action="version", version=f"cupcalc {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="list diagrams in canonical order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parity", choices=["all", "even", "odd", "none"], default="all")
    p.add_argument("--cups", default="max", help="cup count, 'max' or 'any'")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("render", help="render one diagram")
    p.add_argument("--diagram", required=True, help="diagram DSL text")
    p.add_argument("--format", choices=["ascii", "tikz", "json"], default="ascii")

    p = sub.add_parser("movegraph", help="arrow graph on the maximal diagrams")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parity", choices=["even", "odd"], required=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("distance", help="arrow distance between two diagrams")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("orient", help="orientations of a cup (or glued) diagram")
    p.add_argument("--cup", required=True)
    p.add_argument("--cap", help="cap half, as the cup diagram it mirrors")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("cohomology", help="exact graded dimensions")
    p.add_argument("which", choices=["centre", "springer"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", help="deformation parameter (rational)")
    p.add_argument("--basis", action="store_true", help="include echelon bases")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("intersect", help="fixed-point table of one parity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parity", choices=["even", "odd"], required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("bijection", help="convert between labelling sets")
    p.add_argument("--from", dest="src", required=True, choices=["adt", "dt", "cup", "bitab", "stable"])
    p.add_argument("--to", dest="dst", required=True, choices=["adt", "dt", "cup", "bitab", "stable"])
    p.add_argument("--input", required=True, help="JSON input file ('-' for stdin)")
    p.add_argument(
        "--parity",
        choices=["all", "even", "odd"],
        default="all",
        help="dot parity, needed to invert a bitableau with rays",
    )

    p = sub.add_parser("selftest", help="run the cross-module identity suites")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_enumerate(args) -> int:
    cups = args.cups if args.cups in ("max", "any") else int(args.cups)
    dots = {"all": "all", "even": "even", "odd": "odd", "none": "none"}[args.parity]
    out = diagrams.enumerate_diagrams(args.k, cups, dots)
    if args.format == "json":
        _emit(json.dumps([d.encode() for d in out.members], indent=2))
    else:
        for d in out.members:
            _emit(d.encode())
    return 0


def _cmd_render(args) -> int:
    d = diagrams.parse_dsl(args.diagram)
    _emit(diagrams.render(d, args.format))
    return 0


def _cmd_movegraph(args) -> int:
    graph = movegraph.move_graph(args.k, args.parity)
    if args.dot:
        _emit(graph.to_dot())
        return 0
    arrows = [
        {
            "from": graph.nodes[i].encode(),
            "to": graph.nodes[j].encode(),
            "move": move.kind,
            "positions": list(move.positions),
        }
        for i, j, move in graph.arrows
    ]
    payload = {
        "k": args.k,
        "parity": args.parity,
        "nodes": [n.encode() for n in graph.nodes],
        "arrows": arrows,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    else:
        for n in payload["nodes"]:
            _emit(n)
        for a in arrows:
            _emit(f"{a['from']}  --{a['move']}-->  {a['to']}")
    return 0


def _cmd_distance(args) -> int:
    a = diagrams.parse_dsl(args.a)
    b = diagrams.parse_dsl(args.b)
    d = movegraph.distance(a, b)
    if args.format == "json":
        _emit(json.dumps({"distance": None if d == math.inf else d}))
    else:
        _emit("infinity" if d == math.inf else str(d))
    return 0


def _cmd_orient(args) -> int:
    cup = diagrams.parse_dsl(args.cup)
    if args.cap is None:
        rows = [
            {"weight": str(w), "degree": orientation.half_degree(w, cup)}
            for w in orientation.orientations_of_cup(cup)
        ]
    else:
        cap = diagrams.parse_dsl(args.cap).star()
        rows = [
            {"weight": str(o.weight), "degree": o.degree}
            for o in orientation.orient_circle_diagram(cap, cup)
        ]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2))
    else:
        for row in rows:
            _emit(f"{row['weight']}  degree {row['degree']}")
    return 0


def _mono_text(mono) -> str:
    return "1" if not mono else "*".join(f"x{i}" for i in mono)


def _cmd_cohomology(args) -> int:
    if args.which == "centre":
        halves = {}
        for parity in ("even", "odd"):
            basis = ringcalc.centre(args.k, parity)
            entry = {
                "graded": [
                    {"degree": 2 * d, "dim": n}
                    for d, n in sorted(basis.graded_dims.items())
                ],
                "dimension": basis.dimension,
            }
            if args.basis:
                entry["basis"] = {
                    str(2 * d): [
                        [
                            [enc, _mono_text(mono), str(coeff)]
                            for (enc, mono), coeff in sorted(vec.items())
                        ]
                        for vec in vecs
                    ]
                    for d, vecs in basis.basis.items()
                }
            halves[parity] = entry
        payload = {
            "k": args.k,
            "even": halves["even"],
            "odd": halves["odd"],
            "total_dimension": halves["even"]["dimension"] + halves["odd"]["dimension"],
        }
        if args.format == "json":
            _emit(json.dumps(payload, indent=2))
        else:
            for parity in ("even", "odd"):
                graded = ", ".join(
                    f"q^{g['degree']}: {g['dim']}" for g in halves[parity]["graded"]
                )
                _emit(f"{parity}: dimension {halves[parity]['dimension']} ({graded})")
            _emit(f"total dimension {payload['total_dimension']}")
        return 0

    if args.t is not None:
        dim = springer.equivariant_specialization(args.k, Fraction(args.t))
        payload = {"k": args.k, "t": args.t, "dimension": dim}
        if args.format == "json":
            _emit(json.dumps(payload))
        else:
            _emit(f"dimension {dim} at t = {args.t}")
        return 0
    ring = springer.presentation_ring(args.k)
    payload = {
        "k": args.k,
        "dimension": ring.dimension,
        "graded": [
            {"degree": 2 * d, "dim": n}
            for d, n in enumerate(ring.graded_dims)
            if n
        ],
        "basis": [sorted(m) for m in ring.basis],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    else:
        graded = ", ".join(f"q^{g['degree']}: {g['dim']}" for g in payload["graded"])
        _emit(f"dimension {ring.dimension} ({graded})")
        _emit("basis: " + ", ".join(_mono_text(m) for m in payload["basis"]))
    return 0


def _table_entry(task):
    a_enc, b_enc = task
    a = diagrams.parse_dsl(a_enc)
    b = diagrams.parse_dsl(b_enc)
    return [str(o.weight) for o in orientation.orient_circle_diagram(a.star(), b)]


def _cmd_intersect(args) -> int:
    if args.jobs > 1:
        nodes = diagrams.maximal_diagrams(args.k, args.parity)
        tasks = [(a.encode(), b.encode()) for a in nodes for b in nodes]
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            cells = list(pool.map(_table_entry, tasks))
        n = len(nodes)
        payload = {
            "k": args.k,
            "parity": args.parity,
            "diagrams": [d.encode() for d in nodes],
            "table": [cells[i * n : (i + 1) * n] for i in range(n)],
        }
    else:
        payload = springer.fixed_point_table(args.k, args.parity).to_json_dict()
    if args.format == "json":
        _emit(json.dumps(payload, indent=2))
    else:
        for enc, row in zip(payload["diagrams"], payload["table"]):
            cells = ["{" + ",".join(cell) + "}" for cell in row]
            _emit(f"{enc}:  " + "  ".join(cells))
    return 0


def _load_as_cup(src: str, data, parity: str = "all"):
    if src == "cup":
        if isinstance(data, str):
            return diagrams.parse_dsl(data)
        return diagrams.from_json(data)
    if src == "adt":
        return tableaux.to_cup(tableaux.tableau_from_json_dict(data, signed=True))
    if src == "dt":
        S = tableaux.tableau_from_json_dict(data, signed=False)
        return tableaux.to_cup(tableaux.cyc_inverse(S))
    if src == "bitab":
        bt = tableaux.bitableau_from_json(data)
        return tableaux.cup_of_bitableau(bt, len(bt.marked) + len(bt.unmarked), parity)
    if src == "stable":
        return tableaux.stable_to_cup(tableaux.stable_from_json(data))
    raise _UsageError(f"unknown source {src!r}")


def _dump_from_cup(dst: str, cup):
    if dst == "cup":
        return cup.to_json_dict()
    if dst == "adt":
        return tableaux.tableau_to_json_dict(tableaux.from_cup(cup))
    if dst == "dt":
        return tableaux.tableau_to_json_dict(tableaux.cyc(tableaux.from_cup(cup)))
    if dst == "bitab":
        return tableaux.bitableau_to_json(tableaux.bitableau_of_cup(cup))
    if dst == "stable":
        return tableaux.stable_to_json(tableaux.cup_to_stable(cup))
    raise _UsageError(f"unknown target {dst!r}")


def _cmd_bijection(args) -> int:
    raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
    data = json.loads(raw)
    cup = _load_as_cup(args.src, data, args.parity)
    _emit(json.dumps(_dump_from_cup(args.dst, cup), indent=2))
    return 0


def _cmd_selftest(args) -> int:
    report = selftest(args.k_max, args.seed)
    if args.format == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2))
    else:
        for s in report.suites:
            _emit(f"{'ok  ' if s.ok else 'FAIL'} {s.name}: {s.detail}")
        _emit(f"{'ok' if report.ok else 'FAIL'} ({len(report.suites)} suites, k_max={report.k_max})")
    return 0 if report.ok else 2


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "render": _cmd_render,
    "movegraph": _cmd_movegraph,
    "distance": _cmd_distance,
    "orient": _cmd_orient,
    "cohomology": _cmd_cohomology,
    "intersect": _cmd_intersect,
    "bijection": _cmd_bijection,
    "selftest": _cmd_selftest,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"cupcalc: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --version / --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except InternalCheckError as exc:
        print(f"cupcalc: internal check failed: {exc}", file=sys.stderr)
        return 2
    except _USER_ERRORS as exc:
        print(f"cupcalc: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
