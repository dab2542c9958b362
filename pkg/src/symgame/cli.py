"""Command-line front end: classify, map, fractions, census, ordergraph, decompose.

Matrix arguments accept the text form "a,b;c,d" (row-major) or the JSON form
{"payoff": [[a, b], [c, d]]}.  JSON and CSV outputs render every rational as
a "p/q" string with a decimal duplicate; JSON documents carry a "schema" tag
matching the schema files shipped under ``symgame/schemas``.

Exit codes: 0 for success (degenerate inputs are reported, not errors),
1 for a failed self-test, 2 for parse or usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Optional

from .cartography import (
    BoundaryGame,
    decompose,
    map_point,
    mc_region_fractions,
    reconstruct,
    region_of,
    trajectory,
)
from .equilibria import (
    expected_payoff,
    mixed_nash,
    mixed_po,
    pure_nash_set,
    relaxed_po_set,
)
from .ordergraph import build_order_graph, to_dot
from .payoff import (
    PayoffMatrix,
    TrivialGame,
    g_transform,
    matrices_from_lines,
    matrix_from_json,
    normalize_cube,
    parse_matrix,
)
from .svgmap import render_map
from .taxonomy import CLASS_TABLE, census, classify, region_class_index


def _rat(value) -> str:
    return str(Fraction(value))


def _matrix_doc(P: PayoffMatrix) -> dict:
    return {
        "rational": [[_rat(x) for x in row] for row in P.rows()],
        "decimal": [[float(x) for x in row] for row in P.rows()],
    }


def _mixed_doc(P: PayoffMatrix, p) -> Optional[dict]:
    if p is None:
        return None
    value = expected_payoff(P, p, p)[0]
    return {
        "p": _rat(p),
        "p_decimal": float(p),
        "value": _rat(value),
        "value_decimal": float(value),
    }


def _positions_doc(positions) -> list:
    return [list(pos) for pos in sorted(positions)]


def _decomposition_doc(P: PayoffMatrix) -> dict:
    dec = decompose(P)
    return {
        "region": {"id": dec.region.id, "ordering": dec.region.ordering_text},
        "offset": _rat(dec.trivial_offset),
        "offset_decimal": float(dec.trivial_offset),
        "scale": _rat(dec.scale),
        "scale_decimal": float(dec.scale),
        "weights": [_rat(w) for w in dec.weights],
        "weights_decimal": [float(w) for w in dec.weights],
        "vertices": [
            {
                "direction": [int(x) for x in v.direction],
                "matrix": _matrix_doc(v.matrix),
            }
            for v in dec.vertices
        ],
        "reconstruction_exact": reconstruct(dec) == P,
    }


def build_report(P: PayoffMatrix) -> dict:
    """The report.v1 document for a game; total over degenerate inputs."""
    G = g_transform(P)
    report = {
        "schema": "report.v1",
        "degenerate": None,
        "matrix": _matrix_doc(P),
        "g_vector": {
            "rational": {k: _rat(getattr(G, k)) for k in ("g0", "ga", "gb", "gab")},
            "decimal": {k: float(getattr(G, k)) for k in ("g0", "ga", "gb", "gab")},
        },
        "boundary": None,
        "region": None,
        "game_class": None,
        "nash_equilibria": _positions_doc(pure_nash_set(P)),
        "pareto_optima": _positions_doc(relaxed_po_set(P)),
        "mixed_nash": _mixed_doc(P, mixed_nash(P)),
        "mixed_pareto": _mixed_doc(P, mixed_po(P)),
        "comparison": None,
        "cube_point": None,
        "map_point": None,
        "decomposition": None,
    }
    if P.is_constant():
        report["degenerate"] = "trivial"
        return report
    cp = normalize_cube(P)
    report["cube_point"] = {
        "rational": {k: _rat(getattr(cp, k)) for k in ("ga", "gb", "gab")},
        "decimal": {k: float(getattr(cp, k)) for k in ("ga", "gb", "gab")},
    }
    mp = map_point(P)
    report["map_point"] = {
        "u": _rat(mp.u),
        "v": _rat(mp.v),
        "u_decimal": float(mp.u),
        "v_decimal": float(mp.v),
        "face": mp.face_tag,
    }
    report["decomposition"] = _decomposition_doc(P)
    try:
        cls = classify(P)
    except BoundaryGame as exc:
        report["degenerate"] = "boundary"
        report["boundary"] = {
            "tied_pairs": [list(pair) for pair in exc.tied_pairs],
            "adjacent_region_ids": list(exc.adjacent_region_ids),
        }
        return report
    report["region"] = {"id": cls.region.id, "ordering": cls.region.ordering_text}
    row = cls.game_class
    report["game_class"] = {
        "index": region_class_index(cls.region.id),
        "display_name": row.display_name,
        "category": row.category.value,
        "po_status": row.po_status.value,
        "payoff_comparison": row.payoff_comparison.value,
        "fraction": _rat(row.fraction),
        "fraction_decimal": float(row.fraction),
    }
    if cls.comparison_values is not None:
        ne_value, po_value = cls.comparison_values
        report["comparison"] = {
            "ne_value": _rat(ne_value),
            "ne_value_decimal": float(ne_value),
            "po_value": _rat(po_value),
            "po_value_decimal": float(po_value),
        }
    return report


def _format_positions(entries) -> str:
    return " ".join(f"({i},{j})" for i, j in entries)


def _print_report_text(P: PayoffMatrix, report: dict, out) -> None:
    g = report["g_vector"]["rational"]
    print(f"matrix: {P}", file=out)
    print("g-vector: " + " ".join(f"{k}={g[k]}" for k in ("g0", "ga", "gb", "gab")), file=out)
    if report["degenerate"] == "trivial":
        print("degenerate: trivial (constant matrix; no region, map point, or decomposition)", file=out)
    elif report["degenerate"] == "boundary":
        b = report["boundary"]
        ties = ", ".join("=".join(pair) for pair in b["tied_pairs"])
        print(f"degenerate: boundary (tied entries {ties})", file=out)
        print("adjacent regions: " + " ".join(str(i) for i in b["adjacent_region_ids"]), file=out)
    else:
        print(f"region: {report['region']['id']} ({report['region']['ordering']})", file=out)
        gc = report["game_class"]
        print(
            f"class: {gc['display_name']} [{gc['category']} / {gc['po_status']} / "
            f"{gc['payoff_comparison']}], fraction {gc['fraction']}",
            file=out,
        )
    print(f"nash equilibria: {_format_positions(report['nash_equilibria'])}", file=out)
    print(f"relaxed pareto optima: {_format_positions(report['pareto_optima'])}", file=out)
    for key, label in (("mixed_nash", "mixed nash"), ("mixed_pareto", "mixed pareto")):
        m = report[key]
        if m is None:
            print(f"{label}: none", file=out)
        else:
            print(f"{label}: p={m['p']} value={m['value']}", file=out)
    if report["comparison"] is not None:
        comp = report["comparison"]
        print(f"comparison: NE payoff {comp['ne_value']} vs PO payoff {comp['po_value']}", file=out)
    mp = report["map_point"]
    if mp is not None:
        print(f"map point: u={mp['u']} v={mp['v']} (face {mp['face']})", file=out)
    dec = report["decomposition"]
    if dec is not None:
        vertices = ", ".join(
            "[[{0},{1}],[{2},{3}]]".format(*(v["matrix"]["rational"][0] + v["matrix"]["rational"][1]))
            for v in dec["vertices"]
        )
        print(
            f"decomposition: offset {dec['offset']}, scale {dec['scale']}, "
            f"weights {', '.join(dec['weights'])} over {vertices}",
            file=out,
        )
        print(f"reconstruction exact: {dec['reconstruction_exact']}", file=out)


def _matrix_arg(text: str) -> PayoffMatrix:
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped, parse_float=Fraction)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad JSON matrix: {exc}") from exc
        return matrix_from_json(obj)
    return parse_matrix(stripped)


def _parse_trajectory_spec(text: str):
    parts = text.split(";")
    if len(parts) != 5:
        raise ValueError(
            "trajectory spec must be 'a,b;c,d;e,f;g,h;n' "
            f"(start matrix, end matrix, sample count), got {text!r}"
        )
    start = parse_matrix(";".join(parts[0:2]))
    end = parse_matrix(";".join(parts[2:4]))
    try:
        n = int(parts[4])
    except ValueError as exc:
        raise ValueError(f"bad sample count {parts[4]!r} in trajectory spec") from exc
    return start, end, n


def _write_output(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_classify(args) -> int:
    P = _matrix_arg(args.matrix)
    report = build_report(P)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_report_text(P, report, sys.stdout)
    return 0


def _cmd_map(args) -> int:
    markers = []
    if args.points:
        with open(args.points, "r", encoding="utf-8") as fh:
            games = matrices_from_lines(fh)
        for P in games:
            try:
                markers.append((map_point(P), str(P)))
            except TrivialGame:
                print(f"warning: skipping constant matrix {P} (no map point)", file=sys.stderr)
    trajectories = []
    for spec_text in args.trajectory or ():
        start, end, n = _parse_trajectory_spec(spec_text)
        samples = trajectory(start, end, n)
        trajectories.append([s.point for s in samples])
    _write_output(args.out, render_map(markers=markers, trajectories=trajectories))
    return 0


def _fractions_doc(report) -> dict:
    class_fractions = report.class_fractions()
    class_errors = report.class_std_errors()
    region_fractions = report.region_fractions()
    region_errors = report.region_std_errors()
    classes = []
    for k, record in enumerate(CLASS_TABLE):
        exact = record.fraction
        classes.append(
            {
                "index": k,
                "name": record.display_name,
                "exact": _rat(exact),
                "exact_decimal": float(exact),
                "estimate": class_fractions[k],
                "abs_error": abs(class_fractions[k] - float(exact)),
                "std_error": class_errors[k],
            }
        )
    regions = []
    from .cartography import REGIONS

    for region in REGIONS:
        exact = Fraction(1, 24)
        regions.append(
            {
                "id": region.id,
                "ordering": region.ordering_text,
                "class_index": region_class_index(region.id),
                "exact": _rat(exact),
                "exact_decimal": float(exact),
                "estimate": region_fractions[region.id],
                "abs_error": abs(region_fractions[region.id] - float(exact)),
                "std_error": region_errors[region.id],
            }
        )
    return {
        "schema": "fractions.v1",
        "samples": report.n_samples,
        "seed": report.seed,
        "workers": report.n_workers,
        "classes": classes,
        "regions": regions,
    }


def _cmd_fractions(args) -> int:
    report = mc_region_fractions(args.samples, args.seed, args.workers)
    doc = _fractions_doc(report)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
        return 0
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["kind", "id", "name", "exact", "estimate", "abs_error", "std_error"])
    for row in doc["classes"]:
        writer.writerow(
            ["class", row["index"], row["name"], row["exact"],
             f"{row['estimate']:.9f}", f"{row['abs_error']:.9f}", f"{row['std_error']:.9f}"]
        )
    for row in doc["regions"]:
        writer.writerow(
            ["region", row["id"], row["ordering"], row["exact"],
             f"{row['estimate']:.9f}", f"{row['abs_error']:.9f}", f"{row['std_error']:.9f}"]
        )
    return 0


def _cmd_census(args) -> int:
    counts = census()
    ok = True
    print(f"{'#':>2}  {'class':<28} {'count':>5} {'expect':>6}  {'fraction':>8}  status")
    for k, record in enumerate(CLASS_TABLE):
        got = counts[record]
        match = got == record.triangle_count
        ok = ok and match
        print(
            f"{k:>2}  {record.display_name:<28} {got:>5} {record.triangle_count:>6}"
            f"  {str(record.fraction):>8}  {'ok' if match else 'MISMATCH'}"
        )
    total = sum(counts.values())
    ok = ok and total == 24
    print(f"    {'total':<28} {total:>5} {24:>6}")
    if not ok:
        print("census self-test failed", file=sys.stderr)
    return 0 if ok else 1


def _cmd_ordergraph(args) -> int:
    P = _matrix_arg(args.matrix)
    _write_output(args.out, to_dot(build_order_graph(P), simplified=args.simplified))
    return 0


def _cmd_decompose(args) -> int:
    P = _matrix_arg(args.matrix)
    doc = {
        "schema": "decompose.v1",
        "degenerate": None,
        "boundary": False,
        "matrix": _matrix_doc(P),
        "region": None,
        "offset": None,
        "offset_decimal": None,
        "scale": None,
        "scale_decimal": None,
        "weights": None,
        "weights_decimal": None,
        "vertices": None,
        "reconstruction_exact": None,
    }
    if P.is_constant():
        doc["degenerate"] = "trivial"
        print(json.dumps(doc, indent=2))
        return 0
    try:
        region_of(P)
    except BoundaryGame:
        doc["boundary"] = True
    doc.update(_decomposition_doc(P))
    print(json.dumps(doc, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgame",
        description="Classify, decompose, and map symmetric 2x2 games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full report for one game")
    p.add_argument("matrix", help="payoff matrix, 'a,b;c,d' or JSON {\"payoff\": [[a,b],[c,d]]}")
    p.add_argument("--json", action="store_true", help="emit the report.v1 JSON document")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("map", help="render the game map as SVG")
    p.add_argument("--points", metavar="FILE", help="file with one matrix per line to mark on the map")
    p.add_argument(
        "--trajectory",
        action="append",
        metavar="SPEC",
        help="'a,b;c,d;e,f;g,h;n': path from the first matrix to the second in n samples",
    )
    p.add_argument("--out", metavar="FILE", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("fractions", help="Monte Carlo estimate of region and class measures")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--workers",
        type=int,
        default=1,
        help="independent sample streams; output is deterministic per (seed, workers)",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_fractions)

    p = sub.add_parser("census", help="self-test: classify the 24 ordinal games")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("ordergraph", help="emit the order graph as DOT")
    p.add_argument("matrix")
    p.add_argument("--simplified", action="store_true", help="nodes and equilibrium marks only")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_ordergraph)

    p = sub.add_parser("decompose", help="exact vertex decomposition as JSON")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_decompose)
    return parser


def main(argv: Optional[list] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # Degenerate games are handled inside the commands, so a ValueError
        # here is a parse or usage problem.
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())
