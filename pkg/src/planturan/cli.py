"""Command-line interface.

Subcommands
    gen        emit a constructed graph in .rot format
    verify     freeness + discharging + edge-bound verdict for a .rot file
    audit      discharging worksheet only (per-block charges, identities)
    blocks     triangular block partition of a .rot file
    search     extremal edge counts over small vertex counts
    bound      edge-bound table lookup
    export     convert a .rot file to DOT or an edge list

Exit codes: 0 ok, 1 verified finding, 2 malformed input or parameters,
3 construction self-check failure, 4 search timeout.

Deterministic payloads go to stdout (JSON with sorted keys, or .rot/DOT
text); timings and experimental validation summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .blocks import GrowthMode, triangular_blocks
from .construct import (
    DOUBLE_WHEEL,
    STACKED,
    Construction,
    SelfCheckError,
    gen_ring_extension,
    gen_theorem2,
    gen_theorem4,
    gen_triangulation,
)
from .core import GraphFormatError, PlaneGraph, parse_rot, serialize_rot
from .discharge import GENERAL, SMALL_BLOCKS, audit, bound_value, rational_json
from .embed import serialize_edg
from .families import FAMILIES, family_from_name
from .search import CapExceeded, SearchMode, search_max_edges

OK, FINDING, USAGE, SELF_CHECK, TIMEOUT = 0, 1, 2, 3, 4


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True))


def _read_graph(path: str) -> PlaneGraph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_rot(text)


def _growth(name: str) -> GrowthMode:
    return GrowthMode(name)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "theorem2":
        built = gen_theorem2(args.nprime, args.kind)
    elif args.generator == "theorem4":
        built = gen_theorem4(args.variant)
    elif args.generator == "ring":
        if not args.experimental:
            print(
                "gen ring is experimental (its output is not 6-cycle-free); "
                "pass --experimental to proceed",
                file=sys.stderr,
            )
            return USAGE
        built = gen_ring_extension(rings=args.rings)
    elif args.generator == "triangulation":
        g = gen_triangulation(args.n, args.kind)
        built = Construction(
            graph=g,
            name="triangulation",
            params=(("n", args.n), ("kind", args.kind)),
            comments=(f"{args.kind} triangulation on {args.n} vertices",),
        )
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(args.generator)

    text = serialize_rot(built.graph, built.header_comments())
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if built.validation is not None:
        print(json.dumps(built.validation.to_dict(), sort_keys=True), file=sys.stderr)
    return OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    fam = family_from_name(args.family)
    report = audit(g, fam, _growth(args.growth))
    _emit(report.to_dict(), args.pretty)
    return FINDING if report.has_finding else OK


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    fam = family_from_name(args.family)
    report = audit(g, fam, _growth(args.growth))
    full = report.to_dict()
    worksheet = {
        "schema_version": full["schema_version"],
        "family": full["family"],
        "n": full["n"],
        "e": full["e"],
        "growth_mode": full["growth_mode"],
        "face_lengths": full["face_lengths"],
        "weights": full["weights"],
        "block_census": full["block_census"],
        "block_scores": full["block_scores"],
        "positive_blocks": full["positive_blocks"],
        "global_score": full["global_score"],
        "score_identity_ok": full["score_identity_ok"],
    }
    _emit(worksheet, args.pretty)
    return OK


def _cmd_blocks(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    part = triangular_blocks(g, _growth(args.growth))
    _emit(
        {
            "n": g.vertex_count,
            "e": g.edge_count,
            "growth_mode": part.mode.value,
            "census": part.census(),
            "blocks": [
                {
                    "id": b.id,
                    "class": b.cls,
                    "vertices": list(b.vertices),
                    "edges": [list(e) for e in b.edges],
                }
                for b in part.blocks
            ],
        },
        args.pretty,
    )
    return OK


def _cmd_search(args: argparse.Namespace) -> int:
    fam = family_from_name(args.family)
    result = search_max_edges(
        args.n,
        fam,
        SearchMode(args.mode),
        threads=args.threads,
        timeout=args.timeout,
    )
    _emit(result.to_dict(), args.pretty)
    print(f"elapsed_s={result.elapsed_s:.3f}", file=sys.stderr)
    return OK if result.complete else TIMEOUT


def _cmd_bound(args: argparse.Namespace) -> int:
    fam = family_from_name(args.family)
    res = bound_value(fam, args.n, args.variant)
    _emit(
        {
            "family": res.family,
            "variant": res.variant,
            "n": res.n,
            "value": rational_json(res.value),
            "minimum_n": res.minimum_n,
            "below_validity": res.below_validity,
            "hypothesis": res.hypothesis,
            "notes": list(res.notes),
        },
        args.pretty,
    )
    return OK


def _cmd_export(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    if args.format == "edgelist":
        sys.stdout.write(serialize_edg(g.abstract()))
        return OK
    part = triangular_blocks(g, GrowthMode.TRIANGLE)
    census = ", ".join(f"{v}x {k}" for k, v in sorted(part.census().items()))
    out = [
        "graph G {",
        f"  // vertices: {g.vertex_count}  edges: {g.edge_count}  "
        f"faces: {len(g.faces)}",
        f"  // blocks: {census}",
        "  node [shape=circle];",
    ]
    out += [f"  {v};" for v in range(g.vertex_count)]
    out += [f"  {u} -- {v};" for u, v in g.edges]
    out.append("}")
    print("\n".join(out))
    return OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="planturan",
        description="Plane-graph analysis: forbidden-subgraph freeness, "
        "triangular blocks, exact discharging, extremal search.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    fams = sorted(FAMILIES)
    growths = [m.value for m in GrowthMode]

    outopt = argparse.ArgumentParser(add_help=False)
    outopt.add_argument(
        "-o", "--out", default=None, help=".rot output path (default stdout)"
    )
    gen = sub.add_parser("gen", help="emit a constructed graph in .rot format")
    gsub = gen.add_subparsers(dest="generator", required=True)
    g2 = gsub.add_parser(
        "theorem2", parents=[outopt], help="diamond-gadget graph: 7e = 15(n-2)"
    )
    g2.add_argument("--nprime", type=int, required=True, help="scaffold order (>= 3)")
    g2.add_argument("--kind", choices=[STACKED, DOUBLE_WHEEL], default=STACKED)
    g4 = gsub.add_parser(
        "theorem4", parents=[outopt], help="wheel assemblies; g0 attains 3e = 7(n-2)"
    )
    g4.add_argument("--variant", choices=["h0", "g0"], default="g0")
    gr = gsub.add_parser(
        "ring", parents=[outopt], help="experimental annulus growth of h0"
    )
    gr.add_argument("--rings", type=int, default=1)
    gr.add_argument("--experimental", action="store_true")
    gt = gsub.add_parser(
        "triangulation", parents=[outopt], help="plane triangulation scaffold"
    )
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--kind", choices=[STACKED, DOUBLE_WHEEL], default=STACKED)
    gen.set_defaults(func=_cmd_gen)

    ver = sub.add_parser("verify", help="freeness + bound verdict for a .rot file")
    ver.add_argument("file", help=".rot file, or - for stdin")
    ver.add_argument("--family", choices=fams, required=True)
    ver.add_argument("--growth", choices=growths, default=GrowthMode.TRIANGLE.value)
    ver.add_argument("--pretty", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    aud = sub.add_parser("audit", help="discharging worksheet for a .rot file")
    aud.add_argument("file", help=".rot file, or - for stdin")
    aud.add_argument("--family", choices=fams, required=True)
    aud.add_argument("--growth", choices=growths, default=GrowthMode.TRIANGLE.value)
    aud.add_argument("--pretty", action="store_true")
    aud.set_defaults(func=_cmd_audit)

    blk = sub.add_parser("blocks", help="triangular block partition of a .rot file")
    blk.add_argument("file", help=".rot file, or - for stdin")
    blk.add_argument("--growth", choices=growths, default=GrowthMode.TRIANGLE.value)
    blk.add_argument("--pretty", action="store_true")
    blk.set_defaults(func=_cmd_blocks)

    sea = sub.add_parser("search", help="extremal edge count for small n")
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--family", choices=fams, required=True)
    sea.add_argument("--mode", choices=[m.value for m in SearchMode], default="exact")
    sea.add_argument("--threads", type=int, default=1)
    sea.add_argument("--timeout", type=float, default=None, help="seconds")
    sea.add_argument("--pretty", action="store_true")
    sea.set_defaults(func=_cmd_search)

    bnd = sub.add_parser("bound", help="edge-bound table lookup")
    bnd.add_argument("--family", choices=fams, required=True)
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--variant", choices=[GENERAL, SMALL_BLOCKS], default=GENERAL)
    bnd.add_argument("--pretty", action="store_true")
    bnd.set_defaults(func=_cmd_bound)

    exp = sub.add_parser("export", help="convert a .rot file")
    exp.add_argument("file", help=".rot file, or - for stdin")
    exp.add_argument("--format", choices=["dot", "edgelist"], default="dot")
    exp.set_defaults(func=_cmd_export)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, ValueError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except SelfCheckError as exc:
        print(f"self-check failure: {exc}", file=sys.stderr)
        return SELF_CHECK


if __name__ == "__main__":
    sys.exit(main())
