"""Command-line front end.

Subcommands: analyze | product | verify | gen | export.
Exit codes: 0 success, 1 verification property violation, 2 parse/usage error,
3 not strongly connected, 4 vertex budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .boundary import boundary_profile
from .digraph import find_unreachable_pair, is_strong
from .errors import (
    InvalidConfig,
    LoopArc,
    NotStrong,
    ParallelArc,
    ParseError,
    SizeOverflow,
    StrongboundsError,
    VertexOutOfRange,
)
from .generator import GeneratorConfig, generate_strong_digraph
from .io_formats import (
    SET_NAMES,
    EdgeListDocument,
    export_dot,
    parse_edge_list,
    resolve_set_name,
    serialize_edge_list,
)
from .metric import metric_profile
from .product import DEFAULT_VERTEX_BUDGET
from .report import analyze_digraph, analyze_product
from .verify import run_verification

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_NOT_STRONG = 3
EXIT_BUDGET = 4


def _read_document(path: str) -> EdgeListDocument:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _require_strong(doc: EdgeListDocument, path: str) -> None:
    if not is_strong(doc.digraph):
        pair = find_unreachable_pair(doc.digraph)
        detail = f"no directed path {pair[0]} -> {pair[1]}" if pair else ""
        raise NotStrong(f"{path}: digraph is not strongly connected: {detail}", pair=pair)


def _cmd_analyze(args: argparse.Namespace) -> int:
    doc = _read_document(args.input)
    _require_strong(doc, args.input)
    report = analyze_digraph(doc, path=args.input, neighborhood=args.neighborhood)
    _emit(report.to_text() if args.pretty else report.to_json(), args.out)
    return EXIT_OK


def _cmd_product(args: argparse.Namespace) -> int:
    doc1 = _read_document(args.input1)
    doc2 = _read_document(args.input2)
    _require_strong(doc1, args.input1)
    _require_strong(doc2, args.input2)
    report = analyze_product(
        doc1,
        doc2,
        mode=args.mode,
        budget=args.budget,
        neighborhood=args.neighborhood,
        paths=(args.input1, args.input2),
    )
    _emit(report.to_text() if args.pretty else report.to_json(), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = run_verification(
        trials=args.trials,
        n_max=args.n_max,
        p_values=tuple(args.p),
        seed=args.seed,
    )
    for line in summary.lines():
        print(line)
    if summary.ok:
        print(f"all properties held on {summary.trials} factor pairs")
        return EXIT_OK
    v = summary.violations[0]
    print(f"\nproperty violated: {v.prop} (trial {v.trial}): {v.detail}")
    print("minimized factor 1 edge list:")
    sys.stdout.write(v.d1_edge_list)
    print("minimized factor 2 edge list:")
    sys.stdout.write(v.d2_edge_list)
    return EXIT_VIOLATION


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(n=args.n, p=args.p, seed=args.seed, max_retries=args.max_retries)
    result = generate_strong_digraph(cfg)
    comments = (
        f"generated: n={cfg.n} p={cfg.p} seed={cfg.seed} "
        f"attempts={result.attempts} augmented={str(result.augmented).lower()}",
    )
    _emit(serialize_edge_list(result.digraph, comments=comments), args.out)
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    doc = _read_document(args.input)
    highlight = None
    if args.set != "none":
        _require_strong(doc, args.input)
        profile = metric_profile(doc.digraph)
        sets = boundary_profile(profile, doc.digraph, args.neighborhood)
        highlight = resolve_set_name(sets, args.set)
    text = export_dot(
        doc.digraph,
        labels=doc.labels,
        highlight=highlight,
        highlight_name=None if args.set == "none" else args.set,
    )
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongbounds",
        description="Boundary-type vertex sets of strong digraphs under the "
        "maximum-distance metric, with strong-product factor formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--pretty", action="store_true", help="human-readable tables")
        p.add_argument(
            "--neighborhood",
            choices=("open", "closed"),
            default="open",
            help="neighborhood variant for boundary/contour (default open)",
        )

    p_an = sub.add_parser("analyze", help="metric profile and boundary-type sets of one digraph")
    p_an.add_argument("input", help="edge-list file")
    add_common(p_an)
    p_an.set_defaults(func=_cmd_analyze)

    p_pr = sub.add_parser("product", help="strong-product analysis of two digraphs")
    p_pr.add_argument("input1")
    p_pr.add_argument("input2")
    p_pr.add_argument(
        "--mode",
        choices=("formula", "oracle", "both"),
        default="formula",
        help="factor formulas, direct on the built product, or both with diffs",
    )
    p_pr.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_VERTEX_BUDGET,
        help="max product vertices for oracle-mode construction",
    )
    add_common(p_pr)
    p_pr.set_defaults(func=_cmd_product)

    p_ve = sub.add_parser("verify", help="randomized formula-vs-direct and metric-law checks")
    p_ve.add_argument("--trials", type=int, default=200)
    p_ve.add_argument("--n-max", type=int, default=7, dest="n_max")
    p_ve.add_argument(
        "--p",
        type=float,
        nargs="+",
        default=[0.2, 0.4, 0.7],
        help="arc probabilities cycled across trials",
    )
    p_ve.add_argument("--seed", type=int, default=0)
    p_ve.set_defaults(func=_cmd_verify)

    p_ge = sub.add_parser("gen", help="generate a reproducible random strong digraph")
    p_ge.add_argument("--n", type=int, required=True)
    p_ge.add_argument("--p", type=float, required=True)
    p_ge.add_argument("--seed", type=int, default=0)
    p_ge.add_argument("--max-retries", type=int, default=20, dest="max_retries")
    p_ge.add_argument("--out")
    p_ge.set_defaults(func=_cmd_gen)

    p_ex = sub.add_parser("export", help="DOT export with optional set highlighting")
    p_ex.add_argument("input")
    p_ex.add_argument(
        "--set",
        choices=SET_NAMES + ("none",),
        default="none",
        help="boundary-type set to highlight",
    )
    p_ex.add_argument(
        "--neighborhood", choices=("open", "closed"), default="open"
    )
    p_ex.add_argument("--out")
    p_ex.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, LoopArc, ParallelArc, VertexOutOfRange, InvalidConfig) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotStrong as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_STRONG
    except SizeOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StrongboundsError as exc:  # remaining library errors are usage errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
