"""Команда stats: спектральная статистика корпуса графов."""

import argparse

from loguru import logger

from base.config import OutputFormat
from base.dependencies import build_run_config, config_parent, emit, load_corpus
from stats.adapters.writers import report_to_csv, report_to_json
from stats.services.services import aggregate, collect_graph_stats


def cmd_stats(args: argparse.Namespace) -> int:
    """Отчет по корпусу в CSV или JSON."""
    config = build_run_config(args)
    names, graphs, errors = load_corpus(args.paths, args.skip_errors)
    stats = collect_graph_stats(graphs, config.eig_tol, config.zero_tol, config.workers)
    report = aggregate(stats)
    detail = (names, stats) if args.per_graph else (None, None)
    if config.output_format is OutputFormat.CSV:
        text = report_to_csv(report, *detail)
    else:
        text = report_to_json(report, *detail, errors=errors)
    if errors:
        logger.warning(f"Report covers {len(graphs)} graphs; {len(errors)} file(s) skipped")
    emit(text, args.out)
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "stats",
        parents=[config_parent()],
        help="spectral statistics of a graph corpus",
    )
    parser.add_argument("paths", nargs="+", help="graph files, directories or JSON arrays of graphs")
    parser.add_argument("--skip-errors", action="store_true", help="report over the files that parse")
    parser.add_argument("--per-graph", action="store_true", help="include per-graph statistics")
    parser.add_argument("--out", help="output file (default stdout)")
    parser.set_defaults(func=cmd_stats)
