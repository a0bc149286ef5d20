"""Точка входа CLI spectralwl."""

import argparse
import sys
from typing import List, Optional

from base.config import get_log_level
from base.exception_handlers import handle_app_exception
from base.exceptions import AppException
from base.utils import setup_logging
from canonical.entrypoints.cli.commands import register as register_canonical
from counterexamples.entrypoints.cli.commands import register as register_counterexamples
from oracle.entrypoints.cli.commands import register as register_oracle
from refinement.entrypoints.cli.commands import register as register_refinement
from spectral.entrypoints.cli.commands import register as register_spectral
from stats.entrypoints.cli.commands import register as register_stats


def build_parser() -> argparse.ArgumentParser:
    """Парсер со всеми подкомандами."""
    parser = argparse.ArgumentParser(
        prog="spectralwl",
        description="Spectral expressivity toolkit: refinement tests, oracles, canonicalization, statistics.",
    )
    parser.add_argument("--log-level", help="loguru level for stderr (default SPECTRALWL_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_stats(subparsers)
    register_refinement(subparsers)
    register_canonical(subparsers)
    register_counterexamples(subparsers)
    register_oracle(subparsers)
    register_spectral(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Разбор аргументов, запуск команды и перевод исключений в коды выхода."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or get_log_level())
    try:
        return args.func(args)
    except AppException as e:
        return handle_app_exception(e, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
