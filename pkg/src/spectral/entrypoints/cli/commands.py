"""Команда spectrum: спектральная пара одного графа."""

import argparse

from base.dependencies import build_run_config, config_parent, emit, load_document, to_spectral_pair
from spectral.adapters.serializers import serialize_spectral_pair
from spectral.domain.models import TruncationOrder
from spectral.services.services import MATRIX_BUILDERS


def cmd_spectrum(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    sp = to_spectral_pair(load_document(args.path, config.eig_tol), config, args.k, args.order, args.matrix)
    emit(serialize_spectral_pair(sp), args.out)
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "spectrum",
        parents=[config_parent()],
        help="eigendecompose a graph and write its spectral pair",
    )
    parser.add_argument("path", help="graph or matrix file")
    parser.add_argument("--k", type=int, help="number of eigenvectors (default n)")
    parser.add_argument(
        "--order",
        choices=[o.value for o in TruncationOrder],
        default=TruncationOrder.LARGEST.value,
    )
    parser.add_argument("--matrix", choices=sorted(MATRIX_BUILDERS), default="laplacian")
    parser.add_argument("--out", help="output file (default stdout)")
    parser.set_defaults(func=cmd_spectrum)
