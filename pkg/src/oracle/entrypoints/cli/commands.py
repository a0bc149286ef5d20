"""Команда iso: поиск свидетеля изоморфизма."""

import argparse

from base.dependencies import (
    add_pair_arguments,
    build_run_config,
    config_parent,
    dumps,
    emit,
    resolve_documents,
    resolve_pair,
)
from graphs.domain.models import SymmetricMatrix
from oracle.services.services import find_signed_isomorphism, perm_isomorphic_matrices


def cmd_iso(args: argparse.Namespace) -> int:
    """Свидетель или null; код выхода 0, если свидетель найден."""
    config = build_run_config(args)
    if not args.builtin:
        documents = resolve_documents(args, config.eig_tol)
        if all(isinstance(d, SymmetricMatrix) for d in documents):
            perm = perm_isomorphic_matrices(
                documents[0],
                documents[1],
                config.oracle_tol,
                config.matrix_oracle_max_nodes,
            )
            emit(dumps({"kind": "matrix", "witness": None if perm is None else {"perm": perm}}), args.out)
            return 0 if perm is not None else 1

    a, b = resolve_pair(args, config)
    witness = find_signed_isomorphism(a, b, config.oracle_tol, config.oracle_max_nodes)
    emit(dumps({"kind": "signed", "witness": None if witness is None else witness.to_dict()}), args.out)
    return 0 if witness is not None else 1


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "iso",
        parents=[config_parent()],
        help="exhaustive sign-permutation or permutation isomorphism search",
    )
    add_pair_arguments(parser)
    parser.add_argument("--out", help="output file (default stdout)")
    parser.set_defaults(func=cmd_iso)
