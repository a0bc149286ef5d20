"""Команда canonicalize: знаки собственных векторов графа или отчет по корпусу."""

import argparse
from pathlib import Path
from typing import Optional

from base.data_structures import RunConfig
from base.dependencies import (
    InputDocument,
    build_run_config,
    config_parent,
    dumps,
    emit,
    load_corpus,
    load_document,
    quantizer,
)
from base.exceptions import DomainError
from canonical.services.services import (
    DEFAULT_ROUNDS,
    canonicalization_report,
    detect_uncanonicalizable,
    equi_canonicalize,
)
from graphs.adapters.repositories import FileSystemGraphRepository
from graphs.domain.models import Graph
from graphs.services.services import laplacian
from refinement.domain.models import UpdateRule
from spectral.domain.models import SpectralPair
from spectral.services.eigensolver import eigendecompose
from spectral.services.services import restrict_to_columns, simple_columns


def _rule(text: Optional[str], config: RunConfig) -> UpdateRule:
    if text is None:
        return UpdateRule.random_table(config.seeds[0])
    try:
        return UpdateRule.parse(text)
    except ValueError as e:
        raise DomainError(str(e)) from e


def _simple_pair(document: InputDocument, config: RunConfig) -> SpectralPair:
    if isinstance(document, SpectralPair):
        return document
    matrix = laplacian(document) if isinstance(document, Graph) else document
    ed = eigendecompose(matrix)
    columns = simple_columns(ed, config.eig_tol)
    if not columns:
        raise DomainError("input has no simple eigenvectors")
    return restrict_to_columns(ed, columns, config.eig_tol)


def _is_corpus(path: Path) -> bool:
    return path.exists() and FileSystemGraphRepository(path).is_collection


def cmd_canonicalize(args: argparse.Namespace) -> int:
    """CanonResult для одного входа, CanonReport для каталога или массива графов."""
    config = build_run_config(args)
    rule = _rule(args.rule, config)
    q = quantizer(config)
    path = Path(args.path)
    if _is_corpus(path):
        _, graphs, errors = load_corpus([args.path], args.skip_errors)
        report = canonicalization_report(
            graphs,
            rule,
            args.rounds,
            config.eig_tol,
            config.sum_tol,
            config.oracle_tol,
            config.workers,
            config.oracle_max_nodes,
            q,
        )
        payload = report.model_dump()
        if errors:
            payload["errors"] = errors
        emit(dumps(payload), args.out)
        return 0

    sp = _simple_pair(load_document(path, config.eig_tol), config)
    result = equi_canonicalize(sp, rule, args.rounds, config.sum_tol, q)
    flags = detect_uncanonicalizable(sp, config.sum_tol, config.oracle_tol, config.oracle_max_nodes)
    payload = {
        **result.to_dict(),
        "rule": rule.name,
        "lambdas": sp.lambdas.tolist(),
        "sum_zero": flags.sum_zero,
        "self_symmetric": flags.self_symmetric,
        "warnings": [] if flags.self_symmetric is not None else ["self-symmetry omitted: input over the oracle size cap"],
    }
    emit(dumps(payload), args.out)
    return 0


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "canonicalize",
        parents=[config_parent()],
        help="sign canonicalization of simple eigenvectors",
    )
    parser.add_argument("path", help="graph, matrix or spectral pair file; directory for a corpus report")
    parser.add_argument("--rule", help="update rule (default random_table(<first seed>))")
    parser.add_argument("--rounds", type=int, default=DEFAULT_ROUNDS, help="equivariant rounds")
    parser.add_argument("--skip-errors", action="store_true", help="skip corpus files that fail to parse")
    parser.add_argument("--out", help="output file (default stdout)")
    parser.set_defaults(func=cmd_canonicalize)
