"""Зависимости для команд CLI: общие флаги, конфигурация и входные данные."""

import argparse
import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from loguru import logger
from pydantic import ValidationError

from base.config import OutputFormat
from base.data_structures import RunConfig
from base.exceptions import DomainError
from counterexamples.services.services import (
    gen_epnn_counterexample,
    gen_orthonormal_counterexample,
    gen_twisted_counterexample,
)
from graphs.adapters.parsers import parse_edge_list, parse_json_document
from graphs.adapters.repositories import FileSystemGraphRepository, read_text
from graphs.domain.models import Graph, SymmetricMatrix
from refinement.domain.models import Quantizer
from spectral.adapters.serializers import is_spectral_pair_document, spectral_pair_from_dict
from spectral.domain.models import SpectralPair, TruncationOrder
from spectral.services.eigensolver import eigendecompose
from spectral.services.services import spectral_pair_from_graph, truncate

InputDocument = Graph | SymmetricMatrix | SpectralPair

BUILTIN_PAIRS: Dict[str, Callable[[], Tuple[SpectralPair, SpectralPair]]] = {
    "epnn-counterexample": gen_epnn_counterexample,
    "epnn-twisted": gen_twisted_counterexample,
    "orthonormal-counterexample": gen_orthonormal_counterexample,
}


def config_parent() -> argparse.ArgumentParser:
    """Родительский парсер с флагами конфигурации.

    Значения по умолчанию равны None и берутся из настроек.
    """
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("configuration")
    group.add_argument("--eig-tol", type=float, help="eigenvalue grouping tolerance")
    group.add_argument("--zero-tol", type=float, help="tolerance for zero eigenvector entries")
    group.add_argument("--sum-tol", type=float, help="tolerance for zero column sums")
    group.add_argument("--oracle-tol", type=float, help="entrywise tolerance of the exhaustive oracles")
    group.add_argument("--quantizer-scale", type=float, help="scale of the real-to-integer quantizer")
    group.add_argument("--max-rounds", type=int, help="refinement round limit")
    group.add_argument("--seeds", type=int, nargs="+", help="seeds of random update tables")
    group.add_argument("--workers", type=int, help="worker pool size (default SPECTRALWL_WORKERS)")
    group.add_argument("--format", choices=[f.value for f in OutputFormat], help="output format")
    return parent


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Конфигурация запуска из настроек и флагов."""
    try:
        return RunConfig.from_settings(
            eig_tol=args.eig_tol,
            zero_tol=args.zero_tol,
            sum_tol=args.sum_tol,
            oracle_tol=args.oracle_tol,
            quantizer_scale=args.quantizer_scale,
            max_rounds=args.max_rounds,
            seeds=args.seeds,
            workers=args.workers,
            output_format=args.format,
        )
    except ValidationError as e:
        raise DomainError(f"Invalid configuration: {e.errors()[0]['msg']}") from e


def quantizer(config: RunConfig) -> Quantizer:
    return Quantizer(scale=config.quantizer_scale)


def load_document(path: Path | str, eig_tol: Optional[float] = None) -> InputDocument:
    """Чтение входа: граф, матрица или спектральная пара в JSON."""
    path = Path(path)
    if not path.is_file():
        raise DomainError(f"input file does not exist: {path}")
    text = read_text(path)
    if path.suffix != ".json":
        return parse_edge_list(text)
    try:
        document = json.loads(text)
    except json.JSONDecodeError:
        document = None
    if is_spectral_pair_document(document):
        return spectral_pair_from_dict(document, eig_tol)
    return parse_json_document(text)


def to_spectral_pair(
    document: InputDocument,
    config: RunConfig,
    k: Optional[int] = None,
    order: str = TruncationOrder.LARGEST.value,
    matrix: str = "laplacian",
) -> SpectralPair:
    """Приведение входа к спектральной паре; граф раскладывается по матрице matrix."""
    if isinstance(document, SpectralPair):
        if k is not None and k != document.k:
            raise DomainError(f"--k {k} does not match the stored spectral pair with K={document.k}")
        return document
    if isinstance(document, Graph):
        return spectral_pair_from_graph(document, k, config.eig_tol, order, matrix)
    ed = eigendecompose(document)
    return truncate(ed, document.n if k is None else k, config.eig_tol, order)


def resolve_pair(
    args: argparse.Namespace,
    config: RunConfig,
) -> Tuple[SpectralPair, SpectralPair]:
    """Пара входов команды: встроенный набор или два файла."""
    if args.builtin:
        if args.inputs:
            raise DomainError("--builtin cannot be combined with input files")
        logger.info(f"Using builtin pair {args.builtin}")
        return BUILTIN_PAIRS[args.builtin]()
    documents = resolve_documents(args, config.eig_tol)
    order = getattr(args, "order", TruncationOrder.LARGEST.value)
    a, b = (to_spectral_pair(d, config, args.k, order) for d in documents)
    return a, b


def resolve_documents(args: argparse.Namespace, eig_tol: Optional[float] = None) -> List[InputDocument]:
    """Ровно два входных файла."""
    if len(args.inputs) != 2:
        raise DomainError(f"expected two input files, got {len(args.inputs)}")
    return [load_document(p, eig_tol) for p in args.inputs]


def add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    """Аргументы команд, сравнивающих два входа."""
    parser.add_argument("inputs", nargs="*", help="two graph, matrix or spectral pair files")
    parser.add_argument("--builtin", choices=sorted(BUILTIN_PAIRS), help="use a generated pair")
    parser.add_argument("--k", type=int, help="number of eigenvectors kept for graph inputs")
    parser.add_argument(
        "--order",
        choices=[o.value for o in TruncationOrder],
        default=TruncationOrder.LARGEST.value,
        help="which eigenvectors to keep",
    )


def load_corpus(
    paths: List[str],
    skip_errors: bool,
) -> Tuple[List[str], List[Graph], List[str]]:
    """Графы из каталогов и файлов; пустой корпус считается ошибкой."""
    names: List[str] = []
    graphs: List[Graph] = []
    errors: List[str] = []
    for path in paths:
        repository = FileSystemGraphRepository(path)
        loaded, failed = repository.load_all(skip_errors=skip_errors)
        names.extend(name for name, _ in loaded)
        graphs.extend(g for _, g in loaded)
        errors.extend(f"{name}: {detail}" for name, detail in failed)
    if errors:
        logger.warning(f"Skipped {len(errors)} file(s) that failed to load")
    if not graphs:
        raise DomainError("no graphs found")
    return names, graphs, errors


def dumps(payload: Any) -> str:
    """Детерминированный JSON."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def emit(text: str, out: Optional[Path | str] = None) -> None:
    """Вывод в stdout или в файл в UTF-8."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        print(text, end="")
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise DomainError(f"cannot write {out}: {e}") from e
    logger.info(f"Wrote {out}")
