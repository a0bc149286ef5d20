"""Эквивариантная канонизация знаков собственных векторов."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
from loguru import logger

from base.config import get_eig_tol, get_oracle_tol, get_sum_tol, get_workers
from base.exceptions import DomainError, ResourceLimitError
from base.utils import percentage
from canonical.domain.models import CanonReport, CanonResult, ColumnFlags
from graphs.domain.models import Graph
from graphs.services.services import laplacian
from oracle.services.services import find_negating_permutation
from refinement.domain.models import Quantizer, UpdateRule
from refinement.services.equi import run_equi
from spectral.domain.models import SpectralPair
from spectral.services.eigensolver import eigendecompose
from spectral.services.services import restrict_to_columns, simple_columns

DEFAULT_RULE = UpdateRule.random_table(1)
DEFAULT_ROUNDS = 2


def column_sums(V: np.ndarray) -> List[float]:
    """Точные суммы столбцов, не зависящие от порядка строк."""
    return [math.fsum(V[:, q]) for q in range(V.shape[1])]


def equi_canonicalize(
    sp: SpectralPair,
    rule: UpdateRule = DEFAULT_RULE,
    rounds: int = DEFAULT_ROUNDS,
    sum_tol: Optional[float] = None,
    q: Optional[Quantizer] = None,
) -> CanonResult:
    """Знаки s_q = sign(Σ_i V^(T)[i][q]) по выходу эквивариантного EPNN."""
    if rounds < 1:
        raise DomainError(f"rounds must be at least 1, got {rounds}")
    sum_tol = get_sum_tol() if sum_tol is None else sum_tol
    output = run_equi(sp, rule, rounds, q).vecs
    sums = column_sums(output)
    signs = [0 if abs(s) <= sum_tol else (1 if s > 0 else -1) for s in sums]
    flips = np.array([s if s != 0 else 1 for s in signs], dtype=float)
    return CanonResult(
        signs=signs,
        decidable=[s != 0 for s in signs],
        V_canon=sp.V * flips,
        output_sums=sums,
        equivariant_output=output,
    )


def _self_symmetric(V: np.ndarray, tol: float, max_nodes: Optional[int]) -> Optional[List[bool]]:
    try:
        return [find_negating_permutation(V[:, q], tol, max_nodes) is not None for q in range(V.shape[1])]
    except ResourceLimitError as e:
        logger.warning(f"Self-symmetry check skipped: {e}")
        return None


def detect_uncanonicalizable(
    sp: SpectralPair,
    tol: Optional[float] = None,
    oracle_tol: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> ColumnFlags:
    """Нулевая сумма столбца и наличие перестановки, отрицающей столбец."""
    tol = get_sum_tol() if tol is None else tol
    oracle_tol = get_oracle_tol() if oracle_tol is None else oracle_tol
    return ColumnFlags(
        sum_zero=[abs(s) <= tol for s in column_sums(sp.V)],
        self_symmetric=_self_symmetric(sp.V, oracle_tol, max_nodes),
    )


class _GraphCounts(NamedTuple):
    simple: int
    input_sum_zero: int
    output_sum_zero: int
    input_self_symmetric: Optional[int]
    output_self_symmetric: Optional[int]


def _graph_counts(
    g: Graph,
    rule: UpdateRule,
    rounds: int,
    eig_tol: float,
    sum_tol: float,
    oracle_tol: float,
    max_nodes: Optional[int],
    q: Optional[Quantizer],
) -> _GraphCounts:
    ed = eigendecompose(laplacian(g))
    columns = simple_columns(ed, eig_tol)
    if not columns:
        return _GraphCounts(0, 0, 0, 0, 0)
    sp = restrict_to_columns(ed, columns, eig_tol)
    flags = detect_uncanonicalizable(sp, sum_tol, oracle_tol, max_nodes)
    result = equi_canonicalize(sp, rule, rounds, sum_tol, q)
    out_symmetric = _self_symmetric(result.equivariant_output, oracle_tol, max_nodes)
    return _GraphCounts(
        simple=len(columns),
        input_sum_zero=sum(flags.sum_zero),
        output_sum_zero=sum(not d for d in result.decidable),
        input_self_symmetric=None if flags.self_symmetric is None else sum(flags.self_symmetric),
        output_self_symmetric=None if out_symmetric is None else sum(out_symmetric),
    )


def canonicalization_report(
    corpus: Sequence[Graph],
    rule: UpdateRule = DEFAULT_RULE,
    rounds: int = DEFAULT_ROUNDS,
    eig_tol: Optional[float] = None,
    sum_tol: Optional[float] = None,
    oracle_tol: Optional[float] = None,
    workers: Optional[int] = None,
    max_nodes: Optional[int] = None,
    q: Optional[Quantizer] = None,
) -> CanonReport:
    """Проценты нулевых сумм и самосимметричных векторов до и после эквивариантного EPNN."""
    if not corpus:
        raise DomainError("Corpus is empty")
    eig_tol = get_eig_tol() if eig_tol is None else eig_tol
    sum_tol = get_sum_tol() if sum_tol is None else sum_tol
    oracle_tol = get_oracle_tol() if oracle_tol is None else oracle_tol
    workers = get_workers() if workers is None else workers

    with ThreadPoolExecutor(max_workers=workers) as executor:
        counts = list(
            executor.map(
                lambda g: _graph_counts(g, rule, rounds, eig_tol, sum_tol, oracle_tol, max_nodes, q),
                corpus,
            )
        )

    total = sum(c.simple for c in counts)
    decided = [c for c in counts if c.input_self_symmetric is not None and c.output_self_symmetric is not None]
    decided_total = sum(c.simple for c in decided)
    skipped = total - decided_total
    warnings: List[str] = []
    if skipped:
        warnings.append(f"self-symmetry omitted for {skipped} eigenvector(s) over the oracle size cap")
    if total == 0:
        warnings.append("corpus has no simple eigenvectors")
        logger.warning("Canonicalization report over a corpus with no simple eigenvectors")

    def pct(count: int, denominator: int) -> Optional[float]:
        return percentage(count, denominator) if denominator else None

    return CanonReport(
        input_sum_zero_pct=pct(sum(c.input_sum_zero for c in counts), total),
        input_uncanonicalizable_pct=pct(sum(c.input_self_symmetric or 0 for c in decided), decided_total),
        output_sum_zero_pct=pct(sum(c.output_sum_zero for c in counts), total),
        output_uncanonicalizable_pct=pct(sum(c.output_self_symmetric or 0 for c in decided), decided_total),
        n_simple_eigenvectors=total,
        n_graphs=len(corpus),
        skipped_self_symmetry=skipped,
        warnings=warnings,
    )
