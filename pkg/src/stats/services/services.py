"""Сервисы спектральной статистики графов и корпусов."""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from base.config import get_eig_tol, get_workers, get_zero_tol
from base.exceptions import DomainError
from base.utils import percentage
from graphs.domain.models import Graph
from graphs.services.services import laplacian
from spectral.services.eigensolver import eigendecompose
from spectral.services.services import group_eigenvalues
from stats.domain.models import DatasetStatsReport, GraphSpectralStats


def graph_stats(g: Graph, eig_tol: Optional[float] = None, zero_tol: Optional[float] = None) -> GraphSpectralStats:
    """Статистика собственных векторов лапласиана графа.

    Нуль в позиции (i, q) засчитывается, когда строка i равна нулю на всем
    собственном подпространстве столбца q. Для простого собственного
    значения это условие |V[i, q]| <= zero_tol.
    """
    eig_tol = get_eig_tol() if eig_tol is None else eig_tol
    zero_tol = get_zero_tol() if zero_tol is None else zero_tol
    ed = eigendecompose(laplacian(g))
    groups = group_eigenvalues(ed.lambdas, eig_tol)
    multiplicities = [group.multiplicity for group in groups]
    zeros = np.zeros(ed.V.shape, dtype=bool)
    for group in groups:
        cols = group.column_indices
        # Норма строки по собственному подпространству не зависит от выбора базиса
        zeros[:, cols] = (np.linalg.norm(ed.V[:, cols], axis=1) <= zero_tol)[:, None]
    num_zeros = int(zeros.sum())

    count_mult2 = multiplicities.count(2)
    count_mult3 = multiplicities.count(3)
    has_full_row = bool(np.any(~zeros.any(axis=1)))
    le_one_zero = bool(np.all(zeros.sum(axis=0) <= 1))
    zeros_lt_vertices = num_zeros < g.n
    return GraphSpectralStats(
        n=g.n,
        has_distinct=all(m == 1 for m in multiplicities),
        has_mult2=count_mult2 > 0,
        has_mult3=count_mult3 > 0,
        count_mult2=count_mult2,
        count_mult3=count_mult3,
        num_zeros=num_zeros,
        ratio_zeros=num_zeros / g.n,
        has_full_row=has_full_row,
        le_one_zero_per_vec=le_one_zero,
        zeros_lt_vertices=zeros_lt_vertices,
        any_condition=has_full_row or le_one_zero or zeros_lt_vertices,
    )


def collect_graph_stats(
    corpus: Sequence[Graph],
    eig_tol: Optional[float] = None,
    zero_tol: Optional[float] = None,
    workers: Optional[int] = None,
) -> List[GraphSpectralStats]:
    """Статистика по каждому графу в порядке корпуса."""
    workers = get_workers() if workers is None else workers
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda g: graph_stats(g, eig_tol, zero_tol), corpus))


def aggregate(stats: Sequence[GraphSpectralStats]) -> DatasetStatsReport:
    """Свертка статистик графов в отчет по корпусу."""
    if not stats:
        raise DomainError("Corpus is empty")
    total = len(stats)

    def pct(flag: str) -> float:
        return percentage(sum(1 for s in stats if getattr(s, flag)), total)

    def avg(field: str) -> float:
        return float(np.mean([getattr(s, field) for s in stats]))

    return DatasetStatsReport(
        graph_count=total,
        pct_distinct=pct("has_distinct"),
        pct_mult2=pct("has_mult2"),
        pct_mult3=pct("has_mult3"),
        avg_count_mult2=avg("count_mult2"),
        avg_count_mult3=avg("count_mult3"),
        avg_num_zeros=avg("num_zeros"),
        avg_ratio_zeros=avg("ratio_zeros"),
        pct_full_row=pct("has_full_row"),
        pct_le_one_zero_per_vec=pct("le_one_zero_per_vec"),
        pct_zeros_lt_vertices=pct("zeros_lt_vertices"),
        pct_any_condition=pct("any_condition"),
        avg_nodes=avg("n"),
    )


def dataset_report(
    corpus: Sequence[Graph],
    eig_tol: Optional[float] = None,
    zero_tol: Optional[float] = None,
    workers: Optional[int] = None,
) -> DatasetStatsReport:
    """Отчет по корпусу графов."""
    if not corpus:
        raise DomainError("Corpus is empty")
    report = aggregate(collect_graph_stats(corpus, eig_tol, zero_tol, workers))
    logger.info(f"Spectral statistics computed for {report.graph_count} graphs")
    return report
