"""Сервисы спектрального анализа: группировка, проверка простоты, усечение."""

from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from base.config import get_eig_tol
from base.exceptions import DomainError, NotSimpleError
from graphs.domain.models import Graph, SymmetricMatrix
from graphs.services.services import adjacency, laplacian, normalized_laplacian
from spectral.domain.models import (
    EigenDecomposition,
    EigenvalueGroup,
    SpectralPair,
    TruncationOrder,
)
from spectral.services.eigensolver import eigendecompose

MATRIX_BUILDERS: Dict[str, Callable[[Graph], SymmetricMatrix]] = {
    "laplacian": laplacian,
    "adjacency": adjacency,
    "normalized_laplacian": normalized_laplacian,
}


def group_eigenvalues(lambdas: Sequence[float], eig_tol: Optional[float] = None) -> List[EigenvalueGroup]:
    """Жадная группировка слева направо.

    Новая группа начинается, когда разрыв с первым значением текущей группы
    больше eig_tol, поэтому группа не шире eig_tol. Возрастание в пределах
    eig_tol считается шумом решателя.
    """
    eig_tol = get_eig_tol() if eig_tol is None else eig_tol
    if eig_tol <= 0:
        raise DomainError("eig_tol must be positive")
    values = [float(x) for x in lambdas]
    groups: List[List[int]] = []
    for i, value in enumerate(values):
        if i > 0 and value - values[i - 1] > eig_tol:
            raise DomainError(f"Eigenvalues are not sorted non-increasing at index {i}")
        if i == 0 or abs(values[groups[-1][0]] - value) > eig_tol:
            groups.append([i])
        else:
            groups[-1].append(i)
    return [
        EigenvalueGroup(representative=values[idx[0]], multiplicity=len(idx), column_indices=idx)
        for idx in groups
    ]


def is_simple_spectrum(ed: EigenDecomposition, eig_tol: Optional[float] = None) -> bool:
    """Все собственные значения попарно различны."""
    return all(group.multiplicity == 1 for group in group_eigenvalues(ed.lambdas, eig_tol))


def _select_columns(ed: EigenDecomposition, k: int, eig_tol: float, order: TruncationOrder) -> List[int]:
    """Индексы K столбцов в порядке убывания λ.

    smallest_nonzero берет K ненулевых собственных значений с наименьшим
    модулем. Для знакопеременного спектра (матрица смежности) это значения
    обоих знаков вокруг нуля; при равных модулях первым идет положительное.
    """
    if order is TruncationOrder.LARGEST:
        candidates = list(range(ed.n))
        selected = candidates[:k]
    else:
        candidates = [i for i in range(ed.n) if abs(ed.lambdas[i]) > eig_tol]
        selected = sorted(sorted(candidates, key=lambda i: abs(ed.lambdas[i]))[:k])
    if k > len(candidates):
        raise DomainError(
            f"Requested K={k} but only {len(candidates)} eigenvectors are available for order '{order.value}'"
        )
    return selected


def truncate(
    ed: EigenDecomposition,
    k: int,
    eig_tol: Optional[float] = None,
    order: TruncationOrder | str = TruncationOrder.LARGEST,
) -> SpectralPair:
    """Усечение разложения до K собственных векторов."""
    eig_tol = get_eig_tol() if eig_tol is None else eig_tol
    order = TruncationOrder(order)
    if k < 1:
        raise DomainError("K must be at least 1")
    columns = _select_columns(ed, k, eig_tol, order)

    collisions = [
        (columns[j], columns[j + 1])
        for j in range(len(columns) - 1)
        if ed.lambdas[columns[j]] - ed.lambdas[columns[j + 1]] <= eig_tol
    ]
    if collisions:
        indices = sorted({i for pair in collisions for i in pair})
        raise NotSimpleError(f"Selected eigenvalues collide at columns {indices}", indices=indices)

    outside = [i for i in range(ed.n) if i not in columns]
    for column in columns:
        if any(abs(ed.lambdas[column] - ed.lambdas[i]) <= eig_tol for i in outside):
            logger.warning(f"Truncation splits an eigenvalue group at column {column}; eigenvector is basis-dependent")

    return SpectralPair.from_arrays(ed.V[:, columns], ed.lambdas[columns], eig_tol=eig_tol)


def spectral_pair_from_graph(
    g: Graph,
    k: Optional[int] = None,
    eig_tol: Optional[float] = None,
    order: TruncationOrder | str = TruncationOrder.LARGEST,
    matrix: str = "laplacian",
) -> SpectralPair:
    """Разложение матрицы графа и усечение до K (по умолчанию K = n)."""
    if matrix not in MATRIX_BUILDERS:
        raise DomainError(f"Unknown matrix kind {matrix!r}; expected one of {sorted(MATRIX_BUILDERS)}")
    ed = eigendecompose(MATRIX_BUILDERS[matrix](g))
    return truncate(ed, g.n if k is None else k, eig_tol, order)


def simple_columns(ed: EigenDecomposition, eig_tol: Optional[float] = None) -> List[int]:
    """Индексы столбцов из групп кратности 1."""
    return [
        group.column_indices[0]
        for group in group_eigenvalues(ed.lambdas, eig_tol)
        if group.multiplicity == 1
    ]


def restrict_to_columns(
    ed: EigenDecomposition, columns: Sequence[int], eig_tol: Optional[float] = None
) -> SpectralPair:
    """Спектральная пара из выбранных столбцов разложения."""
    cols = list(columns)
    return SpectralPair.from_arrays(ed.V[:, cols], np.asarray(ed.lambdas)[cols], eig_tol=eig_tol)
