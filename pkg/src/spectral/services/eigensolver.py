"""Циклический метод Якоби для плотных симметричных матриц."""

import math
from typing import Optional

import numpy as np
from loguru import logger

from base.config import get_jacobi_max_sweeps, get_jacobi_tol
from base.exceptions import NumericalError
from graphs.domain.models import SymmetricMatrix
from spectral.domain.models import EigenDecomposition

EPS = float(np.finfo(float).eps)


def _off_norm(a: np.ndarray) -> float:
    # Норма по внедиагональным элементам, без вычитания из ‖A‖_F
    return float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    if apq == 0.0:
        return
    app, aqq = a[p, p], a[q, q]
    if abs(apq) <= EPS * math.sqrt(abs(app * aqq)):
        a[p, q] = a[q, p] = 0.0
        return
    tau = (aqq - app) / (2.0 * apq)
    # hypot не переполняется при |tau| > 1e154
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def eigendecompose(
    m: SymmetricMatrix,
    tol: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> EigenDecomposition:
    """Разложение симметричной матрицы.

    Проходы по парам (p, q) в фиксированном порядке строк, пока
    внедиагональная норма Фробениуса не станет меньше tol·max(1, ‖A‖_F).
    Собственные значения сортируются по убыванию устойчивой сортировкой.
    """
    tol = get_jacobi_tol() if tol is None else tol
    max_sweeps = get_jacobi_max_sweeps() if max_sweeps is None else max_sweeps

    a = m.entries.copy()
    n = m.n
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    off = _off_norm(a)
    while off > threshold:
        if sweeps >= max_sweeps:
            raise NumericalError(f"Jacobi did not converge in {max_sweeps} sweeps", residual=off)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1
        off = _off_norm(a)

    logger.debug(f"Jacobi converged: n={n}, sweeps={sweeps}, off={off:.3e}")
    lambdas = np.diag(a).copy()
    order = np.argsort(-lambdas, kind="stable")
    return EigenDecomposition(n=n, lambdas=lambdas[order], V=v[:, order])
