"""Генераторы точных контрпримеров.

Вершина i соответствует столбцу i транспонированной матрицы, то есть
строке i матрицы n×K. Каждая строка раскладки задает пару координат для
двенадцати вершин, разбитых на три блока по четыре.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from base.config import get_eig_tol
from base.exceptions import DomainError
from counterexamples.domain.models import (
    O2,
    OGEPair,
    OGEReport,
    Z0,
    Z1,
    Z2,
    Z3,
    ZVector,
)
from graphs.domain.models import SymmetricMatrix
from oracle.services.services import find_negating_permutation, perm_isomorphic_matrices
from refinement.domain.models import Quantizer, UpdateRule
from refinement.services.equi import equi_init, equi_step
from spectral.domain.models import SpectralPair

Layout = Tuple[Tuple[ZVector, ...], ...]

DEFAULT_LAMBDAS = (6.0, 5.0, 4.0, 3.0, 2.0, 1.0)
BLOCK = 4

_SHARED_ROWS = (
    (Z0, Z1, Z2, Z3, O2, O2, O2, O2, Z0, Z1, Z2, Z3),
    (Z0, Z1, Z2, Z3, Z0, Z1, Z2, Z3, O2, O2, O2, O2),
)
U_LAYOUT: Layout = _SHARED_ROWS + ((O2, O2, O2, O2, Z0, Z1, Z3, Z2, Z0, Z2, Z1, Z3),)
V_LAYOUT: Layout = _SHARED_ROWS + ((O2, O2, O2, O2, Z1, Z0, Z2, Z3, Z2, Z0, Z3, Z1),)

# Множители (строка раскладки, блок) для ортогонализующего дополнения
HAT_SCALES = ((2.0, 2.0, 2.0), (-0.5, 2.0, 2.0), (-0.5, -0.5, -0.5))

TWISTED_U_LAYOUT: Layout = _SHARED_ROWS + ((O2, O2, O2, O2, Z0, Z1, Z2, Z3, Z0, Z1, Z2, Z3),)
TWISTED_V_LAYOUT: Layout = _SHARED_ROWS + (
    (O2, O2, O2, O2) + tuple(z * Z1 for z in (Z0, Z1, Z2, Z3)) + tuple(z * Z2 for z in (Z0, Z1, Z2, Z3)),
)

U1 = np.array([[1, 2], [-1, 3], [1, 4], [-1, 5]], dtype=float)
U2 = np.array([[-1, 2], [1, 3], [1, 4], [-1, 5]], dtype=float)
OGE_LAMBDAS = (1.0, 2.0)
L1_PRINTED = ((9, 11, 17, 19), (11, 19, 23, 31), (17, 23, 33, 39), (19, 31, 39, 51))
L2_PRINTED = ((9, 11, 15, 21), (11, 19, 25, 29), (15, 25, 33, 39), (21, 29, 39, 51))


def _validated_lambdas(lambdas: Optional[Sequence[float]]) -> np.ndarray:
    values = np.array(DEFAULT_LAMBDAS if lambdas is None else lambdas, dtype=float)
    if values.shape != (6,):
        raise DomainError(f"Expected 6 eigenvalues, got {values.shape[0] if values.ndim == 1 else values.shape}")
    if np.any(-np.diff(values) <= get_eig_tol()):
        raise DomainError(f"Eigenvalues must be strictly decreasing with gaps above eig_tol={get_eig_tol()}")
    return values


def assemble(layout: Layout, scales: Optional[Sequence[Sequence[float]]] = None) -> np.ndarray:
    """Сборка матрицы 12×6 из раскладки z-блоков."""
    n = len(layout[0])
    V = np.zeros((n, 2 * len(layout)))
    for r, row in enumerate(layout):
        for i, z in enumerate(row):
            scale = 1.0 if scales is None else scales[r][i // BLOCK]
            V[i, 2 * r : 2 * r + 2] = scale * z.array
    return V


def _pair(layout_a: Layout, layout_b: Layout, lambdas: Optional[Sequence[float]]) -> Tuple[SpectralPair, SpectralPair]:
    values = _validated_lambdas(lambdas)
    return (
        SpectralPair.from_arrays(assemble(layout_a), values),
        SpectralPair.from_arrays(assemble(layout_b), values),
    )


def gen_epnn_counterexample(lambdas: Optional[Sequence[float]] = None) -> Tuple[SpectralPair, SpectralPair]:
    """Пара (U, V) из z-блоков, 12 вершин и 6 собственных векторов."""
    return _pair(U_LAYOUT, V_LAYOUT, lambdas)


def gen_twisted_counterexample(lambdas: Optional[Sequence[float]] = None) -> Tuple[SpectralPair, SpectralPair]:
    """Пара с третьей координатой, скрученной на z1 во втором блоке и z2 в третьем.

    Неизоморфна, EPNN ее не различает, а эквивариантный шаг различает.
    """
    return _pair(TWISTED_U_LAYOUT, TWISTED_V_LAYOUT, lambdas)


def _orthonormal(layout: Layout) -> np.ndarray:
    stacked = np.vstack([assemble(layout), assemble(layout, HAT_SCALES)])
    return stacked / np.linalg.norm(stacked, axis=0)


def gen_orthonormal_counterexample(lambdas: Optional[Sequence[float]] = None) -> Tuple[SpectralPair, SpectralPair]:
    """Пара (Ũ, Ṽ): исходные 12 строк и 12 строк дополнения, столбцы нормированы."""
    values = _validated_lambdas(lambdas)
    return (
        SpectralPair.from_arrays(_orthonormal(U_LAYOUT), values),
        SpectralPair.from_arrays(_orthonormal(V_LAYOUT), values),
    )


def _outer_sum(U: np.ndarray, lambdas: Sequence[float]) -> SymmetricMatrix:
    L = sum(lam * np.outer(U[:, q], U[:, q]) for q, lam in enumerate(lambdas))
    return SymmetricMatrix(n=U.shape[0], entries=L)


def gen_oge_pair() -> OGEPair:
    """U1, U2 с общим вторым столбцом и лапласианы L = Σ λ_q u_q u_qᵀ."""
    return OGEPair(
        U1=U1.copy(),
        U2=U2.copy(),
        lambdas=OGE_LAMBDAS,
        L1=_outer_sum(U1, OGE_LAMBDAS),
        L2=_outer_sum(U2, OGE_LAMBDAS),
    )


def oge_report(tol: Optional[float] = None) -> OGEReport:
    """Первые столбцы обоих разложений отрицаются перестановкой, а L1 и L2 не изоморфны."""
    pair = gen_oge_pair()
    return OGEReport(
        u11_negating_perm=find_negating_permutation(pair.U1[:, 0], tol),
        u21_negating_perm=find_negating_permutation(pair.U2[:, 0], tol),
        shared_second_column=bool(np.array_equal(pair.U1[:, 1], pair.U2[:, 1])),
        laplacian_perm=perm_isomorphic_matrices(pair.L1, pair.L2, tol),
    )


def gen_equi_step_witness(
    lambdas: Optional[Sequence[float]] = None,
    q: Optional[Quantizer] = None,
) -> Tuple[SpectralPair, SpectralPair]:
    """Признаки (U, V) после одного шага с правилом proof_rule."""
    rule = UpdateRule.proof_rule()
    pairs = []
    for sp in gen_epnn_counterexample(lambdas):
        state = equi_step(equi_init(sp, q), sp, rule, q)
        pairs.append(sp.with_vectors(state.vecs))
    return pairs[0], pairs[1]
