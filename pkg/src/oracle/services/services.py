"""Переборные процедуры: знако-перестановочный изоморфизм и автоморфизмы.

Поиск идет с возвратом по вершинам. Знак каждого столбца выводится из
первого сопоставленного ненулевого элемента, а кандидаты для вершины
ограничены строками с совпадающими модулями элементов.
"""

import itertools
from typing import Iterator, List, Optional

import numpy as np
from loguru import logger

from base.config import get_matrix_oracle_max_nodes, get_oracle_max_nodes, get_oracle_tol
from base.exceptions import DomainError, KMismatchError, ResourceLimitError
from graphs.domain.models import SymmetricMatrix
from graphs.services.services import conjugate
from oracle.domain.models import SignedPermutation
from spectral.domain.models import SpectralPair


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ResourceLimitError(f"Exhaustive search over {n} nodes exceeds the configured cap of {cap}")


class _SignedSearch:
    """Состояние поиска отображений g с g·A ≈ B."""

    def __init__(self, A: np.ndarray, B: np.ndarray, tol: float, enumerate_free_signs: bool) -> None:
        self.A, self.B, self.tol = A, B, tol
        self.n, self.k = A.shape
        self.enumerate_free_signs = enumerate_free_signs
        absA, absB = np.abs(A), np.abs(B)
        self.candidates: List[List[int]] = [
            [j for j in range(self.n) if np.max(np.abs(absA[i] - absB[j]), initial=0.0) <= tol]
            for i in range(self.n)
        ]
        self.order = sorted(range(self.n), key=lambda i: (len(self.candidates[i]), i))
        self.nonzero = [[q for q in range(self.k) if absA[i, q] > tol] for i in range(self.n)]
        self.perm = [-1] * self.n
        self.used = [False] * self.n
        self.signs = [0] * self.k

    def _assign(self, i: int, j: int) -> Optional[List[int]]:
        fixed: List[int] = []
        for q in self.nonzero[i]:
            a, b = self.A[i, q], self.B[j, q]
            s = self.signs[q] or (1 if a * b >= 0 else -1)
            if abs(a * s - b) > self.tol:
                for p in fixed:
                    self.signs[p] = 0
                return None
            if self.signs[q] == 0:
                self.signs[q] = s
                fixed.append(q)
        return fixed

    def _witnesses(self) -> Iterator[SignedPermutation]:
        free = [q for q in range(self.k) if self.signs[q] == 0]
        choices = itertools.product((1, -1), repeat=len(free)) if self.enumerate_free_signs else [(1,) * len(free)]
        for choice in choices:
            signs = list(self.signs)
            for q, s in zip(free, choice):
                signs[q] = s
            g = SignedPermutation(perm=list(self.perm), signs=signs)
            if np.max(np.abs(g.apply_matrix(self.A) - self.B), initial=0.0) <= self.tol:
                yield g

    def search(self, depth: int = 0) -> Iterator[SignedPermutation]:
        if depth == self.n:
            yield from self._witnesses()
            return
        i = self.order[depth]
        for j in self.candidates[i]:
            if self.used[j]:
                continue
            fixed = self._assign(i, j)
            if fixed is None:
                continue
            self.perm[i], self.used[j] = j, True
            yield from self.search(depth + 1)
            self.perm[i], self.used[j] = -1, False
            for q in fixed:
                self.signs[q] = 0


def iter_signed_isomorphisms(
    a: SpectralPair,
    b: SpectralPair,
    tol: float,
    enumerate_free_signs: bool = False,
) -> Iterator[SignedPermutation]:
    """Ленивый перебор всех g с g·a ≈ b."""
    search = _SignedSearch(a.V, b.V, tol, enumerate_free_signs)
    if any(not c for c in search.candidates):
        return iter(())
    return search.search()


def find_signed_isomorphism(
    a: SpectralPair,
    b: SpectralPair,
    tol: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> Optional[SignedPermutation]:
    """Свидетель g с ‖g·a.V − b.V‖_max ≤ tol или None."""
    tol = get_oracle_tol() if tol is None else tol
    if a.k != b.k:
        raise KMismatchError(f"Spectral pairs have different K: {a.k} != {b.k}")
    if a.n != b.n:
        return None
    _check_cap(a.n, get_oracle_max_nodes() if max_nodes is None else max_nodes)
    if np.max(np.abs(a.lambdas - b.lambdas)) > tol:
        return None
    witness = next(iter_signed_isomorphisms(a, b, tol), None)
    logger.debug(f"Signed isomorphism search on n={a.n}: {'found' if witness else 'none'}")
    return witness


def automorphisms_trivial(sp: SpectralPair, tol: Optional[float] = None, max_nodes: Optional[int] = None) -> bool:
    """Единственный автоморфизм: тождественная перестановка со знаками +1."""
    tol = get_oracle_tol() if tol is None else tol
    _check_cap(sp.n, get_oracle_max_nodes() if max_nodes is None else max_nodes)
    return all(g.is_identity for g in iter_signed_isomorphisms(sp, sp, tol, enumerate_free_signs=True))


def automorphism_group(
    sp: SpectralPair,
    tol: Optional[float] = None,
    limit: int = 1000,
    max_nodes: Optional[int] = None,
) -> List[SignedPermutation]:
    """Все автоморфизмы пары; больше limit элементов считается превышением ресурса."""
    tol = get_oracle_tol() if tol is None else tol
    _check_cap(sp.n, get_oracle_max_nodes() if max_nodes is None else max_nodes)
    group = list(itertools.islice(iter_signed_isomorphisms(sp, sp, tol, enumerate_free_signs=True), limit + 1))
    if len(group) > limit:
        raise ResourceLimitError(f"Automorphism group has more than {limit} elements")
    return group


def perm_isomorphic_matrices(
    m1: SymmetricMatrix,
    m2: SymmetricMatrix,
    tol: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> Optional[List[int]]:
    """Перестановка π с ‖P·m1·Pᵀ − m2‖_max ≤ tol или None."""
    tol = get_oracle_tol() if tol is None else tol
    if m1.n != m2.n:
        raise DomainError(f"Matrices have different dimensions: {m1.n} != {m2.n}")
    _check_cap(m1.n, get_matrix_oracle_max_nodes() if max_nodes is None else max_nodes)
    A, B, n = m1.entries, m2.entries, m1.n
    sorted_a, sorted_b = np.sort(A, axis=1), np.sort(B, axis=1)
    candidates = [
        [
            j
            for j in range(n)
            if abs(A[i, i] - B[j, j]) <= tol and np.max(np.abs(sorted_a[i] - sorted_b[j])) <= tol
        ]
        for i in range(n)
    ]
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            if all(abs(A[i, p] - B[j, perm[p]]) <= tol for p in range(i)):
                perm[i], used[j] = j, True
                if extend(i + 1):
                    return True
                perm[i], used[j] = -1, False
        return False

    if not extend(0):
        return None
    assert np.max(np.abs(conjugate(m1, perm).entries - B)) <= tol
    return perm


def find_negating_permutation(
    v: np.ndarray,
    tol: Optional[float] = None,
    max_nodes: Optional[int] = None,
) -> Optional[List[int]]:
    """Перестановка σ с v[σ(i)] ≈ −v[i] для всех i или None.

    Сопоставление отсортированных значений с отсортированными значениями −v
    минимизирует максимальное отклонение, поэтому его достаточно проверить.
    """
    tol = get_oracle_tol() if tol is None else tol
    values = np.asarray(v, dtype=float)
    _check_cap(values.shape[0], get_oracle_max_nodes() if max_nodes is None else max_nodes)
    order = np.argsort(values, kind="stable")
    n = values.shape[0]
    perm = [0] * n
    for pos in range(n):
        i, partner = int(order[pos]), int(order[n - 1 - pos])
        if abs(values[i] + values[partner]) > tol:
            return None
        perm[i] = partner
    return perm
