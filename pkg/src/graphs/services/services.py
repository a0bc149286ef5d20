"""Построение матриц графа и перестановки вершин."""

from typing import Sequence

import numpy as np

from base.exceptions import DomainError
from graphs.domain.models import Graph, SymmetricMatrix


def _validate_perm(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(n)):
        raise DomainError(f"Not a permutation of range({n}): {list(perm)}")


def adjacency(g: Graph) -> SymmetricMatrix:
    """Матрица смежности: A[i][j] = 1 для ребер, диагональ нулевая."""
    a = np.zeros((g.n, g.n))
    for u, w in g.edges:
        a[u, w] = 1.0
        a[w, u] = 1.0
    return SymmetricMatrix(n=g.n, entries=a)


def laplacian(g: Graph) -> SymmetricMatrix:
    """Ненормированный лапласиан L = D - A."""
    lap = -adjacency(g).entries.copy()
    np.fill_diagonal(lap, g.degrees())
    return SymmetricMatrix(n=g.n, entries=lap)


def normalized_laplacian(g: Graph) -> SymmetricMatrix:
    """Нормированный лапласиан I - D^{-1/2} A D^{-1/2}.

    Для изолированной вершины диагональный элемент равен 0.
    """
    deg = np.array(g.degrees(), dtype=float)
    inv_sqrt = np.zeros_like(deg)
    nonzero = deg > 0
    inv_sqrt[nonzero] = 1.0 / np.sqrt(deg[nonzero])
    lap = np.zeros((g.n, g.n))
    np.fill_diagonal(lap, nonzero.astype(float))
    for u, w in g.edges:
        value = -inv_sqrt[u] * inv_sqrt[w]
        lap[u, w] = value
        lap[w, u] = value
    return SymmetricMatrix(n=g.n, entries=lap)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Переименование вершин: вершина i получает номер perm[i]."""
    _validate_perm(perm, g.n)
    return Graph(n=g.n, edges=frozenset((perm[u], perm[w]) for u, w in g.edges))


def conjugate(m: SymmetricMatrix, perm: Sequence[int]) -> SymmetricMatrix:
    """Сопряжение P·M·Pᵀ: M'[perm[i]][perm[j]] = M[i][j]."""
    _validate_perm(perm, m.n)
    idx = np.empty(m.n, dtype=int)
    idx[np.asarray(perm)] = np.arange(m.n)
    return SymmetricMatrix(n=m.n, entries=m.entries[np.ix_(idx, idx)])
