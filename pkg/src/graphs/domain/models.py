"""Доменные модели графов и симметричных матриц."""

from enum import Enum
from typing import FrozenSet, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator


class Graph(BaseModel):
    """Неориентированный граф без петель и кратных ребер."""

    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    model_config = ConfigDict(frozen=True)

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        """Валидация числа вершин."""
        if v < 1:
            raise ValueError("Graph must have at least one node")
        return v

    @field_validator("edges")
    @classmethod
    def normalize_edges(cls, v: FrozenSet[Tuple[int, int]]) -> FrozenSet[Tuple[int, int]]:
        """Приведение ребер к виду (min, max)."""
        normalized = set()
        for u, w in v:
            if u == w:
                raise ValueError(f"Self-loop at node {u}")
            normalized.add((min(u, w), max(u, w)))
        return frozenset(normalized)

    @model_validator(mode="after")
    def validate_endpoints(self) -> "Graph":
        """Проверка, что концы ребер лежат в [0, n)."""
        for u, w in self.edges:
            if u < 0 or w >= self.n:
                raise ValueError(f"Edge ({u}, {w}) out of range for n={self.n}")
        return self

    @property
    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> List[int]:
        """Степени вершин."""
        deg = [0] * self.n
        for u, w in self.edges:
            deg[u] += 1
            deg[w] += 1
        return deg


class SymmetricMatrix(BaseModel):
    """Вещественная симметричная матрица n×n."""

    n: int
    entries: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("entries", mode="before")
    @classmethod
    def validate_entries(cls, v) -> np.ndarray:
        """Проверка квадратности и точной симметрии."""
        arr = np.array(v, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"Matrix must be square, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Matrix entries must be finite")
        if not np.array_equal(arr, arr.T):
            raise ValueError("Matrix is not exactly symmetric")
        arr.flags.writeable = False
        return arr

    @model_validator(mode="after")
    def validate_dimension(self) -> "SymmetricMatrix":
        """Согласованность n и размера матрицы."""
        if self.entries.shape[0] != self.n:
            raise ValueError(f"Declared n={self.n} but matrix is {self.entries.shape[0]}x{self.entries.shape[0]}")
        return self

    @classmethod
    def from_array(cls, entries) -> "SymmetricMatrix":
        """Создание матрицы из массива."""
        arr = np.array(entries, dtype=float)
        return cls(n=arr.shape[0] if arr.ndim == 2 else 0, entries=arr)

    @field_serializer("entries")
    def serialize_entries(self, entries: np.ndarray) -> list:
        return entries.tolist()


class GraphFormat(Enum):
    """Поддерживаемые форматы файлов графов."""

    EDGE_LIST = "edge_list"
    JSON_GRAPH = "json_graph"
