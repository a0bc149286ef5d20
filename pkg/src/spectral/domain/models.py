"""Доменные модели спектральных разложений."""

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_serializer, field_validator, model_validator

from base.config import get_eig_tol


def readonly_array(v, ndim: int) -> np.ndarray:
    """Копия массива float64 заданной размерности, защищенная от записи."""
    arr = np.array(v, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"Expected a {ndim}-dimensional array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("Array entries must be finite")
    arr.flags.writeable = False
    return arr


class TruncationOrder(Enum):
    """Правило выбора K собственных векторов."""

    LARGEST = "largest"
    SMALLEST_NONZERO = "smallest_nonzero"


class EigenDecomposition(BaseModel):
    """Полное разложение: столбец q матрицы V соответствует lambdas[q]."""

    n: int
    lambdas: np.ndarray
    V: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("lambdas", mode="before")
    @classmethod
    def validate_lambdas(cls, v) -> np.ndarray:
        """Валидация вектора собственных значений."""
        arr = readonly_array(v, 1)
        if np.any(np.diff(arr) > 0):
            raise ValueError("Eigenvalues must be sorted non-increasing")
        return arr

    @field_validator("V", mode="before")
    @classmethod
    def validate_vectors(cls, v) -> np.ndarray:
        """Валидация матрицы собственных векторов."""
        return readonly_array(v, 2)

    @model_validator(mode="after")
    def validate_shapes(self) -> "EigenDecomposition":
        """Согласованность размеров."""
        if self.lambdas.shape != (self.n,) or self.V.shape != (self.n, self.n):
            raise ValueError("Decomposition shapes do not match n")
        return self


class SpectralPair(BaseModel):
    """Пара (V, λ) с K собственными значениями, разделенными больше чем eig_tol.

    Допуск берется из контекста валидации ({"eig_tol": ...}), иначе из
    настроек.
    """

    n: int
    k: int
    lambdas: np.ndarray
    V: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("lambdas", mode="before")
    @classmethod
    def validate_lambdas(cls, v, info: ValidationInfo) -> np.ndarray:
        """Соседние собственные значения отличаются больше чем на eig_tol."""
        arr = readonly_array(v, 1)
        eig_tol = (info.context or {}).get("eig_tol")
        eig_tol = get_eig_tol() if eig_tol is None else eig_tol
        gaps = -np.diff(arr)
        if np.any(gaps <= eig_tol):
            q = int(np.argmax(gaps <= eig_tol))
            raise ValueError(
                f"Eigenvalues of a spectral pair must be strictly decreasing with gaps above eig_tol={eig_tol}; "
                f"gap at position {q} is {gaps[q]}"
            )
        return arr

    @field_validator("V", mode="before")
    @classmethod
    def validate_vectors(cls, v) -> np.ndarray:
        """Валидация матрицы V."""
        return readonly_array(v, 2)

    @model_validator(mode="after")
    def validate_shapes(self) -> "SpectralPair":
        """Согласованность n, K и размеров массивов."""
        if self.k < 1:
            raise ValueError("K must be at least 1")
        if self.V.shape != (self.n, self.k) or self.lambdas.shape != (self.k,):
            raise ValueError(
                f"Expected V of shape ({self.n}, {self.k}) and {self.k} eigenvalues, "
                f"got {self.V.shape} and {self.lambdas.shape[0]}"
            )
        return self

    @classmethod
    def from_arrays(cls, V, lambdas, eig_tol: Optional[float] = None) -> "SpectralPair":
        """Создание пары по матрице V и вектору λ."""
        arr = np.array(V, dtype=float)
        n, k = arr.shape if arr.ndim == 2 else (0, 0)
        return cls.model_validate({"n": n, "k": k, "lambdas": lambdas, "V": arr}, context={"eig_tol": eig_tol})

    def with_vectors(self, V) -> "SpectralPair":
        """Та же пара λ с новой матрицей V той же формы."""
        arr = readonly_array(V, 2)
        if arr.shape != self.V.shape:
            raise ValueError(f"Expected V of shape {self.V.shape}, got {arr.shape}")
        return self.model_copy(update={"V": arr})

    @field_serializer("lambdas", "V")
    def serialize_array(self, arr: np.ndarray) -> list:
        return arr.tolist()


class EigenvalueGroup(BaseModel):
    """Группа собственных значений в пределах допуска."""

    representative: float
    multiplicity: int
    column_indices: List[int]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_multiplicity(self) -> "EigenvalueGroup":
        """Кратность равна числу столбцов группы."""
        if self.multiplicity < 1 or self.multiplicity != len(self.column_indices):
            raise ValueError("Multiplicity must match the number of column indices")
        return self
