"""Доменные модели канонизации собственных векторов."""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class CanonResult(BaseModel):
    """Знаки столбцов и канонизированная матрица; 0 означает неразрешимый столбец."""

    signs: List[int]
    decidable: List[bool]
    V_canon: np.ndarray
    output_sums: List[float]
    equivariant_output: np.ndarray = Field(repr=False)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def to_dict(self) -> dict:
        return {
            "signs": list(self.signs),
            "decidable": list(self.decidable),
            "output_sums": list(self.output_sums),
            "V_canon": self.V_canon.tolist(),
        }


class ColumnFlags(BaseModel):
    """Признаки неканонизируемости по столбцам.

    self_symmetric равен None, если перебор пропущен из-за предела размера.
    """

    sum_zero: List[bool]
    self_symmetric: Optional[List[bool]] = None

    model_config = ConfigDict(frozen=True)


class CanonReport(BaseModel):
    """Проценты по простым собственным векторам корпуса."""

    input_sum_zero_pct: Optional[float]
    input_uncanonicalizable_pct: Optional[float]
    output_sum_zero_pct: Optional[float]
    output_uncanonicalizable_pct: Optional[float]
    n_simple_eigenvectors: int
    n_graphs: int
    skipped_self_symmetry: int = 0
    warnings: List[str] = []

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_percentages(self) -> "CanonReport":
        """Проценты лежат в [0, 100]."""
        for name in (
            "input_sum_zero_pct",
            "input_uncanonicalizable_pct",
            "output_sum_zero_pct",
            "output_uncanonicalizable_pct",
        ):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 100.0:
                raise ValueError(f"{name} out of range: {value}")
        return self
