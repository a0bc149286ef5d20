"""Доменные модели оракула изоморфизма."""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from spectral.domain.models import SpectralPair


class SignedPermutation(BaseModel):
    """Элемент группы S_n × {±1}^K.

    Действие на пару: (g·sp).V = P·V·S, строка i переходит в строку perm[i].
    """

    perm: List[int]
    signs: List[int]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_group_element(self) -> "SignedPermutation":
        """perm является биекцией, знаки равны ±1."""
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"perm is not a bijection: {self.perm}")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError(f"signs must be ±1: {self.signs}")
        return self

    @classmethod
    def identity(cls, n: int, k: int) -> "SignedPermutation":
        return cls(perm=list(range(n)), signs=[1] * k)

    @property
    def is_identity(self) -> bool:
        return self.perm == list(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def apply_matrix(self, V: np.ndarray) -> np.ndarray:
        """P·V·S для матрицы n×K."""
        result = np.empty_like(V)
        result[np.asarray(self.perm, dtype=int)] = V * np.asarray(self.signs, dtype=float)
        return result

    def apply(self, sp: SpectralPair) -> SpectralPair:
        """Действие на спектральную пару; λ не меняется."""
        return sp.with_vectors(self.apply_matrix(sp.V))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Композиция self ∘ other: сначала other, затем self."""
        return SignedPermutation(
            perm=[self.perm[p] for p in other.perm],
            signs=[a * b for a, b in zip(self.signs, other.signs)],
        )

    def to_dict(self) -> dict:
        return {"perm": list(self.perm), "signs": list(self.signs)}
