"""Доменные модели контрпримеров."""

from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from graphs.domain.models import SymmetricMatrix


class ZVector(Enum):
    """Элементы группы Z_2 × Z_2 как векторы из {±1}^2 и нулевой блок."""

    Z0 = (1, 1)
    Z1 = (-1, 1)
    Z2 = (1, -1)
    Z3 = (-1, -1)
    ZERO = (0, 0)

    def __mul__(self, other: "ZVector") -> "ZVector":
        return ZVector((self.value[0] * other.value[0], self.value[1] * other.value[1]))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.value, dtype=float)


Z0, Z1, Z2, Z3, O2 = ZVector.Z0, ZVector.Z1, ZVector.Z2, ZVector.Z3, ZVector.ZERO
GROUP: Tuple[ZVector, ...] = (Z0, Z1, Z2, Z3)


class CounterexampleName(Enum):
    """Встроенные наборы данных."""

    EPNN = "epnn"
    ORTHONORMAL = "orthonormal"
    OGE = "oge"
    TWISTED = "twisted"


class OGEPair(BaseModel):
    """Два разложения с общим спектром и неизоморфными лапласианами."""

    U1: np.ndarray
    U2: np.ndarray
    lambdas: Tuple[float, float]
    L1: SymmetricMatrix
    L2: SymmetricMatrix

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class OGEReport(BaseModel):
    """Проверка пары: отрицающие перестановки и неизоморфность лапласианов."""

    u11_negating_perm: Optional[List[int]]
    u21_negating_perm: Optional[List[int]]
    shared_second_column: bool
    laplacian_perm: Optional[List[int]]

    model_config = ConfigDict(frozen=True)

    @property
    def laplacians_isomorphic(self) -> bool:
        return self.laplacian_perm is not None
