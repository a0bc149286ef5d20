"""Доменные модели тестов уточнения раскраски."""

import re
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from base.utils import ColorRegistry
from spectral.domain.models import readonly_array

QuantKey = Tuple[int, ...]

RULE_RE = re.compile(r"^random_table\((-?\d+)\)$")


class Quantizer(BaseModel):
    """Квантование вещественных значений: round(x·scale)."""

    scale: float = 1e8

    model_config = ConfigDict(frozen=True)

    @field_validator("scale")
    @classmethod
    def validate_scale(cls, v: float) -> float:
        """Масштаб должен быть положительным."""
        if v <= 0:
            raise ValueError("Quantizer scale must be positive")
        return v

    def quantize(self, x: float) -> int:
        return int(np.rint(x * self.scale))

    def key(self, values) -> QuantKey:
        """Кортеж квантованных значений вектора."""
        return _to_int_tuples(np.rint(np.asarray(values, dtype=float) * self.scale))

    def pairwise_keys(self, vecs: np.ndarray) -> List[List[QuantKey]]:
        """Квантованные произведения v_i ⊙ v_j для всех пар (i, j)."""
        products = np.rint(vecs[:, None, :] * vecs[None, :, :] * self.scale)
        if products.size and float(np.max(np.abs(products))) < 2.0**62:
            nested = products.astype(np.int64).tolist()
            return [[tuple(cell) for cell in row] for row in nested]
        return [[_to_int_tuples(products[i, j]) for j in range(vecs.shape[0])] for i in range(vecs.shape[0])]


def _to_int_tuples(row: np.ndarray) -> QuantKey:
    # int64 покрывает значения до 2^62; большие значения идут через Python int
    if row.size == 0 or float(np.max(np.abs(row))) < 2.0**62:
        return tuple(row.astype(np.int64).tolist())
    return tuple(int(x) for x in row.tolist())


class NodeInvariant(NamedTuple):
    """Инвариантные аргументы правила обновления для вершины."""

    color: int
    square: QuantKey


class ColorState(BaseModel):
    """Раскраска вершин на текущем раунде и история раундов."""

    round: int
    colors: Tuple[int, ...]
    history: Tuple[Tuple[int, ...], ...]
    registry: ColorRegistry = Field(repr=False, exclude=True)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def class_count(self) -> int:
        return len(set(self.colors))


class EquiState(ColorState):
    """Состояние эквивариантного уточнения: цвета и векторные признаки."""

    vecs: np.ndarray

    @field_validator("vecs", mode="before")
    @classmethod
    def validate_vecs(cls, v) -> np.ndarray:
        """Признаки хранятся только для чтения."""
        return readonly_array(v, 2)


class SeparationOutcome(Enum):
    """Исход теста различения."""

    SEPARATED = "separated"
    INDISTINGUISHABLE = "indistinguishable"


class SeparationVerdict(BaseModel):
    """Результат синхронного уточнения двух входов."""

    outcome: SeparationOutcome
    round: Optional[int] = None
    rounds_run: int
    color_class_counts: List[int]
    rule: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @property
    def separated(self) -> bool:
        return self.outcome is SeparationOutcome.SEPARATED

    def to_dict(self) -> dict:
        """JSON-представление вердикта; поле rule только для equi."""
        data = self.model_dump(mode="json")
        if self.rule is None:
            data.pop("rule")
        return data


class RuleKind(Enum):
    """Вид эквивариантного правила обновления."""

    ZERO = "zero"
    PROOF_RULE = "proof_rule"
    RANDOM_TABLE = "random_table"


class UpdateRule(BaseModel):
    """Правило UPDATE для векторных признаков."""

    kind: RuleKind
    seed: Optional[int] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_seed(self) -> "UpdateRule":
        """Seed нужен только случайной таблице."""
        if (self.kind is RuleKind.RANDOM_TABLE) != (self.seed is not None):
            raise ValueError("seed is required for random_table and forbidden otherwise")
        return self

    @property
    def name(self) -> str:
        if self.kind is RuleKind.RANDOM_TABLE:
            return f"random_table({self.seed})"
        return self.kind.value

    @classmethod
    def zero(cls) -> "UpdateRule":
        return cls(kind=RuleKind.ZERO)

    @classmethod
    def proof_rule(cls) -> "UpdateRule":
        return cls(kind=RuleKind.PROOF_RULE)

    @classmethod
    def random_table(cls, seed: int) -> "UpdateRule":
        return cls(kind=RuleKind.RANDOM_TABLE, seed=seed)

    @classmethod
    def parse(cls, text: str) -> "UpdateRule":
        """Разбор имени правила: zero, proof_rule или random_table(<seed>)."""
        text = text.strip()
        match = RULE_RE.match(text)
        if match:
            return cls.random_table(int(match.group(1)))
        if text in (RuleKind.ZERO.value, RuleKind.PROOF_RULE.value):
            return cls(kind=RuleKind(text))
        raise ValueError(f"Unknown update rule {text!r}")


class ReconstructionResult(BaseModel):
    """Восстановление V по окрестности опорной вершины."""

    anchor_row: int
    V_recovered: np.ndarray

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class UniqueIdsResult(BaseModel):
    """Идентификаторы вершин после одного шага EPNN."""

    unique: bool
    ids: List[int]

    model_config = ConfigDict(frozen=True)
