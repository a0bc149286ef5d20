"""Эквивариантные правила обновления векторных признаков."""

from typing import Callable, Dict, Optional, Tuple

import numpy as np

from base.utils import digest_words
from refinement.domain.models import NodeInvariant, QuantKey, Quantizer, RuleKind, UpdateRule

UpdateFn = Callable[[int, NodeInvariant, NodeInvariant, QuantKey], Optional[np.ndarray]]


class ZeroUpdate:
    """UPDATE ≡ 0: признаки не меняются."""

    def __call__(self, t: int, hi: NodeInvariant, hj: NodeInvariant, prod: QuantKey) -> Optional[np.ndarray]:
        return None


class ProofRuleUpdate:
    """Правило, заполняющее первые две координаты вершин второго блока.

    Срабатывает только на первом шаге и только на тройке
    (v⊙v второго блока, v⊙v первого блока, их произведение).
    """

    def __init__(self, k: int, q: Quantizer) -> None:
        self.active = k == 6
        self.square_i = q.key((0, 0, 1, 1, 1, 1))
        self.square_j = q.key((1, 1, 1, 1, 0, 0))
        self.product = q.key((0, 0, 1, 1, 0, 0))
        self.output = np.array([1.0, 1.0, 0.0, 0.0, 0.0, 0.0])

    def __call__(self, t: int, hi: NodeInvariant, hj: NodeInvariant, prod: QuantKey) -> Optional[np.ndarray]:
        if (
            self.active
            and t == 0
            and hi.square == self.square_i
            and hj.square == self.square_j
            and prod == self.product
        ):
            return self.output
        return None


class RandomTableUpdate:
    """Детерминированная случайная таблица значений из [-1, 1]^K."""

    def __init__(self, seed: int, k: int) -> None:
        self.seed = seed
        self.k = k
        self._table: Dict[Tuple, np.ndarray] = {}

    def __call__(self, t: int, hi: NodeInvariant, hj: NodeInvariant, prod: QuantKey) -> Optional[np.ndarray]:
        key = (hi.color, hi.square, hj.color, hj.square, prod)
        value = self._table.get(key)
        if value is None:
            rng = np.random.default_rng([self.seed % 2**32, *digest_words(key)])
            value = rng.uniform(-1.0, 1.0, self.k)
            self._table[key] = value
        return value


def build_update(rule: UpdateRule, k: int, q: Quantizer) -> UpdateFn:
    """Создание функции обновления по описанию правила."""
    if rule.kind is RuleKind.ZERO:
        return ZeroUpdate()
    if rule.kind is RuleKind.PROOF_RULE:
        return ProofRuleUpdate(k, q)
    assert rule.seed is not None
    return RandomTableUpdate(rule.seed, k)
