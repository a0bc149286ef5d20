"""Эквивариантный EPNN: цвета вершин и знако-эквивариантные векторы."""

import math
from typing import List, Optional, Sequence

import numpy as np
from loguru import logger

from base.config import get_max_rounds
from base.exceptions import DomainError
from base.utils import ColorRegistry
from refinement.domain.models import (
    EquiState,
    NodeInvariant,
    Quantizer,
    SeparationOutcome,
    SeparationVerdict,
    UpdateRule,
)
from refinement.services.driver import (
    refine_colors,
    separated_at_start,
    synchronized_refinement,
    validate_rounds,
)
from refinement.services.epnn import check_comparable, default_quantizer, epnn_init, starts_separated
from refinement.services.update_rules import UpdateFn, build_update
from spectral.domain.models import SpectralPair


def equi_init(sp: SpectralPair, q: Optional[Quantizer] = None, registry: Optional[ColorRegistry] = None) -> EquiState:
    """Цвета как в EPNN, признаки равны V."""
    state = epnn_init(sp, q, registry)
    return EquiState(
        round=0,
        colors=state.colors,
        history=state.history,
        registry=state.registry,
        vecs=sp.V,
    )


def _advance(state: EquiState, update: UpdateFn, q: Quantizer) -> EquiState:
    vecs = state.vecs
    n = vecs.shape[0]
    pair_keys = q.pairwise_keys(vecs)
    colors = refine_colors(
        state.colors,
        [list(zip(state.colors, pair_keys[i])) for i in range(n)],
        state.registry,
    )

    invariants = [NodeInvariant(state.colors[i], pair_keys[i][i]) for i in range(n)]
    new_vecs = vecs.copy()
    for i in range(n):
        contributions: List[np.ndarray] = []
        for j in range(n):
            value = update(state.round, invariants[i], invariants[j], pair_keys[i][j])
            if value is not None:
                contributions.append(vecs[j] * value)
        if contributions:
            # fsum не зависит от порядка слагаемых и симметричен по знаку
            stacked = np.array(contributions)
            new_vecs[i] = vecs[i] + np.array([math.fsum(col) for col in stacked.T])

    return EquiState(
        round=state.round + 1,
        colors=colors,
        history=state.history + (colors,),
        registry=state.registry,
        vecs=new_vecs,
    )


def equi_step(
    state: EquiState,
    sp: SpectralPair,
    rule: UpdateRule,
    q: Optional[Quantizer] = None,
    update: Optional[UpdateFn] = None,
) -> EquiState:
    """Один раунд: цвета по текущим признакам, затем обновление признаков."""
    if state.vecs.shape != (sp.n, sp.k):
        raise DomainError(f"State features have shape {state.vecs.shape}, expected ({sp.n}, {sp.k})")
    q = q or default_quantizer()
    return _advance(state, update or build_update(rule, sp.k, q), q)


def run_equi(sp: SpectralPair, rule: UpdateRule, rounds: int, q: Optional[Quantizer] = None) -> EquiState:
    """Несколько раундов с одной таблицей правила."""
    q = q or default_quantizer()
    update = build_update(rule, sp.k, q)
    state = equi_init(sp, q)
    for _ in range(rounds):
        state = _advance(state, update, q)
    return state


def _features_moved(old: EquiState, new: EquiState) -> bool:
    return not np.array_equal(old.vecs, new.vecs)


def equi_distinguish(
    a: SpectralPair,
    b: SpectralPair,
    rules: Sequence[UpdateRule],
    max_rounds: Optional[int] = None,
    q: Optional[Quantizer] = None,
) -> SeparationVerdict:
    """Различение с набором правил: достаточно, чтобы различило одно."""
    if not rules:
        raise DomainError("At least one update rule is required")
    max_rounds = get_max_rounds() if max_rounds is None else max_rounds
    validate_rounds(max_rounds)
    check_comparable(a, b)
    q = q or default_quantizer()
    if starts_separated(a, b, q):
        return separated_at_start(rules[0].name)

    last: Optional[SeparationVerdict] = None
    for rule in rules:
        registry = ColorRegistry()
        # одна таблица на оба входа, иначе сравнение теряет смысл
        update = build_update(rule, a.k, q)
        verdict = synchronized_refinement(
            equi_init(a, q, registry),
            equi_init(b, q, registry),
            lambda s: _advance(s, update, q),
            lambda s: _advance(s, update, q),
            max_rounds,
            features_moved=_features_moved,
            rule=rule.name,
        )
        logger.info(f"equiEPNN rule {rule.name}: {verdict.outcome.value} after {verdict.rounds_run} rounds")
        if verdict.outcome is SeparationOutcome.SEPARATED:
            return verdict
        if last is None or verdict.rounds_run > last.rounds_run:
            last = verdict
    assert last is not None
    return last
