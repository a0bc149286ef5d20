"""EPNN как точный тест уточнения раскраски."""

from typing import List, Optional

import numpy as np
from loguru import logger

from base.config import get_max_rounds, get_quantizer_scale, get_zero_tol
from base.exceptions import DomainError, FailedPreconditionError, KMismatchError
from base.utils import ColorRegistry
from refinement.domain.models import (
    ColorState,
    QuantKey,
    Quantizer,
    ReconstructionResult,
    SeparationVerdict,
    UniqueIdsResult,
)
from refinement.services.driver import (
    readout,
    refine_colors,
    separated_at_start,
    synchronized_refinement,
    validate_rounds,
)
from spectral.domain.models import SpectralPair


def default_quantizer() -> Quantizer:
    """Квантователь с масштабом из настроек."""
    return Quantizer(scale=get_quantizer_scale())


def epnn_init(sp: SpectralPair, q: Optional[Quantizer] = None, registry: Optional[ColorRegistry] = None) -> ColorState:
    """Начальные цвета: (квантованный λ, квантованный V_i ⊙ V_i)."""
    q = q or default_quantizer()
    registry = registry if registry is not None else ColorRegistry()
    lam = q.key(sp.lambdas)
    colors = tuple(registry.assign([("init", lam, q.key(sp.V[i] * sp.V[i])) for i in range(sp.n)]))
    return ColorState(round=0, colors=colors, history=(colors,), registry=registry)


def _advance(state: ColorState, pair_keys: List[List[QuantKey]]) -> ColorState:
    neighbourhoods = [list(zip(state.colors, pair_keys[i])) for i in range(len(state.colors))]
    colors = refine_colors(state.colors, neighbourhoods, state.registry)
    return ColorState(
        round=state.round + 1,
        colors=colors,
        history=state.history + (colors,),
        registry=state.registry,
    )


def epnn_step(state: ColorState, sp: SpectralPair, q: Optional[Quantizer] = None) -> ColorState:
    """Один раунд уточнения по произведениям V_i ⊙ V_j для всех j."""
    if len(state.colors) != sp.n:
        raise DomainError(f"State has {len(state.colors)} nodes but spectral pair has {sp.n}")
    q = q or default_quantizer()
    return _advance(state, q.pairwise_keys(sp.V))


def epnn_readout(state: ColorState) -> int:
    """Глобальный цвет, инвариантный к перестановке вершин.

    Идентификатор выдается реестром state.registry, поэтому readout двух
    состояний сравним только если они построены с общим ColorRegistry
    (epnn_init(..., registry=...)). Для сравнения графов служит epnn_distinguish.
    """
    return readout(state)


def check_comparable(a: SpectralPair, b: SpectralPair) -> None:
    """Входы должны иметь одинаковое K."""
    if a.k != b.k:
        raise KMismatchError(f"Spectral pairs have different K: {a.k} != {b.k}")


def starts_separated(a: SpectralPair, b: SpectralPair, q: Quantizer) -> bool:
    """Различие по n или по квантованным собственным значениям."""
    return a.n != b.n or q.key(a.lambdas) != q.key(b.lambdas)


def epnn_distinguish(
    a: SpectralPair,
    b: SpectralPair,
    max_rounds: Optional[int] = None,
    q: Optional[Quantizer] = None,
) -> SeparationVerdict:
    """Синхронное уточнение двух спектральных пар."""
    max_rounds = get_max_rounds() if max_rounds is None else max_rounds
    validate_rounds(max_rounds)
    check_comparable(a, b)
    q = q or default_quantizer()
    if starts_separated(a, b, q):
        return separated_at_start()

    registry = ColorRegistry()
    keys_a, keys_b = q.pairwise_keys(a.V), q.pairwise_keys(b.V)
    verdict = synchronized_refinement(
        epnn_init(a, q, registry),
        epnn_init(b, q, registry),
        lambda s: _advance(s, keys_a),
        lambda s: _advance(s, keys_b),
        max_rounds,
    )
    logger.info(f"EPNN verdict: {verdict.outcome.value} after {verdict.rounds_run} rounds")
    return verdict


def find_zero_free_row(V: np.ndarray, zero_tol: float) -> Optional[int]:
    """Первая строка без нулевых элементов."""
    dense = np.all(np.abs(V) > zero_tol, axis=1)
    hits = np.flatnonzero(dense)
    return int(hits[0]) if hits.size else None


def reconstruct_from_purview(sp: SpectralPair, zero_tol: Optional[float] = None) -> ReconstructionResult:
    """Восстановление V по окрестности вершины без нулей.

    Строка j восстанавливается как (V_a ⊙ V_j) / |V_a|, поэтому результат
    не зависит от знаков столбцов, а опорная строка положительна.
    """
    zero_tol = get_zero_tol() if zero_tol is None else zero_tol
    anchor = find_zero_free_row(sp.V, zero_tol)
    if anchor is None:
        raise FailedPreconditionError("No row of V is free of zero entries")
    products = sp.V[anchor] * sp.V
    magnitude = np.sqrt(sp.V[anchor] * sp.V[anchor])
    return ReconstructionResult(anchor_row=anchor, V_recovered=products / magnitude)


def unique_node_ids(
    sp: SpectralPair,
    q: Optional[Quantizer] = None,
    registry: Optional[ColorRegistry] = None,
) -> UniqueIdsResult:
    """Цвета после ровно одного шага EPNN.

    ids сравнимы между собой внутри одного вызова. Между разными парами они
    сравнимы только при общем registry, иначе равные числа ничего не значат.
    """
    q = q or default_quantizer()
    state = epnn_step(epnn_init(sp, q, registry), sp, q)
    return UniqueIdsResult(unique=len(set(state.colors)) == sp.n, ids=list(state.colors))
