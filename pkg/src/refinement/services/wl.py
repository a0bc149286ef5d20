"""Классическое 1-WL уточнение по смежности, базовая линия сравнения."""

from typing import List, Optional

from base.config import get_max_rounds
from base.utils import ColorRegistry
from graphs.domain.models import Graph
from refinement.domain.models import ColorState, SeparationVerdict
from refinement.services.driver import (
    refine_colors,
    separated_at_start,
    synchronized_refinement,
    validate_rounds,
)


def _neighbours(g: Graph) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def wl_init(g: Graph, registry: Optional[ColorRegistry] = None) -> ColorState:
    """Одинаковый начальный цвет для всех вершин."""
    registry = registry if registry is not None else ColorRegistry()
    colors = tuple(registry.assign([("wl-init",)] * g.n))
    return ColorState(round=0, colors=colors, history=(colors,), registry=registry)


def wl_step(state: ColorState, g: Graph) -> ColorState:
    """Новый цвет = (старый цвет, мультимножество цветов соседей)."""
    adj = _neighbours(g)
    neighbourhoods = [[state.colors[j] for j in adj[i]] for i in range(g.n)]
    colors = refine_colors(state.colors, neighbourhoods, state.registry)
    return ColorState(
        round=state.round + 1,
        colors=colors,
        history=state.history + (colors,),
        registry=state.registry,
    )


def wl_distinguish(g1: Graph, g2: Graph, max_rounds: Optional[int] = None) -> SeparationVerdict:
    """Синхронное 1-WL уточнение двух графов."""
    max_rounds = get_max_rounds() if max_rounds is None else max_rounds
    validate_rounds(max_rounds)
    if g1.n != g2.n:
        return separated_at_start()
    registry = ColorRegistry()
    return synchronized_refinement(
        wl_init(g1, registry),
        wl_init(g2, registry),
        lambda s: wl_step(s, g1),
        lambda s: wl_step(s, g2),
        max_rounds,
    )
