"""Синхронное уточнение раскрасок двух входов."""

from typing import Callable, Optional, TypeVar

from loguru import logger

from base.exceptions import DomainError
from base.utils import ColorRegistry
from refinement.domain.models import ColorState, SeparationOutcome, SeparationVerdict

S = TypeVar("S", bound=ColorState)


def readout(state: ColorState) -> int:
    """Глобальный цвет: идентификатор отсортированного мультимножества цветов."""
    return state.registry.assign([("readout", tuple(sorted(state.colors)))])[0]


def separated_at_start(rule: Optional[str] = None) -> SeparationVerdict:
    """Вердикт для входов, различимых до уточнения (n или λ не совпадают)."""
    return SeparationVerdict(
        outcome=SeparationOutcome.SEPARATED,
        round=0,
        rounds_run=0,
        color_class_counts=[],
        rule=rule,
    )


def validate_rounds(max_rounds: int) -> None:
    if max_rounds <= 0:
        raise DomainError(f"max_rounds must be positive, got {max_rounds}")


def refine_colors(colors, neighbourhoods, registry: ColorRegistry) -> tuple:
    """Новый цвет = (старый цвет, отсортированное мультимножество пар)."""
    keys = [("step", colors[i], tuple(sorted(neighbourhoods[i]))) for i in range(len(colors))]
    return tuple(registry.assign(keys))


def synchronized_refinement(
    state_a: S,
    state_b: S,
    advance_a: Callable[[S], S],
    advance_b: Callable[[S], S],
    max_rounds: int,
    features_moved: Callable[[S, S], bool] = lambda old, new: False,
    rule: Optional[str] = None,
) -> SeparationVerdict:
    """Раунды до различия глобальных цветов или стабилизации.

    Остановка без различия требует, чтобы общее число цветов двух входов
    не изменилось и векторные признаки (если есть) остались прежними.
    """
    counts = [state_a.class_count]

    def verdict(outcome: SeparationOutcome, rounds_run: int, at: Optional[int] = None) -> SeparationVerdict:
        return SeparationVerdict(
            outcome=outcome,
            round=at,
            rounds_run=rounds_run,
            color_class_counts=list(counts),
            rule=rule if outcome is SeparationOutcome.SEPARATED else None,
        )

    if readout(state_a) != readout(state_b):
        return verdict(SeparationOutcome.SEPARATED, 0, 0)

    joint = len(set(state_a.colors) | set(state_b.colors))
    for t in range(1, max_rounds + 1):
        next_a, next_b = advance_a(state_a), advance_b(state_b)
        counts.append(next_a.class_count)
        if readout(next_a) != readout(next_b):
            logger.debug(f"Readouts differ at round {t}")
            return verdict(SeparationOutcome.SEPARATED, t, t)
        next_joint = len(set(next_a.colors) | set(next_b.colors))
        moved = features_moved(state_a, next_a) or features_moved(state_b, next_b)
        state_a, state_b = next_a, next_b
        if next_joint == joint and not moved:
            return verdict(SeparationOutcome.INDISTINGUISHABLE, t)
        joint = next_joint
    return verdict(SeparationOutcome.INDISTINGUISHABLE, max_rounds)
