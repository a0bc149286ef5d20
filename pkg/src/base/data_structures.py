"""Структуры данных для приложения."""

from typing import Any, List

from pydantic import BaseModel, field_validator

from base.config import OutputFormat, Settings, get_settings


class RunConfig(BaseModel):
    """Параметры запуска команды CLI."""

    eig_tol: float
    zero_tol: float
    sum_tol: float
    oracle_tol: float
    quantizer_scale: float
    max_rounds: int
    seeds: List[int]
    workers: int
    output_format: OutputFormat = OutputFormat.JSON
    oracle_max_nodes: int = 24
    matrix_oracle_max_nodes: int = 10

    model_config = {"frozen": True}

    @field_validator("eig_tol", "zero_tol", "sum_tol", "oracle_tol", "quantizer_scale")
    @classmethod
    def validate_positive(cls, v: float) -> float:
        """Валидация положительных допусков."""
        if v <= 0:
            raise ValueError("Tolerances and scale must be positive")
        return v

    @field_validator("workers", "max_rounds")
    @classmethod
    def validate_at_least_one(cls, v: int) -> int:
        """Валидация счетчиков."""
        if v < 1:
            raise ValueError("Value must be at least 1")
        return v

    @classmethod
    def from_settings(cls, settings: Settings | None = None, **overrides: Any) -> "RunConfig":
        """Создание конфигурации из настроек с переопределением флагами."""
        settings = settings or get_settings()
        values = {
            "eig_tol": settings.eig_tol,
            "zero_tol": settings.zero_tol,
            "sum_tol": settings.sum_tol,
            "oracle_tol": settings.oracle_tol,
            "quantizer_scale": settings.quantizer_scale,
            "max_rounds": settings.max_rounds,
            "seeds": list(settings.seeds),
            "workers": settings.workers,
            "output_format": settings.output_format,
            "oracle_max_nodes": settings.oracle_max_nodes,
            "matrix_oracle_max_nodes": settings.matrix_oracle_max_nodes,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
