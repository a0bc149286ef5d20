"""Конфигурация приложения."""

from enum import Enum
from typing import List

from pydantic_settings import BaseSettings


class OutputFormat(Enum):
    """Форматы вывода отчетов."""

    JSON = "json"
    CSV = "csv"


class Settings(BaseSettings):
    """Настройки приложения."""

    # Tolerances
    eig_tol: float = 1e-4
    zero_tol: float = 1e-6
    sum_tol: float = 1e-7
    oracle_tol: float = 1e-6

    # Refinement
    quantizer_scale: float = 1e8
    max_rounds: int = 20
    seeds: List[int] = [1, 2, 3]

    # Oracle limits
    oracle_max_nodes: int = 24
    matrix_oracle_max_nodes: int = 10

    # Eigensolver
    jacobi_tol: float = 1e-12
    jacobi_max_sweeps: int = 100

    # Runtime
    workers: int = 1
    log_level: str = "WARNING"
    output_format: str = OutputFormat.JSON.value

    model_config = {"env_file": ".env", "env_prefix": "SPECTRALWL_", "extra": "ignore"}


_settings = Settings()


def get_settings() -> Settings:
    """Получение настроек."""
    return _settings


def get_eig_tol() -> float:
    """Получение допуска для группировки собственных значений."""
    return _settings.eig_tol


def get_zero_tol() -> float:
    """Получение допуска для нулевых компонент собственных векторов."""
    return _settings.zero_tol


def get_sum_tol() -> float:
    """Получение допуска для нулевой суммы столбца."""
    return _settings.sum_tol


def get_oracle_tol() -> float:
    """Получение допуска сравнения элементов в оракуле."""
    return _settings.oracle_tol


def get_quantizer_scale() -> float:
    """Получение масштаба квантования."""
    return _settings.quantizer_scale


def get_max_rounds() -> int:
    """Получение максимального числа раундов уточнения."""
    return _settings.max_rounds


def get_seeds() -> List[int]:
    """Получение списка seed для случайных правил."""
    return list(_settings.seeds)


def get_oracle_max_nodes() -> int:
    """Получение предела размера для оракула изоморфизма."""
    return _settings.oracle_max_nodes


def get_matrix_oracle_max_nodes() -> int:
    """Получение предела размера для перебора перестановок матриц."""
    return _settings.matrix_oracle_max_nodes


def get_jacobi_tol() -> float:
    """Получение порога сходимости метода Якоби."""
    return _settings.jacobi_tol


def get_jacobi_max_sweeps() -> int:
    """Получение максимального числа проходов метода Якоби."""
    return _settings.jacobi_max_sweeps


def get_workers() -> int:
    """Получение размера пула воркеров."""
    return _settings.workers


def get_log_level() -> str:
    """Получение уровня логирования."""
    return _settings.log_level
