"""Конфигурация тестов."""

import json
import os
import warnings
from pathlib import Path
from typing import Callable, Tuple

import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from loguru import logger

# Тестовые настройки не должны зависеть от окружения разработчика
os.environ.setdefault("SPECTRALWL_WORKERS", "1")
os.environ.setdefault("SPECTRALWL_LOG_LEVEL", "WARNING")

warnings.filterwarnings("ignore", category=DeprecationWarning, module="networkx.*")

settings.register_profile(
    "spectralwl",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
settings.load_profile("spectralwl")

from counterexamples.services.services import (  # noqa: E402
    gen_epnn_counterexample,
    gen_orthonormal_counterexample,
    gen_twisted_counterexample,
)
from graphs.domain.models import Graph  # noqa: E402
from oracle.domain.models import SignedPermutation  # noqa: E402
from spectral.domain.models import SpectralPair  # noqa: E402

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
SMOKE_CORPUS_DIR = TESTS_DIR.parent.parent / "data" / "smoke_corpus"


@pytest.fixture(autouse=True)
def reset_logging():
    """Удаление sink'ов loguru, привязанных к перехваченным потокам."""
    yield
    logger.remove()


# =============================================================================
# GRAPHS
# =============================================================================


def from_networkx(nxg: nx.Graph) -> Graph:
    nodes = {node: i for i, node in enumerate(sorted(nxg.nodes))}
    return Graph(n=len(nodes), edges=frozenset((nodes[u], nodes[v]) for u, v in nxg.edges))


@pytest.fixture
def to_graph() -> Callable[[nx.Graph], Graph]:
    """Преобразование графа networkx в Graph."""
    return from_networkx


@pytest.fixture
def p2() -> Graph:
    """Путь на двух вершинах."""
    return from_networkx(nx.path_graph(2))


@pytest.fixture
def p3() -> Graph:
    """Путь на трех вершинах."""
    return from_networkx(nx.path_graph(3))


@pytest.fixture
def p4() -> Graph:
    """Путь на четырех вершинах."""
    return from_networkx(nx.path_graph(4))


@pytest.fixture
def c4() -> Graph:
    """Цикл на четырех вершинах."""
    return from_networkx(nx.cycle_graph(4))


@pytest.fixture
def k4() -> Graph:
    """Полный граф на четырех вершинах."""
    return from_networkx(nx.complete_graph(4))


@pytest.fixture
def random_graph() -> Callable[[np.random.Generator, int, float], Graph]:
    """Фабрика случайных графов G(n, p)."""

    def build(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
        edges = frozenset((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p)
        return Graph(n=n, edges=edges)

    return build


# =============================================================================
# SPECTRAL PAIRS
# =============================================================================


@pytest.fixture
def random_pair() -> Callable[..., SpectralPair]:
    """Фабрика случайных спектральных пар с плотной матрицей V."""

    def build(rng: np.random.Generator, n: int, k: int) -> SpectralPair:
        V = rng.normal(size=(n, k))
        lambdas = np.sort(rng.uniform(0.5, 10.0, size=k))[::-1]
        lambdas = lambdas + np.arange(k, 0, -1) * 1e-2
        return SpectralPair.from_arrays(V, lambdas)

    return build


@pytest.fixture
def random_signed_permutation() -> Callable[[np.random.Generator, int, int], SignedPermutation]:
    """Фабрика случайных элементов S_n × {±1}^K."""

    def build(rng: np.random.Generator, n: int, k: int) -> SignedPermutation:
        return SignedPermutation(
            perm=[int(x) for x in rng.permutation(n)],
            signs=[int(x) for x in rng.choice([-1, 1], size=k)],
        )

    return build


@pytest.fixture(scope="session")
def epnn_pair() -> Tuple[SpectralPair, SpectralPair]:
    """Пара (U, V) из z-блоков."""
    return gen_epnn_counterexample()


@pytest.fixture(scope="session")
def twisted_pair() -> Tuple[SpectralPair, SpectralPair]:
    """Скрученная неизоморфная пара."""
    return gen_twisted_counterexample()


@pytest.fixture(scope="session")
def orthonormal_pair() -> Tuple[SpectralPair, SpectralPair]:
    """Пара (Ũ, Ṽ) с ортонормированными столбцами."""
    return gen_orthonormal_counterexample()


# =============================================================================
# FILES
# =============================================================================


@pytest.fixture
def smoke_corpus_dir() -> Path:
    """Каталог со встроенным корпусом из десяти графов."""
    return SMOKE_CORPUS_DIR


@pytest.fixture
def golden() -> Callable[[str], dict]:
    """Загрузка эталонного JSON из tests/data."""

    def load(name: str) -> dict:
        return json.loads((DATA_DIR / name).read_text(encoding="utf-8"))

    return load


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Запись текстового файла во временный каталог."""

    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    return write
