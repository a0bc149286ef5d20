"""Репозитории для чтения корпусов графов с файловой системы."""

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Tuple

from loguru import logger

from base.exceptions import AppException, DomainError, ParseError
from graphs.adapters.parsers import parse_edge_list, parse_json_graph
from graphs.domain.models import Graph

GRAPH_SUFFIXES = {".txt", ".edges", ".el", ".json"}


def read_text(path: Path) -> str:
    """Чтение файла в UTF-8 с переводом ошибок ОС в ParseError."""
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e


def parse_graph_file(path: Path) -> Graph:
    """Разбор одного файла графа по расширению."""
    text = read_text(path)
    if path.suffix == ".json":
        return parse_json_graph(text)
    return parse_edge_list(text)


class GraphAbstractRepository(ABC):
    """Абстракция репозитория для графов."""

    @abstractmethod
    def names(self) -> List[str]:
        """Получение имен графов в детерминированном порядке."""

    @abstractmethod
    def get(self, name: str) -> Graph:
        """Получение графа по имени."""

    def load_all(self, skip_errors: bool = False) -> Tuple[List[Tuple[str, Graph]], List[Tuple[str, str]]]:
        """Загрузка всех графов; ошибки либо собираются, либо пробрасываются."""
        graphs: List[Tuple[str, Graph]] = []
        errors: List[Tuple[str, str]] = []
        for name in self.names():
            try:
                graphs.append((name, self.get(name)))
            except AppException as e:
                logger.warning(f"Failed to load {name}: {e}")
                errors.append((name, str(e)))
        if errors and not skip_errors:
            listing = "; ".join(f"{name}: {detail}" for name, detail in errors)
            raise ParseError(f"{len(errors)} file(s) failed to load: {listing}")
        return graphs, errors


class FileSystemGraphRepository(GraphAbstractRepository):
    """Репозиторий графов в каталоге или в одном JSON-массиве."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self._array: List[dict] | None = None
        if not self.root.exists():
            raise DomainError(f"path does not exist: {self.root}")
        if self.root.is_file() and self.root.suffix == ".json":
            document = self._load_json(self.root)
            if isinstance(document, list):
                self._array = document

    @property
    def is_collection(self) -> bool:
        """Каталог или JSON-массив, а не один граф."""
        return self._array is not None or self.root.is_dir()

    @staticmethod
    def _load_json(path: Path):
        try:
            return json.loads(read_text(path))
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e.msg}", line=e.lineno) from e

    def names(self) -> List[str]:
        """Получение имен графов в детерминированном порядке."""
        if self._array is not None:
            return [f"{self.root.name}#{i}" for i in range(len(self._array))]
        if self.root.is_file():
            return [self.root.name]
        return sorted(
            p.name for p in self.root.iterdir() if p.is_file() and p.suffix in GRAPH_SUFFIXES
        )

    def get(self, name: str) -> Graph:
        """Получение графа по имени."""
        if self._array is not None:
            index = int(name.rsplit("#", 1)[1])
            return parse_json_graph(json.dumps(self._array[index]))
        if self.root.is_file():
            return parse_graph_file(self.root)
        return parse_graph_file(self.root / name)
