"""Утилиты: реестр цветов, детерминированные хэши и настройка логирования."""

import hashlib
import sys
from typing import Dict, Hashable, List, Optional, Sequence

from loguru import logger


class ColorRegistry:
    """Реестр канонических идентификаторов цветов.

    Идентификатор выдается по полному ключу, поэтому коллизии невозможны.
    Новые ключи одного вызова ``assign`` нумеруются в отсортированном
    порядке, и результат не зависит от порядка вершин.
    """

    def __init__(self) -> None:
        """Инициализация пустого реестра."""
        self._ids: Dict[Hashable, int] = {}

    def __len__(self) -> int:
        return len(self._ids)

    def assign(self, keys: Sequence[Hashable]) -> List[int]:
        """Получение идентификаторов для последовательности ключей."""
        fresh = sorted({key for key in keys if key not in self._ids})
        for key in fresh:
            self._ids[key] = len(self._ids)
        return [self._ids[key] for key in keys]

    def lookup(self, key: Hashable) -> Optional[int]:
        """Получение идентификатора без регистрации."""
        return self._ids.get(key)


def stable_digest(payload: object, digest_size: int = 16) -> bytes:
    """Детерминированный хэш repr-представления объекта."""
    return hashlib.blake2b(repr(payload).encode("utf-8"), digest_size=digest_size).digest()


def digest_words(payload: object) -> List[int]:
    """Разбиение хэша на 32-битные слова для SeedSequence."""
    digest = stable_digest(payload)
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, len(digest), 4)]


def percentage(count: int, total: int) -> float:
    """Процент от общего количества."""
    if total == 0:
        return 0.0
    return 100.0 * count / total


def setup_logging(level: str = "WARNING") -> None:
    """Настройка loguru: один sink в stderr с заданным уровнем."""
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="{time:HH:mm:ss} | {level: <8} | {name}:{function} - {message}",
    )
