"""Обработчики исключений для CLI."""

import json
import sys
from typing import Dict, TextIO, Tuple, Type

from loguru import logger

from .exceptions import (
    AppException,
    DomainError,
    FailedPreconditionError,
    KMismatchError,
    NotSimpleError,
    NumericalError,
    ParseError,
    ResourceLimitError,
)

# Более специфичные классы идут раньше базовых
EXIT_CODES: Dict[Type[AppException], Tuple[int, str]] = {
    KMismatchError: (3, "k_mismatch"),
    ParseError: (2, "parse_error"),
    DomainError: (2, "domain_error"),
    ResourceLimitError: (4, "resource_limit"),
    NumericalError: (5, "numerical_error"),
    NotSimpleError: (6, "not_simple"),
    FailedPreconditionError: (7, "failed_precondition"),
    AppException: (2, "app_error"),
}


def resolve_exit_code(exc: AppException) -> Tuple[int, str]:
    """Получение кода выхода и типа ошибки для исключения."""
    for exc_type, (code, name) in EXIT_CODES.items():
        if isinstance(exc, exc_type):
            return code, name
    return 2, "app_error"


def handle_app_exception(exc: AppException, stream: TextIO = sys.stderr) -> int:
    """Печать ошибки в stderr и возврат кода выхода."""
    code, name = resolve_exit_code(exc)
    logger.debug(f"Command failed with {name}: {exc}")
    stream.write(json.dumps({"detail": str(exc), "type": name}) + "\n")
    return code
