"""Кастомные исключения приложения."""

from typing import Optional, Sequence


class AppException(Exception):
    """Базовое исключение приложения."""

    pass


class ParseError(AppException):
    """Ошибка разбора входного файла."""

    def __init__(self, detail: str, line: Optional[int] = None) -> None:
        """Инициализация исключения."""
        message = f"line {line}: {detail}" if line is not None else detail
        super().__init__(message)
        self.detail = detail
        self.line = line


class DomainError(AppException):
    """Нарушение предусловия операции."""

    pass


class KMismatchError(DomainError):
    """Спектральные пары имеют разное число собственных векторов."""

    pass


class NotSimpleError(AppException):
    """Выбранный блок спектра содержит кратное собственное значение."""

    def __init__(self, detail: str, indices: Sequence[int] = ()) -> None:
        """Инициализация исключения."""
        super().__init__(detail)
        self.detail = detail
        self.indices = list(indices)


class FailedPreconditionError(AppException):
    """Гипотеза теоремы не выполнена для входных данных."""

    pass


class ResourceLimitError(AppException):
    """Размер задачи превышает настроенный предел перебора."""

    pass


class NumericalError(AppException):
    """Численный метод не сошелся."""

    def __init__(self, detail: str, residual: float) -> None:
        """Инициализация исключения."""
        super().__init__(f"{detail} (residual={residual:.3e})")
        self.detail = detail
        self.residual = residual
