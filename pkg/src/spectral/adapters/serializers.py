"""JSON-сериализация спектральных пар."""

import json
from typing import Any, Optional

from pydantic import ValidationError

from base.exceptions import DomainError, ParseError
from spectral.domain.models import SpectralPair


def spectral_pair_to_dict(sp: SpectralPair) -> dict:
    """Словарь {"n", "k", "lambdas", "V"} с построчной матрицей V."""
    return {"n": sp.n, "k": sp.k, "lambdas": sp.lambdas.tolist(), "V": sp.V.tolist()}


def serialize_spectral_pair(sp: SpectralPair) -> str:
    """Сериализация пары в JSON."""
    return json.dumps(spectral_pair_to_dict(sp))


def spectral_pair_from_dict(document: Any, eig_tol: Optional[float] = None) -> SpectralPair:
    """Построение пары из разобранного JSON-объекта; разрывы λ проверяются при eig_tol."""
    if not isinstance(document, dict) or "V" not in document or "lambdas" not in document:
        raise ParseError("spectral pair must be an object with 'lambdas' and 'V'")
    try:
        return SpectralPair.from_arrays(document["V"], document["lambdas"], eig_tol=eig_tol)
    except (ValidationError, ValueError) as e:
        raise DomainError(f"Invalid spectral pair: {e}") from e


def parse_spectral_pair(text: str, eig_tol: Optional[float] = None) -> SpectralPair:
    """Разбор JSON-текста спектральной пары."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from e
    return spectral_pair_from_dict(document, eig_tol)


def is_spectral_pair_document(document: Any) -> bool:
    """JSON-объект похож на спектральную пару."""
    return isinstance(document, dict) and "V" in document and "lambdas" in document
