"""Разбор и сериализация файлов графов и матриц."""

import json
import re
from typing import Any, List, Optional, Tuple

from pydantic import ValidationError

from base.exceptions import DomainError, ParseError
from graphs.domain.models import Graph, GraphFormat, SymmetricMatrix

HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")


def _build_graph(n: int, edges: List[Tuple[int, int]]) -> Graph:
    try:
        return Graph(n=n, edges=frozenset(edges))
    except ValidationError as e:
        raise DomainError(f"Invalid graph: {e.errors()[0]['msg']}") from e


def _check_edge(u: int, v: int, line: Optional[int]) -> None:
    where = f"line {line}: " if line is not None else ""
    if u < 0 or v < 0:
        raise DomainError(f"{where}negative node index in edge ({u}, {v})")
    if u == v:
        raise DomainError(f"{where}self-loop at node {u}")


def _resolve_n(declared: Optional[int], edges: List[Tuple[int, int]]) -> int:
    needed = max((max(e) for e in edges), default=-1) + 1
    if declared is None:
        if needed == 0:
            raise ParseError("no nodes declared and no edges found")
        return needed
    if declared < needed:
        raise DomainError(f"declared n={declared} but edges reference node {needed - 1}")
    return declared


def parse_edge_list(text: str) -> Graph:
    """Разбор формата "<u> <v>" построчно."""
    declared: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = HEADER_RE.match(line)
        if header and not seen_content:
            declared = int(header.group(1))
            seen_content = True
            continue
        seen_content = True
        tokens = line.split()
        if len(tokens) == 3:
            raise ParseError("weighted edges are not supported", line=lineno)
        if len(tokens) != 2:
            raise ParseError(f"expected '<u> <v>', got {line!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node index in {line!r}", line=lineno)
        _check_edge(u, v, lineno)
        edges.append((u, v))
    return _build_graph(_resolve_n(declared, edges), edges)


def _load_json_object(text: str) -> dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from e
    if not isinstance(document, dict):
        raise ParseError("JSON document must be an object")
    return document


def _graph_from_document(document: dict) -> Graph:
    raw_edges = document.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be an array")
    edges: List[Tuple[int, int]] = []
    for item in raw_edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise ParseError(f"edge must be a 2-element integer array, got {item!r}")
        _check_edge(item[0], item[1], None)
        edges.append((item[0], item[1]))
    declared = document.get("n")
    if declared is not None and (not isinstance(declared, int) or declared < 1):
        raise ParseError(f"'n' must be a positive integer, got {declared!r}")
    return _build_graph(_resolve_n(declared, edges), edges)


def parse_json_graph(text: str) -> Graph:
    """Разбор JSON-объекта {"n": ..., "edges": [[u, v], ...]}."""
    document = _load_json_object(text)
    if "matrix" in document:
        raise DomainError("document holds a matrix, not a graph")
    return _graph_from_document(document)


def parse_graph(text: str, format: GraphFormat | str) -> Graph:
    """Разбор графа в одном из поддерживаемых форматов."""
    fmt = GraphFormat(format)
    if fmt is GraphFormat.EDGE_LIST:
        return parse_edge_list(text)
    return parse_json_graph(text)


def matrix_from_document(document: dict) -> SymmetricMatrix:
    """Построение симметричной матрицы из JSON-объекта с полем "matrix"."""
    rows = document.get("matrix")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("'matrix' must be a non-empty array of rows")
    try:
        return SymmetricMatrix(n=len(rows), entries=rows)
    except (ValidationError, ValueError) as e:
        raise DomainError(f"Invalid matrix: {e}") from e


def parse_matrix(text: str) -> SymmetricMatrix:
    """Разбор JSON-объекта {"matrix": [[...], ...]}."""
    return matrix_from_document(_load_json_object(text))


def parse_json_document(text: str) -> Any:
    """Разбор JSON-документа с графом или матрицей."""
    document = _load_json_object(text)
    if "matrix" in document:
        return matrix_from_document(document)
    return _graph_from_document(document)


def serialize_graph(g: Graph, format: GraphFormat | str) -> str:
    """Сериализация графа: ребра в отсортированном порядке."""
    fmt = GraphFormat(format)
    if fmt is GraphFormat.JSON_GRAPH:
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges]})
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def serialize_matrix(m: SymmetricMatrix) -> str:
    """Сериализация матрицы в JSON."""
    return json.dumps({"n": m.n, "matrix": m.entries.tolist()})
