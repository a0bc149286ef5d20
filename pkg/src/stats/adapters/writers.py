"""Запись отчетов в CSV и JSON."""

import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from stats.domain.models import DatasetStatsReport, GraphSpectralStats


def report_frame(report: DatasetStatsReport) -> pd.DataFrame:
    """Таблица отчета: одна строка на статистику."""
    return pd.DataFrame([row.model_dump() for row in report.rows()], columns=["statistic", "value"])


def per_graph_frame(names: Sequence[str], stats: Sequence[GraphSpectralStats]) -> pd.DataFrame:
    """Таблица статистик по графам."""
    frame = pd.DataFrame([s.model_dump() for s in stats])
    frame.insert(0, "graph", list(names))
    return frame


def report_to_csv(
    report: DatasetStatsReport,
    names: Optional[Sequence[str]] = None,
    stats: Optional[Sequence[GraphSpectralStats]] = None,
) -> str:
    text = report_frame(report).to_csv(index=False, lineterminator="\n")
    if names is not None and stats is not None:
        text += "\n" + per_graph_frame(names, stats).to_csv(index=False, lineterminator="\n")
    return text


def report_to_dict(
    report: DatasetStatsReport,
    names: Optional[Sequence[str]] = None,
    stats: Optional[Sequence[GraphSpectralStats]] = None,
    errors: Optional[List[str]] = None,
) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"report": report.model_dump()}
    if names is not None and stats is not None:
        payload["graphs"] = [{"graph": name, **s.model_dump()} for name, s in zip(names, stats)]
    if errors:
        payload["errors"] = list(errors)
    return payload


def report_to_json(
    report: DatasetStatsReport,
    names: Optional[Sequence[str]] = None,
    stats: Optional[Sequence[GraphSpectralStats]] = None,
    errors: Optional[List[str]] = None,
) -> str:
    """JSON отчета с сортировкой ключей."""
    return json.dumps(report_to_dict(report, names, stats, errors), sort_keys=True, indent=2)
