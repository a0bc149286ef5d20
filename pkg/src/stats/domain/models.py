"""Доменные модели спектральной статистики графов."""

from typing import List

from pydantic import BaseModel, ConfigDict, model_validator


class GraphSpectralStats(BaseModel):
    """Статистика одного графа по собственным векторам лапласиана."""

    n: int
    has_distinct: bool
    has_mult2: bool
    has_mult3: bool
    count_mult2: int
    count_mult3: int
    num_zeros: int
    ratio_zeros: float
    has_full_row: bool
    le_one_zero_per_vec: bool
    zeros_lt_vertices: bool
    any_condition: bool

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_consistency(self) -> "GraphSpectralStats":
        """Согласованность производных признаков."""
        if self.zeros_lt_vertices != (self.num_zeros < self.n):
            raise ValueError("zeros_lt_vertices must equal num_zeros < n")
        if self.any_condition != (self.has_full_row or self.le_one_zero_per_vec or self.zeros_lt_vertices):
            raise ValueError("any_condition must be the disjunction of the three conditions")
        if self.has_distinct and (self.count_mult2 or self.count_mult3):
            raise ValueError("Graph with distinct eigenvalues has repeated groups")
        return self


class StatisticRow(BaseModel):
    """Строка итоговой таблицы."""

    statistic: str
    value: float

    model_config = ConfigDict(frozen=True)


class DatasetStatsReport(BaseModel):
    """Агрегаты по корпусу: проценты графов с признаком и средние значения."""

    graph_count: int
    pct_distinct: float
    pct_mult2: float
    pct_mult3: float
    avg_count_mult2: float
    avg_count_mult3: float
    avg_num_zeros: float
    avg_ratio_zeros: float
    pct_full_row: float
    pct_le_one_zero_per_vec: float
    pct_zeros_lt_vertices: float
    pct_any_condition: float
    avg_nodes: float

    model_config = ConfigDict(frozen=True)

    def rows(self) -> List[StatisticRow]:
        """Строки отчета в фиксированном порядке."""
        labels = (
            ("Graphs", self.graph_count),
            ("Average Nodes", self.avg_nodes),
            ("Graphs with Distinct Eigenvalues (%)", self.pct_distinct),
            ("Graphs with Multiplicity 2 Eigenvalues (%)", self.pct_mult2),
            ("Graphs with Multiplicity 3 Eigenvalues (%)", self.pct_mult3),
            ("Average Count of Multiplicity 2 Eigenvalues", self.avg_count_mult2),
            ("Average Count of Multiplicity 3 Eigenvalues", self.avg_count_mult3),
            ("Average Number of Zeros", self.avg_num_zeros),
            ("Average Ratio of Zeros", self.avg_ratio_zeros),
            ("Graphs with a Full Row (%)", self.pct_full_row),
            ("Graphs with at Most One Zero per Eigenvector (%)", self.pct_le_one_zero_per_vec),
            ("Graphs with Fewer Zeros than Vertices (%)", self.pct_zeros_lt_vertices),
            ("Graphs Meeting Any Condition (%)", self.pct_any_condition),
        )
        return [StatisticRow(statistic=label, value=float(value)) for label, value in labels]
