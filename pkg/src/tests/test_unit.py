"""Unit тесты для всех компонентов проекта."""

import argparse
import io
import json

import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from base.config import OutputFormat, Settings, get_settings
from base.data_structures import RunConfig
from base.dependencies import build_run_config, load_document, to_spectral_pair
from base.exception_handlers import handle_app_exception, resolve_exit_code
from base.exceptions import (
    AppException,
    DomainError,
    FailedPreconditionError,
    KMismatchError,
    NotSimpleError,
    NumericalError,
    ParseError,
    ResourceLimitError,
)
from base.utils import ColorRegistry, digest_words, percentage, stable_digest
from canonical.domain.models import CanonReport
from counterexamples.domain.models import O2, OGEReport, Z0, Z1, Z2, Z3
from graphs.adapters.parsers import (
    parse_edge_list,
    parse_graph,
    parse_json_document,
    parse_json_graph,
    serialize_graph,
    serialize_matrix,
)
from graphs.adapters.repositories import FileSystemGraphRepository
from graphs.domain.models import Graph, GraphFormat, SymmetricMatrix
from graphs.services.services import adjacency, conjugate, laplacian, normalized_laplacian, relabel
from oracle.domain.models import SignedPermutation
from refinement.domain.models import (
    Quantizer,
    RuleKind,
    SeparationOutcome,
    SeparationVerdict,
    UpdateRule,
)
from refinement.services.epnn import epnn_init, epnn_readout, unique_node_ids
from spectral.adapters.serializers import parse_spectral_pair, serialize_spectral_pair
from spectral.domain.models import EigenvalueGroup, SpectralPair
from spectral.services.eigensolver import eigendecompose
from spectral.services.services import group_eigenvalues, is_simple_spectrum, spectral_pair_from_graph, truncate
from stats.adapters.writers import report_to_csv, report_to_json
from stats.domain.models import DatasetStatsReport, GraphSpectralStats


def _namespace(**overrides) -> argparse.Namespace:
    values = {
        "eig_tol": None,
        "zero_tol": None,
        "sum_tol": None,
        "oracle_tol": None,
        "quantizer_scale": None,
        "max_rounds": None,
        "seeds": None,
        "workers": None,
        "format": None,
    }
    values.update(overrides)
    return argparse.Namespace(**values)


def _report(**overrides) -> DatasetStatsReport:
    values = {
        "graph_count": 2,
        "pct_distinct": 50.0,
        "pct_mult2": 0.0,
        "pct_mult3": 50.0,
        "avg_count_mult2": 0.0,
        "avg_count_mult3": 0.5,
        "avg_num_zeros": 1.0,
        "avg_ratio_zeros": 0.25,
        "pct_full_row": 100.0,
        "pct_le_one_zero_per_vec": 100.0,
        "pct_zeros_lt_vertices": 100.0,
        "pct_any_condition": 100.0,
        "avg_nodes": 3.5,
    }
    values.update(overrides)
    return DatasetStatsReport(**values)


# =============================================================================
# CONFIGURATION TESTS
# =============================================================================


class TestSettings:
    """Unit тесты для настроек."""

    def test_defaults(self):
        """Тест значений по умолчанию."""
        settings = get_settings()
        assert settings.eig_tol == 1e-4
        assert settings.zero_tol == 1e-6
        assert settings.sum_tol == 1e-7
        assert settings.max_rounds == 20
        assert settings.oracle_max_nodes == 24
        assert settings.matrix_oracle_max_nodes == 10

    def test_env_prefix(self, monkeypatch):
        """Тест чтения переменных окружения с префиксом SPECTRALWL_."""
        monkeypatch.setenv("SPECTRALWL_MAX_ROUNDS", "7")
        monkeypatch.setenv("SPECTRALWL_WORKERS", "3")
        settings = Settings()
        assert settings.max_rounds == 7
        assert settings.workers == 3


class TestRunConfig:
    """Unit тесты для RunConfig."""

    def test_from_settings_ignores_none(self):
        """Тест: None не переопределяет настройки."""
        config = RunConfig.from_settings(eig_tol=None, max_rounds=5)
        assert config.eig_tol == get_settings().eig_tol
        assert config.max_rounds == 5

    def test_output_format_coerced(self):
        """Тест приведения формата вывода к перечислению."""
        assert RunConfig.from_settings(output_format="csv").output_format is OutputFormat.CSV

    @pytest.mark.parametrize("field, value", [("workers", 0), ("eig_tol", 0.0), ("sum_tol", -1.0), ("max_rounds", 0)])
    def test_invalid_values(self, field, value):
        """Тест валидации допусков и счетчиков."""
        with pytest.raises(ValidationError):
            RunConfig.from_settings(**{field: value})

    def test_build_run_config_from_flags(self):
        """Тест сборки конфигурации из флагов CLI."""
        config = build_run_config(_namespace(seeds=[9], workers=2, format="csv"))
        assert config.seeds == [9]
        assert config.workers == 2
        assert config.output_format is OutputFormat.CSV

    def test_build_run_config_invalid(self):
        """Тест: неверный флаг превращается в DomainError."""
        with pytest.raises(DomainError):
            build_run_config(_namespace(workers=0))


# =============================================================================
# EXCEPTION HANDLERS TESTS
# =============================================================================


class TestExceptionHandlers:
    """Unit тесты для обработчиков исключений."""

    @pytest.mark.parametrize(
        "exc, expected",
        [
            (KMismatchError("k"), (3, "k_mismatch")),
            (DomainError("d"), (2, "domain_error")),
            (ParseError("p", line=1), (2, "parse_error")),
            (ResourceLimitError("r"), (4, "resource_limit")),
            (NumericalError("n", residual=1.0), (5, "numerical_error")),
            (NotSimpleError("s", indices=[1, 2]), (6, "not_simple")),
            (FailedPreconditionError("f"), (7, "failed_precondition")),
            (AppException("a"), (2, "app_error")),
        ],
    )
    def test_exit_codes(self, exc, expected):
        """Тест соответствия исключений кодам выхода."""
        assert resolve_exit_code(exc) == expected

    def test_handler_writes_json(self):
        """Тест печати ошибки в поток."""
        stream = io.StringIO()
        code = handle_app_exception(ParseError("bad token", line=3), stream)
        assert code == 2
        assert json.loads(stream.getvalue()) == {"detail": "line 3: bad token", "type": "parse_error"}

    def test_exception_payloads(self):
        """Тест дополнительных полей исключений."""
        assert ParseError("x", line=4).line == 4
        assert NotSimpleError("x", indices=(2, 3)).indices == [2, 3]
        assert "residual=" in str(NumericalError("no convergence", residual=0.5))


# =============================================================================
# UTILS TESTS
# =============================================================================


class TestColorRegistry:
    """Unit тесты для ColorRegistry."""

    def test_sorted_assignment(self):
        """Тест: новые ключи нумеруются в отсортированном порядке."""
        registry = ColorRegistry()
        assert registry.assign(["b", "a", "b"]) == [1, 0, 1]
        assert registry.assign(["c", "a"]) == [2, 0]
        assert len(registry) == 3

    def test_order_independent(self):
        """Тест: идентификаторы не зависят от порядка ключей в вызове."""
        first, second = ColorRegistry(), ColorRegistry()
        keys = [("x", 2), ("x", 1), ("y", 0)]
        ids = first.assign(keys)
        reversed_ids = second.assign(list(reversed(keys)))
        assert ids == list(reversed(reversed_ids))

    def test_lookup(self):
        """Тест поиска без регистрации."""
        registry = ColorRegistry()
        registry.assign(["a"])
        assert registry.lookup("a") == 0
        assert registry.lookup("z") is None
        assert len(registry) == 1


class TestUtils:
    """Unit тесты для вспомогательных функций."""

    def test_stable_digest(self):
        """Тест детерминированности хэша."""
        assert stable_digest((1, "a")) == stable_digest((1, "a"))
        assert stable_digest((1, "a")) != stable_digest((1, "b"))
        assert len(stable_digest("x")) == 16

    def test_digest_words(self):
        """Тест разбиения хэша на 32-битные слова."""
        words = digest_words(("key", 1))
        assert len(words) == 4
        assert all(0 <= w < 2**32 for w in words)

    def test_percentage(self):
        """Тест вычисления процента."""
        assert percentage(1, 4) == 25.0
        assert percentage(0, 0) == 0.0


# =============================================================================
# GRAPH TESTS
# =============================================================================


class TestGraphModels:
    """Unit тесты для моделей графов."""

    def test_edges_normalized(self):
        """Тест нормализации ребер."""
        g = Graph(n=3, edges=frozenset({(2, 0), (1, 2)}))
        assert g.edges == frozenset({(0, 2), (1, 2)})
        assert g.sorted_edges == [(0, 2), (1, 2)]
        assert g.degrees() == [1, 1, 2]

    @pytest.mark.parametrize(
        "n, edges",
        [(0, frozenset()), (3, frozenset({(1, 1)})), (3, frozenset({(0, 3)}))],
    )
    def test_invalid_graphs(self, n, edges):
        """Тест отклонения пустых графов, петель и ребер вне диапазона."""
        with pytest.raises(ValidationError):
            Graph(n=n, edges=edges)

    def test_symmetric_matrix_validation(self):
        """Тест проверки симметрии."""
        with pytest.raises(ValidationError):
            SymmetricMatrix(n=2, entries=[[0.0, 1.0], [2.0, 0.0]])
        with pytest.raises(ValidationError):
            SymmetricMatrix(n=3, entries=[[0.0, 1.0], [1.0, 0.0]])

    def test_symmetric_matrix_readonly(self):
        """Тест защиты матрицы от записи."""
        m = SymmetricMatrix.from_array([[1.0, 2.0], [2.0, 1.0]])
        assert m.n == 2
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0


class TestGraphServices:
    """Unit тесты для построения матриц."""

    def test_laplacian_path(self, p3):
        """Тест лапласиана пути на трех вершинах."""
        expected = np.array([[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]])
        assert np.array_equal(laplacian(p3).entries, expected)

    def test_matrices_match_networkx(self, to_graph):
        """Тест совпадения с networkx для графа Петерсена."""
        nxg = nx.petersen_graph()
        g = to_graph(nxg)
        a = nx.to_numpy_array(nxg, nodelist=sorted(nxg.nodes))
        assert np.array_equal(adjacency(g).entries, a)
        assert np.array_equal(laplacian(g).entries, np.diag(a.sum(axis=1)) - a)

    def test_normalized_laplacian_isolated_node(self):
        """Тест нормированного лапласиана с изолированной вершиной."""
        g = Graph(n=3, edges=frozenset({(0, 1)}))
        entries = normalized_laplacian(g).entries
        assert np.allclose(np.diag(entries), [1.0, 1.0, 0.0])
        assert entries[0, 1] == pytest.approx(-1.0)
        assert not entries[2].any()

    def test_relabel_matches_conjugate(self, p4):
        """Тест согласованности переименования вершин и сопряжения матрицы."""
        perm = [2, 0, 3, 1]
        assert np.array_equal(laplacian(relabel(p4, perm)).entries, conjugate(laplacian(p4), perm).entries)

    def test_bad_permutation(self, p3):
        """Тест отклонения неверной перестановки."""
        with pytest.raises(DomainError):
            relabel(p3, [0, 0, 1])


class TestParsers:
    """Unit тесты для разбора файлов."""

    def test_edge_list_with_header_and_comments(self):
        """Тест разбора списка ребер с заголовком."""
        g = parse_edge_list("# path\nn=4\n0 1\n\n1 2\n")
        assert g.n == 4
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_edge_list_infers_n(self):
        """Тест вывода n по максимальному индексу."""
        assert parse_edge_list("0 3\n").n == 4

    def test_parse_graph_dispatch(self, p4):
        """Тест выбора разборщика по формату."""
        assert parse_graph("n=4\n0 1\n1 2\n2 3\n", GraphFormat.EDGE_LIST) == p4
        assert parse_graph(serialize_graph(p4, "json_graph"), "json_graph") == p4
        with pytest.raises(ValueError):
            parse_graph("0 1\n", "graphml")

    def test_header_after_edges(self):
        """Тест: заголовок допустим только первой строкой."""
        with pytest.raises(ParseError) as excinfo:
            parse_edge_list("0 1\nn=4\n")
        assert excinfo.value.line == 2

    def test_weighted_edges_rejected(self):
        """Тест отклонения взвешенных ребер."""
        with pytest.raises(ParseError) as excinfo:
            parse_edge_list("0 1 2.5\n")
        assert "weighted edges are not supported" in str(excinfo.value)
        assert excinfo.value.line == 1

    @pytest.mark.parametrize("text", ["1 1\n", "-1 2\n", "n=2\n0 5\n"])
    def test_domain_errors(self, text):
        """Тест петель, отрицательных индексов и слишком малого n."""
        with pytest.raises(DomainError):
            parse_edge_list(text)

    @pytest.mark.parametrize("text", ["", "a b\n", "0\n"])
    def test_parse_errors(self, text):
        """Тест пустого файла и синтаксических ошибок."""
        with pytest.raises(ParseError):
            parse_edge_list(text)

    def test_serialized_graph_parses_back(self, p4):
        """Тест: сериализованный граф читается обратно."""
        assert parse_edge_list(serialize_graph(p4, GraphFormat.EDGE_LIST)) == p4
        assert parse_json_graph(serialize_graph(p4, "json_graph")) == p4

    def test_json_document_kinds(self, p3):
        """Тест разбора графа и матрицы из JSON."""
        matrix = parse_json_document(serialize_matrix(laplacian(p3)))
        assert isinstance(matrix, SymmetricMatrix)
        assert isinstance(parse_json_document('{"n": 2, "edges": [[0, 1]]}'), Graph)
        with pytest.raises(DomainError):
            parse_json_graph(serialize_matrix(laplacian(p3)))

    def test_invalid_json(self):
        """Тест ошибки JSON с номером строки."""
        with pytest.raises(ParseError) as excinfo:
            parse_json_graph('{\n"n": 2,\n"edges": [[0, 1]\n}')
        assert excinfo.value.line is not None

    def test_spectral_pair_json(self):
        """Тест сериализации спектральной пары."""
        sp = SpectralPair.from_arrays([[1.0, 0.5], [-1.0, 0.5]], [2.0, 1.0])
        parsed = parse_spectral_pair(serialize_spectral_pair(sp))
        assert parsed.n == 2 and parsed.k == 2
        assert np.array_equal(parsed.V, sp.V)


class TestRepositories:
    """Unit тесты для файлового репозитория."""

    def test_directory_with_errors(self, write_file, tmp_path):
        """Тест загрузки каталога с неверным файлом."""
        write_file("corpus/b.txt", "0 1\n")
        write_file("corpus/a.json", '{"n": 3, "edges": [[0, 1], [1, 2]]}')
        write_file("corpus/c.txt", "0 1 1.5\n")
        write_file("corpus/notes.md", "ignored")
        repository = FileSystemGraphRepository(tmp_path / "corpus")
        assert repository.names() == ["a.json", "b.txt", "c.txt"]
        assert repository.is_collection

        with pytest.raises(ParseError):
            repository.load_all()
        graphs, errors = repository.load_all(skip_errors=True)
        assert [name for name, _ in graphs] == ["a.json", "b.txt"]
        assert errors[0][0] == "c.txt"

    def test_json_array(self, write_file):
        """Тест корпуса в одном JSON-массиве."""
        path = write_file("graphs.json", '[{"n": 2, "edges": [[0, 1]]}, {"n": 3, "edges": []}]')
        repository = FileSystemGraphRepository(path)
        assert repository.names() == ["graphs.json#0", "graphs.json#1"]
        assert repository.get("graphs.json#1").n == 3

    def test_missing_path(self, tmp_path):
        """Тест несуществующего пути."""
        with pytest.raises(DomainError):
            FileSystemGraphRepository(tmp_path / "missing")


# =============================================================================
# SPECTRAL TESTS
# =============================================================================


class TestSpectralModels:
    """Unit тесты для спектральных моделей."""

    def test_strictly_decreasing(self):
        """Тест строгого убывания собственных значений."""
        with pytest.raises(ValidationError):
            SpectralPair.from_arrays([[1.0, 0.0], [0.0, 1.0]], [1.0, 1.0])

    def test_gap_below_eig_tol(self):
        """Тест: разрыв λ не больше eig_tol отклоняется, меньший допуск из контекста его принимает."""
        V = [[1.0, 0.0], [0.0, 1.0]]
        with pytest.raises(ValidationError):
            SpectralPair.from_arrays(V, [1.0, 0.99995])
        sp = SpectralPair.from_arrays(V, [1.0, 0.99995], eig_tol=1e-6)
        assert sp.k == 2
        flipped = SignedPermutation(perm=[1, 0], signs=[-1, 1]).apply(sp)
        assert np.array_equal(flipped.lambdas, sp.lambdas)

    def test_with_vectors(self):
        """Тест замены V с сохранением λ и формы."""
        sp = SpectralPair.from_arrays([[1.0], [2.0]], [1.0])
        negated = sp.with_vectors(-sp.V)
        assert np.array_equal(negated.V, [[-1.0], [-2.0]])
        assert np.array_equal(negated.lambdas, sp.lambdas)
        assert not negated.V.flags.writeable
        with pytest.raises(ValueError):
            sp.with_vectors([[1.0, 0.0], [0.0, 1.0]])

    def test_shape_mismatch(self):
        """Тест несогласованных размеров."""
        with pytest.raises(ValidationError):
            SpectralPair(n=2, k=2, lambdas=[2.0, 1.0], V=[[1.0], [0.0]])

    def test_group_multiplicity(self):
        """Тест согласованности кратности группы."""
        with pytest.raises(ValidationError):
            EigenvalueGroup(representative=1.0, multiplicity=2, column_indices=[0])


class TestEigensolver:
    """Unit тесты для метода Якоби."""

    def test_diagonal_matrix(self):
        """Тест диагональной матрицы: значения по убыванию."""
        ed = eigendecompose(SymmetricMatrix.from_array(np.diag([1.0, 3.0, 2.0])))
        assert np.array_equal(ed.lambdas, [3.0, 2.0, 1.0])
        assert np.array_equal(np.abs(ed.V), np.eye(3)[:, [1, 2, 0]])

    def test_path_spectrum(self, p3):
        """Тест спектра лапласиана пути P3."""
        ed = eigendecompose(laplacian(p3))
        assert np.allclose(ed.lambdas, [3.0, 1.0, 0.0], atol=1e-10)

    def test_no_convergence(self, p3):
        """Тест NumericalError при исчерпании числа проходов."""
        with pytest.raises(NumericalError):
            eigendecompose(laplacian(p3), max_sweeps=0)


class TestGrouping:
    """Unit тесты для группировки и усечения."""

    def test_group_within_tolerance(self):
        """Тест группировки близких значений."""
        groups = group_eigenvalues([3.0, 2.99995, 1.0], eig_tol=1e-4)
        assert [g.multiplicity for g in groups] == [2, 1]
        assert groups[0].representative == 3.0
        assert groups[1].column_indices == [2]

    def test_group_anchored_to_first_member(self):
        """Тест: цепочка шагов меньше допуска не растягивает группу шире eig_tol."""
        groups = group_eigenvalues([1.0, 0.99994, 0.99988], eig_tol=1e-4)
        assert [g.multiplicity for g in groups] == [2, 1]
        assert [g.representative for g in groups] == [1.0, 0.99988]

    def test_smallest_nonzero_signed_spectrum(self, p4):
        """Тест: для смежности P4 берутся значения ±0.618, ближайшие к нулю по модулю."""
        sp = spectral_pair_from_graph(p4, 2, order="smallest_nonzero", matrix="adjacency")
        golden = (np.sqrt(5.0) - 1.0) / 2.0
        assert np.allclose(sp.lambdas, [golden, -golden])

    def test_increasing_rejected(self):
        """Тест отклонения возрастающих значений."""
        with pytest.raises(DomainError):
            group_eigenvalues([1.0, 2.0], eig_tol=1e-4)

    def test_truncate_largest_and_smallest(self, p3):
        """Тест двух правил усечения."""
        ed = eigendecompose(laplacian(p3))
        assert np.allclose(truncate(ed, 2).lambdas, [3.0, 1.0])
        assert np.allclose(truncate(ed, 1, order="smallest_nonzero").lambdas, [1.0])

    def test_truncate_collision(self, k4):
        """Тест NotSimpleError с индексами совпадающих столбцов."""
        ed = eigendecompose(laplacian(k4))
        with pytest.raises(NotSimpleError) as excinfo:
            truncate(ed, 2)
        assert excinfo.value.indices == [0, 1]

    def test_truncate_split_group_allowed(self, c4):
        """Тест: граница внутри группы допустима, если выбранные значения различны."""
        ed = eigendecompose(laplacian(c4))
        sp = truncate(ed, 2)
        assert np.allclose(sp.lambdas, [4.0, 2.0])

    def test_simple_spectrum(self, p3, k4):
        """Тест проверки простоты спектра."""
        assert is_simple_spectrum(eigendecompose(laplacian(p3)), eig_tol=1e-6)
        assert not is_simple_spectrum(eigendecompose(laplacian(k4)), eig_tol=1e-6)

    def test_spectral_pair_from_graph(self, p3, k4):
        """Тест построения спектральной пары по графу."""
        sp = spectral_pair_from_graph(p3)
        assert sp.k == 3
        assert np.allclose(sp.lambdas, [3.0, 1.0, 0.0])
        assert np.allclose(spectral_pair_from_graph(p3, 1, matrix="adjacency").lambdas, [np.sqrt(2.0)])
        with pytest.raises(NotSimpleError):
            spectral_pair_from_graph(k4)
        with pytest.raises(DomainError):
            spectral_pair_from_graph(p3, matrix="signless")

    def test_truncate_too_many(self, p3):
        """Тест слишком большого K."""
        ed = eigendecompose(laplacian(p3))
        with pytest.raises(DomainError):
            truncate(ed, 3, order="smallest_nonzero")
        with pytest.raises(DomainError):
            truncate(ed, 0)


# =============================================================================
# REFINEMENT MODEL TESTS
# =============================================================================


class TestQuantizer:
    """Unit тесты для квантователя."""

    def test_key(self):
        """Тест квантования вектора."""
        q = Quantizer(scale=1e8)
        assert q.key((0.1, -0.1, 0.0)) == (10000000, -10000000, 0)
        assert q.quantize(-0.25) == -25000000

    def test_sign_symmetric(self):
        """Тест симметрии квантования по знаку."""
        q = Quantizer()
        values = np.array([0.123456789, -2.5e-9, 1.0 / 3.0])
        assert q.key(-values) == tuple(-x for x in q.key(values))

    def test_large_values(self):
        """Тест значений за пределами int64."""
        key = Quantizer(scale=1e8).key([1e12])
        assert key == (100000000000000000000,)

    def test_pairwise_keys(self):
        """Тест попарных произведений."""
        keys = Quantizer(scale=1.0).pairwise_keys(np.array([[1.0, 2.0], [3.0, -1.0]]))
        assert keys[0][1] == (3, -2)
        assert keys[1][0] == keys[0][1]
        assert keys[1][1] == (9, 1)

    def test_invalid_scale(self):
        """Тест отклонения неположительного масштаба."""
        with pytest.raises(ValidationError):
            Quantizer(scale=0.0)


class TestUpdateRule:
    """Unit тесты для описаний правил обновления."""

    def test_parse(self):
        """Тест разбора имен правил."""
        assert UpdateRule.parse("zero") == UpdateRule.zero()
        assert UpdateRule.parse("proof_rule").kind is RuleKind.PROOF_RULE
        rule = UpdateRule.parse("random_table(7)")
        assert rule.seed == 7
        assert rule.name == "random_table(7)"

    def test_parse_unknown(self):
        """Тест неизвестного правила."""
        with pytest.raises(ValueError):
            UpdateRule.parse("mlp")

    def test_seed_required(self):
        """Тест: seed обязателен только для случайной таблицы."""
        with pytest.raises(ValidationError):
            UpdateRule(kind=RuleKind.RANDOM_TABLE)
        with pytest.raises(ValidationError):
            UpdateRule(kind=RuleKind.ZERO, seed=1)


class TestSeparationVerdict:
    """Unit тесты для вердикта."""

    def test_to_dict_without_rule(self):
        """Тест: поле rule отсутствует вне equi."""
        verdict = SeparationVerdict(
            outcome=SeparationOutcome.INDISTINGUISHABLE,
            rounds_run=2,
            color_class_counts=[1, 3, 3],
        )
        data = verdict.to_dict()
        assert data == {
            "outcome": "indistinguishable",
            "round": None,
            "rounds_run": 2,
            "color_class_counts": [1, 3, 3],
        }
        assert not verdict.separated

    def test_to_dict_with_rule(self):
        """Тест сериализации вердикта equi."""
        verdict = SeparationVerdict(
            outcome=SeparationOutcome.SEPARATED,
            round=2,
            rounds_run=2,
            color_class_counts=[3, 3, 5],
            rule="proof_rule",
        )
        assert verdict.to_dict()["rule"] == "proof_rule"
        assert verdict.separated


class TestEpnnReadout:
    """Unit тесты для глобального цвета."""

    def test_readout_ignores_node_order(self):
        """Тест: перестановка строк V не меняет глобальный цвет."""
        V = np.array([[1.0, 0.5], [-2.0, 0.0], [0.25, 3.0]])
        lambdas = np.array([2.0, 1.0])
        a = epnn_init(SpectralPair.from_arrays(V, lambdas))
        b = epnn_init(SpectralPair.from_arrays(V[[2, 0, 1]], lambdas), registry=a.registry)
        assert a.colors != b.colors
        assert epnn_readout(a) == epnn_readout(b)

    def test_readout_differs_for_other_multiset(self):
        """Тест: разные мультимножества цветов дают разные глобальные цвета."""
        lambdas = np.array([2.0, 1.0])
        a = epnn_init(SpectralPair.from_arrays(np.array([[1.0, 0.5], [-2.0, 0.0]]), lambdas))
        b = epnn_init(SpectralPair.from_arrays(np.array([[1.0, 0.5], [1.0, 0.5]]), lambdas), registry=a.registry)
        assert epnn_readout(a) != epnn_readout(b)

    def test_unique_ids_with_shared_registry(self):
        """Тест: при общем реестре ids переставленной пары переставляются вместе с вершинами."""
        sp = SpectralPair.from_arrays(np.array([[1.0, 0.5], [-2.0, 0.25], [0.75, 3.0]]), [2.0, 1.0])
        g = SignedPermutation(perm=[2, 0, 1], signs=[-1, 1])
        registry = ColorRegistry()
        a = unique_node_ids(sp, registry=registry)
        b = unique_node_ids(g.apply(sp), registry=registry)
        assert a.unique and b.unique
        assert [b.ids[p] for p in g.perm] == a.ids


# =============================================================================
# ORACLE MODEL TESTS
# =============================================================================


class TestSignedPermutation:
    """Unit тесты для элементов группы S_n × {±1}^K."""

    def test_validation(self):
        """Тест проверки биекции и знаков."""
        with pytest.raises(ValidationError):
            SignedPermutation(perm=[0, 0], signs=[1])
        with pytest.raises(ValidationError):
            SignedPermutation(perm=[1, 0], signs=[0])

    def test_apply_matrix(self):
        """Тест действия: строка i переходит в строку perm[i]."""
        g = SignedPermutation(perm=[1, 0], signs=[1, -1])
        result = g.apply_matrix(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert np.array_equal(result, [[3.0, -4.0], [1.0, -2.0]])

    def test_compose(self):
        """Тест композиции: сначала правый множитель."""
        g = SignedPermutation(perm=[2, 0, 1], signs=[-1, 1])
        h = SignedPermutation(perm=[1, 2, 0], signs=[-1, -1])
        V = np.arange(6, dtype=float).reshape(3, 2)
        assert np.array_equal(g.compose(h).apply_matrix(V), g.apply_matrix(h.apply_matrix(V)))

    def test_identity(self):
        """Тест тождественного элемента."""
        assert SignedPermutation.identity(3, 2).is_identity
        assert not SignedPermutation(perm=[0, 1], signs=[1, -1]).is_identity


# =============================================================================
# COUNTEREXAMPLE MODEL TESTS
# =============================================================================


class TestZVector:
    """Unit тесты для элементов группы Клейна."""

    def test_group_law(self):
        """Тест покоординатного умножения."""
        assert Z1 * Z2 == Z3
        assert Z1 * Z1 == Z0
        assert Z3 * Z2 == Z1

    def test_arrays(self):
        """Тест векторного представления."""
        assert np.array_equal(Z1.array, [-1.0, 1.0])
        assert not O2.array.any()

    def test_oge_report_property(self):
        """Тест признака изоморфности лапласианов."""
        report = OGEReport(
            u11_negating_perm=[1, 0],
            u21_negating_perm=None,
            shared_second_column=True,
            laplacian_perm=None,
        )
        assert not report.laplacians_isomorphic


# =============================================================================
# REPORT MODEL TESTS
# =============================================================================


class TestReportModels:
    """Unit тесты для моделей отчетов."""

    def test_canon_report_range(self):
        """Тест диапазона процентов."""
        with pytest.raises(ValidationError):
            CanonReport(
                input_sum_zero_pct=120.0,
                input_uncanonicalizable_pct=0.0,
                output_sum_zero_pct=0.0,
                output_uncanonicalizable_pct=0.0,
                n_simple_eigenvectors=1,
                n_graphs=1,
            )

    def test_graph_stats_consistency(self):
        """Тест согласованности признаков статистики графа."""
        with pytest.raises(ValidationError):
            GraphSpectralStats(
                n=3,
                has_distinct=True,
                has_mult2=False,
                has_mult3=False,
                count_mult2=0,
                count_mult3=0,
                num_zeros=1,
                ratio_zeros=1 / 3,
                has_full_row=True,
                le_one_zero_per_vec=True,
                zeros_lt_vertices=True,
                any_condition=False,
            )

    def test_report_rows(self):
        """Тест фиксированного порядка строк отчета."""
        rows = _report().rows()
        assert len(rows) == 13
        assert rows[0].statistic == "Graphs"
        assert rows[-1].statistic == "Graphs Meeting Any Condition (%)"


class TestWriters:
    """Unit тесты для записи отчетов."""

    def test_csv(self):
        """Тест CSV: одна строка на статистику."""
        lines = report_to_csv(_report()).strip().split("\n")
        assert lines[0] == "statistic,value"
        assert len(lines) == 14
        assert lines[3] == "Graphs with Distinct Eigenvalues (%),50.0"

    def test_json_with_errors(self):
        """Тест JSON со списком пропущенных файлов."""
        payload = json.loads(report_to_json(_report(), errors=["bad.txt: line 1: weighted edges are not supported"]))
        assert payload["report"]["graph_count"] == 2
        assert len(payload["errors"]) == 1
        assert "graphs" not in payload


# =============================================================================
# CLI DEPENDENCIES TESTS
# =============================================================================


class TestLoadDocument:
    """Unit тесты для чтения входов команд."""

    def test_kinds(self, write_file, p3):
        """Тест распознавания графа, матрицы и спектральной пары."""
        sp = SpectralPair.from_arrays([[1.0], [0.0]], [1.0])
        assert isinstance(load_document(write_file("g.txt", "0 1\n")), Graph)
        assert isinstance(load_document(write_file("m.json", serialize_matrix(laplacian(p3)))), SymmetricMatrix)
        assert isinstance(load_document(write_file("sp.json", serialize_spectral_pair(sp))), SpectralPair)

    def test_missing_file(self, tmp_path):
        """Тест несуществующего входа."""
        with pytest.raises(DomainError):
            load_document(tmp_path / "missing.txt")

    def test_spectral_pair_gap_checked(self, write_file):
        """Тест: пара с разрывом λ не больше eig_tol отклоняется при чтении."""
        path = write_file("close.json", json.dumps({"lambdas": [1.0, 0.99995], "V": [[1.0, 0.0], [0.0, 1.0]]}))
        with pytest.raises(DomainError):
            load_document(path)
        assert load_document(path, eig_tol=1e-6).k == 2

    def test_to_spectral_pair(self, p3):
        """Тест приведения графа и проверки K."""
        config = RunConfig.from_settings()
        sp = to_spectral_pair(p3, config)
        assert sp.k == 3
        with pytest.raises(DomainError):
            to_spectral_pair(sp, config, k=2)
