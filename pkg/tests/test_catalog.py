import io
import json

import pandas as pd
import pytest

from src.catalog.engine import CatalogEngine, warm_fields
from src.catalog.export import FORMAT_CSV, FORMAT_JSON, emit, load_records, render
from src.catalog.models import FILTER_MDS, FILTER_QGV, QuantumCodeRecord, SweepSpec
from src.catalog.tables import diff_report, load_golden, reproduce_tables
from src.config import CODE_TABLES, CSV_COLUMNS, RANGE_TABLES
from src.errors import ParameterError


@pytest.fixture
def engine():
    return CatalogEngine(threads=2)


@pytest.fixture
def mds_record(engine):
    return engine.record(5, 2, (), 3)


class TestRecords:

    def test_str(self, mds_record):
        assert str(mds_record) == "[[12,8,>=3]]_5 MDS QGV:yes gmcc(q=5,lambda=2,sizes=12,t=3)"

    def test_cached(self, engine):
        assert engine.record(5, 2, (), 3) is engine.record(5, 2, (), 3)

    def test_cache_separates_orthogonality_setting(self, engine):
        checked = engine.record(5, 2, (), 3)
        unchecked = engine.record(5, 2, (), 3, check_orthogonality=False)
        assert unchecked is not checked
        assert engine.record(5, 2, (), 3, check_orthogonality=False) is unchecked
        assert engine.record(5, 2, (), 3) is checked

    def test_records_built_concurrently_on_new_fields(self):
        pooled = CatalogEngine(threads=4)
        tuples = [(q, 1, (), 3) for q in (17, 19, 23, 25, 27)]
        records = pooled.map(lambda args: pooled.record(*args), tuples)
        assert [(r.q, r.n, r.k) for r in records] == [(q, q + 1, q - 3) for q, *_ in tuples]

    def test_verified_record(self, engine):
        record = engine.record(5, 2, (), 3, verify_budget=10 ** 6)
        assert record.d_exact == 3
        assert record.d == 3

    def test_large_integers_as_strings(self, mds_record):
        data = mds_record.to_dict()
        assert data["n"] == 12
        big = QuantumCodeRecord.from_dict({**data, "n": str(2 ** 60), "k": str(2 ** 60 - 4)})
        assert big.to_dict()["n"] == str(2 ** 60)
        assert big.n == 2 ** 60


class TestSweep:

    def test_one_variable_all_lambdas(self, engine):
        records = engine.sweep(SweepSpec(q_values=(3,), m_values=(1,), t_values=(3,)))
        assert [(r.n, r.k) for r in records] == [(4, 0), (8, 4)]

    def test_two_variables(self, engine):
        spec = SweepSpec(q_values=(5,), lambdas=(1,), m_values=(2,), a_range=(13, 13), t_values=(3, 4))
        records = engine.sweep(spec)
        assert [(r.n, r.k, r.d_bound) for r in records] == [(78, 72, 3), (78, 68, 4)]

    def test_empty_ranges(self, engine):
        assert engine.sweep(SweepSpec(q_values=(5,), t_values=())) == []
        assert engine.sweep(SweepSpec(q_values=())) == []

    def test_order_and_admissibility(self, engine):
        records = engine.sweep(SweepSpec(q_values=(5, 3), m_values=(1, 2), a_range=(2, 3)))
        keys = [(r.q, r.lam, r.m, r.sizes, r.t) for r in records]
        assert keys == sorted(keys)
        for r in records:
            assert (r.q - 1) % r.lam == 0
            assert 2 <= r.t <= (r.q + 3) // 2
            assert (r.n - r.k) % 2 == 0

    def test_deterministic_across_thread_counts(self):
        spec = SweepSpec(q_values=(3, 5), m_values=(1, 2), a_range=(2, 4))
        single = CatalogEngine(threads=1).sweep(spec)
        pooled = CatalogEngine(threads=4).sweep(spec)
        assert [r.construction for r in single] == [r.construction for r in pooled]

    def test_pooled_sweep_matches_single_thread(self):
        spec = SweepSpec(q_values=(13,), m_values=(1,))
        pooled = CatalogEngine(threads=4).sweep(spec)
        single = CatalogEngine(threads=1).sweep(spec)
        assert len(pooled) == 42
        assert [r.construction for r in pooled] == [r.construction for r in single]
        assert [r.k for r in pooled] == [r.k for r in single]

    def test_warm_fields_rejects_even_q(self):
        with pytest.raises(ParameterError):
            warm_fields([3, 4])

    def test_filters(self, engine):
        spec = SweepSpec(q_values=(5,), m_values=(1, 2), a_range=(2, 6), filters=frozenset({FILTER_MDS}))
        records = engine.sweep(spec)
        assert records
        assert all(r.singleton == "MDS" for r in records)

        spec = SweepSpec(q_values=(5,), m_values=(2,), a_range=(2, 13), filters=frozenset({FILTER_QGV}))
        assert all(r.qgv_beaten for r in engine.sweep(spec))

    def test_n_max(self, engine):
        records = engine.sweep(SweepSpec(q_values=(5,), m_values=(2,), a_range=(2, 24), n_max=30))
        assert records
        assert max(r.n for r in records) <= 30

    def test_verification_in_sweep(self, engine):
        spec = SweepSpec(q_values=(3,), m_values=(1,), verify_budget=10 ** 6)
        for record in engine.sweep(spec):
            assert record.d_exact == record.t

    def test_invalid(self, engine):
        with pytest.raises(ParameterError):
            engine.sweep(SweepSpec(q_values=(4,)))
        with pytest.raises(ParameterError):
            engine.sweep(SweepSpec(q_values=(3,), filters=frozenset({"short"})))


class TestTables:

    def test_all_tables_reproduce(self, engine):
        reports = reproduce_tables(engine=engine)
        assert list(reports) == CODE_TABLES + RANGE_TABLES
        assert diff_report(reports) == []

    def test_known_rows(self, engine):
        reports = reproduce_tables(["3", "4", "ranges"], engine=engine)
        table3 = [(r["n"], r["k"], r["singleton"]) for r in reports["3"].rows]
        assert (16, 8, "MDS") in table3
        table4 = [(r["n"], r["k"], r["d_bound"]) for r in reports["4"].rows]
        assert (12800, 12792, 3) in table4
        ranges = {(r["q"], r["d"]): (r["n_low"], r["n_high"]) for r in reports["ranges"].rows}
        assert ranges[(17, 7)] == (72590, 82944)

    def test_exact_distances_of_small_rows(self, engine):
        report = reproduce_tables(["1"], engine=engine, verify=True)["1"]
        assert report.clean
        exact = [r for r in report.rows if r["d_exact"] is not None]
        assert exact
        assert all(r["d_exact"] == r["d_bound"] for r in exact)

    def test_mismatch_is_reported(self, engine, tmp_path):
        golden = load_golden("1")
        golden.loc[0, "k"] = 2
        golden.to_csv(tmp_path / "table1.csv", index=False)

        reports = reproduce_tables(["1"], engine=engine, golden_dir=tmp_path)
        diffs = diff_report(reports)
        assert len(diffs) == 1
        assert (diffs[0].row, diffs[0].column, diffs[0].expected, diffs[0].actual) == (0, "k", 2, 0)

    def test_unknown_table(self, engine):
        with pytest.raises(ParameterError):
            reproduce_tables(["6"], engine=engine)


class TestEmit:

    def test_empty(self):
        assert json.loads(render([], FORMAT_JSON)) == []
        assert render([], FORMAT_CSV).strip() == ",".join(CSV_COLUMNS)

    def test_json_round_trip(self, mds_record, tmp_path):
        path = tmp_path / "records.json"
        emit([mds_record], FORMAT_JSON, path)
        assert load_records(path) == [mds_record]

    def test_csv(self, engine):
        records = engine.sweep(SweepSpec(q_values=(3,), m_values=(1, 2), a_range=(2, 3)))
        buffer = io.StringIO()
        emit(records, FORMAT_CSV, buffer)
        lines = buffer.getvalue().splitlines()
        assert len(lines) == len(records) + 1

        frame = pd.read_csv(io.StringIO(buffer.getvalue()), dtype={"sizes": str}, keep_default_na=False)
        assert list(frame.columns) == CSV_COLUMNS
        assert set(frame["qgv"]) <= {"yes", "no"}
        assert frame["d_exact"].eq("").all()

    def test_unknown_format(self, mds_record):
        with pytest.raises(ParameterError):
            render([mds_record], "xml")
