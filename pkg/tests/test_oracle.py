import pytest

from partgraph import (
    CheckResult,
    VerificationReport,
    run_all,
    verify_cliques,
    verify_degrees,
    verify_neighborhoods,
    verify_type_determinacy,
)

from oracles import partition_count


def total_partitions(n_max):
    return sum(partition_count(n) for n in range(1, n_max + 1))


class TestSingleWeightVerifiers:
    def test_degrees_weight_twelve(self):
        result = verify_degrees(12)
        assert result.name == "degrees"
        assert result.examined == 77
        assert result.passed
        assert result.ms >= 0

    def test_degrees_without_graph(self):
        assert verify_degrees(9, with_graph=False).passed

    def test_neighborhoods_weight_eight(self):
        result = verify_neighborhoods(8)
        assert result.examined == 22
        assert result.passed

    def test_cliques_weight_eight(self):
        result = verify_cliques(8)
        assert result.examined == 22
        assert result.passed

    def test_type_determinacy_weight_eight(self):
        result = verify_type_determinacy(8)
        assert result.examined == total_partitions(8)
        assert result.passed


class TestRunAll:
    def test_aggregates_all_four_checks(self):
        report = run_all(6)
        assert report.n_range == (1, 6)
        assert [c.name for c in report.checks] == [
            "degrees", "neighborhoods", "cliques", "type_determinacy",
        ]
        assert all(c.examined == total_partitions(6) for c in report.checks)
        assert report.passed

    def test_degrees_only_mode(self):
        report = run_all(8, degrees_only=True)
        assert [c.name for c in report.checks] == ["degrees"]
        assert report.passed

    def test_json_shape(self):
        payload = run_all(4).to_json()
        assert set(payload) == {"n_range", "checks", "timings_ms", "pass"}
        assert payload["n_range"] == [1, 4]
        assert payload["pass"] is True
        for check in payload["checks"]:
            assert set(check) == {"name", "examined", "failures"}
            assert check["failures"] == []

    def test_deterministic_modulo_timings(self):
        first = run_all(5).to_json()
        second = run_all(5).to_json()
        first.pop("timings_ms")
        second.pop("timings_ms")
        assert first == second

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            run_all(0)


class TestReportPlumbing:
    def test_failures_flip_the_verdict(self):
        bad = CheckResult("degrees", 1, [
            {"check": "degrees", "n": 3, "partition": "2,1", "detail": "fabricated"},
        ])
        good = CheckResult("cliques", 1, [])
        report = VerificationReport((1, 3), [good, bad])
        assert not bad.passed
        assert good.passed
        assert not report.passed
        assert report.to_json()["pass"] is False
