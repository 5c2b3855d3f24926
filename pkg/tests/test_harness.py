import math

import pytest

from qbcharge.harness import (
    CSV_COLUMNS,
    FALSIFIED,
    UNDETERMINED,
    VERIFIED_BY_LB,
    VERIFIED_BY_ORACLE,
    classify,
    conjecture_audit,
    figure_sweep,
    report,
    thm2_check,
)
from qbcharge.schemes import (
    HybridSpec,
    ParallelSpec,
    SU2Spec,
    build_hybrid,
    build_parallel,
    build_su2,
    build_tridiag3,
)


@pytest.fixture(scope="module")
def sweep():
    return figure_sweep(100, 5, 5)


class TestClassify:
    def test_rules(self):
        assert classify(5, 5, None) == VERIFIED_BY_LB
        assert classify(5, 3, None) == UNDETERMINED
        assert classify(5, 3, 6) == VERIFIED_BY_ORACLE
        assert classify(5, 3, 4) == FALSIFIED
        assert classify(5, 7, 4) == FALSIFIED


class TestReport:
    def test_su2_d3(self):
        r = report(build_su2(SU2Spec(3, 1, 0), 100))
        assert r.eta == pytest.approx(1 / math.sqrt(3), rel=1e-9)
        assert (r.conj_rhs, r.lb_max, r.status) == (34, 34, VERIFIED_BY_LB)
        assert r.exact_depth is None
        assert r.ml_convention == "ground-shifted"

    def test_two_level(self):
        r = report(build_su2(SU2Spec(1, 1, 0), 100))
        assert r.eta == pytest.approx(1, rel=1e-9)
        assert (r.conj_rhs, r.lb_max, r.status) == (100, 100, VERIFIED_BY_LB)

    def test_parallel_homogeneous(self):
        r = report(build_parallel(ParallelSpec(9, (0,) * 9)), exact=False)
        assert r.eta == pytest.approx(1 / 3, rel=1e-9)
        assert (r.conj_rhs, r.lb_max, r.status) == (1, 1, VERIFIED_BY_LB)
        assert r.gamma == pytest.approx(1, rel=1e-9)

    def test_small_register_runs_oracle(self):
        r = report(build_hybrid(HybridSpec(6, 2)), oracle_grid=9)
        assert r.exact_depth == 3
        assert r.lb_max == 3

    def test_to_dict_keys(self):
        d = report(build_tridiag3(3, 1)).to_dict()
        assert list(d) == ["scheme", "N", "T", "tau", "eta", "gamma", "conj_rhs", "lb_max",
                           "t_star", "exact_depth", "status", "ml_convention"]

    @pytest.mark.parametrize("n", [10, 100])
    @pytest.mark.parametrize("d", range(1, 11))
    def test_su2_tightness(self, n, d):
        r = report(build_su2(SU2Spec(d, 1, 0), n), exact=False, grid=512)
        assert r.lb_max == r.conj_rhs == math.ceil(n / d)
        assert r.gamma == pytest.approx(math.sqrt(n / d), rel=1e-9)


class TestSweep:
    def test_shape(self, sweep):
        assert len(sweep) == 30
        assert all(r.k_num > r.k_den for r in sweep)

    def test_reference_rows(self, sweep):
        rows = {(r.case, r.m, r.n): r for r in sweep}
        assert rows["i", 0, 1].lb_max == 34
        assert (rows["i", 0, 1].k_num, rows["i", 0, 1].k_den) == (3, 1)
        assert rows["i", 0, 2].lb_max == 100
        assert rows["i", 0, 2].conj_rhs == 15

    def test_lb_dominates(self, sweep):
        for r in sweep:
            assert r.lb_max >= r.conj_rhs
            assert r.status == VERIFIED_BY_LB
            assert r.T <= r.T_closed_form * (1 + 1e-10)
            assert r.t_consistent == (abs(r.T - r.T_closed_form) <= 1e-8 * r.T_closed_form)

    def test_csv_record(self, sweep):
        assert len(sweep[0].csv_record()) == len(CSV_COLUMNS)

    def test_threads_deterministic(self, sweep):
        assert figure_sweep(100, 5, 5, threads=4) == sweep

    def test_empty(self):
        assert figure_sweep(100, 0, 0) == []

    def test_too_small(self):
        with pytest.raises(ValueError):
            figure_sweep(1)


class TestThm2:
    @pytest.mark.parametrize("n,d,expected", [(6, 2, 3), (5, 2, 3), (4, 4, 1), (7, 3, 3), (10, 7, 2)])
    def test_cases(self, n, d, expected):
        r = thm2_check(n, d, grid=9)
        assert r.expected == expected
        assert r.passed, r


class TestAudit:
    def test_paper_schemes(self, sweep):
        reps = [
            report(build_su2(SU2Spec(3, 1, 0), 100)),
            report(build_su2(SU2Spec(1, 1, 0), 100)),
            report(build_parallel(ParallelSpec(9, (0,) * 9)), exact=False),
            report(build_hybrid(HybridSpec(6, 2)), oracle_grid=9),
        ]
        audit = conjecture_audit(reps + list(sweep))
        assert audit.falsified == 0
        assert audit.total == len(reps) + len(sweep)

    def test_parallel_inhomogeneous(self):
        reps = [report(build_parallel(ParallelSpec(len(k), k)), exact=False)
                for k in ((0, 1), (1, 2, 3), (0, 0, 2, 5))]
        for r in reps:
            assert r.conj_rhs == 1
        assert conjecture_audit(reps).counts == {VERIFIED_BY_LB: 3}

    def test_empty(self):
        audit = conjecture_audit([])
        assert audit.counts == {} and audit.total == 0 and audit.falsified == 0
