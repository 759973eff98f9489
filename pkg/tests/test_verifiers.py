import pytest

from conftest import triples_of_total

from kroncalc.coefficients import kronecker
from kroncalc.partitions import Partition, partitions_of, scale, stable_durfee
from kroncalc.reduced import reduced_stable
from kroncalc.verifiers import (
    BudgetExceeded,
    EXCLUSION_SET,
    FAIL,
    NOT_DESK_FEASIBLE,
    PASS,
    VerificationReport,
    construct_family,
    dvir_vanishing,
    ip_preconditions,
    max_scan,
    scan_respects_bound,
    theorem12_chain,
    verify_family,
    verify_saturation_counterexample,
)


class TestDvirVanishing:
    def test_examples(self):
        assert dvir_vanishing((1,) * 5, (1,) * 5, (3, 3)) is True
        assert dvir_vanishing((1,) * 8, (1,) * 8, (3, 3)) is True
        assert dvir_vanishing((1,), (1,), (1,)) is False

    def test_symmetrizes_largest_slot(self):
        assert dvir_vanishing((3, 3), (1, 1), (1, 1)) is True

    def test_implies_vanishing_reduced(self):
        for total in range(0, 11):
            for al, be, ga in triples_of_total(total):
                if dvir_vanishing(al, be, ga):
                    assert reduced_stable(al, be, ga) == 0


class TestIPPreconditions:
    def test_excluded_shapes(self):
        for nu in EXCLUSION_SET:
            assert ip_preconditions(10**6, 10**6, nu) is False

    def test_boundary_cases(self):
        assert ip_preconditions(243, 82, (2, 2)) is True
        assert ip_preconditions(243, 81, (2, 2)) is False  # 81^2 = 9*9^3 exactly
        assert ip_preconditions(242, 82, (2, 2)) is False  # s below 3l^2
        assert ip_preconditions(243, 82, (100000,)) is False  # size cap violated

    def test_integer_sqrt_comparison(self):
        # r > 3 l^{3/2} must be decided exactly: l = 9 gives threshold 81
        assert ip_preconditions(243, 82, (2, 1, 1)) is True
        assert ip_preconditions(243, 81, (2, 1, 1)) is False


class TestConstructFamily:
    @pytest.mark.parametrize("gamma", [(3, 3), (4, 3), (3, 3, 3), (5, 5, 1)])
    def test_invariants(self, gamma):
        params = construct_family(gamma)
        g = Partition(gamma)
        ell, b, a, n_min = params.ell, params.b, params.a, params.n_min
        dbar = stable_durfee(g)
        assert ell == max(len(g) + 1, 9)
        assert b * b >= 9 * ell**3
        assert 18 * b * b * dbar >= (g.size + 6 * b) ** 2
        assert 6 * a * b >= g.size
        assert 2 * a * a < dbar
        assert a * n_min >= 3 * ell * ell
        rect = Partition((a,) * b)
        assert dvir_vanishing(rect, rect, g)
        for n in (n_min, n_min + 1):
            assert ip_preconditions(n * a, b + 1, scale(n, g))

    def test_gamma_33_values(self):
        params = construct_family((3, 3))
        assert (params.ell, params.b, params.a) == (9, 81, 1)

    def test_rejects_small_second_row(self):
        with pytest.raises(ValueError):
            construct_family((3, 1))
        with pytest.raises(ValueError):
            construct_family((5,))

    def test_report_form(self):
        report = verify_family((3, 3))
        assert report.status == PASS
        assert len(report.steps) == 3


class TestSaturationVerifier:
    def test_prop24_instance(self):
        report = verify_saturation_counterexample((1,) * 5, (1,) * 5, (3, 3), 2)
        assert report.status == PASS
        assert report.steps[0].values["gbar"] == "0"
        assert report.steps[1].values["gbar_scaled"] == "12"

    def test_theorem_instance_certificate(self):
        report = verify_saturation_counterexample((1,) * 8, (1,) * 8, (3, 3), 3)
        assert report.status == PASS
        assert "k-chain" in report.steps[1].values["certificate"]

    def test_not_a_counterexample(self):
        report = verify_saturation_counterexample((1,), (1,), (1,), 2)
        assert report.status == FAIL
        assert report.steps[0].verdict == FAIL

    def test_not_desk_feasible_without_certificate(self):
        report = verify_saturation_counterexample(
            (1,) * 5, (1,) * 5, (3, 3), 2, gbar_budget=10
        )
        # step 1 still passes via the Durfee certificate; step 2 has no route
        assert report.steps[0].verdict == PASS
        assert report.steps[1].verdict == NOT_DESK_FEASIBLE
        assert report.status == NOT_DESK_FEASIBLE

    def test_rectangle_certificate_route(self):
        report = verify_saturation_counterexample(
            (1,) * 81, (1,) * 81, (3, 3), 243, gbar_budget=10
        )
        assert report.steps[1].values.get("certificate") == "rectangle-positivity"
        assert report.status == PASS


class TestTheorem12Chain:
    def test_k3_direct_base(self):
        report = theorem12_chain(3)
        assert report.status == PASS
        base = next(s for s in report.steps if "base positivity" in s.description)
        assert base.values["mode"] == "direct"
        assert int(base.values["g_base"]) > 0

    @pytest.mark.parametrize("k", [4, 5])
    def test_k45_certified_base(self, k):
        report = theorem12_chain(k)
        assert report.status == PASS
        base = next(s for s in report.steps if "base positivity" in s.description)
        assert base.values["mode"] == "self-conjugate certificate"

    def test_pad_identities_checked_exactly(self):
        report = theorem12_chain(3)
        pads = [s for s in report.steps if s.description.startswith("pad identity")]
        assert [s.values["padded"] for s in pads] == ["3^9", "9^3"]

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            theorem12_chain(2)


class TestReport:
    def test_status_aggregation(self):
        report = VerificationReport(claim="demo")
        report.add("a", PASS, x=1)
        assert report.status == PASS
        report.add("b", NOT_DESK_FEASIBLE)
        assert report.status == NOT_DESK_FEASIBLE
        report.add("c", FAIL)
        assert report.status == FAIL

    def test_text_form_is_decimal_key_value_tree(self):
        report = verify_saturation_counterexample((1,) * 5, (1,) * 5, (3, 3), 2)
        text = report.to_text()
        assert text.splitlines()[0] == (
            "claim: saturation-counterexample alpha=1^5 beta=1^5 gamma=3^2 N=2"
        )
        assert "status: pass" in text
        assert "gbar: 0" in text
        assert "gbar_scaled: 12" in text


class TestMaxScan:
    def test_n1(self):
        bound, best, argmax, gmax = max_scan(1)
        assert (bound, best) == (3, 1)
        assert gmax == 1
        assert best >= gmax

    def test_n2_bound_and_argmax_order(self):
        bound, best, argmax, gmax = max_scan(2)
        assert best >= gmax
        assert scan_respects_bound(2, best)
        keys = [
            tuple((p.size, tuple(-x for x in p)) for p in t) for t in argmax
        ]
        assert keys == sorted(keys)

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            max_scan(13)

    def test_jobs_invariance(self):
        assert max_scan(1, jobs=1) == max_scan(1, jobs=4)
