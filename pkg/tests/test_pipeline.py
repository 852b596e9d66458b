"""End-to-end verdicts, report invariants, and rendering."""

from __future__ import annotations

import pytest

from knotsig import (
    AnalysisRequest,
    VERDICT_NOT_ADMISSIBLE,
    VERDICT_OBSTRUCTION_UNKNOWN,
    VERDICT_OUT_OF_SCOPE,
    VERDICT_REALIZABLE,
    analyze,
    analyze_tau,
    mil_nonempty,
    parse_poly,
    report_from_json,
    report_render,
)
from conftest import make_delta_a


class TestVerdicts:
    def test_realizable_product(self, delta1, delta2):
        rep = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8))
        assert rep.verdict == VERDICT_REALIZABLE
        assert rep.rho == 8
        assert rep.group["rank"] == 0
        assert rep.pi_table[0]["primes"] == [2]
        assert rep.witnesses["tau"] == [2, 2, 2, 2]
        assert rep.epsilon_status == "trivially zero"

    def test_obstruction_unknown(self, g1, delta1):
        for s in (8, -8):
            rep = analyze(AnalysisRequest(delta=g1 * delta1, m=7, signature=s))
            assert rep.verdict == VERDICT_OBSTRUCTION_UNKNOWN
            assert rep.rho == 8
            assert rep.group["rank"] == 1
            assert rep.epsilon_status == "requires external evaluation"

    def test_delta_a_product_realizable(self):
        rep = analyze(AnalysisRequest(delta=make_delta_a(0) * make_delta_a(2), m=7, signature=8))
        assert rep.verdict == VERDICT_REALIZABLE

    def test_mod16_gate(self, delta1, delta2):
        rep = analyze(AnalysisRequest(delta=delta1 * delta2, m=3, signature=8))
        assert rep.verdict == VERDICT_NOT_ADMISSIBLE
        assert "16" in rep.reason

    def test_rho_bound_gate(self, delta1, delta2):
        rep = analyze(AnalysisRequest(delta=delta1 * delta2, m=3, signature=16))
        assert rep.verdict == VERDICT_NOT_ADMISSIBLE
        assert "rho" in rep.reason

    def test_mod8_gate(self, delta1, delta2):
        rep = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=4))
        assert rep.verdict == VERDICT_NOT_ADMISSIBLE
        assert "8" in rep.reason

    def test_signature_zero_realizable(self, delta1):
        rep = analyze(AnalysisRequest(delta=delta1, m=7, signature=0))
        assert rep.verdict == VERDICT_REALIZABLE

    def test_signature_zero_never_gated(self, delta1, delta2, g1):
        # s = 0 always clears the admissibility gates on the corpus
        for delta in (delta1, delta2, delta1 * delta2, g1 * delta1):
            for m in (3, 7, 11):
                rep = analyze(AnalysisRequest(delta=delta, m=m, signature=0))
                assert rep.verdict in (VERDICT_REALIZABLE, VERDICT_OBSTRUCTION_UNKNOWN)

    def test_out_of_scope_conditions(self):
        rep = analyze(AnalysisRequest(delta=parse_poly("x^2 - x + 1"), m=7, signature=0))
        assert rep.verdict == VERDICT_OUT_OF_SCOPE
        assert "Delta(1)" in rep.reason

    def test_out_of_scope_asymmetric_factor(self):
        rep = analyze(AnalysisRequest(delta=parse_poly("2*x^2 - 5*x + 2"), m=7, signature=0))
        assert rep.verdict == VERDICT_OUT_OF_SCOPE
        assert "1-X" in rep.reason

    def test_out_of_scope_not_squarefree(self, delta1):
        rep = analyze(AnalysisRequest(delta=delta1 * delta1, m=7, signature=0))
        assert rep.verdict == VERDICT_OUT_OF_SCOPE
        assert "squarefree" in rep.reason

    def test_indecomposability_note(self, delta1, delta2):
        rep = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8))
        assert any("indecomposable" in note for note in rep.notes)
        rep0 = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=0))
        assert not any("indecomposable" in note for note in rep0.notes)

    def test_m_validation(self, delta1):
        with pytest.raises(ValueError, match="m = 5"):
            AnalysisRequest(delta=delta1, m=5, signature=0)
        with pytest.raises(ValueError, match="m = 2"):
            AnalysisRequest(delta=delta1, m=2, signature=0)


class TestTauPath:
    def test_all_plus_realizable(self, delta1, delta2):
        rep = analyze_tau(AnalysisRequest(delta=delta1 * delta2, m=7, tau=(2, 2, 2, 2)))
        assert rep.verdict == VERDICT_REALIZABLE
        assert rep.witnesses["tau"] == [2, 2, 2, 2]
        assert rep.s == 8

    def test_obstructed(self, g1, delta1):
        rep = analyze_tau(AnalysisRequest(delta=g1 * delta1, m=7, tau=(2, 2, 2, 2)))
        assert rep.verdict == VERDICT_OBSTRUCTION_UNKNOWN

    def test_sum_gate(self, delta1, delta2):
        rep = analyze_tau(AnalysisRequest(delta=delta1 * delta2, m=7, tau=(2, 2, 2, -2)))
        assert rep.verdict == VERDICT_NOT_ADMISSIBLE  # sums to 4

    def test_domain_mismatch(self, delta1, delta2):
        with pytest.raises(ValueError, match="4 unit-circle factors"):
            analyze_tau(AnalysisRequest(delta=delta1 * delta2, m=7, tau=(2, 2)))

    def test_bad_values_rejected(self, delta1):
        with pytest.raises(ValueError, match="-2 or"):
            AnalysisRequest(delta=delta1, m=7, tau=(1, 2))


class TestReports:
    def test_json_round_trip(self, delta1, delta2, g1):
        for req in (
            AnalysisRequest(delta=delta1 * delta2, m=7, signature=8),
            AnalysisRequest(delta=g1 * delta1, m=7, signature=8),
            AnalysisRequest(delta=delta1 * delta2, m=3, signature=8),
            AnalysisRequest(delta=parse_poly("x^2 - x + 1"), m=7, signature=0),
        ):
            rep = analyze(req)
            assert report_from_json(report_render(rep, "json")) == rep

    def test_text_contains_verdict_and_rank(self, delta1, delta2):
        text = report_render(analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8)), "text")
        assert "REALIZABLE" in text and "rank 0" in text
        assert "witness" in text

    def test_out_of_scope_names_assumption(self):
        text = report_render(
            analyze(AnalysisRequest(delta=parse_poly("2*x^2 - 5*x + 2"), m=7, signature=0)), "text"
        )
        assert "OUT_OF_SCOPE" in text
        assert "not fixed by X -> 1-X" in text

    def test_unknown_format(self, delta1):
        rep = analyze(AnalysisRequest(delta=delta1, m=7, signature=0))
        with pytest.raises(ValueError, match="unknown format"):
            report_render(rep, "yaml")

    def test_deterministic_across_runs_and_seeds(self, delta1, delta2):
        a = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8, seed=0))
        b = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8, seed=0))
        assert a == b
        c = analyze(AnalysisRequest(delta=delta1 * delta2, m=7, signature=8, seed=9))
        assert c.verdict == a.verdict and c.group == a.group and c.rho == a.rho

    def test_reports_self_certifying(self, delta1, delta2, g1):
        """REALIZABLE implies the gates re-derivable from the report."""
        for delta in (delta1 * delta2, g1 * delta1, make_delta_a(0) * make_delta_a(2)):
            rep = analyze(AnalysisRequest(delta=delta, m=7, signature=8))
            if rep.verdict == VERDICT_REALIZABLE:
                assert mil_nonempty(rep.rho, rep.s)
                assert rep.group["rank"] == 0
                assert rep.s % 8 == 0 and abs(rep.s) <= rep.rho
