from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from fubiniflat import (
    CheckPoint,
    ConjectureReport,
    ConvergenceFailure,
    Limits,
    TruncatedSeries,
    check_eulerian_conjecture,
    check_genfunc,
    descents,
    eulerian_row,
    eulerian_survey,
    eulerian_weighted_sum,
    flat_runs_totals,
    genfunc_coefficients,
)
from fubiniflat.conjectures import REPORT_FORMAT, VERDICT_MISMATCH, VERDICT_SUPPORTED

from oracles import brute_stirling_words, double_factorial_odd


def schoolbook_product(a_coeffs, b_coeffs, degree):
    out = [Fraction(0)] * (degree + 1)
    for i, a in enumerate(a_coeffs):
        for j, b in enumerate(b_coeffs):
            if i + j <= degree:
                out[i + j] += a * b
    return tuple(out)


class TestTruncatedSeries:
    def test_multiplication_matches_schoolbook(self):
        rng = random.Random(20240917)
        for _ in range(40):
            degree = rng.randint(0, 8)
            a = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(degree + 1)]
            b = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(degree + 1)]
            lhs = TruncatedSeries(degree, a) * TruncatedSeries(degree, b)
            assert lhs.coeffs == schoolbook_product(a, b, degree)

    def test_addition_and_scaling(self):
        s = TruncatedSeries(3, [1, 2, 3, 4])
        t = TruncatedSeries(3, [4, 3, 2, 1])
        assert (s + t).coeffs == (5, 5, 5, 5)
        assert s.scaled(Fraction(1, 2)).coeffs == (
            Fraction(1, 2),
            Fraction(1),
            Fraction(3, 2),
            Fraction(2),
        )

    def test_shift_up_truncates(self):
        s = TruncatedSeries(2, [1, 2, 3])
        assert s.shift_up().coeffs == (0, 1, 2)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries(2, [1]) * TruncatedSeries(3, [1])

    def test_truncation_keeps_low_coefficients_exact(self):
        # Multiplying by x then reading low coefficients must agree with the
        # untruncated product.
        s = TruncatedSeries(4, [1, 1, 1, 1, 1])
        p = s * s
        assert p.coeffs == (1, 2, 3, 4, 5)


class TestGenfuncCoefficients:
    def test_first_two_coefficients_are_one(self):
        sc = genfunc_coefficients(1)
        assert sc.rounded == (1, 1)
        assert sc.max_residual < Fraction(1, 2**50)

    def test_matches_enumerated_totals_shifted(self):
        sc = genfunc_coefficients(7)
        totals = flat_runs_totals(8)
        assert sc.rounded[0] == totals[0] == totals[1]
        for d in range(1, 8):
            assert sc.rounded[d] == totals[d + 1]

    def test_explicit_term_count(self):
        sc = genfunc_coefficients(3, terms=20)
        assert sc.terms_used == 20
        assert len(sc.exact) == 4

    def test_nonconvergence_is_explicit(self):
        with pytest.raises(ConvergenceFailure):
            genfunc_coefficients(8, max_terms=12)

    def test_increments_eventually_shrink(self):
        # Measured onset of decay for coefficient d is around step 1.6*d (the
        # polynomial growth of the product loses to the 2^-(n+1) weight), so
        # from step 2d + 1 on the per-coefficient increments never grow.
        degree = 10
        one = TruncatedSeries.constant(1, degree)
        one_plus_x = TruncatedSeries(degree, [1, 1])
        product = one
        power = one
        prev = None
        for n in range(1, 40):
            power = power * one_plus_x
            product = product * (one + power.shift_up())
            term = product.scaled(Fraction(1, 2 ** (n + 1)))
            if prev is not None:
                for d in range(degree + 1):
                    if n >= 2 * d + 1:
                        assert term.coeffs[d] <= prev.coeffs[d], (n, d)
            prev = term

    def test_exact_arithmetic_denominators_are_powers_of_two(self):
        sc = genfunc_coefficients(4, terms=12)
        for value in sc.exact:
            denominator = value.denominator
            assert denominator & (denominator - 1) == 0


class TestCheckGenfunc:
    def test_report_structure_and_finding(self):
        report = check_genfunc(6)
        assert report.conjecture == "flat-runs-generating-function"
        assert [p.label for p in report.points] == [f"n={n}" for n in range(7)]
        assert report.points[0].match and report.points[1].match
        assert not report.ok
        assert report.verdict == VERDICT_MISMATCH
        assert any("shifted identity holds" in note for note in report.notes)

    def test_computed_side_is_enumeration(self):
        report = check_genfunc(5)
        assert tuple(p.computed for p in report.points) == (1, 1, 1, 3, 9, 35)

    def test_claimed_side_is_series(self):
        report = check_genfunc(5)
        assert tuple(p.claimed for p in report.points) == (1, 1, 3, 9, 35, 157)


class TestEulerianRows:
    def test_recurrence_rows(self):
        assert eulerian_row(1, "plain").counts == (1,)
        assert eulerian_row(2, "plain").counts == (1, 2)
        assert eulerian_row(3, "plain").counts == (1, 8, 6)
        assert eulerian_row(4, "plain").counts == (1, 22, 58, 24)

    def test_row_sums(self):
        for m in range(1, 9):
            assert eulerian_row(m, "plain").row_sum == double_factorial_odd(m)
            assert eulerian_row(m, "sentinel").row_sum == double_factorial_odd(m)

    def test_convention_offsets(self):
        plain = eulerian_row(3, "plain")
        sentinel = eulerian_row(3, "sentinel")
        assert plain.counts == sentinel.counts
        assert plain.k_min == 0 and sentinel.k_min == 1
        assert plain.value(0) == 1 and sentinel.value(0) == 0
        assert sentinel.value(1) == 1

    def test_matches_independent_descent_counts(self):
        for m in range(1, 5):
            for convention, k_min in (("plain", 0), ("sentinel", 1)):
                brute = [0] * m
                for word in brute_stirling_words(m):
                    brute[descents(word, convention) - k_min] += 1
                assert tuple(brute) == eulerian_row(m, convention).counts

    def test_brute_force_side_runs_within_ceiling(self):
        # With the ceiling high enough the stream cross-check actually runs.
        row = eulerian_row(5, "plain", limits=Limits(stirling_ceiling=5))
        assert row.counts == (1, 52, 328, 444, 120)

    def test_weighted_sums(self):
        assert eulerian_weighted_sum(2, 2, "sentinel") == 10
        assert eulerian_weighted_sum(3, 3, "sentinel") == 82
        assert eulerian_weighted_sum(4, 4, "sentinel") == 938


class TestCheckEulerian:
    def test_lhs_columns_match_reference_counts(self):
        report = check_eulerian_conjecture([2, 3], "max", "plain")
        assert tuple(p.computed for p in report.points) == (10, 82)

    def test_paper_k_rule_reads_other_column(self):
        # k = j - 1: for j = 2 that is the k = 1 column of length 5, which
        # holds the single strictly increasing ranking.
        report = check_eulerian_conjecture([2], "paper", "plain")
        assert report.points[0].computed == 1

    def test_literal_identity_fails_under_all_settings(self):
        assert set(eulerian_survey([2]).values()) == {False}

    def test_notes_record_the_working_alternative(self):
        report = check_eulerian_conjecture([2, 3], "max", "sentinel")
        assert all("row order j, sentinel" in note for note in report.notes)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            check_eulerian_conjecture([0], "max", "plain")
        with pytest.raises(ValueError):
            check_eulerian_conjecture([2], "maximal", "plain")
        with pytest.raises(ValueError):
            check_eulerian_conjecture([2], "max", "final")


class TestReportSerialization:
    def build(self):
        return ConjectureReport(
            conjecture="demo",
            parameters=(("alpha", "1"),),
            points=(CheckPoint("p1", 3, 3), CheckPoint("p2", 4, 5)),
            notes=("a note",),
        )

    def test_text_has_version_header_and_verdict(self):
        text = self.build().to_text()
        assert text.startswith(REPORT_FORMAT)
        assert VERDICT_MISMATCH in text
        assert "p2" in text

    def test_supported_verdict(self):
        report = ConjectureReport("demo", (), (CheckPoint("x", 1, 1),))
        assert report.verdict == VERDICT_SUPPORTED
        assert report.ok

    def test_json_round_trips(self):
        payload = json.loads(self.build().to_json())
        assert payload["format"] == REPORT_FORMAT
        assert payload["points"][1] == {
            "label": "p2",
            "claimed": 4,
            "computed": 5,
            "match": False,
        }
        assert payload["mismatches"] == ["p2"]

    def test_serialization_deterministic(self):
        assert self.build().to_json() == self.build().to_json()
        assert self.build().to_text() == self.build().to_text()
