"""Tests for cyclocode.core.closedform, semi-primitive predictions and bounds."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cyclocode.core.characters import exponential_sum
from cyclocode.core.closedform import (
    NOT_COVERED,
    bounds,
    corollary1_ghw,
    corollary2_ghw,
    is_r_mds,
    lemma1_exp_sum,
    lemma1_periods,
    remark3_mds_parameters,
    remark_formulas,
    semiprimitive_params,
    semiprimitive_witnesses,
    theorem3_predict,
)
from cyclocode.core.models import BoundSet, CodeSpec
from cyclocode.errors import InvalidArgument, NotApplicable


# ── Semi-primitive parameters ────────────────────────────────────────


class TestSemiPrimitive:
    def test_flagship_witnesses(self, flagship_spec):
        found = [(w.k, w.l, w.h0, w.sign) for w in semiprimitive_witnesses(flagship_spec)]
        assert found == [(3, 1, 0, -1), (1, 3, 0, -1)]

    def test_preferred_witness(self, flagship_spec):
        sp = semiprimitive_params(flagship_spec)
        assert sp.to_dict() == {"k": 3, "l": 1, "h0": 0, "sign": -1}

    def test_witness_order_does_not_change_periods(self, flagship_spec):
        witnesses = semiprimitive_witnesses(flagship_spec)
        periods = {tuple(lemma1_periods(flagship_spec, w)) for w in witnesses}
        assert periods == {(5, -3, -3)}

    def test_even_l(self, gap_spec):
        sp = semiprimitive_params(gap_spec)
        assert (sp.k, sp.l, sp.h0, sp.sign) == (1, 2, 0, 1)

    def test_odd_characteristic_shifts_h0(self):
        witnesses = semiprimitive_witnesses(CodeSpec(3, 1, 4, 2, (0,)))
        assert [(w.l, w.h0) for w in witnesses] == [(1, 1), (2, 0)]

    def test_not_semiprimitive(self):
        with pytest.raises(NotApplicable):
            semiprimitive_params(CodeSpec(2, 1, 6, 7, (0,)))

    def test_periods(self, flagship_spec, gap_spec, ternary_spec):
        assert lemma1_periods(flagship_spec) == [5, -3, -3]
        assert lemma1_periods(gap_spec) == [-3, 1, 1]
        assert lemma1_periods(ternary_spec) == [1, -2]
        assert all(isinstance(x, Fraction) for x in lemma1_periods(ternary_spec))

    def test_two_valued_sum_matches_direct(self, flagship_spec, flagship_field):
        sp = semiprimitive_params(flagship_spec)
        for k in range(flagship_field.order):
            x = flagship_field.element(k)
            assert abs(exponential_sum(x, 3) - lemma1_exp_sum(x, sp)) < 1e-9


# ── Weight table ─────────────────────────────────────────────────────


class TestWeightTable:
    def test_flagship(self, flagship_spec):
        prediction = theorem3_predict(flagship_spec)
        assert prediction.rows == [(8, 21), (12, 42)]
        assert (prediction.length, prediction.dimension) == (21, 6)
        assert prediction.as_distribution() == {0: 1, 8: 21, 12: 42}

    def test_gap_spec(self, gap_spec):
        assert theorem3_predict(gap_spec).as_distribution() == {0: 1, 2: 10, 4: 5}

    def test_ternary(self, ternary_spec):
        assert theorem3_predict(ternary_spec).rows == [(1, 4), (2, 4)]

    def test_simplex_drops_empty_row(self, simplex_spec):
        assert theorem3_predict(simplex_spec).rows == [(8, 15)]

    def test_witnesses_agree(self):
        prediction = theorem3_predict(CodeSpec(3, 1, 4, 2, (0,)))
        assert sum(c for _, c in prediction.rows) == 80

    def test_not_applicable(self):
        with pytest.raises(NotApplicable):
            theorem3_predict(CodeSpec(2, 1, 6, 7, (0,)))


# ── Hierarchies ──────────────────────────────────────────────────────


class TestHierarchyFormulas:
    def test_corollary1_flagship(self, flagship_spec):
        assert [corollary1_ghw(flagship_spec, r) for r in range(1, 7)] == [8, 12, 14, 18, 20, 21]

    def test_corollary1_ternary(self, ternary_spec):
        assert [corollary1_ghw(ternary_spec, r) for r in (1, 2)] == [1, 2]

    def test_corollary1_needs_odd_l(self, gap_spec):
        with pytest.raises(NotApplicable):
            corollary1_ghw(gap_spec, 1)

    def test_corollary2_gap(self, gap_spec):
        values = [corollary2_ghw(gap_spec, r) for r in range(1, 5)]
        assert values == [2, NOT_COVERED, 4, 5]

    def test_corollary2_needs_s_below_h(self, simplex_spec):
        with pytest.raises(NotApplicable):
            corollary2_ghw(simplex_spec, 1)

    def test_corollaries_agree_when_both_apply(self):
        spec = CodeSpec(3, 1, 4, 2, (0,))
        assert corollary1_ghw(spec, 1) == corollary2_ghw(spec, 1) == 12

    def test_r_range(self, flagship_spec):
        with pytest.raises(InvalidArgument):
            corollary1_ghw(flagship_spec, 7)

    def test_not_covered_sentinel(self):
        assert not NOT_COVERED
        assert repr(NOT_COVERED) == "NotCovered"


class TestRemarks:
    def test_s_equals_h(self, simplex_spec):
        assert [remark_formulas(simplex_spec, r) for r in range(1, 5)] == [8, 12, 14, 15]

    def test_next_to_last(self, flagship_spec, gap_spec):
        assert remark_formulas(flagship_spec, 5) == 20
        assert remark_formulas(gap_spec, 3) == 4
        assert remark_formulas(flagship_spec, 2) is None

    def test_mds_parameters(self, ternary_spec):
        assert remark3_mds_parameters(ternary_spec) == (2, 2, 1)

    def test_mds_needs_m_two(self, flagship_spec):
        with pytest.raises(NotApplicable):
            remark3_mds_parameters(flagship_spec)


# ── Bounds ───────────────────────────────────────────────────────────


class TestBounds:
    def test_flagship_r1(self):
        assert bounds(21, 6, 2, 1, 8) == BoundSet(1, 16, 8, 10)

    def test_flagship_r6(self):
        b = bounds(21, 6, 2, 6, 8)
        assert (b.griesmer_lo, b.plotkin_hi, b.singleton_hi) == (17, 21, 21)
        assert b.admits(21)

    def test_simplex_meets_plotkin(self):
        for r, d in enumerate([8, 12, 14, 15], start=1):
            assert bounds(15, 4, 2, r, 8).plotkin_hi == d

    def test_admits(self):
        b = bounds(21, 6, 2, 2, 8)
        assert b.admits(12)
        assert not b.admits(11)
        assert not b.admits(17)

    def test_r_range(self):
        with pytest.raises(InvalidArgument):
            bounds(21, 6, 2, 0, 8)

    def test_r_mds(self):
        assert is_r_mds(1, 2, 2, 1)
        assert not is_r_mds(8, 21, 6, 1)
