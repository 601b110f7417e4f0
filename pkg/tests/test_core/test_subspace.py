"""Tests for cyclocode.core.subspace, echelon enumeration and subspace operations."""

from __future__ import annotations

import numpy as np
import pytest

from cyclocode.core import subspace
from cyclocode.core.cyclotomy import build_defining_set
from cyclocode.core.field import build_field
from cyclocode.core.subspace import (
    Subspace,
    SubspaceIter,
    coset_profile,
    enumerate_subspaces,
    gaussian_binomial,
    intersect_count,
    subfield_subspace,
    sweep_max,
    trace_dual,
)
from cyclocode.errors import BudgetExceeded, InvalidArgument


class TestGaussianBinomial:
    def test_values(self):
        assert gaussian_binomial(4, 2, 2) == 35
        assert gaussian_binomial(6, 3, 2) == 1395
        assert gaussian_binomial(2, 1, 3) == 4
        assert gaussian_binomial(5, 0, 2) == 1

    def test_out_of_range(self):
        with pytest.raises(InvalidArgument):
            gaussian_binomial(3, 4, 2)


# ── Subspace objects ─────────────────────────────────────────────────


class TestSubspace:
    def test_from_elements(self, f16):
        H = Subspace.from_elements(f16, [f16.theta, f16.element(2), f16.theta + f16.element(2)])
        assert H.r == 2
        assert len(H.elements()) == 4
        assert H.contains(f16.theta + f16.element(2))
        assert not H.contains(f16.one)

    def test_full_and_zero(self, f9):
        assert sorted(Subspace.full(f9).member_codes.tolist()) == list(range(9))
        assert Subspace.zero(f9).member_codes.tolist() == [0]

    def test_equality_uses_echelon_form(self, f16):
        a = Subspace.from_elements(f16, [f16.one, f16.theta])
        b = Subspace.from_elements(f16, [f16.one + f16.theta, f16.theta])
        assert a == b
        assert hash(a) == hash(b)

    def test_basis_elements(self, f16):
        H = Subspace.from_elements(f16, [f16.theta])
        assert H.basis_elements() == [f16.theta]

    def test_member_exponents(self, f9):
        H = Subspace.from_elements(f9, [f9.one])
        assert sorted(H.member_exponents.tolist()) == [0, 4]


# ── Enumeration ──────────────────────────────────────────────────────


class TestEnumeration:
    def test_count_and_distinct(self, f16):
        spaces = list(SubspaceIter(f16, 2))
        assert len(spaces) == 35
        assert len(set(spaces)) == 35
        assert all(len(set(H.member_codes.tolist())) == 4 for H in spaces)

    def test_ternary_lines(self, f9):
        spaces = list(enumerate_subspaces(f9, 1))
        assert len(spaces) == 4

    def test_bases_are_echelon(self, f9):
        for H in SubspaceIter(f9, 1):
            assert H == Subspace.from_vectors(f9, H.basis)

    def test_small_chunks_same_order(self, f16):
        default = [H.basis.tolist() for H in SubspaceIter(f16, 2)]
        chunked = [H.basis.tolist() for H in SubspaceIter(f16, 2, chunk=3)]
        assert default == chunked

    def test_budget(self, flagship_field):
        with pytest.raises(BudgetExceeded):
            enumerate_subspaces(flagship_field, 3, budget=1000)

    def test_sweep_ties_keep_first(self, f16):
        best, witness = sweep_max(f16, 1, lambda bases, pivots: np.zeros(len(bases)))
        assert best == 0
        assert witness.basis.tolist() == [[1, 0, 0, 0]]

    def test_sweep_threads(self, f16):
        def score(bases, pivots):
            return bases.sum(axis=(1, 2))

        single = sweep_max(f16, 2, score)
        threaded = sweep_max(f16, 2, score, threads=3)
        assert single[0] == threaded[0]
        assert single[1] == threaded[1]


# ── Operations ───────────────────────────────────────────────────────


class TestOperations:
    def test_intersect_with_full_space(self, flagship_spec, flagship_field):
        dset = build_defining_set(flagship_spec, flagship_field)
        assert intersect_count(Subspace.full(flagship_field), dset.elements) == 21
        assert intersect_count(Subspace.zero(flagship_field), dset.elements) == 0

    def test_trace_dual_dimension(self, f16):
        for H in SubspaceIter(f16, 1):
            assert trace_dual(H).r == 3

    def test_trace_dual_is_involution(self, f9):
        for H in SubspaceIter(f9, 1):
            assert trace_dual(trace_dual(H)) == H

    def test_trace_dual_of_zero(self, f16):
        assert trace_dual(Subspace.zero(f16)) == Subspace.full(f16)

    def test_subfields(self, flagship_field):
        f8 = subfield_subspace(flagship_field, 3)
        f4 = subfield_subspace(flagship_field, 2)
        assert (f8.r, f4.r) == (3, 2)
        assert coset_profile(f8, 3) == (7, 0, 0)
        assert coset_profile(f4, 3) == (3, 0, 0)

    def test_subfield_degree_must_divide(self, flagship_field):
        with pytest.raises(InvalidArgument):
            subfield_subspace(flagship_field, 4)

    def test_profile_without_materialising(self, flagship_field, monkeypatch):
        H = subfield_subspace(flagship_field, 3)
        expected = coset_profile(H, 3)
        monkeypatch.setattr(subspace, "_MATERIALIZE_LIMIT", 1)
        assert coset_profile(H, 3) == expected

    def test_profile_totals(self, flagship_field):
        for H in enumerate_subspaces(flagship_field, 2):
            assert sum(coset_profile(H, 3)) == 3


# ── Tabulated sweeps ─────────────────────────────────────────────────


class TestSubspaceTable:
    @pytest.mark.parametrize(
        "fixture,r", [("f16", 1), ("f16", 2), ("f16", 3), ("f9", 1), ("flagship_field", 3)]
    )
    def test_every_point_in_same_number_of_subspaces(self, fixture, r, request):
        ctx = request.getfixturevalue(fixture)
        table = subspace.subspace_table(ctx, r)
        per_point = table.incidence.sum(axis=1)
        assert set(per_point.tolist()) == {gaussian_binomial(ctx.m - 1, r - 1, ctx.q)}

    def test_incidence_by_membership(self, f16):
        for x in f16.elements()[1:]:
            count = sum(H.contains(x) for H in SubspaceIter(f16, 2))
            assert count == gaussian_binomial(3, 1, 2) == 7

    def test_rows_follow_enumeration_order(self, f16):
        table = subspace.subspace_table(f16, 2)
        spaces = list(SubspaceIter(f16, 2))
        assert len(table) == len(spaces) == 35
        assert all(table.subspace(i) == H for i, H in enumerate(spaces))

    def test_annihilator_is_trace_dual(self, f16):
        table = subspace.subspace_table(f16, 1)
        for b in range(len(table)):
            dual = trace_dual(table.subspace(b))
            expected = np.zeros(f16.order, dtype=bool)
            expected[dual.member_exponents] = True
            assert table.annihilator[:, b].tolist() == expected.tolist()

    def test_class_profile_is_cached(self, flagship_field):
        table = subspace.subspace_table(flagship_field, 2)
        profile = table.class_profile(3)
        assert profile is table.class_profile(3)
        assert profile.sum(axis=1).tolist() == [3] * len(table)

    def test_best_matches_sweep(self, flagship_field):
        table = subspace.subspace_table(flagship_field, 2)
        profile = table.class_profile(3)
        best, witness = table.best(profile[:, 0])
        expected = sweep_max(
            flagship_field,
            2,
            lambda bases, pivots: subspace.class_profile(
                subspace.batch_member_exponents(bases, flagship_field), 3
            )[:, 0],
        )
        assert best == expected[0]
        assert witness == expected[1]

    def test_table_is_cached(self, f16):
        assert subspace.subspace_table(f16, 2) is subspace.subspace_table(f16, 2)

    def test_large_fields_do_not_fit(self, flagship_field):
        assert subspace.table_fits(flagship_field, 3)
        assert not subspace.table_fits(build_field(2, 1, 12), 6)
