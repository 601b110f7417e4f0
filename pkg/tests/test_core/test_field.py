"""Tests for cyclocode.core.field, tables, arithmetic and traces."""

from __future__ import annotations

import numpy as np
import pytest

from cyclocode.core.field import (
    Subfield,
    build_field,
    coord_symbols,
    coords,
    find_primitive_poly,
    inverse,
    is_prime,
    is_primitive_poly,
    multiplicative_order,
    power,
    prime_factors,
    trace_q_to_p,
    trace_to_subfield,
    uncoords,
    uncoords_symbols,
)
from cyclocode.errors import (
    DimensionMismatch,
    FieldTooLarge,
    InvalidArgument,
    MixedContexts,
    NotPrime,
    ZeroArgument,
)


# ── Integer and polynomial helpers ───────────────────────────────────


class TestHelpers:
    def test_is_prime(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_prime_factors(self):
        assert prime_factors(63) == [3, 7]
        assert prime_factors(80) == [2, 5]

    def test_first_binary_quartic(self):
        assert find_primitive_poly(2, 4) == (1, 1, 0, 0, 1)

    def test_first_binary_sextic(self):
        assert find_primitive_poly(2, 6) == (1, 1, 0, 0, 0, 0, 1)

    def test_first_ternary_quadratic(self):
        assert find_primitive_poly(3, 2) == (2, 1, 1)

    def test_irreducible_but_not_primitive(self):
        # x^4 + x^3 + x^2 + x + 1 has order 5
        assert not is_primitive_poly([1, 1, 1, 1], 2)


# ── Construction ─────────────────────────────────────────────────────


class TestBuildField:
    def test_sizes(self, flagship_field):
        assert flagship_field.q == 2
        assert flagship_field.Q == 64
        assert flagship_field.order == 63
        assert flagship_field.primitive_poly == (1, 1, 0, 0, 0, 0, 1)

    def test_context_is_cached(self):
        assert build_field(2, 1, 4) is build_field(2, 1, 4)

    def test_antilog_follows_polynomial(self, f16):
        # θ^4 = θ + 1
        assert int(f16.antilog_table[4]) == 0b0011

    def test_log_inverts_antilog(self, f9):
        for k in range(f9.order):
            assert int(f9.log_table[f9.antilog_table[k]]) == k
        assert int(f9.log_table[0]) == -1

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            build_field(4, 1, 2)

    def test_bad_degree(self):
        with pytest.raises(InvalidArgument):
            build_field(2, 0, 3)

    def test_field_cap(self):
        with pytest.raises(FieldTooLarge):
            build_field(2, 1, 10, cap=512)

    def test_explicit_polynomial(self):
        ctx = build_field(3, 1, 2, poly=(2, 2, 1))
        assert ctx.primitive_poly == (2, 2, 1)
        assert int(ctx.trace_q[1]) == 1

    def test_explicit_polynomial_must_be_primitive(self):
        with pytest.raises(InvalidArgument):
            build_field(2, 1, 4, poly=(1, 1, 1, 1, 1))

    def test_explicit_polynomial_wrong_degree(self):
        with pytest.raises(DimensionMismatch):
            build_field(2, 1, 4, poly=(1, 1, 1))

    def test_subfield_symbols(self):
        ctx = build_field(2, 2, 2)
        assert ctx.q == 4
        assert ctx.fq_element(0).is_zero
        assert ctx.fq_element(1) == ctx.one
        assert [ctx.symbol_of(x) for x in ctx.fq_elements()] == [0, 1, 2, 3]


# ── Arithmetic ───────────────────────────────────────────────────────


class TestArithmetic:
    def test_multiplication_adds_exponents(self, f16):
        assert f16.element(5) * f16.element(12) == f16.element(2)

    def test_inverse(self, f16):
        assert inverse(f16.element(3)) == f16.element(12)

    def test_inverse_of_zero(self, f16):
        with pytest.raises(ZeroArgument):
            inverse(f16.zero)

    def test_zero_is_zero_division_error(self, f16):
        with pytest.raises(ZeroDivisionError):
            inverse(f16.zero)

    def test_additive_inverse(self, f9):
        for x in f9.elements():
            assert (x + (-x)).is_zero
            assert (x - x).is_zero

    def test_distributive(self, f9):
        a, b = f9.element(3), f9.element(5)
        for c in f9.elements():
            assert c * (a + b) == c * a + c * b

    def test_power_of_zero(self, f16):
        assert power(f16.zero, 0) == f16.one
        assert power(f16.zero, 3).is_zero
        with pytest.raises(ZeroArgument):
            power(f16.zero, -1)

    def test_multiplicative_order(self, f16):
        assert multiplicative_order(f16.element(5)) == 3
        assert multiplicative_order(f16.theta) == 15

    def test_from_coeffs(self, f16):
        assert f16.from_coeffs([1, 1]) == f16.element(4)

    def test_from_coeffs_too_long(self, f16):
        with pytest.raises(DimensionMismatch):
            f16.from_coeffs([1, 0, 0, 0, 1])

    def test_mixed_contexts(self, f16, f9):
        with pytest.raises(MixedContexts):
            f16.one + f9.one

    def test_repr(self, f16):
        assert repr(f16.zero) == "0"
        assert repr(f16.element(7)) == "θ^7"

    @pytest.mark.parametrize("pem", [(2, 1, 6), (3, 1, 4), (5, 1, 2)])
    def test_frobenius_is_additive(self, pem):
        ctx = build_field(*pem)
        rng = np.random.default_rng(7)
        # -1 stands for the zero element
        pairs = rng.integers(-1, ctx.order, size=(1000, 2))

        def elem(k):
            return ctx.zero if k < 0 else ctx.element(int(k))

        for a, b in pairs:
            x, y = elem(a), elem(b)
            assert power(x + y, ctx.p) == power(x, ctx.p) + power(y, ctx.p)


# ── Traces ───────────────────────────────────────────────────────────


class TestTraces:
    def test_trace_of_one_is_m(self, f16, f9):
        assert trace_to_subfield(f16.one).is_zero
        assert f9.symbol_of(trace_to_subfield(f9.one)) == 2

    def test_trace_is_additive(self, f16):
        elems = f16.elements()
        for a in elems:
            for b in elems:
                assert trace_to_subfield(a + b) == trace_to_subfield(a) + trace_to_subfield(b)

    def test_trace_lands_in_subfield(self, f9):
        for x in f9.elements():
            f9.symbol_of(trace_to_subfield(x))

    @pytest.mark.parametrize("pem", [(2, 1, 6), (3, 1, 3), (2, 2, 3)])
    def test_trace_fibers_are_even(self, pem):
        ctx = build_field(*pem)
        fibers = np.bincount(ctx.trace_q, minlength=ctx.q)
        fibers[ctx.symbol_of(ctx.zero)] += 1  # Tr(0) = 0
        assert fibers.tolist() == [ctx.q ** (ctx.m - 1)] * ctx.q

    def test_trace_table_matches_elementwise(self, f9):
        for x in f9.elements()[1:]:
            assert f9.trace_q[x.exp] == f9.symbol_of(trace_to_subfield(x))

    def test_tower_trace_composes(self):
        ctx = build_field(2, 2, 2)
        for x in ctx.elements():
            via_q = trace_q_to_p(trace_to_subfield(x, Subfield.FQ))
            assert trace_to_subfield(x, Subfield.FP) == via_q

    def test_trace_q_to_p_needs_subfield_element(self):
        ctx = build_field(2, 2, 2)
        with pytest.raises(InvalidArgument):
            trace_q_to_p(ctx.theta)


# ── Coordinates ──────────────────────────────────────────────────────


class TestCoordinates:
    def test_theta_is_second_basis_vector(self, f16, f9):
        assert coord_symbols(f16.theta) == (0, 1, 0, 0)
        assert coord_symbols(f9.theta) == (0, 1)

    def test_uncoords_symbols(self, f16):
        assert uncoords_symbols(f16, [0, 1, 0, 0]) == f16.theta

    def test_coords_invert(self, f9):
        for x in f9.elements():
            assert uncoords(f9, coords(x)) == x

    def test_wrong_length(self, f16):
        with pytest.raises(DimensionMismatch):
            uncoords_symbols(f16, [1, 0])

    def test_symbol_of_outside_subfield(self, f16):
        with pytest.raises(InvalidArgument):
            f16.symbol_of(f16.theta)
