"""Additive and multiplicative characters, Gauss sums, S(α) and Gaussian periods.

Values are Python ``complex`` numbers computed in double precision. Roots of
unity are tabulated once per field context; sums run over ascending exponents.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from cyclocode.core.field import FieldCtx, FieldElem
from cyclocode.errors import InvalidArgument, NonIntegerResult, ZeroArgument

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CharSumCfg:
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InvalidArgument(f"tolerance must be > 0, got {self.tolerance!r}")


def snap_to_int(value: complex | float, tolerance: float = DEFAULT_TOLERANCE) -> int:
    """Nearest integer to ``value``, or NonIntegerResult if farther than tolerance."""
    z = complex(value)
    nearest = round(z.real)
    if abs(z.real - nearest) > tolerance or abs(z.imag) > tolerance:
        raise NonIntegerResult(f"{z!r} is not within {tolerance} of an integer")
    return int(nearest)


# ── Root tables ──────────────────────────────────────────────────────


@lru_cache(maxsize=32)
def _zeta_p(p: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(p) / p)


@lru_cache(maxsize=32)
def _roots(order: int) -> np.ndarray:
    """exp(2πi k / order) for k = 0..order-1."""
    return np.exp(2j * np.pi * np.arange(order) / order)


@lru_cache(maxsize=32)
def chi1_table(ctx: FieldCtx) -> np.ndarray:
    """χ_1(θ^k) for k = 0..Q-2."""
    return _zeta_p(ctx.p)[ctx.trace_p]


def psi_table(ctx: FieldCtx, j: int) -> np.ndarray:
    """ψ_j(θ^k) for k = 0..Q-2."""
    order = ctx.order
    ks = np.arange(order, dtype=np.int64)
    return _roots(order)[(j % order) * ks % order]


def _require_divisor(ctx: FieldCtx, h: int) -> None:
    if h < 1 or ctx.order % h:
        raise InvalidArgument(f"h={h!r} does not divide Q-1={ctx.order}")


# ── Characters ───────────────────────────────────────────────────────


def additive_char(b: FieldElem, c: FieldElem) -> complex:
    """χ_b(c) = ζ_p^Tr(bc)."""
    ctx = b.ctx
    ctx._check(c)
    if b.exp is None or c.exp is None:
        return 1 + 0j
    t = int(ctx.trace_p[(b.exp + c.exp) % ctx.order])
    return complex(_zeta_p(ctx.p)[t])


def mult_char(j: int, x: FieldElem) -> complex:
    """ψ_j(θ^k) = exp(2πi jk / (Q-1))."""
    if x.exp is None:
        raise ZeroArgument("Multiplicative characters are undefined at 0")
    order = x.ctx.order
    return complex(_roots(order)[(j % order) * x.exp % order])


def gauss_sum(ctx: FieldCtx, j: int) -> complex:
    """G(ψ_j, χ_1) summed over all of F_Q^*."""
    return complex(np.sum(psi_table(ctx, j) * chi1_table(ctx)))


def exponential_sum(alpha: FieldElem, h: int) -> complex:
    """S(α) = Σ_{x∈F_Q} χ_1(α x^h)."""
    ctx = alpha.ctx
    _require_divisor(ctx, h)
    if alpha.exp is None:
        return complex(ctx.Q)
    ks = np.arange(ctx.order, dtype=np.int64)
    terms = chi1_table(ctx)[(alpha.exp + h * ks) % ctx.order]
    return complex(1 + np.sum(terms))


@lru_cache(maxsize=64)
def exponential_sums(ctx: FieldCtx, h: int) -> np.ndarray:
    """S(θ^a) for a = 0..Q-2 by direct summation. Costs O(Q^2)."""
    _require_divisor(ctx, h)
    ks = np.arange(ctx.order, dtype=np.int64)
    terms = chi1_table(ctx)[(ks[:, None] + h * ks[None, :]) % ctx.order]
    return 1 + terms.sum(axis=1)


def gaussian_period(ctx: FieldCtx, i: int, h: int) -> complex:
    """η_i = Σ_{x∈C_i} χ_1(x)."""
    _require_divisor(ctx, h)
    ks = np.arange(ctx.order // h, dtype=np.int64)
    return complex(np.sum(chi1_table(ctx)[(i + h * ks) % ctx.order]))


def gaussian_periods(ctx: FieldCtx, h: int) -> list[complex]:
    return [gaussian_period(ctx, i, h) for i in range(h)]


def real_periods(ctx: FieldCtx, h: int, cfg: CharSumCfg = CharSumCfg()) -> np.ndarray:
    """η_0..η_{h-1} as floats; imaginary parts must vanish within tolerance."""
    etas = np.array(gaussian_periods(ctx, h))
    worst = float(np.max(np.abs(etas.imag))) if etas.size else 0.0
    if worst > cfg.tolerance:
        raise NonIntegerResult(f"Gaussian periods for h={h} are not real (|im| up to {worst:.3g})")
    logger.debug("Periods for h=%d: %s", h, etas.real)
    return etas.real
