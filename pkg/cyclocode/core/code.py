"""Trace codes C_D = {(Tr_{Q/q}(x d_1), ..., Tr_{Q/q}(x d_n)) : x ∈ F_Q}."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from cyclocode.core.characters import (
    DEFAULT_TOLERANCE,
    exponential_sum,
    exponential_sums,
    snap_to_int,
)
from cyclocode.core.cyclotomy import build_defining_set
from cyclocode.core.field import DEFAULT_FIELD_CAP, FieldElem, build_field
from cyclocode.core.linalg import rank as fq_rank
from cyclocode.core.models import (
    CodeSpec,
    DefiningSet,
    DualDistanceCheck,
    LinearCode,
    WeightDistribution,
)
from cyclocode.core.parallel import map_partitions
from cyclocode.errors import (
    BudgetExceeded,
    InvalidArgument,
    MixedContexts,
    NonIntegerResult,
    ZeroArgument,
    ZeroInDefiningSet,
)

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 1 << 22
_CHUNK_CELLS = 1 << 18


def build_code(dset: Union[DefiningSet, Sequence[FieldElem]]) -> LinearCode:
    """Generator matrix G[i, j] = Tr(θ^i d_j) and its rank over F_q."""
    if isinstance(dset, DefiningSet):
        ctx, exponents, spec = dset.ctx, dset.exponents, dset.spec
    else:
        elems = list(dset)
        if not elems:
            raise InvalidArgument("Defining set is empty")
        ctx, spec = elems[0].ctx, None
        for x in elems:
            if x.ctx is not ctx:
                raise MixedContexts("Defining set mixes field contexts")
            if x.exp is None:
                raise ZeroInDefiningSet("Defining set contains 0")
        exponents = np.array([x.exp for x in elems], dtype=np.int64)
    rows = np.arange(ctx.m, dtype=np.int64)
    gen = ctx.trace_q[(rows[:, None] + exponents[None, :]) % ctx.order]
    rk = fq_rank(gen, ctx.fq)
    logger.debug("Built [%d, %d] code (m=%d)", exponents.size, rk, ctx.m)
    return LinearCode(ctx=ctx, exponents=exponents, gen_matrix=gen, rank=rk, spec=spec)


@lru_cache(maxsize=64)
def build_cyclotomic_code(spec: CodeSpec, cap: int = DEFAULT_FIELD_CAP) -> LinearCode:
    ctx = build_field(spec.p, spec.e, spec.m, cap=cap)
    return build_code(build_defining_set(spec, ctx))


def codeword(x: FieldElem, code: LinearCode) -> np.ndarray:
    ctx = code.ctx
    ctx._check(x)
    if x.exp is None:
        return np.zeros(code.n, dtype=np.int64)
    return ctx.trace_q[(x.exp + code.exponents) % ctx.order]


def weight_distribution(
    code: LinearCode,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    threads: int = 1,
) -> WeightDistribution:
    """Tally Hamming weights of c_x over every x ∈ F_Q (x = 0 included)."""
    ctx = code.ctx
    if ctx.Q > budget:
        raise BudgetExceeded(f"Enumerating {ctx.Q} messages exceeds budget {budget}")
    chunk = max(1, _CHUNK_CELLS // max(code.n, 1))
    parts = [(lo, min(lo + chunk, ctx.order)) for lo in range(0, ctx.order, chunk)]

    def tally(bounds: tuple[int, int]) -> np.ndarray:
        ks = np.arange(*bounds, dtype=np.int64)
        traces = ctx.trace_q[(ks[:, None] + code.exponents[None, :]) % ctx.order]
        weights = np.count_nonzero(traces, axis=1)
        return np.bincount(weights, minlength=code.n + 1)

    total = np.zeros(code.n + 1, dtype=np.int64)
    total[0] = 1
    for part in map_partitions(tally, parts, threads):
        total += part
    counts = {int(w): int(c) for w, c in enumerate(total) if c}
    logger.debug("Weight distribution over %d messages: %s", ctx.Q, counts)
    return WeightDistribution(counts=counts, n=code.n, rank=code.rank)


def codeword_weight_via_sums(
    x: FieldElem, spec: CodeSpec, tolerance: float = DEFAULT_TOLERANCE
) -> int:
    """w(c_x) = (s(Q-1) + s - Σ_j S(x θ^(t_j))) / (qh)."""
    if x.exp is None:
        raise ZeroArgument("Weight formula needs x != 0")
    ctx = x.ctx
    total = sum(exponential_sum(ctx.element(x.exp + tj), spec.h) for tj in spec.t)
    value = (spec.s * (spec.Q - 1) + spec.s - total) / (spec.q * spec.h)
    return snap_to_int(value, tolerance)


def weights_via_sums(code: LinearCode, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """w(c_x) for x = θ^0..θ^(Q-2) by the same formula, from one table of S values."""
    spec, ctx = code.spec, code.ctx
    if spec is None:
        raise InvalidArgument("Weight formula needs a code built from a CodeSpec")
    sums = exponential_sums(ctx, spec.h)
    ks = np.arange(ctx.order, dtype=np.int64)
    total = sum(sums[(ks + tj) % ctx.order] for tj in spec.t)
    value = (spec.s * (spec.Q - 1) + spec.s - total) / (spec.q * spec.h)
    nearest = np.rint(value.real)
    worst = max(np.max(np.abs(value.real - nearest)), np.max(np.abs(value.imag)))
    if worst > tolerance:
        raise NonIntegerResult(f"Weights via sums are off an integer by up to {worst:.3g}")
    return nearest.astype(np.int64)


def dual_distance_at_least_3(code: LinearCode) -> DualDistanceCheck:
    """No zero column and no two F_q-proportional columns in the generator matrix."""
    fq = code.ctx.fq
    seen: dict[bytes, int] = {}
    for j in range(code.n):
        col = code.gen_matrix[:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return DualDistanceCheck(ok=False, witness=(j, j))
        normed = fq.mul[fq.inv[col[nz[0]]], col]
        key = normed.tobytes()
        if key in seen:
            return DualDistanceCheck(ok=False, witness=(seen[key], j))
        seen[key] = j
    return DualDistanceCheck(ok=True)


def first_moment_ok(code: LinearCode, wd: WeightDistribution) -> bool:
    """Σ A_w = q^m and Σ w A_w = n'(q-1)q^(m-1), n' = number of nonzero columns."""
    ctx = code.ctx
    nonzero_cols = int(np.count_nonzero(code.gen_matrix.any(axis=0)))
    first = sum(w * c for w, c in wd.counts.items())
    return wd.total == ctx.Q and first == nonzero_cols * (ctx.q - 1) * ctx.Q // ctx.q
