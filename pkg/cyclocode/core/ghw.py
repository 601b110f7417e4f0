"""Generalized Hamming weights d_r by four independent methods.

Every method sweeps a family of F_q-subspaces of F_Q and maximises a per-subspace
quantity N; then d_r = n - max N. They differ in what is swept and how N is read:

- ``direct``: r-dim H, N = #{j : Tr(β d_j) = 0 for every β in a basis of H}.
- ``thm1``: (m-r)-dim H, N = |D ∩ H|.
- ``thm2_period``: r-dim H, N from the class profile of H weighted by Gaussian periods.
- ``thm2_gauss``: r-dim H, N from multiplicative characters of H^* and Gauss sums.

When the field is small enough the sweep runs over a cached ``SubspaceTable``
shared by every spec over that field; otherwise subspaces are streamed in batches.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import Optional, Union

import numpy as np

from cyclocode.core.characters import (
    DEFAULT_TOLERANCE,
    CharSumCfg,
    gauss_sum,
    psi_table,
    real_periods,
    snap_to_int,
)
from cyclocode.core.code import build_cyclotomic_code
from cyclocode.core.field import DEFAULT_FIELD_CAP
from cyclocode.core.linalg import to_codes
from cyclocode.core.models import CodeSpec, GhwResult, LinearCode
from cyclocode.core.subspace import (
    DEFAULT_SUBSPACE_BUDGET,
    BatchScorer,
    Subspace,
    SubspaceTable,
    batch_member_exponents,
    class_profile,
    enumerate_subspaces,
    reduce_batch,
    subspace_table,
    sweep_max,
    table_fits,
)
from cyclocode.errors import (
    ConsistencyError,
    InvalidArgument,
    NotApplicable,
    RankDeficient,
)

logger = logging.getLogger(__name__)

_ROUND = 9


class GhwMethod(ABC):
    TAG: str = ""
    ALIAS: str = ""

    def __init__(
        self,
        code: LinearCode,
        threads: int = 1,
        budget: int = DEFAULT_SUBSPACE_BUDGET,
        tolerance: float = DEFAULT_TOLERANCE,
    ):
        if code.rank != code.m:
            raise RankDeficient(f"Code has rank {code.rank}, GHW methods need rank m={code.m}")
        self.code = code
        self.ctx = code.ctx
        self.threads = threads
        self.budget = budget
        self.tolerance = tolerance

    def search_dimension(self, r: int) -> int:
        return r

    @abstractmethod
    def scorer(self, r: int) -> BatchScorer: ...

    @abstractmethod
    def table_scores(self, table: SubspaceTable) -> np.ndarray:
        """Scores of every row of a tabulated sweep, same values as ``scorer``."""

    @abstractmethod
    def finish(self, r: int, best: float, witness: Subspace) -> int:
        """N_r from the maximal score and the subspace attaining it."""

    def compute(self, r: int) -> GhwResult:
        if not 1 <= r <= self.code.m:
            raise InvalidArgument(f"r={r!r} is outside 1..{self.code.m}")
        dim = self.search_dimension(r)
        enumerate_subspaces(self.ctx, dim, self.budget)
        if table_fits(self.ctx, dim):
            table = subspace_table(self.ctx, dim)
            best, witness = table.best(self.table_scores(table))
        else:
            best, witness = sweep_max(self.ctx, dim, self.scorer(r), self.threads, self.budget)
        N = self.finish(r, best, witness)
        d = self.code.n - N
        logger.debug("%s: d_%d = %d (N=%d)", self.TAG, r, d, N)
        return GhwResult(r=r, d_r=d, method=self.TAG, N_r=N, witness=witness)


class DirectMethod(GhwMethod):
    TAG = "direct"
    ALIAS = "direct"

    def scorer(self, r: int) -> BatchScorer:
        ctx, dexp = self.ctx, self.code.exponents

        def score(bases: np.ndarray, pivots) -> np.ndarray:
            beta = ctx.exponents_of_codes(to_codes(bases, ctx.q))  # (B, r), all nonzero
            traces = ctx.trace_q[(beta[:, :, None] + dexp[None, None, :]) % ctx.order]
            return np.count_nonzero(~traces.any(axis=1), axis=-1)

        return score

    def table_scores(self, table: SubspaceTable) -> np.ndarray:
        return np.count_nonzero(table.annihilator[self.code.exponents], axis=0)

    def finish(self, r: int, best: float, witness: Subspace) -> int:
        return int(best)


class Theorem1Method(GhwMethod):
    TAG = "thm1"
    ALIAS = "thm1"

    def search_dimension(self, r: int) -> int:
        return self.code.m - r

    def scorer(self, r: int) -> BatchScorer:
        ctx = self.ctx
        dcodes = ctx.codes_of_exponents(self.code.exponents)

        def score(bases: np.ndarray, pivots) -> np.ndarray:
            return reduce_batch(bases, pivots, dcodes, ctx).sum(axis=-1)

        return score

    def table_scores(self, table: SubspaceTable) -> np.ndarray:
        return np.count_nonzero(table.incidence[self.code.exponents], axis=0)

    def finish(self, r: int, best: float, witness: Subspace) -> int:
        return int(best)


class _SpecMethod(GhwMethod):
    """Methods that need the cyclotomic parameters (h, t) behind the code."""

    def __init__(self, code: LinearCode, **kwargs):
        if code.spec is None:
            raise NotApplicable(f"Method {self.TAG!r} needs a code built from a CodeSpec")
        super().__init__(code, **kwargs)
        self.spec: CodeSpec = code.spec


class PeriodMethod(_SpecMethod):
    TAG = "thm2_period"
    ALIAS = "period"

    def __init__(self, code: LinearCode, **kwargs):
        super().__init__(code, **kwargs)
        spec = self.spec
        eta = real_periods(self.ctx, spec.h, CharSumCfg(self.tolerance))
        # X = Σ_i η_i |H ∩ ∪_j C_{i-t_j}| = Σ_c profile[c] Σ_j η_{c+t_j}
        self._coef = np.array(
            [sum(eta[(c + tj) % spec.h] for tj in spec.t) for c in range(spec.h)]
        )

    def scorer(self, r: int) -> BatchScorer:
        ctx, h = self.ctx, self.spec.h

        def score(bases: np.ndarray, pivots) -> np.ndarray:
            profile = class_profile(batch_member_exponents(bases, ctx), h)
            return np.round(profile @ self._coef, _ROUND)

        return score

    def table_scores(self, table: SubspaceTable) -> np.ndarray:
        return np.round(table.class_profile(self.spec.h) @ self._coef, _ROUND)

    def finish(self, r: int, best: float, witness: Subspace) -> int:
        spec = self.spec
        q = spec.q
        value = (spec.n * (q - 1) + best) / (q**r * (q - 1))
        return snap_to_int(value, self.tolerance * max(1.0, abs(best)))


class GaussMethod(_SpecMethod):
    TAG = "thm2_gauss"
    ALIAS = "gauss"

    def __init__(self, code: LinearCode, **kwargs):
        super().__init__(code, **kwargs)
        h, ctx = self.spec.h, self.ctx
        step = ctx.order // h
        # conj(φ^λ(θ^k)) tables and Σ_j conj(φ^λ(θ^(t_j))) G(φ^λ), λ = 1..h-1
        self._conj = [np.conj(psi_table(ctx, lam * step)) for lam in range(1, h)]
        self._weights = np.array(
            [
                gauss_sum(ctx, lam * step) * sum(self._conj[lam - 1][tj] for tj in self.spec.t)
                for lam in range(1, h)
            ]
        )
        # φ^λ is constant on each class C_c, and θ^c lies in C_c
        class_conj = np.stack([table[:h] for table in self._conj], axis=-1)  # (h, h-1)
        self._class_weights = class_conj @ self._weights

    def _a_values(self, exps: np.ndarray) -> np.ndarray:
        """A_H for each row of member exponents (B, q^r - 1)."""
        sums = np.stack([table[exps].sum(axis=-1) for table in self._conj], axis=-1)
        return sums @ self._weights

    def scorer(self, r: int) -> BatchScorer:
        ctx = self.ctx

        def score(bases: np.ndarray, pivots) -> np.ndarray:
            return np.round(self._a_values(batch_member_exponents(bases, ctx)).real, _ROUND)

        return score

    def table_scores(self, table: SubspaceTable) -> np.ndarray:
        a = table.class_profile(self.spec.h) @ self._class_weights
        return np.round(a.real, _ROUND)

    def finish(self, r: int, best: float, witness: Subspace) -> int:
        spec = self.spec
        q = spec.q
        a = complex(self._a_values(witness.member_exponents[None, :])[0])
        scale = max(1.0, abs(a))
        if abs(a.imag) > self.tolerance * scale:
            raise ConsistencyError(f"A_H has imaginary part {a.imag:.3g} at r={r}")
        value = (spec.s * (q**spec.m - q**r) + a.real) / (spec.h * q**r * (q - 1))
        return snap_to_int(value, self.tolerance * scale)


_METHODS: dict[str, type[GhwMethod]] = {
    cls.TAG: cls for cls in (DirectMethod, Theorem1Method, GaussMethod, PeriodMethod)
}
_ALIASES = {cls.ALIAS: tag for tag, cls in _METHODS.items()}


def list_methods() -> list[str]:
    """CLI names of all registered methods."""
    return list(_ALIASES)


def get_method(name: str) -> type[GhwMethod]:
    """Method class by tag or CLI name, or raise ValueError."""
    tag = _ALIASES.get(name, name)
    if tag not in _METHODS:
        available = ", ".join(_ALIASES)
        raise ValueError(f"Unknown method: {name!r}. Available: {available}")
    return _METHODS[tag]


# ── Entry points ─────────────────────────────────────────────────────


def _code_for(
    target: Union[CodeSpec, LinearCode], cap: int = DEFAULT_FIELD_CAP
) -> LinearCode:
    if isinstance(target, CodeSpec):
        return build_cyclotomic_code(target, cap)
    return target


def ghw_direct(code: LinearCode, r: int, **kwargs) -> GhwResult:
    return DirectMethod(code, **kwargs).compute(r)


def ghw_theorem1(code: LinearCode, r: int, **kwargs) -> GhwResult:
    return Theorem1Method(code, **kwargs).compute(r)


def ghw_thm2_period(spec: CodeSpec, r: int, cap: int = DEFAULT_FIELD_CAP, **kwargs) -> GhwResult:
    return PeriodMethod(_code_for(spec, cap), **kwargs).compute(r)


def ghw_thm2_gauss(spec: CodeSpec, r: int, cap: int = DEFAULT_FIELD_CAP, **kwargs) -> GhwResult:
    return GaussMethod(_code_for(spec, cap), **kwargs).compute(r)


def ghw_hierarchy(
    target: Union[CodeSpec, LinearCode],
    method: str = "thm1",
    r_max: Optional[int] = None,
    cap: int = DEFAULT_FIELD_CAP,
    **kwargs,
) -> list[GhwResult]:
    """d_1..d_{r_max} by one method; the hierarchy must be strictly increasing."""
    code = _code_for(target, cap)
    runner = get_method(method)(code, **kwargs)
    results = [runner.compute(r) for r in range(1, (r_max or code.m) + 1)]
    for prev, cur in zip(results, results[1:]):
        if cur.d_r <= prev.d_r:
            raise ConsistencyError(
                f"Weight hierarchy not increasing: d_{prev.r}={prev.d_r}, d_{cur.r}={cur.d_r}"
            )
    return results
