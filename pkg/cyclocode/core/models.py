"""Core data models for cyclocode."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

import numpy as np

if TYPE_CHECKING:
    from cyclocode.core.field import FieldCtx, FieldElem
    from cyclocode.core.subspace import Subspace


@dataclass(frozen=True)
class Violation:
    code: str  # "NonDivisor", "HOutOfRange", "TNotSorted", "TOutOfRange", "EmptyT", ...
    message: str


@dataclass(frozen=True)
class CodeSpec:
    p: int
    e: int
    m: int
    h: int
    t: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def Q(self) -> int:
        return self.q**self.m

    @property
    def s(self) -> int:
        return len(self.t)

    @property
    def n0(self) -> int:
        return (self.Q - 1) // (self.h * (self.q - 1))

    @property
    def n(self) -> int:
        return self.s * self.n0

    @property
    def key(self) -> str:
        """Grid-line form, e.g. '2 1 6 3 0'."""
        return f"{self.p} {self.e} {self.m} {self.h} {','.join(map(str, self.t))}"

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "m": self.m, "h": self.h, "t": list(self.t)}


@dataclass(frozen=True, eq=False)
class DefiningSet:
    spec: CodeSpec
    ctx: FieldCtx
    exponents: np.ndarray = field(repr=False)  # θ^(t_j + h(i-1)), j-major
    coset_ids: np.ndarray = field(repr=False)

    @property
    def elements(self) -> list[FieldElem]:
        return [self.ctx.element(int(k)) for k in self.exponents]

    def __len__(self) -> int:
        return int(self.exponents.size)


@dataclass(frozen=True, eq=False)
class LinearCode:
    ctx: FieldCtx
    exponents: np.ndarray = field(repr=False)  # exponent of each d_j
    gen_matrix: np.ndarray = field(repr=False)  # m x n symbols
    rank: int
    spec: Optional[CodeSpec] = None

    @property
    def n(self) -> int:
        return int(self.exponents.size)

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def defining_set(self) -> list[FieldElem]:
        return [self.ctx.element(int(k)) for k in self.exponents]


@dataclass
class WeightDistribution:
    counts: dict[int, int]  # weight -> number of x in F_Q
    n: int
    rank: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def num_weights(self) -> int:
        """Number of distinct nonzero weights (t of a t-weight code)."""
        return sum(1 for w, c in self.counts.items() if w > 0 and c > 0)

    @property
    def min_nonzero_weight(self) -> Optional[int]:
        nonzero = [w for w, c in self.counts.items() if w > 0 and c > 0]
        return min(nonzero) if nonzero else None

    def nonzero_rows(self) -> list[tuple[int, int]]:
        return sorted((w, c) for w, c in self.counts.items() if w > 0)


@dataclass
class DualDistanceCheck:
    ok: bool
    witness: Optional[tuple[int, int]] = None  # offending column pair

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class GhwResult:
    r: int
    d_r: int
    method: str  # "direct" | "thm1" | "thm2_gauss" | "thm2_period"
    N_r: int
    witness: Optional[Subspace] = None


@dataclass(frozen=True)
class SemiPrimitiveParams:
    k: int
    l: int  # noqa: E741
    h0: int
    sign: int  # (-1)^l
    h: int

    def to_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "h0": self.h0, "sign": self.sign}


@dataclass
class WeightTablePrediction:
    rows: list[tuple[int, int]]  # (weight, multiplicity), zero multiplicities dropped
    length: int
    dimension: int
    dual_distance_min: int = 3
    params: Optional[SemiPrimitiveParams] = None

    def as_distribution(self) -> dict[int, int]:
        out = {0: 1}
        for w, c in self.rows:
            out[w] = out.get(w, 0) + c
        return out


@dataclass(frozen=True)
class BoundSet:
    singleton_lo: int
    singleton_hi: int
    griesmer_lo: int
    plotkin_hi: int

    def admits(self, d: int) -> bool:
        return max(self.singleton_lo, self.griesmer_lo) <= d <= min(
            self.singleton_hi, self.plotkin_hi
        )

    def to_dict(self) -> dict:
        return {
            "singleton_lo": self.singleton_lo,
            "singleton_hi": self.singleton_hi,
            "griesmer_lo": self.griesmer_lo,
            "plotkin_hi": self.plotkin_hi,
        }
