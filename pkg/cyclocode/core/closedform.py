"""Closed-form predictions for cyclotomic codes in the semi-primitive case.

Covers the two-valued exponential sum, the two-weight table, the explicit weight
hierarchies, the s = h and (m-1)-MDS identities, and the classical GHW bounds.
All arithmetic is exact (integers and Fractions); a prediction that should be an
integer but is not raises NonIntegerResult.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil, isqrt
from typing import Optional, Union

from cyclocode.core.cyclotomy import coset_index
from cyclocode.core.field import FieldElem
from cyclocode.core.models import BoundSet, CodeSpec, SemiPrimitiveParams, WeightTablePrediction
from cyclocode.errors import (
    ConsistencyError,
    InvalidArgument,
    NonIntegerResult,
    NotApplicable,
    ZeroArgument,
)

logger = logging.getLogger(__name__)


class _NotCovered:
    """Sentinel for r in the gap l'k < r < m - l'k."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NotCovered"

    def __bool__(self) -> bool:
        return False


NOT_COVERED = _NotCovered()

GhwPrediction = Union[int, _NotCovered]

BOUND_NOTE = (
    "griesmer_lo = sum_{i<r} ceil(d_1/q^i) and plotkin_hi = floor(n(q^r-1)q^(m-r)/(q^m-1)) "
    "are the standard forms; the printed Griesmer-like bound is self-referential and "
    "the printed Plotkin-like sum does not depend on its index"
)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} = {value} is not an integer")
    return value.numerator


# ── Semi-primitive parameters ────────────────────────────────────────


def semiprimitive_witnesses(spec: CodeSpec) -> list[SemiPrimitiveParams]:
    """Every (k, l) with m = 2lk and h | q^k + 1, smallest l first."""
    q, m, h = spec.q, spec.m, spec.h
    out = []
    for l in range(1, m // 2 + 1):  # noqa: E741
        if m % (2 * l):
            continue
        k = m // (2 * l)
        if (q**k + 1) % h:
            continue
        h0 = h // 2 if spec.p > 2 and l % 2 == 1 and ((q**k + 1) // h) % 2 == 1 else 0
        out.append(SemiPrimitiveParams(k=k, l=l, h0=h0, sign=(-1) ** l, h=h))
    return out


def semiprimitive_params(spec: CodeSpec) -> SemiPrimitiveParams:
    """The preferred witness: smallest l, i.e. largest k, so q=2, m=6, h=3 gives k=3, l=1.

    Ordering by smallest k instead would pick k=1, l=3 there. Predictions from all
    witnesses must agree, and callers that need a parity branch scan all of them.
    """
    witnesses = semiprimitive_witnesses(spec)
    if not witnesses:
        raise NotApplicable(f"No (k, l) with m=2lk and h | q^k+1 for {spec.key!r}")
    return witnesses[0]


def lemma1_exp_sum(alpha: FieldElem, sp: SemiPrimitiveParams) -> int:
    """S(α) in the semi-primitive case: two values, split by the class of α."""
    if alpha.exp is None:
        raise ZeroArgument("The two-valued formula needs α != 0")
    root = isqrt(alpha.ctx.Q)
    if coset_index(alpha, sp.h) == sp.h0:
        return (-1) ** (sp.l - 1) * (sp.h - 1) * root
    return (-1) ** sp.l * root


def lemma1_periods(spec: CodeSpec, sp: Optional[SemiPrimitiveParams] = None) -> list[Fraction]:
    """η_i = (S(θ^i) - 1) / h from the two-valued exponential sum."""
    sp = sp or semiprimitive_params(spec)
    root = isqrt(spec.Q)
    big = (-1) ** (sp.l - 1) * (sp.h - 1) * root
    small = (-1) ** sp.l * root
    return [Fraction((big if i == sp.h0 else small) - 1, sp.h) for i in range(sp.h)]


# ── Weight table ─────────────────────────────────────────────────────


def _table_rows(spec: CodeSpec, sp: SemiPrimitiveParams) -> list[tuple[int, int]]:
    s, h, q, Q = spec.s, spec.h, spec.q, spec.Q
    root = isqrt(Q)
    base = s * (Q - 1) + s
    raw = [
        (Fraction(base + sp.sign * (h - s) * root, q * h), Fraction(s * (Q - 1), h)),
        (Fraction(base - s * sp.sign * root, q * h), Fraction((h - s) * (Q - 1), h)),
    ]
    merged: dict[int, int] = {}
    for w, mult in raw:
        count = _exact(mult, "multiplicity")
        if count == 0:
            continue
        weight = _exact(w, "weight")
        merged[weight] = merged.get(weight, 0) + count
    return sorted(merged.items())


def theorem3_predict(spec: CodeSpec) -> WeightTablePrediction:
    """Two-weight table [weights, multiplicities]; parameters [n, m] with d^⊥ >= 3."""
    witnesses = semiprimitive_witnesses(spec)
    if not witnesses:
        raise NotApplicable(f"Weight table needs the semi-primitive case, {spec.key!r} is not")
    rows = _table_rows(spec, witnesses[0])
    for other in witnesses[1:]:
        if _table_rows(spec, other) != rows:
            raise ConsistencyError(f"Witnesses {witnesses[0]} and {other} predict different tables")
    if sum(c for _, c in rows) != spec.Q - 1:
        raise ConsistencyError(f"Table multiplicities for {spec.key!r} do not sum to Q-1")
    return WeightTablePrediction(
        rows=rows, length=spec.n, dimension=spec.m, params=witnesses[0]
    )


# ── Weight hierarchies ───────────────────────────────────────────────


def _check_r(spec: CodeSpec, r: int) -> None:
    if not 1 <= r <= spec.m:
        raise InvalidArgument(f"r={r!r} is outside 1..{spec.m}")


def corollary1_lower(spec: CodeSpec, r: int) -> int:
    """Branch for 1 <= r <= m/2."""
    q, m, s, h = spec.q, spec.m, spec.s, spec.h
    half = m // 2
    num = s * (q**m - q ** (m - r)) + (s - h) * Fraction(q**half, q**r) * (q**r - 1)
    return _exact(Fraction(num, h * (q - 1)), f"d_{r}")


def corollary_upper(spec: CodeSpec, r: int) -> int:
    """Branch for r >= m/2 (and r >= m - l'k in the l even case)."""
    q, m, s, h = spec.q, spec.m, spec.s, spec.h
    return _exact(Fraction(s * (q**m - 1) - h * (q ** (m - r) - 1), h * (q - 1)), f"d_{r}")


def corollary1_ghw(spec: CodeSpec, r: int) -> int:
    """Weight hierarchy when a witness has l odd."""
    _check_r(spec, r)
    if not any(w.l % 2 == 1 for w in semiprimitive_witnesses(spec)):
        raise NotApplicable(f"No semi-primitive witness with l odd for {spec.key!r}")
    if 2 * r <= spec.m:
        return corollary1_lower(spec, r)
    return corollary_upper(spec, r)


def corollary2_ghw(spec: CodeSpec, r: int) -> GhwPrediction:
    """Weight hierarchy ends when l = 2^u l' (u > 0) and s < h; NOT_COVERED in between."""
    _check_r(spec, r)
    if spec.s >= spec.h:
        raise NotApplicable("Needs s < h")
    even = [w for w in semiprimitive_witnesses(spec) if w.l % 2 == 0]
    if not even:
        raise NotApplicable(f"No semi-primitive witness with l even for {spec.key!r}")
    sp = even[0]
    odd_part = sp.l
    while odd_part % 2 == 0:
        odd_part //= 2
    span = odd_part * sp.k
    q, m, s, h = spec.q, spec.m, spec.s, spec.h
    if r <= span:
        half = m // 2
        num = s * Fraction(q**half, q**r) * (q**r - 1) * (q**half - 1)
        return _exact(num / (h * (q - 1)), f"d_{r}")
    if r >= m - span:
        return corollary_upper(spec, r)
    return NOT_COVERED


def remark_formulas(spec: CodeSpec, r: int) -> Optional[int]:
    """d_r = (q^m - q^(m-r))/(q-1) when s = h; d_(m-1) = n - 1 always."""
    _check_r(spec, r)
    q, m = spec.q, spec.m
    if spec.s == spec.h:
        return (q**m - q ** (m - r)) // (q - 1)
    if r == m - 1:
        return spec.n - 1
    return None


def remark3_mds_parameters(spec: CodeSpec) -> tuple[int, int, int]:
    """[s(q+1)/h, 2, s(q+1)/h - 1] for m = 2."""
    if spec.m != 2:
        raise NotApplicable(f"MDS parameters need m=2, got m={spec.m}")
    n = _exact(Fraction(spec.s * (spec.q + 1), spec.h), "n")
    return n, 2, n - 1


# ── Bounds ───────────────────────────────────────────────────────────


def bounds(n: int, m: int, q: int, r: int, d1: int) -> BoundSet:
    if not 1 <= r <= m:
        raise InvalidArgument(f"r={r!r} is outside 1..{m}")
    griesmer = sum(ceil(Fraction(d1, q**i)) for i in range(r))
    plotkin = n * (q**r - 1) * q ** (m - r) // (q**m - 1)
    return BoundSet(
        singleton_lo=r,
        singleton_hi=n - m + r,
        griesmer_lo=griesmer,
        plotkin_hi=plotkin,
    )


def is_r_mds(d_r: int, n: int, m: int, r: int) -> bool:
    """Singleton-type equality d_r = n - m + r."""
    return d_r == n - m + r
