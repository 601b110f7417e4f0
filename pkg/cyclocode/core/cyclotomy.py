"""Cyclotomic classes of order h and the defining set of a cyclotomic code."""

from __future__ import annotations

import logging
from collections import Counter
from typing import Iterable, Optional

import numpy as np

from cyclocode.core.field import DEFAULT_FIELD_CAP, FieldCtx, FieldElem, build_field, is_prime
from cyclocode.core.models import CodeSpec, DefiningSet, Violation
from cyclocode.errors import SpecInvalid, ZeroArgument

logger = logging.getLogger(__name__)


def coset_index(x: FieldElem, h: int) -> int:
    """i such that x ∈ C_i = θ^i <θ^h>."""
    if x.exp is None:
        raise ZeroArgument("0 lies in no cyclotomic class")
    return x.exp % h


def cyclotomic_class(ctx: FieldCtx, i: int, h: int) -> np.ndarray:
    """Exponents of C_i, ascending in the generator power."""
    ks = np.arange(ctx.order // h, dtype=np.int64)
    return (i + h * ks) % ctx.order


def check_spec(p: int, e: int, m: int, h: int, t: Iterable[int]) -> list[Violation]:
    """Every violated constraint, in a fixed order. Empty means valid."""
    t = list(t)
    violations: list[Violation] = []
    if not is_prime(p):
        violations.append(Violation("NotPrime", f"p={p} is not prime"))
        return violations
    if e < 1 or m < 1:
        violations.append(Violation("BadDegree", f"e={e} and m={m} must be >= 1"))
        return violations
    q = p**e
    Q = q**m
    if h < 1 or (Q - 1) % (h * (q - 1)):
        violations.append(
            Violation("NonDivisor", f"h(q-1)={h * (q - 1)} does not divide Q-1={Q - 1}")
        )
    # 1 < h < sqrt(Q) + 1, kept in integers
    if h <= 1 or (h - 1) ** 2 >= Q:
        violations.append(
            Violation("HOutOfRange", f"h={h} is not in the open range (1, sqrt({Q}) + 1)")
        )
    if not t:
        violations.append(Violation("EmptyT", "t must contain at least one residue"))
    if any(a >= b for a, b in zip(t, t[1:])):
        violations.append(Violation("TNotSorted", f"t={t} is not strictly increasing"))
    bad = [x for x in t if not 0 <= x < max(h, 0)]
    if bad:
        violations.append(Violation("TOutOfRange", f"t values {bad} are outside 0..{h - 1}"))
    return violations


def validate_spec(p: int, e: int, m: int, h: int, t: Iterable[int]) -> CodeSpec:
    """Return a CodeSpec, or raise SpecInvalid listing every violation."""
    t = tuple(int(x) for x in t)
    violations = check_spec(p, e, m, h, t)
    if violations:
        raise SpecInvalid(violations)
    return CodeSpec(p=p, e=e, m=m, h=h, t=t)


def build_defining_set(
    spec: CodeSpec, ctx: Optional[FieldCtx] = None, cap: int = DEFAULT_FIELD_CAP
) -> DefiningSet:
    """D̄ = {θ^(t_j) d_i : 1 <= j <= s, 1 <= i <= n0} with d_i = θ^(h(i-1))."""
    violations = check_spec(spec.p, spec.e, spec.m, spec.h, spec.t)
    if violations:
        raise SpecInvalid(violations)
    if ctx is None:
        ctx = build_field(spec.p, spec.e, spec.m, cap=cap)
    steps = spec.h * np.arange(spec.n0, dtype=np.int64)
    exponents = np.concatenate([tj + steps for tj in spec.t]) % ctx.order
    coset_ids = exponents % spec.h
    logger.debug("Defining set for %s: %d elements", spec.key, exponents.size)
    return DefiningSet(spec=spec, ctx=ctx, exponents=exponents, coset_ids=coset_ids)


def multiply_cover(dset: DefiningSet) -> Counter:
    """Multiplicity of each exponent in F_q^* · D̄."""
    ctx = dset.ctx
    step = ctx.order // (ctx.q - 1)
    units = step * np.arange(ctx.q - 1, dtype=np.int64)
    products = (dset.exponents[:, None] + units[None, :]) % ctx.order
    return Counter(int(k) for k in products.reshape(-1))


def covers_classes_once(dset: DefiningSet) -> bool:
    """True iff F_q^* · D̄ is C_{t_1} ∪ ... ∪ C_{t_s} with every element hit once."""
    spec = dset.spec
    cover = multiply_cover(dset)
    expected = {int(k) for tj in spec.t for k in cyclotomic_class(dset.ctx, tj, spec.h)}
    return set(cover) == expected and all(c == 1 for c in cover.values())
