"""Verification records: run every cross-check for one spec and serialise the outcome.

A record is built by ``verify_spec`` and is plain data afterwards. JSON output is
canonical (sorted keys, fixed separators) so that parsing and re-emitting a record
gives identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Optional

import numpy as np

from cyclocode.config import Settings
from cyclocode.core import closedform
from cyclocode.core.characters import (
    CharSumCfg,
    exponential_sum,
    gauss_sum,
    gaussian_periods,
)
from cyclocode.core.code import (
    build_code,
    dual_distance_at_least_3,
    first_moment_ok,
    weight_distribution,
    weights_via_sums,
)
from cyclocode.core.cyclotomy import build_defining_set, check_spec, covers_classes_once
from cyclocode.core.field import build_field
from cyclocode.core.ghw import get_method, list_methods
from cyclocode.core.models import CodeSpec, LinearCode
from cyclocode.core.subspace import enumerate_subspaces, intersect_count, trace_dual
from cyclocode.errors import CycloCodeError, NotApplicable, ValidationError

logger = logging.getLogger(__name__)

_WEIGHT_CHECK_MAX_Q = 1 << 10
_DUALITY_MAX_M = 4

CSV_COLUMNS = [
    "p", "e", "m", "h", "t", "n", "rank", "r",
    "d_direct", "d_thm1", "d_thm2_gauss", "d_thm2_period",
    "corollary1", "corollary2", "remark",
    "singleton_lo", "singleton_hi", "griesmer_lo", "plotkin_hi",
    "r_mds", "passed",
]


@dataclass
class RRecord:
    r: int
    d_r: dict[str, int] = field(default_factory=dict)  # method tag -> d_r
    N_r: dict[str, int] = field(default_factory=dict)
    corollary1: Any = "n/a"  # int | "n/a"
    corollary2: Any = "n/a"  # int | "n/a" | "not_covered"
    remark: Any = None
    bounds: dict[str, int] = field(default_factory=dict)
    r_mds: bool = False
    witness: list[list[int]] = field(default_factory=list)
    duality_ok: Optional[bool] = None


@dataclass
class VerificationRecord:
    spec: dict[str, Any]
    valid: bool = True
    violations: list[dict[str, str]] = field(default_factory=list)
    n: int = 0
    rank: int = 0
    weight_distribution: dict[str, int] = field(default_factory=dict)
    table1: Optional[dict[str, Any]] = None
    dual_distance: dict[str, Any] = field(default_factory=dict)
    moments_ok: Optional[bool] = None
    semiprimitive: Optional[dict[str, int]] = None
    eta: list[float] = field(default_factory=list)
    per_r: list[RRecord] = field(default_factory=list)
    bound_note: str = closedform.BOUND_NOTE
    mismatches: list[str] = field(default_factory=list)
    error: Optional[str] = None
    passed: bool = False
    timing_s: float = 0.0

    @property
    def key(self) -> str:
        s = self.spec
        return f"{s['p']} {s['e']} {s['m']} {s['h']} {','.join(map(str, s['t']))}"

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationRecord:
        data = dict(data)
        data["per_r"] = [RRecord(**r) for r in data.get("per_r", [])]
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> VerificationRecord:
        return cls.from_dict(json.loads(text))


# ── Battery ──────────────────────────────────────────────────────────


class _Checker:
    """Collects mismatch messages; every check is a literal comparison."""

    def __init__(self, record: VerificationRecord):
        self.record = record

    def equal(self, what: str, got: Any, expected: Any) -> bool:
        if got != expected:
            self.record.mismatches.append(f"{what}: got {got!r}, expected {expected!r}")
            return False
        return True

    def true(self, what: str, ok: bool) -> bool:
        if not ok:
            self.record.mismatches.append(what)
        return ok


def verify_spec(
    p: int,
    e: int,
    m: int,
    h: int,
    t: Iterable[int],
    settings: Optional[Settings] = None,
    methods: Optional[list[str]] = None,
) -> VerificationRecord:
    """Build the code for one spec and cross-check every computed quantity."""
    settings = settings or Settings()
    t = tuple(t)
    record = VerificationRecord(spec={"p": p, "e": e, "m": m, "h": h, "t": list(t)})
    started = time.perf_counter()
    violations = check_spec(p, e, m, h, t)
    if violations:
        record.valid = False
        record.violations = [{"code": v.code, "message": v.message} for v in violations]
        record.error = "SpecInvalid"
        return record
    spec = CodeSpec(p=p, e=e, m=m, h=h, t=t)
    try:
        _run_battery(spec, settings, methods or list_methods(), record)
    except ValidationError as exc:
        record.valid = False
        record.error = f"{type(exc).__name__}: {exc}"
    except CycloCodeError as exc:
        logger.warning("Verification of %s failed: %s", spec.key, exc)
        record.error = f"{type(exc).__name__}: {exc}"
    record.passed = record.error is None and not record.mismatches
    record.timing_s = round(time.perf_counter() - started, 6)
    return record


def _run_battery(
    spec: CodeSpec, settings: Settings, methods: list[str], record: VerificationRecord
) -> None:
    check = _Checker(record)
    ctx = build_field(spec.p, spec.e, spec.m, cap=settings.field_cap)
    dset = build_defining_set(spec, ctx)
    code = build_code(dset)
    record.n, record.rank = code.n, code.rank
    check.equal("n", code.n, spec.n)
    check.equal("rank", code.rank, spec.m)
    check.true("F_q^* D does not cover the classes exactly once", covers_classes_once(dset))

    wd = weight_distribution(code, settings.enumeration_budget, settings.threads)
    record.weight_distribution = {str(w): c for w, c in sorted(wd.counts.items())}
    record.moments_ok = first_moment_ok(code, wd)
    check.true("power moments", record.moments_ok)
    dual = dual_distance_at_least_3(code)
    record.dual_distance = {"ok": dual.ok, "witness": list(dual.witness) if dual.witness else None}
    check.true("dual distance >= 3", dual.ok)
    if ctx.Q <= _WEIGHT_CHECK_MAX_Q:
        _check_weights_via_sums(code, settings, check)

    try:
        sp = closedform.semiprimitive_params(spec)
        record.semiprimitive = sp.to_dict()
    except NotApplicable:
        sp = None
    if sp is not None:
        prediction = closedform.theorem3_predict(spec)
        expected = prediction.as_distribution()
        match = wd.counts == expected
        record.table1 = {
            "rows": [list(row) for row in prediction.rows],
            "match": match,
        }
        check.true("weight table prediction", match)

    _check_characters(spec, ctx, sp, settings, record, check)

    results = {}
    for name in methods:
        runner = get_method(name)(code, **settings.ghw_options())
        results[runner.TAG] = [runner.compute(r) for r in range(1, spec.m + 1)]
    _check_ghw(spec, code, results, wd.min_nonzero_weight, settings, record, check)


def _check_weights_via_sums(code: LinearCode, settings: Settings, check: _Checker) -> None:
    ctx = code.ctx
    ks = np.arange(ctx.order, dtype=np.int64)
    direct = np.count_nonzero(ctx.trace_q[(ks[:, None] + code.exponents) % ctx.order], axis=1)
    via = weights_via_sums(code, settings.tolerance)
    bad = np.flatnonzero(via != direct)
    if bad.size:
        k = int(bad[0])
        check.equal(f"w(c_x) at x=θ^{k}", int(via[k]), int(direct[k]))


def _check_characters(spec, ctx, sp, settings: Settings, record, check: _Checker) -> None:
    tol = CharSumCfg(settings.tolerance).tolerance
    etas = gaussian_periods(ctx, spec.h)
    record.eta = [round(z.real, 9) for z in etas]
    check.true("sum of periods is -1", abs(sum(etas) + 1) < tol)
    for i, eta in enumerate(etas):
        s_val = exponential_sum(ctx.element(i), spec.h)
        check.true(f"S(θ^{i}) = h η_{i} + 1", abs(s_val - (spec.h * eta + 1)) < tol)
    if sp is not None:
        for i, exact in enumerate(closedform.lemma1_periods(spec, sp)):
            check.true(f"η_{i} closed form", abs(etas[i] - float(exact)) < tol)
    root = ctx.Q**0.5
    for lam in range(1, spec.h):
        g = gauss_sum(ctx, lam * ctx.order // spec.h)
        check.true(f"|G(φ^{lam})| = sqrt(Q)", abs(abs(g) - root) < tol)


def _closed_form(fn, spec: CodeSpec, r: int) -> Any:
    try:
        value = fn(spec, r)
    except NotApplicable:
        return "n/a"
    if value is closedform.NOT_COVERED:
        return "not_covered"
    return value


def _check_ghw(
    spec: CodeSpec,
    code: LinearCode,
    results: dict[str, list],
    min_weight: Optional[int],
    settings: Settings,
    record: VerificationRecord,
    check: _Checker,
) -> None:
    n, m, q = spec.n, spec.m, spec.q
    tags = list(results)
    for r in range(1, m + 1):
        rec = RRecord(r=r)
        for tag in tags:
            res = results[tag][r - 1]
            rec.d_r[tag] = res.d_r
            rec.N_r[tag] = res.N_r
        values = set(rec.d_r.values())
        check.true(f"methods disagree at r={r}: {rec.d_r}", len(values) == 1)
        d = rec.d_r[tags[0]]
        first = results[tags[0]][r - 1]
        if first.witness is not None:
            rec.witness = first.witness.basis.tolist()

        d1 = results[tags[0]][0].d_r
        bound = closedform.bounds(n, m, q, r, d1)
        rec.bounds = bound.to_dict()
        check.true(f"d_{r}={d} outside bounds {rec.bounds}", bound.admits(d))
        rec.r_mds = closedform.is_r_mds(d, n, m, r)

        rec.corollary1 = _closed_form(closedform.corollary1_ghw, spec, r)
        if isinstance(rec.corollary1, int):
            check.equal(f"corollary 1 at r={r}", rec.corollary1, d)
        rec.corollary2 = _closed_form(closedform.corollary2_ghw, spec, r)
        if isinstance(rec.corollary2, int):
            check.equal(f"corollary 2 at r={r}", rec.corollary2, d)
        rec.remark = closedform.remark_formulas(spec, r)
        if rec.remark is not None:
            check.equal(f"remark formula at r={r}", rec.remark, d)
        record.per_r.append(rec)

    for tag in tags:
        ds = [res.d_r for res in results[tag]]
        check.true(f"{tag} hierarchy not strictly increasing: {ds}", ds == sorted(set(ds)))
    if min_weight is not None and record.per_r:
        check.equal("d_1 vs minimum weight", record.per_r[0].d_r[tags[0]], min_weight)
    if m == 2:
        mds = closedform.remark3_mds_parameters(spec)
        check.equal("m=2 MDS parameters", (n, m, record.per_r[0].d_r[tags[0]]), mds)

    if m <= _DUALITY_MAX_M:
        _check_duality(code, settings, record, check)


def _check_duality(
    code: LinearCode, settings: Settings, record: VerificationRecord, check: _Checker
) -> None:
    """N(C_r) for every r-subspace H equals |D ∩ H^⊥|."""
    ctx, dset = code.ctx, code.defining_set
    for rec in record.per_r:
        ok = True
        for H in enumerate_subspaces(ctx, rec.r, settings.subspace_budget):
            beta = [b.exp for b in H.basis_elements()]
            traces = ctx.trace_q[(np.array(beta)[:, None] + code.exponents[None, :]) % ctx.order]
            direct = int(np.count_nonzero(~traces.any(axis=0)))
            if direct != intersect_count(trace_dual(H), dset):
                ok = False
                break
        rec.duality_ok = ok
        check.true(f"N(C_r) = |D ∩ H^⊥| fails at r={rec.r}", ok)


# ── Output ───────────────────────────────────────────────────────────


def summarize(records: list[VerificationRecord]) -> dict[str, int]:
    passed = sum(1 for r in records if r.passed)
    invalid = sum(1 for r in records if not r.valid)
    return {"total": len(records), "passed": passed, "failed": len(records) - passed - invalid,
            "invalid": invalid}


def csv_rows(record: VerificationRecord) -> list[dict[str, Any]]:
    s = record.spec
    base = {
        "p": s["p"], "e": s["e"], "m": s["m"], "h": s["h"],
        "t": ",".join(map(str, s["t"])), "n": record.n, "rank": record.rank,
    }
    rows = []
    for rec in record.per_r:
        row = dict(base, r=rec.r)
        for tag in ("direct", "thm1", "thm2_gauss", "thm2_period"):
            row[f"d_{tag}"] = rec.d_r.get(tag, "")
        row.update(
            corollary1=rec.corollary1,
            corollary2=rec.corollary2,
            remark="" if rec.remark is None else rec.remark,
            r_mds=int(rec.r_mds),
            passed=int(record.passed),
            **rec.bounds,
        )
        rows.append(row)
    if not rows:
        rows.append(dict(base, r="", passed=int(record.passed)))
    return rows


def to_csv(records: Iterable[VerificationRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, restval="", lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerows(csv_rows(record))
    return buf.getvalue()
