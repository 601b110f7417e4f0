"""CLI entry point for cyclocode."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

import cyclocode
from cyclocode.config import Settings, config_keys, parse_setting, resolve_settings
from cyclocode.errors import EXIT_CONSISTENCY, EXIT_OK, EXIT_VALIDATION, CycloCodeError, SpecInvalid

app = typer.Typer(
    name="cyclocode",
    help="Cyclotomic trace codes: weight distributions, generalized Hamming weights "
    "and closed-form checks.",
    no_args_is_help=True,
)
console = Console()

_FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    p: int
    e: int
    m: int
    h: int
    t: tuple[int, ...]
    command: str
    method: str = "all"
    r_range: Optional[tuple[int, int]] = None
    output_format: str = "text"
    settings: Settings = field(default_factory=Settings)

    def r_values(self) -> list[int]:
        lo, hi = self.r_range or (1, self.m)
        return list(range(lo, hi + 1))


# ── Option parsing ───────────────────────────────────────────────────


def parse_t(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in value.split(",") if x.strip() != "")
    except ValueError:
        raise typer.BadParameter(f"--t must be a comma-separated list of integers, got {value!r}")


def parse_r(value: Optional[str], m: int) -> Optional[tuple[int, int]]:
    """'3' or '1..6'."""
    if value is None:
        return None
    try:
        if ".." in value:
            lo, hi = (int(x) for x in value.split("..", 1))
        else:
            lo = hi = int(value)
    except ValueError:
        raise typer.BadParameter(f"--r must be R or R1..R2, got {value!r}")
    if not 1 <= lo <= hi <= m:
        raise typer.BadParameter(f"--r range {value!r} is outside 1..{m}")
    return lo, hi


def _setup_logging(verbose: bool) -> None:
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
            force=True,
        )


def _fail(exc: CycloCodeError) -> None:
    console.print(f"[red]{type(exc).__name__}: {escape(str(exc))}[/]")
    if isinstance(exc, SpecInvalid):
        for v in exc.violations:
            console.print(f"  [yellow]{v.code}[/]: {escape(v.message)}")
    raise typer.Exit(exc.exit_code)


def _build_config(
    command: str,
    p: int,
    e: int,
    m: int,
    h: int,
    t: str,
    r: Optional[str] = None,
    method: str = "all",
    output_format: str = "text",
    overrides: Optional[dict[str, Any]] = None,
    formats: tuple[str, ...] = _FORMATS,
) -> RunConfig:
    from cyclocode.core.cyclotomy import validate_spec

    if output_format not in formats:
        raise typer.BadParameter(f"--format must be one of {', '.join(formats)}")
    spec = validate_spec(p, e, m, h, parse_t(t))
    return RunConfig(
        p=spec.p,
        e=spec.e,
        m=spec.m,
        h=spec.h,
        t=spec.t,
        command=command,
        method=method,
        r_range=parse_r(r, m),
        output_format=output_format,
        settings=resolve_settings(overrides),
    )


def _emit(payload: Any, output_format: str, out: Optional[Path] = None) -> None:
    """Write machine-readable output to --out or stdout."""
    text = json.dumps(payload, sort_keys=True, indent=2) if output_format == "json" else payload
    if out:
        out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        console.print(f"[green]Wrote {out}[/]")
    else:
        typer.echo(text.rstrip("\n"))


# Shared option declarations
_P = typer.Option(..., "--p", help="Prime characteristic p")
_E = typer.Option(1, "--e", help="Degree of F_q over F_p")
_M = typer.Option(..., "--m", help="Degree of F_Q over F_q")
_H = typer.Option(..., "--h", help="Cyclotomy order h")
_T = typer.Option("0", "--t", help="Comma-separated residues t_1,...,t_s")
_FORMAT = typer.Option("text", "--format", "-f", help="Output format: text, json or csv")
_FORMAT_NO_CSV = typer.Option("text", "--format", "-f", help="Output format: text or json")
_OUT = typer.Option(None, "--out", "-o", help="Write output to this file")
_THREADS = typer.Option(None, "--threads", help="Worker threads for enumerations")
_FIELD_CAP = typer.Option(None, "--field-cap", help="Largest Q to tabulate")
_SUB_BUDGET = typer.Option(None, "--subspace-budget", help="Largest subspace count to sweep")
_ENUM_BUDGET = typer.Option(None, "--enumeration-budget", help="Largest message count")
_TOL = typer.Option(None, "--tolerance", help="Snap tolerance for character sums")
_VERBOSE = typer.Option(False, "--verbose", "-v", help="Debug logging")


def _overrides(threads, field_cap, subspace_budget, enumeration_budget, tolerance) -> dict:
    return {
        "threads": threads,
        "field_cap": field_cap,
        "subspace_budget": subspace_budget,
        "enumeration_budget": enumeration_budget,
        "tolerance": tolerance,
    }


# ── Commands ─────────────────────────────────────────────────────────


@app.command()
def info(
    p: int = _P, e: int = _E, m: int = _M, h: int = _H, t: str = _T,
    output_format: str = _FORMAT_NO_CSV,
    field_cap: Optional[int] = _FIELD_CAP,
    verbose: bool = _VERBOSE,
) -> None:
    """Show field, defining-set and semi-primitive parameters of a spec."""
    from cyclocode.core import closedform
    from cyclocode.core.field import build_field
    from cyclocode.core.models import CodeSpec
    from cyclocode.errors import NotApplicable

    _setup_logging(verbose)
    try:
        cfg = _build_config("info", p, e, m, h, t, output_format=output_format,
                            overrides=_overrides(None, field_cap, None, None, None),
                            formats=("text", "json"))
        spec = CodeSpec(cfg.p, cfg.e, cfg.m, cfg.h, cfg.t)
        ctx = build_field(spec.p, spec.e, spec.m, cap=cfg.settings.field_cap)
        try:
            sp = closedform.semiprimitive_params(spec)
        except NotApplicable:
            sp = None
    except CycloCodeError as exc:
        _fail(exc)

    data = {
        "spec": spec.to_dict(),
        "q": spec.q,
        "Q": spec.Q,
        "primitive_poly": list(ctx.primitive_poly),
        "n0": spec.n0,
        "n": spec.n,
        "s": spec.s,
        "s_equals_h": spec.s == spec.h,
        "class_size": ctx.order // spec.h,
        "semiprimitive": sp.to_dict() if sp else None,
    }
    if output_format == "json":
        _emit(data, "json")
        return

    table = Table(title=f"Spec {spec.key}")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Field", f"F_{spec.p} ⊆ F_{spec.q} ⊆ F_{spec.Q}")
    table.add_row("Primitive polynomial (low first)", str(list(ctx.primitive_poly)))
    table.add_row("n0", str(spec.n0))
    table.add_row("n", str(spec.n))
    table.add_row("s", str(spec.s) + (" (s = h)" if spec.s == spec.h else ""))
    table.add_row("|C_i|", str(ctx.order // spec.h))
    if sp:
        table.add_row("Semi-primitive", f"k={sp.k}, l={sp.l}, h0={sp.h0}, sign={sp.sign:+d}")
    else:
        table.add_row("Semi-primitive", "[yellow]not applicable[/]")
    console.print(table)


@app.command()
def wdist(
    p: int = _P, e: int = _E, m: int = _M, h: int = _H, t: str = _T,
    output_format: str = _FORMAT,
    out: Optional[Path] = _OUT,
    threads: Optional[int] = _THREADS,
    field_cap: Optional[int] = _FIELD_CAP,
    enumeration_budget: Optional[int] = _ENUM_BUDGET,
    verbose: bool = _VERBOSE,
) -> None:
    """Weight distribution by enumeration, compared with the two-weight table."""
    from cyclocode.core import closedform
    from cyclocode.core.code import build_cyclotomic_code, dual_distance_at_least_3, weight_distribution
    from cyclocode.core.models import CodeSpec
    from cyclocode.errors import NotApplicable

    _setup_logging(verbose)
    try:
        cfg = _build_config("wdist", p, e, m, h, t, output_format=output_format,
                            overrides=_overrides(threads, field_cap, None, enumeration_budget, None))
        spec = CodeSpec(cfg.p, cfg.e, cfg.m, cfg.h, cfg.t)
        code = build_cyclotomic_code(spec, cfg.settings.field_cap)
        wd = weight_distribution(code, cfg.settings.enumeration_budget, cfg.settings.threads)
        dual = dual_distance_at_least_3(code)
        try:
            prediction = closedform.theorem3_predict(spec)
        except NotApplicable:
            prediction = None
    except CycloCodeError as exc:
        _fail(exc)

    match = prediction.as_distribution() == wd.counts if prediction else None
    data = {
        "spec": spec.to_dict(),
        "n": code.n,
        "rank": code.rank,
        "weight_distribution": {str(w): c for w, c in sorted(wd.counts.items())},
        "num_weights": wd.num_weights,
        "table1": [list(row) for row in prediction.rows] if prediction else None,
        "table1_match": match,
        "dual_distance_at_least_3": dual.ok,
    }
    if output_format == "json":
        _emit(data, "json", out)
        return
    if output_format == "csv":
        lines = ["weight,count"] + [f"{w},{c}" for w, c in sorted(wd.counts.items())]
        _emit("\n".join(lines) + "\n", "csv", out)
        return

    table = Table(title=f"[{code.n}, {code.rank}] code, {wd.num_weights}-weight")
    table.add_column("Weight", style="cyan", justify="right")
    table.add_column("Count", style="green", justify="right")
    for w, c in sorted(wd.counts.items()):
        table.add_row(str(w), str(c))
    console.print(table)
    if prediction:
        colour = "green" if match else "red"
        console.print(f"Table prediction {prediction.rows}: [{colour}]match={match}[/]")
    console.print(f"Dual distance >= 3: {dual.ok}" + (f" (columns {dual.witness})" if dual.witness else ""))
    if match is False:
        raise typer.Exit(EXIT_CONSISTENCY)


@app.command()
def ghw(
    p: int = _P, e: int = _E, m: int = _M, h: int = _H, t: str = _T,
    r: Optional[str] = typer.Option(None, "--r", help="R or R1..R2 (default 1..m)"),
    method: str = typer.Option("all", "--method", help="direct, thm1, gauss, period or all"),
    output_format: str = _FORMAT,
    out: Optional[Path] = _OUT,
    threads: Optional[int] = _THREADS,
    field_cap: Optional[int] = _FIELD_CAP,
    subspace_budget: Optional[int] = _SUB_BUDGET,
    tolerance: Optional[float] = _TOL,
    verbose: bool = _VERBOSE,
) -> None:
    """Generalized Hamming weights d_r by one or all methods."""
    from cyclocode.core import closedform
    from cyclocode.core.code import build_cyclotomic_code
    from cyclocode.core.ghw import get_method, list_methods
    from cyclocode.core.models import CodeSpec
    from cyclocode.errors import NotApplicable

    _setup_logging(verbose)
    try:
        cfg = _build_config("ghw", p, e, m, h, t, r=r, method=method, output_format=output_format,
                            overrides=_overrides(threads, field_cap, subspace_budget, None, tolerance))
        names = list_methods() if method == "all" else [method]
        try:
            classes = [get_method(name) for name in names]
        except ValueError as exc:
            console.print(f"[red]{escape(str(exc))}[/]")
            raise typer.Exit(EXIT_VALIDATION)
        spec = CodeSpec(cfg.p, cfg.e, cfg.m, cfg.h, cfg.t)
        code = build_cyclotomic_code(spec, cfg.settings.field_cap)
        runners = [cls(code, **cfg.settings.ghw_options()) for cls in classes]
        rows = []
        for rv in cfg.r_values():
            row: dict[str, Any] = {"r": rv, "d_r": {}, "N_r": {}}
            for runner in runners:
                res = runner.compute(rv)
                row["d_r"][res.method] = res.d_r
                row["N_r"][res.method] = res.N_r
            for name, fn in (("corollary1", closedform.corollary1_ghw),
                             ("corollary2", closedform.corollary2_ghw)):
                try:
                    value = fn(spec, rv)
                    row[name] = "not_covered" if value is closedform.NOT_COVERED else value
                except NotApplicable:
                    row[name] = "n/a"
            row["remark"] = closedform.remark_formulas(spec, rv)
            row["agree"] = len(set(row["d_r"].values())) == 1
            rows.append(row)
    except CycloCodeError as exc:
        _fail(exc)

    if output_format == "json":
        _emit({"spec": spec.to_dict(), "n": code.n, "rows": rows}, "json", out)
    elif output_format == "csv":
        tags = [runner.TAG for runner in runners]
        lines = ["r," + ",".join(f"d_{tag}" for tag in tags) + ",corollary1,corollary2,remark"]
        for row in rows:
            values = [str(row["d_r"][tag]) for tag in tags]
            remark = "" if row["remark"] is None else str(row["remark"])
            lines.append(",".join([str(row["r"]), *values, str(row["corollary1"]),
                                   str(row["corollary2"]), remark]))
        _emit("\n".join(lines) + "\n", "csv", out)
    else:
        table = Table(title=f"Generalized Hamming weights, n={code.n}")
        table.add_column("r", style="cyan", justify="right")
        for runner in runners:
            table.add_column(runner.TAG, justify="right")
        table.add_column("Cor. 1", justify="right")
        table.add_column("Cor. 2", justify="right")
        table.add_column("Remark", justify="right")
        for row in rows:
            style = None if row["agree"] else "red"
            table.add_row(
                str(row["r"]),
                *[str(row["d_r"][runner.TAG]) for runner in runners],
                str(row["corollary1"]),
                str(row["corollary2"]),
                "" if row["remark"] is None else str(row["remark"]),
                style=style,
            )
        console.print(table)
    if not all(row["agree"] for row in rows):
        raise typer.Exit(EXIT_CONSISTENCY)


@app.command()
def periods(
    p: int = _P, e: int = _E, m: int = _M, h: int = _H, t: str = _T,
    output_format: str = _FORMAT,
    field_cap: Optional[int] = _FIELD_CAP,
    tolerance: Optional[float] = _TOL,
    verbose: bool = _VERBOSE,
) -> None:
    """Gaussian periods, S(θ^i) and their identity residuals."""
    from cyclocode.core import closedform
    from cyclocode.core.characters import exponential_sum, gauss_sum, gaussian_periods
    from cyclocode.core.field import build_field
    from cyclocode.core.models import CodeSpec
    from cyclocode.errors import NotApplicable

    _setup_logging(verbose)
    try:
        cfg = _build_config("periods", p, e, m, h, t, output_format=output_format,
                            overrides=_overrides(None, field_cap, None, None, tolerance))
        spec = CodeSpec(cfg.p, cfg.e, cfg.m, cfg.h, cfg.t)
        ctx = build_field(spec.p, spec.e, spec.m, cap=cfg.settings.field_cap)
        etas = gaussian_periods(ctx, spec.h)
        s_values = [exponential_sum(ctx.element(i), spec.h) for i in range(spec.h)]
        gauss = [gauss_sum(ctx, lam * ctx.order // spec.h) for lam in range(1, spec.h)]
        try:
            closed = [float(x) for x in closedform.lemma1_periods(spec)]
        except NotApplicable:
            closed = None
    except CycloCodeError as exc:
        _fail(exc)

    tol = cfg.settings.tolerance
    residuals = [abs(s - (spec.h * eta + 1)) for s, eta in zip(s_values, etas)]
    data = {
        "spec": spec.to_dict(),
        "eta": [[round(z.real, 12), round(z.imag, 12)] for z in etas],
        "S": [[round(z.real, 12), round(z.imag, 12)] for z in s_values],
        "identity_residuals": residuals,
        "gauss_abs": [abs(g) for g in gauss],
        "eta_closed_form": closed,
        "ok": max(residuals) < tol,
    }
    if output_format == "json":
        _emit(data, "json")
    elif output_format == "csv":
        lines = ["i,eta,S,residual,eta_closed_form"]
        for i, (eta, s_val, res) in enumerate(zip(etas, s_values, residuals)):
            closed_i = "" if closed is None else f"{closed[i]:.9g}"
            lines.append(f"{i},{eta.real:.9g},{s_val.real:.9g},{res:.3e},{closed_i}")
        _emit("\n".join(lines), "csv")
    else:
        table = Table(title=f"Gaussian periods, Q={spec.Q}, h={spec.h}")
        table.add_column("i", style="cyan", justify="right")
        table.add_column("η_i", justify="right")
        table.add_column("S(θ^i)", justify="right")
        table.add_column("|S - (hη+1)|", justify="right")
        table.add_column("Closed form", justify="right")
        for i, (eta, s_val, res) in enumerate(zip(etas, s_values, residuals)):
            table.add_row(
                str(i),
                f"{eta.real:.9g}",
                f"{s_val.real:.9g}",
                f"{res:.2e}",
                "" if closed is None else f"{closed[i]:.9g}",
            )
        console.print(table)
        console.print(f"|G(φ^λ)| for λ=1..{spec.h - 1}: {[round(a, 9) for a in data['gauss_abs']]}")
    if not data["ok"]:
        raise typer.Exit(EXIT_CONSISTENCY)


@app.command()
def bounds(
    p: int = _P, e: int = _E, m: int = _M, h: int = _H, t: str = _T,
    r: Optional[str] = typer.Option(None, "--r", help="R or R1..R2 (default 1..m)"),
    output_format: str = _FORMAT,
    threads: Optional[int] = _THREADS,
    field_cap: Optional[int] = _FIELD_CAP,
    enumeration_budget: Optional[int] = _ENUM_BUDGET,
    verbose: bool = _VERBOSE,
) -> None:
    """Singleton, Griesmer and Plotkin bounds on d_r (d_1 from the weight distribution)."""
    from cyclocode.core import closedform
    from cyclocode.core.code import build_cyclotomic_code, weight_distribution
    from cyclocode.core.models import CodeSpec

    _setup_logging(verbose)
    try:
        cfg = _build_config("bounds", p, e, m, h, t, r=r, output_format=output_format,
                            overrides=_overrides(threads, field_cap, None, enumeration_budget, None))
        spec = CodeSpec(cfg.p, cfg.e, cfg.m, cfg.h, cfg.t)
        code = build_cyclotomic_code(spec, cfg.settings.field_cap)
        wd = weight_distribution(code, cfg.settings.enumeration_budget, cfg.settings.threads)
        d1 = wd.min_nonzero_weight
        rows = [
            dict(r=rv, **closedform.bounds(code.n, spec.m, spec.q, rv, d1).to_dict())
            for rv in cfg.r_values()
        ]
    except CycloCodeError as exc:
        _fail(exc)

    if output_format == "json":
        _emit({"spec": spec.to_dict(), "n": code.n, "d1": d1, "rows": rows,
               "note": closedform.BOUND_NOTE}, "json")
        return
    columns = ("r", "singleton_lo", "singleton_hi", "griesmer_lo", "plotkin_hi")
    if output_format == "csv":
        lines = [",".join(columns)] + [",".join(str(row[c]) for c in columns) for row in rows]
        _emit("\n".join(lines), "csv")
        return
    table = Table(title=f"Bounds on d_r, n={code.n}, d_1={d1}")
    for col in columns:
        table.add_column(col, justify="right")
    for row in rows:
        table.add_row(*(str(row[c]) for c in columns))
    console.print(table)
    console.print(f"[dim]{closedform.BOUND_NOTE}[/]")


@app.command("verify-grid")
def verify_grid(
    grid: Optional[Path] = typer.Option(None, "--grid", help="Grid file (default: acceptance grid)"),
    quick: bool = typer.Option(False, "--quick", help="Only the worked-example specs"),
    method: str = typer.Option("all", "--method", help="direct, thm1, gauss, period or all"),
    output_format: str = typer.Option("json", "--format", "-f", help="json or csv"),
    out: Optional[Path] = _OUT,
    threads: Optional[int] = _THREADS,
    field_cap: Optional[int] = _FIELD_CAP,
    subspace_budget: Optional[int] = _SUB_BUDGET,
    enumeration_budget: Optional[int] = _ENUM_BUDGET,
    tolerance: Optional[float] = _TOL,
    save: bool = typer.Option(True, "--save/--no-save", help="Persist records to the local store"),
    verbose: bool = _VERBOSE,
) -> None:
    """Run the full cross-check battery on every spec of a grid."""
    from cyclocode.core.ghw import get_method, list_methods
    from cyclocode.data.grid import acceptance_grid, default_grid, load_grid
    from cyclocode.data.report import summarize, to_csv, verify_spec

    _setup_logging(verbose)
    if output_format not in ("json", "csv"):
        console.print("[red]--format must be json or csv for verify-grid[/]")
        raise typer.Exit(EXIT_VALIDATION)
    try:
        if grid:
            entries = load_grid(grid)
        elif quick:
            entries = default_grid()
        else:
            entries = acceptance_grid()
        names = list_methods() if method == "all" else [method]
        for name in names:
            get_method(name)
        settings = resolve_settings(
            _overrides(threads, field_cap, subspace_budget, enumeration_budget, tolerance)
        )
    except ValueError as exc:
        console.print(f"[red]{escape(str(exc))}[/]")
        raise typer.Exit(EXIT_VALIDATION)

    records = []
    for entry in entries:
        record = verify_spec(*entry.params(), settings=settings, methods=names)
        status = "[green]pass[/]" if record.passed else (
            "[yellow]invalid[/]" if not record.valid else "[red]FAIL[/]"
        )
        console.print(f"{entry.key:<24} {status} ({record.timing_s:.2f}s)")
        for msg in record.mismatches:
            console.print(f"    [red]{escape(msg)}[/]")
        records.append(record)

    if save and records:
        from cyclocode.data.store import DataStore

        store = DataStore()
        for record in records:
            store.save_run(record.key, record.passed, record.to_dict())
        store.close()

    if output_format == "json":
        text = "".join(record.to_json() + "\n" for record in records)
    else:
        text = to_csv(records)
    if out:
        out.write_text(text, encoding="utf-8")
    elif text:
        typer.echo(text.rstrip("\n"))

    summary = summarize(records)
    console.print(
        f"Summary: {summary['passed']} passed, {summary['failed']} failed, "
        f"{summary['invalid']} invalid, {summary['total']} total"
    )
    raise typer.Exit(EXIT_CONSISTENCY if summary["failed"] else EXIT_OK)


@app.command()
def history(
    limit: int = typer.Option(20, "--limit", "-n", help="Number of runs to show"),
) -> None:
    """List recent verification runs from the local store."""
    from cyclocode.data.store import DataStore

    store = DataStore()
    runs = store.recent_runs(limit)
    store.close()
    if not runs:
        console.print("[yellow]No verification runs recorded.[/]")
        return
    table = Table(title="Recent verification runs")
    table.add_column("When", style="dim")
    table.add_column("Spec", style="cyan")
    table.add_column("Result")
    for run in runs:
        result = "[green]pass[/]" if run["passed"] else "[red]fail[/]"
        table.add_row(run["created_at"], run["spec_key"], result)
    console.print(table)


@app.command()
def config(
    action: str = typer.Argument("get", help="Action: get or set"),
    key: Optional[str] = typer.Argument(None, help=f"Config key ({', '.join(config_keys())})"),
    value: Optional[str] = typer.Argument(None, help="Value to set"),
) -> None:
    """View or modify configuration."""
    from cyclocode.data.store import DataStore

    store = DataStore()

    if action == "get":
        if key:
            val = store.get_config(key)
            if val is not None:
                console.print(f"{key} = {val}")
            else:
                console.print(f"[yellow]{key} is not set[/]")
        else:
            for k in config_keys():
                val = store.get_config(k)
                console.print(f"{k} = {val or '(not set)'}")
    elif action == "set":
        if not key or value is None:
            console.print("[red]Usage: cyclocode config set <key> <value>[/]")
            store.close()
            raise typer.Exit(EXIT_VALIDATION)
        try:
            parse_setting(key, value)
        except CycloCodeError as exc:
            console.print(f"[red]{escape(str(exc))}[/]")
            store.close()
            raise typer.Exit(exc.exit_code)
        store.set_config(key, value)
        console.print(f"[green]Set {key} = {value}[/]")
    else:
        console.print("[red]Unknown action. Use 'get' or 'set'.[/]")
        store.close()
        raise typer.Exit(EXIT_VALIDATION)

    store.close()


@app.command()
def version() -> None:
    """Print version."""
    console.print(f"cyclocode {cyclocode.__version__}")


if __name__ == "__main__":
    app()
