"""Command-line interface: eval, scan, figure and verify subcommands.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
validation error, 4 output I/O error.  Scan output is CSV with the fixed
header below; values carry 12 significant digits and rows follow the
sweep order deterministically, so identical flags give byte-identical
files.  QDISCORD_THREADS caps sweep parallelism (default: machine
parallelism).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import families, linalg
from .discord import q_discord
from .errors import QDiscordError
from .verify import run_suites

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

CSV_HEADER = [
    "family",
    "param1_name",
    "param1",
    "param2_name",
    "param2",
    "q",
    "variant",
    "method",
    "value",
    "theta",
    "phi",
    "converged",
]

_FAMILY_PARAMS = {
    "werner": ("lambda",),
    "isotropic": ("lambda",),
    "circulant": ("epsilon", "g"),
    "custom": (),
}


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiscord",
        description="Tsallis-entropy correlation measures for two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p):
        p.add_argument(
            "--family",
            required=True,
            choices=sorted(_FAMILY_PARAMS),
            help="state family (custom reads --state FILE)",
        )
        p.add_argument("--lambda", dest="lam", type=float, help="Werner/isotropic mixing parameter")
        p.add_argument("--epsilon", type=float, help="circulant asymmetry, in (0, 1]")
        p.add_argument("--g", type=float, help="circulant coherence, in [0, 1]")
        p.add_argument("--state", help="JSON file with a custom two-qubit state")
        p.add_argument(
            "--variant",
            choices=("qexp", "additive", "both"),
            default="qexp",
            help="discord variant (default qexp)",
        )
        p.add_argument(
            "--method",
            choices=("closed", "numeric", "both"),
            default="closed",
            help="closed form, numerical optimizer, or both (default closed)",
        )

    p_eval = sub.add_parser("eval", help="evaluate the discord of a single state")
    add_family_args(p_eval)
    p_eval.add_argument("--q", type=float, required=True, help="entropic rank")

    p_scan = sub.add_parser("scan", help="sweep one parameter and write a CSV")
    add_family_args(p_scan)
    p_scan.add_argument("--q", required=True, help="entropic rank(s), comma separated")
    p_scan.add_argument("--sweep", required=True, help="parameter to sweep (lambda, epsilon, g or q)")
    p_scan.add_argument("--start", type=float, required=True)
    p_scan.add_argument("--end", type=float, required=True)
    p_scan.add_argument("--steps", type=int, required=True)
    p_scan.add_argument("--out", required=True, help="output CSV path")

    p_fig = sub.add_parser("figure", help="write a bundled reference sweep as CSV")
    p_fig.add_argument("name", choices=("fig1", "fig2", "fig3"))
    p_fig.add_argument("--out", default=".", help="output directory (default .)")

    p_verify = sub.add_parser("verify", help="run the oracle and property suites")
    p_verify.add_argument("--quick", action="store_true", help="reduced grid densities")

    return parser


def _thread_count() -> int:
    raw = os.environ.get("QDISCORD_THREADS", "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QDISCORD_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"QDISCORD_THREADS must be >= 1, got {n}")
    return n


def _family_params(ns, swept: str | None = None) -> dict[str, float]:
    """Collect fixed family parameters, excluding the swept one (if any)."""
    family = ns.family
    given = {
        "lambda": ns.lam,
        "epsilon": ns.epsilon,
        "g": ns.g,
    }
    params = {}
    for name in _FAMILY_PARAMS[family]:
        if name == swept:
            if given[name] is not None:
                raise UsageError(f"--{name} conflicts with sweeping {name!r}")
            continue
        if given[name] is None:
            raise UsageError(f"family {family!r} requires --{name}")
        params[name] = float(given[name])
    for name, value in given.items():
        if value is not None and name not in _FAMILY_PARAMS[family]:
            raise UsageError(f"--{name} does not apply to family {family!r}")
    if family == "custom":
        if not ns.state:
            raise UsageError("family 'custom' requires --state FILE")
    elif ns.state:
        raise UsageError("--state applies only to family 'custom'")
    return params


def _make_state(family: str, params: dict[str, float], state_path: str | None):
    if family == "werner":
        return families.make_werner(params["lambda"])
    if family == "isotropic":
        return families.make_isotropic(params["lambda"])
    if family == "circulant":
        return families.make_circulant(params["epsilon"], params["g"])
    try:
        rho = linalg.load_state(state_path)
    except OSError as exc:
        raise QDiscordError(f"cannot read state file {state_path!r}: {exc}") from exc
    if rho.shape != (4, 4):
        raise QDiscordError("custom states must be two-qubit (dim 4)")
    return rho


def _closed_value(family: str, params: dict[str, float], q: float, variant: str) -> float:
    if family == "werner":
        forms = families.werner_closed_forms(params["lambda"], q)
    elif family == "isotropic":
        forms = families.isotropic_closed_forms(params["lambda"], q)
    elif family == "circulant":
        if variant != "qexp":
            raise UsageError(
                "no closed form for the additive variant of circulant states; "
                "use --variant qexp or --method numeric"
            )
        return families.circulant_closed_forms(params["epsilon"], params["g"], q).discord_qexp
    else:
        raise UsageError("no closed form for custom states; use --method numeric")
    return forms.discord_qexp if variant == "qexp" else forms.discord_additive


def _expand(option: str, both: tuple[str, str]) -> tuple[str, ...]:
    return both if option == "both" else (option,)


def _validate_closed_support(family: str, variants, methods) -> None:
    if "closed" not in methods:
        return
    if family == "custom":
        raise UsageError("no closed form for custom states; use --method numeric")
    if family == "circulant" and "additive" in variants:
        raise UsageError(
            "no closed form for the additive variant of circulant states; "
            "use --variant qexp or --method numeric"
        )


def _cmd_eval(ns) -> int:
    params = _family_params(ns)
    variants = _expand(ns.variant, ("qexp", "additive"))
    methods = _expand(ns.method, ("closed", "numeric"))
    _validate_closed_support(ns.family, variants, methods)
    q = float(ns.q)
    state = _make_state(ns.family, params, ns.state) if "numeric" in methods else None
    header = " ".join(
        [f"family={ns.family}"]
        + [f"{k}={_fmt(v)}" for k, v in params.items()]
        + ([f"state={ns.state}"] if ns.family == "custom" else [])
        + [f"q={_fmt(q)}"]
    )
    print(header)
    for variant in variants:
        results = {}
        if "closed" in methods:
            results["closed"] = _closed_value(ns.family, params, q, variant)
            print(f"variant={variant} method=closed  discord={_fmt(results['closed'])}")
        if "numeric" in methods:
            res = q_discord(state, q, variant)
            results["numeric"] = res.value
            print(
                f"variant={variant} method=numeric discord={_fmt(res.value)} "
                f"converged={str(res.converged).lower()}"
            )
        if len(results) == 2:
            print(
                f"variant={variant} |closed-numeric|="
                f"{_fmt(abs(results['closed'] - results['numeric']))}"
            )
    return EXIT_OK


def _sweep_values(start: float, end: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise UsageError(f"--steps must be >= 2, got {steps}")
    if not start < end:
        raise UsageError(f"--start must be below --end, got {start} and {end}")
    return np.linspace(start, end, steps)


def _scan_rows(params, sweep_name, sweep_values, qs, variants, methods):
    """Row descriptions in deterministic sweep order."""
    rows = []
    for value in sweep_values:
        point = dict(params)
        if sweep_name != "q":
            point[sweep_name] = float(value)
        point_qs = qs if sweep_name != "q" else (float(value),)
        for q in point_qs:
            for variant in variants:
                for method in methods:
                    rows.append((point, q, variant, method))
    return rows


def _compute_row(family, state_path, point, q, variant, method):
    names = list(_FAMILY_PARAMS[family])
    record = {
        "family": family,
        "param1_name": names[0] if len(names) > 0 else "",
        "param1": _fmt(point[names[0]]) if len(names) > 0 else "",
        "param2_name": names[1] if len(names) > 1 else "",
        "param2": _fmt(point[names[1]]) if len(names) > 1 else "",
        "q": _fmt(q),
        "variant": variant,
        "method": method,
        "theta": "",
        "phi": "",
        "converged": "",
    }
    if method == "closed":
        record["value"] = _fmt(_closed_value(family, point, q, variant))
        return record
    rho = _make_state(family, point, state_path)
    res = q_discord(rho, q, variant)
    theta, phi = res.optimal_measurement.bloch_angles()
    record["value"] = _fmt(res.value)
    record["theta"] = _fmt(theta)
    record["phi"] = _fmt(phi)
    record["converged"] = str(res.converged).lower()
    return record


def _write_csv(path, records) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record)


def _cmd_scan(ns) -> int:
    sweep_name = ns.sweep
    valid_sweeps = set(_FAMILY_PARAMS[ns.family]) | {"q"}
    if sweep_name not in valid_sweeps:
        raise UsageError(
            f"cannot sweep {sweep_name!r} for family {ns.family!r}; "
            f"choose from {sorted(valid_sweeps)}"
        )
    params = _family_params(ns, swept=sweep_name if sweep_name != "q" else None)
    variants = _expand(ns.variant, ("qexp", "additive"))
    methods = _expand(ns.method, ("closed", "numeric"))
    _validate_closed_support(ns.family, variants, methods)
    try:
        qs = tuple(float(part) for part in str(ns.q).split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--q must be a comma-separated list of numbers, got {ns.q!r}")
    if not qs:
        raise UsageError("--q must name at least one rank")
    values = _sweep_values(ns.start, ns.end, ns.steps)
    rows = _scan_rows(params, sweep_name, values, qs, variants, methods)

    threads = _thread_count()
    work = [
        (ns.family, ns.state, point, q, variant, method)
        for point, q, variant, method in rows
    ]
    if threads == 1 or len(work) < 2:
        records = [_compute_row(*item) for item in work]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda item: _compute_row(*item), work))
    _write_csv(ns.out, records)
    n_unconverged = sum(1 for r in records if r["converged"] == "false")
    print(f"wrote {len(records)} rows to {ns.out} ({n_unconverged} unconverged)")
    return EXIT_OK


_FIGURES = {
    # name: (family, fixed params, sweep param, grid, q, variants)
    "fig1": ("werner", {}, "lambda", np.linspace(0.0, 1.0, 201), 1.2, ("qexp", "additive")),
    "fig2": ("isotropic", {}, "lambda", np.linspace(0.0, 1.0, 201), 1.2, ("qexp", "additive")),
    "fig3": ("circulant", {"g": 0.5}, "epsilon", np.linspace(0.0, 1.0, 202)[1:], 1.75, ("qexp",)),
}


def _cmd_figure(ns) -> int:
    family, fixed, sweep_name, grid, q, variants = _FIGURES[ns.name]
    os.makedirs(ns.out, exist_ok=True)
    rows = _scan_rows(fixed, sweep_name, grid, (q,), variants, ("closed",))
    records = [_compute_row(family, None, *row) for row in rows]
    path = os.path.join(ns.out, f"{ns.name}.csv")
    _write_csv(path, records)
    print(f"wrote {len(records)} rows to {path}")
    return EXIT_OK


def _cmd_verify(ns) -> int:
    results = run_suites(quick=ns.quick)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"[{status}] {r.name:<22} checks={r.checks:<5d} "
            f"max|disc|={r.max_discrepancy:.3e}  {r.seconds:6.2f}s"
        )
        if not r.passed:
            for line in r.failures[:5]:
                print(f"       - {line}")
            if len(r.failures) > 5:
                print(f"       - ... and {len(r.failures) - 5} more")
    total = sum(r.seconds for r in results)
    print(f"verify: {len(results) - len(failed)}/{len(results)} suites passed in {total:.1f}s")
    return EXIT_OK if not failed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if ns.command == "eval":
            return _cmd_eval(ns)
        if ns.command == "scan":
            return _cmd_scan(ns)
        if ns.command == "figure":
            return _cmd_figure(ns)
        return _cmd_verify(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QDiscordError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
