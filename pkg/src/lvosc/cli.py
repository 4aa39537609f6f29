"""Command-line interface.

Subcommands: spectrum, wavefunction, sweep, validate, limits.

Exit codes: 0 success; 1 oracle tolerance or limit-claim failure;
2 invalid configuration or no bound states. Errors are one stderr line
``error: <Code>: <reason>``.
"""
import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import errors, model, oracle, spectra
from ._backend import BACKEND
from .config import HELP, RunConfig, build_config, fixture_names
from .errors import LvoscError

SPECTRUM_COLUMNS = ("n", "l", "k", "branch", "epsilon", "epsilon_squared", "tau", "scale")
WAVEFUNCTION_COLUMNS = ("r", "psi", "r_psi_sq")
SWEEP_VARIABLES = ("g", "kappa1", "kappa2", "c1", "c2", "chi", "a", "b", "omega")
SWEEP_COLUMNS = ("variable", "value") + SPECTRUM_COLUMNS + ("status",)
VALIDATE_COLUMNS = ("l", "n", "analytic_C", "oracle_C", "rel_error", "pass")


class UsageError(Exception):
    pass


def fmt(x):
    """12 significant digits; integers and strings pass through."""
    if isinstance(x, (bool, str)) or x is None:
        return "" if x is None else str(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    return f"{x:.12g}"


def _json_value(x):
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def render(columns, rows, fmt_kind, comments=(), meta=None, trailer=()):
    if fmt_kind == "json":
        doc = dict(meta or {})
        doc["columns"] = list(columns)
        doc["rows"] = [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows]
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    for line in trailer:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _qn(cfg, n, l):
    return model.QuantumNumbers(n, l, cfg.k)


def _require_bound(cfg, l_values):
    bg, fc, osc = cfg.background(), cfg.fields(), cfg.oscillator()
    for l in l_values:
        report = model.validate_scenario(bg, fc, osc, _qn(cfg, 0, l))
        if not report.ok:
            exc_type = getattr(errors, report.error_code or "", LvoscError)
            raise exc_type(report.summary())


def spectrum_rows(cfg, warn=None):
    bg, fc, osc = cfg.background(), cfg.fields(), cfg.oscillator()
    rows = []
    for n in range(cfg.n_max + 1):
        for l in cfg.l:
            lvl = spectra.energy(bg, fc, osc, _qn(cfg, n, l), allow_tachyonic=True)
            if lvl.tachyonic and warn is not None:
                warn(f"warning: TachyonicLevel: epsilon^2 = {fmt(lvl.epsilon_squared)} "
                     f"< 0 at n={n}, l={l}")
            for branch, eps in (("+", lvl.epsilon_plus), ("-", lvl.epsilon_minus)):
                rows.append((n, l, cfg.k, branch, eps, lvl.epsilon_squared,
                             lvl.tau, lvl.scale))
    return rows


def cmd_spectrum(cfg, args):
    _require_bound(cfg, cfg.l)
    rows = spectrum_rows(cfg, warn=lambda m: print(m, file=sys.stderr))
    text = render(SPECTRUM_COLUMNS, rows, cfg.format,
                  comments=[f"lvosc spectrum coupling={cfg.coupling}"],
                  meta={"command": "spectrum", "coupling": cfg.coupling})
    emit(text, args.out)
    return 0


def cmd_wavefunction(cfg, args):
    if len(cfg.l) != 1:
        raise UsageError("wavefunction takes a single --l value")
    l = cfg.l[0]
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    _require_bound(cfg, [l])
    bg, fc, osc = cfg.background(), cfg.fields(), cfg.oscillator()
    qn = _qn(cfg, args.n, l)
    psi = spectra.wavefunction(bg, fc, osc, qn)
    r_max = args.r_max
    if r_max is None:
        factor = cfg.r_max_factor or oracle.auto_r_max_factor(psi.tau, args.n)
        r_max = math.sqrt(factor / psi.scale)
    if args.points < 2 or not r_max > 0:
        raise UsageError("need --points >= 2 and --r-max > 0")
    r = np.linspace(0.0, r_max, args.points)
    values = np.asarray(psi(r))
    norm = psi.normalization(args.nodes)
    rows = [(ri, v, ri * v * v) for ri, v in zip(r, values)]
    meta = {"command": "wavefunction", "coupling": cfg.coupling, "n": args.n, "l": l,
            "tau": _json_value(psi.tau), "scale": _json_value(psi.scale),
            "norm": _json_value(psi.norm), "normalization": _json_value(norm)}
    text = render(WAVEFUNCTION_COLUMNS, rows, cfg.format,
                  comments=[f"lvosc wavefunction coupling={cfg.coupling} n={args.n} l={l} "
                            f"tau={fmt(psi.tau)} scale={fmt(psi.scale)}"],
                  meta=meta, trailer=[f"normalization={fmt(norm)}"])
    emit(text, args.out)
    return 0


def _sweep_point(cfg, var, value):
    try:
        point = replace(cfg, **{var: float(value)}).check()
        rows = spectrum_rows(point)
        return [(var, value) + row + ("ok",) for row in rows]
    except LvoscError as exc:
        return [(var, value, n, l, cfg.k, b, None, None, None, None, exc.code)
                for n in range(cfg.n_max + 1) for l in cfg.l for b in ("+", "-")]


def _sweep_job(payload):
    return _sweep_point(*payload)


def plot_script(var, rows, n_max, l_values):
    lines = [f"# gnuplot script: epsilon (+ branch) vs {var}",
             f"set xlabel '{var}'", "set ylabel 'epsilon'", "set key outside", ""]
    curves = []
    for n in range(n_max + 1):
        for l in l_values:
            name = f"$n{n}_l{'m' if l < 0 else ''}{abs(l)}"
            pts = [(r[1], r[6]) for r in rows
                   if r[2] == n and r[3] == l and r[5] == "+" and r[-1] == "ok"]
            lines.append(f"{name} << EOD")
            lines.extend(f"{fmt(x)} {fmt(y)}" for x, y in pts)
            lines.append("EOD")
            curves.append(f"{name} with linespoints title 'n={n}, l={l}'")
    lines.append("")
    lines.append("plot " + ", \\\n     ".join(curves))
    return "\n".join(lines) + "\n"


def cmd_sweep(cfg, args):
    var = args.var
    if var not in SWEEP_VARIABLES:
        raise UsageError(f"--var must be one of {', '.join(SWEEP_VARIABLES)}")
    if var == "a" and cfg.coupling != "cornell":
        raise UsageError("sweeping a requires --coupling cornell")
    if args.points < 1:
        raise UsageError("--points must be >= 1")
    grid = np.linspace(args.start, args.stop, args.points) if args.points > 1 else [args.start]
    payloads = [(cfg, var, float(v)) for v in grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_sweep_job, payloads))
    else:
        chunks = [_sweep_job(p) for p in payloads]
    rows = [row for chunk in chunks for row in chunk]
    text = render(SWEEP_COLUMNS, rows, cfg.format,
                  comments=[f"lvosc sweep variable={var} coupling={cfg.coupling}"],
                  meta={"command": "sweep", "variable": var, "coupling": cfg.coupling})
    emit(text, args.out)
    plot_path = args.plot
    if plot_path is None and args.out:
        plot_path = str(Path(args.out).with_suffix(".gp"))
    if plot_path:
        Path(plot_path).write_text(plot_script(var, rows, cfg.n_max, cfg.l))
    return 0


def cmd_validate(cfg, args):
    _require_bound(cfg, cfg.l)
    bg, fc, osc = cfg.background(), cfg.fields(), cfg.oscillator()
    rows, comments, ok = [], [f"lvosc validate coupling={cfg.coupling} backend={BACKEND}"], True
    reports = []
    for l in cfg.l:
        rep = oracle.compare_with_analytic(
            bg, fc, osc, n_max=cfg.n_max, l=l, k=cfg.k, tolerance=cfg.tolerance,
            count=cfg.count, r_max_factor=cfg.r_max_factor, scheme=cfg.scheme)
        reports.append(rep)
        ok = ok and rep.passed
        comments.append(f"l={l} tau={fmt(rep.tau)} scale={fmt(rep.scale)} "
                        f"r_max={fmt(rep.grid.r_max)} count={rep.grid.count} "
                        f"scheme={cfg.scheme} reduced_confidence={rep.reduced_confidence}")
        for lc in rep.levels:
            rows.append((l, lc.n, lc.analytic, lc.oracle, lc.rel_error,
                         "pass" if lc.passed else "fail"))
    status = "pass" if ok else "fail"
    meta = {"command": "validate", "coupling": cfg.coupling, "status": status,
            "tolerance": cfg.tolerance, "reduced_confidence":
                any(r.reduced_confidence for r in reports)}
    text = render(VALIDATE_COLUMNS, rows, cfg.format, comments=comments, meta=meta,
                  trailer=[f"status={status} tolerance={fmt(cfg.tolerance)}"])
    emit(text, args.out)
    return 0 if ok else 1


def cmd_limits(cfg, args):
    bg, fc, osc = cfg.background(), cfg.fields(), cfg.oscillator()
    l = cfg.l[0]
    qn = _qn(cfg, 0, l)
    rep = spectra.limit_checks(bg, fc, osc, qn, chi_max=args.chi_max, points=args.points)
    summary = [
        f"lvosc limits coupling={cfg.coupling} n=0 l={l}",
        f"classification_without_lsv={rep.classification}",
        f"continuity_gap={fmt(rep.continuity_gap)}",
        f"monotone_claimed={rep.monotone_claimed} monotone={rep.monotone}",
    ]
    rows = list(zip(rep.chi_grid, rep.epsilon, rep.status))
    meta = {"command": "limits", "coupling": cfg.coupling,
            "classification_without_lsv": rep.classification,
            "continuity_gap": _json_value(rep.continuity_gap),
            "monotone_claimed": rep.monotone_claimed, "monotone": rep.monotone,
            "ok": rep.ok}
    text = render(("chi", "epsilon", "status"), rows, cfg.format, comments=summary,
                  meta=meta, trailer=[f"ok={rep.ok}"])
    emit(text, args.out)
    return 0 if rep.ok else 1


COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
    "limits": cmd_limits,
}


def _common_parser():
    p = argparse.ArgumentParser(add_help=False)
    d = RunConfig()
    g = p.add_argument_group("physical and run parameters")
    for name in ("g", "kappa1", "kappa2", "c1", "c2", "chi"):
        g.add_argument(f"--{name}", type=float, default=None,
                       help=f"{HELP[name]} (default {getattr(d, name)})")
    g.add_argument("--mass", "-M", type=float, default=None,
                   help=f"{HELP['mass']} (default {d.mass})")
    g.add_argument("--omega", type=float, default=None, help=f"{HELP['omega']} (default {d.omega})")
    g.add_argument("--coupling", choices=("coulomb", "cornell"), default=None,
                   help=f"{HELP['coupling']} (default {d.coupling})")
    g.add_argument("--a", type=float, default=None, help=f"{HELP['a']} (default {d.a})")
    g.add_argument("--b", type=float, default=None, help=f"{HELP['b']} (default {d.b})")
    g.add_argument("--n-max", dest="n_max", type=int, default=None,
                   help=f"{HELP['n_max']} (default {d.n_max})")
    g.add_argument("--l", default=None, help=f"{HELP['l']} (default 0)")
    g.add_argument("--k", type=float, default=None, help=f"{HELP['k']} (default {d.k})")
    g.add_argument("--format", choices=("csv", "json"), default=None,
                   help=f"{HELP['format']} (default {d.format})")
    g.add_argument("--count", type=int, default=None, help=f"{HELP['count']} (default {d.count})")
    g.add_argument("--r-max-factor", dest="r_max_factor", default=None,
                   help=HELP["r_max_factor"])
    g.add_argument("--tolerance", type=float, default=None,
                   help=f"{HELP['tolerance']} (default {d.tolerance:g})")
    g.add_argument("--scheme", choices=oracle.SCHEMES, default=None,
                   help=f"{HELP['scheme']} (default {d.scheme})")
    p.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    p.add_argument("--config", default=None,
                   help="key=value config file or shipped fixture name "
                        f"(fallback: $LVOSC_CONFIG; fixtures: {', '.join(fixture_names())})")
    return p


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="lvosc",
        description="Generalized Klein-Gordon oscillator spectra in a Lorentz-violating "
                    "background (Coulomb- and Cornell-type couplings).")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="tabulate energy levels")
    w = sub.add_parser("wavefunction", parents=[common], help="tabulate a radial wavefunction")
    w.add_argument("--n", type=int, default=0, help="radial quantum number (default 0)")
    w.add_argument("--r-max", dest="r_max", type=float, default=None,
                   help="largest radius (default sqrt(r_max_factor / scale))")
    w.add_argument("--points", type=int, default=201, help="radial samples (default 201)")
    w.add_argument("--nodes", type=int, default=spectra.DEFAULT_QUADRATURE_NODES,
                   help="quadrature nodes for the normalization check (default 200)")
    s = sub.add_parser("sweep", parents=[common], help="sweep one parameter")
    s.add_argument("--var", required=True, help=f"one of {', '.join(SWEEP_VARIABLES)}")
    s.add_argument("--start", type=float, required=True)
    s.add_argument("--stop", type=float, required=True)
    s.add_argument("--points", type=int, default=21, help="grid points (default 21)")
    s.add_argument("--plot", default=None,
                   help="gnuplot script path (default: --out with .gp suffix)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sub.add_parser("validate", parents=[common],
                   help="compare closed-form levels with the finite-difference oracle")
    lim = sub.add_parser("limits", parents=[common], help="chi -> 0 and LSV-free limit checks")
    lim.add_argument("--chi-max", dest="chi_max", type=float, default=2.0)
    lim.add_argument("--points", type=int, default=41)
    return parser


OVERRIDE_KEYS = ("g", "kappa1", "kappa2", "c1", "c2", "chi", "mass", "omega", "coupling",
                 "a", "b", "n_max", "l", "k", "format", "count", "r_max_factor",
                 "tolerance", "scheme")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    overrides = {key: getattr(args, key) for key in OVERRIDE_KEYS}
    try:
        cfg = build_config(args.config, overrides)
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"error: Usage: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except errors.InvalidParameter as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except LvoscError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
