"""Command-line front end.

Subcommands: constants, state, table, sweep, equilibrium, meson, linewidth,
plot.  Parameter precedence is CLI flag > environment variable (CASNUC_
prefix) > --config key=value file > built-in default.  Output is written
atomically when --out is given, to stdout otherwise.  Exit codes: 0 success,
2 usage/domain error, 3 numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
import warnings
from dataclasses import dataclass

from . import lifshitz, nuclear, plasma, svgplot
from ._version import __version__
from .constants import CONSTANTS_VINTAGE, K_B, R_PROTON_DEFAULT, constants
from .errors import DomainError, NumericalError, UnitError
from .units import convert

ENV_PREFIX = "CASNUC_"

TABLE2_GRID_FM = (1.0, 1.5, 2.0, 2.6, 3.0)

# log grid for the closed-form vs composed-pipeline consistency table
_CHECK_GRID_POINTS = 25
_CHECK_L_MIN_FM = 0.1
_CHECK_L_MAX_FM = 100.0


@dataclass(frozen=True)
class _Opt:
    dest: str
    flag: str
    kind: str                       # float | int | str | bool
    default: object = None
    choices: tuple[str, ...] | None = None
    help: str = ""


_FORMAT_CHOICES = {
    "constants": ("json",),
    "state": ("json",),
    "table": ("csv", "json"),
    "sweep": ("csv", "json"),
    "equilibrium": ("json",),
    "meson": ("json",),
    "linewidth": ("json",),
    "plot": ("svg",),
}

_COMMON_OPTS = [
    _Opt("out", "--out", "str", None, help="output path (atomic write); stdout if omitted"),
]

_SUBCOMMAND_OPTS: dict[str, list[_Opt]] = {
    "constants": [],
    "state": [
        _Opt("L", "--L", "float", 1.0, help="plate separation [fm]"),
        _Opt("mu_model", "--mu-model", "str", "spin", ("unity", "spin", "field")),
        _Opt("H", "--H", "float", 0.0, help="applied field [A/m], field model only"),
        _Opt("convention", "--convention", "str", "table", ("table", "literal")),
    ],
    "table": [
        _Opt("which", "--which", "int", 2, help="1: closed-form check, 2: state table"),
    ],
    "sweep": [
        _Opt("Lmin", "--Lmin", "float", 1.0, help="smallest separation [fm]"),
        _Opt("Lmax", "--Lmax", "float", 3.0, help="largest separation [fm]"),
        _Opt("points", "--points", "int", 41),
        _Opt("mu_model", "--mu-model", "str", "spin", ("unity", "spin")),
        _Opt("mode", "--mode", "str", "coupled", ("coupled", "fixed")),
        _Opt("R", "--R", "float", R_PROTON_DEFAULT / 1e-15, help="plate radius [fm]"),
        _Opt("method", "--method", "str", "asymptote", ("exact", "asymptote", "full")),
        _Opt("Linit", "--Linit", "float", None,
             help="fixed mode: separation the state is pinned at [fm]; default Lmin"),
        _Opt("convention", "--convention", "str", "table", ("table", "literal")),
    ],
    "equilibrium": [
        _Opt("R", "--R", "float", R_PROTON_DEFAULT / 1e-15, help="plate radius [fm]"),
    ],
    "meson": [
        _Opt("L", "--L", "float", 1.0, help="plate separation [fm]"),
        _Opt("mu_model", "--mu-model", "str", "spin", ("unity", "spin")),
        _Opt("convention", "--convention", "str", "table", ("table", "literal")),
    ],
    "linewidth": [
        _Opt("L", "--L", "float", 1.0, help="plate separation [fm]"),
        _Opt("q_ratio", "--q-ratio", "float", 0.1, help="wavevector over q_F"),
        _Opt("total_density", "--total-density", "bool", False,
             help="use the full pair density instead of the per-species half"),
    ],
    "plot": [
        _Opt("which", "--which", "int", 1, help="1: zero-freq comparison, 2: breakdown"),
        _Opt("Lmin", "--Lmin", "float", 1.0),
        _Opt("Lmax", "--Lmax", "float", 3.0),
        _Opt("points", "--points", "int", 41),
        _Opt("R", "--R", "float", R_PROTON_DEFAULT / 1e-15, help="plate radius [fm]"),
        _Opt("mu_model", "--mu-model", "str", "unity", ("unity", "spin"),
             help="permeability model for the breakdown plot"),
        _Opt("convention", "--convention", "str", "table", ("table", "literal")),
    ],
}

_CONVENTIONS = {"table": "table_consistent", "literal": "equation_literal"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casnuc",
        description="Screened Casimir interactions across a nuclear-scale pair plasma.",
    )
    parser.add_argument(
        "--version", action="version", version=f"casnuc {__version__} ({CONSTANTS_VINTAGE})"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, opts in _SUBCOMMAND_OPTS.items():
        p = sub.add_parser(name)
        for o in opts + _COMMON_OPTS:
            if o.kind == "bool":
                p.add_argument(o.flag, dest=o.dest, action="store_const", const=True,
                               default=None, help=o.help)
            else:
                p.add_argument(o.flag, dest=o.dest, default=None, help=o.help)
        p.add_argument("--format", dest="format", default=None,
                       help="|".join(_FORMAT_CHOICES[name]))
        p.add_argument("--config", dest="config", default=None,
                       help="key=value file supplying defaults")
    return parser


def _parse_bool(raw: str) -> bool:
    low = raw.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"cannot interpret {raw!r} as a boolean")


def _coerce(opt: _Opt, raw: object) -> object:
    if raw is None:
        return None
    if isinstance(raw, bool):
        return raw
    text = str(raw)
    try:
        if opt.kind == "float":
            value = float(text)
            if math.isnan(value):
                raise ValueError("nan")
            return value
        if opt.kind == "int":
            return int(text)
        if opt.kind == "bool":
            return _parse_bool(text)
    except ValueError as exc:
        raise DomainError(f"bad value for {opt.flag}: {text!r}") from exc
    if opt.choices is not None and text not in opt.choices:
        raise DomainError(
            f"bad value for {opt.flag}: {text!r} (choose from {', '.join(opt.choices)})"
        )
    return text


def _load_config(path: str) -> dict[str, str]:
    """Line-oriented key=value file; blank lines and # comments are skipped.

    Unknown keys are ignored so one config can serve several subcommands.
    """
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {text!r}")
            key, _, value = text.partition("=")
            values[key.strip()] = value.strip()
    return values


def _resolve_params(command: str, ns: argparse.Namespace) -> dict[str, object]:
    config = _load_config(ns.config) if ns.config else {}
    params: dict[str, object] = {}
    for o in _SUBCOMMAND_OPTS[command] + _COMMON_OPTS:
        raw = getattr(ns, o.dest)
        if raw is None:
            raw = os.environ.get(ENV_PREFIX + o.dest.upper())
        if raw is None:
            raw = config.get(o.dest)
        value = _coerce(o, raw)
        params[o.dest] = o.default if value is None else value

    fmt_opt = _Opt("format", "--format", "str", _FORMAT_CHOICES[command][0],
                   _FORMAT_CHOICES[command])
    raw = ns.format
    if raw is None:
        raw = os.environ.get(ENV_PREFIX + "FORMAT")
    if raw is None:
        raw = config.get("format")
    value = _coerce(fmt_opt, raw)
    params["format"] = fmt_opt.default if value is None else value
    return params


def _model_from_params(params: dict[str, object]) -> plasma.PermeabilityModel:
    convention = _CONVENTIONS[params.get("convention", "table")]
    name = params["mu_model"]
    if name == "unity":
        return plasma.PermeabilityModel.unity()
    if name == "spin":
        return plasma.PermeabilityModel.static_spin(convention)
    if name == "field":
        return plasma.PermeabilityModel.in_field(float(params.get("H", 0.0)))
    raise DomainError(f"unknown permeability model {name!r}")


def _fmt_cell(value: object) -> str:
    # 9 significant digits, scientific: lossless enough for regression CSVs
    if isinstance(value, float):
        return f"{value:.8e}"
    return str(value)


def _csv_document(header: list[str], rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt_cell(v) for v in row])
    return buf.getvalue()


def _json_document(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_constants(params: dict[str, object]) -> str:
    c = constants()
    return _json_document(
        {
            "hbar": c.hbar,
            "c": c.c,
            "k_B": c.k_B,
            "e": c.e,
            "m_e": c.m_e,
            "eps0": c.eps0,
            "mu0": c.mu0,
            "mu_B": c.mu_B,
            "zeta3": c.zeta3,
            "units": {
                "hbar": "J*s", "c": "m/s", "k_B": "J/K", "e": "C", "m_e": "kg",
                "eps0": "F/m", "mu0": "H/m", "mu_B": "J/T", "zeta3": "1",
            },
            "vintage": CONSTANTS_VINTAGE,
        }
    )


def _cmd_state(params: dict[str, object]) -> str:
    L = float(params["L"]) * 1e-15
    model = _model_from_params(params)
    state = plasma.plasma_state_from_distance(L, model)
    kappa = lifshitz.screening_wavevector(state.rho, state.mu_ep)
    payload = {
        "L_fm": params["L"],
        "T_K": state.T,
        "rho_m3": state.rho,
        "omega_ep_rad_s": state.omega_ep,
        "mu_ep": state.mu_ep,
        "kappa_1_m": kappa,
        "kT_MeV": convert(K_B * state.T, "J", "MeV"),
        "mu_model": params["mu_model"],
        "convention": params["convention"],
        "assumptions": plasma.state_assumptions(state),
    }
    return _json_document(payload)


def emit_table(which: int, fmt: str = "csv") -> str:
    """Reference tables: which=2 is the five-row state table, which=1 the
    closed-form vs composed-pipeline consistency report."""
    if which == 2:
        header = ["L_fm", "T_K", "rho_m3", "omega_ep_rad_s", "mu_ep"]
        rows: list[list[object]] = []
        for L_fm in TABLE2_GRID_FM:
            s = plasma.plasma_state_from_distance(L_fm * 1e-15)
            rows.append([L_fm, s.T, s.rho, s.omega_ep, s.mu_ep])
        if fmt == "json":
            return _json_document(
                [dict(zip(header, row)) for row in rows]
            )
        return _csv_document(header, rows)
    if which == 1:
        ratio = (_CHECK_L_MAX_FM / _CHECK_L_MIN_FM) ** (1.0 / (_CHECK_GRID_POINTS - 1))
        deviations = {k: 0.0 for k in ("T_K", "rho_m3", "omega_ep_rad_s", "mu_ep")}
        for i in range(_CHECK_GRID_POINTS):
            L = _CHECK_L_MIN_FM * ratio**i * 1e-15
            closed = plasma.distance_closed_forms(L)
            s = plasma.plasma_state_from_distance(L)
            composed = {
                "T_K": s.T, "rho_m3": s.rho, "omega_ep_rad_s": s.omega_ep,
                "mu_ep": s.mu_ep,
            }
            for key, dev in deviations.items():
                rel = abs(closed[key] - composed[key]) / abs(composed[key])
                deviations[key] = max(dev, rel)
        if fmt == "json":
            return _json_document(
                {
                    "grid_points": _CHECK_GRID_POINTS,
                    "L_min_fm": _CHECK_L_MIN_FM,
                    "L_max_fm": _CHECK_L_MAX_FM,
                    "max_rel_dev": deviations,
                }
            )
        return _csv_document(
            ["quantity", "max_rel_dev"], [[k, v] for k, v in deviations.items()]
        )
    raise DomainError(f"table --which must be 1 or 2, got {which}")


def _cmd_table(params: dict[str, object]) -> str:
    return emit_table(int(params["which"]), str(params["format"]))


def _cmd_sweep(params: dict[str, object]) -> str:
    spec = lifshitz.SweepSpec(
        L_min_fm=float(params["Lmin"]),
        L_max_fm=float(params["Lmax"]),
        points=int(params["points"]),
        model=_model_from_params(params),
        mode=str(params["mode"]),
        method=str(params["method"]),
        R_fm=float(params["R"]),
        L_init_fm=None if params["Linit"] is None else float(params["Linit"]),
    )
    rows = lifshitz.sweep_rows(spec)
    header = ["L_fm", "T_K", "rho_m3", "omega_ep", "mu_ep", "kappa_1_m",
              "F0_MeV", "Fn_MeV", "Ftot_MeV"]
    if params["format"] == "json":
        return _json_document(
            [
                {
                    "L_fm": r.L_fm, "T_K": r.T_K, "rho_m3": r.rho_m3,
                    "omega_ep": r.omega_ep, "mu_ep": r.mu_ep,
                    "kappa_1_m": r.kappa_1_m, "F0_MeV": r.F0_MeV,
                    "Fn_MeV": r.Fn_MeV, "Ftot_MeV": r.Ftot_MeV,
                }
                for r in rows
            ]
        )
    return _csv_document(
        header,
        [
            [r.L_fm, r.T_K, r.rho_m3, r.omega_ep, r.mu_ep, r.kappa_1_m,
             r.F0_MeV, r.Fn_MeV, r.Ftot_MeV]
            for r in rows
        ],
    )


def _cmd_equilibrium(params: dict[str, object]) -> str:
    R = float(params["R"]) * 1e-15
    res = nuclear.equilibrium_distance(R)
    return _json_document(
        {
            "R_fm": params["R"],
            "D": res.D,
            "x_tilde": res.x_tilde,
            "L_eq_m": res.L_eq,
            "L_eq_fm": convert(res.L_eq, "m", "fm"),
            "residual": res.residual,
        }
    )


def _cmd_meson(params: dict[str, object]) -> str:
    L = float(params["L"]) * 1e-15
    model = _model_from_params(params)
    state = plasma.plasma_state_from_distance(L, model)
    yq = nuclear.yukawa_quantities(state.rho, state.mu_ep)
    return _json_document(
        {
            "L_fm": params["L"],
            "mu_model": params["mu_model"],
            "rho_m3": state.rho,
            "mu_ep": state.mu_ep,
            "kappa_1_m": yq.kappa_source,
            "meson_mass_J": yq.meson_mass_energy,
            "meson_mass_MeV": convert(yq.meson_mass_energy, "J", "MeV"),
            "screening_length_m": yq.screening_length,
            "screening_length_fm": convert(yq.screening_length, "m", "fm"),
        }
    )


def _cmd_linewidth(params: dict[str, object]) -> str:
    L = float(params["L"]) * 1e-15
    rho = plasma.density_from_distance(L)
    use_total = bool(params["total_density"])
    n = rho if use_total else 0.5 * rho
    eps_f, q_f = nuclear.fermi_quantities(n)
    r, bracket = nuclear.linewidth_bracket(n)
    with warnings.catch_warnings():
        # the negative-bracket caveat is reported as a JSON field instead
        warnings.simplefilter("ignore")
        width = nuclear.plasmon_linewidth(n, float(params["q_ratio"]))
    return _json_document(
        {
            "L_fm": params["L"],
            "q_ratio": params["q_ratio"],
            "n_m3": n,
            "density_convention": "total" if use_total else "per_species",
            "eps_F_J": eps_f,
            "eps_F_MeV": convert(eps_f, "J", "MeV"),
            "q_F_1_m": q_f,
            "hbar_omega_p_over_2eps_F": r,
            "bracket": bracket,
            "bracket_negative": bracket < 0.0,
            "linewidth_J": width,
            "linewidth_MeV": convert(width, "J", "MeV"),
        }
    )


def emit_plot(series: list[tuple[str, list[float], list[float]]],
              axes: tuple[str, ...]) -> str:
    """Render labelled series through the deterministic SVG writer.

    axes is (x_label, y_label) or (x_label, y_label, title).
    """
    title = axes[2] if len(axes) > 2 else None
    return svgplot.render_line_chart(series, axes[0], axes[1], title=title)


def _plot_grid(params: dict[str, object]) -> list[float]:
    lmin, lmax = float(params["Lmin"]), float(params["Lmax"])
    points = int(params["points"])
    if not lmin > 0.0 or not lmax > lmin or points < 2:
        raise DomainError("plot grid requires 0 < Lmin < Lmax and points >= 2")
    step = (lmax - lmin) / (points - 1)
    return [lmin + i * step for i in range(points)]


def _cmd_plot(params: dict[str, object]) -> str:
    grid_fm = _plot_grid(params)
    area = math.pi * (float(params["R"]) * 1e-15) ** 2
    convention = _CONVENTIONS[params.get("convention", "table")]
    which = int(params["which"])
    if which == 1:
        unity = plasma.PermeabilityModel.unity()
        spin = plasma.PermeabilityModel.static_spin(convention)
        ys_unity, ys_spin = [], []
        for L_fm in grid_fm:
            L = L_fm * 1e-15
            b_u = lifshitz.distance_coupled_breakdown(L, unity, area)
            b_s = lifshitz.distance_coupled_breakdown(L, spin, area)
            ys_unity.append(convert(b_u.zero_freq * area, "J", "MeV"))
            ys_spin.append(convert(b_s.zero_freq * area, "J", "MeV"))
        return emit_plot(
            [("mu = 1", grid_fm, ys_unity), ("spin permeability", grid_fm, ys_spin)],
            ("L (fm)", "F0 per plate pair (MeV)", "Zero-frequency interaction energy"),
        )
    if which == 2:
        model = _model_from_params(params)
        zero, finite, total = [], [], []
        for L_fm in grid_fm:
            b = lifshitz.distance_coupled_breakdown(L_fm * 1e-15, model, area)
            zero.append(convert(b.zero_freq * area, "J", "MeV"))
            finite.append(convert(b.finite_freq * area, "J", "MeV"))
            total.append(convert(b.total * area, "J", "MeV"))
        return emit_plot(
            [
                ("zero frequency", grid_fm, zero),
                ("finite frequency", grid_fm, finite),
                ("total", grid_fm, total),
            ],
            ("L (fm)", "free energy per plate pair (MeV)", "Interaction free energy breakdown"),
        )
    raise DomainError(f"plot --which must be 1 or 2, got {which}")


_DISPATCH = {
    "constants": _cmd_constants,
    "state": _cmd_state,
    "table": _cmd_table,
    "sweep": _cmd_sweep,
    "equilibrium": _cmd_equilibrium,
    "meson": _cmd_meson,
    "linewidth": _cmd_linewidth,
    "plot": _cmd_plot,
}


def _write_output(document: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(document)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".casnuc-tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(document)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        params = _resolve_params(ns.command, ns)
        document = _DISPATCH[ns.command](params)
        _write_output(document, params.get("out"))
        return 0
    except (NumericalError,) as exc:
        print(f"casnuc: numerical error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, UnitError, ValueError, OSError) as exc:
        print(f"casnuc: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
