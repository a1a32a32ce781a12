"""Command-line front end.

Thin mappings from flat TOML configs (dotted keys, SI units at the boundary)
onto the library; no physics lives here.  Exit codes: 0 success, 1 config or
validation error, 2 numerical error (singular response, oscillation
threshold), each with a one-line diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .coupling import (
    ModeProfileSet,
    brillouin_frequency,
    overlap_integral,
    uniform_coupling,
    vacuum_coupling_rate,
)
from .design import (
    DEFAULT_PUMP_BUDGET_UW,
    DEFAULT_RECYCLE_FACTOR,
    feasibility_report,
    report_to_json,
    report_to_text,
)
from .dynamics import DriveSignal, integrate
from .errors import ConfigError, NumericalError, ValidationError
from .quantities import (
    Material,
    bundled_materials,
    ghz_to_rad_per_s,
    material_lookup,
    q_to_rate,
    rad_per_s_to_ghz,
    um3_to_cm3,
    wavelength_nm_to_omega,
)
from .scattering import (
    DetuningConfig,
    PumpStrength,
    ResonatorSpec,
    SWEEP_POLICIES,
    resolve_policy,
    smatrix,
    sweep,
    sweep_to_csv,
    sweep_to_json,
)
from .stokes import stokes_report

_MISSING = object()

COMMANDS = ("materials", "coupling", "smatrix", "sweep", "dynamics", "stokes", "design")

_DEFAULT_FORMAT = {
    "materials": "json",
    "coupling": "json",
    "smatrix": "json",
    "sweep": "csv",
    "dynamics": "csv",
    "stokes": "json",
    "design": "json",
}

_ALLOWED_FORMATS = {
    "materials": ("json", "csv"),
    "coupling": ("json", "csv"),
    "smatrix": ("json", "csv"),
    "sweep": ("csv", "json"),
    "dynamics": ("csv", "json"),
    "stokes": ("json", "csv"),
    "design": ("json", "text"),
}


class Config:
    """Dotted-key access over a parsed TOML table with named failures."""

    def __init__(self, data: dict):
        self._data = data

    def get(self, key: str, default=_MISSING):
        node = self._data
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                if default is _MISSING:
                    raise ConfigError(key, "missing required key")
                return default
            node = node[part]
        return node

    def has(self, key: str) -> bool:
        return self.get(key, None) is not None

    def number(self, key: str, default=_MISSING, positive=False, nonnegative=False):
        value = self.get(key, default)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(key, f"must be a number, got {value!r}")
        if positive and not value > 0:
            raise ConfigError(key, f"must be > 0, got {value}")
        if nonnegative and value < 0:
            raise ConfigError(key, f"must be >= 0, got {value}")
        return float(value)

    def integer(self, key: str, default=_MISSING, minimum=None):
        value = self.get(key, default)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(key, f"must be an integer, got {value!r}")
        if minimum is not None and value < minimum:
            raise ConfigError(key, f"must be >= {minimum}, got {value}")
        return value

    def text(self, key: str, default=_MISSING, choices=None):
        value = self.get(key, default)
        if value is None:
            return None
        if not isinstance(value, str):
            raise ConfigError(key, f"must be a string, got {value!r}")
        if choices is not None and value not in choices:
            raise ConfigError(key, f"must be one of {choices}, got {value!r}")
        return value

    def complex_value(self, key: str, default=_MISSING):
        """A number or a [re, im] pair."""
        value = self.get(key, default)
        if value is None or isinstance(value, complex):
            return value
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return complex(value)
        if (
            isinstance(value, list)
            and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
        ):
            return complex(value[0], value[1])
        raise ConfigError(key, f"must be a number or a [re, im] pair, got {value!r}")


def load_config(path) -> Config:
    if path is None:
        raise ConfigError("--config", "this command requires a config file")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError("--config", f"cannot read {path}: {exc}") from exc
    try:
        return Config(tomllib.loads(text))
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError("--config", f"malformed TOML in {path}: {exc}") from exc


def build_material(cfg: Config) -> Material:
    name = cfg.text("material.name", None)
    if name is not None:
        return material_lookup(name)
    if any(cfg.has(f"material.{f}") for f in ("n", "p", "rho", "s")):
        return Material(
            name=cfg.text("material.label", "custom"),
            n=cfg.number("material.n"),
            p=cfg.number("material.p"),
            rho=cfg.number("material.rho", positive=True),
            s=cfg.number("material.s", positive=True),
            gamma=cfg.number("material.gamma", None),
            epsilon=cfg.number("material.epsilon", None),
        )
    raise ConfigError("material.name", "missing required key (or inline material.n/p/rho/s)")


def build_resonator(cfg: Config, material: Material):
    """(spec, g0) from geometry + losses, chaining the uniform coupling estimate."""
    volume_um3 = cfg.number("geometry.volume_um3", positive=True)
    wavelength_nm = cfg.number("geometry.wavelength_nm", positive=True)
    omega_p = wavelength_nm_to_omega(wavelength_nm)
    coupling = uniform_coupling(material, um3_to_cm3(volume_um3), omega_p)
    omega_s = omega_p + coupling.Omega
    spec = ResonatorSpec(
        omega_s=omega_s,
        Omega=coupling.Omega,
        kappa0=q_to_rate(omega_s, cfg.number("losses.q_opt", positive=True)),
        kappa_int=q_to_rate(omega_s, cfg.number("losses.q_opt_int", positive=True)),
        Gamma0=q_to_rate(coupling.Omega, cfg.number("losses.q_ac", positive=True)),
        Gamma_int=q_to_rate(coupling.Omega, cfg.number("losses.q_ac_int", positive=True)),
        V=um3_to_cm3(volume_um3),
    )
    return spec, coupling


def build_pump(cfg: Config, g0: float, kappa0: float, Gamma0: float) -> PumpStrength:
    np_value = cfg.number("pump.np", None, nonnegative=True)
    eps_value = cfg.number("pump.epsilon", None, nonnegative=True)
    if (np_value is None) == (eps_value is None):
        raise ConfigError("pump.np", "set exactly one of pump.np or pump.epsilon")
    if np_value is not None:
        return PumpStrength.from_photons(np_value, g0, kappa0, Gamma0)
    return PumpStrength.from_epsilon(eps_value, g0, kappa0, Gamma0)


def build_detuning(cfg: Config, kappa0: float, Gamma0: float) -> DetuningConfig:
    policy = cfg.text("detuning.policy", "resonant")
    if policy == "fixed":
        d_omega = ghz_to_rad_per_s(cfg.number("detuning.optical_ghz"))
        d_Omega = ghz_to_rad_per_s(cfg.number("detuning.acoustic_ghz"))
        return DetuningConfig.from_pair(d_omega, d_Omega)
    if policy in SWEEP_POLICIES:
        return resolve_policy(policy, kappa0, Gamma0)
    raise ConfigError("detuning.policy", f"must be one of {SWEEP_POLICIES + ('fixed',)}, got {policy!r}")


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _material_record(m: Material) -> dict:
    return {
        "n": m.n,
        "p": m.p,
        "gamma": m.gamma,
        "epsilon": m.epsilon,
        "rho": m.rho,
        "s": m.s,
        "source": m.source,
    }


def cmd_materials(args) -> str:
    if args.config is not None:
        cfg = load_config(args.config)
        name = cfg.text("material.name", None)
        table = {name: material_lookup(name)} if name else bundled_materials()
    else:
        table = bundled_materials()
    if args.fmt == "json":
        return _json({name: _material_record(m) for name, m in table.items()})
    lines = ["name,n,p,gamma,epsilon,rho,s"]
    for name in sorted(table):
        m = table[name]
        lines.append(f"{name},{m.n!r},{m.p!r},{m.gamma!r},{m.epsilon!r},{m.rho!r},{m.s!r}")
    return "\n".join(lines) + "\n"


def cmd_coupling(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    wavelength_nm = cfg.number("geometry.wavelength_nm", positive=True)
    omega_p = wavelength_nm_to_omega(wavelength_nm)
    profile_file = cfg.text("coupling.profile_file", None)
    if profile_file is not None:
        profiles = ModeProfileSet.from_file(profile_file)
        Omega = brillouin_frequency(material, omega_p)
        omega_s = omega_p + Omega
        M = overlap_integral(profiles, material.gamma)
        g0 = vacuum_coupling_rate(M, omega_p, omega_s, Omega, material)
        volume_um3 = None
    else:
        volume_um3 = cfg.number("geometry.volume_um3", positive=True)
        result = uniform_coupling(material, um3_to_cm3(volume_um3), omega_p)
        Omega, M, g0 = result.Omega, result.M, result.g0
        omega_s = omega_p + Omega
    payload = {
        "material": material.name,
        "volume_um3": volume_um3,
        "wavelength_nm": wavelength_nm,
        "omega_p_rad_per_s": omega_p,
        "omega_s_rad_per_s": omega_s,
        "omega_ac_rad_per_s": Omega,
        "omega_ac_ghz": rad_per_s_to_ghz(Omega),
        "overlap": M,
        "g0_rad_per_s": g0,
    }
    if args.fmt == "json":
        return _json(payload)
    keys = list(payload)
    return ",".join(keys) + "\n" + ",".join(repr(payload[k]) if payload[k] is not None else "" for k in keys) + "\n"


def cmd_smatrix(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    spec, coupling = build_resonator(cfg, material)
    pump = build_pump(cfg, coupling.g0, spec.kappa0, spec.Gamma0)
    det = build_detuning(cfg, spec.kappa0, spec.Gamma0)
    res = smatrix(spec, det, coupling.g0, pump.Np)
    payload = {
        "epsilon": pump.epsilon_norm,
        "np": pump.Np,
        "g0_rad_per_s": coupling.g0,
        "s11": [res.S11.real, res.S11.imag],
        "s12": [res.S12.real, res.S12.imag],
        "s21": [res.S21.real, res.S21.imag],
        "s22": [res.S22.real, res.S22.imag],
        "efficiency": res.efficiency,
        "refl_opt": res.refl_opt,
        "refl_ac": res.refl_ac,
    }
    if args.fmt == "json":
        return _json(payload)
    header = "epsilon,efficiency,refl_opt,refl_ac,re_s11,im_s11,re_s12,im_s12,re_s21,im_s21,re_s22,im_s22"
    row = [
        pump.epsilon_norm, res.efficiency, res.refl_opt, res.refl_ac,
        res.S11.real, res.S11.imag, res.S12.real, res.S12.imag,
        res.S21.real, res.S21.imag, res.S22.real, res.S22.imag,
    ]
    return header + "\n" + ",".join(repr(v) for v in row) + "\n"


def cmd_sweep(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    spec, _ = build_resonator(cfg, material)
    policy = cfg.text("detuning.policy", "resonant")
    if policy == "fixed":
        policy = build_detuning(cfg, spec.kappa0, spec.Gamma0)
    rows = sweep(
        spec,
        policy,
        eps_min=cfg.number("sweep.eps_min", 0.0, nonnegative=True),
        eps_max=cfg.number("sweep.eps_max", nonnegative=True),
        steps=cfg.integer("sweep.steps"),
    )
    return sweep_to_csv(rows) if args.fmt == "csv" else sweep_to_json(rows)


def cmd_dynamics(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    spec, coupling = build_resonator(cfg, material)
    pump = build_pump(cfg, coupling.g0, spec.kappa0, spec.Gamma0)
    det = build_detuning(cfg, spec.kappa0, spec.Gamma0)
    kind = cfg.text("dynamics.drive_kind", "constant", choices=("off", "constant", "tone", "pulse"))
    port = cfg.text("dynamics.drive_port", "optical_in", choices=("optical_in", "microwave_in"))
    t_off_ns = cfg.number("dynamics.drive_t_off_ns", None, positive=True)
    drive = DriveSignal(
        port=port,
        kind=kind,
        amplitude=cfg.complex_value("dynamics.drive_amplitude", 1.0),
        detuning=ghz_to_rad_per_s(cfg.number("dynamics.drive_detuning_ghz", 0.0)),
        t_on=cfg.number("dynamics.drive_t_on_ns", 0.0, nonnegative=True) * 1e-9,
        t_off=t_off_ns * 1e-9 if t_off_ns is not None else float("inf"),
    )
    trace = integrate(
        spec,
        det,
        coupling.g0,
        pump.Np,
        [drive],
        T=cfg.number("dynamics.t_total_ns", positive=True) * 1e-9,
        dt=cfg.number("dynamics.dt_ns", positive=True) * 1e-9,
        a0=cfg.complex_value("dynamics.a0", 0j),
        b0=cfg.complex_value("dynamics.b0", 0j),
    )
    if args.fmt == "csv":
        return trace.to_csv()
    return _json(
        {
            "t": trace.times.tolist(),
            "re_a": trace.a.real.tolist(),
            "im_a": trace.a.imag.tolist(),
            "re_b": trace.b.real.tolist(),
            "im_b": trace.b.imag.tolist(),
            "re_aout": trace.a_out.real.tolist(),
            "im_aout": trace.a_out.imag.tolist(),
            "re_cout": trace.c_out.real.tolist(),
            "im_cout": trace.c_out.imag.tolist(),
        }
    )


def cmd_stokes(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    spec, coupling = build_resonator(cfg, material)
    pump = build_pump(cfg, coupling.g0, spec.kappa0, spec.Gamma0)
    det = build_detuning(cfg, spec.kappa0, spec.Gamma0)
    report = stokes_report(spec, det, coupling.g0, pump.Np)
    if args.fmt == "json":
        return _json(report)
    keys = list(report)
    return ",".join(keys) + "\n" + ",".join(repr(report[k]) for k in keys) + "\n"


def cmd_design(args) -> str:
    cfg = load_config(args.config)
    material = build_material(cfg)
    report = feasibility_report(
        material,
        V=um3_to_cm3(cfg.number("geometry.volume_um3", positive=True)),
        lambda_opt=cfg.number("geometry.wavelength_nm", positive=True) * 1e-7,
        Q_opt=cfg.number("losses.q_opt", positive=True),
        Q_opt_int=cfg.number("losses.q_opt_int", positive=True),
        Q_ac=cfg.number("losses.q_ac", positive=True),
        Q_ac_int=cfg.number("losses.q_ac_int", positive=True),
        recycle_factor=cfg.number("design.recycle_factor", DEFAULT_RECYCLE_FACTOR, positive=True),
        pump_budget_uw=cfg.number("design.pump_budget_uw", DEFAULT_PUMP_BUDGET_UW, positive=True),
    )
    return report_to_json(report) if args.fmt == "json" else report_to_text(report)


_HANDLERS = {
    "materials": cmd_materials,
    "coupling": cmd_coupling,
    "smatrix": cmd_smatrix,
    "sweep": cmd_sweep,
    "dynamics": cmd_dynamics,
    "stokes": cmd_stokes,
    "design": cmd_design,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are validation errors (exit 1)
        raise ConfigError("usage", message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sbs-transducer",
        description="Brillouin acousto-optic transducer calculators (config-driven).",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="TOML config file (flat dotted keys, SI units)")
    parser.add_argument("--out", help="output path; stdout when omitted")
    parser.add_argument("--format", dest="fmt", choices=("csv", "json", "text"), default=None)
    parser.add_argument("--quiet", action="store_true", help="suppress the confirmation line")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.fmt is None:
            args.fmt = _DEFAULT_FORMAT[args.command]
        elif args.fmt not in _ALLOWED_FORMATS[args.command]:
            raise ConfigError(
                "--format", f"{args.command} supports {_ALLOWED_FORMATS[args.command]}, got {args.fmt!r}"
            )
        text = _HANDLERS[args.command](args)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out and not args.quiet:
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
