"""Feasibility calculator: minimum pump, heat budget and unitarity margins.

Chains the coupling-rate estimate into the full-conversion pump requirement
Np = kappa0*Gamma0/g0^2, the dissipated power density
hbar*omega_p*kappa_int*Np/V, and a crude pump-power estimate obtained by
multiplying the dissipated power by a recycling factor standing in for an
auxiliary pump resonance.  The verdict aggregates the resolved-sideband
condition, the engineered-loss dominance margins (internal <= 10% of
external) and a pump power budget.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

from .coupling import uniform_coupling
from .errors import ValidationError
from .quantities import (
    ERG_PER_S_TO_UW,
    HBAR,
    Material,
    TWO_PI,
    C_LIGHT,
    cm3_to_um3,
    material_lookup,
    q_to_rate,
)
from .stokes import sideband_resolution

LOSS_MARGIN = 0.1  # internal rates must stay below this fraction of external
_MARGIN_SLACK = 1.0 + 1e-9  # tolerate rounding right at the 10% boundary

DEFAULT_RECYCLE_FACTOR = 10.0
DEFAULT_PUMP_BUDGET_UW = 100.0

VERDICTS = ("feasible", "marginal", "infeasible")


def min_pump_photons(kappa0: float, Gamma0: float, g0: float) -> float:
    """Pump photon number kappa0*Gamma0/g0^2 for full conversion on resonance."""
    for label, value in (("kappa0", kappa0), ("Gamma0", Gamma0)):
        if not (math.isfinite(value) and value > 0):
            raise ValidationError(f"{label} must be positive and finite, got {value}")
    if not (math.isfinite(abs(g0)) and abs(g0) > 0):
        raise ValidationError("minimum pump is unbounded for g0 = 0")
    return kappa0 * Gamma0 / abs(g0) ** 2


def dissipated_power_density(np_density: float, omega_p: float, kappa_int: float) -> float:
    """Heat load hbar*omega_p*kappa_int*Np_density in uW/um^3.

    np_density is the pump photon density in photons/um^3.
    """
    for label, value in (("np_density", np_density), ("omega_p", omega_p), ("kappa_int", kappa_int)):
        if not (math.isfinite(value) and value >= 0):
            raise ValidationError(f"{label} must be >= 0 and finite, got {value}")
    return HBAR * omega_p * kappa_int * np_density * ERG_PER_S_TO_UW


@dataclass(frozen=True)
class FeasibilityFlags:
    """Pass/fail state of each feasibility constraint."""

    sideband_resolved: bool
    optical_loss_margin_ok: bool
    acoustic_loss_margin_ok: bool
    pump_budget_ok: bool


@dataclass(frozen=True)
class FeasibilityReport:
    """Derived transducer figures plus the aggregated verdict.

    Echoes its inputs so every number is recomputable from the report alone.
    """

    material: str
    volume_um3: float
    wavelength_nm: float
    q_opt: float
    q_opt_int: float
    q_ac: float
    q_ac_int: float
    recycle_factor: float
    pump_budget_uw: float
    omega_p: float
    omega_s: float
    Omega: float
    g0: float
    np_min: float
    np_density: float
    dissipated_power_density: float
    pump_power_estimate: float
    unitarity_margins: tuple
    sideband_resolved: bool
    flags: FeasibilityFlags
    verdict: str


def feasibility_report(
    material,
    V: float,
    lambda_opt: float,
    Q_opt: float,
    Q_opt_int: float,
    Q_ac: float,
    Q_ac_int: float,
    recycle_factor: float = DEFAULT_RECYCLE_FACTOR,
    pump_budget_uw: float = DEFAULT_PUMP_BUDGET_UW,
) -> FeasibilityReport:
    """Evaluate one transducer design.

    material: a Material or a bundled name; V in cm^3; lambda_opt in cm;
    Q_opt/Q_ac are the external-coupling quality factors, Q_*_int the
    internal ones.  All comparisons against target figures are
    order-of-magnitude engineering gates, not exact physics.
    """
    if isinstance(material, str):
        material = material_lookup(material)
    if not isinstance(material, Material):
        raise ValidationError(f"material must be a Material or a name, got {type(material).__name__}")
    for label, value in (
        ("V", V),
        ("lambda_opt", lambda_opt),
        ("Q_opt", Q_opt),
        ("Q_opt_int", Q_opt_int),
        ("Q_ac", Q_ac),
        ("Q_ac_int", Q_ac_int),
        ("recycle_factor", recycle_factor),
        ("pump_budget_uw", pump_budget_uw),
    ):
        if not (math.isfinite(value) and value > 0):
            raise ValidationError(f"{label} must be positive and finite, got {value}")

    omega_p = TWO_PI * C_LIGHT / lambda_opt
    coupling = uniform_coupling(material, V, omega_p)
    Omega = coupling.Omega
    omega_s = omega_p + Omega

    kappa0 = q_to_rate(omega_s, Q_opt)
    kappa_int = q_to_rate(omega_s, Q_opt_int)
    Gamma0 = q_to_rate(Omega, Q_ac)
    Gamma_int = q_to_rate(Omega, Q_ac_int)

    np_min = min_pump_photons(kappa0, Gamma0, coupling.g0)
    volume_um3 = cm3_to_um3(V)
    np_density = np_min / volume_um3
    power_density = dissipated_power_density(np_density, omega_p, kappa_int)
    pump_power = power_density * volume_um3 * recycle_factor

    margins = (kappa_int / kappa0, Gamma_int / Gamma0)
    sideband = sideband_resolution(kappa0 + kappa_int, Omega, omega_s)
    flags = FeasibilityFlags(
        sideband_resolved=sideband.resolved,
        optical_loss_margin_ok=margins[0] <= LOSS_MARGIN * _MARGIN_SLACK,
        acoustic_loss_margin_ok=margins[1] <= LOSS_MARGIN * _MARGIN_SLACK,
        pump_budget_ok=pump_power <= pump_budget_uw,
    )
    if not (flags.sideband_resolved and flags.optical_loss_margin_ok and flags.acoustic_loss_margin_ok):
        verdict = "infeasible"
    elif not flags.pump_budget_ok:
        verdict = "marginal"
    else:
        verdict = "feasible"

    return FeasibilityReport(
        material=material.name,
        volume_um3=volume_um3,
        wavelength_nm=lambda_opt * 1.0e7,
        q_opt=Q_opt,
        q_opt_int=Q_opt_int,
        q_ac=Q_ac,
        q_ac_int=Q_ac_int,
        recycle_factor=recycle_factor,
        pump_budget_uw=pump_budget_uw,
        omega_p=omega_p,
        omega_s=omega_s,
        Omega=Omega,
        g0=coupling.g0,
        np_min=np_min,
        np_density=np_density,
        dissipated_power_density=power_density,
        pump_power_estimate=pump_power,
        unitarity_margins=margins,
        sideband_resolved=sideband.resolved,
        flags=flags,
        verdict=verdict,
    )


def report_to_json(report: FeasibilityReport) -> str:
    payload = asdict(report)
    payload["unitarity_margins"] = list(report.unitarity_margins)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def report_to_text(report: FeasibilityReport) -> str:
    """Aligned plain-text rendering of a feasibility report."""
    rows = [
        ("material", report.material),
        ("volume [um^3]", report.volume_um3),
        ("wavelength [nm]", report.wavelength_nm),
        ("Q_opt / Q_opt_int", f"{report.q_opt:g} / {report.q_opt_int:g}"),
        ("Q_ac / Q_ac_int", f"{report.q_ac:g} / {report.q_ac_int:g}"),
        ("omega_p [rad/s]", report.omega_p),
        ("Omega [rad/s]", report.Omega),
        ("g0 [rad/s]", report.g0),
        ("Np_min", report.np_min),
        ("Np density [1/um^3]", report.np_density),
        ("dissipated [uW/um^3]", report.dissipated_power_density),
        ("pump power [uW]", report.pump_power_estimate),
        ("kappa_int/kappa0", report.unitarity_margins[0]),
        ("Gamma_int/Gamma0", report.unitarity_margins[1]),
        ("sideband resolved", report.sideband_resolved),
        ("optical margin ok", report.flags.optical_loss_margin_ok),
        ("acoustic margin ok", report.flags.acoustic_loss_margin_ok),
        ("pump budget ok", report.flags.pump_budget_ok),
        ("verdict", report.verdict),
    ]
    width = max(len(label) for label, _ in rows)
    lines = []
    for label, value in rows:
        if isinstance(value, float):
            value = f"{value:.6g}"
        lines.append(f"{label.ljust(width)}  {value}")
    return "\n".join(lines) + "\n"
