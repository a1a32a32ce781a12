"""The spurious Stokes (parametric-amplifier) channel.

Pumping from the upper sideband turns the coupled cavity into a phase-
preserving amplifier: the steady-state Bogoliubov coefficients follow from
the same input-output procedure as the conversion channel with the acoustic
equation conjugated,

    S11 = 1 - 2i*kappa0*(dW - i*Gamma) / Ds
    S12 = -2i*conj(g0)*sqrt(Np*kappa0*Gamma0) / Ds
    Ds  = (dw + i*kappa)*(dW - i*Gamma) - |g0|^2*Np.

Without internal losses |S11|^2 - |S12|^2 = 1 (two-mode squeezing).  On
resonance the gain is ((1+eps_s)/(1-eps_s))^2 with
eps_s = |g0|^2*Np/(kappa0*Gamma0) and diverges at the parametric
oscillation threshold |g0|^2*Np = kappa*Gamma.  Operating a converter in
the resolved-sideband regime kappa < 2*Omega keeps this channel detuned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParametricOscillationError, ValidationError
from .scattering import DetuningConfig, ResonatorSpec


@dataclass(frozen=True)
class AmplifierResult:
    """Bogoliubov amplitudes of the Stokes channel (signal reflection and pair conversion)."""

    S11: complex
    S12: complex

    @property
    def gain(self) -> float:
        """Signal power reflection gain |S11|^2."""
        return abs(self.S11) ** 2

    @property
    def pair_rate_proxy(self) -> float:
        """Dimensionless |S12|^2 standing in for the spurious pair rate."""
        return abs(self.S12) ** 2


def stokes_smatrix(spec: ResonatorSpec, det: DetuningConfig, g0: complex, Np: float) -> AmplifierResult:
    """Steady-state amplifier response; rejects operation at or above threshold."""
    if not (math.isfinite(Np) and Np >= 0):
        raise ValidationError(f"pump photon number must be >= 0 and finite, got {Np}")
    kappa, Gamma = spec.kappa, spec.Gamma
    g2 = abs(g0) ** 2 * Np
    if g2 >= kappa * Gamma:
        raise ParametricOscillationError(
            f"parametric oscillation: |g0|^2*Np = {g2} >= kappa*Gamma = {kappa * Gamma}"
        )
    Ds = (det.d_omega + 1j * kappa) * (det.d_Omega - 1j * Gamma) - g2
    S11 = 1.0 - 2j * spec.kappa0 * (det.d_Omega - 1j * Gamma) / Ds
    S12 = -2j * complex(g0).conjugate() * math.sqrt(Np * spec.kappa0 * spec.Gamma0) / Ds
    return AmplifierResult(S11=S11, S12=S12)


def oscillation_threshold(kappa: float, Gamma: float, g0: float) -> float:
    """Pump photon number kappa*Gamma/g0^2 at which the Stokes channel self-oscillates."""
    for label, value in (("kappa", kappa), ("Gamma", Gamma)):
        if not (math.isfinite(value) and value > 0):
            raise ValidationError(f"{label} must be positive and finite, got {value}")
    if not (math.isfinite(abs(g0)) and abs(g0) > 0):
        raise ValidationError("threshold is infinite for g0 = 0")
    return kappa * Gamma / abs(g0) ** 2


@dataclass(frozen=True)
class SidebandReport:
    """Resolved-sideband check: kappa < 2*Omega, margin 2*Omega/kappa, implied Q bound."""

    resolved: bool
    margin: float
    qopt_bound: float


def sideband_resolution(kappa: float, Omega: float, omega_s: float) -> SidebandReport:
    """Whether the Stokes sideband falls outside the optical linewidth.

    Resolved means kappa < 2*Omega strictly; the same condition reads as a
    lower bound Q_opt > omega_s/(2*Omega) on the optical quality factor.
    """
    for label, value in (("kappa", kappa), ("Omega", Omega), ("omega_s", omega_s)):
        if not (math.isfinite(value) and value > 0):
            raise ValidationError(f"{label} must be positive and finite, got {value}")
    return SidebandReport(
        resolved=kappa < 2.0 * Omega,
        margin=2.0 * Omega / kappa,
        qopt_bound=omega_s / (2.0 * Omega),
    )


def stokes_report(spec: ResonatorSpec, det: DetuningConfig, g0: complex, Np: float) -> dict:
    """Combined Stokes-channel figures for one operating point."""
    sideband = sideband_resolution(spec.kappa, spec.Omega, spec.omega_s)
    amplifier = stokes_smatrix(spec, det, g0, Np)
    return {
        "resolved": sideband.resolved,
        "margin": sideband.margin,
        "qopt_bound": sideband.qopt_bound,
        "threshold_np": oscillation_threshold(spec.kappa, spec.Gamma, abs(g0)),
        "gain_at_operating_point": amplifier.gain,
    }
