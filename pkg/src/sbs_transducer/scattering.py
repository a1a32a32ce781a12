"""Frequency-domain scattering of the phonon-photon conversion channel.

The coupled optical/acoustic cavity driven below the anti-Stokes sideband
responds with the 2x2 scattering matrix

    S11 = 1 - 2i*kappa0*(dW + i*Gamma) / D
    S22 = 1 - 2i*Gamma0*(dw + i*kappa) / D
    S12 = S21 = -2i*g0*sqrt(Np*kappa0*Gamma0) / D
    D   = (dw + i*kappa)*(dW + i*Gamma) - |g0|^2*Np

where dw/dW are the optical/acoustic signal detunings, kappa/Gamma the total
damping rates and kappa0/Gamma0 the engineered external couplings.  With no
internal losses S is unitary; |S12|^2 = 1 on resonance exactly at the
normalized pump strength eps = |g0|^2*Np/(kappa0*Gamma0) = 1, and above that
for the finite detunings returned by :func:`full_conversion_detunings`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularResponseError, ValidationError

_MAG_TOL = 1e-9


@dataclass(frozen=True)
class ResonatorSpec:
    """Frequencies, interaction volume and loss rates of the coupled cavity.

    All rates in rad/s; V in cm^3 (optional, used by design-level checks).
    """

    omega_s: float
    Omega: float
    kappa0: float
    kappa_int: float
    Gamma0: float
    Gamma_int: float
    V: float = None

    def __post_init__(self):
        for name in ("kappa0", "kappa_int", "Gamma0", "Gamma_int"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValidationError(f"{name} must be >= 0 and finite, got {value}")
        if not (math.isfinite(self.Omega) and self.Omega > 0):
            raise ValidationError(f"Omega must be > 0, got {self.Omega}")
        if not (math.isfinite(self.omega_s) and self.omega_s > self.Omega):
            raise ValidationError(
                f"omega_s must exceed Omega (got omega_s={self.omega_s}, Omega={self.Omega})"
            )
        if self.V is not None and not (math.isfinite(self.V) and self.V > 0):
            raise ValidationError(f"V must be > 0 when given, got {self.V}")

    @property
    def kappa(self) -> float:
        """Total optical damping rate."""
        return self.kappa0 + self.kappa_int

    @property
    def Gamma(self) -> float:
        """Total acoustic damping rate."""
        return self.Gamma0 + self.Gamma_int


@dataclass(frozen=True)
class DetuningConfig:
    """(d_omega, d_Omega, delta) triple obeying d_omega - d_Omega = 2*delta.

    2*delta is the pump detuning: omega_pump = omega_s - Omega + 2*delta.
    """

    d_omega: float
    d_Omega: float
    delta: float

    _REL_TOL = 1e-9

    def __post_init__(self):
        for name in ("d_omega", "d_Omega", "delta"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        residual = abs(self.d_omega - self.d_Omega - 2.0 * self.delta)
        scale = max(abs(self.d_omega), abs(self.d_Omega), 2.0 * abs(self.delta))
        if residual > self._REL_TOL * scale:
            raise ValidationError(
                f"detunings must satisfy d_omega - d_Omega = 2*delta; "
                f"got residual {residual} for ({self.d_omega}, {self.d_Omega}, {self.delta})"
            )

    @classmethod
    def resonant(cls) -> "DetuningConfig":
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def from_pair(cls, d_omega: float, d_Omega: float) -> "DetuningConfig":
        """Derive the pump half-detuning from the two signal detunings."""
        return cls(d_omega, d_Omega, (d_omega - d_Omega) / 2.0)

    @classmethod
    def fig2_b(cls, kappa0: float, Gamma0: float) -> "DetuningConfig":
        """d_omega = kappa0, d_Omega = Gamma0 (unity conversion peak at eps = 2)."""
        return cls(kappa0, Gamma0, (kappa0 - Gamma0) / 2.0)

    @classmethod
    def fig2_c(cls, Gamma0: float) -> "DetuningConfig":
        """Zero pump detuning with d_omega = d_Omega = Gamma0 (suppressed peak)."""
        return cls(Gamma0, Gamma0, 0.0)


@dataclass(frozen=True)
class PumpStrength:
    """Intracavity pump photon number and the normalized strength eps = |g0|^2*Np/(kappa0*Gamma0)."""

    Np: float
    epsilon_norm: float

    def __post_init__(self):
        for name in ("Np", "epsilon_norm"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValidationError(f"{name} must be >= 0 and finite, got {value}")

    @classmethod
    def from_photons(cls, Np: float, g0: complex, kappa0: float, Gamma0: float) -> "PumpStrength":
        if kappa0 <= 0 or Gamma0 <= 0:
            raise ValidationError("external rates must be > 0 to normalize the pump strength")
        return cls(Np, abs(g0) ** 2 * Np / (kappa0 * Gamma0))

    @classmethod
    def from_epsilon(cls, epsilon_norm: float, g0: complex, kappa0: float, Gamma0: float) -> "PumpStrength":
        if abs(g0) == 0:
            raise ValidationError("g0 must be nonzero to convert epsilon to a photon number")
        return cls(epsilon_norm * kappa0 * Gamma0 / abs(g0) ** 2, epsilon_norm)


@dataclass(frozen=True)
class ScatterResult:
    """Complex 2x2 scattering amplitudes of the conversion channel."""

    S11: complex
    S12: complex
    S21: complex
    S22: complex

    def __post_init__(self):
        for name in ("S11", "S12", "S21", "S22"):
            if abs(getattr(self, name)) > 1.0 + _MAG_TOL:
                raise ValidationError(
                    f"|{name}| = {abs(getattr(self, name))} exceeds unity; "
                    "the conversion channel is passive"
                )

    @property
    def efficiency(self) -> float:
        """Conversion efficiency |S12|^2."""
        return abs(self.S12) ** 2

    @property
    def refl_opt(self) -> float:
        return abs(self.S11) ** 2

    @property
    def refl_ac(self) -> float:
        return abs(self.S22) ** 2

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.S11, self.S12], [self.S21, self.S22]], dtype=complex)


def smatrix(spec: ResonatorSpec, det: DetuningConfig, g0: complex, Np: float) -> ScatterResult:
    """Evaluate the conversion-channel scattering matrix.

    Input-output convention a_out = a_in - i*sqrt(2*kappa0)*a; S21 is set
    equal to S12 (symmetric off-diagonal of the reciprocal two-port).
    """
    if not (math.isfinite(Np) and Np >= 0):
        raise ValidationError(f"pump photon number must be >= 0 and finite, got {Np}")
    kappa, Gamma = spec.kappa, spec.Gamma
    D = (det.d_omega + 1j * kappa) * (det.d_Omega + 1j * Gamma) - abs(g0) ** 2 * Np
    if D == 0:
        raise SingularResponseError(
            "singular response denominator D = 0 "
            f"(d_omega={det.d_omega}, d_Omega={det.d_Omega}, kappa={kappa}, "
            f"Gamma={Gamma}, |g0|^2*Np={abs(g0) ** 2 * Np}); "
            "this occurs only in the lossless undriven limit"
        )
    S11 = 1.0 - 2j * spec.kappa0 * (det.d_Omega + 1j * Gamma) / D
    S22 = 1.0 - 2j * spec.Gamma0 * (det.d_omega + 1j * kappa) / D
    S12 = -2j * g0 * math.sqrt(Np * spec.kappa0 * spec.Gamma0) / D
    return ScatterResult(S11=S11, S12=S12, S21=S12, S22=S22)


def efficiency_on_resonance(epsilon_norm: float) -> float:
    """Lossless on-resonance conversion efficiency 4*eps/(1+eps)^2."""
    if not (math.isfinite(epsilon_norm) and epsilon_norm >= 0):
        raise ValidationError(f"normalized pump strength must be >= 0, got {epsilon_norm}")
    return 4.0 * epsilon_norm / (1.0 + epsilon_norm) ** 2


def full_conversion_detunings(epsilon_norm: float, kappa0: float, Gamma0: float) -> DetuningConfig:
    """Detunings giving zero reflection at pump strength eps >= 1 (lossless).

    d_omega = kappa0*sqrt(eps - 1), d_Omega = (Gamma0/kappa0)*d_omega; the
    pump half-detuning follows from the triple constraint.
    """
    if not (math.isfinite(epsilon_norm) and epsilon_norm >= 1.0):
        raise ValidationError(
            f"no real full-conversion detunings below threshold (eps = {epsilon_norm} < 1)"
        )
    if kappa0 <= 0 or Gamma0 <= 0:
        raise ValidationError("external rates must be > 0")
    d_omega = kappa0 * math.sqrt(epsilon_norm - 1.0)
    d_Omega = (Gamma0 / kappa0) * d_omega
    return DetuningConfig(d_omega, d_Omega, (d_omega - d_Omega) / 2.0)


@dataclass(frozen=True)
class SweepRow:
    """One pump strength of a conversion sweep."""

    epsilon: float
    result: ScatterResult

    @property
    def efficiency(self) -> float:
        return self.result.efficiency

    @property
    def refl_opt(self) -> float:
        return self.result.refl_opt

    @property
    def refl_ac(self) -> float:
        return self.result.refl_ac


SWEEP_POLICIES = ("resonant", "fig2_b", "fig2_c")


def resolve_policy(policy, kappa0: float, Gamma0: float) -> DetuningConfig:
    """Map a policy name (or an explicit DetuningConfig) to detunings."""
    if isinstance(policy, DetuningConfig):
        return policy
    if policy == "resonant":
        return DetuningConfig.resonant()
    if policy == "fig2_b":
        return DetuningConfig.fig2_b(kappa0, Gamma0)
    if policy == "fig2_c":
        return DetuningConfig.fig2_c(Gamma0)
    raise ValidationError(
        f"unknown detuning policy {policy!r}; use one of {SWEEP_POLICIES} or a DetuningConfig"
    )


def sweep(spec: ResonatorSpec, policy, eps_min: float, eps_max: float, steps: int) -> list:
    """Scattering response over a range of normalized pump strengths.

    Only the product |g0|^2*Np enters the response, so rows are computed with
    Np = 1 and g0 = sqrt(eps*kappa0*Gamma0).  A degenerate range
    (eps_min == eps_max) yields a single row.
    """
    for label, value in (("eps_min", eps_min), ("eps_max", eps_max)):
        if not (math.isfinite(value) and value >= 0):
            raise ValidationError(f"{label} must be >= 0 and finite, got {value}")
    if eps_max < eps_min:
        raise ValidationError(f"eps_max ({eps_max}) must be >= eps_min ({eps_min})")
    det = resolve_policy(policy, spec.kappa0, spec.Gamma0)
    if eps_max == eps_min:
        values = [eps_min]
    else:
        if not isinstance(steps, int) or steps < 2:
            raise ValidationError(f"steps must be an integer >= 2, got {steps}")
        values = np.linspace(eps_min, eps_max, steps).tolist()
    rows = []
    for eps in values:
        g0 = math.sqrt(eps * spec.kappa0 * spec.Gamma0)
        rows.append(SweepRow(epsilon=eps, result=smatrix(spec, det, g0, 1.0)))
    return rows


SWEEP_CSV_HEADER = "epsilon,efficiency,refl_opt,refl_ac"


def sweep_to_csv(rows) -> str:
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        lines.append(f"{row.epsilon!r},{row.efficiency!r},{row.refl_opt!r},{row.refl_ac!r}")
    return "\n".join(lines) + "\n"


def _reim(z: complex) -> list:
    return [z.real, z.imag]


def sweep_to_json(rows) -> str:
    payload = [
        {
            "epsilon": row.epsilon,
            "efficiency": row.efficiency,
            "refl_opt": row.refl_opt,
            "refl_ac": row.refl_ac,
            "s11": _reim(row.result.S11),
            "s12": _reim(row.result.S12),
            "s21": _reim(row.result.S21),
            "s22": _reim(row.result.S22),
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
