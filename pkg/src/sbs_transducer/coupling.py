"""Brillouin phase matching, transverse mode overlap and the vacuum coupling rate.

Backscattering phase matching ties the acoustic frequency to the optical
carrier: q ~ 2k with k = n*omega/c, so Omega = s*q = 2*n*s*omega/c.  The
overlap of the pump, signal and acoustic transverse profiles sets a scalar
overlap value M, and the single-pump-photon (vacuum) coupling rate is

    g0 = |M| * sqrt(hbar * w_p * w_s * Omega / (32 * eps^2 * rho * s^2))

in rad/s, with everything in CGS-Gaussian units (hbar in erg s).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .quantities import C_LIGHT, HBAR, Material

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

NORMALIZATION_TOL = 1e-8


@dataclass(frozen=True)
class ModeProfileSet:
    """Transverse mode profiles of the pump/signal optical and acoustic fields.

    The grid is the transverse cross-section coordinate in cm; each profile
    is normalized so that the discrete integral of |profile|^2 over the grid
    equals 1 (units 1/sqrt(cm) per transverse dimension).  L is the resonator
    circumference in cm and q the acoustic wavenumber in 1/cm.
    """

    grid: np.ndarray
    psi_p: np.ndarray
    psi_s: np.ndarray
    phi: np.ndarray
    L: float
    q: float

    def __post_init__(self):
        object.__setattr__(self, "grid", np.asarray(self.grid, dtype=float))
        for name in ("psi_p", "psi_s", "phi"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=complex))
        if self.grid.ndim != 1 or self.grid.size < 2:
            raise ValidationError("grid must be a 1-D array with at least two samples")
        for name in ("psi_p", "psi_s", "phi"):
            if getattr(self, name).shape != self.grid.shape:
                raise ValidationError(
                    f"profile {name} has shape {getattr(self, name).shape}, "
                    f"grid has {self.grid.shape} (mismatched grids)"
                )
        if not np.all(np.diff(self.grid) > 0):
            raise ValidationError("grid samples must be strictly increasing")
        if not (math.isfinite(self.L) and self.L > 0):
            raise ValidationError(f"circumference L must be > 0, got {self.L}")
        if not (math.isfinite(self.q) and self.q > 0):
            raise ValidationError(f"acoustic wavenumber q must be > 0, got {self.q}")
        for name in ("psi_p", "psi_s", "phi"):
            norm = float(_trapezoid(np.abs(getattr(self, name)) ** 2, self.grid))
            if abs(norm - 1.0) > NORMALIZATION_TOL:
                raise ValidationError(
                    f"profile {name} is not normalized: integral |{name}|^2 = {norm!r}"
                )

    @property
    def width(self) -> float:
        """Extent of the transverse grid (cm)."""
        return float(self.grid[-1] - self.grid[0])

    @classmethod
    def uniform(cls, width: float, L: float, q: float, npoints: int = 64) -> "ModeProfileSet":
        """Flat profiles over a cross-section of the given width (cm)."""
        if not (width > 0):
            raise ValidationError(f"width must be > 0, got {width}")
        grid = np.linspace(0.0, width, npoints)
        flat = np.full(npoints, 1.0 / math.sqrt(width), dtype=complex)
        return cls(grid, flat, flat.copy(), flat.copy(), L, q)

    @classmethod
    def from_file(cls, path) -> "ModeProfileSet":
        """Load from a columnar text file.

        The first line is a header ``# L=<cm> q=<1/cm>``; the following lines
        carry four columns: grid, psi_p, psi_s, phi.  Profile columns may be
        complex (``1+2j`` notation).
        """
        with open(path) as handle:
            header = handle.readline()
            match = re.match(
                r"^#\s*L\s*=\s*([^\s]+)\s+q\s*=\s*([^\s]+)\s*$", header.strip()
            )
            if not match:
                raise ValidationError(
                    f"{path}: first line must be '# L=<value> q=<value>', got {header!r}"
                )
            L, q = float(match.group(1)), float(match.group(2))
            try:
                table = np.loadtxt(handle, dtype=complex, ndmin=2)
            except ValueError as exc:
                raise ValidationError(f"{path}: could not parse profile columns: {exc}") from exc
        if table.shape[1] != 4:
            raise ValidationError(f"{path}: expected 4 columns (grid, psi_p, psi_s, phi), got {table.shape[1]}")
        grid = table[:, 0]
        if np.any(np.abs(grid.imag) > 0):
            raise ValidationError(f"{path}: grid column must be real")
        return cls(grid.real, table[:, 1], table[:, 2], table[:, 3], L, q)


@dataclass(frozen=True)
class CouplingResult:
    """Overlap value M (cm^-3/2), vacuum rate g0 (rad/s) and acoustic frequency (rad/s)."""

    M: float
    g0: float
    Omega: float


def brillouin_frequency(material: Material, omega_opt: float) -> float:
    """Acoustic angular frequency selected by backscattering phase matching.

    Omega = 2 * n * s * omega_opt / c (q = 2k, Omega = s*q).
    """
    if not (math.isfinite(omega_opt) and omega_opt > 0):
        raise ValidationError(f"optical frequency must be positive and finite, got {omega_opt}")
    return 2.0 * material.n * material.s * omega_opt / C_LIGHT


def overlap_uniform(gamma: float, volume: float) -> float:
    """Overlap value gamma / sqrt(V) for an optimal (uniform-profile) resonator."""
    if not (math.isfinite(volume) and volume > 0):
        raise ValidationError(f"volume must be positive and finite, got {volume}")
    return gamma / math.sqrt(volume)


def _overlap_complex(profiles: ModeProfileSet, gamma: float) -> complex:
    """Complex overlap (gamma/sqrt(L)) * integral psi_p * psi_s * (i phi); phase retained."""
    integrand = profiles.psi_p * profiles.psi_s * (1j * profiles.phi)
    return gamma / math.sqrt(profiles.L) * complex(_trapezoid(integrand, profiles.grid))


def overlap_integral(profiles: ModeProfileSet, gamma: float) -> float:
    """Magnitude of the overlap value from sampled transverse profiles.

    Trapezoidal quadrature on the supplied grid, keeping only the dominant
    i*phi term of the scalarized overlap; transverse-derivative corrections
    of order 1/(q*width) are dropped.  For flat profiles over a cross-section
    of width S this reduces exactly to gamma / sqrt(L*S).
    """
    return abs(_overlap_complex(profiles, gamma))


def vacuum_coupling_rate(
    M: complex, omega_p: float, omega_s: float, Omega: float, material: Material
) -> float:
    """Vacuum phonon-photon coupling rate in rad/s for an overlap value M."""
    for label, value in (("omega_p", omega_p), ("omega_s", omega_s), ("Omega", Omega)):
        if not (math.isfinite(value) and value > 0):
            raise ValidationError(f"{label} must be positive and finite, got {value}")
    return abs(M) * math.sqrt(
        HBAR * omega_p * omega_s * Omega / (32.0 * material.epsilon**2 * material.rho * material.s**2)
    )


def uniform_coupling(
    material: Material, volume: float, omega_p: float, sideband: str = "anti_stokes"
) -> CouplingResult:
    """Chain phase matching, uniform overlap and the vacuum rate for one device.

    The signal sits at omega_p + Omega (anti-Stokes conversion channel) or
    omega_p - Omega (Stokes channel) depending on ``sideband``.
    """
    if sideband not in ("anti_stokes", "stokes"):
        raise ValidationError(f"sideband must be 'anti_stokes' or 'stokes', got {sideband!r}")
    Omega = brillouin_frequency(material, omega_p)
    omega_s = omega_p + Omega if sideband == "anti_stokes" else omega_p - Omega
    M = overlap_uniform(material.gamma, volume)
    g0 = vacuum_coupling_rate(M, omega_p, omega_s, Omega, material)
    return CouplingResult(M=M, g0=g0, Omega=Omega)
