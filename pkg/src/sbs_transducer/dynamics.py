"""Time-domain mean-field dynamics of the conversion channel.

Integrates the two coupled linear Langevin equations for the intracavity
optical amplitude a and acoustic amplitude b in the rotating frame,

    i*da/dt + (dw + i*kappa)*a - g*b       = sqrt(2*kappa0)*a_in(t)
    i*db/dt + (dW + i*Gamma)*b - conj(g)*a = sqrt(2*Gamma0)*c_in(t)

with g = g0*sqrt(Np), and the input-output relations

    a_out = a_in - i*sqrt(2*kappa0)*a,   c_out = c_in - i*sqrt(2*Gamma0)*b.

The sign of the coupling term fixes the relative phase of the two ports; it
is chosen so that steady-state transfer functions reproduce every entry of
:func:`sbs_transducer.scattering.smatrix` (the opposite sign is the same
physics with the acoustic port rotated by pi).  Integration is a fixed-step
classical 4th-order Runge-Kutta scheme: deterministic, reproducible
bit-for-bit, and exact in its fixed point for constant drives.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteStateError, StepSizeError, ValidationError
from .scattering import DetuningConfig, ResonatorSpec

PORTS = ("optical_in", "microwave_in")
DRIVE_KINDS = ("off", "constant", "tone", "pulse")


@dataclass(frozen=True)
class DriveSignal:
    """One classical input tone on the optical or microwave port.

    kinds: "off"; "constant" (fixed amplitude); "tone" (amplitude rotating at
    the given detuning from the frame carrier); "pulse" (constant amplitude
    on [t_on, t_off)).
    """

    port: str
    kind: str = "off"
    amplitude: complex = 0j
    detuning: float = 0.0
    t_on: float = 0.0
    t_off: float = math.inf

    def __post_init__(self):
        if self.port not in PORTS:
            raise ValidationError(f"unknown drive port {self.port!r}; use one of {PORTS}")
        if self.kind not in DRIVE_KINDS:
            raise ValidationError(f"unknown drive kind {self.kind!r}; use one of {DRIVE_KINDS}")
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        if not cmath.isfinite(self.amplitude):
            raise ValidationError("drive amplitude must be finite")
        if not math.isfinite(self.detuning):
            raise ValidationError("drive detuning must be finite")
        if self.kind == "pulse" and not self.t_on < self.t_off:
            raise ValidationError(f"pulse needs t_on < t_off, got [{self.t_on}, {self.t_off})")

    @classmethod
    def off(cls, port: str) -> "DriveSignal":
        return cls(port=port, kind="off")

    @classmethod
    def constant(cls, port: str, amplitude: complex) -> "DriveSignal":
        return cls(port=port, kind="constant", amplitude=amplitude)

    @classmethod
    def tone(cls, port: str, amplitude: complex, detuning: float) -> "DriveSignal":
        return cls(port=port, kind="tone", amplitude=amplitude, detuning=detuning)

    @classmethod
    def pulse(cls, port: str, amplitude: complex, t_on: float, t_off: float) -> "DriveSignal":
        return cls(port=port, kind="pulse", amplitude=amplitude, t_on=t_on, t_off=t_off)

    def value(self, t: float) -> complex:
        if self.kind == "off":
            return 0j
        if self.kind == "constant":
            return self.amplitude
        if self.kind == "tone":
            return self.amplitude * cmath.exp(-1j * self.detuning * t)
        return self.amplitude if self.t_on <= t < self.t_off else 0j


def _port_input(drives, port):
    """(is_constant, value_or_callable) for the summed drive on one port."""
    active = [d for d in drives if d.port == port and d.kind != "off"]
    if not active:
        return True, 0j
    if all(d.kind == "constant" for d in active):
        return True, sum(d.amplitude for d in active)
    if len(active) == 1:
        return False, active[0].value

    def total(t, _active=tuple(active)):
        return sum(d.value(t) for d in _active)

    return False, total


@dataclass(frozen=True)
class Trace:
    """Sampled intracavity amplitudes and output fields of one integration."""

    times: np.ndarray
    a: np.ndarray
    b: np.ndarray
    a_out: np.ndarray
    c_out: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "times", np.asarray(self.times, dtype=float))
        for name in ("a", "b", "a_out", "c_out"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=complex))
            if getattr(self, name).shape != self.times.shape:
                raise ValidationError(f"trace array {name} length does not match times")
        if self.times.size and not np.all(np.diff(self.times) > 0):
            raise ValidationError("trace times must be strictly increasing")

    TRACE_CSV_HEADER = "t,re_a,im_a,re_b,im_b,re_aout,im_aout,re_cout,im_cout"

    def to_csv(self) -> str:
        lines = [self.TRACE_CSV_HEADER]
        for i in range(self.times.size):
            lines.append(
                f"{self.times[i]!r},"
                f"{self.a[i].real!r},{self.a[i].imag!r},"
                f"{self.b[i].real!r},{self.b[i].imag!r},"
                f"{self.a_out[i].real!r},{self.a_out[i].imag!r},"
                f"{self.c_out[i].real!r},{self.c_out[i].imag!r}"
            )
        return "\n".join(lines) + "\n"


def integrate(
    spec: ResonatorSpec,
    det: DetuningConfig,
    g0: complex,
    Np: float,
    drives,
    T: float,
    dt: float,
    a0: complex = 0j,
    b0: complex = 0j,
) -> Trace:
    """Fixed-step RK4 trajectories of the two mode amplitudes under drive.

    The step must resolve the fastest scale: dt < 0.1 / max(kappa, Gamma,
    |g0|*sqrt(Np), |detunings|).  The total time T is rounded to a whole
    number of steps.
    """
    if not (math.isfinite(T) and T > 0):
        raise ValidationError(f"total time T must be > 0, got {T}")
    if not (math.isfinite(dt) and dt > 0):
        raise ValidationError(f"step dt must be > 0, got {dt}")
    if not (math.isfinite(Np) and Np >= 0):
        raise ValidationError(f"pump photon number must be >= 0, got {Np}")
    g = complex(g0) * math.sqrt(Np)
    kappa, Gamma = spec.kappa, spec.Gamma
    fastest = max(kappa, Gamma, abs(g), abs(det.d_omega), abs(det.d_Omega), abs(det.delta))
    if fastest > 0 and dt >= 0.1 / fastest:
        raise StepSizeError(
            f"dt = {dt} too coarse; need dt < {0.1 / fastest} to resolve the fastest rate {fastest}"
        )

    ain_const, ain = _port_input(drives, "optical_in")
    cin_const, cin = _port_input(drives, "microwave_in")

    nsteps = max(1, int(round(T / dt)))
    times = np.arange(nsteps + 1) * dt
    a_arr = np.empty(nsteps + 1, dtype=complex)
    b_arr = np.empty(nsteps + 1, dtype=complex)
    ain_arr = np.empty(nsteps + 1, dtype=complex)
    cin_arr = np.empty(nsteps + 1, dtype=complex)

    # Coefficients of da/dt = ca*a + gab*b + ea*a_in, db/dt = cb*b + gba*a + eb*c_in.
    ca = 1j * det.d_omega - kappa
    cb = 1j * det.d_Omega - Gamma
    gab = 1j * g
    gba = 1j * g.conjugate()
    ea = -1j * math.sqrt(2.0 * spec.kappa0)
    eb = -1j * math.sqrt(2.0 * spec.Gamma0)

    a, b = complex(a0), complex(b0)
    t = 0.0
    half = dt / 2.0
    sixth = dt / 6.0
    a_arr[0], b_arr[0] = a, b
    ain_arr[0] = ain if ain_const else ain(0.0)
    cin_arr[0] = cin if cin_const else cin(0.0)
    for i in range(1, nsteps + 1):
        f1a = ain if ain_const else ain(t)
        f1c = cin if cin_const else cin(t)
        f2a = ain if ain_const else ain(t + half)
        f2c = cin if cin_const else cin(t + half)
        t_next = t + dt
        f4a = ain if ain_const else ain(t_next)
        f4c = cin if cin_const else cin(t_next)

        k1a = ca * a + gab * b + ea * f1a
        k1b = cb * b + gba * a + eb * f1c
        ya = a + half * k1a
        yb = b + half * k1b
        k2a = ca * ya + gab * yb + ea * f2a
        k2b = cb * yb + gba * ya + eb * f2c
        ya = a + half * k2a
        yb = b + half * k2b
        k3a = ca * ya + gab * yb + ea * f2a
        k3b = cb * yb + gba * ya + eb * f2c
        ya = a + dt * k3a
        yb = b + dt * k3b
        k4a = ca * ya + gab * yb + ea * f4a
        k4b = cb * yb + gba * ya + eb * f4c

        a = a + sixth * (k1a + 2.0 * (k2a + k3a) + k4a)
        b = b + sixth * (k1b + 2.0 * (k2b + k3b) + k4b)
        t = t_next
        a_arr[i], b_arr[i] = a, b
        ain_arr[i], cin_arr[i] = f4a, f4c

    if not (np.all(np.isfinite(a_arr.view(float))) and np.all(np.isfinite(b_arr.view(float)))):
        raise NonFiniteStateError("non-finite mode amplitude during integration")

    a_out = ain_arr - 1j * math.sqrt(2.0 * spec.kappa0) * a_arr
    c_out = cin_arr - 1j * math.sqrt(2.0 * spec.Gamma0) * b_arr
    return Trace(times=times, a=a_arr, b=b_arr, a_out=a_out, c_out=c_out)


def hybrid_eigenvalues(spec: ResonatorSpec, det: DetuningConfig, g0: complex, Np: float):
    """Complex eigenfrequencies of the undriven coupled-mode pair.

    The amplitudes evolve as exp(-i*lambda*t); decoupled modes give
    (d_omega - i*kappa, d_Omega - i*Gamma), and for equal damping on
    resonance the pair splits into +-|g0|*sqrt(Np) - i*kappa (Rabi
    hybridization).  Returned sorted by descending real part.
    """
    if not (math.isfinite(Np) and Np >= 0):
        raise ValidationError(f"pump photon number must be >= 0, got {Np}")
    g2 = abs(g0) ** 2 * Np
    za = det.d_omega - 1j * spec.kappa
    zb = det.d_Omega - 1j * spec.Gamma
    radical = np.sqrt(complex(((za - zb) / 2.0) ** 2 + g2))
    lam1 = (za + zb) / 2.0 + radical
    lam2 = (za + zb) / 2.0 - radical
    return tuple(sorted((lam1, lam2), key=lambda z: (-z.real, -z.imag)))
