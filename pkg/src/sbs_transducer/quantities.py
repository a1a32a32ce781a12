"""Material constants, unit conversions and rate bookkeeping.

All physics inside the package is done in CGS-Gaussian units with angular
frequencies in rad/s.  SI quantities (nm, um^3, GHz, uW) appear only at the
CLI boundary and are converted once, through the helpers below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import UnknownMaterialError, ValidationError

TWO_PI = 2.0 * math.pi
HBAR = 1.054571817e-27  # erg s
C_LIGHT = 2.99792458e10  # cm/s

CM3_PER_UM3 = 1.0e-12
UM3_PER_CM3 = 1.0e12
ERG_PER_S_TO_UW = 0.1  # 1 erg/s = 1e-7 W


def wavelength_nm_to_omega(lambda_nm: float) -> float:
    """Vacuum wavelength in nm to angular frequency in rad/s."""
    if not (math.isfinite(lambda_nm) and lambda_nm > 0):
        raise ValidationError(f"wavelength must be positive and finite, got {lambda_nm}")
    return TWO_PI * C_LIGHT / (lambda_nm * 1.0e-7)


def ghz_to_rad_per_s(f_ghz: float) -> float:
    return TWO_PI * 1.0e9 * f_ghz


def rad_per_s_to_ghz(omega: float) -> float:
    return omega / (TWO_PI * 1.0e9)


def um3_to_cm3(volume_um3: float) -> float:
    return volume_um3 * CM3_PER_UM3


def cm3_to_um3(volume_cm3: float) -> float:
    return volume_cm3 * UM3_PER_CM3


def pockels_to_gamma(p: float, n: float) -> float:
    """Photo-elastic coefficient gamma = p * n^4 from the Pockels coefficient."""
    if not (math.isfinite(p) and math.isfinite(n)):
        raise ValidationError(f"pockels_to_gamma needs finite inputs, got p={p}, n={n}")
    if n < 1.0:
        raise ValidationError(f"refractive index must be >= 1, got {n}")
    return p * n**4


def q_to_rate(omega: float, q_factor: float) -> float:
    """Loss rate omega/Q in rad/s from a quality factor."""
    if not (math.isfinite(omega) and omega > 0):
        raise ValidationError(f"frequency must be positive and finite, got {omega}")
    if not (math.isfinite(q_factor) and q_factor > 0):
        raise ValidationError(f"Q factor must be positive and finite, got {q_factor}")
    return omega / q_factor


@dataclass(frozen=True)
class RateSet:
    """A loss/coupling rate in rad/s plus a record of where it came from."""

    value: float
    origin: str = "direct"

    _ORIGINS = ("direct", "from_q_factor")

    def __post_init__(self):
        if self.origin not in self._ORIGINS:
            raise ValidationError(f"unknown rate origin {self.origin!r}")
        if not (math.isfinite(self.value) and self.value >= 0):
            raise ValidationError(f"rate must be >= 0 and finite, got {self.value}")

    @classmethod
    def direct(cls, value: float) -> "RateSet":
        return cls(value, "direct")

    @classmethod
    def from_q_factor(cls, omega: float, q_factor: float) -> "RateSet":
        return cls(q_to_rate(omega, q_factor), "from_q_factor")


@dataclass(frozen=True)
class Material:
    """Scalar optical/acoustic/photo-elastic constants of one crystal.

    gamma defaults to p * n^4 (bit-exact) and epsilon to n^2; both can be
    overridden for materials where the scalar reduction is known separately.
    Units: rho in g/cm^3, s in cm/s, the rest dimensionless.
    """

    name: str
    n: float
    p: float
    rho: float
    s: float
    gamma: float = None
    epsilon: float = None
    source: str = ""

    def __post_init__(self):
        if self.gamma is None:
            object.__setattr__(self, "gamma", pockels_to_gamma(self.p, self.n))
        if self.epsilon is None:
            object.__setattr__(self, "epsilon", self.n**2)
        for field in ("n", "p", "rho", "s", "gamma", "epsilon"):
            value = getattr(self, field)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValidationError(f"material {self.name}: {field} must be a finite number, got {value!r}")
        if self.n < 1.0:
            raise ValidationError(f"material {self.name}: refractive index must be >= 1, got {self.n}")
        if self.rho <= 0:
            raise ValidationError(f"material {self.name}: density must be > 0, got {self.rho}")
        if self.s <= 0:
            raise ValidationError(f"material {self.name}: sound speed must be > 0, got {self.s}")
        if self.epsilon < 1.0:
            raise ValidationError(f"material {self.name}: dielectric constant must be >= 1, got {self.epsilon}")


_REQUIRED_FIELDS = ("n", "p", "rho", "s")
_OPTIONAL_FIELDS = ("gamma", "epsilon", "source")


def _material_from_record(name: str, record: dict, where: str) -> Material:
    if not isinstance(record, dict):
        raise ValidationError(f"{where}: entry {name!r} must be a table of fields")
    unknown = set(record) - set(_REQUIRED_FIELDS) - set(_OPTIONAL_FIELDS)
    if unknown:
        raise ValidationError(f"{where}: entry {name!r} has unknown field(s) {sorted(unknown)}")
    missing = [f for f in _REQUIRED_FIELDS if f not in record]
    if missing:
        raise ValidationError(f"{where}: entry {name!r} is missing field(s) {missing}")
    return Material(name=name, **record)


def _load_material_table(text: str, where: str) -> dict:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ValidationError(f"{where}: malformed material data: {exc}") from exc
    if not data:
        raise ValidationError(f"{where}: no material records found")
    return {name: _material_from_record(name, rec, where) for name, rec in data.items()}


@lru_cache(maxsize=1)
def bundled_materials() -> dict:
    """Name -> Material map of the bundled data file (validated on load)."""
    text = resources.files("sbs_transducer").joinpath("data/materials.toml").read_text()
    return _load_material_table(text, "bundled materials.toml")


def material_lookup(name: str) -> Material:
    """Return a bundled material by (case-insensitive) name, or load one from a file path."""
    key = name.strip()
    table = bundled_materials()
    for bundled_name, material in table.items():
        if bundled_name.lower() == key.lower():
            return material
    path = Path(key)
    if path.is_file():
        user_table = _load_material_table(path.read_text(), str(path))
        if len(user_table) != 1:
            raise ValidationError(
                f"{path}: expected exactly one material record, found {sorted(user_table)}"
            )
        return next(iter(user_table.values()))
    raise UnknownMaterialError(
        f"unknown material {name!r}; bundled: {', '.join(sorted(table))} (or pass a data file path)"
    )
