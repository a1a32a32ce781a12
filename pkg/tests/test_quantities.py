import math

import numpy as np
import pytest

from sbs_transducer import (
    Material,
    RateSet,
    UnknownMaterialError,
    ValidationError,
    bundled_materials,
    material_lookup,
    pockels_to_gamma,
    q_to_rate,
)
from sbs_transducer.quantities import (
    C_LIGHT,
    HBAR,
    cm3_to_um3,
    ghz_to_rad_per_s,
    rad_per_s_to_ghz,
    um3_to_cm3,
    wavelength_nm_to_omega,
)

BUNDLED_NAMES = ("LiNbO3", "GaAs", "AlN")


class TestPockelsToGamma:
    def test_zero_pockels(self):
        assert pockels_to_gamma(0.0, 2.2) == 0.0

    def test_linbo3_value(self):
        gamma = pockels_to_gamma(0.2, 2.2)
        assert gamma == pytest.approx(4.68512, rel=1e-12)
        assert 0.3 <= gamma <= 20.0

    def test_aln_value(self):
        assert pockels_to_gamma(0.02, 2.12) == pytest.approx(0.4039926272, rel=1e-12)

    def test_rejects_subunity_index(self):
        with pytest.raises(ValidationError):
            pockels_to_gamma(0.2, 0.9)

    @pytest.mark.parametrize("bad", [math.nan, math.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValidationError):
            pockels_to_gamma(bad, 2.2)
        with pytest.raises(ValidationError):
            pockels_to_gamma(0.2, bad)

    def test_monotone_in_both_arguments(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            p = rng.uniform(0.001, 0.5)
            n = rng.uniform(1.0, 4.0)
            scale = rng.uniform(1.01, 2.0)
            assert pockels_to_gamma(p * scale, n) > pockels_to_gamma(p, n)
            assert pockels_to_gamma(p, n * scale) > pockels_to_gamma(p, n)


class TestQToRate:
    def test_optical_rate(self):
        assert q_to_rate(1.215e15, 1e5) == pytest.approx(1.215e10, rel=1e-12)

    def test_identity_q(self):
        omega = 7.3e12
        assert q_to_rate(omega, 1.0) == omega

    def test_acoustic_rate(self):
        assert q_to_rate(6.2e10, 1e4) == pytest.approx(6.2e6, rel=1e-12)

    @pytest.mark.parametrize("omega,q", [(0.0, 1e5), (-1.0, 1e5), (1e15, 0.0), (1e15, -2.0)])
    def test_rejects_nonpositive(self, omega, q):
        with pytest.raises(ValidationError):
            q_to_rate(omega, q)


class TestRateSet:
    def test_direct(self):
        r = RateSet.direct(3.0e6)
        assert r.value == 3.0e6
        assert r.origin == "direct"

    def test_from_q_factor(self):
        r = RateSet.from_q_factor(1.215e15, 1e5)
        assert r.value == pytest.approx(1.215e10, rel=1e-12)
        assert r.origin == "from_q_factor"

    def test_rejects_negative(self):
        with pytest.raises(ValidationError):
            RateSet.direct(-1.0)

    def test_rejects_unknown_origin(self):
        with pytest.raises(ValidationError):
            RateSet(1.0, "guessed")


class TestMaterial:
    def test_gamma_roundtrip_is_bit_exact(self):
        m = Material(name="x", n=2.2, p=0.2, rho=4.64, s=3.5e5)
        assert m.gamma == 0.2 * 2.2**4

    def test_epsilon_defaults_to_n_squared(self):
        m = Material(name="x", n=2.2, p=0.2, rho=4.64, s=3.5e5)
        assert m.epsilon == 2.2**2

    def test_epsilon_override(self):
        m = Material(name="x", n=2.2, p=0.2, rho=4.64, s=3.5e5, epsilon=5.3)
        assert m.epsilon == 5.3

    def test_gamma_override(self):
        m = Material(name="x", n=2.2, p=0.2, rho=4.64, s=3.5e5, gamma=7.7)
        assert m.gamma == 7.7

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n=0.99),
            dict(rho=0.0),
            dict(rho=-1.0),
            dict(s=0.0),
            dict(epsilon=0.5),
            dict(n=math.nan),
        ],
    )
    def test_rejects_invalid_fields(self, kwargs):
        base = dict(name="bad", n=2.0, p=0.1, rho=1.0, s=1.0e5)
        base.update(kwargs)
        with pytest.raises(ValidationError):
            Material(**base)


class TestBundledMaterials:
    def test_all_present(self):
        table = bundled_materials()
        for name in BUNDLED_NAMES:
            assert name in table

    @pytest.mark.parametrize("name", BUNDLED_NAMES)
    def test_invariants_on_load(self, name):
        m = material_lookup(name)
        assert m.n >= 1.0
        assert m.rho > 0
        assert m.s > 0
        assert m.epsilon >= 1.0
        assert 0.3 <= m.gamma <= 20.0
        assert m.source

    def test_pockels_span(self):
        values = {name: material_lookup(name).p for name in BUNDLED_NAMES}
        assert values["AlN"] == 0.02
        assert min(values.values()) == 0.02
        assert max(values.values()) >= 0.16

    def test_linbo3_reference_values(self):
        m = material_lookup("LiNbO3")
        assert m.p == pytest.approx(0.2, rel=0.05)
        assert m.n == pytest.approx(2.2, rel=0.02)
        assert m.rho == pytest.approx(4.64, rel=0.01)
        assert m.s == pytest.approx(3.5e5, rel=0.05)


class TestMaterialLookup:
    def test_case_insensitive(self):
        assert material_lookup("linbo3").name == "LiNbO3"
        assert material_lookup(" GaAs ").name == "GaAs"

    def test_unknown_name(self):
        with pytest.raises(UnknownMaterialError):
            material_lookup("unobtainium")

    def test_user_data_file(self, tmp_path):
        path = tmp_path / "quartz.toml"
        path.write_text(
            "[Quartz]\nn = 1.53\np = 0.27\nrho = 2.65\ns = 3.1e5\nsource = 'handbook'\n"
        )
        m = material_lookup(str(path))
        assert m.name == "Quartz"
        assert m.gamma == 0.27 * 1.53**4

    def test_user_file_missing_field(self, tmp_path):
        path = tmp_path / "bad.toml"
        path.write_text("[Broken]\nn = 1.5\np = 0.1\n")
        with pytest.raises(ValidationError, match="missing field"):
            material_lookup(str(path))

    def test_user_file_unknown_field(self, tmp_path):
        path = tmp_path / "bad.toml"
        path.write_text("[Broken]\nn = 1.5\np = 0.1\nrho = 1.0\ns = 1e5\nbogus = 3\n")
        with pytest.raises(ValidationError, match="unknown field"):
            material_lookup(str(path))

    def test_user_file_multiple_records(self, tmp_path):
        path = tmp_path / "two.toml"
        path.write_text(
            "[A]\nn = 1.5\np = 0.1\nrho = 1.0\ns = 1e5\n"
            "[B]\nn = 1.6\np = 0.2\nrho = 2.0\ns = 2e5\n"
        )
        with pytest.raises(ValidationError, match="exactly one"):
            material_lookup(str(path))


class TestUnitConversions:
    def test_wavelength_to_omega(self):
        omega = wavelength_nm_to_omega(1550.0)
        assert omega == pytest.approx(2 * math.pi * C_LIGHT / 1550e-7, rel=1e-14)
        assert omega == pytest.approx(1.215e15, rel=1e-3)

    def test_wavelength_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            wavelength_nm_to_omega(0.0)

    def test_ghz_roundtrip(self):
        assert rad_per_s_to_ghz(ghz_to_rad_per_s(9.935)) == pytest.approx(9.935, rel=1e-14)
        assert ghz_to_rad_per_s(1.0) == pytest.approx(2 * math.pi * 1e9, rel=1e-14)

    def test_volume_roundtrip(self):
        assert um3_to_cm3(1.0) == 1e-12
        assert cm3_to_um3(um3_to_cm3(37.5)) == pytest.approx(37.5, rel=1e-14)

    def test_hbar_cgs(self):
        assert HBAR == pytest.approx(1.0545718e-27, rel=1e-6)
