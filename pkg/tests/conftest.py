import pytest

from sbs_transducer import ResonatorSpec


@pytest.fixture
def spec_factory():
    """Build a ResonatorSpec with loss rates in arbitrary (scale-free) units."""

    def make(
        kappa0=2.0,
        Gamma0=0.5,
        kappa_int=0.0,
        Gamma_int=0.0,
        omega_s=1.2153e15,
        Omega=6.24e10,
        V=1e-12,
    ):
        return ResonatorSpec(
            omega_s=omega_s,
            Omega=Omega,
            kappa0=kappa0,
            kappa_int=kappa_int,
            Gamma0=Gamma0,
            Gamma_int=Gamma_int,
            V=V,
        )

    return make
