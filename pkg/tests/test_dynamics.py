import math

import numpy as np
import pytest

from sbs_transducer import (
    DetuningConfig,
    DriveSignal,
    NonFiniteStateError,
    StepSizeError,
    Trace,
    ValidationError,
    hybrid_eigenvalues,
    integrate,
    smatrix,
)


def steady_entry(spec, det, g0, Np, drive_port, settle=40.0, dt_factor=0.04):
    """Steady-state (a_out, c_out) under a unit constant drive on one port."""
    g = abs(g0) * math.sqrt(Np)
    fastest = max(spec.kappa, spec.Gamma, g, abs(det.d_omega), abs(det.d_Omega), abs(det.delta))
    slowest = min(r for r in (spec.kappa, spec.Gamma) if r > 0)
    trace = integrate(
        spec,
        det,
        g0,
        Np,
        [DriveSignal.constant(drive_port, 1.0)],
        T=settle / slowest,
        dt=dt_factor / fastest,
    )
    return trace.a_out[-1], trace.c_out[-1]


class TestDriveSignal:
    def test_kinds(self):
        assert DriveSignal.off("optical_in").value(3.0) == 0j
        assert DriveSignal.constant("optical_in", 2.0).value(3.0) == 2.0
        tone = DriveSignal.tone("microwave_in", 1.0, detuning=2.0)
        assert tone.value(math.pi / 2) == pytest.approx(np.exp(-1j * math.pi), rel=1e-12)
        pulse = DriveSignal.pulse("optical_in", 1.5, t_on=1.0, t_off=2.0)
        assert pulse.value(0.5) == 0j
        assert pulse.value(1.5) == 1.5
        assert pulse.value(2.0) == 0j

    def test_rejects_bad_port_and_kind(self):
        with pytest.raises(ValidationError):
            DriveSignal.constant("rf_in", 1.0)
        with pytest.raises(ValidationError):
            DriveSignal(port="optical_in", kind="chirp")

    def test_rejects_bad_pulse_window(self):
        with pytest.raises(ValidationError):
            DriveSignal.pulse("optical_in", 1.0, t_on=2.0, t_off=1.0)

    def test_rejects_non_finite_amplitude(self):
        with pytest.raises(ValidationError):
            DriveSignal.constant("optical_in", complex("inf"))


class TestIntegrationGuards:
    def test_step_size_guard(self, spec_factory):
        spec = spec_factory(kappa0=2.0, Gamma0=0.5)
        with pytest.raises(StepSizeError):
            integrate(spec, DetuningConfig.resonant(), 0.0, 0.0, [], T=10.0, dt=0.06)

    def test_rejects_bad_times(self, spec_factory):
        spec = spec_factory()
        with pytest.raises(ValidationError):
            integrate(spec, DetuningConfig.resonant(), 0.0, 0.0, [], T=-1.0, dt=0.01)
        with pytest.raises(ValidationError):
            integrate(spec, DetuningConfig.resonant(), 0.0, 0.0, [], T=1.0, dt=0.0)

    def test_non_finite_state_detected(self, spec_factory):
        spec = spec_factory(kappa0=2.0, Gamma0=0.5)
        huge = DriveSignal.constant("optical_in", 1e308)
        with pytest.raises(NonFiniteStateError):
            integrate(spec, DetuningConfig.resonant(), 0.0, 0.0, [huge], T=10.0, dt=0.01)


class TestConservation:
    def test_lossless_undriven_quanta(self, spec_factory):
        spec = spec_factory(kappa0=0.0, Gamma0=0.0)
        g = 1.7
        rabi_period = math.pi / g  # period of |a|^2 under splitting 2g
        trace = integrate(
            spec, DetuningConfig.resonant(), g, 1.0, [], T=100 * rabi_period, dt=0.01 / g, a0=1.0
        )
        total = np.abs(trace.a) ** 2 + np.abs(trace.b) ** 2
        assert np.max(np.abs(total - 1.0)) < 1e-8

    def test_rabi_oscillation_under_decay_envelope(self, spec_factory):
        kappa = 0.4
        g = 2.0
        spec = spec_factory(kappa0=kappa, Gamma0=kappa)
        trace = integrate(
            spec, DetuningConfig.resonant(), g, 1.0, [], T=4 * math.pi / g, dt=0.005 / g, a0=1.0
        )
        # |a(t)|^2 = exp(-2*kappa*t) * cos^2(g*t)
        expected = np.exp(-2 * kappa * trace.times) * np.cos(g * trace.times) ** 2
        assert np.max(np.abs(np.abs(trace.a) ** 2 - expected)) < 1e-6


class TestSteadyStateOracle:
    def test_unit_pump_full_conversion_magnitude(self, spec_factory):
        kappa0 = 2.0
        spec = spec_factory(kappa0=kappa0, Gamma0=kappa0)
        g0 = kappa0  # eps = 1
        trace = integrate(
            spec,
            DetuningConfig.resonant(),
            g0,
            1.0,
            [DriveSignal.constant("optical_in", 1.0)],
            T=20.0 / kappa0,
            dt=0.02 / kappa0,
        )
        assert abs(trace.c_out[-1]) == pytest.approx(1.0, abs=1e-6)
        assert abs(trace.a_out[-1]) == pytest.approx(0.0, abs=1e-6)

    def test_matches_smatrix_entries(self, spec_factory):
        rng = np.random.default_rng(21)
        for _ in range(5):
            kappa0 = rng.uniform(0.5, 2.0)
            Gamma0 = rng.uniform(0.5, 2.0)
            spec = spec_factory(
                kappa0=kappa0,
                Gamma0=Gamma0,
                kappa_int=kappa0 * rng.uniform(0, 0.3),
                Gamma_int=Gamma0 * rng.uniform(0, 0.3),
            )
            det = DetuningConfig.from_pair(
                rng.uniform(-1.5, 1.5) * spec.kappa, rng.uniform(-1.5, 1.5) * spec.Gamma
            )
            g0 = math.sqrt(rng.uniform(0.3, 3.0) * kappa0 * Gamma0)
            ref = smatrix(spec, det, g0, 1.0)
            a_out, c_out = steady_entry(spec, det, g0, 1.0, "optical_in")
            assert a_out == pytest.approx(ref.S11, rel=1e-5)
            assert c_out == pytest.approx(ref.S21, rel=1e-5)
            a_out, c_out = steady_entry(spec, det, g0, 1.0, "microwave_in")
            assert a_out == pytest.approx(ref.S12, rel=1e-5)
            assert c_out == pytest.approx(ref.S22, rel=1e-5)

    def test_tone_drive_probes_shifted_detuning(self, spec_factory):
        kappa0, Gamma0 = 2.0, 0.5
        spec = spec_factory(kappa0=kappa0, Gamma0=Gamma0)
        g0 = math.sqrt(0.8 * kappa0 * Gamma0)
        shift = 0.7
        trace = integrate(
            spec,
            DetuningConfig.resonant(),
            g0,
            1.0,
            [DriveSignal.tone("optical_in", 1.0, detuning=shift)],
            T=40.0 / Gamma0,
            dt=0.01 / max(kappa0, shift),
        )
        ref = smatrix(spec, DetuningConfig.from_pair(shift, shift), g0, 1.0)
        assert abs(trace.a_out[-1]) == pytest.approx(abs(ref.S11), rel=1e-5)

    def test_halving_dt_converges(self, spec_factory):
        spec = spec_factory(kappa0=2.0, Gamma0=0.5, kappa_int=0.1)
        det = DetuningConfig.from_pair(0.8, -0.3)
        drives = [DriveSignal.constant("optical_in", 1.0)]
        coarse = integrate(spec, det, 0.9, 1.0, drives, T=5.0, dt=0.01)
        fine = integrate(spec, det, 0.9, 1.0, drives, T=5.0, dt=0.005)
        diff = abs(coarse.a[-1] - fine.a[-1]) / abs(fine.a[-1])
        assert diff < 1e-7


class TestPulseDrive:
    def test_ringdown_after_pulse(self, spec_factory):
        kappa0 = 1.0
        spec = spec_factory(kappa0=kappa0, Gamma0=kappa0)
        pulse = DriveSignal.pulse("optical_in", 1.0, t_on=0.0, t_off=10.0)
        trace = integrate(
            spec, DetuningConfig.resonant(), 0.5, 1.0, [pulse], T=30.0, dt=0.02
        )
        idx_off = np.searchsorted(trace.times, 10.0)
        assert abs(trace.a[-1]) < 1e-6
        assert abs(trace.a[idx_off]) > 0.1


class TestHybridEigenvalues:
    def test_decoupled(self, spec_factory):
        spec = spec_factory(kappa0=0.3, Gamma0=0.7)
        det = DetuningConfig.from_pair(1.0, -2.0)
        lams = hybrid_eigenvalues(spec, det, 0.0, 0.0)
        assert sorted(lams, key=lambda z: z.real) == [
            pytest.approx(-2.0 - 0.7j, rel=1e-12),
            pytest.approx(1.0 - 0.3j, rel=1e-12),
        ]

    def test_resonant_splitting(self, spec_factory):
        kappa = 0.5
        g = 1.3
        spec = spec_factory(kappa0=kappa, Gamma0=kappa)
        lam_plus, lam_minus = hybrid_eigenvalues(spec, DetuningConfig.resonant(), g, 1.0)
        assert lam_plus == pytest.approx(g - 1j * kappa, rel=1e-12)
        assert lam_minus == pytest.approx(-g - 1j * kappa, rel=1e-12)

    def test_weak_coupling_purely_damped(self, spec_factory):
        spec = spec_factory(kappa0=2.0, Gamma0=0.2)
        g = 0.4  # below |kappa - Gamma| / 2 = 0.9
        lams = hybrid_eigenvalues(spec, DetuningConfig.resonant(), g, 1.0)
        for lam in lams:
            assert abs(lam.real) < 1e-12
            assert lam.imag < 0

    def test_spectral_peaks_match(self, spec_factory):
        kappa = 0.05
        g = 2.0
        spec = spec_factory(kappa0=kappa, Gamma0=kappa)
        dt = 0.02 / g
        trace = integrate(
            spec, DetuningConfig.resonant(), g, 1.0, [], T=400.0, dt=dt, a0=1.0
        )
        lams = hybrid_eigenvalues(spec, DetuningConfig.resonant(), g, 1.0)
        spectrum = np.abs(np.fft.fft(trace.a))
        freqs = 2 * math.pi * np.fft.fftfreq(trace.a.size, d=trace.times[1] - trace.times[0])
        bin_width = abs(freqs[1] - freqs[0])
        # amplitudes evolve as exp(-i*lambda*t): peaks sit at -Re(lambda)
        for lam in lams:
            window = np.abs(freqs + lam.real) < 10 * bin_width
            local_peak = freqs[window][np.argmax(spectrum[window])]
            assert abs(local_peak + lam.real) <= bin_width


class TestTrace:
    def test_csv_columns(self, spec_factory):
        spec = spec_factory(kappa0=2.0, Gamma0=0.5)
        trace = integrate(
            spec,
            DetuningConfig.resonant(),
            0.1,
            1.0,
            [DriveSignal.constant("optical_in", 1.0)],
            T=1.0,
            dt=0.01,
        )
        lines = trace.to_csv().strip().split("\n")
        assert lines[0] == "t,re_a,im_a,re_b,im_b,re_aout,im_aout,re_cout,im_cout"
        assert len(lines) == trace.times.size + 1
        assert len(lines[1].split(",")) == 9

    def test_rejects_mismatched_arrays(self):
        with pytest.raises(ValidationError):
            Trace(
                times=np.array([0.0, 1.0]),
                a=np.zeros(3, complex),
                b=np.zeros(2, complex),
                a_out=np.zeros(2, complex),
                c_out=np.zeros(2, complex),
            )
