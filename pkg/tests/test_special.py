"""Special-function accuracy and structural properties."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wellflow.special import (
    DomainError,
    UnderflowWarning,
    bessel_k0,
    bessel_k0_scaled,
    bessel_k1,
    bessel_k1_scaled,
    bessel_k01_scaled_array,
    exp_integral_e1,
)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestBesselReference:
    def test_k0_table_values(self):
        assert rel(bessel_k0(1.0), 0.421024438240708) < 1e-12
        assert rel(bessel_k0(2.0), 0.113893872749533) < 1e-12

    def test_k1_table_values(self):
        assert rel(bessel_k1(1.0), 0.601907230197235) < 1e-12
        assert rel(bessel_k1(2.0), 0.139865881816522) < 1e-12

    def test_against_fixture_grid(self, bessel_fixture):
        pts = bessel_fixture["points"]
        assert len(pts) == 200
        zs = np.array([complex(float(p["z_re"]), float(p["z_im"])) for p in pts])
        k0e, k1e = bessel_k01_scaled_array(zs)
        worst = 0.0
        for i, p in enumerate(pts):
            ref0 = complex(float(p["k0e_re"]), float(p["k0e_im"]))
            ref1 = complex(float(p["k1e_re"]), float(p["k1e_im"]))
            worst = max(worst, rel(k0e[i], ref0), rel(k1e[i], ref1))
        assert worst < 1e-12

    def test_scaled_consistency(self):
        for x in (0.5, 3.0, 17.0):
            assert rel(bessel_k0_scaled(x) * math.exp(-x), bessel_k0(x)) < 1e-14
            assert rel(bessel_k1_scaled(x) * math.exp(-x), bessel_k1(x)) < 1e-14


class TestBesselLimits:
    def test_small_argument_laws(self):
        for x in (1e-4, 1e-5, 1e-6, 1e-8):
            assert abs(x * bessel_k1(x).real - 1.0) <= 1e-6
            assert abs(x * x * bessel_k0(x).real) <= 1e-6

    def test_derivative_identity_via_k2(self):
        # dK1/dx = -(K0 + K1/x), equivalently -(K0 + K2)/2 with
        # K2 = K0 + 2 K1 / x
        for x in np.linspace(0.1, 20.0, 30):
            h = 1e-6 * max(x, 1.0)
            k1p = bessel_k1(x + h).real
            k1m = bessel_k1(x - h).real
            dk1 = (k1p - k1m) / (2.0 * h)
            k0 = bessel_k0(x).real
            k1 = bessel_k1(x).real
            k2 = k0 + 2.0 * k1 / x
            assert rel(dk1, -(k0 + k2) / 2.0) < 1e-6

    def test_monotone_positive_decay(self):
        xs = np.geomspace(1e-3, 30.0, 200)
        k0e, k1e = bessel_k01_scaled_array(xs.astype(complex))
        k0 = (k0e * np.exp(-xs)).real
        k1 = (k1e * np.exp(-xs)).real
        assert np.all(k0 > 0.0) and np.all(k1 > 0.0)
        assert np.all(np.diff(k0) < 0.0) and np.all(np.diff(k1) < 0.0)


class TestBesselComplex:
    @given(st.floats(min_value=-7.0, max_value=3.0),
           st.floats(min_value=-1.55, max_value=1.55))
    @settings(max_examples=200, deadline=None)
    def test_conjugate_symmetry(self, logmag, arg):
        z = 10.0 ** logmag * cmath.exp(1j * arg)
        if z.real <= 0.0:
            return
        k0e, k1e = bessel_k01_scaled_array(np.array([z, z.conjugate()]))
        assert rel(k0e[1], k0e[0].conjugate()) < 1e-13
        assert rel(k1e[1], k1e[0].conjugate()) < 1e-13

    def test_regime_boundaries_are_seamless(self):
        for mag in (1.999999, 2.000001, 39.999999, 40.000001):
            for arg in (0.0, 0.9, -1.4):
                z = mag * cmath.exp(1j * arg)
                k0e, _ = bessel_k01_scaled_array(np.array([z]))
                assert np.isfinite(k0e[0])

    def test_wronskian_like_cross_check(self):
        # K1/K0 ratio from the two independent code paths around |z|=2
        a, _ = bessel_k01_scaled_array(np.array([1.999 + 0.3j]))
        b, _ = bessel_k01_scaled_array(np.array([2.001 + 0.3j]))
        assert abs(a[0] - b[0]) / abs(a[0]) < 1e-3


class TestBesselErrors:
    def test_domain_error_nonpositive_real(self):
        with pytest.raises(DomainError):
            bessel_k0(-1.0)
        with pytest.raises(DomainError):
            bessel_k0(-0.5 + 2.0j)
        with pytest.raises(DomainError):
            bessel_k1(0.0)

    def test_domain_error_nonfinite(self):
        with pytest.raises(DomainError):
            bessel_k0(math.inf)

    def test_underflow_flagged_not_silent(self):
        with pytest.warns(UnderflowWarning):
            v = bessel_k0(800.0)
        assert v == 0.0
        with pytest.warns(UnderflowWarning):
            v = bessel_k1(1000.0 + 30.0j)
        assert v == 0.0

    def test_scaled_never_underflows(self):
        v = bessel_k0_scaled(800.0)
        assert v.real > 0.0


class TestExpIntegral:
    def test_reference_values(self):
        assert rel(exp_integral_e1(1.0), 0.219383934395520) < 1e-13
        assert rel(exp_integral_e1(0.025), 3.1365149958809536) < 1e-12

    def test_against_fixture_grid(self, e1_fixture):
        worst = 0.0
        for p in e1_fixture["points"]:
            worst = max(worst, rel(exp_integral_e1(float(p["u"])),
                                   float(p["e1"])))
        assert worst < 1e-13

    def test_monotone_decay_to_zero(self):
        us = np.geomspace(1e-8, 50.0, 120)
        vals = np.array([exp_integral_e1(u) for u in us])
        assert np.all(np.diff(vals) < 0.0)
        assert vals[-1] < 1e-22

    def test_domain_error(self):
        with pytest.raises(DomainError):
            exp_integral_e1(0.0)
        with pytest.raises(DomainError):
            exp_integral_e1(-2.0)

    @given(st.floats(min_value=-9.0, max_value=1.69))
    @settings(max_examples=100, deadline=None)
    def test_series_cf_crossover_continuity(self, logu):
        # values either side of u = 1 must come from one smooth function
        u = 10.0 ** logu
        v = exp_integral_e1(u)
        assert v > 0.0
        assert math.isfinite(v)
