import math

import pytest
from hypothesis import given, strategies as st

from dipolariton.units import (
    Dimension,
    DimensionError,
    Quantity,
    angular_ghz_to_energy,
    bias_to_energy,
    energy,
    energy_to_angular_ghz,
    energy_to_bias,
    field,
    length,
    rate,
    rate_to_lifetime,
)

from oracles import H_PLANCK_MEV_S

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
positive = st.floats(min_value=1e-3, max_value=1e3)


class TestAngularRate:
    def test_cavity_coupling(self):
        # hbar * 2pi * f == h * f; h is exact, hbar is rounded to 10 digits
        e = angular_ghz_to_energy(16.0)
        assert e.dimension is Dimension.ENERGY
        assert e.value == pytest.approx(H_PLANCK_MEV_S * 16e9, rel=1e-9)
        assert e.value == pytest.approx(0.06617, rel=1e-4)

    def test_zero(self):
        assert angular_ghz_to_energy(0.0).value == 0.0

    def test_exciton_recombination(self):
        assert angular_ghz_to_energy(0.1).value == pytest.approx(4.1356676960e-4, rel=1e-9)

    def test_negative_rejected(self):
        with pytest.raises(DimensionError):
            angular_ghz_to_energy(-1.0)

    def test_inverse(self):
        assert energy_to_angular_ghz(angular_ghz_to_energy(16.0)) == pytest.approx(16.0, rel=1e-14)

    @given(st.floats(0, 1e3), st.floats(0, 1e3))
    def test_additive(self, a, b):
        lhs = (angular_ghz_to_energy(a) + angular_ghz_to_energy(b)).value
        rhs = angular_ghz_to_energy(a + b).value
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


class TestBias:
    @pytest.mark.parametrize("F, expected", [(1.0, 1.5), (0.0, 0.0), (-5.75, -8.625)])
    def test_values(self, F, expected):
        assert bias_to_energy(field(F), length(15.0)).value == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("d", [0.0, -1.0])
    def test_bad_distance(self, d):
        with pytest.raises(ValueError):
            bias_to_energy(1.0, d)

    def test_wrong_dimension(self):
        with pytest.raises(DimensionError):
            bias_to_energy(energy(1.0), 15.0)

    @given(finite, finite, positive)
    def test_additive_in_field(self, f1, f2, d):
        lhs = bias_to_energy(f1, d).value + bias_to_energy(f2, d).value
        assert lhs == pytest.approx(bias_to_energy(f1 + f2, d).value, rel=1e-12, abs=1e-9)

    @given(finite, positive, st.floats(0.1, 10))
    def test_homogeneous(self, F, d, k):
        assert bias_to_energy(k * F, d).value == pytest.approx(k * bias_to_energy(F, d).value, rel=1e-12, abs=1e-12)
        assert bias_to_energy(F, k * d).value == pytest.approx(k * bias_to_energy(F, d).value, rel=1e-12, abs=1e-12)

    def test_inverse(self):
        assert energy_to_bias(-8.625, 15.0).value == pytest.approx(-5.75, rel=1e-15)
        assert energy_to_bias(80.0, 15.0).value == pytest.approx(53.3333333333, rel=1e-10)


class TestLifetime:
    def test_cavity_rate(self):
        gamma = rate(2 * math.pi * 16e9)
        assert gamma.value == pytest.approx(1.00531e11, rel=1e-5)
        assert rate_to_lifetime(gamma).value == pytest.approx(9.94718394324346, rel=1e-14)

    def test_identity_in_ps(self):
        assert rate_to_lifetime(Quantity.of(1.0, "1/ps")).value == pytest.approx(1.0, rel=1e-15)

    def test_exciton_rate(self):
        assert rate_to_lifetime(rate(2 * math.pi * 0.1e9)).value == pytest.approx(1591.5494309189535, rel=1e-14)

    @pytest.mark.parametrize("g", [0.0, -1.0])
    def test_dark_is_infinite(self, g):
        tau = rate_to_lifetime(rate(g))
        assert tau.dimension is Dimension.TIME and math.isinf(tau.value)

    @given(st.floats(1e-3, 1e15))
    def test_product_is_one(self, g):
        assert rate_to_lifetime(rate(g)).to("s") * g == pytest.approx(1.0, rel=1e-14)


class TestQuantity:
    def test_mixed_dimensions_rejected(self):
        with pytest.raises(DimensionError):
            energy(1.0) + field(1.0)
        with pytest.raises(DimensionError):
            energy(1.0) - length(1.0)
        with pytest.raises(DimensionError):
            energy(1.0) < rate(1.0)

    def test_arithmetic(self):
        assert (energy(1.0) + energy(2.0)).value == 3.0
        assert (2 * energy(1.5)).value == 3.0
        assert (energy(3.0) / 2).value == 1.5
        assert energy(3.0) / energy(1.5) == 2.0
        assert -energy(1.0) == energy(-1.0)

    def test_unknown_unit(self):
        with pytest.raises(DimensionError):
            Quantity.of(1.0, "furlong")
        with pytest.raises(DimensionError):
            energy(1.0).to("nm")

    @pytest.mark.parametrize("unit, other", [
        ("meV", "ueV"), ("meV", "eV"), ("kV/cm", "V/m"), ("nm", "m"),
        ("1/s", "GHz"), ("GHz", "1/ps"), ("ps", "ns"), ("ps", "s"),
    ])
    @given(x=st.floats(1e-6, 1e6))
    def test_round_trip(self, unit, other, x):
        back = Quantity.of(Quantity.of(x, unit).to(other), other).to(unit)
        assert back == pytest.approx(x, rel=1e-14)
