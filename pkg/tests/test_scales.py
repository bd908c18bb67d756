"""
Tests for the physical-to-dimensionless mapping.
"""

import math

import pytest
from hypothesis import given
from hypothesis.strategies import floats
from numpy.testing import assert_allclose

from plasma_response.exceptions import DomainError
from plasma_response.scales import (
    ELECTRON_CHARGE_CGS,
    ELECTRON_MASS_CGS,
    HBAR_CGS,
    derive_fermi_scales,
    query_from_physical,
    to_dimensionless,
)

UNIT_DENSITY = 1.0 / (3.0 * math.pi ** 2)


def metal_scales(N=8.5e22, nu=1e13):
    return derive_fermi_scales(N=N, e=ELECTRON_CHARGE_CGS, m=ELECTRON_MASS_CGS, hbar=HBAR_CGS, nu=nu)


class TestDeriveFermiScales:
    def test_unit_density(self):
        scales = derive_fermi_scales(N=UNIT_DENSITY, e=1.0, m=1.0, hbar=1.0, nu=1.0)
        assert_allclose(scales.k_F, 1.0, rtol=1e-14)
        assert_allclose(scales.v_F, 1.0, rtol=1e-14)
        assert_allclose(scales.E_F, 0.5, rtol=1e-14)

    def test_density_scaling_doubles_k_f(self):
        base = derive_fermi_scales(N=1e22, e=1.0, m=1.0, hbar=1.0, nu=1.0)
        scaled = derive_fermi_scales(N=8e22, e=1.0, m=1.0, hbar=1.0, nu=1.0)
        assert_allclose(scaled.k_F / base.k_F, 2.0, rtol=1e-14)

    def test_metallic_density(self):
        scales = metal_scales()
        assert_allclose(scales.k_F, (3.0 * math.pi ** 2 * 8.5e22) ** (1.0 / 3.0), rtol=1e-14)
        assert_allclose(scales.k_F, 1.36e8, rtol=1e-2)

    def test_invariants(self):
        s = metal_scales()
        assert_allclose(s.k_F ** 3, 3.0 * math.pi ** 2 * s.N, rtol=1e-13)
        assert_allclose(s.E_F, s.m * s.v_F ** 2 / 2.0, rtol=1e-14)
        assert_allclose(s.v_F, s.hbar * s.k_F / s.m, rtol=1e-14)
        assert_allclose(s.omega_p ** 2, 4.0 * math.pi * s.e ** 2 * s.N / s.m, rtol=1e-14)
        assert_allclose(s.sigma_0, s.e ** 2 * s.N / (s.m * s.nu), rtol=1e-14)

    def test_x_p_two_ways(self):
        s = metal_scales()
        assert_allclose(s.x_p, s.x_p_from_energy, rtol=1e-14)

    @pytest.mark.parametrize("field", ["N", "e", "m", "hbar", "nu"])
    def test_non_positive_input_names_field(self, field):
        values = dict(N=1e22, e=1.0, m=1.0, hbar=1.0, nu=1.0)
        values[field] = 0.0
        with pytest.raises(DomainError, match=f"{field} must be > 0") as info:
            derive_fermi_scales(**values)
        assert info.value.field == field


class TestToDimensionless:
    def test_definitions(self):
        s = metal_scales()
        query = to_dimensionless(omega=s.k_F * s.v_F, nu=1e13, k=s.k_F, scales=s)
        assert_allclose(query.x, 1.0, rtol=1e-14)
        assert_allclose(query.q, 1.0, rtol=1e-14)
        assert_allclose(query.y, 1e13 / (s.k_F * s.v_F), rtol=1e-14)
        assert_allclose(query.x_p, s.x_p, rtol=1e-14)
        assert query.z == complex(query.x, query.y)

    def test_energy_form_of_x(self):
        s = metal_scales()
        omega = 3.7e15
        query = to_dimensionless(omega=omega, nu=1e13, k=1e7, scales=s)
        assert_allclose(query.x, s.hbar * omega / (2.0 * s.E_F), rtol=1e-14)

    @pytest.mark.parametrize("field", ["omega", "nu", "k"])
    def test_non_positive_input(self, field):
        values = dict(omega=1e15, nu=1e13, k=1e7)
        values[field] = -1.0
        with pytest.raises(DomainError, match=field):
            to_dimensionless(scales=metal_scales(), **values)

    @given(
        x=floats(min_value=1e-3, max_value=1e3),
        N=floats(min_value=1e20, max_value=1e24),
    )
    def test_round_trip_reproduces_x(self, x, N):
        s = metal_scales(N=N)
        query = to_dimensionless(omega=x * s.k_F * s.v_F, nu=1e13, k=s.k_F, scales=s)
        assert_allclose(query.x, x, rtol=1e-14)


class TestQueryFromPhysical:
    def test_matches_two_step_mapping(self):
        s = metal_scales(nu=2e13)
        direct = to_dimensionless(omega=2e15, nu=2e13, k=5e7, scales=s)
        composed = query_from_physical(omega=2e15, nu=2e13, k=5e7, N=8.5e22)
        assert composed == direct
