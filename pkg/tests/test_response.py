"""
Tests for the conductivity and permittivity models.
"""

import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, sampled_from
from numpy.testing import assert_allclose

from plasma_response import response
from plasma_response.exceptions import ConvergenceError, DomainError
from plasma_response.kernels import t0_closed, t1_closed
from plasma_response.models import DimensionlessQuery
from plasma_response.response import (
    bracket,
    eps_classical,
    eps_lindhard,
    eps_mermin,
    eval_all,
    eval_negative_x,
    evaluate,
    j_nu,
    j_omega,
    sigma_classical,
    sigma_lindhard,
    sigma_mermin,
    sigma_mermin_misprinted,
    static_weight,
)
from plasma_response.schemas import ResponseModel

valid_points = dict(
    q=floats(min_value=0.1, max_value=3.0),
    x=floats(min_value=0.05, max_value=2.0),
    y=floats(min_value=1e-3, max_value=1.0),
    x_p=floats(min_value=0.5, max_value=3.0),
    model=sampled_from(list(ResponseModel)),
)


def drude(x: float, y: float) -> complex:
    return 1j * y / complex(x, y)


class TestJIntegrals:
    def test_j_nu_at_one(self):
        assert_allclose(j_nu(1.0), 3.0 / 8.0 * t0_closed(1.0), rtol=1e-15)
        assert j_nu(1.0) == pytest.approx(-0.76299, abs=1e-5)

    def test_j_nu_small_q(self):
        assert j_nu(1e-4) == pytest.approx(-1.0, abs=1e-8)

    def test_j_omega_small_q(self):
        z = complex(0.5, 0.2)
        assert abs(j_omega(1e-3, z)) < 1e-5
        assert_allclose(j_omega(0.7, z), 3.0 / 16.0 * t1_closed(0.7, z), rtol=1e-15)


class TestMermin:
    def test_drude_limit(self, drude_query):
        sample = sigma_mermin(drude_query)
        assert sample.model == ResponseModel.MERMIN
        assert sample.sigma_ratio == pytest.approx(complex(0.2, 0.4), abs=1e-6)
        assert sample.epsilon is None

    @pytest.mark.parametrize("x, y", [(0.1, 0.01), (0.5, 0.1), (1.0, 1.0), (2.0, 0.1)])
    def test_drude_deviation_is_quadratic(self, x, y):
        def deviation(q):
            return abs(sigma_mermin(DimensionlessQuery.build(q=q, x=x, y=y)).sigma_ratio - drude(x, y))

        assert deviation(1e-3) <= 1e-4
        assert deviation(1e-3) / deviation(5e-4) >= 3.5

    def test_static_limit(self):
        sample = sigma_mermin(DimensionlessQuery.build(q=1e-4, x=1e-6, y=0.1))
        assert sample.sigma_ratio == pytest.approx(1.0, abs=1e-3)

    def test_drude_permittivity(self):
        query = DimensionlessQuery.build(q=1e-4, x=2.0, y=0.1, x_p=1.0)
        expected = 1.0 - 1.0 / (2.0 * complex(2.0, 0.1))
        assert eps_mermin(query).epsilon == pytest.approx(expected, abs=1e-6)

    def test_misprinted_bracket_misses_drude(self):
        query = DimensionlessQuery.build(q=1e-3, x=1.0, y=0.5)
        assert abs(sigma_mermin_misprinted(query).sigma_ratio - drude(1.0, 0.5)) > 1e-4


class TestLindhardLimit:
    def test_permittivity_coincides_as_y_vanishes(self):
        query = DimensionlessQuery.build(q=1.0, x=0.5, y=1e-6, x_p=1.0)
        assert abs(eps_mermin(query).epsilon - eps_lindhard(query).epsilon) <= 1e-4

    @pytest.mark.parametrize("q", [0.1, 0.5, 1.9, 2.5])
    @pytest.mark.parametrize("x", [0.01, 0.5, 2.0])
    def test_imaginary_conductivity_coincides(self, q, x):
        query = DimensionlessQuery.build(q=q, x=x, y=1e-6)
        mermin = sigma_mermin(query).sigma_ratio
        lindhard = sigma_lindhard(query).sigma_ratio
        assert abs(mermin.imag - lindhard.imag) <= 1e-4

    def test_lindhard_small_q(self):
        query = DimensionlessQuery.build(q=1e-4, x=1.0, y=0.5)
        assert sigma_lindhard(query).sigma_ratio == pytest.approx(0.5j, abs=1e-6)


class TestClassical:
    def test_local_limit(self):
        query = DimensionlessQuery.build(q=1e-4, x=1.0, y=0.5)
        assert sigma_classical(query).sigma_ratio == pytest.approx(drude(1.0, 0.5), abs=1e-8)

    @pytest.mark.parametrize("a", [complex(2.0, 0.5), complex(0.5, 0.2)])
    def test_mermin_approaches_classical_at_fixed_a(self, a):
        errors = []
        for q in (0.2, 0.1, 0.05):
            z = a * q
            query = DimensionlessQuery.build(q=q, x=z.real, y=z.imag)
            errors.append(abs(sigma_mermin(query).sigma_ratio - sigma_classical(query).sigma_ratio))
        assert errors[0] > errors[1] > errors[2]

    def test_permittivity_requires_x_p(self):
        with pytest.raises(DomainError, match="x_p"):
            eps_classical(DimensionlessQuery.build(q=1.0, x=0.5, y=0.1))


class TestIdentities:
    @settings(max_examples=1000)
    @given(**valid_points)
    def test_permittivity_conductivity_identity(self, q, x, y, x_p, model):
        sample = evaluate(model, DimensionlessQuery.build(q=q, x=x, y=y, x_p=x_p))
        rhs = 1j * x_p ** 2 / (x * y) * sample.sigma_ratio
        assert abs((sample.epsilon - 1.0) - rhs) <= 1e-12 * abs(rhs)

    @settings(max_examples=100)
    @given(**valid_points)
    def test_conjugate_symmetry(self, q, x, y, x_p, model):
        query = DimensionlessQuery.build(q=q, x=x, y=y, x_p=x_p)
        direct = evaluate(model, query)
        mirrored = eval_negative_x(query, model)
        scale = max(1.0, abs(direct.epsilon - 1.0))
        assert abs(mirrored.epsilon - direct.epsilon.conjugate()) <= 1e-12 * scale
        assert_allclose(mirrored.sigma_ratio, direct.sigma_ratio.conjugate(), rtol=1e-11)


class TestStaticWeight:
    def test_values(self):
        assert static_weight(ResponseModel.MERMIN, 0.5, 0.1) == pytest.approx(1.0 + j_nu(0.5), abs=1e-14)
        assert static_weight(ResponseModel.CLASSICAL, 0.5, 0.1) == 0.0
        lindhard = bracket(ResponseModel.LINDHARD, 0.5, 0.1j)
        assert abs(lindhard.imag) < 1e-12
        assert static_weight(ResponseModel.LINDHARD, 0.5, 0.1) == lindhard.real


class TestEvalAll:
    def test_order_and_epsilon(self, plasma_query):
        samples = eval_all(plasma_query)
        assert [s.model for s in samples] == [ResponseModel.MERMIN, ResponseModel.LINDHARD, ResponseModel.CLASSICAL]
        assert all(s.ok and s.epsilon is not None for s in samples)

    def test_large_x_convergence(self):
        samples = eval_all(DimensionlessQuery.build(q=1.0, x=10.0, y=0.1))
        magnitudes = [abs(s.sigma_ratio) for s in samples]
        for first in magnitudes:
            for second in magnitudes:
                assert abs(first - second) <= 0.1 * second

    def test_small_q_mermin_and_lindhard(self):
        query = DimensionlessQuery.build(q=0.05, x=0.1, y=0.01)
        mermin = sigma_mermin(query).sigma_ratio
        lindhard = sigma_lindhard(query).sigma_ratio
        assert abs(abs(mermin) - abs(lindhard)) <= 0.05 * abs(lindhard)
        assert abs(mermin.imag - lindhard.imag) <= 0.05 * abs(lindhard.imag)

    def test_failed_model_does_not_abort_others(self, plasma_query, monkeypatch):
        def broken(q, z):
            raise ConvergenceError("forced", 0j, 1.0)

        monkeypatch.setitem(response._BRACKETS, ResponseModel.LINDHARD, broken)
        samples = eval_all(plasma_query)
        assert [s.ok for s in samples] == [True, False, True]
        assert "forced" in samples[1].error
        assert samples[1].sigma_ratio != samples[1].sigma_ratio  # NaN

    def test_model_subset(self, plasma_query):
        samples = eval_all(plasma_query, [ResponseModel.CLASSICAL, ResponseModel.MERMIN])
        assert [s.model for s in samples] == [ResponseModel.MERMIN, ResponseModel.CLASSICAL]


class TestDomain:
    @pytest.mark.parametrize("x, y, field", [(0.0, 0.1, "x"), (0.5, 0.0, "y")])
    def test_boundary_rejected(self, x, y, field):
        with pytest.raises(DomainError) as info:
            sigma_mermin(DimensionlessQuery.build(q=1.0, x=x, y=y))
        assert info.value.field == field

    def test_permittivity_requires_x_p(self):
        with pytest.raises(DomainError, match="x_p"):
            eps_mermin(DimensionlessQuery.build(q=1.0, x=0.5, y=0.1))
