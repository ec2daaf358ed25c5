import math

import numpy as np
import pytest

from saext import (
    InvalidParameterError,
    finite_well_levels,
    infinite_limit_study,
    paradox_report,
    well_coefficients,
)
from saext.wells import well_coefficient_quadrature

SQRT15 = math.sqrt(15.0)


class TestCoefficients:
    def test_b1(self):
        assert abs(well_coefficients(1) - 8 * SQRT15 / math.pi ** 3) < 1e-14
        assert abs(well_coefficients(1) - 0.9992772459953) < 1e-12

    def test_b2(self):
        assert abs(well_coefficients(2) + 8 * SQRT15 / (27 * math.pi ** 3)) < 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3, 7])
    def test_quadrature_oracle(self, n):
        assert abs(well_coefficients(n) - well_coefficient_quadrature(n)) < 1e-11

    def test_parseval(self):
        n = np.arange(1, 10_001)
        total = np.sum((960.0 / math.pi ** 6) / (2 * n - 1) ** 6)
        assert abs(total - 1.0) <= 1e-9

    def test_parseval_tail_order(self):
        # 1 - sum_{n<=N} b_n^2 falls off like N^-5
        def defect(limit):
            n = np.arange(1, limit + 1)
            return 1.0 - float(np.sum((960.0 / math.pi ** 6) / (2 * n - 1) ** 6))

        defects = [defect(N) for N in (4, 8, 16, 32)]
        assert all(a > b > 0 for a, b in zip(defects, defects[1:]))
        orders = [math.log(a / b) / math.log(2.0) for a, b in zip(defects, defects[1:])]
        assert all(4.5 <= p <= 5.5 for p in orders)


class TestParadox:
    def test_single_term(self):
        rep = paradox_report(1)
        assert abs(rep.mean_E_series - 480.0 / math.pi ** 4) < 1e-12

    def test_converged_values(self):
        rep = paradox_report(10_000)
        assert abs(rep.mean_E_series - 5.0) < 1e-12
        assert abs(rep.mean_E2_series - 30.0) < 1e-3
        assert abs(rep.mean_E_direct - 5.0) < 1e-11
        assert abs(rep.mean_E2_direct - 30.0) < 1e-11

    def test_naive_value_is_exactly_zero(self):
        assert paradox_report(100).naive_E2 == 0.0

    def test_boundary_term_restores_the_balance(self):
        rep = paradox_report(100)
        assert abs(rep.mean_E2_direct - rep.naive_E2 - rep.boundary_term) <= 1e-10

    def test_series_within_tail_bound_of_direct(self):
        for terms in (10, 100, 1000):
            rep = paradox_report(terms)
            tail_e = (480.0 / math.pi ** 4) / (6.0 * (2 * terms - 1) ** 3)
            tail_e2 = (240.0 / math.pi ** 2) / (2.0 * (2 * terms - 1))
            assert abs(rep.mean_E_series - rep.mean_E_direct) <= tail_e
            assert abs(rep.mean_E2_series - rep.mean_E2_direct) <= tail_e2

    def test_delta_e(self):
        rep = paradox_report(100_000)
        assert abs(rep.delta_E - math.sqrt(5.0)) < 1e-4


class TestFiniteWell:
    def test_deep_well_ground_state(self):
        v0 = 1000.0
        (level,) = finite_well_levels(v0, 1)
        # true deviation from the first-order law is 4 pi / v0^2 + O(v0^-3)
        deviation = level.kL - math.pi * (1 - 2.0 / v0)
        assert 3.9 * math.pi / v0 ** 2 <= deviation <= 4.05 * math.pi / v0 ** 2
        ratio = level.E / math.pi ** 2
        assert abs(ratio - (1.0 - 4.0 / v0)) <= 15.0 / v0 ** 2

    def test_transcendental_relation(self):
        for level in finite_well_levels(30.0, 6):
            k, r = level.kL, level.rhoL
            assert abs(math.tan(k) - 2 * k * r / (k * k - r * r)) < 1e-10

    def test_parity_relation(self):
        for level in finite_well_levels(30.0, 6):
            k, r = level.kL, level.rhoL
            assert abs(math.cos(k) + (r / k) * math.sin(k) - level.parity) < 1e-8

    def test_shallow_well_single_even_state(self):
        levels = finite_well_levels(1.0, 5)
        assert len(levels) == 1
        assert levels[0].parity == +1

    def test_level_count_oracle(self):
        # graphical count: dense sign-change scan of both parity conditions
        from saext.wells import _parity_condition

        for v0 in (1.0, 4.0, 10.0, 25.0):
            grid = np.linspace(1e-9, v0 - 1e-9, 200_000)
            count = 0
            for even in (True, False):
                vals = _parity_condition(v0, even)(grid)
                count += int(np.sum(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0))
            levels = finite_well_levels(v0, 50)
            assert len(levels) == count

    def test_wavefunction_continuity_at_walls(self):
        for level in finite_well_levels(12.0, 3):
            eps = 1e-9
            for wall in (0.0, 1.0):
                inside = level.wavefunction(np.clip(wall, eps, 1 - eps))
                left = level.wavefunction(wall - eps)
                right = level.wavefunction(wall + eps)
                assert abs(left - right) < 1e-6
                d_left = level.wavefunction_derivative(wall - eps)
                d_right = level.wavefunction_derivative(wall + eps)
                assert abs(d_left - d_right) < 1e-5

    def test_energy_monotone_toward_asymptote(self):
        v0s = [20.0, 50.0, 100.0, 500.0, 2000.0]
        energies = [finite_well_levels(v, 1)[0].E for v in v0s]
        assert all(a < b for a, b in zip(energies, energies[1:]))
        for v0, e in zip(v0s, energies):
            assert e < math.pi ** 2 * (1 - 4.0 / v0) + math.pi ** 2 * 20.0 / v0 ** 2

    def test_rejects_nonpositive_depth(self):
        with pytest.raises(InvalidParameterError):
            finite_well_levels(0.0, 3)


class TestInfiniteLimit:
    def test_deviation_second_order(self):
        study = infinite_limit_study([100.0, 1000.0, 10000.0], 1)
        assert all(1.9 <= p <= 2.1 for p in study.deviation_orders)

    def test_energy_first_order(self):
        study = infinite_limit_study([100.0, 1000.0, 10000.0], 1)
        assert abs(study.energy_order - 1.0) <= 0.1

    def test_wall_value_scaling(self):
        study = infinite_limit_study([100.0, 1000.0, 10000.0], 1)
        for row in study.rows:
            ratio = row.wall_value * row.v0 / (math.pi * math.sqrt(2.0))
            assert abs(ratio - 1.0) < 20.0 / row.v0

    def test_wall_derivative_does_not_vanish(self):
        study = infinite_limit_study([100.0, 1000.0, 10000.0], 1)
        target = math.sqrt(2.0) * math.pi   # the Dirichlet-mode slope at the wall
        for row in study.rows:
            assert abs(row.wall_derivative - target) < 20.0 / row.v0

    def test_rejects_unordered_input(self):
        with pytest.raises(InvalidParameterError):
            infinite_limit_study([100.0, 50.0], 1)
