import math
import unittest

import numpy as np

from entities.grid import Grid
from entities.grid_function import GridFunction
from lib.evaluation import central_difference
from lib.specfun import adaptive_quadrature, gamma_ell, incomplete_pe_integral
from services.darboux_service import DarbouxService, SingularFamilyError
from services.hydrogen_service import HydrogenService, QuantumNumberError
from services.spectral_service import SpectralService

GAMMA_ONE_1 = (1 - 5 * math.exp(-2)) / 4

REGULAR_CASES = [(1, 1.0), (1, -2.0), (2, 30.0), (2, -5.0), (3, 2e4), (3, -1e3)]


def _radial_density(function, ell, gamma):
    def density(r: float) -> float:
        if r <= 0:
            return 0.0

        return float(function(ell, gamma, r) ** 2 * r**2)

    return density


class TestHydrogenService(unittest.TestCase):
    def setUp(self) -> None:
        self.spectral = SpectralService()
        self.darboux = DarbouxService()
        self.hydrogen = HydrogenService(self.darboux, self.spectral)
        self.r = np.linspace(0.1, 20, 200)

    def test_radial_eigenfunction_values(self):
        self.assertAlmostEqual(self.hydrogen.radial_eigenfunction(1, 0, 0.0), 2.0)
        self.assertAlmostEqual(
            self.hydrogen.radial_eigenfunction(2, 0, 2.0), 0.0, places=14
        )
        self.assertAlmostEqual(
            self.hydrogen.radial_eigenfunction(2, 1, 1.0),
            math.exp(-0.5) / (2 * math.sqrt(6)),
            places=14,
        )

    def test_radial_eigenfunction_rejects_invalid_state(self):
        with self.assertRaises(QuantumNumberError):
            self.hydrogen.radial_eigenfunction(1, 1, 1.0)

        with self.assertRaises(QuantumNumberError):
            self.hydrogen.radial_eigenfunction(0, 0, 1.0)

    def test_radial_eigenfunction_rejects_negative_radius(self):
        with self.assertRaises(ValueError):
            self.hydrogen.radial_eigenfunction(1, 0, -1.0)

    def test_radial_eigenfunctions_are_normalized(self):
        for n, ell in [(1, 0), (2, 0), (2, 1), (3, 1), (4, 2)]:
            result = adaptive_quadrature(
                lambda r, n=n, ell=ell: self.hydrogen.radial_eigenfunction(n, ell, r)
                ** 2
                * r**2,
                0,
                math.inf,
            )

            self.assertAlmostEqual(result.value, 1.0, places=9)

    def test_radial_derivative(self):
        r = np.linspace(0.3, 20, 50)

        for n, ell in [(2, 0), (3, 1), (4, 2), (3, 2)]:
            numeric = central_difference(
                lambda t, n=n, ell=ell: self.hydrogen.radial_eigenfunction(n, ell, t),
                r,
            )

            np.testing.assert_allclose(
                self.hydrogen.radial_derivative(n, ell, r), numeric, atol=1e-8
            )

    def test_ladder_coefficient(self):
        self.assertAlmostEqual(
            self.hydrogen.ladder_coefficient(2, 1), math.sqrt(3) / 2, places=14
        )
        self.assertAlmostEqual(
            self.hydrogen.ladder_coefficient(3, 2), math.sqrt(5) / 6, places=14
        )

    def test_ladder_lowers_channel(self):
        for n, ell in [(2, 1), (3, 1), (3, 2)]:
            expected = self.hydrogen.ladder_coefficient(
                n, ell
            ) * self.hydrogen.radial_eigenfunction(n, ell - 1, self.r)

            np.testing.assert_allclose(
                self.hydrogen.ladder_apply("-", n, ell, self.r), expected, atol=1e-8
            )

    def test_ladder_raises_channel(self):
        for n, ell in [(2, 1), (3, 1), (3, 2)]:
            expected = self.hydrogen.ladder_coefficient(
                n, ell
            ) * self.hydrogen.radial_eigenfunction(n, ell, self.r)

            np.testing.assert_allclose(
                self.hydrogen.ladder_apply("+", n, ell, self.r), expected, atol=1e-8
            )

    def test_ladder_rejects_invalid_arguments(self):
        with self.assertRaises(QuantumNumberError):
            self.hydrogen.ladder_apply("-", 2, 2, self.r)

        with self.assertRaises(QuantumNumberError):
            self.hydrogen.ladder_apply("-", 2, 0, self.r)

        with self.assertRaises(ValueError):
            self.hydrogen.ladder_apply("*", 2, 1, self.r)

    def test_beta_ell_value(self):
        expected = math.exp(-2) / (1 - GAMMA_ONE_1)

        self.assertAlmostEqual(self.hydrogen.beta_ell(1, 1.0, 1.0), expected, places=12)
        self.assertAlmostEqual(expected, 0.14723655, places=7)

    def test_beta_ell_without_deformation(self):
        r = np.linspace(0.5, 10, 20)

        np.testing.assert_allclose(
            self.hydrogen.beta_ell(2, math.inf, r), 2 / r - 0.5, atol=1e-14
        )

    def test_beta_ell_solves_riccati_equation(self):
        ell, gamma = 2, 30.0
        r = np.linspace(0.1, 30, 500)
        beta = self.hydrogen.beta_ell(ell, gamma, r)
        v_slope = central_difference(
            lambda t: self.hydrogen.beta_ell(ell, gamma, t) - (ell / t - 1 / ell), r
        )
        slope = -ell / r**2 + v_slope

        residual = -slope + beta**2 - (-2 / r + ell * (ell + 1) / r**2 + 1 / ell**2)

        self.assertLess(np.max(np.abs(residual)), 1e-8)

    def test_beta_ell_rejects_singular_gamma(self):
        with self.assertRaises(SingularFamilyError):
            self.hydrogen.beta_ell(2, 10.0, 1.0)

    def test_deformed_potential_matches_closed_form(self):
        for ell, gamma in REGULAR_CASES[:4]:
            r = np.linspace(0.2, 15, 100)

            def correction(t, ell=ell, gamma=gamma):
                return (
                    2
                    * np.power(t, 2 * ell)
                    * np.exp(-2 * t / ell)
                    / (gamma - incomplete_pe_integral(ell, t))
                )

            expected = (
                -2 / r + ell * (ell - 1) / r**2 + central_difference(correction, r)
            )

            np.testing.assert_allclose(
                self.hydrogen.deformed_potential(ell, gamma, r), expected, atol=1e-7
            )

    def test_deformed_potential_tends_to_undeformed(self):
        for ell, gamma in REGULAR_CASES[:4]:
            self.assertAlmostEqual(
                self.hydrogen.deformed_potential(ell, gamma, 80.0),
                self.hydrogen.undeformed_potential(ell, 80.0),
                places=10,
            )

        r = np.linspace(0.5, 10, 20)
        np.testing.assert_allclose(
            self.hydrogen.deformed_potential(1, 1e12, r), -2 / r, atol=1e-9
        )

    def test_deformed_potential_rejects_singular_gamma(self):
        with self.assertRaises(SingularFamilyError) as context:
            self.hydrogen.deformed_potential(2, 10.0, 1.0)

        self.assertEqual(context.exception.gamma, 10.0)

        values = self.hydrogen.deformed_potential(2, 10.0, 0.5, allow_singular=True)
        self.assertTrue(math.isfinite(values))

    def test_deformed_radial_value(self):
        self.assertAlmostEqual(
            self.hydrogen.deformed_radial(1, 1.0, 1.0),
            math.exp(-1) / (1 - GAMMA_ONE_1),
            places=12,
        )
        self.assertAlmostEqual(
            self.hydrogen.deformed_radial(1, 1.0, 1.0), 0.4002304, places=7
        )

    def test_deformed_radial_has_no_nodes(self):
        grid = Grid(0.05, 40, 1000)

        for ell, gamma in REGULAR_CASES:
            function = GridFunction.sample(
                lambda r, ell=ell, gamma=gamma: self.hydrogen.deformed_radial(
                    ell, gamma, r
                ),
                grid,
            )

            self.assertEqual(function.node_count(), 0)

    def test_norm_const_values(self):
        self.assertAlmostEqual(
            self.hydrogen.hydrogen_norm_const(1, 1.0), math.sqrt(3), places=12
        )
        self.assertAlmostEqual(
            self.hydrogen.hydrogen_norm_const(2, 48.0), math.sqrt(48), places=12
        )
        self.assertAlmostEqual(
            self.hydrogen.hydrogen_norm_const(1, -2.0), math.sqrt(18), places=12
        )

    def test_norm_const_rejects_singular_gamma(self):
        for ell, gamma in [(1, 0.0), (1, 0.1), (2, 10.0), (3, 100.0)]:
            with self.assertRaises(SingularFamilyError):
                self.hydrogen.hydrogen_norm_const(ell, gamma)

    def test_norm_const_normalizes_deformed_radial(self):
        for ell, gamma in REGULAR_CASES:
            result = adaptive_quadrature(
                _radial_density(self.hydrogen.deformed_radial, ell, gamma),
                0,
                math.inf,
            )
            norm = self.hydrogen.hydrogen_norm_const(ell, gamma)

            self.assertAlmostEqual(norm**2 * result.value, 1.0, delta=1e-8)

    def test_matched_target(self):
        self.assertAlmostEqual(self.hydrogen.matched_target(1), 2.0)
        self.assertAlmostEqual(
            self.hydrogen.matched_target(2), 1 / (2 * math.sqrt(6)), places=14
        )
        self.assertAlmostEqual(
            self.hydrogen.matched_target(3), 2 / (9 * math.sqrt(120)), places=14
        )

    def test_matched_pairs(self):
        gamma_plus, gamma_minus = self.hydrogen.hydrogen_matched_pair(1)
        self.assertAlmostEqual(gamma_plus, (1 + math.sqrt(65)) / 8, places=12)
        self.assertAlmostEqual(gamma_minus, (1 - math.sqrt(65)) / 8, places=12)

        gamma_plus, gamma_minus = self.hydrogen.hydrogen_matched_pair(2)
        self.assertAlmostEqual(gamma_plus, 12 + math.sqrt(145), places=12)
        self.assertAlmostEqual(gamma_minus, 12 - math.sqrt(145), places=12)

    def test_matched_pairs_reach_target(self):
        for ell in [1, 2, 3]:
            target = self.hydrogen.matched_target(ell)

            for gamma in self.hydrogen.hydrogen_matched_pair(ell):
                self.assertTrue(gamma < 0 or gamma > gamma_ell(ell))
                self.assertAlmostEqual(
                    self.hydrogen.hydrogen_norm_const(ell, gamma) / target,
                    1.0,
                    places=10,
                )

    def test_exact_spectrum(self):
        np.testing.assert_allclose(
            self.hydrogen.exact_spectrum(1, 3), [-1.0, -0.25, -1 / 9], rtol=1e-15
        )
        np.testing.assert_allclose(
            self.hydrogen.exact_spectrum(2, 2), [-0.25, -1 / 9], rtol=1e-15
        )

    def test_seed_is_cached_and_checked(self):
        self.assertIs(self.hydrogen.seed(2), self.hydrogen.seed(2))

        with self.assertRaises(QuantumNumberError):
            self.hydrogen.seed(0)

    def test_modified_ladder_factorizes_hamiltonian(self):
        grid = Grid(0.5, 30, 3000)
        state = GridFunction.sample(
            lambda r: self.hydrogen.radial_eigenfunction(3, 1, r), grid
        )

        for gamma in [-5.0, 1.25]:
            lowered = self.hydrogen.modified_ladder_apply("-", 1, gamma, state)
            raised = self.hydrogen.modified_ladder_apply("+", 1, gamma, lowered)

            np.testing.assert_allclose(
                raised.values[4:-4], (8 / 9) * state.values[4:-4], atol=1e-6
            )

    def test_modified_ladder_without_deformation(self):
        grid = Grid(0.5, 30, 3000)
        state = GridFunction.sample(
            lambda r: self.hydrogen.radial_eigenfunction(3, 1, r), grid
        )

        lowered = self.hydrogen.modified_ladder_apply("-", 1, math.inf, state)
        expected = self.hydrogen.ladder_apply("-", 3, 1, grid.nodes)

        np.testing.assert_allclose(lowered.values[2:-2], expected[2:-2], atol=1e-7)

    def test_modified_ladder_rejects_origin(self):
        grid = Grid(0, 10, 101)
        state = GridFunction(grid, np.zeros(101))

        with self.assertRaises(ValueError):
            self.hydrogen.modified_ladder_apply("-", 1, 1.0, state)

    def test_reduced_ground_state_is_exact_eigenpair(self):
        grid = Grid(0.01, 60, 6000)

        for ell, gamma in [*REGULAR_CASES[:4], (3, 13000.0)]:
            seed = self.hydrogen.seed(ell)
            residual = self.spectral.eigen_residual(
                lambda r, ell=ell, gamma=gamma: self.hydrogen.deformed_potential(
                    ell, gamma, r
                ),
                lambda r, seed=seed, gamma=gamma: self.darboux.deform_ground_state(
                    seed, gamma, r
                ),
                -1 / ell**2,
                grid,
                1.0,
            )

            self.assertLess(residual, 1e-6)

    def test_undeformed_ground_state_is_exact_eigenpair(self):
        grid = Grid(0.01, 60, 6000)

        for ell in [1, 2]:
            residual = self.spectral.eigen_residual(
                lambda r, ell=ell: self.hydrogen.undeformed_potential(ell, r),
                self.hydrogen.seed(ell).f0,
                -1 / ell**2,
                grid,
                1.0,
            )

            self.assertLess(residual, 1e-6)

    def test_radial_eigenfunctions_are_undeformed_eigenpairs(self):
        grid = Grid(0.01, 60, 6000)

        for n, ell in [(1, 0), (2, 1), (3, 2), (3, 1)]:
            residual = self.spectral.eigen_residual(
                lambda r, ell=ell: self.hydrogen.undeformed_potential(ell + 1, r),
                lambda r, n=n, ell=ell: r * self.hydrogen.radial_eigenfunction(
                    n, ell, r
                ),
                -1 / n**2,
                grid,
                1.0,
            )

            self.assertLess(residual, 1e-6, (n, ell))
