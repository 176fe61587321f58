import csv
import json
import math
import os
import tempfile
import unittest

from entities.run_config import InvalidConfigError, RunConfig
from services.darboux_service import SingularFamilyError
from services.export_service import ExportService
from services.family_service import Family, FamilyService, OscillatorFamily
from services.report_service import ReportService, VerificationError


class ShiftedOscillatorFamily(OscillatorFamily):
    def potential(self, gamma, x, allow_singular=False):
        return super().potential(gamma, x, allow_singular) + 0.01

    def norm_const(self, gamma):
        return 1.01 * super().norm_const(gamma)


class FakeFamilyService(FamilyService):
    def get(self, family: str, ell: int | None = None) -> Family:
        return ShiftedOscillatorFamily()


class TestReportService(unittest.TestCase):
    def setUp(self) -> None:
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)

        self.directory = directory.name
        self.prefix = os.path.join(self.directory, "")
        self.report_service = ReportService(export_service=ExportService())

    def _config(self, family, gammas, **options) -> RunConfig:
        return RunConfig(family, gammas, output=self.prefix, **options)

    def _read_csv(self, path: str) -> list[list[str]]:
        with open(path, encoding="utf-8", newline="") as file:
            return list(csv.reader(file))

    def _read_json(self, name: str):
        with open(os.path.join(self.directory, name), encoding="utf-8") as file:
            return json.load(file)

    def test_deform_writes_file_per_gamma(self):
        paths = self.report_service.deform(self._config("oscillator", [1.0, -1.0]))

        self.assertEqual(
            paths,
            [
                f"{self.prefix}oscillator_gamma_1.0.csv",
                f"{self.prefix}oscillator_gamma_-1.0.csv",
            ],
        )

        rows = self._read_csv(paths[0])
        self.assertEqual(rows[0], ["x", "V", "psi", "psi_normalized"])
        self.assertEqual(len(rows), 1002)
        self.assertEqual(float(rows[1][0]), -5.0)
        self.assertEqual(float(rows[-1][0]), 5.0)
        self.assertAlmostEqual(float(rows[501][2]), 1 / (1 + math.sqrt(math.pi) / 2))

    def test_deform_marks_poles_of_singular_gamma(self):
        paths = self.report_service.deform(self._config("oscillator", [-1.0]))
        rows = self._read_csv(paths[0])[1:]

        self.assertTrue(all(row[3] == "" for row in rows))
        self.assertIn("nan", [row[1] for row in rows])
        self.assertIn("nan", [row[2] for row in rows])

    def test_deform_with_require_normalized_rejects_singular_gamma(self):
        config = self._config("oscillator", [1.0, -1.0], require_normalized=True)

        with self.assertRaises(SingularFamilyError):
            self.report_service.deform(config)

        self.assertEqual(os.listdir(self.directory), [])

    def test_deform_without_gamma_raises_error(self):
        with self.assertRaises(InvalidConfigError):
            self.report_service.deform(self._config("oscillator", []))

        self.assertEqual(os.listdir(self.directory), [])

    def test_deform_rejects_grid_outside_domain(self):
        config = self._config("hydrogen", [1.0], ell=1, grid=(0, 10, 101))

        with self.assertRaises(InvalidConfigError):
            self.report_service.deform(config)

    def test_deform_appends_matched_pair(self):
        paths = self.report_service.deform(
            self._config("oscillator", [], matched_pair=True)
        )

        self.assertEqual(len(paths), 2)
        self.assertTrue(all(os.path.exists(path) for path in paths))

    def test_deform_writes_json(self):
        paths = self.report_service.deform(
            self._config("hydrogen", [1.0, 0.1], ell=1, output_format="json")
        )

        self.assertEqual(paths[0], f"{self.prefix}hydrogen_l1_gamma_1.0.json")

        regular = self._read_json(os.path.basename(paths[0]))
        singular = self._read_json(os.path.basename(paths[1]))

        self.assertTrue(regular["regular"])
        self.assertEqual(len(regular["psi_normalized"]), 1000)
        self.assertEqual(regular["grid"]["points"], 1000)
        self.assertFalse(singular["regular"])
        self.assertIsNone(singular["psi_normalized"])

    def test_deform_normalized_state_has_unit_norm(self):
        paths = self.report_service.deform(
            self._config("hydrogen", [1.0], ell=1, output_format="json")
        )
        member = self._read_json(os.path.basename(paths[0]))

        r = member["x"]
        density = [(psi * x) ** 2 for x, psi in zip(r, member["psi_normalized"])]
        step = r[1] - r[0]
        integral = step * (sum(density) - (density[0] + density[-1]) / 2)

        self.assertAlmostEqual(integral, 1.0, delta=1e-2)

    def test_deform_writes_limit_state_for_infinite_gamma(self):
        paths = self.report_service.deform(
            self._config("hydrogen", [math.inf], ell=1, output_format="json")
        )
        member = self._read_json(os.path.basename(paths[0]))

        self.assertTrue(member["regular"])
        for r, value in zip(member["x"], member["psi_normalized"]):
            self.assertIsNotNone(value)
            self.assertAlmostEqual(value, 2 * math.exp(-r), delta=1e-12)

    def test_deform_writes_signed_limit_state_for_negative_infinity(self):
        paths = self.report_service.deform(
            self._config("oscillator", [-math.inf], output_format="json")
        )
        member = self._read_json(os.path.basename(paths[0]))

        for x, value in zip(member["x"], member["psi_normalized"]):
            self.assertIsNotNone(value)
            self.assertAlmostEqual(
                value, -(math.pi**-0.25) * math.exp(-(x**2) / 2), delta=1e-12
            )

    def test_deform_hydrogen_members_are_finite(self):
        cases = [
            self._config("hydrogen", [2e4], ell=3),
            self._config("hydrogen", [], ell=1, matched_pair=True),
            self._config("hydrogen", [], ell=2, matched_pair=True),
        ]

        for config in cases:
            paths = self.report_service.deform(config)

            self.assertEqual(len(paths), 1 if config.gammas else 2)

            for path in paths:
                rows = self._read_csv(path)

                self.assertEqual(len(rows), 1001, path)
                for row in rows[1:]:
                    self.assertTrue(
                        all(math.isfinite(float(value)) for value in row), path
                    )

    def test_deform_is_deterministic(self):
        config = self._config("oscillator", [0.5])

        path = self.report_service.deform(config)[0]
        with open(path, encoding="utf-8") as file:
            first = file.read()

        self.report_service.deform(config)
        with open(path, encoding="utf-8") as file:
            second = file.read()

        self.assertEqual(first, second)

    def test_norm_table(self):
        rows = self.report_service.norm_table(
            self._config("oscillator", [1.0, math.sqrt(math.pi), -3.0])
        )

        self.assertEqual(len(rows), 3)
        self.assertAlmostEqual(rows[0]["N_closed_form"], 1.2507, places=4)
        self.assertTrue(all(row["abs_diff"] < 1e-8 for row in rows))
        self.assertEqual(self._read_json("norm-table.json"), rows)

    def test_norm_table_for_hydrogen(self):
        rows = self.report_service.norm_table(
            self._config("hydrogen", [1.0, -2.0], ell=1)
        )

        self.assertAlmostEqual(rows[0]["N_quadrature"], math.sqrt(3), places=8)
        self.assertAlmostEqual(rows[1]["N_quadrature"], math.sqrt(18), places=8)

    def test_norm_table_rejects_singular_gamma(self):
        with self.assertRaises(SingularFamilyError):
            self.report_service.norm_table(self._config("oscillator", [-1.0]))

    def test_norm_table_detects_wrong_constant(self):
        report_service = ReportService(family_service=FakeFamilyService())

        with self.assertRaises(VerificationError) as context:
            report_service.norm_table(self._config("oscillator", [1.0]))

        self.assertEqual(context.exception.gamma, 1.0)

    def test_matched_pairs(self):
        report = self.report_service.matched_pairs(
            self._config("hydrogen", [], ell=2)
        )

        self.assertEqual(report["family"], "hydrogen")
        self.assertEqual(report["ell"], 2)
        self.assertAlmostEqual(report["gamma_plus"], 12 + math.sqrt(145), places=12)
        self.assertAlmostEqual(report["gamma_minus"], 12 - math.sqrt(145), places=12)

        for norm in report["achieved_norms"]:
            self.assertAlmostEqual(norm, report["target_norm"], places=10)

        self.assertEqual(self._read_json("matched-pairs.json")["ell"], 2)

    def test_verify_oscillator(self):
        certificate = self.report_service.verify(
            self._config("oscillator", [1.0, -2.5], k=4)
        )

        self.assertTrue(certificate["passed"])
        self.assertEqual(certificate["k"], 4)
        self.assertEqual(len(certificate["results"]), 2)

        for result in certificate["results"]:
            self.assertLess(result["max_deviation"], 2e-4)
            self.assertLess(result["max_exact_deviation"], 2e-4)
            self.assertEqual(result["exact_eigenvalues"], [0.5, 1.5, 2.5, 3.5])

        self.assertTrue(self._read_json("verify.json")["passed"])

    def test_verify_hydrogen(self):
        certificate = self.report_service.verify(
            self._config("hydrogen", [-2.0], ell=1, k=3, matched_pair=True)
        )

        self.assertTrue(certificate["passed"])
        self.assertEqual(len(certificate["results"]), 3)
        self.assertEqual(certificate["grid"]["points"], 12001)

    def test_verify_generic_defaults_to_single_state(self):
        certificate = self.report_service.verify(self._config("generic", [0.5]))

        self.assertTrue(certificate["passed"])
        self.assertEqual(certificate["k"], 1)

    def test_verify_generic_rejects_too_many_states(self):
        with self.assertRaises(InvalidConfigError):
            self.report_service.verify(self._config("generic", [0.5], k=2))

    def test_verify_rejects_grid_too_small_for_spectrum(self):
        for grid, k in [((-5, 5, 3), 1), ((-5, 5, 10), 20)]:
            config = self._config("oscillator", [1.0], grid=grid, k=k)

            with self.assertRaises(InvalidConfigError):
                self.report_service.verify(config)

    def test_unbuildable_hydrogen_seed_is_invalid_config(self):
        with self.assertRaises(InvalidConfigError):
            self.report_service.matched_pairs(self._config("hydrogen", [], ell=100))

    def test_verify_rejects_singular_gamma(self):
        with self.assertRaises(SingularFamilyError):
            self.report_service.verify(self._config("hydrogen", [0.1], ell=1, k=2))

    def test_verify_detects_broken_isospectrality(self):
        report_service = ReportService(family_service=FakeFamilyService())

        with self.assertRaises(VerificationError) as context:
            report_service.verify(self._config("oscillator", [1.0], k=2))

        self.assertEqual(context.exception.gamma, 1.0)
        self.assertAlmostEqual(context.exception.deviation, 0.01, places=4)
        self.assertFalse(self._read_json("verify.json")["passed"])

    def test_quadrature_norm(self):
        family = FamilyService().get("oscillator")

        self.assertAlmostEqual(
            self.report_service.quadrature_norm(family, 1.0),
            family.norm_const(1.0),
            places=9,
        )
