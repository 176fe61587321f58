import logging
import math

import numpy as np

from config import NORM_TOLERANCE
from entities.grid import Grid
from entities.run_config import InvalidConfigError, RunConfig
from lib.specfun import adaptive_quadrature
from services.darboux_service import DarbouxService
from services.darboux_service import darboux_service as default_darboux_service
from services.export_service import ExportService
from services.export_service import export_service as default_export_service
from services.family_service import Family, FamilyService
from services.family_service import family_service as default_family_service
from services.spectral_service import SpectralService
from services.spectral_service import spectral_service as default_spectral_service

logger = logging.getLogger(__name__)

DEFAULT_K = 6
MATCHED_TOLERANCE = 1e-10


class VerificationError(Exception):
    """Tarkistus ei läpäissyt toleranssia.

    Attributes:
        gamma (float | None): Pahimman tapauksen parametri.
        deviation (float): Pahimman tapauksen poikkeama.
    """

    def __init__(self, message: str, gamma: float | None, deviation: float) -> None:
        super().__init__(message)

        self.gamma: float | None = gamma
        self.deviation: float = deviation


class ReportService:
    """Luokka, joka vastaa komentorivikomentojen laskennasta ja tulosteista."""

    def __init__(
        self,
        family_service: FamilyService = default_family_service,
        darboux_service: DarbouxService = default_darboux_service,
        spectral_service: SpectralService = default_spectral_service,
        export_service: ExportService = default_export_service,
    ) -> None:
        self.__families: FamilyService = family_service
        self.__darboux: DarbouxService = darboux_service
        self.__spectral: SpectralService = spectral_service
        self.__exporter: ExportService = export_service

    def deform(self, config: RunConfig) -> list[str]:
        """Kirjoittaa jokaiselle parametrille potentiaalin ja perustilan hilassa.

        Singulaarisen parametrin navat kirjoitetaan arvona nan, ja normitettu
        sarake jätetään tyhjäksi.

        Args:
            config (RunConfig): Komennon asetukset.

        Returns:
            list[str]: Kirjoitettujen tiedostojen polut.

        Raises:
            InvalidConfigError: Parametrilista on tyhjä tai hila on perheen
                määrittelyvälin ulkopuolella.
            SingularFamilyError: Singulaarinen parametri, kun normitettu
                aaltofunktio vaaditaan.
        """

        family = self.__family(config)
        gammas = self.__gammas(config, family)
        grid = self.__grid(config, family, verify=False)

        if not family.seed.contains(grid.nodes):
            raise InvalidConfigError(
                f"Hila {grid} ei ole perheen {family.label} määrittelyvälillä "
                f"{family.seed.domain}."
            )

        if config.require_normalized:
            for gamma in gammas:
                if not family.classify(gamma).regular:
                    raise family.singular_error(gamma)

        paths = []

        for gamma in gammas:
            path = (
                f"{config.output}{family.label}_gamma_{gamma!r}"
                f".{config.output_format}"
            )
            member = self.__sample_member(family, gamma, grid)

            if config.output_format == "csv":
                rows = list(
                    zip(
                        member["x"],
                        member["V"],
                        member["psi"],
                        member["psi_normalized"] or [None] * grid.points,
                    )
                )
                self.__exporter.write_csv(rows, path)
            else:
                self.__exporter.write_json(member, path)

            paths.append(path)

        return paths

    def norm_table(self, config: RunConfig) -> list[dict]:
        """Vertaa suljetun muodon normitusvakiota numeeriseen integraaliin.

        Returns:
            list[dict]: Rivit {gamma, N_closed_form, N_quadrature, abs_diff}.

        Raises:
            InvalidConfigError: Parametrilista on tyhjä.
            SingularFamilyError: Jokin parametri on singulaarinen.
            VerificationError: Jokin ero ylittää toleranssin.
        """

        family = self.__family(config)
        gammas = self.__gammas(config, family)

        rows = []
        for gamma in gammas:
            closed_form = family.norm_const(gamma)
            quadrature = self.quadrature_norm(family, gamma)

            rows.append(
                {
                    "gamma": gamma,
                    "N_closed_form": closed_form,
                    "N_quadrature": quadrature,
                    "abs_diff": abs(closed_form - quadrature),
                }
            )

        self.__write(config, "norm-table", rows)

        worst = max(rows, key=lambda row: row["abs_diff"])
        if worst["abs_diff"] >= NORM_TOLERANCE:
            raise VerificationError(
                f"Normitusvakiot eroavat parametrilla γ = {worst['gamma']}: "
                f"ero {worst['abs_diff']:.3g}.",
                worst["gamma"],
                worst["abs_diff"],
            )

        return rows

    def matched_pairs(self, config: RunConfig) -> dict:
        """Laskee parametriparin, jolla normitusvakio säilyy.

        Raises:
            VerificationError: Saavutettu normitusvakio poikkeaa tavoitteesta.
        """

        family = self.__family(config)
        gamma_plus, gamma_minus = family.matched_pair()
        target = family.matched_target()
        achieved = [family.norm_const(gamma_plus), family.norm_const(gamma_minus)]

        report = {
            "family": family.name,
            "ell": config.ell,
            "gamma_plus": gamma_plus,
            "gamma_minus": gamma_minus,
            "target_norm": target,
            "achieved_norms": achieved,
        }

        self.__write(config, "matched-pairs", report)

        deviation = max(abs(norm - target) for norm in achieved)
        if deviation > MATCHED_TOLERANCE:
            raise VerificationError(
                f"Sovitettu normitusvakio poikkeaa tavoitteesta {deviation:.3g}.",
                None,
                deviation,
            )

        return report

    def verify(self, config: RunConfig) -> dict:
        """Varmentaa perheen jäsenten isospektraalisuuden numeerisesti.

        Jokaisen parametrin deformoidun potentiaalin k alinta ominaisarvoa
        verrataan samassa hilassa laskettuun deformoimattomaan spektriin.

        Returns:
            dict: Varmenne, jossa on spektriraportti jokaiselle parametrille.

        Raises:
            InvalidConfigError: Parametrilista on tyhjä tai k on liian suuri.
            SingularFamilyError: Jokin parametri on singulaarinen.
            VerificationError: Jokin tarkistus ei läpäissyt toleranssia.
        """

        family = self.__family(config)
        gammas = self.__gammas(config, family)
        grid = self.__grid(config, family, verify=True)
        k = self.__k(config, family)
        tolerance = family.verify_tolerance

        if grid.points < 4:
            raise InvalidConfigError(
                "Varmennushilassa on oltava vähintään neljä pistettä, "
                f"ei {grid.points}."
            )

        if k > grid.points - 2:
            raise InvalidConfigError(
                f"Hilassa {grid} on vain {grid.points - 2} sisäpistettä, "
                f"joten {k} ominaisarvoa ei voi laskea."
            )

        if not family.seed.contains(grid.interior):
            raise InvalidConfigError(
                f"Hilan {grid} sisäpisteet eivät ole perheen {family.label} "
                f"määrittelyvälillä {family.seed.domain}."
            )

        for gamma in gammas:
            if not family.classify(gamma).regular:
                raise family.singular_error(gamma)

        reference = self.__spectral.lowest_eigenvalues(
            self.__spectral.build_hamiltonian(
                family.undeformed_potential, grid, family.scaling
            ),
            k,
            family=family.name,
        )
        exact = family.exact_spectrum(k)

        results = []
        for gamma in gammas:
            hamiltonian = self.__spectral.build_hamiltonian(
                lambda x, gamma=gamma: family.potential(gamma, x), grid, family.scaling
            )
            report = self.__spectral.lowest_eigenvalues(
                hamiltonian, k, gamma=gamma, family=family.name
            )

            deviation = self.__spectral.compare_spectra(report, reference)
            exact_deviation = float(
                np.max(np.abs(np.subtract(report.eigenvalues, exact)))
            )

            result = report.to_dict()
            result["reference_eigenvalues"] = list(reference.eigenvalues)
            result["exact_eigenvalues"] = exact
            result["max_deviation"] = deviation
            result["max_exact_deviation"] = exact_deviation
            result["passed"] = bool(deviation <= tolerance and report.converged)
            results.append(result)

            logger.info(
                "γ = %r: suurin ero %.3g, ero tarkkaan spektriin %.3g",
                gamma,
                deviation,
                exact_deviation,
            )

        certificate = {
            "family": family.name,
            "ell": config.ell,
            "k": k,
            "tolerance": tolerance,
            "grid": grid.to_dict(),
            "results": results,
            "passed": all(result["passed"] for result in results),
        }

        self.__write(config, "verify", certificate)

        if not certificate["passed"]:
            worst = max(
                results,
                key=lambda result: (not result["passed"], result["max_deviation"]),
            )
            raise VerificationError(
                f"Isospektraalisuus ei toteudu parametrilla γ = {worst['gamma']}: "
                f"suurin ero {worst['max_deviation']:.3g}, toleranssi {tolerance}.",
                worst["gamma"],
                worst["max_deviation"],
            )

        return certificate

    def quadrature_norm(self, family: Family, gamma: float) -> float:
        """Laskee normitusvakion numeerisesti integraalista ∫ψ̃² dμ."""

        seed = family.seed

        def density(point: float) -> float:
            if not seed.contains(point):
                return 0.0

            value = family.ground_state(gamma, point)

            return float(value**2 * family.measure(point))

        result = adaptive_quadrature(density, *seed.domain)

        return 1 / math.sqrt(result.value)

    def __sample_member(self, family: Family, gamma: float, grid: Grid) -> dict:
        x = grid.nodes
        parameter = family.classify(gamma)

        potential = np.array(family.potential(gamma, x, allow_singular=True))
        psi = np.array(family.ground_state(gamma, x, allow_singular=True))

        denominator = np.asarray(
            self.__darboux.denominator(family.seed, parameter, x), dtype=float
        )
        signs = np.sign(denominator)
        changes = np.flatnonzero(signs[:-1] != signs[1:])
        poles = np.union1d(changes, changes + 1)

        potential[poles] = np.nan
        psi[poles] = np.nan

        normalized = None
        if parameter.regular:
            normalized = list(family.normalized_ground_state(gamma, x))

        return {
            "family": family.name,
            "gamma": gamma,
            "regular": parameter.regular,
            "grid": grid.to_dict(),
            "x": list(x),
            "V": list(potential),
            "psi": list(psi),
            "psi_normalized": normalized,
        }

    def __write(self, config: RunConfig, command: str, data: dict | list) -> None:
        self.__exporter.write_json(data, f"{config.output}{command}.json")

    def __family(self, config: RunConfig) -> Family:
        try:
            return self.__families.get(config.family, config.ell)
        except (ValueError, OverflowError) as error:
            raise InvalidConfigError(str(error)) from error

    def __gammas(self, config: RunConfig, family: Family) -> list[float]:
        gammas = list(config.gammas)

        if config.matched_pair:
            gammas.extend(family.matched_pair())

        if not gammas:
            raise InvalidConfigError("Anna vähintään yksi parametri --gamma.")

        return gammas

    def __grid(self, config: RunConfig, family: Family, verify: bool) -> Grid:
        return self.__families.grid_for(family, config.grid, verify)

    def __k(self, config: RunConfig, family: Family) -> int:
        k = config.k if config.k is not None else DEFAULT_K

        if family.max_k is not None:
            if config.k is None:
                return family.max_k

            if k > family.max_k:
                raise InvalidConfigError(
                    f"Perheellä {family.name} on vain {family.max_k} sidottua tilaa."
                )

        return k


report_service = ReportService()
