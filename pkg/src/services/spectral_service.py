import logging
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from config import EIGENVALUE_TOLERANCE, RESIDUAL_TOLERANCE
from entities.discrete_hamiltonian import DiscreteHamiltonian
from entities.grid import Grid
from entities.spectrum_report import SpectrumReport

logger = logging.getLogger(__name__)


class NonFinitePotentialError(ValueError):
    """Potentiaalin näyte hilan sisäpisteessä ei ole äärellinen.

    Attributes:
        position (float): Ensimmäinen hilapiste, jossa näyte ei ole äärellinen.
    """

    def __init__(self, message: str, position: float) -> None:
        super().__init__(message)

        self.position: float = position


class SpectralService:
    """Luokka, joka vastaa diskretoiduista Hamiltonin operaattoreista ja
    niiden alimmista ominaisarvoista."""

    def build_hamiltonian(
        self, potential: Callable, grid: Grid, scaling: float
    ) -> DiscreteHamiltonian:
        """Muodostaa operaattorin −cD² + V kolmidiagonaalisen approksimaation.

        Args:
            potential (Callable): Vektoroitu potentiaali.
            grid (Grid): Hila; päätepisteissä on Dirichlet'n reunaehto.
            scaling (float): Kerroin c.

        Returns:
            DiscreteHamiltonian: Symmetrinen kolmidiagonaalinen matriisi.

        Raises:
            NonFinitePotentialError: Potentiaali ei ole äärellinen jossakin
                sisäpisteessä.
        """

        if grid.points < 4:
            raise ValueError("Hilassa on oltava vähintään neljä pistettä.")

        interior = grid.interior
        samples = np.asarray(potential(interior), dtype=float)

        finite = np.isfinite(samples)
        if not np.all(finite):
            position = float(interior[~finite][0])
            raise NonFinitePotentialError(
                f"Potentiaali ei ole äärellinen pisteessä x = {position}.", position
            )

        kinetic = scaling / grid.step**2

        return DiscreteHamiltonian(
            grid,
            samples + 2 * kinetic,
            np.full(interior.size - 1, -kinetic),
            scaling,
        )

    def lowest_eigenvalues(
        self,
        hamiltonian: DiscreteHamiltonian,
        k: int,
        tolerance: float = RESIDUAL_TOLERANCE,
        gamma: float | None = None,
        family: str = "",
    ) -> SpectrumReport:
        """Laskee k alinta ominaisarvoa Sturmin jonon puolitusmenetelmällä.

        Args:
            hamiltonian (DiscreteHamiltonian): Diskretoitu operaattori.
            k (int): Ominaisarvojen määrä.
            tolerance (float, optional): Suurin hyväksytty residuaali.
            gamma (float | None, optional): Raporttiin liitettävä parametri.
            family (str, optional): Raporttiin liitettävä perheen tunniste.

        Returns:
            SpectrumReport: Ominaisarvot ja ominaisparien residuaalit.

        Raises:
            ValueError: k ei ole välillä [1, matriisin koko].
        """

        if not 1 <= k <= hamiltonian.size:
            raise ValueError(
                f"Ominaisarvojen määrän on oltava välillä [1, {hamiltonian.size}]."
            )

        eigenvalues, eigenvectors = eigh_tridiagonal(
            hamiltonian.diagonal,
            hamiltonian.off_diagonal,
            select="i",
            select_range=(0, k - 1),
            lapack_driver="stebz",
            tol=EIGENVALUE_TOLERANCE,
        )

        residuals = []
        for index, eigenvalue in enumerate(eigenvalues):
            vector = eigenvectors[:, index]
            difference = hamiltonian.apply(vector) - eigenvalue * vector
            residuals.append(np.linalg.norm(difference) / np.linalg.norm(vector))

        logger.debug(
            "Ratkaistiin %d ominaisarvoa hilassa %s, suurin residuaali %.3g",
            k,
            hamiltonian.grid,
            max(residuals),
        )

        return SpectrumReport(
            eigenvalues, residuals, hamiltonian.grid, tolerance, gamma, family
        )

    def derivative(self, values: np.ndarray, step: float) -> np.ndarray:
        """Laskee ensimmäisen derivaatan viiden pisteen differenssillä.

        Kahdessa reunimmaisessa pisteessä kummallakin puolella tulos on NaN.
        """

        values = np.asarray(values, dtype=float)
        result = np.full(values.shape, np.nan)

        result[2:-2] = (
            values[:-4] - 8 * values[1:-3] + 8 * values[3:-1] - values[4:]
        ) / (12 * step)

        return result

    def laplacian(self, values: np.ndarray, step: float) -> np.ndarray:
        """Laskee toisen derivaatan viiden pisteen differenssillä.

        Kahdessa reunimmaisessa pisteessä kummallakin puolella tulos on NaN.
        """

        values = np.asarray(values, dtype=float)
        result = np.full(values.shape, np.nan)

        result[2:-2] = (
            -values[:-4]
            + 16 * values[1:-3]
            - 30 * values[2:-2]
            + 16 * values[3:-1]
            - values[4:]
        ) / (12 * step**2)

        return result

    def eigen_residual(
        self,
        potential: Callable,
        psi: Callable,
        energy: float,
        grid: Grid,
        scaling: float,
    ) -> float:
        """Laskee suhteellisen residuaalin ‖(−cD² + V − E)ψ‖ / ‖ψ‖.

        Args:
            potential (Callable): Vektoroitu potentiaali.
            psi (Callable): Vektoroitu aaltofunktioehdokas.
            energy (float): Ominaisarvoehdokas.
            grid (Grid): Hila, vähintään viisi pistettä.
            scaling (float): Kerroin c.

        Returns:
            float: Residuaali hilan pisteissä 2, ..., n − 3.
        """

        if grid.points < 5:
            raise ValueError("Hilassa on oltava vähintään viisi pistettä.")

        x = grid.nodes
        values = np.asarray(psi(x), dtype=float)
        curvature = self.laplacian(values, grid.step)[2:-2]

        inner = values[2:-2]
        residual = -scaling * curvature + (potential(x[2:-2]) - energy) * inner

        return float(np.linalg.norm(residual) / np.linalg.norm(inner))

    def compare_spectra(
        self, deformed: SpectrumReport, reference: SpectrumReport
    ) -> float:
        """Palauttaa suurimman eron kahden spektrin ominaisarvoissa.

        Raises:
            ValueError: Spektreissä on eri määrä ominaisarvoja.
        """

        if len(deformed.eigenvalues) != len(reference.eigenvalues):
            raise ValueError("Spektreissä on eri määrä ominaisarvoja.")

        differences = np.abs(
            np.subtract(deformed.eigenvalues, reference.eigenvalues)
        )

        return float(np.max(differences))


spectral_service = SpectralService()
