import numpy as np

from entities.grid import Grid


class SpectrumReport:
    """Luokka, joka kuvaa ominaisarvoratkaisijan tulosta.

    Attributes:
        eigenvalues (tuple[float, ...]): Pienimmät ominaisarvot kasvavassa
            järjestyksessä.
        residuals (tuple[float, ...]): Ominaisparien suhteelliset residuaalinormit.
        grid (Grid): Diskretointihila.
        tolerance (float): Suurin hyväksytty residuaali.
        gamma (float | None): Deformaatioparametri, jos kyseessä on perheen jäsen.
        family (str): Perheen tunniste.
    """

    def __init__(
        self,
        eigenvalues: list[float],
        residuals: list[float],
        grid: Grid,
        tolerance: float,
        gamma: float | None = None,
        family: str = "",
    ) -> None:
        """Luokan konstruktori.

        Raises:
            ValueError: Ominaisarvot eivät ole aidosti kasvavia tai residuaaleja
                on eri määrä kuin ominaisarvoja.
        """

        if len(eigenvalues) != len(residuals):
            raise ValueError("Jokaisella ominaisarvolla on oltava residuaali.")

        if np.any(np.diff(eigenvalues) <= 0):
            raise ValueError("Ominaisarvojen on oltava aidosti kasvavia.")

        self.__eigenvalues: tuple[float, ...] = tuple(float(e) for e in eigenvalues)
        self.__residuals: tuple[float, ...] = tuple(float(r) for r in residuals)
        self.__grid: Grid = grid
        self.__tolerance: float = float(tolerance)
        self.__gamma: float | None = None if gamma is None else float(gamma)
        self.__family: str = family

    def __repr__(self) -> str:
        return f"SpectrumReport({list(self.eigenvalues)}, {self.grid}, {self.family})"

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        return self.__eigenvalues

    @property
    def residuals(self) -> tuple[float, ...]:
        return self.__residuals

    @property
    def grid(self) -> Grid:
        return self.__grid

    @property
    def tolerance(self) -> float:
        return self.__tolerance

    @property
    def gamma(self) -> float | None:
        return self.__gamma

    @property
    def family(self) -> str:
        return self.__family

    @property
    def converged(self) -> bool:
        return all(residual < self.__tolerance for residual in self.__residuals)

    def to_dict(self) -> dict:
        """Muuntaa raportin sanakirjaksi.

        Returns:
            dict: Raportti sanakirjana.
        """

        return {
            "family": self.family,
            "gamma": self.gamma,
            "eigenvalues": list(self.eigenvalues),
            "residuals": list(self.residuals),
            "converged": self.converged,
            "grid": self.grid.to_dict(),
        }
