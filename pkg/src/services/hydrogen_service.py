import math

import numpy as np

from entities.gamma_parameter import GammaParameter
from entities.grid_function import GridFunction
from entities.radial_state import RadialState
from entities.seed_spec import SeedSpec
from lib.evaluation import scalar_or_array
from lib.specfun import assoc_laguerre, gamma_ell, incomplete_pe_integral
from services.darboux_service import DarbouxService, SingularFamilyError
from services.darboux_service import darboux_service as default_darboux_service
from services.spectral_service import SpectralService
from services.spectral_service import spectral_service as default_spectral_service

DIRECTIONS = ("+", "-")


class QuantumNumberError(ValueError):
    pass


def _state(n: int, ell: int) -> RadialState:
    try:
        return RadialState(n, ell)
    except ValueError as error:
        raise QuantumNumberError(str(error)) from error


def _check_ell(ell: int) -> None:
    if int(ell) != ell or ell < 1:
        raise QuantumNumberError(f"Kvanttiluvun ℓ on oltava vähintään 1, ei {ell}.")


def _check_radius(r: float | np.ndarray) -> np.ndarray:
    radius = np.asarray(r, dtype=float)

    if np.any(radius < 0):
        raise ValueError("Säde ei voi olla negatiivinen.")

    return radius


def build_seed(ell: int) -> SeedSpec:
    """Muodostaa vetyperheen siemenen kanavalle ℓ − 1.

    Siemen on redusoitu perustila F0 = r^ℓ e^{−r/ℓ}, jonka ominaisarvo on
    −1/ℓ² potentiaalissa ℓ(ℓ − 1)/r² − 2/r.
    """

    _check_ell(ell)

    return SeedSpec(
        f"hydrogen_l{ell}",
        (0.0, math.inf),
        f=lambda r: ell * (ell - 1) / np.square(r) - 2 / np.asarray(r) + 1 / ell**2,
        f0=lambda r: np.power(r, ell) * np.exp(-np.asarray(r) / ell),
        phi=lambda r: 1 / ell - ell / np.asarray(r, dtype=float),
        sigma=-1,
        energy_offset=-1 / ell**2,
        scaling=1.0,
        phi_derivative=lambda r: ell / np.square(r),
        cumulative=lambda r: incomplete_pe_integral(ell, r),
        total=gamma_ell(ell),
    )


class HydrogenService:
    """Luokka, joka vastaa radiaalisen vetyatomin yksiparametrisesta perheestä
    ja Infeldin–Hullin tikasoperaattoreista.

    Yksiköissä ominaisarvot ovat λ_n = −1/n² ja potentiaali on −2/r.
    """

    def __init__(
        self,
        darboux: DarbouxService = default_darboux_service,
        spectral: SpectralService = default_spectral_service,
    ) -> None:
        self.__darboux: DarbouxService = darboux
        self.__spectral: SpectralService = spectral
        self.__seeds: dict[int, SeedSpec] = {}

    def seed(self, ell: int) -> SeedSpec:
        _check_ell(ell)

        if ell not in self.__seeds:
            self.__seeds[ell] = build_seed(ell)

        return self.__seeds[ell]

    def classify(self, ell: int, gamma: float) -> GammaParameter:
        return self.__darboux.classify_gamma(self.seed(ell), gamma)

    def regularity_condition(self, ell: int) -> str:
        return f"γ_ℓ < 0 tai γ_ℓ > Γ_ℓ = {gamma_ell(ell)}"

    def radial_eigenfunction(
        self, n: int, ell: int, r: float | np.ndarray
    ) -> float | np.ndarray:
        """Laskee normitetun radiaalifunktion
        R_{n,ℓ}(r) = C_{n,ℓ} ρ^ℓ e^{−ρ/2} L^{2ℓ+1}_{n−ℓ−1}(ρ), ρ = 2r/n.

        Args:
            n (int): Pääkvanttiluku.
            ell (int): Ratapyörimismääräkvanttiluku.
            r (float | np.ndarray): Säde, r >= 0.

        Returns:
            float | np.ndarray: Funktion arvo.

        Raises:
            QuantumNumberError: Ehto 0 <= ell < n ei täyty.
        """

        state = _state(n, ell)
        rho = 2 * _check_radius(r) / n

        values = (
            self.__normalization(state)
            * np.power(rho, ell)
            * np.exp(-rho / 2)
            * assoc_laguerre(state.radial_nodes, 2 * ell + 1, rho)
        )

        return scalar_or_array(values, r)

    def radial_derivative(
        self, n: int, ell: int, r: float | np.ndarray
    ) -> float | np.ndarray:
        """Laskee derivaatan dR_{n,ℓ}/dr analyyttisesti.

        Käyttää identiteettiä d/dx L^α_k = −L^{α+1}_{k−1}.

        Raises:
            QuantumNumberError: Ehto 0 <= ell < n ei täyty.
        """

        state = _state(n, ell)
        rho = 2 * _check_radius(r) / n
        k = state.radial_nodes
        alpha = 2 * ell + 1

        laguerre = assoc_laguerre(k, alpha, rho)
        slope = -assoc_laguerre(k - 1, alpha + 1, rho) if k > 0 else 0.0

        power = np.power(rho, ell)
        power_slope = ell * np.power(rho, ell - 1) if ell > 0 else 0.0

        values = (
            self.__normalization(state)
            * np.exp(-rho / 2)
            * ((power_slope - power / 2) * laguerre + power * slope)
            * 2
            / n
        )

        return scalar_or_array(values, r)

    def ladder_coefficient(self, n: int, ell: int) -> float:
        """Palauttaa kertoimen c_{nℓ} = √((n − ℓ)(n + ℓ))/(nℓ)."""

        return math.sqrt((n - ell) * (n + ell)) / (n * ell)

    def ladder_apply(
        self, direction: str, n: int, ell: int, r: float | np.ndarray
    ) -> float | np.ndarray:
        """Soveltaa tikasoperaattoria radiaalifunktioon.

        Suunta "-" laskee (1/r)(d/dr + ℓ/r − 1/ℓ)(r·R_{n,ℓ}) = c_{nℓ}R_{n,ℓ−1}
        ja suunta "+" laskee (1/r)(−d/dr + ℓ/r − 1/ℓ)(r·R_{n,ℓ−1}) = c_{nℓ}R_{n,ℓ}.

        Args:
            direction (str): "+" tai "-".
            n (int): Pääkvanttiluku.
            ell (int): Operaattorin indeksi ℓ, vähintään 1.
            r (float | np.ndarray): Säde, r > 0.

        Returns:
            float | np.ndarray: Operaattorin tulos.

        Raises:
            QuantumNumberError: ell on nolla tai tila ei ole olemassa.
            ValueError: Tuntematon suunta.
        """

        if direction not in DIRECTIONS:
            raise ValueError(f"Tuntematon suunta {direction}.")

        if ell < 1:
            raise QuantumNumberError("Tikasoperaattori vaatii ehdon ℓ >= 1.")

        _state(n, ell)
        radius = _check_radius(r)

        if direction == "-":
            values = self.radial_derivative(n, ell, radius) + (
                (ell + 1) / radius - 1 / ell
            ) * self.radial_eigenfunction(n, ell, radius)
        else:
            values = -self.radial_derivative(n, ell - 1, radius) + (
                (ell - 1) / radius - 1 / ell
            ) * self.radial_eigenfunction(n, ell - 1, radius)

        return scalar_or_array(values, r)

    def beta_ell(
        self, ell: int, gamma: float, r: float | np.ndarray
    ) -> float | np.ndarray:
        """Laskee Riccatin yhtälön −β′ + β² = −2/r + ℓ(ℓ + 1)/r² + 1/ℓ²
        yleisen ratkaisun β_ℓ = ℓ/r − 1/ℓ + r^{2ℓ}e^{−2r/ℓ}/(γ_ℓ − Γ_ℓ(r)).

        Raises:
            SingularFamilyError: γ_ℓ ei ole säännöllinen.
        """

        self.__check(ell, gamma)
        values = -self.__darboux.general_riccati_solution(self.seed(ell), gamma, r)

        return scalar_or_array(values, r)

    def deformed_potential(
        self,
        ell: int,
        gamma: float,
        r: float | np.ndarray,
        allow_singular: bool = False,
    ) -> float | np.ndarray:
        """Laskee redusoidun potentiaalin
        Ṽ_{ℓ−1} = −2/r + ℓ(ℓ − 1)/r² + d/dr[2r^{2ℓ}e^{−2r/ℓ}/(γ_ℓ − Γ_ℓ(r))].

        Raises:
            SingularFamilyError: γ_ℓ ei ole säännöllinen.
        """

        self.__check(ell, gamma, allow_singular)

        return self.__darboux.deform_potential(
            self.seed(ell), gamma, r, allow_singular=allow_singular
        )

    def deformed_radial(
        self,
        ell: int,
        gamma: float,
        r: float | np.ndarray,
        allow_singular: bool = False,
    ) -> float | np.ndarray:
        """Laskee normittamattoman radiaalifunktion
        R̃_{ℓ,ℓ−1} = r^{ℓ−1}e^{−r/ℓ}/(γ_ℓ − Γ_ℓ(r)).

        Raises:
            SingularFamilyError: γ_ℓ ei ole säännöllinen.
        """

        self.__check(ell, gamma, allow_singular)

        reduced = self.__darboux.deform_ground_state(
            self.seed(ell), gamma, r, allow_singular=allow_singular
        )

        return scalar_or_array(reduced / np.asarray(r, dtype=float), r)

    def hydrogen_norm_const(self, ell: int, gamma: float) -> float:
        """Laskee normitusvakion N_ℓ = √(γ_ℓ(γ_ℓ/Γ_ℓ − 1)).

        Raises:
            SingularFamilyError: γ_ℓ ei ole säännöllinen.
        """

        self.__check(ell, gamma)

        return self.__darboux.deformed_norm_const(self.seed(ell), gamma)

    def matched_target(self, ell: int) -> float:
        """Palauttaa vakion C_ℓ = 2/(ℓ²√((2ℓ − 1)!))."""

        _check_ell(ell)

        return 2 / (ell**2 * math.sqrt(math.factorial(2 * ell - 1)))

    def hydrogen_matched_pair(self, ell: int) -> tuple[float, float]:
        """Ratkaisee parametrit, joilla N_ℓ = C_ℓ.

        Parametrit ovat yhtälön γ² − Γ_ℓγ − Γ_ℓC_ℓ² = 0 juuret.

        Returns:
            tuple[float, float]: Juuret, ensin juuri γ > Γ_ℓ, sitten γ < 0.
        """

        target = self.matched_target(ell)

        return self.__darboux.matched_gamma_pair(gamma_ell(ell), -1, target**2)

    def modified_ladder_apply(
        self, direction: str, ell: int, gamma: float, function: GridFunction
    ) -> GridFunction:
        """Soveltaa parametrista operaattoria A^±_ℓ = (1/r)(∓d/dr + β_ℓ)r
        näytteistettyyn funktioon.

        Derivaatta lasketaan viiden pisteen differenssillä, joten kahdessa
        reunimmaisessa pisteessä kummallakin puolella tulos on NaN.

        Raises:
            SingularFamilyError: γ_ℓ ei ole säännöllinen.
            ValueError: Tuntematon suunta tai hila ei ole positiivisella puoliakselilla.
        """

        if direction not in DIRECTIONS:
            raise ValueError(f"Tuntematon suunta {direction}.")

        r = function.x

        if r[0] <= 0:
            raise ValueError("Hilan on oltava positiivisella puoliakselilla.")

        reduced = r * function.values
        slope = self.__spectral.derivative(reduced, function.grid.step)
        sign = 1 if direction == "-" else -1

        values = (sign * slope + self.beta_ell(ell, gamma, r) * reduced) / r

        return GridFunction(function.grid, values)

    def undeformed_potential(
        self, ell: int, r: float | np.ndarray
    ) -> float | np.ndarray:
        """Palauttaa perheen lähtöpotentiaalin ℓ(ℓ − 1)/r² − 2/r."""

        return self.seed(ell).physical_potential(r)

    def exact_spectrum(self, ell: int, k: int) -> list[float]:
        """Palauttaa kanavan ℓ − 1 k alinta ominaisarvoa −1/n², n = ℓ, ℓ + 1, ..."""

        _check_ell(ell)

        return [_state(n, ell - 1).eigenvalue for n in range(ell, ell + k)]

    def __normalization(self, state: RadialState) -> float:
        n, ell = state.n, state.ell

        return (2 / n**2) * math.sqrt(
            math.factorial(n - ell - 1) / math.factorial(n + ell)
        )

    def __check(self, ell: int, gamma: float, allow_singular: bool = False) -> None:
        if allow_singular or self.classify(ell, gamma).regular:
            return

        raise SingularFamilyError(
            f"Singulaarinen parametri γ_{ell} = {gamma}: "
            f"vaaditaan {self.regularity_condition(ell)}.",
            gamma,
        )


hydrogen_service = HydrogenService()
