import math

import numpy as np

from entities.gamma_parameter import GammaParameter
from entities.seed_spec import SeedSpec
from lib.specfun import SQRT_PI, gauss_integral
from services.darboux_service import DarbouxService, SingularFamilyError
from services.darboux_service import darboux_service as default_darboux_service

FORBIDDEN_INTERVAL = "[−√π, 0]"


def _gaussian(x: float | np.ndarray) -> float | np.ndarray:
    return np.exp(-np.square(x) / 2)


def _identity(x: float | np.ndarray) -> float | np.ndarray:
    return np.asarray(x, dtype=float)


def _one(x: float | np.ndarray) -> float | np.ndarray:
    return np.ones_like(np.asarray(x, dtype=float))


def _shifted_oscillator(x: float | np.ndarray) -> float | np.ndarray:
    return np.square(x) - 1


OSCILLATOR_SEED = SeedSpec(
    "oscillator",
    (-math.inf, math.inf),
    f=_shifted_oscillator,
    f0=_gaussian,
    phi=_identity,
    sigma=1,
    energy_offset=0.5,
    scaling=0.5,
    phi_derivative=_one,
    cumulative=gauss_integral,
    total=SQRT_PI,
)


class OscillatorService:
    """Luokka, joka vastaa harmonisen oskillaattorin yksiparametrisesta perheestä.

    Perhe on Darboux-moottorin instanssi siemenellä F0 = e^{−x²/2}, Φ = x,
    σ = +1, c = 1/2 ja E₀ = 1/2. Parametri on säännöllinen, kun γ > 0 tai
    γ < −√π.
    """

    def __init__(self, darboux: DarbouxService = default_darboux_service) -> None:
        self.__darboux: DarbouxService = darboux

    @property
    def seed(self) -> SeedSpec:
        return OSCILLATOR_SEED

    def classify(self, gamma: float) -> GammaParameter:
        return self.__darboux.classify_gamma(OSCILLATOR_SEED, gamma)

    def mielnik_potential(
        self, gamma: float, x: float | np.ndarray, allow_singular: bool = False
    ) -> float | np.ndarray:
        """Laskee potentiaalin Ṽ = x²/2 − d/dx[e^{−x²}/(γ + I(x))].

        Args:
            gamma (float): Deformaatioparametri.
            x (float | np.ndarray): Paikka.
            allow_singular (bool, optional): Sallitaanko singulaarinen γ
                piirtämistä varten. Oletukseltaan False.

        Returns:
            float | np.ndarray: Potentiaalin arvo.

        Raises:
            SingularFamilyError: γ on kielletyllä välillä [−√π, 0].
        """

        self.__check(gamma, allow_singular)

        return self.__darboux.deform_potential(
            OSCILLATOR_SEED, gamma, x, allow_singular=allow_singular
        )

    def mielnik_ground_state(
        self, gamma: float, x: float | np.ndarray, allow_singular: bool = False
    ) -> float | np.ndarray:
        """Laskee normittamattoman perustilan Ψ̃₀ = e^{−x²/2}/(γ + I(x)).

        Raises:
            SingularFamilyError: γ on kielletyllä välillä [−√π, 0].
        """

        self.__check(gamma, allow_singular)

        return self.__darboux.deform_ground_state(
            OSCILLATOR_SEED, gamma, x, allow_singular=allow_singular
        )

    def oscillator_norm_const(self, gamma: float) -> float:
        """Laskee normitusvakion N₀(γ) = √(γ(γ + √π)/√π).

        Raises:
            SingularFamilyError: γ on kielletyllä välillä [−√π, 0].
        """

        self.__check(gamma, False)

        return math.sqrt(gamma * (gamma + SQRT_PI) / SQRT_PI)

    def oscillator_matched_pair(self) -> tuple[float, float]:
        """Palauttaa parametrit, joilla N₀(γ) = π^{−1/4}.

        Returns:
            tuple[float, float]: (γ₊, γ₋) = ½(−√π ± √(π + 4)).
        """

        return self.__darboux.matched_gamma_pair(SQRT_PI, 1, 1 / SQRT_PI)

    def beta_general(self, gamma: float, x: float | np.ndarray) -> float | np.ndarray:
        """Laskee Riccatin yhtälön β′ + β² = 1 + x² yleisen ratkaisun.

        β = x + e^{−x²}/(γ + I(x)).

        Raises:
            SingularFamilyError: γ on kielletyllä välillä [−√π, 0].
        """

        self.__check(gamma, False)

        return self.__darboux.general_riccati_solution(OSCILLATOR_SEED, gamma, x)

    def __check(self, gamma: float, allow_singular: bool) -> None:
        if allow_singular or self.classify(gamma).regular:
            return

        raise SingularFamilyError(
            f"Singulaarinen parametri γ = {gamma}: "
            f"γ ei saa olla välillä {FORBIDDEN_INTERVAL}.",
            gamma,
        )


oscillator_service = OscillatorService()
