import math
from abc import ABC, abstractmethod

import numpy as np

from config import HYDROGEN_TOLERANCE, OSCILLATOR_TOLERANCE
from entities.gamma_parameter import GammaParameter
from entities.grid import Grid
from entities.seed_spec import SeedSpec
from lib.specfun import SQRT_PI
from services.darboux_service import DarbouxService, SingularFamilyError
from services.darboux_service import darboux_service as default_darboux_service
from services.hydrogen_service import HydrogenService
from services.hydrogen_service import hydrogen_service as default_hydrogen_service
from services.oscillator_service import FORBIDDEN_INTERVAL, OscillatorService
from services.oscillator_service import (
    oscillator_service as default_oscillator_service,
)


class Family(ABC):
    """Luokka, joka tarjoaa yhteisen rajapinnan deformoiduille perheille.

    Komentorivi ja raportit käsittelevät perheitä vain tämän rajapinnan kautta.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def seed(self) -> SeedSpec:
        pass

    @property
    def label(self) -> str:
        """Tiedostonimen perheosa."""

        return self.name

    @property
    def scaling(self) -> float:
        return self.seed.scaling

    @property
    def max_k(self) -> int | None:
        """Sidottujen tilojen enimmäismäärä, None jos rajaton."""

        return None

    @property
    @abstractmethod
    def plot_grid(self) -> tuple[float, float, int]:
        pass

    @property
    @abstractmethod
    def verify_grid(self) -> tuple[float, float, int]:
        pass

    @property
    @abstractmethod
    def verify_tolerance(self) -> float:
        pass

    @abstractmethod
    def classify(self, gamma: float) -> GammaParameter:
        pass

    @abstractmethod
    def regularity_message(self) -> str:
        pass

    @abstractmethod
    def potential(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        pass

    @abstractmethod
    def ground_state(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        pass

    @abstractmethod
    def norm_const(self, gamma: float) -> float:
        pass

    @abstractmethod
    def matched_target(self) -> float:
        """Deformoimattoman perustilan normitusvakio, johon parametripari sovitetaan."""

    @abstractmethod
    def matched_pair(self) -> tuple[float, float]:
        pass

    @abstractmethod
    def exact_spectrum(self, k: int) -> list[float]:
        pass

    def undeformed_potential(self, x: np.ndarray) -> np.ndarray:
        return self.seed.physical_potential(x)

    def undeformed_ground_state(self, x: np.ndarray) -> np.ndarray:
        return self.seed.f0(x)

    def normalized_ground_state(self, gamma: float, x: np.ndarray) -> np.ndarray:
        """Palauttaa normitetun perustilan N·ψ̃.

        Rajalla γ → ±∞ normitusvakio hajaantuu ja ψ̃ häviää, mutta tulo lähestyy
        deformoimatonta perustilaa ±F0/√S.

        Raises:
            SingularFamilyError: γ ei ole säännöllinen.
        """

        if math.isinf(gamma):
            return (
                math.copysign(1.0, gamma)
                * self.undeformed_ground_state(x)
                / math.sqrt(self.seed.total)
            )

        return self.norm_const(gamma) * self.ground_state(gamma, x)

    def measure(self, x: np.ndarray) -> np.ndarray:
        """Normitusintegraalin paino."""

        return np.ones_like(np.asarray(x, dtype=float))

    def singular_error(self, gamma: float) -> SingularFamilyError:
        return SingularFamilyError(
            f"Singulaarinen parametri γ = {gamma}: {self.regularity_message()}.",
            gamma,
        )


class OscillatorFamily(Family):
    def __init__(self, service: OscillatorService = default_oscillator_service) -> None:
        self.__service: OscillatorService = service

    @property
    def name(self) -> str:
        return "oscillator"

    @property
    def seed(self) -> SeedSpec:
        return self.__service.seed

    @property
    def plot_grid(self) -> tuple[float, float, int]:
        return (-5.0, 5.0, 1001)

    @property
    def verify_grid(self) -> tuple[float, float, int]:
        return (-10.0, 10.0, 4001)

    @property
    def verify_tolerance(self) -> float:
        return OSCILLATOR_TOLERANCE

    def classify(self, gamma: float) -> GammaParameter:
        return self.__service.classify(gamma)

    def regularity_message(self) -> str:
        return f"γ ei saa olla välillä {FORBIDDEN_INTERVAL}"

    def potential(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        return self.__service.mielnik_potential(gamma, x, allow_singular)

    def ground_state(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        return self.__service.mielnik_ground_state(gamma, x, allow_singular)

    def norm_const(self, gamma: float) -> float:
        return self.__service.oscillator_norm_const(gamma)

    def matched_target(self) -> float:
        return SQRT_PI**-0.5

    def matched_pair(self) -> tuple[float, float]:
        return self.__service.oscillator_matched_pair()

    def exact_spectrum(self, k: int) -> list[float]:
        return [n + 0.5 for n in range(k)]


class HydrogenFamily(Family):
    """Radiaalisen vetyatomin perhe kanavassa ℓ − 1.

    Aaltofunktiona käytetään radiaalifunktiota R̃, potentiaalina redusoitua
    potentiaalia ja normituksen painona r².
    """

    def __init__(
        self, ell: int, service: HydrogenService = default_hydrogen_service
    ) -> None:
        self.__ell: int = ell
        self.__service: HydrogenService = service
        self.__seed: SeedSpec = service.seed(ell)

    @property
    def ell(self) -> int:
        return self.__ell

    @property
    def name(self) -> str:
        return "hydrogen"

    @property
    def label(self) -> str:
        return f"hydrogen_l{self.__ell}"

    @property
    def seed(self) -> SeedSpec:
        return self.__seed

    @property
    def plot_grid(self) -> tuple[float, float, int]:
        return (0.05, 40.0, 1000)

    @property
    def verify_grid(self) -> tuple[float, float, int]:
        return (0.0, max(120.0, 20.0 * self.__ell**2), 12001)

    @property
    def verify_tolerance(self) -> float:
        return HYDROGEN_TOLERANCE

    def classify(self, gamma: float) -> GammaParameter:
        return self.__service.classify(self.__ell, gamma)

    def regularity_message(self) -> str:
        return f"vaaditaan {self.__service.regularity_condition(self.__ell)}"

    def potential(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        return self.__service.deformed_potential(self.__ell, gamma, x, allow_singular)

    def ground_state(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        return self.__service.deformed_radial(self.__ell, gamma, x, allow_singular)

    def norm_const(self, gamma: float) -> float:
        return self.__service.hydrogen_norm_const(self.__ell, gamma)

    def matched_target(self) -> float:
        return self.__service.matched_target(self.__ell)

    def matched_pair(self) -> tuple[float, float]:
        return self.__service.hydrogen_matched_pair(self.__ell)

    def exact_spectrum(self, k: int) -> list[float]:
        return self.__service.exact_spectrum(self.__ell, k)

    def undeformed_potential(self, x: np.ndarray) -> np.ndarray:
        return self.__service.undeformed_potential(self.__ell, x)

    def undeformed_ground_state(self, x: np.ndarray) -> np.ndarray:
        return self.seed.f0(x) / np.asarray(x, dtype=float)

    def measure(self, x: np.ndarray) -> np.ndarray:
        return np.square(x)


def _sech(x: float | np.ndarray) -> float | np.ndarray:
    return 1 / np.cosh(x)


POSCHL_TELLER_SEED = SeedSpec(
    "poschl_teller",
    (-math.inf, math.inf),
    f=lambda x: 1 - 2 * np.square(_sech(x)),
    f0=_sech,
    phi=np.tanh,
    sigma=1,
    energy_offset=-0.5,
    scaling=0.5,
    phi_derivative=lambda x: np.square(_sech(x)),
    cumulative=lambda x: 1 + np.tanh(x),
    total=2.0,
)


class GenericFamily(Family):
    """Darboux-moottori sellaisenaan Pöschlin–Tellerin kuopalle V = −sech²x.

    Kuopalla on yksi sidottu tila energialla −1/2.
    """

    def __init__(
        self,
        seed: SeedSpec = POSCHL_TELLER_SEED,
        darboux: DarbouxService = default_darboux_service,
    ) -> None:
        self.__seed: SeedSpec = seed
        self.__darboux: DarbouxService = darboux

    @property
    def name(self) -> str:
        return "generic"

    @property
    def seed(self) -> SeedSpec:
        return self.__seed

    @property
    def max_k(self) -> int | None:
        return 1

    @property
    def plot_grid(self) -> tuple[float, float, int]:
        return (-5.0, 5.0, 1001)

    @property
    def verify_grid(self) -> tuple[float, float, int]:
        return (-10.0, 10.0, 4001)

    @property
    def verify_tolerance(self) -> float:
        return OSCILLATOR_TOLERANCE

    def classify(self, gamma: float) -> GammaParameter:
        return self.__darboux.classify_gamma(self.__seed, gamma)

    def regularity_message(self) -> str:
        return self.__darboux.regularity_message(self.__seed)

    def potential(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        self.__check(gamma, allow_singular)

        return self.__darboux.deform_potential(self.__seed, gamma, x, allow_singular)

    def ground_state(
        self, gamma: float, x: np.ndarray, allow_singular: bool = False
    ) -> np.ndarray:
        self.__check(gamma, allow_singular)

        return self.__darboux.deform_ground_state(
            self.__seed, gamma, x, allow_singular
        )

    def norm_const(self, gamma: float) -> float:
        self.__check(gamma, False)

        return self.__darboux.deformed_norm_const(self.__seed, gamma)

    def matched_target(self) -> float:
        return math.sqrt(1 / self.__darboux.total(self.__seed))

    def matched_pair(self) -> tuple[float, float]:
        s_total = self.__darboux.total(self.__seed)

        return self.__darboux.matched_gamma_pair(
            s_total, self.__seed.sigma, 1 / s_total
        )

    def exact_spectrum(self, k: int) -> list[float]:
        return [self.__seed.energy_offset][:k]

    def __check(self, gamma: float, allow_singular: bool) -> None:
        if not allow_singular and not self.classify(gamma).regular:
            raise self.singular_error(gamma)


class FamilyService:
    """Luokka, joka muodostaa perheen komentorivin tunnisteesta."""

    def __init__(
        self,
        oscillator: OscillatorService = default_oscillator_service,
        hydrogen: HydrogenService = default_hydrogen_service,
        darboux: DarbouxService = default_darboux_service,
    ) -> None:
        self.__oscillator: OscillatorService = oscillator
        self.__hydrogen: HydrogenService = hydrogen
        self.__darboux: DarbouxService = darboux

    def get(self, family: str, ell: int | None = None) -> Family:
        """Palauttaa perheen.

        Raises:
            ValueError: Tuntematon perhe tai puuttuva ℓ.
        """

        if family == "oscillator":
            return OscillatorFamily(self.__oscillator)

        if family == "hydrogen":
            if ell is None:
                raise ValueError("Vetyperhe tarvitsee kvanttiluvun ℓ.")

            return HydrogenFamily(ell, self.__hydrogen)

        if family == "generic":
            return GenericFamily(darboux=self.__darboux)

        raise ValueError(f"Tuntematon perhe {family}.")

    def grid_for(self, family: Family, requested: Grid | None, verify: bool) -> Grid:
        """Palauttaa pyydetyn hilan tai perheen oletushilan."""

        if requested is not None:
            return requested

        return Grid(*(family.verify_grid if verify else family.plot_grid))


family_service = FamilyService()
