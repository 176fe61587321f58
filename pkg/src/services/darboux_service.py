import math
from typing import Callable

import numpy as np

from entities.deformed_family_member import DeformedFamilyMember
from entities.gamma_parameter import GammaParameter
from entities.grid import Grid
from entities.grid_function import GridFunction
from entities.seed_spec import SeedSpec
from lib.evaluation import central_difference, scalar_or_array
from lib.specfun import QuadratureError, adaptive_quadrature

NODE_TOLERANCE = np.finfo(float).tiny


class SingularSeedError(ValueError):
    pass


class NonNormalizableSeedError(ValueError):
    pass


class SingularFamilyError(ValueError):
    """Bernoulli-funktion nimittäjä häviää määrittelyvälillä.

    Attributes:
        gamma (float): Deformaatioparametri.
        position (float | None): Piste, jossa nimittäjä häviää, jos tiedossa.
    """

    def __init__(
        self, message: str, gamma: float, position: float | None = None
    ) -> None:
        super().__init__(message)

        self.gamma: float = gamma
        self.position: float | None = position


class DarbouxService:
    """Yksiparametrisen Darboux-deformaation yleinen moottori.

    Siemen F0 on solmuton ja Φ = −F0′/F0. Bernoulli-funktio on
    v = F0²/(γ + σ∫_a^x F0²), yleinen Riccatin ratkaisu Φ_g = Φ + σv ja
    deformoitu potentiaali Ṽ = c·f + E₀ + 2c(2σΦv + v²).
    """

    def log_derivative(
        self,
        f0: Callable,
        x: float | np.ndarray,
        derivative: Callable | None = None,
    ) -> float | np.ndarray:
        """Laskee negatiivisen logaritmisen derivaatan Φ = −F0′/F0.

        Args:
            f0 (Callable): Siemenratkaisu.
            x (float | np.ndarray): Evaluointipiste.
            derivative (Callable | None, optional): Analyyttinen F0′.
                Oletukseltaan None, jolloin käytetään keskeisdifferenssiä.

        Returns:
            float | np.ndarray: Φ(x).

        Raises:
            SingularSeedError: F0 häviää evaluointipisteessä.
        """

        points = np.asarray(x, dtype=float)
        values = np.asarray(f0(points), dtype=float)

        nodes = np.abs(values) <= NODE_TOLERANCE
        if np.any(nodes):
            position = float(np.broadcast_to(points, values.shape)[nodes][0])
            raise SingularSeedError(f"Siemenratkaisulla on nollakohta x = {position}.")

        if derivative is None:
            slope = central_difference(f0, points)
        else:
            slope = derivative(points)

        return scalar_or_array(-slope / values, x)

    def riccati_residual(
        self,
        phi: Callable,
        f: Callable,
        grid: Grid,
        phi_derivative: Callable | None = None,
    ) -> GridFunction:
        """Laskee Riccatin yhtälön residuaalin Φ² − Φ′ − f hilassa.

        Args:
            phi (Callable): Riccatin ratkaisuehdokas.
            f (Callable): Potentiaali nollaenergiaan siirrettynä.
            grid (Grid): Hila siemenen määrittelyvälin sisällä.
            phi_derivative (Callable | None, optional): Analyyttinen Φ′.

        Returns:
            GridFunction: Pisteittäinen residuaali.
        """

        x = grid.nodes
        slope = self.__derivative(phi, x, phi_derivative)

        return GridFunction(grid, phi(x) ** 2 - slope - f(x))

    def cumulative(self, seed: SeedSpec, x: float | np.ndarray) -> float | np.ndarray:
        """Palauttaa integraalin W(x) = ∫_a^x F0².

        Käyttää siemenen suljettua muotoa, jos se on annettu, muuten
        adaptiivista integrointia.
        """

        if seed.cumulative is not None:
            return seed.cumulative(x)

        start = seed.domain[0]

        def integrate_to(point: float) -> float:
            return adaptive_quadrature(lambda t: seed.f0(t) ** 2, start, point).value

        values = np.vectorize(integrate_to, otypes=[float])(np.asarray(x, dtype=float))

        return scalar_or_array(values, x)

    def total(self, seed: SeedSpec) -> float:
        """Palauttaa integraalin S = ∫_a^b F0².

        Raises:
            NonNormalizableSeedError: Integraali hajaantuu.
        """

        if seed.total is not None:
            return seed.total

        try:
            result = adaptive_quadrature(lambda t: seed.f0(t) ** 2, *seed.domain)
        except QuadratureError as error:
            raise NonNormalizableSeedError(
                f"Siemen {seed.name} ei ole neliöintegroituva."
            ) from error

        return result.value

    def classify_gamma(self, seed: SeedSpec, value: float) -> GammaParameter:
        """Luokittelee deformaatioparametrin säännölliseksi tai singulaariseksi.

        Säännöllisyysalue on σ = +1: γ > 0 tai γ < −S, ja σ = −1: γ < 0 tai
        γ > S. Reunapisteet ovat singulaarisia, koska N(γ) häviää niissä.

        Args:
            seed (SeedSpec): Siemen.
            value (float): Parametrin arvo.

        Returns:
            GammaParameter: Luokiteltu parametri.
        """

        try:
            s_total = self.total(seed)
        except NonNormalizableSeedError:
            s_total = math.inf

        if seed.sigma == 1:
            regular = value > 0 or value < -s_total
        else:
            regular = value < 0 or value > s_total

        return GammaParameter(value, regular)

    def regularity_message(self, seed: SeedSpec) -> str:
        """Palauttaa kielletyn välin tekstimuodossa."""

        s_total = self.total(seed)

        if seed.sigma == 1:
            return f"γ ei saa olla välillä [{-s_total}, 0]"

        return f"γ ei saa olla välillä [0, {s_total}]"

    def denominator(
        self, seed: SeedSpec, gamma: GammaParameter | float, x: float | np.ndarray
    ) -> float | np.ndarray:
        """Palauttaa Bernoulli-funktion nimittäjän γ + σ∫_a^x F0²."""

        value = float(gamma)

        if math.isinf(value):
            return scalar_or_array(np.full(np.shape(x), value), x)

        return value + seed.sigma * self.cumulative(seed, x)

    def bernoulli_reciprocal(
        self,
        seed: SeedSpec,
        gamma: GammaParameter | float,
        x: float | np.ndarray,
        allow_singular: bool = False,
    ) -> float | np.ndarray:
        """Laskee Bernoulli-funktion v = F0²/(γ + σ∫_a^x F0²).

        Funktio toteuttaa yhtälön v′ = −2Φv − σv².

        Args:
            seed (SeedSpec): Siemen.
            gamma (GammaParameter | float): Deformaatioparametri.
            x (float | np.ndarray): Evaluointipiste.
            allow_singular (bool, optional): Sallitaanko singulaarinen γ.
                Tällöin navat näkyvät ei-äärellisinä arvoina. Oletukseltaan False.

        Returns:
            float | np.ndarray: v(x).

        Raises:
            SingularFamilyError: γ on singulaarinen tai nimittäjä häviää.
        """

        points = self.__check_domain(seed, x)
        denominator = self.__checked_denominator(seed, gamma, points, allow_singular)

        with np.errstate(divide="ignore", invalid="ignore"):
            values = seed.f0(points) ** 2 / denominator

        return scalar_or_array(values, x)

    def general_riccati_solution(
        self, seed: SeedSpec, gamma: GammaParameter | float, x: float | np.ndarray
    ) -> float | np.ndarray:
        """Palauttaa yleisen Riccatin ratkaisun Φ_g = Φ + σv.

        Φ_g toteuttaa yhtälön Φ_g² + Φ_g′ = Φ² + Φ′ kaikilla säännöllisillä γ.
        """

        points = self.__check_domain(seed, x)
        values = seed.phi(points) + seed.sigma * self.bernoulli_reciprocal(
            seed, gamma, points
        )

        return scalar_or_array(values, x)

    def deform_potential(
        self,
        seed: SeedSpec,
        gamma: GammaParameter | float,
        x: float | np.ndarray,
        allow_singular: bool = False,
    ) -> float | np.ndarray:
        """Laskee deformoidun potentiaalin Ṽ = c·f + E₀ − 2c(ln(γ + σ∫F0²))″.

        Args:
            seed (SeedSpec): Siemen.
            gamma (GammaParameter | float): Deformaatioparametri.
            x (float | np.ndarray): Evaluointipiste.
            allow_singular (bool, optional): Sallitaanko singulaarinen γ.

        Returns:
            float | np.ndarray: Ṽ(x); γ → ±∞ antaa alkuperäisen potentiaalin.

        Raises:
            SingularFamilyError: γ on singulaarinen tai nimittäjä häviää.
        """

        points = self.__check_domain(seed, x)
        v = self.bernoulli_reciprocal(seed, gamma, points, allow_singular)
        c = seed.scaling

        with np.errstate(invalid="ignore"):
            deformation = 2 * c * (2 * seed.sigma * seed.phi(points) * v + v**2)

        values = seed.physical_potential(points) + deformation

        return scalar_or_array(values, x)

    def deform_ground_state(
        self,
        seed: SeedSpec,
        gamma: GammaParameter | float,
        x: float | np.ndarray,
        allow_singular: bool = False,
    ) -> float | np.ndarray:
        """Laskee normittamattoman deformoidun perustilan F0/(γ + σ∫_a^x F0²).

        Raises:
            SingularFamilyError: γ on singulaarinen tai nimittäjä häviää.
        """

        points = self.__check_domain(seed, x)
        denominator = self.__checked_denominator(seed, gamma, points, allow_singular)

        with np.errstate(divide="ignore", invalid="ignore"):
            values = seed.f0(points) / denominator

        return scalar_or_array(values, x)

    def deformed_norm_const(
        self, seed: SeedSpec, gamma: GammaParameter | float
    ) -> float:
        """Laskee normitusvakion N = √(γ(γ + σS)/S).

        Sijoitus X = ∫_a^x F0² muuttaa normitusintegraalin muotoon
        ∫_0^S dX/(γ + σX)² = S/(γ(γ + σS)).

        Raises:
            NonNormalizableSeedError: S on ääretön.
            SingularFamilyError: γ ei ole säännöllinen.
        """

        s_total = self.total(seed)

        if not math.isfinite(s_total):
            raise NonNormalizableSeedError(
                f"Siemen {seed.name} ei ole neliöintegroituva."
            )

        parameter = self.__resolve(seed, gamma)

        if not parameter.regular:
            raise SingularFamilyError(
                f"Ei normitettavissa: {self.regularity_message(seed)}.",
                parameter.value,
            )

        value = parameter.value

        return math.sqrt(value * (value + seed.sigma * s_total) / s_total)

    def matched_gamma_pair(
        self, s_total: float, sigma: int, target_norm_sq: float
    ) -> tuple[float, float]:
        """Ratkaisee parametrit, joilla N(γ)² on annettu arvo.

        Parametrit ovat yhtälön γ² + σSγ − S·target_norm_sq = 0 juuret,
        yksi kummallakin säännöllisellä haaralla.

        Args:
            s_total (float): Integraali S.
            sigma (int): Suunta, +1 tai −1.
            target_norm_sq (float): Tavoiteltu N².

        Returns:
            tuple[float, float]: Juuret (γ₊, γ₋), γ₊ > γ₋.

        Raises:
            ValueError: S tai tavoite ei ole positiivinen.
        """

        if s_total <= 0 or target_norm_sq <= 0:
            raise ValueError("Integraalin S ja tavoitteen on oltava positiivisia.")

        if sigma not in (1, -1):
            raise ValueError(f"Suunnan on oltava +1 tai -1, ei {sigma}.")

        linear = sigma * s_total
        constant = -s_total * target_norm_sq

        large = -0.5 * (linear + math.copysign(1.0, linear) * math.sqrt(
            linear**2 - 4 * constant
        ))
        small = constant / large

        return max(large, small), min(large, small)

    def partner_potential(
        self, seed: SeedSpec, x: float | np.ndarray
    ) -> float | np.ndarray:
        """Laskee parametrittoman Darboux-partnerin c(Φ² + Φ′) + E₀.

        Nollaenergian yksiköissä partneri on f + 2Φ′.
        """

        points = self.__check_domain(seed, x)
        slope = self.__derivative(seed.phi, points, seed.phi_derivative)

        values = seed.scaling * (seed.phi(points) ** 2 + slope) + seed.energy_offset

        return scalar_or_array(values, x)

    def bernoulli_residual(
        self, seed: SeedSpec, gamma: GammaParameter | float, grid: Grid
    ) -> GridFunction:
        """Laskee residuaalin v′ + 2Φv + σv², v′ keskeisdifferenssinä."""

        x = grid.nodes
        v = self.bernoulli_reciprocal(seed, gamma, x)
        slope = central_difference(
            lambda t: self.bernoulli_reciprocal(seed, gamma, t), x
        )

        return GridFunction(grid, slope + 2 * seed.phi(x) * v + seed.sigma * v**2)

    def partner_invariance_residual(
        self, seed: SeedSpec, gamma: GammaParameter | float, grid: Grid
    ) -> GridFunction:
        """Laskee erotuksen (Φ_g² + Φ_g′) − (Φ² + Φ′).

        Φ′ otetaan siemenestä, Bernoulli-funktion derivaatta keskeisdifferenssinä.
        """

        x = grid.nodes
        phi_slope = self.__derivative(seed.phi, x, seed.phi_derivative)
        v_slope = central_difference(
            lambda t: self.bernoulli_reciprocal(seed, gamma, t), x
        )

        general = self.general_riccati_solution(seed, gamma, x)
        general_slope = phi_slope + seed.sigma * v_slope

        residual = general**2 + general_slope - (seed.phi(x) ** 2 + phi_slope)

        return GridFunction(grid, residual)

    def family_member(
        self, seed: SeedSpec, gamma: GammaParameter | float, grid: Grid
    ) -> DeformedFamilyMember:
        """Muodostaa perheen jäsenen annetussa hilassa.

        Raises:
            SingularFamilyError: γ ei ole säännöllinen.
        """

        parameter = self.__resolve(seed, gamma)
        v_tilde = GridFunction(
            grid, self.deform_potential(seed, parameter, grid.nodes)
        )
        psi0 = GridFunction(
            grid, self.deform_ground_state(seed, parameter, grid.nodes)
        )

        return DeformedFamilyMember(
            parameter,
            v_tilde,
            psi0,
            self.deformed_norm_const(seed, parameter),
            self.total(seed),
        )

    def __resolve(
        self, seed: SeedSpec, gamma: GammaParameter | float
    ) -> GammaParameter:
        if isinstance(gamma, GammaParameter):
            return gamma

        return self.classify_gamma(seed, gamma)

    def __checked_denominator(
        self,
        seed: SeedSpec,
        gamma: GammaParameter | float,
        points: np.ndarray,
        allow_singular: bool,
    ) -> np.ndarray:
        parameter = self.__resolve(seed, gamma)
        denominator = np.asarray(self.denominator(seed, parameter, points), dtype=float)

        if allow_singular:
            return denominator

        zeros = denominator == 0
        if not parameter.regular or np.any(zeros):
            position = None

            if np.any(zeros):
                position = float(np.broadcast_to(points, zeros.shape)[zeros][0])

            raise SingularFamilyError(
                f"Singulaarinen perhe γ = {parameter.value}: "
                f"{self.regularity_message(seed)}.",
                parameter.value,
                position,
            )

        return denominator

    def __check_domain(self, seed: SeedSpec, x: float | np.ndarray) -> np.ndarray:
        points = np.asarray(x, dtype=float)

        if not seed.contains(points):
            raise ValueError(
                f"Piste on siemenen {seed.name} välin {seed.domain} ulkopuolella."
            )

        return points

    def __derivative(
        self, function: Callable, x: np.ndarray, derivative: Callable | None
    ) -> np.ndarray:
        if derivative is None:
            return central_difference(function, x)

        return derivative(x)


darboux_service = DarbouxService()
