from entities.gamma_parameter import GammaParameter
from entities.grid_function import GridFunction


class DeformedFamilyMember:
    """Luokka, joka kuvaa yksiparametrisen perheen yhtä jäsentä.

    Attributes:
        gamma (GammaParameter): Deformaatioparametri.
        v_tilde (GridFunction): Deformoitu potentiaali.
        psi0 (GridFunction): Normittamaton deformoitu perustila.
        norm_const (float): Suljetun muodon normitusvakio N(γ).
        s_total (float): Integraali ∫F0² koko välin yli.
    """

    def __init__(
        self,
        gamma: GammaParameter,
        v_tilde: GridFunction,
        psi0: GridFunction,
        norm_const: float,
        s_total: float,
    ) -> None:
        """Luokan konstruktori.

        Raises:
            ValueError: Potentiaali ja aaltofunktio on näytteistetty eri hiloihin.
        """

        if v_tilde.grid != psi0.grid:
            raise ValueError("Potentiaalin ja aaltofunktion hilat eroavat.")

        self.__gamma: GammaParameter = gamma
        self.__v_tilde: GridFunction = v_tilde
        self.__psi0: GridFunction = psi0
        self.__norm_const: float = float(norm_const)
        self.__s_total: float = float(s_total)

    def __repr__(self) -> str:
        return (
            f"DeformedFamilyMember({self.gamma}, N={self.norm_const}, "
            f"S={self.s_total})"
        )

    @property
    def gamma(self) -> GammaParameter:
        return self.__gamma

    @property
    def v_tilde(self) -> GridFunction:
        return self.__v_tilde

    @property
    def psi0(self) -> GridFunction:
        return self.__psi0

    @property
    def norm_const(self) -> float:
        return self.__norm_const

    @property
    def s_total(self) -> float:
        return self.__s_total

    @property
    def normalized(self) -> GridFunction:
        """Normitettu perustila N(γ)·ψ̃."""

        return GridFunction(self.__psi0.grid, self.__norm_const * self.__psi0.values)
