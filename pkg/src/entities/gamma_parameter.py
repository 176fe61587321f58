class GammaParameter:
    """Luokka, joka kuvaa deformaatioparametria γ.

    Attributes:
        value (float): Parametrin arvo.
        regular (bool): True, jos Bernoulli-funktion nimittäjä ei häviä
            määrittelyvälillä.
    """

    def __init__(self, value: float, regular: bool) -> None:
        self.__value: float = float(value)
        self.__regular: bool = bool(regular)

    def __eq__(self, other: "GammaParameter") -> bool:
        if isinstance(other, GammaParameter):
            return self.value == other.value and self.regular == other.regular

        return False

    def __repr__(self) -> str:
        return f"GammaParameter({self.value}, {self.regular})"

    def __float__(self) -> float:
        return self.__value

    @property
    def value(self) -> float:
        return self.__value

    @property
    def regular(self) -> bool:
        return self.__regular
