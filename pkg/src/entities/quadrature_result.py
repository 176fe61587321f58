class QuadratureResult:
    """Luokka, joka kuvaa määrätyn integraalin numeerista arvoa.

    Attributes:
        value (float): Integraalin arvio.
        error_estimate (float): Absoluuttisen virheen arvio.
        evaluations (int): Integrandin evaluointien määrä.
    """

    def __init__(self, value: float, error_estimate: float, evaluations: int) -> None:
        """Luokan konstruktori.

        Args:
            value (float): Integraalin arvio.
            error_estimate (float): Absoluuttisen virheen arvio.
            evaluations (int): Integrandin evaluointien määrä.

        Raises:
            ValueError: Negatiivinen virhearvio tai evaluointeja alle yksi.
        """

        if error_estimate < 0:
            raise ValueError("Virhearvio ei voi olla negatiivinen.")

        if evaluations < 1:
            raise ValueError("Integrandia on evaluoitava vähintään kerran.")

        self.__value: float = float(value)
        self.__error_estimate: float = float(error_estimate)
        self.__evaluations: int = int(evaluations)

    def __eq__(self, other: "QuadratureResult") -> bool:
        if isinstance(other, QuadratureResult):
            return (
                self.value == other.value
                and self.error_estimate == other.error_estimate
                and self.evaluations == other.evaluations
            )

        return False

    def __repr__(self) -> str:
        return (
            f"QuadratureResult({self.value}, {self.error_estimate}, {self.evaluations})"
        )

    def __float__(self) -> float:
        return self.__value

    @property
    def value(self) -> float:
        return self.__value

    @property
    def error_estimate(self) -> float:
        return self.__error_estimate

    @property
    def evaluations(self) -> int:
        return self.__evaluations
