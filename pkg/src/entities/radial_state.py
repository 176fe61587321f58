class RadialState:
    """Luokka, joka kuvaa vetyatomin radiaalista sidottua tilaa.

    Attributes:
        n (int): Pääkvanttiluku.
        ell (int): Ratapyörimismääräkvanttiluku.
    """

    def __init__(self, n: int, ell: int) -> None:
        """Luokan konstruktori.

        Raises:
            ValueError: Kvanttiluvut eivät toteuta ehtoa 0 <= ell < n.
        """

        if n < 1:
            raise ValueError(f"Pääkvanttiluvun on oltava positiivinen, ei {n}.")

        if not 0 <= ell < n:
            raise ValueError(f"Kvanttiluvun ell on oltava välillä [0, {n - 1}].")

        self.__n: int = int(n)
        self.__ell: int = int(ell)

    def __eq__(self, other: "RadialState") -> bool:
        if isinstance(other, RadialState):
            return self.n == other.n and self.ell == other.ell

        return False

    def __repr__(self) -> str:
        return f"RadialState({self.n}, {self.ell})"

    @property
    def n(self) -> int:
        return self.__n

    @property
    def ell(self) -> int:
        return self.__ell

    @property
    def eigenvalue(self) -> float:
        return -1 / self.__n**2

    @property
    def radial_nodes(self) -> int:
        return self.__n - self.__ell - 1
