import numpy as np

from entities.grid import Grid


class DiscreteHamiltonian:
    """Luokka, joka kuvaa operaattorin −cD² + V toisen kertaluvun
    differenssiapproksimaatiota Dirichlet'n reunaehdolla.

    Tuntemattomat ovat hilan sisäpisteissä; matriisi on symmetrinen ja
    kolmidiagonaalinen, ja sen sivudiagonaali on vakio −c/h².

    Attributes:
        grid (Grid): Hila, jonka päätepisteissä aaltofunktio häviää.
        diagonal (np.ndarray): Potentiaali sisäpisteissä lisättynä termillä 2c/h².
        off_diagonal (np.ndarray): Sivudiagonaali.
        scaling (float): Kerroin c.
    """

    def __init__(
        self,
        grid: Grid,
        diagonal: np.ndarray,
        off_diagonal: np.ndarray,
        scaling: float,
    ) -> None:
        """Luokan konstruktori.

        Raises:
            ValueError: Diagonaalien pituudet eivät vastaa hilaa.
        """

        diagonal = np.asarray(diagonal, dtype=float)
        off_diagonal = np.asarray(off_diagonal, dtype=float)

        if diagonal.size != grid.points - 2 or off_diagonal.size != diagonal.size - 1:
            raise ValueError("Diagonaalien pituudet eivät vastaa hilan sisäpisteitä.")

        self.__grid: Grid = grid
        self.__diagonal: np.ndarray = diagonal
        self.__off_diagonal: np.ndarray = off_diagonal
        self.__scaling: float = float(scaling)

    def __repr__(self) -> str:
        return f"DiscreteHamiltonian({self.grid}, c={self.scaling})"

    @property
    def grid(self) -> Grid:
        return self.__grid

    @property
    def diagonal(self) -> np.ndarray:
        return self.__diagonal

    @property
    def off_diagonal(self) -> np.ndarray:
        return self.__off_diagonal

    @property
    def scaling(self) -> float:
        return self.__scaling

    @property
    def size(self) -> int:
        return self.__diagonal.size

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Kertoo vektorin matriisilla.

        Args:
            vector (np.ndarray): Vektori sisäpisteissä.

        Returns:
            np.ndarray: Tulo H·vector.
        """

        result = self.__diagonal * vector
        result[:-1] += self.__off_diagonal * vector[1:]
        result[1:] += self.__off_diagonal * vector[:-1]

        return result
