from typing import Callable

import numpy as np

from entities.grid import Grid


class GridFunction:
    """Luokka, joka kuvaa tasavälisesti näytteistettyä reaalifunktiota.

    Potentiaalit, aaltofunktiot ja logaritmiset derivaatat kulkevat
    ohjelmassa tässä muodossa.

    Attributes:
        grid (Grid): Näytteistyshila.
        values (np.ndarray): Funktion arvot hilapisteissä.
    """

    def __init__(self, grid: Grid, values: np.ndarray) -> None:
        """Luokan konstruktori.

        Args:
            grid (Grid): Näytteistyshila.
            values (np.ndarray): Funktion arvot hilapisteissä.

        Raises:
            ValueError: Arvojen määrä ei vastaa hilaa.
        """

        values = np.asarray(values, dtype=float)

        if values.shape != (grid.points,):
            raise ValueError(
                f"Arvoja on {values.size}, mutta hilapisteitä {grid.points}."
            )

        self.__grid: Grid = grid
        self.__values: np.ndarray = values

    @classmethod
    def sample(cls, function: Callable, grid: Grid) -> "GridFunction":
        """Näytteistää funktion hilaan.

        Args:
            function (Callable): Vektoroitu reaalifunktio.
            grid (Grid): Näytteistyshila.

        Returns:
            GridFunction: Funktion arvot hilapisteissä.
        """

        values = np.broadcast_to(function(grid.nodes), (grid.points,))

        return cls(grid, np.array(values, dtype=float))

    def __len__(self) -> int:
        return self.__grid.points

    def __repr__(self) -> str:
        return f"GridFunction({self.__grid}, max_norm={self.max_norm()})"

    @property
    def grid(self) -> Grid:
        return self.__grid

    @property
    def x(self) -> np.ndarray:
        return self.__grid.nodes

    @property
    def values(self) -> np.ndarray:
        return self.__values

    def max_norm(self) -> float:
        """Palauttaa maksiminormin äärellisten arvojen yli."""

        finite = self.__values[np.isfinite(self.__values)]

        if finite.size == 0:
            return float("nan")

        return float(np.max(np.abs(finite)))

    def node_count(self) -> int:
        """Palauttaa merkinvaihtojen määrän peräkkäisten hilapisteiden välillä.

        Returns:
            int: Nollakohtien määrä hilan sisällä.
        """

        signs = np.sign(self.__values)
        signs = signs[signs != 0]

        return int(np.count_nonzero(signs[1:] != signs[:-1]))
