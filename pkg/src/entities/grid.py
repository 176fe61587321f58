import math

import numpy as np


class Grid:
    """Luokka, joka kuvaa tasavälistä hilaa suljetulla välillä.

    Attributes:
        start (float): Välin alkupiste.
        stop (float): Välin loppupiste.
        points (int): Hilapisteiden määrä päätepisteet mukaan lukien.
    """

    def __init__(self, start: float, stop: float, points: int) -> None:
        """Luokan konstruktori.

        Args:
            start (float): Välin alkupiste.
            stop (float): Välin loppupiste.
            points (int): Hilapisteiden määrä päätepisteet mukaan lukien.

        Raises:
            ValueError: Väli on tyhjä tai ääretön, tai pisteitä on alle kaksi.
        """

        if not (math.isfinite(start) and math.isfinite(stop)):
            raise ValueError("Hilan päätepisteiden on oltava äärellisiä.")

        if start >= stop:
            raise ValueError(f"Virheellinen väli ({start}, {stop}).")

        if points < 2:
            raise ValueError("Hilassa on oltava vähintään kaksi pistettä.")

        self.__start: float = float(start)
        self.__stop: float = float(stop)
        self.__points: int = int(points)

    def __eq__(self, other: "Grid") -> bool:
        if isinstance(other, Grid):
            return (
                self.start == other.start
                and self.stop == other.stop
                and self.points == other.points
            )

        return False

    def __repr__(self) -> str:
        return f"Grid({self.start}, {self.stop}, {self.points})"

    @property
    def start(self) -> float:
        return self.__start

    @property
    def stop(self) -> float:
        return self.__stop

    @property
    def points(self) -> int:
        return self.__points

    @property
    def step(self) -> float:
        return (self.__stop - self.__start) / (self.__points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.__start, self.__stop, self.__points)

    @property
    def interior(self) -> np.ndarray:
        """Hilan sisäpisteet, joissa Dirichlet'n reunaehdon tuntemattomat ovat."""

        return self.nodes[1:-1]

    def to_dict(self) -> dict:
        return {
            "min": self.start,
            "max": self.stop,
            "points": self.points,
            "step": self.step,
        }
