from typing import Callable

import numpy as np

STEP_FACTOR = float(np.cbrt(np.finfo(float).eps))


def scalar_or_array(values: np.ndarray, x: float | np.ndarray) -> float | np.ndarray:
    """Palauttaa liukuluvun, jos argumentti oli skalaari, muuten taulukon."""

    if np.ndim(x) == 0:
        return float(values)

    return values


def central_difference(function: Callable, x: float | np.ndarray) -> float | np.ndarray:
    """Laskee derivaatan keskeisdifferenssillä, askel h = ε^{1/3}·max(1, |x|).

    Args:
        function (Callable): Vektoroitu funktio.
        x (float | np.ndarray): Evaluointipiste.

    Returns:
        float | np.ndarray: Derivaatan arvio.
    """

    points = np.asarray(x, dtype=float)
    step = STEP_FACTOR * np.maximum(1.0, np.abs(points))

    values = (function(points + step) - function(points - step)) / (2 * step)

    return scalar_or_array(values, x)
