import math
from typing import Callable

import numpy as np
from scipy import integrate, special

from config import QUADRATURE_LIMIT, QUADRATURE_TOLERANCE, TRUNCATION_THRESHOLD
from entities.quadrature_result import QuadratureResult
from lib.evaluation import scalar_or_array

SQRT_PI = math.sqrt(math.pi)

MAX_TRUNCATION_WIDTH = 2.0**40
SCALE_SAMPLE_POINTS = 257


class QuadratureError(ArithmeticError):
    """Adaptiivinen integrointi ei konvergoinut annetulla jakobudjetilla.

    Attributes:
        estimate (float): Paras saavutettu arvio.
        error_estimate (float): Arvion virhearvio.
        evaluations (int): Integrandin evaluointien määrä.
    """

    def __init__(
        self, message: str, estimate: float, error_estimate: float, evaluations: int
    ) -> None:
        super().__init__(message)

        self.estimate: float = estimate
        self.error_estimate: float = error_estimate
        self.evaluations: int = evaluations


def gauss_integral(x: float | np.ndarray) -> float | np.ndarray:
    """Laskee integraalin I(x) = ∫_{−∞}^x e^{−t²} dt virhefunktion avulla.

    Komplementaarinen virhefunktio säilyttää suhteellisen tarkkuuden myös
    negatiivisella hännällä.

    Args:
        x (float | np.ndarray): Yläraja, voi olla +∞.

    Returns:
        float | np.ndarray: Integraalin arvo välillä (0, √π].
    """

    values = SQRT_PI / 2 * special.erfc(-np.asarray(x, dtype=float))

    return scalar_or_array(values, x)


def gamma_ell(ell: int) -> float:
    """Laskee integraalin Γ_ℓ = ∫_0^∞ t^{2ℓ} e^{−2t/ℓ} dt = (2ℓ)! (ℓ/2)^{2ℓ+1}.

    Args:
        ell (int): Ratapyörimismääräkvanttiluku, vähintään 1.

    Returns:
        float: Γ_ℓ pyöristettynä lähimpään liukulukuun.

    Raises:
        ValueError: ell ei ole positiivinen kokonaisluku.
        OverflowError: Tulos ei mahdu liukulukuun.
    """

    _check_ell(ell)
    ell = int(ell)

    try:
        return math.factorial(2 * ell) * ell ** (2 * ell + 1) / 2 ** (2 * ell + 1)
    except OverflowError as error:
        raise OverflowError(f"Γ_ℓ ei mahdu liukulukuun, kun ℓ = {ell}.") from error


def incomplete_pe_integral(ell: int, r: float | np.ndarray) -> float | np.ndarray:
    """Laskee osittaisintegraalin Γ_ℓ(r) = ∫_0^r t^{2ℓ} e^{−2t/ℓ} dt.

    Toistuva osittaisintegrointi antaa
    Γ_ℓ(r) = Γ_ℓ · (1 − e^{−x} Σ_{k=0}^{2ℓ} x^k/k!), x = 2r/ℓ,
    eli kokonaislukukertaluvun säännöllistetyn vajaan gammafunktion.
    Summa evaluoidaan muodossa, jossa pienillä r ei synny kumoutumista.

    Args:
        ell (int): Ratapyörimismääräkvanttiluku, vähintään 1.
        r (float | np.ndarray): Yläraja, r >= 0 tai +∞.

    Returns:
        float | np.ndarray: Integraalin arvo.

    Raises:
        ValueError: Negatiivinen yläraja.
    """

    _check_ell(ell)
    radius = np.asarray(r, dtype=float)

    if np.any(radius < 0):
        raise ValueError("Integroinnin yläraja ei voi olla negatiivinen.")

    values = gamma_ell(ell) * special.gammainc(2 * ell + 1, 2 * radius / ell)

    return scalar_or_array(values, r)


def assoc_laguerre(k: int, alpha: int, x: float | np.ndarray) -> float | np.ndarray:
    """Laskee yleistetyn Laguerren polynomin L_k^α(x) kolmitermisellä rekursiolla.

    Args:
        k (int): Asteluku.
        alpha (int): Yleistysparametri.
        x (float | np.ndarray): Evaluointipiste.

    Returns:
        float | np.ndarray: Polynomin arvo.

    Raises:
        ValueError: Negatiivinen asteluku tai parametri.
    """

    if k < 0 or alpha < 0:
        raise ValueError("Asteluvun ja parametrin on oltava ei-negatiivisia.")

    points = np.asarray(x, dtype=float)
    previous = np.ones_like(points)

    if k == 0:
        return scalar_or_array(previous, x)

    current = alpha + 1 - points

    for degree in range(2, k + 1):
        following = (
            (2 * degree - 1 + alpha - points) * current
            - (degree - 1 + alpha) * previous
        ) / degree
        previous, current = current, following

    return scalar_or_array(current, x)


def adaptive_quadrature(
    function: Callable,
    a: float,
    b: float,
    tol: float = QUADRATURE_TOLERANCE,
    limit: int = QUADRATURE_LIMIT,
) -> QuadratureResult:
    """Integroi funktion adaptiivisella Gaussin–Kronrodin menetelmällä.

    Äärettömät rajat katkaistaan pisteeseen, jossa |f| on alle
    TRUNCATION_THRESHOLD kertaa integrandin suuruusluokka; katkaisukohtaa
    kaksinkertaistetaan, kunnes ehto täyttyy.

    Args:
        function (Callable): Integrandi, joka ottaa vastaan liukuluvun.
        a (float): Alaraja, voi olla −∞.
        b (float): Yläraja, voi olla +∞.
        tol (float, optional): Absoluuttinen ja suhteellinen toleranssi.
        limit (int, optional): Osavälien enimmäismäärä.

    Returns:
        QuadratureResult: Arvo, virhearvio ja evaluointien määrä.

    Raises:
        ValueError: Toleranssi ei ole positiivinen.
        QuadratureError: Integrointi ei konvergoinut.
    """

    if tol <= 0:
        raise ValueError("Toleranssin on oltava positiivinen.")

    if a == b:
        return QuadratureResult(0.0, 0.0, 1)

    sign = 1.0

    if a > b:
        a, b = b, a
        sign = -1.0

    start, stop = _truncate(function, a, b)

    result = integrate.quad(
        function, start, stop, epsabs=tol, epsrel=tol, limit=limit, full_output=1
    )
    value, error_estimate, info = result[:3]

    if len(result) > 3:
        raise QuadratureError(
            f"Integrointi ei konvergoinut välillä ({start}, {stop}): {result[3]}",
            sign * value,
            error_estimate,
            info["neval"],
        )

    return QuadratureResult(sign * value, error_estimate, info["neval"])


def _truncate(function: Callable, a: float, b: float) -> tuple[float, float]:
    """Korvaa äärettömät rajat äärellisillä katkaisukohdilla.

    Returns:
        tuple[float, float]: Äärellinen integroimisväli.

    Raises:
        QuadratureError: Integrandi ei vaimene.
    """

    if math.isfinite(a) and math.isfinite(b):
        return a, b

    if math.isfinite(a):
        center = a
    elif math.isfinite(b):
        center = b
    else:
        center = 0.0

    width = 1.0

    while width <= MAX_TRUNCATION_WIDTH:
        start = a if math.isfinite(a) else center - width
        stop = b if math.isfinite(b) else center + width

        samples = np.linspace(start, stop, SCALE_SAMPLE_POINTS)
        scale = max(abs(function(point)) for point in samples)

        tails = []
        if not math.isfinite(a):
            tails.append(abs(function(start)))
        if not math.isfinite(b):
            tails.append(abs(function(stop)))

        if scale > 0 and max(tails) <= TRUNCATION_THRESHOLD * scale:
            return start, stop

        width *= 2

    raise QuadratureError(
        "Integrandi ei vaimene äärettömyydessä.", math.nan, math.inf, 1
    )


def _check_ell(ell: int) -> None:
    if int(ell) != ell or ell < 1:
        raise ValueError(f"Kvanttiluvun ℓ on oltava positiivinen kokonaisluku: {ell}.")
