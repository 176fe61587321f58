import os

from dotenv import load_dotenv

dirname = os.path.dirname(__file__)

try:
    load_dotenv(dotenv_path=os.path.join(dirname, "..", ".env"))
except FileNotFoundError:
    pass


def _float_from_env(name: str, default: float) -> float:
    try:
        return float(os.getenv(name) or default)
    except ValueError:
        return default


def _int_from_env(name: str, default: int) -> int:
    try:
        return int(os.getenv(name) or default)
    except ValueError:
        return default


QUADRATURE_TOLERANCE = _float_from_env("QUADRATURE_TOLERANCE", 1e-11)
QUADRATURE_LIMIT = _int_from_env("QUADRATURE_LIMIT", 500)
TRUNCATION_THRESHOLD = _float_from_env("TRUNCATION_THRESHOLD", 1e-16)

EIGENVALUE_TOLERANCE = _float_from_env("EIGENVALUE_TOLERANCE", 1e-12)
RESIDUAL_TOLERANCE = _float_from_env("RESIDUAL_TOLERANCE", 1e-8)

NORM_TOLERANCE = _float_from_env("NORM_TOLERANCE", 1e-8)
OSCILLATOR_TOLERANCE = _float_from_env("OSCILLATOR_TOLERANCE", 2e-4)
HYDROGEN_TOLERANCE = _float_from_env("HYDROGEN_TOLERANCE", 5e-4)

OUTPUT_PREFIX = os.getenv("OUTPUT_PREFIX") or os.path.join("output", "")
LOG_LEVEL = os.getenv("LOG_LEVEL") or "WARNING"
