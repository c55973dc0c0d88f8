import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

# Setup paths
ROOT_DIR = Path(__file__).parent.parent.parent

# Load environment variables
load_dotenv(ROOT_DIR / '.env')


def _env_int(name: str, default: int) -> int:
    """Read a positive integer setting from the environment"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}. Check your .env file.")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}. Check your .env file.")
    return value


# Maximum number of concurrent workers
THREADS = _env_int('LIECX_THREADS', 5)

# Oracle capacities
MAX_GROUP_ORDER = _env_int('LIECX_MAX_GROUP_ORDER', 1000)
MAX_RESOLUTION_WIDTH = _env_int('LIECX_MAX_WIDTH', 5000)
MAX_BAR_CELLS = _env_int('LIECX_MAX_BAR_CELLS', 4_000_000)

# Word and Lie module capacities
MAX_LIE_ARITY = _env_int('LIECX_MAX_LIE_ARITY', 9)
MAX_SERIES_DEGREE = _env_int('LIECX_MAX_SERIES_DEGREE', 1_000_000)
MAX_WORD_LENGTH = _env_int('LIECX_MAX_WORD_LENGTH', 16)

# Series lengths for audited growth estimates
AUDIT_M_MAX_EVEN = _env_int('LIECX_AUDIT_M_MAX_EVEN', 5000)
AUDIT_M_MAX_ODD = _env_int('LIECX_AUDIT_M_MAX_ODD', 2000)


@dataclass(frozen=True)
class Limits:
    """Capacities applied to one oracle computation"""
    group_order: int = MAX_GROUP_ORDER
    width: int = MAX_RESOLUTION_WIDTH
    bar_cells: int = MAX_BAR_CELLS


DEFAULT_LIMITS = Limits()


def audit_m_max(p: int) -> int:
    """Default series length for audited growth estimates at the prime p"""
    return AUDIT_M_MAX_EVEN if p == 2 else AUDIT_M_MAX_ODD
