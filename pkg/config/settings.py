"""Configuration settings for sweeps, logging and the supported root systems."""

import os
from pathlib import Path
from typing import Dict, Any, List, Optional

# Load environment variables from .env files
try:
    from dotenv import load_dotenv
    # Get project root directory (parent of config directory)
    project_root = Path(__file__).parent.parent
    # Load .env.local first (higher priority), then .env
    env_local = project_root / ".env.local"
    env_file = project_root / ".env"
    if env_local.exists():
        load_dotenv(env_local, override=True)
    elif env_file.exists():
        load_dotenv(env_file, override=False)
except ImportError:
    # python-dotenv not installed, environment variables still apply
    pass


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name, "").strip('"\'')
    if not raw:
        return default
    return int(raw)


# Logging
LOG_LEVEL = os.getenv("PROJRANK_LOG_LEVEL", "WARNING").strip('"\'').upper()
LOG_FILE = os.getenv("PROJRANK_LOG_FILE", "").strip('"\'') or None

# Caps every bound used by verify sweeps (CI time budgets); None means full acceptance ranges
SWEEP_CAP = _env_int("PROJRANK_SWEEP_CAP", None)

# Seed for sample points in generic-rank checks and random subspace searches
RANDOM_SEED = _env_int("PROJRANK_SEED", 20240917)

# Root system configurations
ROOT_SYSTEM_CONFIGS: Dict[str, Dict[str, Any]] = {
    "A": {"min_rank": 1, "max_rank": None, "laced": "simply"},
    "B": {"min_rank": 2, "max_rank": None, "laced": "double"},
    "C": {"min_rank": 2, "max_rank": None, "laced": "double"},
    "D": {"min_rank": 3, "max_rank": None, "laced": "simply"},
    "E6": {"min_rank": 6, "max_rank": 6, "laced": "simply"},
    "E7": {"min_rank": 7, "max_rank": 7, "laced": "simply"},
}

# Coefficient grid searched by hyperplane_witness
WITNESS_GRID: List[int] = [-2, -1, 0, 1, 2]

# Scopes accepted by `verify --scope`, in report order
VERIFY_SCOPES: List[str] = [
    "root_system",
    "rep_theory",
    "schubert",
    "matrix_lie",
    "pluecker",
    "hss",
]

# Default bounds of the acceptance sweeps
SWEEP_BOUNDS: Dict[str, int] = {
    "weyl_fundamental_rank": 8,
    "tableau_rank": 6,
    "tableau_weight_sum": 3,
    "prop31_max_rank": 8,
    "schubert_d": 3,
    "schubert_n": 7,
    "schubert_linear_d": 10,
    "line_family_d": 5,
    "pencil_max_n": 4,
    "bdi_pair_max_m": 8,
    "su_max_n": 3,
    "parabolic_a_rank": 8,
    "witness_max_n": 4,
    "aiii_max_d": 7,
    "aiii_max_n": 14,
    "bdi_max_m": 12,
    "cd_max_n": 8,
    "catalog_max_pq": 8,
}


def sweep_bound(key: str) -> int:
    """
    Get a sweep bound, honouring PROJRANK_SWEEP_CAP.

    Args:
        key: Key from SWEEP_BOUNDS

    Returns:
        The bound, capped when a cap is configured
    """
    bound = SWEEP_BOUNDS[key]
    if SWEEP_CAP is not None:
        return min(bound, SWEEP_CAP)
    return bound
