"""
Configuration for the enumeration engines, logging and CLI output.

Environment overrides are read after main.py calls load_dotenv(), so a
.env file next to the project works the same as exported variables.
"""
import os
from functools import lru_cache

# ═══════════════════════════════════════════════════════════
# ENUMERATION BUDGET
# ═══════════════════════════════════════════════════════════
# Maximum number of search nodes a single enumeration may visit before
# SearchBudgetExceeded is raised (exit code 3 on the CLI).
DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV_VAR = "REFINED_FLOOR_BUDGET"

# ═══════════════════════════════════════════════════════════
# CONCURRENCY
# ═══════════════════════════════════════════════════════════
DEFAULT_THREADS = os.cpu_count() or 1
THREADS_ENV_VAR = "REFINED_FLOOR_THREADS"

# ═══════════════════════════════════════════════════════════
# LOGGING
# ═══════════════════════════════════════════════════════════
LOG_DIR = "logs"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# Sweep engine progress is logged every this many visited nodes
PROGRESS_LOG_INTERVAL = 100_000

# ═══════════════════════════════════════════════════════════
# OUTPUT
# ═══════════════════════════════════════════════════════════
JSON_INDENT = None  # Compact JSON keeps golden files byte-stable
PRETTY_MAX_TERMS = 40  # Longer polynomials are elided in --pretty tables

# ═══════════════════════════════════════════════════════════
# VERIFICATION
# ═══════════════════════════════════════════════════════════
# The backtracking marking oracle walks every labeled linear extension,
# so it is only used on posets up to this many elements.
STRUCTURAL_ORACLE_MAX_ELEMENTS = 12

# Seed and size of the randomized operation suite run by `lemmas`
OPERATION_SUITE_SEED = 20240607
OPERATION_SUITE_SIZE = 200


def _read_positive_int(var_name: str, default: int) -> int:
    raw = os.getenv(var_name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ValueError(f"Invalid {var_name}: {raw!r}. Must be a positive integer")
    if value <= 0:
        raise ValueError(f"Invalid {var_name}: {raw!r}. Must be a positive integer")
    return value


def get_node_budget() -> int:
    """Get the enumeration node budget, honouring REFINED_FLOOR_BUDGET."""
    return _read_positive_int(BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET)


def get_thread_count() -> int:
    """Get the worker thread count, honouring REFINED_FLOOR_THREADS."""
    return _read_positive_int(THREADS_ENV_VAR, DEFAULT_THREADS)


# ═══════════════════════════════════════════════════════════
# FACTORY FUNCTIONS - shared polynomial rings
# ═══════════════════════════════════════════════════════════
# Rings are memoized per variable tuple so every universal polynomial of
# the same family lives in one ring and compares with ==.
@lru_cache(maxsize=None)
def get_universal_ring(variables: tuple):
    """Get the QQ polynomial ring on the given variable names (grlex order)."""
    from sympy.polys.domains import QQ
    from sympy.polys.orderings import grlex
    from sympy.polys.rings import ring

    poly_ring, *_ = ring(",".join(variables), QQ, grlex)
    return poly_ring
