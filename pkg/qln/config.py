"""
Runtime configuration for qln.

All knobs come from environment variables. Library code reads them through
this module at call time (``config.EXHAUSTIVE_MAX_N``) so they can be
patched.
"""

import os
import sys
from typing import Dict, Any


def _env_bool(name: str, default: str = 'false') -> bool:
    return os.environ.get(name, default).lower() in ('1', 'true', 'yes', 'on')


# Size guards for brute-force strategies
EXHAUSTIVE_MAX_N = int(os.environ.get('QLN_EXHAUSTIVE_MAX_N', '8'))
ORACLE_MAX_N = int(os.environ.get('QLN_ORACLE_MAX_N', '7'))

# Completed elimination branches explored when confluence is checked
BRANCH_LIMIT = int(os.environ.get('QLN_BRANCH_LIMIT', '5040'))

# Cross-validate every mutation against the approximation cokernel
CHECK_MUTATION = _env_bool('QLN_CHECK_MUTATION')

# Verify sweep
WORKERS = int(os.environ.get('QLN_WORKERS', '1'))

# Count store location
DATA_DIR = os.environ.get('QLN_DATA_DIR', os.path.join(os.path.expanduser('~'), '.qln-data'))

VERBOSE = _env_bool('QLN_VERBOSE')


class EngineConfig:
    """Snapshot of the engine settings."""

    @classmethod
    def get_config(cls) -> Dict[str, Any]:
        """Get current engine configuration."""
        module = sys.modules[__name__]
        return {
            'exhaustive_max_n': module.EXHAUSTIVE_MAX_N,
            'oracle_max_n': module.ORACLE_MAX_N,
            'branch_limit': module.BRANCH_LIMIT,
            'check_mutation': module.CHECK_MUTATION,
            'workers': module.WORKERS,
            'data_dir': module.DATA_DIR,
        }

    @classmethod
    def describe(cls) -> str:
        """One-line summary used in verify headers."""
        return ' '.join(f"{key}={value}" for key, value in cls.get_config().items())


def log(tag: str, message: str) -> None:
    """Print a tagged progress line to stderr when verbose logging is on."""
    if VERBOSE:
        print(f"[{tag}] {message}", file=sys.stderr)
