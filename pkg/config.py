"""
Configuration module for the weighted Turán toolkit.
Loads environment variables from a local .env file (if present) or the process environment.
"""

import os
import logging
from dataclasses import dataclass
from pathlib import Path

# Try to load .env file for local development
try:
    from dotenv import load_dotenv
    env_path = Path('.') / '.env'
    if env_path.exists():
        load_dotenv(dotenv_path=env_path)
except ImportError:
    pass  # python-dotenv not installed, use system env vars


@dataclass
class OracleConfig:
    """Exhaustive-search caps and parallel split depth"""
    max_n_clique: int = 8
    max_n_general: int = 7
    split_depth: int = 8


@dataclass
class SolverConfig:
    """Exact-solver limits"""
    max_vertices: int = 64
    chromatic_cap: int = 16
    product_exact_cap: int = 24


class Config:
    """Main configuration with environment-based overrides"""

    def __init__(self, env: str = None):
        self.env = env or os.getenv('WT_ENV', 'development')
        self.base_dir = Path(__file__).parent
        self._load_config()

    def _load_config(self):
        """Load configuration from the environment"""
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
        self.THREADS = self._int_env('WT_THREADS', 1)
        self.SEED = self._int_env('WT_SEED', 0)

        self.oracle = OracleConfig()
        self.solver = SolverConfig()

        # WT_MAX_N raises (or lowers) both oracle caps at once
        self.MAX_N_OVERRIDE = os.getenv('WT_MAX_N', '')
        if self.MAX_N_OVERRIDE:
            cap = self._int_env('WT_MAX_N', self.oracle.max_n_clique)
            self.oracle.max_n_clique = cap
            self.oracle.max_n_general = cap

        self._validate_config()

    @staticmethod
    def _int_env(name: str, default: int) -> int:
        raw = os.getenv(name, '')
        if not raw:
            return default
        try:
            return int(raw)
        except ValueError:
            logging.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
            return default

    def _validate_config(self):
        """Validate critical configuration"""
        if self.THREADS < 1:
            logging.warning(f"WT_THREADS={self.THREADS} is not positive; using 1")
            self.THREADS = 1

        defaults = OracleConfig()
        if self.oracle.max_n_clique > defaults.max_n_clique:
            logging.warning(
                f"WT_MAX_N={self.oracle.max_n_clique} exceeds the default oracle caps "
                f"({defaults.max_n_clique}/{defaults.max_n_general}); searches may run for hours"
            )
        if self.oracle.max_n_clique > self.solver.max_vertices:
            self.oracle.max_n_clique = self.solver.max_vertices
            self.oracle.max_n_general = self.solver.max_vertices


# Global config instance
config = Config()
