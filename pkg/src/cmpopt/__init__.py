"""Combinatorial optimization when the only access to weights is comparing sets."""
from .errors import CmpOptError, ConfigError, Unidentifiable, Unreachable
from .experiments import ExperimentConfig, RunReport, run_suite
from .gsl import GslState, gsl_run, gsl_run_equality_only
from .intersection import min_weight_common_independent
from .matroids import min_weight_basis
from .oracle import (ComparisonOracle, ExplicitFamily, HiddenWeights, KSubsetFamily, PowerSetFamily,
                     QueryLedger, brute_force_argmin)
from .paths import WalkOracle, shortest_path_walk_comparisons
from .sieve import sieve_optimize

__version__ = "0.1.0"
