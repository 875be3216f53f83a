"""Seeded sweeps binding closed-form predicates to matrix-level properties."""

from awdaha.harness.runner import SuiteResult, generate_grid, load_result, replay, run_suite
from awdaha.harness.suites import CRITERION_SUITES, SUITES
from awdaha.harness.sweep import SweepConfig

__all__ = [
    "CRITERION_SUITES",
    "SUITES",
    "SuiteResult",
    "SweepConfig",
    "generate_grid",
    "load_result",
    "replay",
    "run_suite",
]
