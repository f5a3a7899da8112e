"""Microbenchmark harness for the kernels, with table and CSV output."""
from jnt.bench.harness import CSV_COLUMNS, BenchResult, KernelCase, measure, mflops
from jnt.bench.scenarios import (
    ScenarioResult,
    run_scenario,
    scenario_blocked,
    scenario_level1,
    scenario_mm,
    scenario_sparse,
)

__all__ = [
    "BenchResult",
    "CSV_COLUMNS",
    "KernelCase",
    "ScenarioResult",
    "measure",
    "mflops",
    "run_scenario",
    "scenario_blocked",
    "scenario_level1",
    "scenario_mm",
    "scenario_sparse",
]
