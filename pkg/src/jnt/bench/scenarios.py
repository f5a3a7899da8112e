"""The benchmark scenarios and their table layouts."""
from __future__ import annotations

import platform
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numba

from jnt.bench.fixtures import bundled_matrix_path
from jnt.bench.harness import CSV_COLUMNS, DEFAULT_MIN_TIME, DEFAULT_SEED, BenchResult, KernelCase, measure
from jnt.bench.workloads import GemmWorkload, Level1Workload, SparseWorkload, matrix_name
from jnt.errors import MatrixMarketError
from jnt.kernels.blas1 import DAXPY_VARIANTS, DDOT_VARIANTS
from jnt.kernels.blas3 import optimal_block_size
from jnt.kernels.storage import GemmConfig, Indexing, LoopOrder
from jnt.matio.mm import read_matrix_market
from jnt.matio.table import ColumnSpec, TableSpec, format_table
from jnt.sparse import CooMatrix

SCENARIOS = ("level1", "mm", "blocked", "sparse")
LEVEL1_LENGTH = 200
MM_OUTER = 100
MM_INNER = (100, 16)
DEFAULT_SIZES = (40, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000)
MM_OPTIMIZATIONS = (
    ("plain", Indexing.NESTED, 1),
    ("1d", Indexing.ONE_DIM, 1),
    ("1d+unroll4", Indexing.ONE_DIM, 4),
)


def environment_label() -> str:
    cpu = platform.processor() or platform.machine() or "unknown cpu"
    return f"{cpu}, Python {platform.python_version()}, numba {numba.__version__}, {platform.system()}"


@dataclass
class ScenarioResult:
    name: str
    title: str
    table: TableSpec
    rows: List[list]
    results: List[BenchResult] = field(default_factory=list)

    def to_text(self) -> str:
        return f"{self.title}\n{format_table(self.table, self.rows)}"

    def csv_rows(self):
        return [r.csv_row() for r in self.results]


def case_dims(case: KernelCase) -> dict:
    """``"L=100,M=100,N=16"`` -> {"L": 100, "M": 100, "N": 16}."""
    return {k: int(v) for k, v in (part.split("=") for part in case.dims.split(","))}


def _mflops_columns(names, width=10):
    return [ColumnSpec(n, width=max(width, len(n)), precision=1) for n in names]


def level1_cases(n: int = LEVEL1_LENGTH) -> List[KernelCase]:
    cases = []
    for kernel, variants in (("daxpy", DAXPY_VARIANTS), ("ddot", DDOT_VARIANTS)):
        for v in variants:
            cases.append(KernelCase(
                "level1", kernel, f"unroll-{v}", f"n={n}", 2 * n,
                make=lambda seed, k=kernel, v=v: Level1Workload(k, v, n, seed),
            ))
    return cases


def level1_table(results: Sequence[BenchResult], env: Optional[str] = None) -> ScenarioResult:
    names = [f"{r.case.kernel}:{r.case.variant[len('unroll-'):]}" for r in results]
    env = environment_label() if env is None else env
    spec = TableSpec([ColumnSpec("Environment", width=len(env), align="<")] + _mflops_columns(names, 8))
    n = case_dims(results[0].case)["n"]
    return ScenarioResult(
        "level1",
        f"BLAS level 1 kernels, vector length {n}, Mflops",
        spec,
        [[env] + [r.mflops for r in results]],
        list(results),
    )


def scenario_level1(min_time: float = DEFAULT_MIN_TIME, seed: int = DEFAULT_SEED,
                    n: int = LEVEL1_LENGTH) -> ScenarioResult:
    return level1_table([measure(c, min_time, seed) for c in level1_cases(n)])


def gemm_case(scenario, config: GemmConfig, l, m, n) -> KernelCase:
    return KernelCase(
        scenario, "gemm", config.label, f"L={l},M={m},N={n}", 2 * l * m * n,
        make=lambda seed: GemmWorkload(config, l, m, n, seed),
    )


def mm_cases() -> List[KernelCase]:
    """Row-major over (loop order, optimization, N), the order the table is filled in."""
    return [
        gemm_case("mm", GemmConfig(order, indexing, unroll), MM_OUTER, MM_OUTER, n)
        for order in LoopOrder
        for _, indexing, unroll in MM_OPTIMIZATIONS
        for n in MM_INNER
    ]


def mm_table(results: Sequence[BenchResult]) -> ScenarioResult:
    width = len(MM_OPTIMIZATIONS) * len(MM_INNER)
    rows = [
        [order.value] + [r.mflops for r in results[i * width:(i + 1) * width]]
        for i, order in enumerate(LoopOrder)
    ]
    names = [f"{opt} N={n}" for opt, _, _ in MM_OPTIMIZATIONS for n in MM_INNER]
    spec = TableSpec([ColumnSpec("Loop order", width=10, align="<")] + _mflops_columns(names))
    return ScenarioResult(
        "mm",
        f"Matrix multiply C = AB, A is LxN, B is NxM, L=M={MM_OUTER}, Mflops",
        spec,
        rows,
        list(results),
    )


def scenario_mm(min_time: float = DEFAULT_MIN_TIME, seed: int = DEFAULT_SEED) -> ScenarioResult:
    return mm_table([measure(c, min_time, seed) for c in mm_cases()])


def blocked_cases(sizes: Sequence[int] = DEFAULT_SIZES) -> List[KernelCase]:
    if not sizes or any(int(n) <= 0 for n in sizes):
        raise ValueError(f"sizes must be positive, got {list(sizes)}")
    unblocked, blocked = GemmConfig(), GemmConfig(blocking=optimal_block_size())
    return [gemm_case("blocked", config, int(n), int(n), int(n)) for n in sizes for config in (unblocked, blocked)]


def blocked_table(results: Sequence[BenchResult]) -> ScenarioResult:
    pairs = list(zip(results[0::2], results[1::2]))
    rows = [[case_dims(ru.case)["N"], ru.mflops, rb.mflops] for ru, rb in pairs]
    spec = TableSpec([ColumnSpec("n", width=5)] + _mflops_columns(["unblocked_mflops", "blocked_mflops"]))
    label = pairs[0][1].case.variant if pairs else "blocked"
    return ScenarioResult(
        "blocked",
        f"{label} versus unblocked (i,j,k) matrix multiply, Mflops",
        spec,
        rows,
        list(results),
    )


def scenario_blocked(sizes: Sequence[int] = DEFAULT_SIZES, min_time: float = DEFAULT_MIN_TIME,
                     seed: int = DEFAULT_SEED) -> ScenarioResult:
    return blocked_table([measure(c, min_time, seed) for c in blocked_cases(sizes)])


def load_sparse(path) -> CooMatrix:
    A = read_matrix_market(path)
    if not isinstance(A, CooMatrix):
        raise MatrixMarketError(f"{path}: expected a coordinate (sparse) matrix")
    return A


def sparse_cases(files: Optional[Sequence] = None) -> List[KernelCase]:
    cases = []
    for path in (list(files) if files else [bundled_matrix_path()]):
        A = load_sparse(path)
        cases.append(KernelCase(
            "sparse", "coo_matvec", matrix_name(path), f"order={A.rows},entries={A.nnz}", 2 * A.nnz,
            make=lambda seed, A=A: SparseWorkload(A, seed),
        ))
    return cases


def sparse_table(results: Sequence[BenchResult]) -> ScenarioResult:
    rows = []
    for r in results:
        dims = case_dims(r.case)
        rows.append([r.case.variant, dims["order"], dims["entries"], r.mflops])
    spec = TableSpec([
        ColumnSpec("Matrix", width=10, align="<"),
        ColumnSpec("Order", width=7),
        ColumnSpec("Entries", width=8),
        ColumnSpec("Mflops", width=8, precision=1),
    ])
    return ScenarioResult("sparse", "Sparse matrix-vector multiply (coordinate format), Mflops", spec, rows,
                          list(results))


def scenario_sparse(files: Optional[Sequence] = None, min_time: float = DEFAULT_MIN_TIME,
                    seed: int = DEFAULT_SEED) -> ScenarioResult:
    return sparse_table([measure(c, min_time, seed) for c in sparse_cases(files)])


def run_scenario(name: str, min_time: float = DEFAULT_MIN_TIME, seed: int = DEFAULT_SEED,
                 sizes: Optional[Sequence[int]] = None, matrices: Optional[Sequence] = None) -> List[ScenarioResult]:
    if name == "all":
        return [r for s in SCENARIOS for r in run_scenario(s, min_time, seed, sizes, matrices)]
    if name == "level1":
        return [scenario_level1(min_time, seed)]
    if name == "mm":
        return [scenario_mm(min_time, seed)]
    if name == "blocked":
        return [scenario_blocked(sizes or DEFAULT_SIZES, min_time, seed)]
    if name == "sparse":
        return [scenario_sparse(matrices, min_time, seed)]
    raise ValueError(f"unknown scenario {name!r}")


__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_SIZES",
    "SCENARIOS",
    "ScenarioResult",
    "environment_label",
    "run_scenario",
    "scenario_blocked",
    "scenario_level1",
    "scenario_mm",
    "scenario_sparse",
]
