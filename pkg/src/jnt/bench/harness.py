"""Timing harness: verify once, warm up, then double the repetition count until
the measured interval reaches the minimum time."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from jnt.errors import VerificationError

DEFAULT_MIN_TIME = 1.0
DEFAULT_SEED = 12345


@dataclass(frozen=True)
class KernelCase:
    scenario: str
    kernel: str
    variant: str
    dims: str
    flop_count: int
    make: Callable[[int], Any] = field(repr=False, compare=False)


@dataclass(frozen=True)
class BenchResult:
    case: KernelCase
    repetitions: int
    elapsed_seconds: float
    mflops: float
    checksum: float
    verified: bool

    def csv_row(self):
        c = self.case
        return [
            c.scenario,
            c.kernel,
            c.variant,
            c.dims,
            c.flop_count,
            self.repetitions,
            self.elapsed_seconds,
            self.mflops,
            self.checksum,
            "true" if self.verified else "false",
        ]


CSV_COLUMNS = (
    "scenario",
    "kernel",
    "variant",
    "dims",
    "flop_count",
    "repetitions",
    "elapsed_seconds",
    "mflops",
    "checksum",
    "verified",
)


def mflops(repetitions: int, flop_count: int, elapsed: float) -> float:
    return repetitions * flop_count / (elapsed * 1e6)


def measure(case: KernelCase, min_time: float = DEFAULT_MIN_TIME, seed: int = DEFAULT_SEED,
            clock=time.perf_counter) -> BenchResult:
    """Verify ``case`` against its reference, then time it.

    Raises VerificationError without timing anything if the variant's output
    disagrees with the reference.
    """
    work = case.make(seed)
    ok, detail, checksum = work.verify()
    if not ok:
        raise VerificationError(f"{case.scenario}/{case.kernel}/{case.variant} [{case.dims}]: {detail}")
    work.prepare()
    work.run(1)  # warm-up: JIT compilation and cache fill
    reps = 1
    while True:
        t0 = clock()
        work.run(reps)
        elapsed = clock() - t0
        if elapsed >= min_time:
            break
        reps *= 2
    return BenchResult(case, reps, elapsed, mflops(reps, case.flop_count, elapsed), checksum, True)


def timer_overhead(samples: int = 1000, clock=time.perf_counter) -> float:
    """Median cost of one back-to-back clock read pair."""
    deltas = []
    for _ in range(samples):
        t0 = clock()
        deltas.append(clock() - t0)
    deltas.sort()
    return deltas[len(deltas) // 2]
