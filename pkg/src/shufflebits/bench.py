"""CPU-time micro-benchmark of the traversal on symmetric instances."""
from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass
from typing import TextIO

from shufflebits.core import ShuffleSpec, enumerate_events

BENCH_MAX_SIZE = 16
CSV_HEADER = ("zeros", "ones", "repeat", "cpu_seconds", "count")


@dataclass
class BenchRecord:
    zeros: int
    ones: int
    repeat_index: int
    elapsed_cpu_seconds: float
    emitted_count: int


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0

    def __call__(self, event):
        self.n += 1


def time_enumeration(spec: ShuffleSpec, backend: str | None = None) -> tuple[float, int]:
    """CPU seconds and event count for one counting-visitor traversal of ``spec``."""
    counter = _Counter()
    start = time.process_time()
    enumerate_events(spec, counter, backend)
    return time.process_time() - start, counter.n


def run_bench(max_size: int, repeats: int, backend: str | None = None):
    if not 1 <= max_size <= BENCH_MAX_SIZE:
        raise ValueError(f"max size must be in 1..{BENCH_MAX_SIZE}")
    if repeats < 1:
        raise ValueError("repeats must be positive")
    for n in range(1, max_size + 1):
        spec = ShuffleSpec(n, n)
        for r in range(repeats):
            elapsed, emitted = time_enumeration(spec, backend)
            yield BenchRecord(n, n, r, elapsed, emitted)


def write_csv(records, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        row = astuple(record)
        writer.writerow(row[:3] + (f"{row[3]:.6f}", row[4]))
        out.flush()
