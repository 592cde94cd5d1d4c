"""Wall-clock benchmarks and growth-exponent fits for the fast-path operations."""

from __future__ import annotations

import gc
import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from . import distances, labelling, selection
from .decomposition import decompose
from .generator import GenSpec, random_cactus
from .graph import Graph

MIN_REPS = 5

# op name -> callable(graph, tree); "decompose" ignores the tree and times the decomposition itself
OPERATIONS: dict[str, Callable] = {
    "sssp": lambda g, t: distances.sssp(g, t, 0),
    "apsp": distances.apsp,
    "decompose": lambda g, t: decompose(g),
    "dominate": selection.min_dominating_set,
    "cover2": selection.min_2nc_set,
    "mis": selection.max_independent_set,
    "m2is": selection.max_2_independent_set,
    "mw2is": selection.max_weight_2_colorable,
    "fvs": selection.min_weight_fvs,
    "span-max": distances.max_height_spanning_tree,
    "span-min": distances.min_height_spanning_tree,
    "label-l21": labelling.label_l21,
    "label-l01": labelling.label_l01,
    "label-t21": labelling.label_t21,
}

_LABEL_SCHEMES = {"label-l21": "l21", "label-l01": "l01", "label-t21": "t21"}


@dataclass(frozen=True)
class BenchRecord:
    operation: str
    n: int
    seconds: float  # median over repetitions
    repetitions: int
    repairs: int = 0  # labelling repair invocations (labelling ops only)

    def __post_init__(self):
        if self.repetitions < MIN_REPS:
            raise ValueError(f"need at least {MIN_REPS} repetitions")

    def to_dict(self) -> dict:
        return {
            "operation": self.operation,
            "n": self.n,
            "seconds": self.seconds,
            "repetitions": self.repetitions,
            "repairs": self.repairs,
        }


def corpus_graph(target_n: int, seed: int = 0) -> Graph:
    """A generated cactus with roughly ``target_n`` vertices (default GenSpec mix)."""
    # half edges (+1 vertex), half cycles of length 3..6 (+3.5 on average)
    blocks = max(1, round((target_n - 1) / 2.25))
    return random_cactus(GenSpec(blocks, seed=seed))


def _median_time(fn: Callable[[], object], reps: int) -> float:
    times = []
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(reps):
            start = time.perf_counter()
            fn()
            times.append(time.perf_counter() - start)
    finally:
        if enabled:
            gc.enable()
    return statistics.median(times)


def bench_many(ops: Sequence[str], sizes: Sequence[int], seed: int = 0, reps: int = MIN_REPS) -> dict[str, list[BenchRecord]]:
    """Time several operations, generating each size's graph once."""
    for op in ops:
        if op not in OPERATIONS:
            raise ValueError(f"unknown operation {op!r}; choose from {', '.join(OPERATIONS)}")
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if reps < MIN_REPS:
        raise ValueError(f"need at least {MIN_REPS} repetitions")
    out: dict[str, list[BenchRecord]] = {op: [] for op in ops}
    for size in sizes:
        g = corpus_graph(size, seed)
        t = decompose(g)
        for op in ops:
            fn = OPERATIONS[op]
            repairs = 0
            if op in _LABEL_SCHEMES:
                _, stats = labelling.label_with_stats(g, t, _LABEL_SCHEMES[op])
                repairs = stats.block_repairs + stats.fan_repairs
            secs = _median_time(lambda: fn(g, t), reps)
            out[op].append(BenchRecord(op, g.n, secs, reps, repairs))
        del g, t
        gc.collect()
    return out


def bench(op: str, sizes: Sequence[int], seed: int = 0, reps: int = MIN_REPS) -> list[BenchRecord]:
    return bench_many([op], sizes, seed, reps)[op]


def fit_exponent(records: Sequence[BenchRecord]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    if len(records) < 2:
        raise ValueError("need at least two sizes to fit an exponent")
    xs = [math.log(r.n) for r in records]
    ys = [math.log(max(r.seconds, 1e-9)) for r in records]
    return statistics.linear_regression(xs, ys).slope
