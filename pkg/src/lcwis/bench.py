"""Wall-clock scaling of the quadratic LCWIS solver."""

import random
import statistics
import time

from .solvers import lcwis

BENCH_ALPHABET = 256


def _random_pair(rng, size):
    return (
        [rng.randrange(BENCH_ALPHABET) for _ in range(size)],
        [rng.randrange(BENCH_ALPHABET) for _ in range(size)],
    )


def run_bench(sizes, repeats=3, seed=0):
    """Return ``[(size, median_seconds, ratio_to_previous_or_None), ...]``."""
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rng = random.Random(seed)
    lcwis([1, 2], [2, 1])  # JIT warm-up
    rows = []
    prev = None
    for size in sizes:
        a, b = _random_pair(rng, size)
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            lcwis(a, b)
            times.append(time.perf_counter() - t0)
        med = statistics.median(times)
        rows.append((size, med, None if prev is None else med / prev))
        prev = med
    return rows


def format_table(rows) -> str:
    out = [f"{'size':>8} {'median_s':>12} {'ratio':>8}"]
    for size, med, ratio in rows:
        out.append(f"{size:>8} {med:>12.6f} {'-' if ratio is None else f'{ratio:.3f}':>8}")
    return "\n".join(out) + "\n"
