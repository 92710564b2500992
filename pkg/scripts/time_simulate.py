#!/usr/bin/env python3
"""Quick perf benchmark for the online simulation on a large random instance."""

from __future__ import annotations

import argparse
import cProfile
import io
import pstats
import statistics
import time

from tqdm import tqdm

from rentmin.generators import GenSpec, gen_random
from rentmin.model import Instance
from rentmin.online import simulate_online
from rentmin.oracle import OracleStrategy


def _run_once(inst: Instance, strategy: OracleStrategy) -> tuple[float, int, int]:
    start = time.perf_counter()
    trace = simulate_online(inst, strategy=strategy)
    duration = time.perf_counter() - start
    return duration, trace.total_rents, len(trace.steps)


def main() -> int:
    parser = argparse.ArgumentParser(description="Benchmark simulate_online throughput")
    parser.add_argument("--n", type=int, default=100_000, help="Jobs in the random instance")
    parser.add_argument("--horizon", type=int, default=20_000, help="Release range; the defaults give 5 jobs per slot")
    parser.add_argument("--T", dest="T", type=int, default=10)
    parser.add_argument("--max-window", type=int, default=50)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument(
        "--strategy",
        choices=[strategy.value for strategy in OracleStrategy],
        default=OracleStrategy.MATCHING,
    )
    parser.add_argument("--runs", type=int, default=3, help="Measured runs")
    parser.add_argument("--max-seconds", type=float, default=None, help="Exit 1 when the best run is slower")
    parser.add_argument("--warmups", type=int, default=0, help="Warmup runs")
    parser.add_argument(
        "--no-progress",
        action="store_true",
        help="Disable tqdm progress bars",
    )
    parser.add_argument("--profile", action="store_true", help="Run cProfile and print top hotspots")
    parser.add_argument("--profile-top", type=int, default=30)
    parser.add_argument(
        "--profile-sort",
        type=str,
        default="tottime",
        help="cProfile sort key (default: tottime, common: cumulative)",
    )
    args = parser.parse_args()

    inst = gen_random(
        GenSpec(n=args.n, horizon=args.horizon, T=args.T, max_window=args.max_window, seed=args.seed)
    )
    strategy = OracleStrategy(args.strategy)
    runs = max(args.runs, 1)

    def _benchmark() -> tuple[list[float], int, int]:
        for _ in range(max(args.warmups, 0)):
            _run_once(inst, strategy)
        timings: list[float] = []
        rents = events = 0
        for _ in tqdm(range(runs), desc="simulate", unit="run", disable=args.no_progress):
            duration, rents, events = _run_once(inst, strategy)
            timings.append(duration)
        return timings, rents, events

    if args.profile:
        profiler = cProfile.Profile()
        profiler.enable()
        timings, rents, events = _benchmark()
        profiler.disable()
        stream = io.StringIO()
        stats = pstats.Stats(profiler, stream=stream)
        stats.sort_stats(args.profile_sort).print_stats(max(args.profile_top, 1))
        print("\n[cProfile top functions]")
        print(stream.getvalue())
    else:
        timings, rents, events = _benchmark()

    mean = statistics.mean(timings)
    print(f"Jobs: {inst.n} (T={inst.T}, strategy={strategy})")
    print(f"Events: {events}")
    print(f"Rents: {rents}")
    print(f"Runs: {len(timings)} (warmups={max(args.warmups, 0)})")
    print(f"Best:   {min(timings):.4f}s")
    print(f"Median: {statistics.median(timings):.4f}s")
    print(f"Mean:   {mean:.4f}s")
    print(f"Worst:  {max(timings):.4f}s")
    print(f"Jobs/s (mean): {inst.n / mean:.1f}")
    if args.max_seconds is not None and min(timings) > args.max_seconds:
        print(f"Best run exceeds --max-seconds {args.max_seconds}")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
