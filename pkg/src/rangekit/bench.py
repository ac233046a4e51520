"""Instrumented benchmark harness.

Reports two kinds of numbers per grid cell: deterministic work counters
(search iterations, model-array accesses, rescale accesses) that are exact
and reproducible, and wall-clock throughput that is informative only.
Timing keeps the minimum of several repetitions; counters come from a
single instrumented pass.
"""

from __future__ import annotations

import csv
import time
from collections import Counter
from dataclasses import dataclass, fields

import numpy as np

from .datagen import GenSpec, gen_sequence
from .linear_model import LinearModel
from .rangecoder import (
    CoderConfig, DecodeStats, Decoder, Encoder, decode_stream, encode_stream,
    strategy_compatible,
)
from . import search as _search

POW2_KS = tuple(2 ** n for n in range(1, 11))


@dataclass
class BenchRecord:
    mode: str
    distribution: str
    k: int
    n: int
    model: str
    search: str
    rescale: str
    rescale_interval: int
    seed: int
    encode_ns_per_symbol: float
    decode_ns_per_symbol: float
    avg_search_iterations: float
    avg_model_accesses_per_symbol: float
    rescale_access_count: int
    output_bytes: int
    entropy_bits_per_symbol: float
    skip_reason: str = ""


CSV_COLUMNS = [f.name for f in fields(BenchRecord)]


@dataclass(frozen=True)
class GridSpec:
    ks: tuple = POW2_KS
    distributions: tuple = ("flat", "geometric")
    modes: tuple = ("static", "adaptive")
    models: tuple = ("linear", "fenwick")
    searches: tuple = _search.STRATEGIES
    rescales: tuple = ("orig", "new")
    n: int = 10 ** 6
    seed: int = 1
    rescale_interval: int = 1024
    timing_reps: int = 5


@dataclass
class IterationStats:
    histogram: dict  # iteration count -> percentage
    average: float


def empirical_entropy(symbols, k: int) -> float:
    """Order-0 entropy of the sequence in bits per symbol."""
    counts = np.bincount(np.asarray(symbols, dtype=np.int64), minlength=k)
    n = counts.sum()
    if n == 0:
        return 0.0
    p = counts[counts > 0] / n
    return float(-(p * np.log2(p)).sum())


def _skip_record(mode, dist, k, n, model, strategy, rescale, interval, seed, reason):
    return BenchRecord(mode, dist, k, n, model, strategy, rescale, interval,
                       seed, 0.0, 0.0, 0.0, 0.0, 0, 0, 0.0, reason)


def run_cell(mode: str, distribution: str, k: int, model: str, strategy: str,
             rescale: str, n: int, seed: int, rescale_interval: int,
             timing_reps: int = 5) -> BenchRecord:
    interval = rescale_interval if mode == "adaptive" else 0
    reason = strategy_compatible(strategy, model, mode)
    if reason is not None:
        return _skip_record(mode, distribution, k, n, model, strategy, rescale,
                            interval, seed, reason)
    symbols = gen_sequence(GenSpec(distribution, k, n, seed)).tolist()
    cfg = CoderConfig(mode, model, rescale, interval)

    payload = encode_stream(symbols, k, cfg)
    stats = DecodeStats()
    _, decoded = decode_stream(payload, strategy, stats)
    if decoded != symbols:
        raise AssertionError("round trip failed in bench cell")

    enc_ns = min(_time_ns(lambda: encode_stream(symbols, k, cfg))
                 for _ in range(timing_reps))
    dec_ns = min(_time_ns(lambda: decode_stream(payload, strategy))
                 for _ in range(timing_reps))

    n_eff = max(1, n)
    return BenchRecord(
        mode, distribution, k, n, model, strategy, rescale, interval, seed,
        enc_ns / n_eff, dec_ns / n_eff,
        stats.search_iterations / n_eff,
        stats.update_accesses / n_eff,
        stats.rescale_accesses,
        len(payload),
        empirical_entropy(symbols, k),
    )


def _time_ns(fn) -> int:
    t0 = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - t0


def run_suite(grid: GridSpec) -> list[BenchRecord]:
    """One record per (K x distribution x mode x model x search x rescale)."""
    records = []
    for dist in grid.distributions:
        for k in grid.ks:
            for mode in grid.modes:
                for model in grid.models:
                    for strategy in grid.searches:
                        for rescale in grid.rescales:
                            records.append(run_cell(
                                mode, dist, k, model, strategy, rescale,
                                grid.n, grid.seed, grid.rescale_interval,
                                grid.timing_reps))
    return records


def write_csv(records, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([getattr(rec, name) for name in CSV_COLUMNS])


def iteration_histogram(strategy: str, sequence, k: int) -> IterationStats:
    """Replay decoder searches over the code values a static encode produced.

    The static model is built from the raw sequence counts (no header
    normalization), so the statistics reflect the exact empirical
    distribution.  The code values do not depend on the strategy, so one
    capture pass serves any number of replays.
    """
    sequence = list(sequence)
    if not sequence:
        raise ValueError("empty sequence")
    counts = [0] * k
    for s in sequence:
        counts[s] += 1
    model = LinearModel(counts, adaptive=False)
    hk = model.hk
    total = model.total_count

    enc = Encoder()
    for s in sequence:
        enc.encode(hk[s], model.h[s], total)
    payload = enc.finish()

    dec = Decoder(payload)
    code_values = []
    for s in sequence:
        c = dec.decode_target(total)
        if not hk[s] <= c < hk[s + 1]:
            raise AssertionError("decoder desynchronized during capture")
        dec.consume(hk[s], model.h[s])
        code_values.append(c)

    hist: Counter = Counter()
    if strategy == "table":
        hist[1] = len(code_values)
    elif strategy == "tree":
        tree = _search.build_search_tree(hk)
        for c in code_values:
            hist[_search.tree_search(c, hk, tree)[1]] += 1
    elif strategy == "log2":
        i_mid = _search.determine_initial_split(hk)
        for c in code_values:
            hist[_search.log2_search(c, hk, i_mid)[1]] += 1
    elif strategy == "log":
        for c in code_values:
            hist[_search.logarithmic(c, hk)[1]] += 1
    elif strategy == "lin-fwd":
        for c in code_values:
            hist[_search.linear_forward(c, hk)[1]] += 1
    elif strategy == "lin-bwd":
        for c in code_values:
            hist[_search.linear_backward(c, hk)[1]] += 1
    elif strategy == "exp":
        for c in code_values:
            hist[_search.exponential(c, hk)[1]] += 1
    else:
        raise ValueError(f"unsupported strategy for histogram: {strategy!r}")

    n = len(code_values)
    average = sum(it * cnt for it, cnt in hist.items()) / n
    pct = {it: 100.0 * cnt / n for it, cnt in sorted(hist.items())}
    return IterationStats(pct, average)
