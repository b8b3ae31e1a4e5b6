"""Inversion statistics of primitive-root cycles, with a null-model Monte Carlo.

A cycle is always written with 1 first, so its randomness is judged
against uniform permutations of the remaining p - 2 entries.  Under
that null the inversion count has mean (p-2)(p-3)/4 and variance
(p-2)(p-3)(2p+1)/72, and the observed mean over all primitive roots
hits the theoretical mean exactly because inverse roots generate
mutually reversed cycles.
"""

from __future__ import annotations

import operator
from concurrent.futures import ThreadPoolExecutor
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .genseq import generator_cycle
from .modarith import OddPrime, prime_value
from .primroots import primitive_roots
from .rng import RNG_ALGORITHM, SplitMix64, stream_seeds

__all__ = [
    "InversionSummary",
    "SimConfig",
    "SimReport",
    "count_inversions",
    "inversion_null_moments",
    "inversion_summary",
    "random_fixed_cycle",
    "sd_pvalue",
    "simulate_inversions",
]

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


def count_inversions(seq) -> int:
    """Number of pairs (i, j) with i < j but seq[i] > seq[j].

    O(n log n) via merge counting in the active kernel backend.
    Elements must be distinct integers; values outside the int64 range
    are rank-compressed first (order, hence count, is unchanged).
    """
    values = [operator.index(v) for v in seq]
    ordered = sorted(values)
    for x, y in zip(ordered, ordered[1:]):
        if x == y:
            raise ValueError(
                f"duplicate element {x}: inversion counting needs distinct entries"
            )
    if ordered and (ordered[0] < _INT64_MIN or ordered[-1] > _INT64_MAX):
        rank = {v: i for i, v in enumerate(ordered)}
        values = [rank[v] for v in values]
    return _kernels.count_inversions(values)


def inversion_null_moments(p: int | OddPrime) -> tuple[Fraction, Fraction]:
    """Exact (mean, variance) of inversions of a random fixed cycle.

    Fixing 1 in front leaves a uniform permutation of p - 2 entries;
    the classical inversion moments of S_n with n = p - 2 give
    mean (p-2)(p-3)/4 and variance (p-2)(p-3)(2p+1)/72.
    """
    p = prime_value(p)
    if p < 5:
        raise ValueError("p must be >= 5: a 2-element universe has a single cycle")
    mean = Fraction((p - 2) * (p - 3), 4)
    variance = Fraction((p - 2) * (p - 3) * (2 * p + 1), 72)
    return mean, variance


@dataclass(frozen=True)
class InversionSummary:
    """Observed inversion counts over every primitive-root cycle of p."""

    p: int
    per_root: tuple[tuple[int, int], ...]
    sample_mean: Fraction
    sample_sd: float
    theory_mean: Fraction
    theory_sd: float

    def counts(self) -> list[int]:
        return [c for _, c in self.per_root]


def _exact_sample_variance(counts: list[int]) -> Fraction:
    """Unbiased (n-1 denominator) sample variance as an exact rational."""
    n = len(counts)
    if n < 2:
        raise ValueError("need at least two observations")
    s1 = sum(counts)
    s2 = sum(c * c for c in counts)
    return (Fraction(s2) - Fraction(s1 * s1, n)) / (n - 1)


def inversion_summary(p: int | OddPrime) -> InversionSummary:
    """Inversion counts of every primitive-root cycle, with both moments.

    Sample statistics use the n-1 denominator.  The sample mean always
    lands exactly on the theoretical mean: inverse roots give reversed
    cycles whose counts sum to the fixed total (p-2)(p-3)/2.
    """
    p = prime_value(p)
    theory_mean, theory_var = inversion_null_moments(p)
    per_root = []
    for g in primitive_roots(p):
        cycle = generator_cycle(g, p)
        per_root.append((g, count_inversions(cycle.states)))
    counts = [c for _, c in per_root]
    sample_mean = Fraction(sum(counts), len(counts))
    sample_var = _exact_sample_variance(counts)
    return InversionSummary(
        p=p,
        per_root=tuple(per_root),
        sample_mean=sample_mean,
        sample_sd=float(sample_var) ** 0.5,
        theory_mean=theory_mean,
        theory_sd=float(theory_var) ** 0.5,
    )


@dataclass(frozen=True)
class SimConfig:
    """Fully determines a simulation: same config, same output, always.

    `streams` is the partition plan: iterations are split into that many
    contiguous chunks, each driven by a seed derived from (seed, index).
    Workers only schedule the chunks, so output is independent of how
    many actually run in parallel.
    """

    seed: int
    iterations: int
    streams: int = 1
    rng_algorithm: str = RNG_ALGORITHM

    def __post_init__(self):
        if not 0 <= self.seed < (1 << 64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.streams < 1:
            raise ValueError(f"streams must be >= 1, got {self.streams}")
        if self.rng_algorithm != RNG_ALGORITHM:
            raise ValueError(
                f"unsupported rng_algorithm {self.rng_algorithm!r}; "
                f"only {RNG_ALGORITHM!r} is implemented"
            )

    def stream_plan(self) -> list[tuple[int, int]]:
        """(stream_seed, iteration_count) per stream; counts sum to iterations."""
        seeds = stream_seeds(self.seed, self.streams)
        base, extra = divmod(self.iterations, self.streams)
        return [(s, base + (1 if i < extra else 0)) for i, s in enumerate(seeds)]


@dataclass(frozen=True)
class SimReport:
    """Monte Carlo output: exact-value histogram plus sample moments."""

    histogram: dict[int, int]
    sample_mean: float
    sample_sd: float
    config: SimConfig

    @classmethod
    def from_counts(cls, counts: list[int], config: SimConfig) -> "SimReport":
        if len(counts) != config.iterations:
            raise RuntimeError(
                f"drew {len(counts)} values for {config.iterations} iterations"
            )
        histogram = dict(sorted(Counter(counts).items()))
        mean = Fraction(sum(counts), len(counts))
        sd = float(_exact_sample_variance(counts)) ** 0.5 if len(counts) > 1 else 0.0
        return cls(
            histogram=histogram,
            sample_mean=float(mean),
            sample_sd=sd,
            config=config,
        )


def _run_partitioned(draw, plan, workers: int) -> list[int]:
    """Run one kernel call per stream, concatenating in stream order."""
    live = [(seed, n) for seed, n in plan if n > 0]
    if workers <= 1 or len(live) <= 1:
        chunks = [draw(seed, n) for seed, n in live]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda sn: draw(*sn), live))
    out = []
    for chunk in chunks:
        out.extend(chunk)
    return out


def random_fixed_cycle(p: int | OddPrime, rng: SplitMix64) -> list[int]:
    """1 followed by a uniform permutation of [2, p-1] (Fisher-Yates)."""
    p = prime_value(p)
    if p < 5:
        raise ValueError(f"p must be >= 5, got {p}")
    tail = list(range(2, p))
    rng.shuffle(tail)
    return [1] + tail


def simulate_inversions(
    p: int | OddPrime, config: SimConfig, workers: int = 1
) -> SimReport:
    """Histogram of inversion counts over random fixed cycles from S_{p-1}."""
    p = prime_value(p)
    if p < 5:
        raise ValueError(f"p must be >= 5, got {p}")
    tail_len = p - 2
    counts = _run_partitioned(
        lambda seed, n: _kernels.simulate_inversion_counts(tail_len, n, seed),
        config.stream_plan(),
        workers,
    )
    return SimReport.from_counts(counts, config)


def sd_pvalue(p: int | OddPrime, config: SimConfig, workers: int = 1) -> float:
    """Monte Carlo p-value for the observed root-cycle standard deviation.

    Each of config.iterations batches draws phi(p-1) random fixed cycles
    (the size of the primitive-root sample) and scores whether the batch
    sample sd reaches the observed one.  Comparison happens on exact
    rational variances, so ties are counted deterministically.
    """
    p = prime_value(p)
    summary = inversion_summary(p)
    observed_var = _exact_sample_variance(summary.counts())
    batch = len(summary.per_root)
    tail_len = p - 2
    counts = _run_partitioned(
        lambda seed, n: _kernels.simulate_inversion_counts(tail_len, n * batch, seed),
        config.stream_plan(),
        workers,
    )
    hits = 0
    for start in range(0, len(counts), batch):
        if _exact_sample_variance(counts[start : start + batch]) >= observed_var:
            hits += 1
    return hits / config.iterations
