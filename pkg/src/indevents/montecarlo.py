"""Monte Carlo cross-checks for union probabilities.

Randomness comes from a counter-based generator: draw ``c`` of stream ``s``
is a pure function of ``(seed, s, c)``.  Samples are split into
``cfg.streams`` contiguous blocks, one stream each, so the estimates depend
only on ``(seed, streams, n_samples)`` and never on how many worker threads
evaluate the blocks.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

import numpy as np

from . import kernels
from .errors import DomainError
from .families import SeriesFamily
from .numbers import as_probseq
from .realizer import ONE, ZERO, Construction

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    n_samples: int = 100_000
    streams: int = 1
    workers: Optional[int] = None
    backend: Optional[str] = None

    def __post_init__(self):
        if self.n_samples < 1:
            raise DomainError("n_samples must be at least 1")
        if self.streams < 1:
            raise DomainError("streams must be at least 1")
        object.__setattr__(self, "seed", self.seed & _SEED_MASK)

    def blocks(self):
        """``(stream, count)`` pairs covering all samples."""
        n, k = self.n_samples, self.streams
        return [(s, (s + 1) * n // k - s * n // k) for s in range(k)]


@dataclass(frozen=True)
class Estimate:
    estimate: float
    stderr: float
    hits: int
    n_samples: int


def _estimate(hits: int, n: int) -> Estimate:
    p = hits / n
    return Estimate(p, math.sqrt(p * (1 - p) / n), hits, n)


def _fan_out(cfg: SampleConfig, job: Callable[[int, int], object]) -> list:
    blocks = [(s, c) for s, c in cfg.blocks() if c]
    workers = cfg.workers or 1
    if workers <= 1 or len(blocks) <= 1:
        return [job(s, c) for s, c in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda b: job(*b), blocks))


def first_hit_counts(probs: Iterable[float], cfg: SampleConfig) -> np.ndarray:
    """Per trial, the index of the first event that occurs; the last bin counts trials with none."""
    p = np.ascontiguousarray([float(v) for v in probs], dtype=np.float64)
    k = kernels.get(cfg.backend)
    parts = _fan_out(cfg, lambda s, c: k.first_hits(cfg.seed, s, 0, c, p))
    return np.sum(parts, axis=0) if parts else np.zeros(len(p) + 1, dtype=np.int64)


def estimate_union_bernoulli(x: Iterable, cfg: SampleConfig) -> Estimate:
    """Fraction of simulated trials in which at least one independent coin comes up."""
    x = as_probseq(x)
    counts = first_hit_counts(x.values, cfg)
    return _estimate(int(cfg.n_samples - counts[-1]), cfg.n_samples)


def _union_geometry(c: Construction):
    rects = sorted((r for m, rs in c.atoms.items() if m for r in rs), key=lambda r: (r.x_lo, r.y_lo))
    if all(r.y_lo == ZERO and r.y_hi == ONE for r in rects):
        strips: List[list] = []
        for r in rects:
            if strips and strips[-1][1] == r.x_lo:
                strips[-1][1] = r.x_hi
            else:
                strips.append([r.x_lo, r.x_hi])
        lo = np.array([float(a) for a, _ in strips], dtype=np.float64)
        hi = np.array([float(b) for _, b in strips], dtype=np.float64)
        return "strips", (lo, hi)
    cols = [np.array([float(getattr(r, f)) for r in rects], dtype=np.float64) for f in ("x_lo", "x_hi", "y_lo", "y_hi")]
    return "rects", tuple(cols)


def estimate_union_geometric(c: Construction, cfg: SampleConfig) -> Estimate:
    """Fraction of uniform points in the unit square that land in some realized event."""
    kind, arrays = _union_geometry(c)
    k = kernels.get(cfg.backend)
    fn = k.strip_hits if kind == "strips" else k.rect_hits
    hits = sum(_fan_out(cfg, lambda s, n: fn(cfg.seed, s, 0, n, *arrays)))
    return _estimate(int(hits), cfg.n_samples)


@dataclass(frozen=True)
class ScanRow:
    n: int
    exact: object
    empirical: float
    stderr: float


def borel_cantelli_scan(family: SeriesFamily, n_max: int, cfg: SampleConfig) -> List[ScanRow]:
    """Exact and simulated ``P(A_1 | ... | A_N)`` for ``N = 1..n_max``.

    One simulation covers every ``N``: a trial counts for ``N`` when its first
    occurring event has index at most ``N``.
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    terms = family.terms(n_max)
    if any(v >= 1 for v in terms):
        raise DomainError("scan needs every probability below 1")
    survive = Fraction(1) if family.exact else 1.0
    counts = first_hit_counts(terms, cfg)
    rows, hits = [], 0
    for n, v in enumerate(terms, start=1):
        survive *= 1 - v
        hits += int(counts[n - 1])
        est = _estimate(hits, cfg.n_samples)
        rows.append(ScanRow(n, 1 - survive, est.estimate, est.stderr))
    return rows


def scan_csv(rows: Iterable[ScanRow], exact: bool = False) -> str:
    """CSV with header ``N,exact,empirical,stderr``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "exact", "empirical", "stderr"])
    for r in rows:
        ex = f"{r.exact.numerator}/{r.exact.denominator}" if exact and isinstance(r.exact, Fraction) else f"{float(r.exact):.12g}"
        w.writerow([r.n, ex, f"{r.empirical:.12g}", f"{r.stderr:.12g}"])
    return buf.getvalue()
