"""Elementary symmetric sums, inclusion-exclusion and Bonferroni truncations.

For independent events the ``k``-th inclusion-exclusion term ``S_k`` is the
``k``-th elementary symmetric polynomial of the probabilities.  The sums are
built by multiplying the polynomial ``prod (1 + x_n t)`` one factor at a time.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from .errors import DomainError, NotConvergent, RatioTooLarge
from .families import SeriesFamily
from .numbers import format_rational, as_probseq

# truncation depth for bounding S_K of an infinite family
_TAIL_EPS = 1e-18


@dataclass(frozen=True)
class SymmetricSums:
    """``S_1, ..., S_N`` for a sequence of ``N`` probabilities (``values[k-1] = S_k``)."""

    values: tuple
    source_n: int
    mode: str

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int):
        """``S_k`` with 1-based ``k``; ``S_0 = 1`` and ``S_k = 0`` past ``N``."""
        if k == 0:
            return Fraction(1) if self.mode == "exact" else 1.0
        if k < 0:
            raise IndexError(k)
        if k > len(self.values):
            return Fraction(0) if self.mode == "exact" else 0.0
        return self.values[k - 1]

    def alternating(self, upto: Optional[int] = None):
        """``sum_{k <= upto} (-1)**(k-1) S_k``; ``upto`` is clamped to ``N``."""
        terms = [(-v if k % 2 == 0 else v) for k, v in enumerate(self.values[:upto], start=1)]
        if self.mode == "exact":
            return sum(terms, Fraction(0))
        return math.fsum(terms)

    def partial_sums(self) -> list:
        out, acc = [], []
        for k, v in enumerate(self.values, start=1):
            acc.append(-v if k % 2 == 0 else v)
            out.append(sum(acc, Fraction(0)) if self.mode == "exact" else math.fsum(acc))
        return out


def _elementary_float(xs) -> List[float]:
    # Neumaier-compensated coefficients of prod (1 + x t); all updates add non-negative terms
    coef = [1.0] + [0.0] * len(xs)
    comp = [0.0] * (len(xs) + 1)
    for m, x in enumerate(xs, start=1):
        for k in range(m, 0, -1):
            term = x * (coef[k - 1] + comp[k - 1])
            s = coef[k] + term
            if abs(coef[k]) >= abs(term):
                comp[k] += (coef[k] - s) + term
            else:
                comp[k] += (term - s) + coef[k]
            coef[k] = s
    return [c + e for c, e in zip(coef[1:], comp[1:])]


def _elementary_exact(xs) -> List[Fraction]:
    coef = [Fraction(1)] + [Fraction(0)] * len(xs)
    for m, x in enumerate(xs, start=1):
        for k in range(m, 0, -1):
            coef[k] += x * coef[k - 1]
    return coef[1:]


def elementary_sums(x: Iterable) -> SymmetricSums:
    """``S_k = sum over j_1 < ... < j_k of x_{j_1} ... x_{j_k}`` for ``k = 1..N`` in ``O(N^2)``."""
    x = as_probseq(x)
    vals = _elementary_exact(x.values) if x.exact else _elementary_float(x.values)
    return SymmetricSums(tuple(vals), len(x), x.mode)


def inclusion_exclusion(x: Iterable):
    """Union probability from the full alternating sum ``S_1 - S_2 + S_3 - ...``."""
    return elementary_sums(x).alternating()


@dataclass(frozen=True)
class Bonferroni:
    lower: object
    upper: object
    r: int

    @property
    def lower_clamped(self):
        return max(self.lower, 0)

    @property
    def upper_clamped(self):
        return min(self.upper, 1)


def bonferroni(x: Iterable, r: int) -> Bonferroni:
    """Truncations after ``2r`` terms (lower) and ``2r - 1`` terms (upper).

    Raw values are reported; the upper one can exceed 1, see
    :attr:`Bonferroni.upper_clamped`.  Indices beyond ``N`` reproduce the full sum.
    """
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    sums = elementary_sums(x)
    return Bonferroni(sums.alternating(2 * r), sums.alternating(2 * r - 1), r)


def sums_table_csv(x: Iterable) -> str:
    """CSV with header ``k,S_k,partial`` listing each sum and the running alternating total."""
    sums = elementary_sums(x)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "S_k", "partial"])
    fmt = format_rational if sums.mode == "exact" else (lambda v: f"{v:.12g}")
    for k, (s, p) in enumerate(zip(sums.values, sums.partial_sums()), start=1):
        w.writerow([k, fmt(s), fmt(p)])
    return buf.getvalue()


def quot_krit_holds(x: Iterable) -> bool:
    """Check ``S_k <= S_{k-1} * sum_{n>=k} x_n`` for every ``2 <= k <= N``."""
    x = as_probseq(x)
    sums = elementary_sums(x)
    vals = list(x.values)
    for k in range(2, len(vals) + 1):
        tail = sum(vals[k - 1:], Fraction(0)) if x.exact else math.fsum(vals[k - 1:])
        if sums[k] > sums[k - 1] * tail * (1 + (0 if x.exact else 1e-12)):
            return False
    return True


@dataclass(frozen=True)
class TailCertificate:
    k: int
    s_k: object
    s_upper: object
    remainder_bound: object
    decay_ratio: object
    partial_sum: object


def _s_k_upper(family: SeriesFamily, k: int):
    """Upper bound for ``S_k`` of the whole infinite sequence.

    ``S_k(all) <= sum_j S_{k-j}(prefix) * tau**j / j!`` with ``tau`` the tail
    mass beyond the prefix, since ``S_j`` of the tail is at most ``tau**j / j!``.
    Also returns the prefix alternating sum through ``k``.
    """
    if family.length is not None:
        m = family.length
    else:
        m = max(k, family.truncation_index(_TAIL_EPS))
    exact = family.exact
    prefix = family.prefix(m, exact=exact)
    sums = elementary_sums(prefix)
    tau = family.tail_sum(m)
    if tau == 0:
        return sums[k], sums.alternating(k)
    bound = sum(sums[k - j] * tau**j / math.factorial(j) for j in range(k + 1))
    return bound, sums.alternating(k)


def tail_certificate(family: SeriesFamily, k: int) -> TailCertificate:
    """Certified bound on the alternating series remainder beyond term ``k``.

    With ``rho = sum_{n>k} x_n < 1``, ``S_{k+j} <= S_k * rho**j``, so the
    remainder ``|sum_{j>k} (-1)**(j-1) S_j|`` is at most ``S_k rho / (1 - rho)``.
    ``s_k`` is an upper bound for ``S_k`` of the infinite sequence.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if family.diverges:
        raise NotConvergent(f"{family!r} has a divergent sum")
    rho = family.tail_sum(k)
    if rho >= 1:
        raise RatioTooLarge(f"tail beyond k={k} is {rho} >= 1; increase k")
    s_k, partial = _s_k_upper(family, k)
    remainder = s_k * rho / (1 - rho)
    return TailCertificate(k, s_k, s_k * rho, remainder, rho, partial)
