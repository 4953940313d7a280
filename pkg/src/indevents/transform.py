"""The correspondence between event probabilities ``x_n`` and disjoint weights ``T_n``.

``T_n = x_n (1 - x_1) ... (1 - x_{n-1})`` is the probability that event ``n``
occurs while none of its predecessors does.  The weights are pairwise
disjoint pieces of the union, so ``sum(T) = 1 - prod(1 - x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InfeasibleWeights, NegativeDenominator
from .families import SeriesFamily
from .numbers import EXACT, DisjointWeights, ProbSeq, as_probseq, as_weights

CONVERGED = "converged-below-one"
EQUALS_ONE = "equals-one"


def forward(x: Iterable) -> DisjointWeights:
    """Map probabilities to disjoint weights; exact in exact mode.

    >>> forward(ProbSeq([Fraction(1, 2), Fraction(1, 2)]))
    DisjointWeights([1/2, 1/4], mode='exact')
    """
    x = as_probseq(x)
    out = []
    survive = Fraction(1) if x.exact else 1.0
    for v in x:
        out.append(v * survive)
        survive *= 1 - v
    return DisjointWeights(out, x.mode)


def inverse(t: Iterable) -> ProbSeq:
    """Recover probabilities from weights.

    ``x_N = T_N / (1 - T_1 - ... - T_{N-1})``.  Once the prefix sum reaches
    one, every later weight must be zero and maps to ``x = 0``.
    """
    t = as_weights(t)
    out = []
    prefix = Fraction(0) if t.exact else 0.0
    for i, w in enumerate(t):
        denom = 1 - prefix
        if denom < 0:
            raise NegativeDenominator(f"prefix sum {prefix} of weights before #{i + 1} exceeds 1")
        if denom == 0:
            if w > 0:
                raise InfeasibleWeights(f"weight #{i + 1} = {w} follows prefix weights summing to 1")
            out.append(w * 0)
        else:
            # float rounding can push w/denom a hair above 1
            out.append(min(w / denom, 1) if not t.exact else w / denom)
        prefix += w
    return ProbSeq(out, t.mode)


def union_prob(x: Iterable):
    """``1 - prod(1 - x_n)``: the probability that at least one event occurs."""
    x = as_probseq(x)
    survive = Fraction(1) if x.exact else 1.0
    for v in x:
        survive *= 1 - v
    return 1 - survive


def weights_sum(t: Iterable):
    t = as_weights(t)
    if t.exact:
        return sum(t, Fraction(0))
    return math.fsum(t)


@dataclass(frozen=True)
class LimitResult:
    value: float
    status: str
    n_terms: int
    error_bound: float


def limit_sum_T(family: SeriesFamily, eps: float = 1e-12) -> LimitResult:
    """Evaluate ``sum_{n>=1} T_n`` for an infinite family.

    Divergent families give exactly 1.  Otherwise the product is truncated at
    the first ``N`` whose certified tail ``sum_{n>N} x_n`` is at most ``eps``;
    since ``T_n <= x_n`` the neglected weights add up to no more than that.
    Raises :class:`~indevents.errors.NoTailInfo` for uncertified families.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if family.diverges:
        return LimitResult(1.0, EQUALS_ONE, 0, 0.0)
    n = family.truncation_index(eps)
    survive = 1.0
    for v in family.terms(n, exact=False):
        survive *= 1.0 - v
    value = 1.0 - survive
    status = EQUALS_ONE if survive == 0.0 and family.has_sure_event(n) else CONVERGED
    return LimitResult(value, status, n, float(family.tail_sum(n)))


def partial_unions(family: SeriesFamily, n_max: int, exact: bool | None = None) -> list:
    """``1 - prod_{n<=N}(1 - x_n)`` for ``N = 1..n_max``."""
    if exact is None:
        exact = family.exact
    survive = Fraction(1) if exact else 1.0
    out = []
    for v in family.terms(n_max, exact=exact):
        survive *= 1 - v
        out.append(1 - survive)
    return out


__all__ = [
    "CONVERGED",
    "EQUALS_ONE",
    "EXACT",
    "LimitResult",
    "forward",
    "inverse",
    "limit_sum_T",
    "partial_unions",
    "union_prob",
    "weights_sum",
]
