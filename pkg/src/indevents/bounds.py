"""Sharp bounds linking the probability sum and the union probability.

For ``N`` independent events with probability sum ``s`` the union has
probability at least ``U_N(s) = 1 - (1 - s/N)**N``, attained when all
probabilities equal ``s/N``.  Its inverse ``S_N(u) = N (1 - (1-u)**(1/N))``
caps the sum given the union probability ``u``.  As ``N`` grows these tend
to ``1 - exp(-s)`` and ``log(1/(1-u))``.

Float evaluation goes through ``log1p``/``expm1`` so that ``N = 10**6`` and
the inverse-pair identity stay accurate to a few ulps.  Exact rational ``s``
gives an exact ``U_N(s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import DomainError, Diverges
from .numbers import as_probseq
from .transform import union_prob

INF = math.inf

Real = Union[float, Fraction]


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"number of events must be a positive integer, got {n!r}")
    return n


def _is_inf(n) -> bool:
    return isinstance(n, float) and math.isinf(n) and n > 0


def lower_union_given_sum(n: int, s: Real) -> Real:
    """``U_N(s)``: the least possible union probability when ``sum x = s``."""
    n = _check_n(n)
    if not 0 <= s <= n:
        raise DomainError(f"sum {s} outside [0, {n}]")
    if isinstance(s, Fraction):
        return 1 - (1 - s / n) ** n
    s = float(s)
    if s == n:
        return 1.0
    return -math.expm1(n * math.log1p(-s / n))


def upper_sum_given_union(n: int, u: float) -> float:
    """``S_N(u)``: the largest possible probability sum when the union has probability ``u``."""
    n = _check_n(n)
    if not 0 <= u <= 1:
        raise DomainError(f"union probability {u} outside [0, 1]")
    u = float(u)
    if u == 1.0:
        return float(n)
    return -n * math.expm1(math.log1p(-u) / n)


def lower_union_given_sum_infinite(s: float) -> float:
    """``U_inf(s) = 1 - exp(-s)``; an infimum that is not attained for ``s > 0``."""
    if not s >= 0:
        raise DomainError(f"sum {s} must be non-negative")
    if math.isinf(s):
        return 1.0
    return -math.expm1(-float(s))


def upper_sum_given_union_infinite(u: float) -> float:
    """``S_inf(u) = log(1/(1-u))``; raises :class:`Diverges` at ``u = 1``."""
    if not 0 <= u <= 1:
        raise DomainError(f"union probability {u} outside [0, 1]")
    if u == 1:
        raise Diverges("the supremum of the sum is infinite when the union is sure")
    return -math.log1p(-float(u))


def lower_union_bound(n, s):
    """``U_N(s)`` for a positive integer ``n`` or ``n = math.inf``."""
    return lower_union_given_sum_infinite(s) if _is_inf(n) else lower_union_given_sum(n, s)


def upper_sum_bound(n, u):
    """``S_N(u)`` for a positive integer ``n`` or ``n = math.inf``."""
    return upper_sum_given_union_infinite(u) if _is_inf(n) else upper_sum_given_union(n, u)


@dataclass(frozen=True)
class BestBound:
    value: Real
    witness_n: int


def best_lower_union(s: Real) -> BestBound:
    """``max_{N >= s} U_N(s)``, attained at ``N = ceil(s)`` (``N = 1`` when ``s = 0``)."""
    if not s >= 0:
        raise DomainError(f"sum {s} must be non-negative")
    if math.isinf(s):
        raise DomainError("sum must be finite")
    n = max(1, math.ceil(s))
    return BestBound(lower_union_given_sum(n, s), n)


def opposite_extremals(n=INF, *, union: Optional[Real] = None, total: Optional[Real] = None) -> Real:
    """Solutions of the reversed extremal problems.

    With ``union=u``: the infimum of ``sum x`` subject to ``sum T = u``, which
    is ``u`` (one event of probability ``u``).  With ``total=s``: the supremum
    of ``sum T`` subject to ``sum x = s``, which is ``min(s, 1)``.  Neither
    depends on ``n``; ``n`` only bounds the admissible ``s``.
    """
    if (union is None) == (total is None):
        raise TypeError("pass exactly one of union= or total=")
    if not _is_inf(n):
        _check_n(n)
    if union is not None:
        if not 0 <= union <= 1:
            raise DomainError(f"union probability {union} outside [0, 1]")
        return union
    if not 0 <= total <= n:
        raise DomainError(f"sum {total} outside [0, {n}]")
    return min(total, 1 if isinstance(total, Fraction) else 1.0)


@dataclass(frozen=True)
class Counterexample:
    union: Real
    bound_rhs: Real
    violated: bool
    sum_lhs: Real
    sum_rhs: float


def dependent_counterexample(x: Real, n: int) -> Counterexample:
    """``N`` copies of one event of probability ``x`` break the independent-event bounds.

    The union is ``x`` while the lower bound for independent events with the
    same probabilities is ``U_N(N x) = 1 - (1-x)**N``.  The sum side compares
    ``N x`` with ``S_N(x)``.
    """
    n = _check_n(n)
    if not 0 < x < 1:
        raise DomainError(f"probability {x} must lie in (0, 1)")
    rhs = lower_union_given_sum(n, n * x)
    return Counterexample(
        union=x,
        bound_rhs=rhs,
        violated=x < rhs,
        sum_lhs=n * x,
        sum_rhs=upper_sum_given_union(n, float(x)),
    )


@dataclass(frozen=True)
class SharpnessGap:
    gap: float
    bound: float
    per_event: float


def sharpness_gap(u: float, n: int) -> SharpnessGap:
    """How far ``N`` equal events with union ``u`` fall short of ``log(1/(1-u))``.

    Each event gets ``1 - (1-u)**(1/N)``; the shortfall is positive and at most
    ``log(1/(1-u))**2 / (2N)``.
    """
    n = _check_n(n)
    if not 0 <= u < 1:
        raise DomainError(f"union probability {u} outside [0, 1)")
    limit = upper_sum_given_union_infinite(u)
    per_event = -math.expm1(math.log1p(-u) / n)
    # log(1/(1-u)) - N x = -N (log(1-x) + x); log1p keeps the difference accurate
    gap = -n * (math.log1p(-per_event) + per_event)
    return SharpnessGap(gap, limit * limit / (2 * n), per_event)


@dataclass(frozen=True)
class Sandwich:
    n: int
    total: Real
    union: Real
    union_lower: Real
    total_upper: float

    def holds(self, tol: float = 0.0) -> bool:
        return self.union_lower <= self.union + tol and self.total <= self.total_upper + tol


def sandwich(x: Iterable) -> Sandwich:
    """Evaluate both sides of ``U_N(sum x) <= P(union)`` and ``sum x <= S_N(P(union))``."""
    x = as_probseq(x)
    n = len(x)
    if n == 0:
        raise DomainError("at least one event is required")
    total = sum(x.values, Fraction(0)) if x.exact else math.fsum(x.values)
    union = union_prob(x)
    return Sandwich(n, total, union, lower_union_given_sum(n, total), upper_sum_given_union(n, float(union)))
