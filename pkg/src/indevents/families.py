"""Named infinite families of event probabilities with certified tails.

Each family knows its terms ``x_1, x_2, ...`` and, when ``sum x_n`` converges,
an upper bound for the tail ``sum_{n>N} x_n`` (exact for constant, geometric
and explicit families; an integral-comparison bound for power families).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional

from .errors import DomainError, NoTailInfo, NotConvergent
from .numbers import ProbSeq, as_probseq, parse_number

_MAX_TRUNCATION = 10**8


def _num(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return Fraction(v)
    return float(v)


class SeriesFamily:
    """An infinite sequence ``x_1, x_2, ...`` of probabilities.

    Build instances through the classmethods (:meth:`constant`,
    :meth:`geometric`, :meth:`shifted_harmonic`, :meth:`power`,
    :meth:`explicit`, :meth:`custom`).  Indices are 1-based.
    """

    __slots__ = ("kind", "params", "_term", "_tail", "_diverges", "_length", "exact")

    def __init__(self, kind, params, term, tail, diverges, exact, length=None):
        self.kind = kind
        self.params = params
        self._term = term
        self._tail = tail
        self._diverges = diverges
        self._length = length
        self.exact = exact

    def __repr__(self) -> str:
        args = ", ".join(str(p) for p in self.params)
        return f"SeriesFamily.{self.kind.replace('-', '_')}({args})"

    # construction

    @classmethod
    def constant(cls, c=0) -> "SeriesFamily":
        c = _num(c)
        if not 0 <= c <= 1:
            raise DomainError(f"constant {c} outside [0, 1]")
        tail = (lambda n: c * 0) if c == 0 else None
        return cls("constant", (c,), lambda n: c, tail, c != 0, isinstance(c, Fraction))

    @classmethod
    def geometric(cls, a, ratio) -> "SeriesFamily":
        """``x_n = a * ratio**(n-1)``."""
        a, r = _num(a), _num(ratio)
        if not 0 <= a <= 1:
            raise DomainError(f"leading term {a} outside [0, 1]")
        if not 0 <= r <= 1:
            raise DomainError(f"ratio {r} outside [0, 1]")
        diverges = a != 0 and r == 1
        tail = None if diverges else (lambda n: a * r**n / (1 - r) if a else a * 0)
        exact = isinstance(a, Fraction) and isinstance(r, Fraction)
        return cls("geometric", (a, r), lambda n: a * r ** (n - 1), tail, diverges, exact)

    @classmethod
    def shifted_harmonic(cls) -> "SeriesFamily":
        """``x_n = 1/(n+1)``; the sum diverges."""
        return cls("shifted-harmonic", (), lambda n: Fraction(1, n + 1), None, True, True)

    @classmethod
    def power(cls, c, p) -> "SeriesFamily":
        """``x_n = c * n**(-p)``.  Tails for ``p > 1`` are integral-comparison bounds."""
        c, p = _num(c), _num(p)
        if not 0 <= c <= 1:
            raise DomainError(f"coefficient {c} outside [0, 1]")
        if p < 0:
            raise DomainError(f"exponent {p} must be non-negative")
        integral_p = isinstance(p, Fraction) and p.denominator == 1
        exact = isinstance(c, Fraction) and integral_p
        if exact:
            ip = int(p)

            def term(n):
                return c / Fraction(n) ** ip
        else:
            fc, fp = float(c), float(p)

            def term(n):
                return fc * n ** (-fp)

        diverges = c != 0 and p <= 1
        tail = None
        if not diverges:
            if c == 0:
                tail = lambda n: c * 0  # noqa: E731
            elif exact:
                ip = int(p)

                def tail(n):
                    # sum_{k>n} k^-p <= int_n^inf t^-p dt; for n = 0 add the first term
                    if n == 0:
                        return c * (1 + Fraction(1, ip - 1))
                    return c / (Fraction(n) ** (ip - 1) * (ip - 1))
            else:
                fc, fp = float(c), float(p)

                def tail(n):
                    if n == 0:
                        return fc * (1 + 1 / (fp - 1))
                    return fc * n ** (1 - fp) / (fp - 1)

        return cls("power", (c, p), term, tail, diverges, exact)

    @classmethod
    def explicit(cls, x) -> "SeriesFamily":
        """A finite sequence continued by zeros."""
        x = as_probseq(x)
        vals = x.values
        zero = vals[0] * 0 if vals else Fraction(0)
        suffix = [zero] * (len(vals) + 1)
        for i in range(len(vals) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + vals[i]
        return cls(
            "explicit",
            (x,),
            lambda n: vals[n - 1] if n <= len(vals) else zero,
            lambda n: suffix[min(n, len(vals))],
            False,
            x.exact,
            length=len(vals),
        )

    @classmethod
    def custom(
        cls,
        term: Callable[[int], object],
        tail: Optional[Callable[[int], object]] = None,
        diverges: bool = False,
    ) -> "SeriesFamily":
        """Arbitrary terms; without ``tail`` the family cannot certify truncations."""
        probe = term(1)
        exact = isinstance(probe, (Fraction, int)) and not isinstance(probe, bool)
        return cls("custom", (term,), term, tail, diverges, exact)

    @classmethod
    def parse(cls, text: str) -> "SeriesFamily":
        """Parse ``kind[:arg,arg,...]``, e.g. ``geometric:1/2,1/2`` or ``harmonic``.

        Rational arguments stay exact; decimals are read as the fractions they denote.
        """
        kind, _, rest = text.strip().partition(":")
        kind = kind.strip().lower().replace("_", "-")
        args = [parse_number(a) for a in rest.split(",") if a.strip()]
        if kind in ("harmonic", "shifted-harmonic"):
            if args:
                raise ValueError("shifted-harmonic takes no arguments")
            return cls.shifted_harmonic()
        if kind == "explicit":
            return cls.explicit(ProbSeq(args))
        arity = {"constant": 1, "geometric": 2, "power": 2}
        if kind not in arity:
            raise ValueError(f"unknown family kind {kind!r}")
        if len(args) != arity[kind]:
            raise ValueError(f"{kind} takes {arity[kind]} argument(s), got {len(args)}")
        return getattr(cls, kind)(*args)

    # queries

    @property
    def diverges(self) -> bool:
        return self._diverges

    @property
    def length(self) -> Optional[int]:
        """Number of possibly nonzero terms for explicit families, else ``None``."""
        return self._length

    def term(self, n: int):
        if n < 1:
            raise IndexError("family indices start at 1")
        return self._term(n)

    def terms(self, n: int, exact: Optional[bool] = None) -> list:
        """The first ``n`` terms, as fractions when ``exact`` and the family allows it."""
        if exact is None:
            exact = self.exact
        vals = [self._term(k) for k in range(1, n + 1)]
        if exact:
            if not self.exact:
                raise DomainError(f"{self!r} has no exact terms")
            return [Fraction(v) for v in vals]
        return [float(v) for v in vals]

    def prefix(self, n: int, exact: Optional[bool] = None) -> ProbSeq:
        return ProbSeq(self.terms(n, exact))

    def tail_sum(self, n: int):
        """Upper bound for ``sum_{k>n} x_k`` (exact where the family allows)."""
        if self._diverges:
            raise NotConvergent(f"{self!r} has a divergent sum")
        if self._tail is None:
            raise NoTailInfo(f"{self!r} cannot certify its tail")
        if n < 0:
            raise IndexError("truncation index must be non-negative")
        return self._tail(n)

    def truncation_index(self, eps) -> int:
        """Smallest ``N >= 0`` with ``tail_sum(N) <= eps``."""
        if self.tail_sum(0) <= eps:
            return 0
        hi = 1
        while self.tail_sum(hi) > eps:
            hi *= 2
            if hi > _MAX_TRUNCATION:
                raise DomainError(f"{self!r} needs more than {_MAX_TRUNCATION} terms for eps={eps}")
        lo = hi // 2  # tail(lo) > eps
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.tail_sum(mid) <= eps:
                hi = mid
            else:
                lo = mid
        return hi

    def has_sure_event(self, n: int) -> bool:
        return any(v == 1 for v in (self._term(k) for k in range(1, n + 1)))

    def sum_bound(self) -> float:
        """Upper bound for ``sum x_n``; exact except for power families, ``inf`` when divergent."""
        if self._diverges:
            return math.inf
        return float(self.tail_sum(0))

