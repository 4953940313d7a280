"""Probability sequences in exact-rational or float mode, plus rational I/O.

Two numeric modes are supported.  ``"exact"`` stores :class:`fractions.Fraction`
values and makes every identity in the package hold with ``==``; ``"float"``
stores IEEE doubles.  Mixing the two inside one sequence raises
:class:`~indevents.errors.ModeError`.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError, ModeError

EXACT = "exact"
FLOAT = "float"

Number = Union[Fraction, float]


def infer_mode(values: Iterable[object]) -> str:
    """Return the numeric mode implied by ``values``.

    Integers are compatible with both modes; a sequence made only of
    integers (or empty) is exact.
    """
    saw_exact = saw_float = False
    for v in values:
        if isinstance(v, bool):
            raise ModeError(f"booleans are not probabilities: {v!r}")
        if isinstance(v, (Fraction, numbers.Integral)):
            saw_exact = saw_exact or isinstance(v, Fraction)
        elif isinstance(v, numbers.Real):
            saw_float = True
        else:
            raise ModeError(f"unsupported value type {type(v).__name__}")
    if saw_exact and saw_float:
        raise ModeError("exact-rational and float values cannot be mixed")
    return FLOAT if saw_float else EXACT


def coerce(value: object, mode: str) -> Number:
    if mode == EXACT:
        if isinstance(value, (Fraction, numbers.Integral)) and not isinstance(value, bool):
            return Fraction(value)
        raise ModeError(f"{value!r} is not an exact rational")
    if mode == FLOAT:
        if isinstance(value, Fraction):
            raise ModeError(f"{value!r} is exact; float mode was requested")
        return float(value)
    raise ValueError(f"unknown mode {mode!r}")


def parse_number(text: str, exact: bool = True) -> Number:
    """Parse ``"p/q"``, an integer or a decimal literal.

    In exact mode decimals become the fraction they denote (``"0.3"`` is
    ``3/10``).  Raises :class:`ValueError` on malformed text.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty number")
    if exact:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {text!r}") from exc
    if "/" in text:
        p, _, q = text.partition("/")
        return float(Fraction(int(p), int(q)))
    return float(text)


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` form, with ``q > 0`` and ``gcd(p, q) = 1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts bare integers."""
    return Fraction(text)


def to_json_value(value: Number) -> Union[str, float]:
    if isinstance(value, Fraction):
        return format_rational(value)
    return float(value)


def from_json_value(value: Union[str, float, int]) -> Number:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool):
        raise ModeError("booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    return float(value)


@dataclass(frozen=True)
class _UnitSequence(Sequence):
    """Immutable sequence of numbers in ``[0, 1]`` tagged with a mode."""

    values: tuple
    mode: str

    def __init__(self, values: Iterable[object] = (), mode: str | None = None):
        vals = tuple(values)
        if mode is None:
            mode = infer_mode(vals)
        else:
            infer_mode(vals)  # rejects mixtures even when the mode is forced
        vals = tuple(coerce(v, mode) for v in vals)
        for i, v in enumerate(vals):
            if not (0 <= v <= 1):
                raise DomainError(f"value #{i + 1} = {v} lies outside [0, 1]")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "mode", mode)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __iter__(self) -> Iterator[Number]:
        return iter(self.values)

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @classmethod
    def parse(cls, text: str, exact: bool = True):
        """Build from comma-separated text such as ``"1/2,1/3"``."""
        items = [t for t in text.split(",") if t.strip()]
        return cls([parse_number(t, exact) for t in items], EXACT if exact else FLOAT)

    def to_json(self) -> list:
        return [to_json_value(v) for v in self.values]

    @classmethod
    def from_json(cls, items: Sequence[object]):
        return cls([from_json_value(v) for v in items])

    def __repr__(self) -> str:
        inner = ", ".join(format_rational(v) if self.exact else repr(v) for v in self.values)
        return f"{type(self).__name__}([{inner}], mode={self.mode!r})"


class ProbSeq(_UnitSequence):
    """Event probabilities ``x_1, ..., x_N``."""


class DisjointWeights(_UnitSequence):
    """Disjointified weights ``T_1, ..., T_N`` produced by :func:`~indevents.transform.forward`."""


def as_probseq(x: object, mode: str | None = None) -> ProbSeq:
    if isinstance(x, ProbSeq) and (mode is None or x.mode == mode):
        return x
    if isinstance(x, _UnitSequence):
        return ProbSeq(x.values, mode or x.mode)
    return ProbSeq(x, mode)


def as_weights(t: object) -> DisjointWeights:
    if isinstance(t, DisjointWeights):
        return t
    if isinstance(t, _UnitSequence):
        return DisjointWeights(t.values, t.mode)
    return DisjointWeights(t)
