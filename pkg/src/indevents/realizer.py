"""Concrete independent events as unions of rectangles in the unit square.

Events are added one at a time.  The square is kept partitioned into atoms,
one per subset mask (bit ``i`` set means "inside event ``i + 1``").  Adding an
event of probability ``p`` carves the left slice of width ``p * width`` off
every atom rectangle; the slice joins the new event and moves to the atom
with the new bit set.  Every atom then has measure
``prod_{i in m} x_i * prod_{i not in m} (1 - x_i)``, which is exactly mutual
independence.  All coordinates are fractions and rectangles are half-open,
``[x_lo, x_hi) x [y_lo, y_hi)``, so the partition is exact.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from .errors import CapExceeded, DomainError, ModeError
from .numbers import ProbSeq, format_rational, parse_rational

DEFAULT_MAX_N = 16

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Rect:
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction = ZERO
    y_hi: Fraction = ONE

    def __post_init__(self):
        for name in ("x_lo", "x_hi", "y_lo", "y_hi"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                if isinstance(v, int) and not isinstance(v, bool):
                    object.__setattr__(self, name, Fraction(v))
                else:
                    raise ModeError(f"rectangle coordinates must be exact, got {v!r}")
            if not ZERO <= getattr(self, name) <= ONE:
                raise DomainError(f"{name} = {v} outside [0, 1]")
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise DomainError(f"inverted rectangle {self}")

    @property
    def area(self) -> Fraction:
        return (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)

    @property
    def empty(self) -> bool:
        return self.x_lo == self.x_hi or self.y_lo == self.y_hi

    def carve(self, p: Fraction) -> Tuple["Rect", "Rect"]:
        """Split into the left slice holding fraction ``p`` of the area and the rest."""
        cut = self.x_lo + p * (self.x_hi - self.x_lo)
        return Rect(self.x_lo, cut, self.y_lo, self.y_hi), Rect(cut, self.x_hi, self.y_lo, self.y_hi)

    def to_json(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in ("x_lo", "x_hi", "y_lo", "y_hi")}

    @classmethod
    def from_json(cls, d: dict) -> "Rect":
        return cls(*(parse_rational(d[k]) for k in ("x_lo", "x_hi", "y_lo", "y_hi")))


def measure(rects: Iterable[Rect]) -> Fraction:
    """Total area of pairwise disjoint rectangles."""
    return sum((r.area for r in rects), ZERO)


@dataclass(frozen=True)
class Construction:
    """Realized events: ``events[i]`` is the rectangle list of event ``i + 1``."""

    probs: ProbSeq
    events: Tuple[Tuple[Rect, ...], ...]
    atoms: Dict[int, Tuple[Rect, ...]]

    @property
    def n(self) -> int:
        return len(self.events)

    def atom_measure(self, mask: int) -> Fraction:
        return measure(self.atoms.get(mask, ()))

    def rect_count(self) -> int:
        return sum(len(rs) for rs in self.atoms.values())


def realize(x: Iterable, max_n: int = DEFAULT_MAX_N) -> Construction:
    """Build independent events with ``P(A_i) = x_i`` exactly.

    ``x`` must be exact-rational.  Raises :class:`CapExceeded` when it has
    more than ``max_n`` entries.
    """
    x = x if isinstance(x, ProbSeq) else ProbSeq(x)
    if not x.exact:
        raise ModeError("the realizer needs exact-rational probabilities")
    if len(x) > max_n:
        raise CapExceeded(f"{len(x)} events exceed the cap of {max_n}")
    atoms: Dict[int, List[Rect]] = {0: [Rect(ZERO, ONE, ZERO, ONE)]}
    events = []
    for i, p in enumerate(x):
        bit = 1 << i
        new_atoms: Dict[int, List[Rect]] = {}
        event: List[Rect] = []
        for mask, rects in atoms.items():
            for r in rects:
                left, right = r.carve(p)
                if not left.empty:
                    new_atoms.setdefault(mask | bit, []).append(left)
                    event.append(left)
                if not right.empty:
                    new_atoms.setdefault(mask, []).append(right)
        atoms = new_atoms
        event.sort(key=lambda r: (r.x_lo, r.y_lo))
        events.append(tuple(event))
    return Construction(x, tuple(events), {m: tuple(rs) for m, rs in sorted(atoms.items())})


def _check_indices(c: Construction, subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= c.n:
            raise IndexError(f"event index {i!r} outside 1..{c.n}")
        mask |= 1 << (i - 1)
    return mask


def intersection_measure(c: Construction, subset: Iterable[int]) -> Fraction:
    """``P(A_{i_1} & ... & A_{i_k})`` for 1-based indices, summed over atoms."""
    need = _check_indices(c, subset)
    return sum((measure(rs) for m, rs in c.atoms.items() if m & need == need), ZERO)


def union_measure(c: Construction) -> Fraction:
    return ONE - c.atom_measure(0)


def first_occurrence_measure(c: Construction, n: int) -> Fraction:
    """``P(A_n minus (A_1 | ... | A_{n-1}))`` for 1-based ``n``."""
    _check_indices(c, [n])
    bit, below = 1 << (n - 1), (1 << (n - 1)) - 1
    return sum((measure(rs) for m, rs in c.atoms.items() if m & bit and not m & below), ZERO)


def expected_atom_measure(probs: ProbSeq, mask: int) -> Fraction:
    out = ONE
    for i, p in enumerate(probs):
        out *= p if mask >> i & 1 else 1 - p
    return out


class CellGrid:
    """Exact cell decomposition of the square induced by a set of rectangles.

    Cells are products of consecutive breakpoint intervals, so each cell lies
    entirely inside or outside every rectangle.
    """

    def __init__(self, rect_lists: Iterable[Iterable[Rect]]):
        rect_lists = [list(rs) for rs in rect_lists]
        xs, ys = {ZERO, ONE}, {ZERO, ONE}
        for rs in rect_lists:
            for r in rs:
                xs.update((r.x_lo, r.x_hi))
                ys.update((r.y_lo, r.y_hi))
        self.xs, self.ys = sorted(xs), sorted(ys)
        self.ny = len(self.ys) - 1
        self.membership = [0] * ((len(self.xs) - 1) * self.ny)
        self.overlaps: List[int] = []
        for idx, rs in enumerate(rect_lists):
            bit = 1 << idx
            overlapped = False
            for r in rs:
                for cell in self._cells(r):
                    if self.membership[cell] & bit:
                        overlapped = True
                    self.membership[cell] |= bit
            if overlapped:
                self.overlaps.append(idx)

    def _cells(self, r: Rect):
        i0, i1 = bisect_left(self.xs, r.x_lo), bisect_left(self.xs, r.x_hi)
        j0, j1 = bisect_left(self.ys, r.y_lo), bisect_left(self.ys, r.y_hi)
        for i in range(i0, i1):
            for j in range(j0, j1):
                yield i * self.ny + j

    def cell_area(self, cell: int) -> Fraction:
        i, j = divmod(cell, self.ny)
        return (self.xs[i + 1] - self.xs[i]) * (self.ys[j + 1] - self.ys[j])

    def measure_by_mask(self) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for cell, m in enumerate(self.membership):
            out[m] = out.get(m, ZERO) + self.cell_area(cell)
        return out


def superset_sums(by_mask: Dict[int, Fraction], n: int) -> List[Fraction]:
    """``out[m] = sum of by_mask[k] over all k containing m``, in ``O(n 2^n)``."""
    out = [ZERO] * (1 << n)
    for m, v in by_mask.items():
        out[m] += v
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if not m & bit:
                out[m] += out[m | bit]
    return out


@dataclass(frozen=True)
class IndependenceReport:
    ok: bool
    failures: Tuple[Tuple[int, ...], ...]
    atoms_consistent: bool
    overlapping_events: Tuple[int, ...]


def verify_independence(c: Construction) -> IndependenceReport:
    """Check ``P(intersection) = product of probabilities`` for every nonempty subset.

    Intersections are measured from the event rectangles themselves (not the
    stored atom map), so a tampered construction is caught.  The stored atoms
    are cross-checked against the recomputed partition.
    """
    n = c.n
    grid = CellGrid(c.events)
    by_mask = grid.measure_by_mask()
    inter = superset_sums(by_mask, n)
    failures = []
    for m in range(1, 1 << n):
        prod = ONE
        for i in range(n):
            if m >> i & 1:
                prod *= c.probs[i]
        if inter[m] != prod:
            failures.append(tuple(i + 1 for i in range(n) if m >> i & 1))
    stored = {m: measure(rs) for m, rs in c.atoms.items() if measure(rs)}
    recomputed = {m: v for m, v in by_mask.items() if v}
    consistent = stored == recomputed and _atoms_partition(c)
    overlaps = tuple(i + 1 for i in grid.overlaps)
    return IndependenceReport(
        ok=not failures and consistent and not overlaps,
        failures=tuple(failures),
        atoms_consistent=consistent,
        overlapping_events=overlaps,
    )


def _atoms_partition(c: Construction) -> bool:
    masks = sorted(c.atoms)
    grid = CellGrid(c.atoms[m] for m in masks)
    if grid.overlaps:
        return False
    # every cell covered by exactly one atom
    return all(m and m & (m - 1) == 0 for m in grid.membership)


def to_document(c: Construction) -> dict:
    return {
        "probs": c.probs.to_json(),
        "events": [[r.to_json() for r in ev] for ev in c.events],
        "atoms": {str(m): [r.to_json() for r in rs] for m, rs in c.atoms.items()},
    }


def from_document(doc: dict) -> Construction:
    probs = ProbSeq([parse_rational(p) for p in doc["probs"]], "exact")
    events = tuple(tuple(Rect.from_json(r) for r in ev) for ev in doc["events"])
    if len(events) != len(probs):
        raise ValueError(f"{len(events)} events for {len(probs)} probabilities")
    atoms = {int(m): tuple(Rect.from_json(r) for r in rs) for m, rs in doc["atoms"].items()}
    for m in atoms:
        if m < 0 or m >> len(probs):
            raise ValueError(f"atom mask {m} references a missing event")
    return Construction(probs, events, dict(sorted(atoms.items())))


def export_construction(c: Construction) -> str:
    """JSON document with canonical ``"p/q"`` strings; see :func:`import_construction`."""
    return json.dumps(to_document(c), indent=1)


def import_construction(text: str) -> Construction:
    return from_document(json.loads(text))
