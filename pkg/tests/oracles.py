"""Independent reference computations used by the tests.

Nothing here calls the code under test: symmetric sums come from subset
enumeration, closed forms from mpmath, and event measures from naive
rectangle intersection.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations, product
import operator

import mpmath

mpmath.mp.dps = 50

# 1 - prod_{n>=1} (1 - 2^-n), 40 digits via the q-Pochhammer symbol
GEOMETRIC_HALF_LIMIT = 0.7112119049133975787211002780707692199111
ONE_MINUS_INV_E = 0.6321205588285576784044762298385391325542
S5_HALF = 0.6472471835193793043186499126012695051044


def prod(values, start=1):
    return reduce(operator.mul, values, start)


def union_by_complement(xs):
    one = Fraction(1) if all(isinstance(v, (Fraction, int)) for v in xs) else 1.0
    return one - prod((1 - v for v in xs), one)


def elementary_by_enumeration(xs):
    """S_1..S_N by summing over every k-subset."""
    zero = Fraction(0) if all(isinstance(v, (Fraction, int)) for v in xs) else 0.0
    return [sum((prod(c) for c in combinations(xs, k)), zero) for k in range(1, len(xs) + 1)]


def disjoint_weights_by_enumeration(xs):
    """P(event n occurs and none before it), summed over all 2^N outcome patterns."""
    out = [0 * Fraction(0)] * len(xs)
    for pattern in product((0, 1), repeat=len(xs)):
        if 1 not in pattern:
            continue
        p = prod(x if b else 1 - x for x, b in zip(xs, pattern))
        out[pattern.index(1)] += p
    return out


def mp_union_geometric(a, r):
    """1 - prod_{n>=1} (1 - a r^(n-1)) as a q-Pochhammer symbol."""
    return 1 - mpmath.qp(mpmath.mpf(a), mpmath.mpf(r))


def mp_geometric_sk(a, r, k):
    """S_k for x_n = a r^(n-1): a^k r^(k(k-1)/2) / prod_{i<=k} (1 - r^i) (Euler)."""
    a, r = mpmath.mpf(a), mpmath.mpf(r)
    return a**k * r ** (k * (k - 1) // 2) / mpmath.fprod(1 - r**i for i in range(1, k + 1))


def mp_U(n, s):
    return 1 - (1 - mpmath.mpf(s) / n) ** n


def mp_S(n, u):
    return n * (1 - (1 - mpmath.mpf(u)) ** (mpmath.mpf(1) / n))


def rect_intersection(a, b):
    x_lo, x_hi = max(a[0], b[0]), min(a[1], b[1])
    y_lo, y_hi = max(a[2], b[2]), min(a[3], b[3])
    if x_lo >= x_hi or y_lo >= y_hi:
        return None
    return (x_lo, x_hi, y_lo, y_hi)


def naive_intersection_area(rect_lists):
    """Area of the intersection of several disjoint-rectangle unions, by brute force."""
    current = [(Fraction(0), Fraction(1), Fraction(0), Fraction(1))]
    for rs in rect_lists:
        boxes = [(r.x_lo, r.x_hi, r.y_lo, r.y_hi) for r in rs]
        nxt = []
        for c, b in product(current, boxes):
            i = rect_intersection(c, b)
            if i is not None:
                nxt.append(i)
        current = nxt
    return sum(((r[1] - r[0]) * (r[3] - r[2]) for r in current), Fraction(0))


def grid_min_union(n, s, step=Fraction(1, 100)):
    """Minimum of 1 - prod(1 - x) over grid points of {x in [0,1]^n : sum x = s}."""
    s = Fraction(s)
    best = None
    k = int(1 / step)
    pts = [i * step for i in range(k + 1)]
    for head in product(pts, repeat=n - 1):
        last = s - sum(head)
        if not 0 <= last <= 1:
            continue
        val = 1 - prod(1 - v for v in (*head, last))
        if best is None or val < best:
            best = val
    return best


def strip_intervals(rects):
    """Merged ``[lo, hi)`` x-intervals of full-height rectangles."""
    out = []
    for r in sorted(rects, key=lambda r: r.x_lo):
        if (r.y_lo, r.y_hi) != (0, 1):
            raise ValueError("not a full-height strip")
        if out and out[-1][1] >= r.x_lo:
            out[-1][1] = max(out[-1][1], r.x_hi)
        else:
            out.append([r.x_lo, r.x_hi])
    return out


def intersect_intervals(a, b):
    out, i, j = [], 0, 0
    while i < len(a) and j < len(b):
        lo, hi = max(a[i][0], b[j][0]), min(a[i][1], b[j][1])
        if lo < hi:
            out.append([lo, hi])
        if a[i][1] < b[j][1]:
            i += 1
        else:
            j += 1
    return out


def subtract_intervals(a, b):
    """``a`` minus ``b`` for sorted disjoint interval lists."""
    out = []
    for lo, hi in a:
        cur = lo
        for blo, bhi in b:
            if bhi <= cur or blo >= hi:
                continue
            if blo > cur:
                out.append([cur, blo])
            cur = max(cur, bhi)
        if cur < hi:
            out.append([cur, hi])
    return out


def union_intervals(a, b):
    merged = sorted(a + b)
    out = []
    for lo, hi in merged:
        if out and out[-1][1] >= lo:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return out


def length(intervals):
    return sum((hi - lo for lo, hi in intervals), Fraction(0))
