"""Exact sphere and ball sizes in S_n under the Kendall tau metric.

The metric is invariant under relabeling, so the number of permutations at
distance exactly i from a center does not depend on the center: it is the
number of permutations of [n] with i inversions, the Mahonian number
S(n, i).  A row (S(n, 0), ..., S(n, n(n-1)/2)) therefore doubles as the
distance distribution of any sphere, and its prefix sums are ball sizes.

Everything here is integer-exact and never materializes permutations.  The
table is built by the one-step recurrence

    S(n, i) = sum of S(n-1, j) for j in [max(0, i - (n - 1)), i],

implemented with running prefix sums, which covers every (n, i) uniformly.
Two independent piecewise recursions (`sphere_size_small_radius` for
radii below n, `sphere_size_large_radius` for radii from n up to the
midpoint) and degree-bounded closed forms for radii up to 5 re-derive
single entries without scanning whole rows; they exist to cross-check the
table and to serve sizes beyond the table's memory cap.

Rows are stored in full rather than exploiting the symmetry
S(n, i) = S(n, n(n-1)/2 - i); the cap on ``build_table`` bounds the cost,
and radii at most 5 never need a table at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Optional

MAX_TABLE_N = 2000


@dataclass(frozen=True)
class SphereTable:
    """Rows of inversion counts for group sizes 2..max_n, immutable once built."""

    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not 2 <= n <= self.max_n:
            raise ValueError(f"table holds rows for 2 <= n <= {self.max_n}, got {n}")
        return self.rows[n - 2]


@dataclass(frozen=True)
class BallSize:
    """Number of permutations within distance r of any fixed center in S_n."""

    n: int
    r: int
    value: int


def max_distance(n: int) -> int:
    """Diameter of S_n under the metric: n(n-1)/2, attained by the reversal."""
    return math.comb(n, 2)


def build_table(max_n: int) -> SphereTable:
    """Build all rows for group sizes 2..max_n by the one-step recurrence."""
    if not 2 <= max_n <= MAX_TABLE_N:
        raise ValueError(f"table size must be between 2 and {MAX_TABLE_N}, got {max_n}")
    rows = [(1, 1)]
    for n in range(3, max_n + 1):
        prev = rows[-1]
        prefix = list(accumulate(prev))
        top = len(prev) - 1
        row = []
        for i in range(max_distance(n) + 1):
            hi = prefix[min(i, top)]
            lo = prefix[i - n] if i - n >= 0 else 0
            row.append(hi - lo)
        rows.append(tuple(row))
    return SphereTable(max_n=max_n, rows=tuple(rows))


def sphere_size(table: SphereTable, n: int, i: int) -> int:
    """S(n, i) from the table; 0 outside the feasible range 0..n(n-1)/2."""
    row = table.row(n)
    if i < 0 or i >= len(row):
        return 0
    return row[i]


def _pivot(i: int) -> int:
    """Smallest group size t >= 4 whose maximum inversion count reaches i.

    The piecewise recursions anchor at this t, the group size where radius
    i first becomes feasible: t(t-1)/2 >= i > (t-1)(t-2)/2.
    """
    t = 4
    while max_distance(t) < i:
        t += 1
    return t


def sphere_size_small_radius(table: SphereTable, n: int, i: int) -> int:
    """Rebuild S(n, i) for radii 4 <= i <= n - 1 from smaller groups' rows.

    Anchors at the pivot group t (where radius i is first feasible) with
    the mirrored entry S(t, t(t-1)/2 - i), then adds, for each intermediate
    group size, the window of entries that survive appending the next
    largest element.  Sums over an empty index range contribute 0.

    Independent of the one-step recurrence row for n itself, so it serves
    as a cross-check of the table.
    """
    if n < 4:
        raise ValueError(f"defined for group sizes n >= 4, got {n}")
    if not 4 <= i <= n - 1:
        raise ValueError(f"radius must satisfy 4 <= i <= n - 1 = {n - 1}, got {i}")
    if table.max_n < n - 1:
        raise ValueError(f"needs table rows up to {n - 1}, table stops at {table.max_n}")
    t = _pivot(i)
    total = sphere_size(table, t, max_distance(t) - i)
    for l in range(t, i):
        total += sum(sphere_size(table, l, j) for j in range(i - l, i))
    for l in range(i, n):
        total += sum(sphere_size(table, l, j) for j in range(0, i))
    return total


def sphere_size_large_radius(table: SphereTable, n: int, i: int) -> int:
    """Rebuild S(n, i) for radii n <= i <= floor(n(n-1)/4) from smaller groups' rows.

    Same anchoring as :func:`sphere_size_small_radius`, but radii of at
    least the group size overcount, and the overshoot is subtracted as the
    window sums for group sizes n..i-1.  The subtrahend is empty at i = n.
    """
    if n < 5:
        raise ValueError(f"defined for group sizes n >= 5, got {n}")
    if not n <= i <= max_distance(n) // 2:
        raise ValueError(
            f"radius must satisfy n <= i <= {max_distance(n) // 2}, got {i}"
        )
    if table.max_n < i - 1:
        raise ValueError(f"needs table rows up to {i - 1}, table stops at {table.max_n}")
    t = _pivot(i)
    total = sphere_size(table, t, max_distance(t) - i)
    for l in range(t, i):
        total += sum(sphere_size(table, l, j) for j in range(i - l, i))
    for l in range(n, i):
        total -= sum(sphere_size(table, l, j) for j in range(i - l, i))
    return total


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"non-exact division {numerator}/{denominator}; closed form is broken"
        )
    return quotient


SPHERE_FORM_MIN_N = {0: 1, 1: 1, 2: 3, 3: 3, 4: 4, 5: 5}


def sphere_closed_form(n: int, i: int) -> int:
    """S(n, i) for radii up to 5 as a polynomial in n, O(1) for any n.

    Each polynomial is stated with a validity threshold on n; below it the
    polynomial does not count anything meaningful, so the call is rejected
    rather than silently extrapolated.  All divisions are exact.
    """
    if i not in SPHERE_FORM_MIN_N:
        raise ValueError(f"closed forms cover radii 0..5, got {i}")
    if n < SPHERE_FORM_MIN_N[i]:
        raise ValueError(f"radius {i} closed form needs n >= {SPHERE_FORM_MIN_N[i]}, got {n}")
    if i == 0:
        return 1
    if i == 1:
        return n - 1
    if i == 2:
        return _exact_div(n * (n - 1), 2) - 1
    if i == 3:
        return _exact_div(n**3 - 7 * n, 6)
    if i == 4:
        return _exact_div(n * (n + 1) * (n**2 + n - 14), 24)
    return _exact_div((n - 1) * (n**4 + 6 * n**3 - 9 * n**2 - 74 * n - 120), 120)


def ball_size(table: SphereTable, n: int, r: int) -> BallSize:
    """Number of permutations within distance r of a center: prefix sum of a row.

    Radii at or beyond the diameter cover the whole group, so the value
    clamps at n!.
    """
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    row = table.row(n)
    value = sum(row[: r + 1])
    return BallSize(n=n, r=r, value=value)


BALL_FORM_MIN_N = {0: 1, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5}


def ball_closed_form(n: int, r: int) -> int:
    """Ball size for radii up to 5 as a polynomial in n, O(1) for any n.

    Thresholds are enforced exactly as stated; below them the polynomial
    disagrees with the true ball size (the sphere summands degenerate).
    """
    if r not in BALL_FORM_MIN_N:
        raise ValueError(f"closed forms cover radii 0..5, got {r}")
    if n < BALL_FORM_MIN_N[r]:
        raise ValueError(f"radius {r} closed form needs n >= {BALL_FORM_MIN_N[r]}, got {n}")
    if r == 0:
        return 1
    if r == 1:
        return n
    if r == 2:
        return _exact_div((n + 2) * (n - 1), 2)
    if r == 3:
        return _exact_div((n + 1) * (n**2 + 2 * n - 6), 6)
    if r == 4:
        return _exact_div((n + 2) * (n + 1) * (n**2 + 3 * n - 12), 24)
    return _exact_div((n + 7) * n * (n**3 + 3 * n**2 - 6 * n - 28), 120)


TSV_HEADER = "n\ti\tsphere\tball"


def table_tsv_lines(table: SphereTable, max_r: Optional[int] = None) -> Iterator[str]:
    """Stream the table as tab-separated ``n i sphere ball`` lines with header."""
    if max_r is not None and max_r < 0:
        raise ValueError(f"radius limit must be nonnegative, got {max_r}")
    yield TSV_HEADER
    for n in range(2, table.max_n + 1):
        running = 0
        for i, count in enumerate(table.row(n)):
            if max_r is not None and i > max_r:
                break
            running += count
            yield f"{n}\t{i}\t{count}\t{running}"
