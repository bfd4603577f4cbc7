"""Permutation arithmetic for the symmetric group under the Kendall tau metric.

A permutation of [n] = {1, ..., n} is a tuple of the values 1..n in one-line
notation: ``pi[i]`` is the image of position ``i + 1``.  All values are
1-based at the interface; helper indices inside functions are 0-based.

Composition order matters and is easy to get backwards.  Throughout this
package ``compose(pi, sigma)`` applies ``pi`` first and ``sigma`` second,
so the result maps ``i`` to ``sigma(pi(i))``.  The Kendall tau distance is
defined from the relative order of values and does not depend on that
choice; only ``compose`` itself does.

The Kendall tau distance between two permutations is the number of value
pairs ordered differently by the two, which equals the minimum number of
adjacent transpositions turning one into the other.  The weight of a
permutation is its distance from the identity, i.e. its inversion count.

Group arithmetic here is capped at n = 20 and full enumeration at n = 10;
counting questions for larger n belong to the recurrence machinery in
``mahonian``, which never materializes permutations.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

MAX_ARITH_N = 20
MAX_ENUM_N = 10

Permutation = tuple[int, ...]


def check_permutation(pi: Sequence[int]) -> Permutation:
    """Validate one-line notation and return it as a tuple.

    Raises ValueError if the entries are not exactly 1..n in some order,
    or if n is outside the supported arithmetic range.
    """
    entries = tuple(pi)
    n = len(entries)
    if not 1 <= n <= MAX_ARITH_N:
        raise ValueError(f"group size must be between 1 and {MAX_ARITH_N}, got {n}")
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {list(entries)}")
    return entries


def identity(n: int) -> Permutation:
    """The identity permutation [1, 2, ..., n].

    >>> identity(4)
    (1, 2, 3, 4)
    """
    if not 1 <= n <= MAX_ARITH_N:
        raise ValueError(f"group size must be between 1 and {MAX_ARITH_N}, got {n}")
    return tuple(range(1, n + 1))


def compose(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    """Apply ``pi`` first, then ``sigma``: the result maps i to sigma(pi(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    pi = check_permutation(pi)
    sigma = check_permutation(sigma)
    if len(pi) != len(sigma):
        raise ValueError(f"size mismatch: {len(pi)} vs {len(sigma)}")
    return tuple(sigma[v - 1] for v in pi)


def inverse(pi: Sequence[int]) -> Permutation:
    """The inverse permutation: position of each value.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    pi = check_permutation(pi)
    inv = [0] * len(pi)
    for pos, value in enumerate(pi):
        inv[value - 1] = pos + 1
    return tuple(inv)


def reverse(pi: Sequence[int]) -> Permutation:
    """The left-to-right reversal of ``pi``.

    Reversal complements the inversion count: a value pair is inverted in
    exactly one of ``pi`` and ``reverse(pi)``, so the two weights always
    sum to n(n-1)/2.

    >>> reverse((2, 1, 3))
    (3, 1, 2)
    """
    pi = check_permutation(pi)
    return pi[::-1]


def kendall_weight(pi: Sequence[int]) -> int:
    """Number of inversions of ``pi``: value pairs appearing in decreasing order.

    Counted by divide and conquer (merge counting) rather than the direct
    pair scan, which the tests keep as an independent oracle.

    >>> kendall_weight((4, 3, 2, 1))
    6
    """
    pi = check_permutation(pi)
    _, inversions = _sort_and_count(list(pi))
    return inversions


def _sort_and_count(seq: list[int]) -> tuple[list[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, cl = _sort_and_count(seq[:mid])
    right, cr = _sort_and_count(seq[mid:])
    merged: list[int] = []
    count = cl + cr
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            # right[j] jumps ahead of every remaining left element
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def kendall_distance(sigma: Sequence[int], pi: Sequence[int]) -> int:
    """Kendall tau distance: number of value pairs the two permutations order oppositely.

    Equals the minimum number of adjacent transpositions transforming one
    permutation into the other, and is computed as the inversion count of
    ``pi`` relabeled through ``sigma``'s positions.

    >>> kendall_distance((2, 1, 3), (1, 3, 2))
    2
    """
    sigma = check_permutation(sigma)
    pi = check_permutation(pi)
    if len(sigma) != len(pi):
        raise ValueError(f"size mismatch: {len(sigma)} vs {len(pi)}")
    position = inverse(sigma)
    relabeled = [position[v - 1] for v in pi]
    _, inversions = _sort_and_count(relabeled)
    return inversions


def adjacent_neighbors(pi: Sequence[int]) -> list[Permutation]:
    """All permutations one adjacent transposition away, in position order.

    >>> adjacent_neighbors((1, 2, 3))
    [(2, 1, 3), (1, 3, 2)]
    """
    pi = check_permutation(pi)
    neighbors = []
    for i in range(len(pi) - 1):
        swapped = list(pi)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        neighbors.append(tuple(swapped))
    return neighbors


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """Lazily yield all of S_n in lexicographic order.

    >>> list(enumerate_sn(2))
    [(1, 2), (2, 1)]
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    return iter(itertools.permutations(range(1, n + 1)))


def format_permutation(pi: Sequence[int]) -> str:
    """Render one-line notation as text, e.g. ``[2,1,3]``."""
    pi = check_permutation(pi)
    return "[" + ",".join(str(v) for v in pi) + "]"


def parse_permutation(text: str) -> Permutation:
    """Parse the textual form produced by :func:`format_permutation`.

    >>> parse_permutation("[2,1,3]")
    (2, 1, 3)
    """
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ValueError(f"expected bracketed one-line notation, got {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        raise ValueError("empty permutation")
    try:
        entries = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    return check_permutation(entries)
