"""Brute-force ground truth for small symmetric groups.

Everything in this module works by enumerating permutations and measuring
distances directly, deliberately avoiding the recurrence machinery it is
meant to check.  Sizes are capped accordingly: histograms up to n = 10,
ball censuses up to n = 8, perfect-code searches up to n = 6.

The perfect-code search is an exact-cover backtracker over radius-t balls:
a perfect code is exactly a set of centers whose balls partition S_n.  It
always expands the uncovered permutation with the fewest admissible
centers first (fail-first), visits candidate centers in lexicographic
order, and counts every visited state, so outcomes and node counts are
reproducible run to run.  By default the identity is fixed as the first
codeword: translating all codewords by a fixed permutation on the right
preserves pairwise distances, so any perfect code can be shifted to one
containing the identity and the restriction loses no generality.  The
flag exists so tests can confirm that empirically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .numtheory import factorial
from .perms import Permutation, check_permutation, enumerate_sn, kendall_distance

MAX_HISTOGRAM_N = 10
MAX_CENSUS_N = 8
MAX_SEARCH_N = 6

DEFAULT_SEARCH_BUDGET = 1_000_000

FOUND = "FOUND"
EXHAUSTED_NONE = "EXHAUSTED_NONE"
ABORTED_BUDGET = "ABORTED_BUDGET"


@dataclass(frozen=True)
class InversionHistogram:
    """counts[i] = number of permutations of [n] with exactly i inversions."""

    n: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class CodeSearchResult:
    """Outcome of an exhaustive perfect-code search.

    ``code`` is populated only for FOUND.  ``nodes_explored`` counts every
    search state visited, including dead ends, and is deterministic for
    given inputs.  ``note`` explains shortcuts such as the divisibility
    pre-check.
    """

    n: int
    t: int
    outcome: str
    code: Optional[tuple[Permutation, ...]]
    nodes_explored: int
    note: str = ""


def inversion_histogram(n: int) -> InversionHistogram:
    """Count inversions of every permutation of [n] by direct pair scans."""
    if not 2 <= n <= MAX_HISTOGRAM_N:
        raise ValueError(f"histogram supports 2 <= n <= {MAX_HISTOGRAM_N}, got {n}")
    counts = [0] * (math.comb(n, 2) + 1)
    for perm in itertools.permutations(range(n)):
        inversions = 0
        for i in range(n - 1):
            left = perm[i]
            for right in perm[i + 1 :]:
                if left > right:
                    inversions += 1
        counts[inversions] += 1
    return InversionHistogram(n=n, counts=tuple(counts))


def ball_census(n: int, r: int, center: Sequence[int]) -> int:
    """Count permutations within distance r of ``center`` by full enumeration."""
    if not 2 <= n <= MAX_CENSUS_N:
        raise ValueError(f"census supports 2 <= n <= {MAX_CENSUS_N}, got {n}")
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    center = check_permutation(center)
    if len(center) != n:
        raise ValueError(f"center has size {len(center)}, expected {n}")
    return sum(1 for pi in enumerate_sn(n) if kendall_distance(center, pi) <= r)


def verify_min_distance(code: Sequence[Sequence[int]], d: int) -> bool:
    """Whether all pairwise distances in ``code`` are at least d."""
    if d < 1:
        raise ValueError(f"distance requirement must be at least 1, got {d}")
    members = [check_permutation(pi) for pi in code]
    if not members:
        raise ValueError("empty code")
    sizes = {len(pi) for pi in members}
    if len(sizes) > 1:
        raise ValueError(f"codewords of mixed sizes {sorted(sizes)}")
    for a, b in itertools.combinations(members, 2):
        if kendall_distance(a, b) < d:
            return False
    return True


def search_perfect_code(
    n: int,
    t: int,
    *,
    node_budget: int = DEFAULT_SEARCH_BUDGET,
    fix_first_codeword: bool = True,
) -> CodeSearchResult:
    """Exhaustively decide whether a perfect t-code exists in S_n.

    Returns FOUND with a witness code, EXHAUSTED_NONE when the whole
    (symmetry-reduced) space was searched without success, or
    ABORTED_BUDGET when ``node_budget`` states were visited first.
    """
    if not 2 <= n <= MAX_SEARCH_N:
        raise ValueError(f"search supports 2 <= n <= {MAX_SEARCH_N}, got {n}")
    if t < 0:
        raise ValueError(f"radius must be nonnegative, got {t}")
    if node_budget < 1:
        raise ValueError(f"node budget must be positive, got {node_budget}")
    perms = list(enumerate_sn(n))
    size = len(perms)
    masks = [1 << a for a in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            if kendall_distance(perms[a], perms[b]) <= t:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    ball = masks[0].bit_count()
    order = factorial(n)
    if order % ball:
        return CodeSearchResult(
            n=n,
            t=t,
            outcome=EXHAUSTED_NONE,
            code=None,
            nodes_explored=0,
            note=(
                f"ball size {ball} does not divide |S_{n}| = {order}; "
                "balls cannot partition the group"
            ),
        )
    full = (1 << size) - 1
    covered = 0
    chosen: list[int] = []
    if fix_first_codeword:
        chosen.append(0)
        covered = masks[0]

    def admissible_centers(point: int, state: int) -> list[int]:
        # centers whose ball contains the point and misses everything covered
        centers = []
        remaining = masks[point]
        while remaining:
            low = remaining & -remaining
            center = low.bit_length() - 1
            remaining ^= low
            if masks[center] & state == 0:
                centers.append(center)
        return centers

    def tightest_candidates(state: int) -> list[int]:
        # fail-first: the uncovered point with the fewest admissible centers
        best: Optional[list[int]] = None
        uncovered = full & ~state
        while uncovered:
            low = uncovered & -uncovered
            point = low.bit_length() - 1
            uncovered ^= low
            centers = admissible_centers(point, state)
            if best is None or len(centers) < len(best):
                best = centers
                if len(best) <= 1:
                    break
        assert best is not None
        return best

    nodes = 0
    outcome = EXHAUSTED_NONE
    found_centers: Optional[list[int]] = None
    # Each frame: [candidates, next_index, covered_before_frame].  A frame
    # pops its previously tried candidate from ``chosen`` before advancing.
    frames: list[list] = []
    while True:
        nodes += 1
        if nodes > node_budget:
            outcome = ABORTED_BUDGET
            break
        if covered == full:
            outcome = FOUND
            found_centers = list(chosen)
            break
        frames.append([tightest_candidates(covered), 0, covered])
        advanced = False
        while frames and not advanced:
            top = frames[-1]
            candidates, index, state = top
            if index > 0:
                chosen.pop()
            if index < len(candidates):
                top[1] = index + 1
                chosen.append(candidates[index])
                covered = state | masks[candidates[index]]
                advanced = True
            else:
                frames.pop()
        if not advanced:
            break
    solution: Optional[tuple[Permutation, ...]] = None
    if outcome == FOUND:
        assert found_centers is not None
        union = 0
        for center in found_centers:
            if union & masks[center]:
                raise AssertionError("search produced overlapping balls")
            union |= masks[center]
        if union != full:
            raise AssertionError("search produced an incomplete cover")
        solution = tuple(perms[c] for c in found_centers)
    return CodeSearchResult(
        n=n, t=t, outcome=outcome, code=solution, nodes_explored=nodes
    )
