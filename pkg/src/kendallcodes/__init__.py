"""Exact counting and divisibility certificates for permutation codes
under the Kendall tau metric.

The package answers two questions about the symmetric group S_n with the
adjacent-transposition (Kendall tau) distance, in exact integer
arithmetic throughout:

* how many permutations lie at distance i from a center, or within
  radius r (``mahonian``), and
* when does the sphere-packing identity already rule out a perfect
  t-error-correcting code (``certifier``).

``perms`` supplies the group arithmetic, ``numtheory`` the factorization
and factorial-divisibility support, and ``oracle`` brute-force ground
truth for small n, including an exhaustive perfect-code search.
"""

from .certifier import (
    Certificate,
    INCONCLUSIVE,
    NONEXISTENT_NOT_DIVIDING,
    NONEXISTENT_PRIME_FACTOR,
    ball_value,
    certify,
    check_certificate,
    format_certificate,
    format_certificate_pretty,
    parse_certificate,
    scan,
)
from .mahonian import (
    BallSize,
    SphereTable,
    ball_closed_form,
    ball_size,
    build_table,
    max_distance,
    sphere_closed_form,
    sphere_size,
    sphere_size_large_radius,
    sphere_size_small_radius,
    table_tsv_lines,
)
from .numtheory import (
    Factorization,
    FactorizationBudgetError,
    divides_factorial,
    factorial,
    factorial_valuation,
    factorize,
    format_factorization,
    is_probable_prime,
    max_prime_factor,
)
from .oracle import (
    CodeSearchResult,
    InversionHistogram,
    ball_census,
    inversion_histogram,
    search_perfect_code,
    verify_min_distance,
)
from .perms import (
    adjacent_neighbors,
    compose,
    enumerate_sn,
    format_permutation,
    identity,
    inverse,
    kendall_distance,
    kendall_weight,
    parse_permutation,
    reverse,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "INCONCLUSIVE",
    "NONEXISTENT_NOT_DIVIDING",
    "NONEXISTENT_PRIME_FACTOR",
    "ball_value",
    "certify",
    "check_certificate",
    "format_certificate",
    "format_certificate_pretty",
    "parse_certificate",
    "scan",
    "BallSize",
    "SphereTable",
    "ball_closed_form",
    "ball_size",
    "build_table",
    "max_distance",
    "sphere_closed_form",
    "sphere_size",
    "sphere_size_large_radius",
    "sphere_size_small_radius",
    "table_tsv_lines",
    "Factorization",
    "FactorizationBudgetError",
    "divides_factorial",
    "factorial",
    "factorial_valuation",
    "factorize",
    "format_factorization",
    "is_probable_prime",
    "max_prime_factor",
    "CodeSearchResult",
    "InversionHistogram",
    "ball_census",
    "inversion_histogram",
    "search_perfect_code",
    "verify_min_distance",
    "adjacent_neighbors",
    "compose",
    "enumerate_sn",
    "format_permutation",
    "identity",
    "inverse",
    "kendall_distance",
    "kendall_weight",
    "parse_permutation",
    "reverse",
]
