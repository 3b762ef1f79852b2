"""The Moon-Moser function g(n) and the inequalities its induction relies on.

Everything here is exact integer arithmetic.  Comparisons between numbers of
the form ``c * 3**(k/3)`` with fractional exponents are decided by cubing both
sides.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import CapacityError, GraphValidationError

GUARD = 120
# g(GUARD) = 3**40 still fits an unsigned 64-bit word.
U64_MAX = (1 << 64) - 1

# Values the combinatorics forces below the range of the closed form:
# the null graph has one MIS (the empty set), K_1 has one ({v}).
SMALL_VALUES = {0: 1, 1: 1}


def _check_range(n: int) -> None:
    if n < 0:
        raise GraphValidationError(f"n must be non-negative, got {n}")
    if n > GUARD:
        raise CapacityError(f"n={n} exceeds the overflow guard {GUARD}")


def _checked(value: int) -> int:
    if value > U64_MAX:
        raise CapacityError(f"{value} does not fit in 64 bits")
    return value


def g(n: int) -> int:
    """Maximum number of maximal independent sets over all n-vertex graphs."""
    _check_range(n)
    if n in SMALL_VALUES:
        return SMALL_VALUES[n]
    r = n % 3
    if r == 0:
        return _checked(3 ** (n // 3))
    if r == 1:
        return _checked(4 * 3 ** ((n - 4) // 3))
    return _checked(2 * 3 ** ((n - 2) // 3))


def sandwich_check(n: int) -> bool:
    """True iff 4 * 3**((n-4)/3) <= g(n) <= 3**(n/3)."""
    if n < 4:
        raise GraphValidationError("the sandwich needs n >= 4")
    cube = g(n) ** 3
    return 64 * 3 ** (n - 4) <= cube <= 3**n


def g_is_nondecreasing(n_max: int) -> bool:
    _check_range(n_max)
    values = [g(k) for k in range(n_max + 1)]
    return all(a <= b for a, b in zip(values, values[1:]))


def branch_bound(n: int, d: int) -> int:
    """(d + 1) * g(n - d - 1): the bound from branching on a degree-d vertex."""
    if d < 0 or d + 1 > n:
        raise GraphValidationError(f"need 0 <= d and d + 1 <= n, got n={n}, d={d}")
    return _checked((d + 1) * g(n - d - 1))


def high_degree_chain(n: int, d: int) -> bool:
    """(d+1) * 3**((n-d-1)/3) <= 4 * 3**((n-4)/3), compared as cubes."""
    if d < 3 or d >= n:
        raise GraphValidationError(f"need 3 <= d < n, got n={n}, d={d}")
    return (d + 1) ** 3 * 3 ** (n - d - 1) <= 64 * 3 ** (n - 4)


def proof_cases(n: int) -> dict[str, bool]:
    """Evaluate every residue case of the induction step that applies at ``n``.

    Keys: ``"d>=3"`` (the high-degree chain for every 3 <= d < n, ending in
    the sandwich lower bound), ``"d=2"`` (3*g(n-3) vs g(n)) and ``"d=1"``
    (2*g(n-2) vs g(n), strict when n = 0 mod 3).  Absent keys do not apply.
    """
    _check_range(n)
    out: dict[str, bool] = {}
    if n >= 4:
        out["d>=3"] = all(high_degree_chain(n, d) for d in range(3, n)) and sandwich_check(n)
    if n >= 3:
        # With g(1) = 1 the n = 4 instance is 3 < 4, still an upper bound.
        out["d=2"] = 3 * g(n - 3) == g(n) if n != 4 else 3 * g(1) <= g(4)
    if n >= 2:
        r = n % 3
        if r == 0:
            out["d=1"] = 2 * g(n - 2) < g(n)
        else:
            out["d=1"] = 2 * g(n - 2) == g(n)
    return out


@lru_cache(maxsize=None)
def _best_products(limit: int) -> tuple[int, ...]:
    best = [1] * (limit + 1)
    for total in range(1, limit + 1):
        best[total] = max(part * best[total - part] for part in range(1, total + 1))
    return tuple(best)


def max_product_partition(n: int) -> int:
    """Largest product of positive integers summing to ``n`` (dynamic programming)."""
    if n < 1:
        raise GraphValidationError("n must be positive")
    _check_range(n)
    return _checked(_best_products(n)[n])
