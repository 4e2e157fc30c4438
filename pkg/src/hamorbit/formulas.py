"""Closed-form class counts, exact integer arithmetic throughout."""

from __future__ import annotations

from math import factorial, isqrt

from .errors import InexactDivision, NegativeInput, NonPositive, NotPrime, NTooSmall, POutOfRange
from .groups import EquivKind, GraphKind, Mode

PATH_LABELS = ("A1", "A2", "A3", "A4")
CYCLE_LABELS = ("B1", "B2", "B3", "B4")


def double_factorial(n: int) -> int:
    """n * (n-2) * (n-4) * ... down to 1 or 2; ``0!! == 1``."""
    if n < 0:
        raise NegativeInput(f"double factorial of {n}")
    out = 1
    for a in range(n, 1, -2):
        out *= a
    return out


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise NonPositive(f"phi is defined for n >= 1, got {n}")
    out = n
    for p in _factorize(n):
        out -= out // p
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise NonPositive(f"divisors of {n}")
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def totient_sum(n: int) -> int:
    """Sum over d | n of phi(n/d)^2 * (n/d)^d * d!.

    Counts the strings fixed by pure shift/rotation pairs, summed over all pairs.
    """
    if n < 1:
        raise NonPositive(f"totient sum needs n >= 1, got {n}")
    total = 0
    for d in divisors(n):
        q = n // d
        total += euler_phi(q) ** 2 * q**d * factorial(d)
    return total


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % t for t in range(2, isqrt(p) + 1))


def exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivision(f"{numerator} is not divisible by {denominator} (remainder {r})")
    return q


def _require(n: int) -> None:
    if n < 3:
        raise NTooSmall(f"the counting formulas need n >= 3, got {n}")


def bracket_total(graph: GraphKind, equiv: EquivKind, n: int) -> tuple[int, int]:
    """(bracketed total, prefactor denominator) of the closed form for one mode."""
    _require(n)
    even = n % 2 == 0
    if graph is GraphKind.PATH:
        if equiv is EquivKind.SIMILAR:
            extra = (n // 2 + 1) * double_factorial(n - 2) if even else double_factorial(n - 1)
            return factorial(n - 1) + extra, 4
        extra = double_factorial(n - 2) if even else 0
        return factorial(n - 1) + extra, 2
    b1 = totient_sum(n)
    if equiv is EquivKind.SIMILAR:
        # n(n+6)/4 * n!! is only integral once multiplied out
        extra = exact_div(double_factorial(n) * n * (n + 6), 4) if even else n * n * double_factorial(n - 1)
        return b1 + extra, 4 * n * n
    extra = n // 2 * double_factorial(n) if even else 0
    return b1 + extra, 2 * n * n


def class_count(mode: Mode) -> int:
    """Number of classes for ``mode`` straight from the closed-form formulas."""
    total, denominator = bracket_total(mode.graph, mode.equiv, mode.n)
    return exact_div(total, denominator)


def component_sums(mode: Mode) -> dict[str, int]:
    """Per-family fixed-point sums as derived in the proofs.

    Rotation-only modes keep just the reflection-free families
    (A1, A3 or B1, B3).
    """
    n = mode.n
    _require(n)
    even = n % 2 == 0
    half = n // 2
    if mode.graph is GraphKind.PATH:
        sums = {
            "A1": factorial(n),
            "A2": 0,
            "A3": double_factorial(n) if even else 0,
            "A4": half * double_factorial(n) if even else n * double_factorial(n - 1),
        }
        keep = ("A1", "A3")
    else:
        sums = {
            "B1": totient_sum(n),
            "B2": half * double_factorial(n) if even else 0,
            "B3": half * double_factorial(n) if even else 0,
            "B4": (half + 1) * half * double_factorial(n) if even else n * n * double_factorial(n - 1),
        }
        keep = ("B1", "B3")
    if mode.equiv is EquivKind.EQUIVALENT:
        sums = {label: sums[label] for label in keep}
    return sums


def class_count_from_components(mode: Mode) -> int:
    return exact_div(sum(component_sums(mode).values()), mode.group_order)


def prime_class_count(p: int, equiv: EquivKind) -> int:
    """Cycle class count for an odd prime via the simplified prime form."""
    if p <= 2:
        raise POutOfRange(f"need an odd prime, got {p}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if equiv is EquivKind.SIMILAR:
        return exact_div((p - 1) ** 2 + p * double_factorial(p - 1) + factorial(p - 1), 4 * p)
    return exact_div((p - 1) ** 2 + factorial(p - 1), 2 * p)

