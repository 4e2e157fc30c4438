"""Permutation strings: the elements of X_n and exhaustive iteration over them."""

from __future__ import annotations

import os
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, DuplicateLabel, EmptyString, OutOfRange

DEFAULT_CAP = 12
CAP_ENV_VAR = "HAMORBIT_CAP"


class PermString(tuple):
    """An immutable permutation of ``0..n-1`` read as a vertex traversal order.

    Construct through :func:`validate`; the constructor itself does not check.
    """

    __slots__ = ()

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) <= 10:
            return "".join(str(a) for a in self)
        return " ".join(str(a) for a in self)

    def __repr__(self) -> str:
        return f"PermString({self})"


def enumeration_cap() -> int:
    """The largest n allowed for exhaustive scans (``HAMORBIT_CAP`` overrides)."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    return int(raw)


def check_cap(n: int, cap: int | None = None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {limit} (set {CAP_ENV_VAR} to raise it)")


def _check_labels(raw: Sequence[int], n: int) -> None:
    seen = set()
    for a in raw:
        if not 0 <= a < n:
            raise OutOfRange(f"label {a} not in 0..{n - 1}")
        if a in seen:
            raise DuplicateLabel(f"label {a} repeats")
        seen.add(a)


def validate(raw: Iterable[int]) -> PermString:
    """Return ``raw`` as a :class:`PermString` if it is a permutation of ``0..len-1``."""
    items = tuple(int(a) for a in raw)
    if not items:
        raise EmptyString("a permutation string needs at least one label")
    _check_labels(items, len(items))
    return PermString(items)


def all_strings(n: int, cap: int | None = None) -> Iterator[PermString]:
    """Yield all n! strings of length n in lexicographic order."""
    if n < 1:
        raise EmptyString("n must be at least 1")
    check_cap(n, cap)
    for p in permutations(range(n)):
        yield PermString(p)


def strings_with_prefix(n: int, prefix: Sequence[int], cap: int | None = None) -> Iterator[PermString]:
    """Yield, lexicographically, the strings of length n that start with ``prefix``."""
    if n < 1:
        raise EmptyString("n must be at least 1")
    prefix = tuple(int(a) for a in prefix)
    if len(prefix) > n:
        raise OutOfRange(f"prefix longer than n={n}")
    # duplicates are reported before range errors, matching validate on e.g. [2, 2]
    if len(set(prefix)) != len(prefix):
        raise DuplicateLabel(f"prefix {list(prefix)} repeats a label")
    _check_labels(prefix, n)
    check_cap(n, cap)
    rest = [a for a in range(n) if a not in prefix]
    for tail in permutations(rest):
        yield PermString(prefix + tail)
