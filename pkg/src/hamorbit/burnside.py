"""Exhaustive oracles: fixed-point scans, Burnside quotients and orbit enumeration.

Strings are scanned in blocks, one block per leading label, so the work splits
into ``n`` independent partitions.  Each block is a ``(rows, n)`` integer array;
a group element acts on the whole block with one gather and one table lookup.
Strings are compared through a base-``n`` integer code whose numeric order is
the lexicographic order of the strings.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from . import groups
from .errors import CapExceeded, LengthMismatch
from .formulas import CYCLE_LABELS, PATH_LABELS, exact_div
from .groups import GraphKind, GroupElement, Mode, ShapeKey
from .perms import PermString, check_cap

# base-n codes must fit in uint64
_CODE_LIMIT = 16


def default_jobs() -> int:
    return os.cpu_count() or 1


def _check(n: int) -> None:
    check_cap(n)
    if n > _CODE_LIMIT:
        raise CapExceeded(f"exhaustive scans support n <= {_CODE_LIMIT}")


def string_block(n: int, first: int) -> np.ndarray:
    """All strings starting with ``first``, lexicographically, as a 2-D array."""
    rest = [a for a in range(n) if a != first]
    tails = np.array(list(permutations(rest)), dtype=np.int8).reshape(-1, n - 1)
    head = np.full((tails.shape[0], 1), first, dtype=np.int8)
    return np.hstack([head, tails])


def _powers(n: int) -> np.ndarray:
    return np.array([n ** (n - 1 - j) for j in range(n)], dtype=np.uint64)


def encode(block: np.ndarray, n: int) -> np.ndarray:
    return block.astype(np.uint64) @ _powers(n)


def decode(code: int, n: int) -> PermString:
    digits = []
    for _ in range(n):
        code, d = divmod(int(code), n)
        digits.append(d)
    return PermString(reversed(digits))


def _act(block: np.ndarray, g: GroupElement) -> np.ndarray:
    lab = np.array(g.label_map(), dtype=np.int8)
    return lab[block[:, list(g.position_map())]]


# -- per-partition workers (module level so they pickle) ---------------------


def _fixed_counts_part(args: tuple[Mode, int]) -> list[int]:
    mode, first = args
    block = string_block(mode.n, first)
    return [int(np.all(_act(block, g) == block, axis=1).sum()) for g in groups.elements(mode)]


def _canonical_codes_part(args: tuple[Mode, int]) -> np.ndarray:
    mode, first = args
    n = mode.n
    block = string_block(n, first)
    powers = _powers(n)
    best = None
    for g in groups.elements(mode):
        codes = _act(block, g).astype(np.uint64) @ powers
        best = codes if best is None else np.minimum(best, codes)
    return best


def _run(worker, mode: Mode, jobs: int | None) -> list:
    tasks = [(mode, first) for first in range(mode.n)]
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        # map keeps task order, so the merge is identical for any worker count
        return list(pool.map(worker, tasks))


# -- public API --------------------------------------------------------------


@dataclass
class OrbitReport:
    mode: Mode
    fixed_counts: dict[GroupElement, int]
    burnside_total: int
    class_count: int
    representatives: list[PermString] | None = field(default=None)

    def family_sums(self) -> dict[str, int]:
        """Scanned fixed counts summed per element family (A1..A4 or B1..B4)."""
        labels = PATH_LABELS if self.mode.graph is GraphKind.PATH else CYCLE_LABELS
        sums: dict[str, int] = {}
        for g, count in self.fixed_counts.items():
            label = labels[g.family]
            sums[label] = sums.get(label, 0) + count
        return sums


def fixed_count_scan(g: GroupElement, n: int | None = None) -> int:
    """Number of strings fixed by ``g``, by scanning all of X_n."""
    n = g.mode.n if n is None else n
    if n != g.mode.n:
        raise LengthMismatch(f"element acts on n={g.mode.n}, asked to scan n={n}")
    _check(n)
    total = 0
    for first in range(n):
        block = string_block(n, first)
        total += int(np.all(_act(block, g) == block, axis=1).sum())
    return total


def burnside_count(mode: Mode, jobs: int | None = 1, with_representatives: bool = False) -> OrbitReport:
    """Count orbits as the average number of fixed strings over the group."""
    _check(mode.n)
    parts = _run(_fixed_counts_part, mode, jobs)
    elems = groups.elements(mode)
    fixed = {g: sum(part[i] for part in parts) for i, g in enumerate(elems)}
    total = sum(fixed.values())
    count = exact_div(total, len(elems))
    reps = [rep for rep, _ in enumerate_classes(mode, jobs)] if with_representatives else None
    return OrbitReport(mode, fixed, total, count, reps)


def canonical_rep(x: Sequence[int], mode: Mode) -> PermString:
    """Lexicographically smallest string in the orbit of ``x``."""
    return min(groups.apply(g, x) for g in groups.elements(mode))


def canonical_codes(mode: Mode, jobs: int | None = 1) -> np.ndarray:
    """Canonical-representative code of every string, in lexicographic string order."""
    _check(mode.n)
    return np.concatenate(_run(_canonical_codes_part, mode, jobs))


def enumerate_classes(mode: Mode, jobs: int | None = 1) -> list[tuple[PermString, ShapeKey]]:
    """One canonical representative per orbit with its shape, sorted."""
    codes = np.unique(canonical_codes(mode, jobs))
    out = []
    for code in codes:
        rep = decode(code, mode.n)
        out.append((rep, groups.shape_key(rep, mode.graph)))
    return out
