"""The acting groups and their action on strings and drawn shapes.

An element is stored in the normal form ``(c^m v^v, s^s r^k)``.  Acting on a
string ``x`` it first rotates positions by ``m`` (``y_i = x_{i+m}``), then
reverses if ``v`` is set; independently every label ``a`` becomes
``a + k`` and is then negated if ``s`` is set, so the label map is
``a -> -(a + k)`` for reflections.  Position and label maps commute.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthMismatch, ModeMismatch, NTooSmall, SizeMismatch, TooShort
from .perms import PermString


class GraphKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


class EquivKind(enum.Enum):
    SIMILAR = "similar"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class Mode:
    graph: GraphKind
    equiv: EquivKind
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise NTooSmall(f"counting needs n >= 3, got {self.n}")

    @property
    def group_order(self) -> int:
        order = 2 * self.n
        if self.graph is GraphKind.CYCLE:
            order *= self.n
        if self.equiv is EquivKind.SIMILAR:
            order *= 2
        return order

    def __str__(self) -> str:
        return f"{self.graph.value}/{self.equiv.value}/n={self.n}"


ALL_KINDS = [(g, e) for g in GraphKind for e in EquivKind]


@dataclass(frozen=True)
class GroupElement:
    mode: Mode
    m: int = 0
    v: bool = False
    k: int = 0
    s: bool = False

    def __post_init__(self):
        n = self.mode.n
        if not (0 <= self.m < n and 0 <= self.k < n):
            raise ValueError(f"exponents must lie in [0, {n}): m={self.m}, k={self.k}")
        if self.mode.graph is GraphKind.PATH and self.m != 0:
            raise ValueError("path groups have no cyclic shift (m must be 0)")
        if self.mode.equiv is EquivKind.EQUIVALENT and self.s:
            raise ValueError("rotation-only groups have no reflection (s must be false)")

    @property
    def family(self) -> int:
        """Index 0..3 of the component sum (A1..A4 / B1..B4) this element feeds."""
        return 2 * int(self.v) + int(self.s)

    def position_map(self) -> tuple[int, ...]:
        """``p`` with ``(g.x)_i = label_map(x_{p_i})``."""
        n, m = self.mode.n, self.m
        if self.v:
            return tuple((n - 1 - i + m) % n for i in range(n))
        return tuple((i + m) % n for i in range(n))

    def label_map(self) -> tuple[int, ...]:
        n, k = self.mode.n, self.k
        if self.s:
            return tuple((-(a + k)) % n for a in range(n))
        return tuple((a + k) % n for a in range(n))

    def __str__(self) -> str:
        left = []
        if self.m:
            left.append(f"c^{self.m}")
        if self.v:
            left.append("v")
        right = []
        if self.s:
            right.append("s")
        if self.k:
            right.append(f"r^{self.k}")
        return f"({''.join(left) or '1'}, {''.join(right) or '1'})"


def identity(mode: Mode) -> GroupElement:
    return GroupElement(mode)


def elements(mode: Mode) -> list[GroupElement]:
    """All elements of the acting group, grouped by family then ``m`` then ``k``."""
    n = mode.n
    ms = range(n) if mode.graph is GraphKind.CYCLE else (0,)
    ss = (False, True) if mode.equiv is EquivKind.SIMILAR else (False,)
    return [
        GroupElement(mode, m, v, k, s)
        for v in (False, True)
        for s in ss
        for m in ms
        for k in range(n)
    ]


def apply(g: GroupElement, x: Sequence[int]) -> PermString:
    n = g.mode.n
    if len(x) != n:
        raise LengthMismatch(f"string of length {len(x)} under a group on n={n}")
    pos = g.position_map()
    lab = g.label_map()
    return PermString(lab[x[p]] for p in pos)


def apply_positions(g: GroupElement, x: Sequence[int]) -> PermString:
    """Only the string-symmetry factor of ``g``."""
    return PermString(x[p] for p in g.position_map())


def apply_labels(g: GroupElement, x: Sequence[int]) -> PermString:
    """Only the geometric factor of ``g``."""
    lab = g.label_map()
    return PermString(lab[a] for a in x)


def _affine(table: Sequence[int], n: int) -> tuple[int, int]:
    # every map in these groups is i -> sign*i + offset (mod n)
    offset = table[0]
    sign = 1 if (table[1] - offset) % n == 1 else -1
    return sign, offset


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element acting as ``g`` after ``h``."""
    if g.mode != h.mode:
        raise ModeMismatch(f"cannot compose elements of {g.mode} and {h.mode}")
    mode = g.mode
    n = mode.n
    # (g.(h.x))_i = Lg(Lh(x_{ph(pg(i))}))
    hp, gp = h.position_map(), g.position_map()
    pos = [hp[gp[i]] for i in range(n)]
    hl, gl = h.label_map(), g.label_map()
    lab = [gl[hl[a]] for a in range(n)]

    psign, poff = _affine(pos, n)
    if psign == 1:
        v, m = False, poff
    else:
        v, m = True, (poff - (n - 1)) % n
    lsign, loff = _affine(lab, n)
    if lsign == 1:
        s, k = False, loff
    else:
        s, k = True, (-loff) % n
    return GroupElement(mode, m, v, k, s)


def inverse(g: GroupElement) -> GroupElement:
    for h in elements(g.mode):
        if compose(g, h) == identity(g.mode):
            return h
    raise AssertionError(f"{g} has no inverse")  # pragma: no cover


def power(g: GroupElement, e: int) -> GroupElement:
    out = identity(g.mode)
    for _ in range(e):
        out = compose(g, out)
    return out


# -- shapes ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ShapeKey:
    """Canonical undirected edge set of a drawn path or cycle on ``n`` vertices."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> ShapeKey:
        return cls(n, tuple(sorted({(min(a, b), max(a, b)) for a, b in edges})))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def __str__(self) -> str:
        return "{" + ",".join(f"{{{a},{b}}}" for a, b in self.edges) + "}"


def shape_key(x: Sequence[int], graph: GraphKind) -> ShapeKey:
    n = len(x)
    if graph is GraphKind.PATH and n < 2:
        raise TooShort("a path shape needs at least 2 vertices")
    if graph is GraphKind.CYCLE and n < 3:
        raise TooShort("a cycle shape needs at least 3 vertices")
    edges = [(x[i], x[i + 1]) for i in range(n - 1)]
    if graph is GraphKind.CYCLE:
        edges.append((x[-1], x[0]))
    return ShapeKey.from_edges(n, edges)


def transform_shape(key: ShapeKey, k: int, s: bool, n: int | None = None) -> ShapeKey:
    """Relabel every endpoint by ``a -> (-a if s else a) + k (mod n)``.

    This is the geometric element ``r^k s^s``; note the group's own normal
    form ``s r^k`` corresponds to ``transform_shape(key, -k, True)``.
    """
    n = key.n if n is None else n
    if n != key.n:
        raise SizeMismatch(f"shape has {key.n} vertices, asked for n={n}")

    def f(a: int) -> int:
        return ((-a if s else a) + k) % n

    return ShapeKey.from_edges(n, ((f(a), f(b)) for a, b in key.edges))


def _shapes_related(a: ShapeKey, b: ShapeKey, reflections: bool) -> bool:
    if a.n != b.n:
        raise SizeMismatch(f"shapes on {a.n} and {b.n} vertices")
    if len(a.edges) != len(b.edges):
        return False
    flips = (False, True) if reflections else (False,)
    return any(transform_shape(a, k, s) == b for s in flips for k in range(a.n))


def similar_shapes(a: ShapeKey, b: ShapeKey) -> bool:
    """True iff a rotation or reflection carries ``a`` onto ``b``."""
    return _shapes_related(a, b, reflections=True)


def equivalent_shapes(a: ShapeKey, b: ShapeKey) -> bool:
    """True iff a rotation alone carries ``a`` onto ``b``."""
    return _shapes_related(a, b, reflections=False)
