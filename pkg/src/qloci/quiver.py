"""Type A quivers, dimension vectors, and the interval calculus.

The bipartite quiver with parameter n has 2n+1 vertices along a path,
labeled y_0, x_1, y_1, ..., x_n, y_n; every x is a source and every y a
sink.  We index vertices by their path position 0..2n (y_i at 2i, x_i at
2i-1) and arrows by edge positions 1..2n (odd e is the arrow x->y pointing
left of x, even e points right).  An interval is a contiguous span of
vertex positions; spans may reach one step past each end of the quiver,
where the phantom edges 0 and 2n+1 belong to a zero-padded extension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError


@dataclass(frozen=True)
class TypeAQuiver:
    """A path quiver with one orientation character per arrow.

    ``orientation[i-1] == "R"`` means arrow i points from z_{i-1} to z_i;
    ``"L"`` means it points from z_i to z_{i-1}.
    """

    orientation: str

    def __post_init__(self):
        if not re.fullmatch(r"[LR]*", self.orientation):
            raise InputError(f"orientation word must match [LR]*, got {self.orientation!r}")

    @property
    def arrow_count(self) -> int:
        return len(self.orientation)

    @property
    def vertex_count(self) -> int:
        return len(self.orientation) + 1

    def head_vertex(self, i: int) -> int:
        """Index of the vertex arrow gamma_i points into (i is 1-based)."""
        return i if self.orientation[i - 1] == "R" else i - 1

    def tail_vertex(self, i: int) -> int:
        return i - 1 if self.orientation[i - 1] == "R" else i

    def is_bipartite(self) -> bool:
        o = self.orientation
        return all(o[i] != o[i + 1] for i in range(len(o) - 1))


@dataclass(frozen=True)
class BipartiteQuiver:
    """The alternating-orientation type A quiver with 2n+1 vertices."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise InputError("n must be nonnegative")

    @property
    def vertex_count(self) -> int:
        return 2 * self.n + 1

    @property
    def edge_count(self) -> int:
        return 2 * self.n

    def positions(self):
        return range(2 * self.n + 1)

    def edges(self):
        return range(1, 2 * self.n + 1)

    @staticmethod
    def head_pos(e: int) -> int:
        """Position of the head (the y vertex) of edge e."""
        return e - 1 if e % 2 else e

    @staticmethod
    def tail_pos(e: int) -> int:
        """Position of the tail (the x vertex) of edge e."""
        return e if e % 2 else e - 1

    def intervals(self) -> "IntervalTable":
        return interval_table(self.n)


def vertex_name(pos: int) -> str:
    if pos % 2 == 0:
        return f"y{pos // 2}"
    return f"x{(pos + 1) // 2}"


def vertex_pos(name: str) -> int:
    m = re.fullmatch(r"([xy])(\d+)", name)
    if not m:
        raise InputError(f"bad vertex name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    if kind == "y":
        return 2 * k
    if k < 1:
        raise InputError(f"bad vertex name {name!r}")
    return 2 * k - 1


def edge_name(e: int) -> str:
    """Arrow label for edge position e: odd e -> a_(e+1)/2, even e -> b_e/2."""
    if e % 2:
        return f"a{(e + 1) // 2}"
    return f"b{e // 2}"


def edge_pos(name: str) -> int:
    m = re.fullmatch(r"([ab])(\d+)", name)
    if not m:
        raise InputError(f"bad arrow name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    return 2 * k - 1 if kind == "a" else 2 * k


@dataclass(frozen=True, order=True)
class Interval:
    """A contiguous vertex span [lo, hi] of the (possibly extended) path."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError(f"empty span ({self.lo}, {self.hi})")

    @staticmethod
    def vertex(pos: int) -> "Interval":
        return Interval(pos, pos)

    @staticmethod
    def from_edges(first: int, last: int) -> "Interval":
        """Interval spanning edges first..last inclusive."""
        if first > last:
            raise InputError("interval needs at least one edge")
        return Interval(first - 1, last)

    @property
    def is_vertex(self) -> bool:
        return self.lo == self.hi

    @property
    def arrow_count(self) -> int:
        return self.hi - self.lo

    def edges(self):
        return range(self.lo + 1, self.hi + 1)

    @property
    def left_edge(self) -> int:
        return self.lo + 1

    @property
    def right_edge(self) -> int:
        return self.hi

    def shift_left(self) -> "Interval":
        if self.is_vertex:
            raise InputError("cannot shift a single-vertex interval")
        return Interval(self.lo - 1, self.hi - 1)

    def shift_right(self) -> "Interval":
        if self.is_vertex:
            raise InputError("cannot shift a single-vertex interval")
        return Interval(self.lo + 1, self.hi + 1)

    def truncate(self, n: int) -> "Interval | None":
        """Clip to the real quiver; None when nothing remains."""
        lo = max(self.lo, 0)
        hi = min(self.hi, 2 * n)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def name(self) -> str:
        if self.is_vertex:
            return vertex_name(self.lo)
        if self.arrow_count == 1:
            return f"[{edge_name(self.left_edge)}]"
        return f"[{edge_name(self.left_edge)},{edge_name(self.right_edge)}]"

    def __str__(self):
        return self.name()


def interval_meet(a: Interval, b: Interval) -> Interval | None:
    """Common subpath of two intervals, or None when they are disjoint."""
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return None
    return Interval(lo, hi)


def interval_join(a: Interval, b: Interval) -> Interval:
    """Smallest interval containing both (their convex hull)."""
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def shared_arrows(a: Interval, b: Interval) -> int:
    return max(0, min(a.hi, b.hi) - max(a.lo, b.lo))


def enumerate_intervals(q: BipartiteQuiver):
    """All intervals: vertex intervals by position, then arrow intervals
    ordered by left endpoint and length."""
    return interval_table(q.n).intervals


class IntervalTable:
    """Precomputed interval data for the bipartite quiver with parameter n.

    Holds the canonical interval ordering, the shift/meet/join bookkeeping
    behind the multiplicity formula, interval-pair weights for the rank
    formula, and per-vertex coverage lists.
    """

    def __init__(self, n: int):
        self.n = n
        top = 2 * n
        verts = [Interval(p, p) for p in range(top + 1)]
        arrows = [
            Interval(lo, hi)
            for lo in range(top)
            for hi in range(lo + 1, top + 1)
        ]
        arrows.sort(key=lambda j: (j.lo, j.hi))
        self.intervals = tuple(verts + arrows)
        self.index = {j: i for i, j in enumerate(self.intervals)}
        self.vertex_count = top + 1
        self.arrow_intervals = tuple(arrows)

        # shift calculus per arrow interval: sign and the rank-lookup slots
        # for J_L, J_R, their meet, and their join (slot -1 contributes 0)
        shift_rows = []
        for j in arrows:
            jl = j.shift_left()
            jr = j.shift_right()
            sign = 1 if j.arrow_count % 2 == 0 else -1
            meet = interval_meet(jl, jr)
            join = interval_join(jl, jr)
            shift_rows.append(
                (
                    sign,
                    self._rank_slot(jl),
                    self._rank_slot(jr),
                    self._rank_slot(meet),
                    self._rank_slot(join),
                )
            )
        self.shift_rows = tuple(shift_rows)

        self.coverage = tuple(
            tuple(
                self.index[j]
                for j in self.intervals
                if not j.is_vertex and j.lo <= p <= j.hi
            )
            for p in range(top + 1)
        )

        # weights[i][j] = ceil(shared arrows of (intervals[i], intervals[j]) / 2)
        ivs = self.intervals
        self.weights = tuple(
            tuple((shared_arrows(a, b) + 1) // 2 for b in ivs) for a in ivs
        )

    def _rank_slot(self, j: Interval | None) -> int:
        if j is None:
            return -1
        t = j.truncate(self.n)
        if t is None or t.is_vertex:
            return -1
        return self.index[t]

    def rank_slot_of_span(self, lo: int, hi: int) -> int:
        """Lookup slot for the span's truncation; -1 when the rank is forced 0."""
        if lo > hi:
            return -1
        return self._rank_slot(Interval(lo, hi))

    def __len__(self):
        return len(self.intervals)


@lru_cache(maxsize=None)
def interval_table(n: int) -> IntervalTable:
    return IntervalTable(n)


@dataclass(frozen=True)
class DimensionVector:
    """Nonnegative dimensions, one per vertex, in path order."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise InputError("dimensions must be nonnegative")

    @staticmethod
    def of(*values: int) -> "DimensionVector":
        return DimensionVector(tuple(int(v) for v in values))

    def __getitem__(self, pos: int) -> int:
        return self.values[pos]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def d_x(dims: DimensionVector) -> int:
    """Total dimension over the source vertices x_1..x_n."""
    return sum(dims.values[1::2])


def d_y(dims: DimensionVector) -> int:
    """Total dimension over the sink vertices y_0..y_n."""
    return sum(dims.values[0::2])


def check_dims(q: BipartiteQuiver, dims: DimensionVector):
    if len(dims) != q.vertex_count:
        raise InputError(
            f"dimension vector has {len(dims)} entries, quiver has {q.vertex_count} vertices"
        )
