"""Points of the representation space of a bipartite type A quiver.

A representation assigns one exact matrix to each arrow.  The ranks of the
staircase interval matrices form a complete orbit invariant; this module
computes them and translates back and forth between rank arrays and
Krull-Schmidt multiplicity (lace) arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatchError,
    InputError,
    NotARankArrayError,
    ShapeError,
)
from .fields import Field, QQ
from .matrices import ExactMatrix
from .quiver import (
    BipartiteQuiver,
    DimensionVector,
    Interval,
    check_dims,
    interval_table,
    vertex_name,
)


@dataclass(frozen=True)
class Representation:
    """One matrix per arrow, shapes dictated by the dimension vector."""

    quiver: BipartiteQuiver
    dims: DimensionVector
    arrows: tuple[ExactMatrix, ...]  # indexed by edge position - 1

    def __post_init__(self):
        q = self.quiver
        check_dims(q, self.dims)
        if len(self.arrows) != q.edge_count:
            raise ShapeError(f"expected {q.edge_count} arrow matrices, got {len(self.arrows)}")
        field = None
        for e in q.edges():
            m = self.arrows[e - 1]
            want = (self.dims[q.head_pos(e)], self.dims[q.tail_pos(e)])
            if (m.rows, m.cols) != want:
                raise ShapeError(
                    f"arrow {e} matrix is {m.rows}x{m.cols}, dims require {want[0]}x{want[1]}"
                )
            if field is None:
                field = m.field
            elif m.field != field:
                raise FieldMismatchError("arrow matrices over mismatched fields")

    @property
    def field(self) -> Field:
        if self.arrows:
            return self.arrows[0].field
        return QQ

    def matrix(self, e: int) -> ExactMatrix:
        return self.arrows[e - 1]

    def key(self):
        return tuple(m.key() for m in self.arrows)


def zero_rep(q: BipartiteQuiver, dims: DimensionVector, field: Field = QQ) -> Representation:
    check_dims(q, dims)
    mats = tuple(
        ExactMatrix.zeros(field, dims[q.head_pos(e)], dims[q.tail_pos(e)]) for e in q.edges()
    )
    return Representation(q, dims, mats)


def indecomposable_rep(q: BipartiteQuiver, j: Interval, field: Field = QQ) -> Representation:
    """The indecomposable supported on interval j: K at each vertex of j,
    identity over each arrow of j."""
    if j.lo < 0 or j.hi > 2 * q.n:
        raise InputError(f"{j} is not an interval of the quiver")
    dims = DimensionVector(tuple(1 if j.lo <= p <= j.hi else 0 for p in q.positions()))
    one = ExactMatrix.identity(field, 1)
    mats = []
    for e in q.edges():
        if j.lo < e <= j.hi:
            mats.append(one)
        else:
            mats.append(ExactMatrix.zeros(field, dims[q.head_pos(e)], dims[q.tail_pos(e)]))
    return Representation(q, dims, tuple(mats))


def direct_sum(u: Representation, v: Representation) -> Representation:
    """Block-diagonal sum; dimension vectors add."""
    if u.quiver != v.quiver:
        raise InputError("direct sum over different quivers")
    if u.field != v.field and u.arrows and v.arrows:
        raise FieldMismatchError("direct sum over mismatched fields")
    q = u.quiver
    dims = DimensionVector(tuple(a + b for a, b in zip(u.dims, v.dims)))
    field = u.field
    mats = []
    for e in q.edges():
        a, b = u.matrix(e), v.matrix(e)
        m = ExactMatrix.zeros(field, a.rows + b.rows, a.cols + b.cols)
        for i in range(a.rows):
            m.data[i][: a.cols] = a.data[i]
        for i in range(b.rows):
            m.data[a.rows + i][a.cols :] = b.data[i]
        mats.append(m)
    return Representation(q, dims, tuple(mats))


def act(g, v: Representation) -> Representation:
    """Base change action: the matrix over each arrow becomes g_head * M * g_tail^-1.

    ``g`` is a sequence of invertible matrices, one per vertex position.
    """
    q = v.quiver
    if len(g) != q.vertex_count:
        raise InputError("need one group element per vertex")
    for pos, gz in enumerate(g):
        if gz.rows != gz.cols or gz.rows != v.dims[pos]:
            raise ShapeError(f"group element at {vertex_name(pos)} has wrong size")
    tail_inv = {}
    mats = []
    for e in q.edges():
        h, t = q.head_pos(e), q.tail_pos(e)
        if t not in tail_inv:
            tail_inv[t] = g[t].inverse()
        mats.append(g[h].multiply(v.matrix(e)).multiply(tail_inv[t]))
    return Representation(q, v.dims, tuple(mats))


# -- interval matrices and rank arrays --------------------------------------


def assemble_interval_matrix(v: Representation, j: Interval) -> ExactMatrix:
    """The staircase matrix of the interval: block rows are the sink vertices
    of the span (top to bottom), block columns the source vertices (right to
    left), with each arrow's matrix in its (head, tail) slot.

    Phantom arrows of the zero-padded extension are allowed; their blocks
    have a zero dimension, so they never contribute.  A single-vertex
    interval yields a d(v) x 0 matrix.
    """
    q = v.quiver
    n = q.n
    field = v.field
    t = j.truncate(n)
    if t is None:
        return ExactMatrix.zeros(field, 0, 0)
    if t.is_vertex:
        return ExactMatrix.zeros(field, v.dims[t.lo], 0)
    row_pos = [p for p in range(t.lo, t.hi + 1) if p % 2 == 0]
    col_pos = [p for p in range(t.lo, t.hi + 1) if p % 2 == 1]
    col_pos.reverse()  # matches the snake layout: sources ordered x_n .. x_1
    row_off = {}
    off = 0
    for p in row_pos:
        row_off[p] = off
        off += v.dims[p]
    col_off = {}
    coff = 0
    for p in col_pos:
        col_off[p] = coff
        coff += v.dims[p]
    z = field.zero()
    data = [[z] * coff for _ in range(off)]
    for e in t.edges():
        h, tl = q.head_pos(e), q.tail_pos(e)
        m = v.matrix(e)
        ro, co = row_off[h], col_off[tl]
        for i in range(m.rows):
            drow = data[ro + i]
            srow = m.data[i]
            for k in range(m.cols):
                drow[co + k] = srow[k]
    return ExactMatrix(field, off, coff, data)


def rank_function(v: Representation, j: Interval) -> int:
    return assemble_interval_matrix(v, j).rank()


@dataclass(frozen=True)
class RankArray:
    """One rank per interval, stored in the canonical interval order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(interval_table(self.n)):
            raise InputError("rank array length does not match interval count")

    def __getitem__(self, j: Interval) -> int:
        return self.values[interval_table(self.n).index[j]]

    def leq(self, other: "RankArray") -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))

    def as_dict(self):
        table = interval_table(self.n)
        return dict(zip(table.intervals, self.values))


@dataclass(frozen=True)
class LaceArray:
    """Indecomposable multiplicities, one per interval, canonical order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(interval_table(self.n)):
            raise InputError("lace array length does not match interval count")

    def __getitem__(self, j: Interval) -> int:
        return self.values[interval_table(self.n).index[j]]

    def dims(self) -> DimensionVector:
        """The dimension vector of any representation with these multiplicities."""
        table = interval_table(self.n)
        out = []
        for p in range(table.vertex_count):
            total = self.values[p]  # the vertex interval at slot p
            for i in table.coverage[p]:
                total += self.values[i]
            out.append(total)
        return DimensionVector(tuple(out))

    def as_dict(self):
        table = interval_table(self.n)
        return dict(zip(table.intervals, self.values))


def rank_array(v: Representation) -> RankArray:
    """Ranks of every interval matrix; constant on base-change orbits."""
    table = v.quiver.intervals()
    vals = [0] * table.vertex_count
    vals.extend(rank_function(v, j) for j in table.arrow_intervals)
    return RankArray(v.quiver.n, tuple(vals))


def lace_to_rank(s: LaceArray) -> RankArray:
    """Rank array of a direct sum with the given multiplicities: each summand
    supported on J' contributes ceil(shared arrows(J, J') / 2) to the rank at J."""
    table = interval_table(s.n)
    out = [0] * len(table)
    for jj, mult in enumerate(s.values):
        if mult:
            wrow = table.weights[jj]
            for i in range(len(out)):
                out[i] += mult * wrow[i]
    return RankArray(s.n, tuple(out))


def _arrow_multiplicities(table, values):
    out = []
    for (sign, il, ir, im, ij) in table.shift_rows:
        acc = 0
        if il >= 0:
            acc += values[il]
        if ir >= 0:
            acc += values[ir]
        if im >= 0:
            acc -= values[im]
        if ij >= 0:
            acc -= values[ij]
        out.append(sign * acc)
    return out


def rank_to_lace(r: RankArray, d: DimensionVector) -> LaceArray:
    """Recover Krull-Schmidt multiplicities from a rank array.

    Multiplicities over arrow intervals come from the signed shift formula
    evaluated with the zero-padded boundary convention; vertex multiplicities
    are then fixed by the dimension vector.  A negative multiplicity means
    the input was not a valid rank array and raises.
    """
    table = interval_table(r.n)
    if len(d) != table.vertex_count:
        raise InputError("dimension vector does not match the quiver")
    arrow = _arrow_multiplicities(table, r.values)
    vals = [0] * len(table)
    for k, j in enumerate(table.arrow_intervals):
        m = arrow[k]
        if m < 0:
            raise NotARankArrayError(f"multiplicity of {j} would be {m}")
        vals[table.vertex_count + k] = m
    for p in range(table.vertex_count):
        covered = sum(vals[i] for i in table.coverage[p])
        m = d[p] - covered
        if m < 0:
            raise NotARankArrayError(
                f"vertex multiplicity at {vertex_name(p)} would be {m}"
            )
        vals[p] = m
    return LaceArray(r.n, tuple(vals))


def validate_rank_array(f: RankArray, d: DimensionVector) -> bool:
    """True iff some representation with dimension vector d has rank array f."""
    try:
        s = rank_to_lace(f, d)
    except NotARankArrayError:
        return False
    return lace_to_rank(s) == f


def rep_from_lace(q: BipartiteQuiver, s: LaceArray, field: Field = QQ) -> Representation:
    """A concrete direct sum of indecomposables with the given multiplicities."""
    if s.n != q.n:
        raise InputError("lace array does not match the quiver")
    table = interval_table(q.n)
    total = zero_rep(q, DimensionVector(tuple(0 for _ in q.positions())), field)
    for idx, j in enumerate(table.intervals):
        for _ in range(s.values[idx]):
            total = direct_sum(total, indecomposable_rep(q, j, field))
    return total
