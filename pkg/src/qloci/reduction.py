"""Reduction of an arbitrarily oriented type A quiver to a bipartite one.

Every run of two equally oriented arrows through an intermediate vertex z_i
gets a doubling vertex w_i wedged between z_{i-1} and z_i, together with a
new arrow delta_i joined to z_i: a sink pair when both arrows point away
from z_0, a source pair when both point toward it.  The doubled path is
alternating; padding a zero-dimensional sink onto either end when needed
puts it in the standard bipartite labeling.  Representations lift by
placing identities over the new arrows, and project back by composing them
out; the lift lands in the open locus where every delta map is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatchError,
    InputError,
    NotInOpenLocusError,
    ShapeError,
    SingularMatrixError,
)
from .fields import Field, QQ
from .matrices import ExactMatrix
from .quiver import BipartiteQuiver, DimensionVector, TypeAQuiver
from .reps import RankArray, Representation, rank_array


@dataclass(frozen=True)
class TypeARepresentation:
    """One matrix per arrow of an arbitrarily oriented path quiver."""

    quiver: TypeAQuiver
    dims: DimensionVector
    arrows: tuple[ExactMatrix, ...]  # arrows[i-1] sits over gamma_i

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != q.vertex_count:
            raise ShapeError("dimension vector does not match the quiver")
        if len(self.arrows) != q.arrow_count:
            raise ShapeError("wrong number of arrow matrices")
        field = None
        for i in range(1, q.arrow_count + 1):
            m = self.arrows[i - 1]
            want = (self.dims[q.head_vertex(i)], self.dims[q.tail_vertex(i)])
            if (m.rows, m.cols) != want:
                raise ShapeError(
                    f"arrow {i} matrix is {m.rows}x{m.cols}, dims require {want[0]}x{want[1]}"
                )
            if field is None:
                field = m.field
            elif m.field != field:
                raise FieldMismatchError("arrow matrices over mismatched fields")

    @property
    def field(self) -> Field:
        return self.arrows[0].field if self.arrows else QQ

    def key(self):
        return tuple(m.key() for m in self.arrows)


def zero_typea_rep(q: TypeAQuiver, dims: DimensionVector, field: Field = QQ) -> TypeARepresentation:
    mats = tuple(
        ExactMatrix.zeros(field, dims[q.head_vertex(i)], dims[q.tail_vertex(i)])
        for i in range(1, q.arrow_count + 1)
    )
    return TypeARepresentation(q, dims, mats)


def act_typea(g, v: TypeARepresentation) -> TypeARepresentation:
    """Base change action on a representation of the oriented path."""
    q = v.quiver
    if len(g) != q.vertex_count:
        raise InputError("need one group element per vertex")
    mats = []
    for i in range(1, q.arrow_count + 1):
        h, t = q.head_vertex(i), q.tail_vertex(i)
        mats.append(g[h].multiply(v.arrows[i - 1]).multiply(g[t].inverse()))
    return TypeARepresentation(q, v.dims, tuple(mats))


@dataclass(frozen=True)
class ReductionContext:
    """Correspondence between an oriented path quiver and its bipartite double.

    ``vertex_map[i]`` is the position of z_i in the double; ``arrow_map[i-1]``
    the edge carrying gamma_i; ``delta_edges[i]``, when present, the edge of
    the inserted arrow tied to the doubling vertex of z_i.  Padded positions
    carry dimension zero.
    """

    source: TypeAQuiver
    target: BipartiteQuiver
    vertex_map: tuple[int, ...]
    arrow_map: tuple[int, ...]
    doubled_vertex: dict  # junction index i -> position of w_i
    delta_edges: dict  # junction index i -> edge position of delta_i
    junction_kind: dict  # junction index i -> "sink" | "source"
    pad_left: bool
    pad_right: bool

    @property
    def inserted_count(self) -> int:
        return len(self.delta_edges)


def bipartite_double(q: TypeAQuiver) -> ReductionContext:
    """Build the bipartite double and the bookkeeping to move across it."""
    word = q.orientation
    n = q.arrow_count
    # walk the path, inserting a doubling vertex before each equioriented junction
    labels = [("z", 0)]
    segments = []  # (direction, kind, payload) per edge of the doubled path
    for i in range(1, n + 1):
        junction = i < n and word[i - 1] == word[i]
        if junction:
            labels.append(("w", i))
            segments.append((word[i - 1], "gamma", i))
            delta_dir = "L" if word[i - 1] == "R" else "R"
            segments.append((delta_dir, "delta", i))
            labels.append(("z", i))
        else:
            segments.append((word[i - 1], "gamma", i))
            labels.append(("z", i))
    # normalize: the alternating word must read LRLR...; pad zero sinks as needed
    pad_left = bool(segments) and segments[0][0] == "R"
    pad_right = bool(segments) and segments[-1][0] == "L"
    if not segments:
        pad_left = pad_right = False
    if pad_left:
        labels.insert(0, ("pad", -1))
        segments.insert(0, ("L", "pad", -1))
    if pad_right:
        labels.append(("pad", -2))
        segments.append(("R", "pad", -2))
    count = len(labels)
    if count % 2 == 0:
        raise InputError("doubled path failed to normalize")  # unreachable
    target = BipartiteQuiver((count - 1) // 2)
    for pos, (dirn, _, _) in enumerate(segments):
        want = "L" if pos % 2 == 0 else "R"
        if dirn != want:
            raise InputError("doubled path is not alternating")  # unreachable
    vertex_map = [0] * q.vertex_count
    doubled_vertex = {}
    for pos, (kind, i) in enumerate(labels):
        if kind == "z":
            vertex_map[i] = pos
        elif kind == "w":
            doubled_vertex[i] = pos
    arrow_map = [0] * n
    delta_edges = {}
    junction_kind = {}
    for pos, (dirn, kind, i) in enumerate(segments, start=1):
        if kind == "gamma":
            arrow_map[i - 1] = pos
        elif kind == "delta":
            delta_edges[i] = pos
            junction_kind[i] = "sink" if dirn == "L" else "source"
    return ReductionContext(
        source=q,
        target=target,
        vertex_map=tuple(vertex_map),
        arrow_map=tuple(arrow_map),
        doubled_vertex=doubled_vertex,
        delta_edges=delta_edges,
        junction_kind=junction_kind,
        pad_left=pad_left,
        pad_right=pad_right,
    )


def lift_dimension(ctx: ReductionContext, dims: DimensionVector) -> DimensionVector:
    """Copy each junction's dimension onto its doubling vertex; pads get zero."""
    if len(dims) != ctx.source.vertex_count:
        raise InputError("dimension vector does not match the source quiver")
    out = [0] * ctx.target.vertex_count
    for i, pos in enumerate(ctx.vertex_map):
        out[pos] = dims[i]
    for i, pos in ctx.doubled_vertex.items():
        out[pos] = dims[i]
    return DimensionVector(tuple(out))


def lift_rep(ctx: ReductionContext, v: TypeARepresentation) -> Representation:
    """Place each original matrix over its image edge and identities over the
    inserted arrows; the result lies in the open locus by construction."""
    if v.quiver != ctx.source:
        raise InputError("representation does not match the reduction context")
    q = ctx.target
    dims = lift_dimension(ctx, v.dims)
    field = v.field
    mats = [None] * q.edge_count
    for i in range(1, ctx.source.arrow_count + 1):
        mats[ctx.arrow_map[i - 1] - 1] = v.arrows[i - 1]
    for i, e in ctx.delta_edges.items():
        mats[e - 1] = ExactMatrix.identity(field, v.dims[i])
    for e in q.edges():
        if mats[e - 1] is None:
            mats[e - 1] = ExactMatrix.zeros(field, dims[q.head_pos(e)], dims[q.tail_pos(e)])
    return Representation(q, dims, tuple(mats))


def in_open_locus(ctx: ReductionContext, vt: Representation) -> bool:
    for i, e in ctx.delta_edges.items():
        m = vt.matrix(e)
        if m.rows != m.cols or m.rank() != m.rows:
            return False
    return True


def project(ctx: ReductionContext, vt: Representation) -> TypeARepresentation:
    """Compose out the inserted arrows: over a sink junction the original
    arrow becomes delta^-1 * gamma, over a source junction gamma * delta^-1."""
    if vt.quiver != ctx.target:
        raise InputError("representation does not match the reduction context")
    field = vt.field
    delta_inv = {}
    for i, e in ctx.delta_edges.items():
        m = vt.matrix(e)
        if m.rows != m.cols:
            raise NotInOpenLocusError(f"delta map at junction {i} is not square")
        try:
            delta_inv[i] = m.inverse()
        except SingularMatrixError as exc:
            raise NotInOpenLocusError(f"delta map at junction {i} is singular") from exc
    src = ctx.source
    dims = DimensionVector(tuple(vt.dims[pos] for pos in ctx.vertex_map))
    mats = []
    for i in range(1, src.arrow_count + 1):
        g = vt.matrix(ctx.arrow_map[i - 1])
        kind = ctx.junction_kind.get(i)
        if kind == "sink":
            mats.append(delta_inv[i].multiply(g))
        elif kind == "source":
            mats.append(g.multiply(delta_inv[i]))
        else:
            mats.append(g)
    out = TypeARepresentation(src, dims, tuple(mats))
    if out.field != field and out.arrows:
        raise FieldMismatchError("projection changed fields")  # unreachable
    return out


def lift_group(ctx: ReductionContext, g, delta_part=None):
    """Extend a base-change tuple over the source to the doubled quiver.

    ``delta_part`` optionally supplies elements at the doubling vertices
    (default: copy the element of the doubled junction, which fixes the lift
    of a representation setwise)."""
    out = [None] * ctx.target.vertex_count
    field = None
    for i, pos in enumerate(ctx.vertex_map):
        out[pos] = g[i]
        if g[i].rows:
            field = g[i].field
    for i, pos in ctx.doubled_vertex.items():
        if delta_part and i in delta_part:
            out[pos] = delta_part[i]
        else:
            out[pos] = g[i]
    if field is None:
        field = QQ
    for pos, m in enumerate(out):
        if m is None:
            out[pos] = ExactMatrix.identity(field, 0)
    return tuple(out)


def project_group(ctx: ReductionContext, gt):
    """Restrict a base-change tuple over the double to the original vertices."""
    return tuple(gt[pos] for pos in ctx.vertex_map)


def rank_array_arbitrary(ctx: ReductionContext, v: TypeARepresentation) -> RankArray:
    """Rank array of the lift: a complete orbit invariant for the source."""
    return rank_array(lift_rep(ctx, v))
