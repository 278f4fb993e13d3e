"""JSON codecs for the stable file formats.

Quivers: {"type": "bipartiteA", "n": n} or {"type": "A", "orientation": "RRLL"}.
Dimension vectors are ordered arrays (path order for bipartite quivers,
z_0..z_n for oriented ones).  Intervals are {"vertex": "y0"} or
{"left": "a1", "right": "b3"}.  Representations carry their quiver, dims,
and an arrow table keyed "a1"/"b1"... (bipartite) or "g1"... (oriented);
missing keys mean zero matrices.
"""

from __future__ import annotations

from .errors import InputError
from .matrices import ExactMatrix
from .perms import Permutation
from .quiver import (
    BipartiteQuiver,
    DimensionVector,
    Interval,
    TypeAQuiver,
    edge_name,
    edge_pos,
    interval_table,
    vertex_name,
    vertex_pos,
)
from .reps import LaceArray, RankArray, Representation
from .reduction import ReductionContext, TypeARepresentation


def quiver_to_json(q) -> dict:
    if isinstance(q, BipartiteQuiver):
        return {"type": "bipartiteA", "n": q.n}
    if isinstance(q, TypeAQuiver):
        return {"type": "A", "orientation": q.orientation}
    raise InputError(f"unsupported quiver {q!r}")


def quiver_from_json(obj) -> BipartiteQuiver | TypeAQuiver:
    try:
        kind = obj["type"]
    except (KeyError, TypeError) as exc:
        raise InputError("quiver object needs a 'type' key") from exc
    if kind == "bipartiteA":
        try:
            return BipartiteQuiver(int(obj["n"]))
        except (KeyError, ValueError) as exc:
            raise InputError("bipartiteA quiver needs an integer 'n'") from exc
    if kind == "A":
        try:
            return TypeAQuiver(str(obj["orientation"]))
        except KeyError as exc:
            raise InputError("type A quiver needs an 'orientation' word") from exc
    raise InputError(f"unknown quiver type {kind!r}")


def dims_to_json(d: DimensionVector) -> list:
    return list(d.values)


def dims_from_json(obj) -> DimensionVector:
    try:
        return DimensionVector(tuple(int(v) for v in obj))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad dimension vector: {exc}") from exc


def interval_to_json(j: Interval) -> dict:
    if j.is_vertex:
        return {"vertex": vertex_name(j.lo)}
    return {"left": edge_name(j.left_edge), "right": edge_name(j.right_edge)}


def interval_from_json(obj) -> Interval:
    if not isinstance(obj, dict):
        raise InputError(f"bad interval object {obj!r}")
    if "vertex" in obj:
        return Interval.vertex(vertex_pos(obj["vertex"]))
    try:
        left = edge_pos(obj["left"])
        right = edge_pos(obj["right"])
    except KeyError as exc:
        raise InputError("interval object needs 'vertex' or 'left'/'right'") from exc
    if left > right:
        raise InputError("interval endpoints out of order")
    return Interval.from_edges(left, right)


def rep_to_json(v: Representation | TypeARepresentation) -> dict:
    arrows = {}
    if isinstance(v, Representation):
        for e in v.quiver.edges():
            m = v.matrix(e)
            if not m.is_zero():
                arrows[edge_name(e)] = m.to_json()
    else:
        for i, m in enumerate(v.arrows, start=1):
            if not m.is_zero():
                arrows[f"g{i}"] = m.to_json()
    return {
        "quiver": quiver_to_json(v.quiver),
        "dims": dims_to_json(v.dims),
        "arrows": arrows,
    }


def rep_from_json(obj, field=None) -> Representation | TypeARepresentation:
    try:
        q = quiver_from_json(obj["quiver"])
        dims = dims_from_json(obj["dims"])
        arrows = obj.get("arrows", {})
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad representation object: {exc}") from exc
    mats = {}
    for key, mobj in arrows.items():
        mats[key] = ExactMatrix.from_json(mobj)
    if field is None:
        for m in mats.values():
            field = m.field
            break
    if field is None:
        from .fields import QQ

        field = QQ
    for m in mats.values():
        if m.field != field:
            raise InputError("arrow matrices declare different fields")
    if isinstance(q, BipartiteQuiver):
        if len(dims) != q.vertex_count:
            raise InputError("dimension vector does not match the quiver")
        out = []
        for e in q.edges():
            key = edge_name(e)
            shape = (dims[q.head_pos(e)], dims[q.tail_pos(e)])
            if key in mats:
                out.append(mats[key])
            else:
                out.append(ExactMatrix.zeros(field, *shape))
        return Representation(q, dims, tuple(out))
    if len(dims) != q.vertex_count:
        raise InputError("dimension vector does not match the quiver")
    out = []
    for i in range(1, q.arrow_count + 1):
        key = f"g{i}"
        shape = (dims[q.head_vertex(i)], dims[q.tail_vertex(i)])
        if key in mats:
            out.append(mats[key])
        else:
            out.append(ExactMatrix.zeros(field, *shape))
    return TypeARepresentation(q, dims, tuple(out))


def rank_array_to_json(r: RankArray) -> list:
    table = interval_table(r.n)
    return [
        {"interval": interval_to_json(j), "rank": r.values[i]}
        for i, j in enumerate(table.intervals)
    ]


def rank_array_from_json(obj, n: int) -> RankArray:
    table = interval_table(n)
    vals = [None] * len(table)
    try:
        for item in obj:
            j = interval_from_json(item["interval"])
            idx = table.index.get(j)
            if idx is None:
                raise InputError(f"{j} is not an interval of the quiver")
            vals[idx] = int(item["rank"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad rank array object: {exc}") from exc
    if any(v is None for v in vals):
        raise InputError("rank array does not cover every interval")
    return RankArray(n, tuple(vals))


def lace_array_to_json(s: LaceArray) -> list:
    table = interval_table(s.n)
    return [
        {"interval": interval_to_json(j), "multiplicity": s.values[i]}
        for i, j in enumerate(table.intervals)
        if s.values[i]
    ]


def permutation_to_json(p: Permutation) -> list:
    return list(p.word)


def boxes_to_json(boxes) -> list:
    return [list(b) for b in sorted(boxes)]


def minor_specs_to_json(specs) -> list:
    return [s.to_json() for s in specs]


def reduction_context_to_json(ctx: ReductionContext) -> dict:
    return {
        "source": quiver_to_json(ctx.source),
        "target": quiver_to_json(ctx.target),
        "vertices": {
            f"z{i}": vertex_name(pos) for i, pos in enumerate(ctx.vertex_map)
        },
        "inserted": [
            {
                "junction": f"z{i}",
                "vertex": vertex_name(ctx.doubled_vertex[i]),
                "delta": edge_name(ctx.delta_edges[i]),
                "kind": ctx.junction_kind[i],
            }
            for i in sorted(ctx.delta_edges)
        ],
        "arrows": {
            f"g{i + 1}": edge_name(e) for i, e in enumerate(ctx.arrow_map)
        },
        "padding": {"left": ctx.pad_left, "right": ctx.pad_right},
    }


def poset_to_json(poset) -> dict:
    nodes = []
    for node in poset.nodes:
        nodes.append(
            {
                "rank_array": rank_array_to_json(node.rank),
                "lace_array": lace_array_to_json(node.lace),
                "permutation": permutation_to_json(node.permutation),
                "length": node.length,
                "dimension": node.dimension,
            }
        )
    return {
        "quiver": quiver_to_json(poset.quiver),
        "dims": dims_to_json(poset.dims),
        "nodes": nodes,
        "covers": [list(c) for c in poset.covers],
    }
