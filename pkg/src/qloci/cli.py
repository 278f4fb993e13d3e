"""Command-line surface: qloci <decompose|zelevinsky|poset|reduce|oracle>.

Exit codes are a stable contract: 0 success, 2 input error, 3 guard
exceeded, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    GuardExceededError,
    InputError,
    InternalCheckError,
    QlociError,
)
from .oracle import (
    DEFAULT_POINT_GUARD,
    enumerate_reps,
    brute_orbit_partition,
    space_dimension,
    verify_rank_determines_orbit,
)
from .perms import essential_set, inversion_length, zelevinsky_permutation
from .poset import (
    DEFAULT_LACE_GUARD,
    build_poset,
    dense_orbit,
    order_equivalence_report,
    poset_to_dot,
)
from .quiver import BipartiteQuiver, DimensionVector, TypeAQuiver, d_x, d_y, interval_table
from .reps import Representation, rank_array, rank_to_lace
from .reduction import bipartite_double, lift_rep, rank_array_arbitrary
from .zelevinsky import block_rank_numeric, block_rank_symbolic, zelevinsky_map
from . import serde


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qloci",
        description="Orbit structure of type A quiver representation spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiver", metavar="F", help="path to a quiver JSON file")
        p.add_argument("--rep", metavar="F", help="path to a representation JSON file")
        p.add_argument("--dims", metavar="CSV", help="comma-separated dimension vector")
        p.add_argument("--field", choices=["Q", "Fp"], default=None)
        p.add_argument("--p", type=int, default=None, help="prime for Fp")
        p.add_argument("--format", choices=["json", "dot", "text"], default="text")
        p.add_argument("--reduce", action="store_true", help="lift non-bipartite input first")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--guard", type=int, default=None, help="enumeration ceiling")

    for name, doc in [
        ("decompose", "Krull-Schmidt multiplicities and rank array of a representation"),
        ("zelevinsky", "embedded matrix, block ranks, permutation, essential set, dimension"),
        ("poset", "degeneration poset for a quiver and dimension vector"),
        ("reduce", "bipartite double of an arbitrarily oriented quiver"),
        ("oracle", "brute-force verification report over a small prime field"),
    ]:
        common(sub.add_parser(name, help=doc))
    return parser


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _need(args, attr, what):
    val = getattr(args, attr)
    if val is None:
        raise InputError(f"--{attr} is required for {what}")
    return val


def _parse_dims(text: str) -> DimensionVector:
    try:
        return DimensionVector(tuple(int(v) for v in text.split(",")))
    except ValueError as exc:
        raise InputError(f"bad --dims value {text!r}") from exc


def _guard(args, default):
    if args.guard is not None:
        return args.guard
    env = os.environ.get("QLOCI_GUARD")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"bad QLOCI_GUARD value {env!r}") from exc
    return default


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _render_cell_text(z, layout) -> str:
    """Block-structured rendering with identity blocks shown as 1_k."""
    n = layout.n
    k = 2 * n + 1
    rows = []
    rstart = 0
    for i in range(k):
        rsize = layout.row_sizes[i]
        cells = []
        cstart = 0
        for j in range(k):
            csize = layout.col_sizes[j]
            block = [
                [z.matrix.data[rstart + a][cstart + b] for b in range(csize)]
                for a in range(rsize)
            ]
            cells.append(_block_text(block, rsize, csize))
            cstart += csize
        rows.append(" | ".join(cells))
        rstart += rsize
    header = " | ".join(
        f"{layout.col_vertex(j + 1)}({layout.col_sizes[j]})" for j in range(k)
    )
    labeled = [
        f"{layout.row_vertex(i + 1)}({layout.row_sizes[i]}): {line}"
        for i, line in enumerate(rows)
    ]
    return "cols: " + header + "\n" + "\n".join(labeled)


def _block_text(block, rsize, csize) -> str:
    if rsize == 0 or csize == 0:
        return "."
    if all(v == 0 for row in block for v in row):
        return "0"
    if rsize == csize and all(
        block[a][b] == (1 if a == b else 0) for a in range(rsize) for b in range(csize)
    ):
        return f"1_{rsize}"
    return "[" + "; ".join(" ".join(str(v) for v in row) for row in block) + "]"


def cmd_decompose(args) -> int:
    rep = serde.rep_from_json(_load_json(_need(args, "rep", "decompose")))
    if not isinstance(rep, Representation):
        raise InputError("decompose expects a bipartite representation")
    r = rank_array(rep)
    s = rank_to_lace(r, rep.dims)
    if args.format == "json":
        _emit(
            {
                "rank_array": serde.rank_array_to_json(r),
                "lace_array": serde.lace_array_to_json(s),
            }
        )
    else:
        table = interval_table(rep.quiver.n)
        print("multiplicities:")
        for i, j in enumerate(table.intervals):
            if s.values[i]:
                print(f"  {j}: {s.values[i]}")
        print("rank array:")
        for i, j in enumerate(table.intervals):
            if not j.is_vertex:
                print(f"  {j}: {r.values[i]}")
    return 0


def cmd_zelevinsky(args) -> int:
    rep = serde.rep_from_json(_load_json(_need(args, "rep", "zelevinsky")))
    if not isinstance(rep, Representation):
        if not args.reduce:
            raise InputError("input is not bipartite; pass --reduce to lift it")
        ctx = bipartite_double(rep.quiver)
        rep = lift_rep(ctx, rep)
    z = zelevinsky_map(rep)
    layout = z.layout
    b = block_rank_numeric(z)
    r = rank_array(rep)
    if block_rank_symbolic(r, rep.dims) != b:
        raise InternalCheckError("symbolic and numeric block ranks disagree")
    v = zelevinsky_permutation(b, layout.block_spec())
    ess = essential_set(v)
    dim = d_x(rep.dims) * d_y(rep.dims) - inversion_length(v)
    if args.format == "json":
        _emit(
            {
                "matrix": z.matrix.to_json(),
                "block_ranks": b.to_json(),
                "permutation": serde.permutation_to_json(v),
                "essential_set": serde.boxes_to_json(ess),
                "dimension": dim,
            }
        )
    else:
        print(_render_cell_text(z, layout))
        print("block ranks:")
        for row in b.entries:
            print("  " + " ".join(f"{x:3d}" for x in row))
        print(f"permutation: {list(v.word)}")
        print(f"essential set: {serde.boxes_to_json(ess)}")
        print(f"orbit closure dimension: {dim}")
    return 0


def cmd_poset(args) -> int:
    q = serde.quiver_from_json(_load_json(_need(args, "quiver", "poset")))
    dims = _parse_dims(_need(args, "dims", "poset"))
    if isinstance(q, TypeAQuiver):
        ctx = bipartite_double(q)
        from .reduction import lift_dimension

        q, dims = ctx.target, lift_dimension(ctx, dims)
    guard = _guard(args, DEFAULT_LACE_GUARD)
    poset = build_poset(q, dims, guard=guard)
    report = order_equivalence_report(poset)
    if not report.consistent:
        raise InternalCheckError(f"order equivalence failed: {report.counterexamples}")
    top = dense_orbit(q, dims, guard=guard, seed=args.seed)
    if not all(nd.rank.leq(top.rank) for nd in poset.nodes):
        raise InternalCheckError("dense orbit cross-check failed")
    if args.format == "dot":
        sys.stdout.write(poset_to_dot(poset))
        sys.stdout.write(
            f"// order equivalence: {report.pairs_checked} pairs checked, consistent\n"
        )
    elif args.format == "json":
        out = serde.poset_to_json(poset)
        out["order_equivalence"] = {
            "pairs_checked": report.pairs_checked,
            "consistent": report.consistent,
        }
        _emit(out)
    else:
        print(f"{len(poset.nodes)} orbits, {len(poset.covers)} covering relations")
        for idx, node in enumerate(poset.nodes):
            ranks = ",".join(str(x) for x in node.rank.values)
            print(f"  node {idx}: r=({ranks}) dim={node.dimension}")
        for a, b in poset.covers:
            print(f"  {a} < {b}")
        print(f"order equivalence: checked {report.pairs_checked} pairs, consistent")
    return 0


def cmd_reduce(args) -> int:
    q = serde.quiver_from_json(_load_json(_need(args, "quiver", "reduce")))
    if isinstance(q, BipartiteQuiver):
        word = "LR" * q.n
        q = TypeAQuiver(word)
    ctx = bipartite_double(q)
    payload = serde.reduction_context_to_json(ctx)
    if args.dims:
        from .reduction import lift_dimension

        dims = _parse_dims(args.dims)
        payload["lifted_dims"] = serde.dims_to_json(lift_dimension(ctx, dims))
    if args.format == "json" or args.format == "dot":
        _emit(payload)
    else:
        print(f"target: bipartite quiver with n={ctx.target.n}")
        for z, name in sorted(payload["vertices"].items()):
            print(f"  {z} -> {name}")
        for item in payload["inserted"]:
            print(
                f"  inserted {item['vertex']} ({item['kind']}) doubling {item['junction']},"
                f" delta arrow {item['delta']}"
            )
        if "lifted_dims" in payload:
            print(f"  lifted dims: {payload['lifted_dims']}")
    return 0


def cmd_oracle(args) -> int:
    q = serde.quiver_from_json(_load_json(_need(args, "quiver", "oracle")))
    dims = _parse_dims(_need(args, "dims", "oracle"))
    p = args.p if args.p else 2
    guard = _guard(args, DEFAULT_POINT_GUARD)
    checks = []

    if isinstance(q, BipartiteQuiver):
        points = enumerate_reps(q, dims, p, guard)
        census = brute_orbit_partition(points, q, dims, p, guard)
        ok = verify_rank_determines_orbit(q, dims, p, guard, guard)
        checks.append(("rank_array determines orbits", ok))
    else:
        from .oracle import orbit_partition

        ctx = bipartite_double(q)
        census = orbit_partition(q, dims, p, guard, guard)
        fibers = {}
        for idx, rep in enumerate(census.points):
            key = rank_array_arbitrary(ctx, rep).values
            fibers.setdefault(key, []).append(idx)
        ok = {tuple(sorted(v)) for v in fibers.values()} == set(census.orbits)
        checks.append(("lifted rank array determines orbits", ok))

    total = sum(census.sizes)
    checks.append(("orbit sizes sum to p^dim", total == p ** space_dimension(q, dims)))

    failed = [name for name, ok in checks if not ok]
    if args.format == "json":
        _emit(
            {
                "census": census.to_json(),
                "checks": [{"name": name, "pass": ok} for name, ok in checks],
            }
        )
    else:
        print(f"{len(census.orbits)} orbits over F_{p}, sizes {list(census.sizes)}")
        for name, ok in checks:
            print(f"  [{'PASS' if ok else 'FAIL'}] {name}")
    if failed:
        raise InternalCheckError(f"oracle checks failed: {failed}")
    return 0


COMMANDS = {
    "decompose": cmd_decompose,
    "zelevinsky": cmd_zelevinsky,
    "poset": cmd_poset,
    "reduce": cmd_reduce,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except GuardExceededError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 4
    except (InputError, QlociError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
