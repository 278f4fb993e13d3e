"""Brute-force ground truth at desk scale.

Exhaustive enumeration of representation points over a small prime field,
orbit partitioning by closing the base-change action, and Bruhat order by
transitive closure of covers.  Everything here is independent of the rank
machinery it validates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations

from .errors import GuardExceededError, InputError
from .fields import PrimeField
from .matrices import ExactMatrix
from .perms import Permutation, inversion_length
from .quiver import BipartiteQuiver, DimensionVector, TypeAQuiver, check_dims
from .reps import Representation, rank_array
from .reduction import TypeARepresentation

DEFAULT_POINT_GUARD = 2**20
DEFAULT_GROUP_GUARD = 2**20
MAX_COVER_SYMMETRIC = 6


def _arrow_specs(q, dims: DimensionVector):
    """(head, tail) vertex indices per arrow, for either quiver flavor."""
    if isinstance(q, BipartiteQuiver):
        check_dims(q, dims)
        return [(q.head_pos(e), q.tail_pos(e)) for e in q.edges()]
    if isinstance(q, TypeAQuiver):
        if len(dims) != q.vertex_count:
            raise InputError("dimension vector does not match the quiver")
        return [(q.head_vertex(i), q.tail_vertex(i)) for i in range(1, q.arrow_count + 1)]
    raise InputError(f"unsupported quiver {q!r}")


def _make_rep(q, dims, field, mats):
    if isinstance(q, BipartiteQuiver):
        return Representation(q, dims, tuple(mats))
    return TypeARepresentation(q, dims, tuple(mats))


def space_dimension(q, dims: DimensionVector) -> int:
    return sum(dims[h] * dims[t] for h, t in _arrow_specs(q, dims))


def iter_reps(q, dims: DimensionVector, p: int, ceiling: int = DEFAULT_POINT_GUARD):
    """Yield every point of the representation space over F_p, in
    lexicographic order of the concatenated entry lists."""
    field = PrimeField(p)
    specs = _arrow_specs(q, dims)
    total_entries = sum(dims[h] * dims[t] for h, t in specs)
    count = p**total_entries
    if count > ceiling:
        raise GuardExceededError(f"{count} points exceed the ceiling {ceiling}")
    shapes = [(dims[h], dims[t]) for h, t in specs]
    for code in range(count):
        digits = []
        c = code
        for _ in range(total_entries):
            c, r = divmod(c, p)
            digits.append(r)
        digits.reverse()
        mats = []
        pos = 0
        for rows, cols in shapes:
            data = [digits[pos + i * cols : pos + (i + 1) * cols] for i in range(rows)]
            pos += rows * cols
            mats.append(ExactMatrix(field, rows, cols, data))
        yield _make_rep(q, dims, field, mats)


def enumerate_reps(q, dims: DimensionVector, p: int, ceiling: int = DEFAULT_POINT_GUARD):
    return list(iter_reps(q, dims, p, ceiling))


def gl_order(k: int, p: int) -> int:
    total = 1
    for i in range(k):
        total *= p**k - p**i
    return total


def gl_generators(k: int, p: int):
    """A small generating set of GL_k(F_p) as ExactMatrix objects."""
    field = PrimeField(p)
    if k == 0:
        return []
    gens = []
    # a generator of the multiplicative group, scaling the first coordinate
    g = _primitive_root(p)
    if g != 1:
        m = ExactMatrix.identity(field, k)
        m.data[0][0] = g
        gens.append(m)
    if k >= 2:
        t = ExactMatrix.identity(field, k)
        t.data[0][1] = 1
        gens.append(t)
        cyc = ExactMatrix.zeros(field, k, k)
        for i in range(k):
            cyc.data[i][(i + 1) % k] = 1
        gens.append(cyc)
    return gens


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = (x * g) % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise InputError(f"no primitive root mod {p}")


def gl_elements(k: int, p: int):
    """The full element list of GL_k(F_p), by closure of the generators."""
    field = PrimeField(p)
    ident = ExactMatrix.identity(field, k)
    elems = {ident.key(): ident}
    frontier = [ident]
    gens = gl_generators(k, p)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m.multiply(g)
                key = prod.key()
                if key not in elems:
                    elems[key] = prod
                    nxt.append(prod)
        frontier = nxt
    out = list(elems.values())
    assert len(out) == gl_order(k, p)
    return out


@dataclass(frozen=True)
class OrbitCensus:
    """The full orbit partition of a representation space over F_p."""

    p: int
    quiver: object
    dims: DimensionVector
    points: tuple
    orbits: tuple[tuple[int, ...], ...]  # indices into points

    @property
    def sizes(self):
        return tuple(len(o) for o in self.orbits)

    def to_json(self) -> dict:
        from .serde import rank_array_to_json

        out = []
        for orbit in self.orbits:
            rep = self.points[orbit[0]]
            if isinstance(rep, Representation):
                ra = rank_array(rep)
            else:
                from .reduction import bipartite_double, rank_array_arbitrary

                ra = rank_array_arbitrary(bipartite_double(rep.quiver), rep)
            out.append({"size": len(orbit), "rank_array": rank_array_to_json(ra)})
        return {"p": self.p, "orbits": out}


def _tuple_mats(rep):
    return tuple(tuple(tuple(row) for row in m.data) for m in rep.arrows)


def _mat_mul(a, b, p):
    if not a or not b:
        return tuple(() for _ in a)
    cols = len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum(arow[k] * b[k][j] for k in range(inner)) % p for j in range(cols))
        for arow in a
    )


def brute_orbit_partition(
    points,
    q,
    dims: DimensionVector,
    p: int,
    ceiling: int = DEFAULT_GROUP_GUARD,
) -> OrbitCensus:
    """Partition the points into base-change orbits.

    The orbit of a point is closed under a generating set of the product
    group, which reaches exactly the full-group sweep's partition; the group
    order guard keeps requests sane.
    """
    specs = _arrow_specs(q, dims)
    group_size = 1
    for k in dims:
        group_size *= gl_order(k, p)
    if group_size > ceiling:
        raise GuardExceededError(f"group order {group_size} exceeds the ceiling {ceiling}")

    # per-vertex generator actions: (vertex, g, g_inverse) as raw tuples
    actions = []
    for z, k in enumerate(dims):
        for g in gl_generators(k, p):
            gt = tuple(tuple(row) for row in g.data)
            gi = tuple(tuple(row) for row in g.inverse().data)
            actions.append((z, gt, gi))

    keys = [_tuple_mats(rep) for rep in points]
    index_of = {key: i for i, key in enumerate(keys)}
    if len(index_of) != len(points):
        raise InputError("duplicate points in the orbit sweep")

    assigned = [-1] * len(points)
    orbits = []
    for start in range(len(points)):
        if assigned[start] >= 0:
            continue
        orbit_id = len(orbits)
        members = [start]
        assigned[start] = orbit_id
        stack = [keys[start]]
        while stack:
            cur = stack.pop()
            for z, gt, gi in actions:
                new = list(cur)
                for a, (h, t) in enumerate(specs):
                    m = new[a]
                    if h == z:
                        m = _mat_mul(gt, m, p)
                    if t == z:
                        m = _mat_mul(m, gi, p)
                    new[a] = m
                key = tuple(new)
                idx = index_of[key]
                if assigned[idx] < 0:
                    assigned[idx] = orbit_id
                    members.append(idx)
                    stack.append(key)
        orbits.append(tuple(sorted(members)))
    return OrbitCensus(p, q, dims, tuple(points), tuple(orbits))


def orbit_partition(q, dims: DimensionVector, p: int, point_ceiling: int = DEFAULT_POINT_GUARD, group_ceiling: int = DEFAULT_GROUP_GUARD) -> OrbitCensus:
    points = enumerate_reps(q, dims, p, point_ceiling)
    return brute_orbit_partition(points, q, dims, p, group_ceiling)


def verify_rank_determines_orbit(
    q: BipartiteQuiver,
    dims: DimensionVector,
    p: int,
    point_ceiling: int = DEFAULT_POINT_GUARD,
    group_ceiling: int = DEFAULT_GROUP_GUARD,
) -> bool:
    """True iff the rank-array fibers coincide with the brute orbit partition."""
    census = orbit_partition(q, dims, p, point_ceiling, group_ceiling)
    by_rank = {}
    for idx, rep in enumerate(census.points):
        by_rank.setdefault(rank_array(rep).values, []).append(idx)
    fibers = {tuple(sorted(v)) for v in by_rank.values()}
    return fibers == set(census.orbits)


def bruhat_via_covers(d_sym: int):
    """Bruhat order on S_d as the transitive closure of length-increasing
    transposition covers.  Returns an object with a ``leq`` method."""
    if d_sym > MAX_COVER_SYMMETRIC:
        raise GuardExceededError(f"cover closure limited to S_{MAX_COVER_SYMMETRIC}")
    perms = [Permutation(w) for w in iter_permutations(range(1, d_sym + 1))]
    index = {pm.word: i for i, pm in enumerate(perms)}
    lengths = [inversion_length(pm) for pm in perms]
    up = [0] * len(perms)  # bitmask of immediate successors
    for i, pm in enumerate(perms):
        w = list(pm.word)
        for a in range(d_sym):
            for b in range(a + 1, d_sym):
                w[a], w[b] = w[b], w[a]
                j = index[tuple(w)]
                if lengths[j] == lengths[i] + 1:
                    up[i] |= 1 << j
                w[a], w[b] = w[b], w[a]
    # close upward, visiting by decreasing length
    order = sorted(range(len(perms)), key=lambda i: -lengths[i])
    reach = [1 << i for i in range(len(perms))]
    for i in order:
        m = up[i]
        acc = reach[i]
        while m:
            low = m & -m
            j = low.bit_length() - 1
            acc |= reach[j]
            m ^= low
        reach[i] = acc
    return _CoverOrder(index, reach)


class _CoverOrder:
    def __init__(self, index, reach):
        self._index = index
        self._reach = reach

    def leq(self, u: Permutation, v: Permutation) -> bool:
        i = self._index[u.word]
        j = self._index[v.word]
        return bool(self._reach[i] >> j & 1)
