"""The embedding of a representation space into an opposite Schubert cell.

A representation is sent to the d x d matrix [[M, 1],[1, 0]] whose northwest
quadrant is the snake matrix collecting all arrow maps.  Ranks of the
northwest-justified block submatrices form the block rank matrix, computable
two ways: numerically from the embedded matrix, or symbolically from the
rank array alone.  The two routes agree on every representation; the
symbolic one is the production path and the numeric one the validator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvalidBlockRankError, ShapeError
from .matrices import ExactMatrix, assemble_blocks, prefix_block_ranks
from .quiver import (
    BipartiteQuiver,
    DimensionVector,
    Interval,
    check_dims,
    d_x,
    d_y,
    interval_table,
    vertex_name,
)
from .reps import RankArray, Representation, assemble_interval_matrix


@dataclass(frozen=True)
class BlockLayout:
    """Block row/column structure of the ambient cell.

    Block rows carry the sinks y_0..y_n then the sources x_n..x_1; block
    columns carry x_n..x_1 then y_0..y_n.  Numeric block indices 1..2n+1
    refer to this order; translation to vertex labels happens here and only
    here.
    """

    n: int
    dims: DimensionVector

    def __post_init__(self):
        if len(self.dims) != 2 * self.n + 1:
            raise InputError("dimension vector does not match n")

    @property
    def row_positions(self) -> tuple[int, ...]:
        ys = tuple(2 * i for i in range(self.n + 1))
        xs = tuple(2 * k - 1 for k in range(self.n, 0, -1))
        return ys + xs

    @property
    def col_positions(self) -> tuple[int, ...]:
        xs = tuple(2 * k - 1 for k in range(self.n, 0, -1))
        ys = tuple(2 * i for i in range(self.n + 1))
        return xs + ys

    @property
    def row_sizes(self) -> tuple[int, ...]:
        return tuple(self.dims[p] for p in self.row_positions)

    @property
    def col_sizes(self) -> tuple[int, ...]:
        return tuple(self.dims[p] for p in self.col_positions)

    @property
    def row_cuts(self) -> tuple[int, ...]:
        out, acc = [], 0
        for s in self.row_sizes:
            acc += s
            out.append(acc)
        return tuple(out)

    @property
    def col_cuts(self) -> tuple[int, ...]:
        out, acc = [], 0
        for s in self.col_sizes:
            acc += s
            out.append(acc)
        return tuple(out)

    @property
    def total(self) -> int:
        return d_x(self.dims) + d_y(self.dims)

    def row_vertex(self, i: int) -> str:
        """Vertex label of numeric block row i (1-based)."""
        return vertex_name(self.row_positions[i - 1])

    def col_vertex(self, j: int) -> str:
        return vertex_name(self.col_positions[j - 1])

    def block_spec(self):
        from .perms import BlockSpec

        return BlockSpec(self.row_sizes, self.col_sizes)


def layout_for(q: BipartiteQuiver, dims: DimensionVector) -> BlockLayout:
    check_dims(q, dims)
    return BlockLayout(q.n, dims)


@dataclass(frozen=True)
class ZelevinskyCellMatrix:
    """A d x d matrix of the cell shape: free northwest quadrant, identity
    blocks in the northeast and southwest, zero southeast."""

    matrix: ExactMatrix
    layout: BlockLayout

    def __post_init__(self):
        m, lay = self.matrix, self.layout
        dy = d_y(lay.dims)
        dx = d_x(lay.dims)
        if (m.rows, m.cols) != (dy + dx, dy + dx):
            raise ShapeError("cell matrix has the wrong size")
        f = m.field
        z, o = f.zero(), f.one()
        for i in range(dy):
            for j in range(dy):
                want = o if i == j else z
                if m.data[i][dx + j] != want:
                    raise InputError("northeast quadrant is not an identity block")
        for i in range(dx):
            for j in range(dx):
                want = o if i == j else z
                if m.data[dy + i][j] != want:
                    raise InputError("southwest quadrant is not an identity block")
            for j in range(dy):
                if m.data[dy + i][dx + j] != z:
                    raise InputError("southeast quadrant is not zero")

    @property
    def field(self):
        return self.matrix.field


def snake_matrix(v: Representation) -> ExactMatrix:
    """The d_y x d_x matrix holding every arrow map in its staircase slot."""
    q = v.quiver
    if q.n == 0:
        return ExactMatrix.zeros(v.field, v.dims[0], 0)
    return assemble_interval_matrix(v, Interval(0, 2 * q.n))


def zelevinsky_map(v: Representation) -> ZelevinskyCellMatrix:
    """Embed a representation as [[snake, 1],[1, 0]]."""
    lay = layout_for(v.quiver, v.dims)
    field = v.field
    snake = snake_matrix(v)
    dy = d_y(v.dims)
    dx = d_x(v.dims)
    grid = [
        [snake, ExactMatrix.identity(field, dy)],
        [ExactMatrix.identity(field, dx), None],
    ]
    m = assemble_blocks(grid, [dy, dx], [dx, dy], field)
    return ZelevinskyCellMatrix(m, lay)


def cell_matrix_from_star(star: ExactMatrix, layout: BlockLayout) -> ZelevinskyCellMatrix:
    """Build the cell element with the given free block."""
    dy = d_y(layout.dims)
    dx = d_x(layout.dims)
    if (star.rows, star.cols) != (dy, dx):
        raise ShapeError(f"free block must be {dy}x{dx}")
    f = star.field
    grid = [
        [star, ExactMatrix.identity(f, dy)],
        [ExactMatrix.identity(f, dx), None],
    ]
    return ZelevinskyCellMatrix(assemble_blocks(grid, [dy, dx], [dx, dy], f), layout)


@dataclass(frozen=True)
class BlockRankMatrix:
    """Ranks of all northwest-justified block submatrices; (2n+1) x (2n+1)."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = 2 * self.n + 1
        if len(self.entries) != k or any(len(r) != k for r in self.entries):
            raise InputError("block rank matrix has the wrong shape")

    def entry(self, i: int, j: int) -> int:
        """1-based access; indices outside [1, 2n+1] read as 0."""
        k = 2 * self.n + 1
        if i < 1 or j < 1 or i > k or j > k:
            return 0
        return self.entries[i - 1][j - 1]

    def block_count(self, i: int, j: int) -> int:
        """Second difference: the prescribed number of 1s in block (i, j)."""
        return (
            self.entry(i, j)
            + self.entry(i - 1, j - 1)
            - self.entry(i, j - 1)
            - self.entry(i - 1, j)
        )

    def is_monotone_staircase(self) -> bool:
        k = 2 * self.n + 1
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if self.entry(i, j) < self.entry(i - 1, j):
                    return False
                if self.entry(i, j) < self.entry(i, j - 1):
                    return False
                if self.block_count(i, j) < 0:
                    return False
        return True

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "BlockRankMatrix":
        try:
            n = int(obj["n"])
            entries = tuple(tuple(int(v) for v in row) for row in obj["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad block rank matrix object: {exc}") from exc
        return cls(n, entries)


def block_rank_numeric(z: ZelevinskyCellMatrix) -> BlockRankMatrix:
    """Rank every northwest-justified block submatrix of the embedded matrix."""
    lay = z.layout
    grid = prefix_block_ranks(z.matrix, lay.row_cuts, lay.col_cuts)
    return BlockRankMatrix(lay.n, grid)


def _block_formula(n: int, dims: DimensionVector, i: int, j: int):
    """Closed form for block (i, j): an offset plus the rank of one interval.

    Identity blocks present in the northwest-justified submatrix pivot away
    whole block rows/columns and contribute the offset; what remains of the
    snake is the staircase matrix of a single interval, returned as a vertex
    span (empty when lo > hi).  Specializing over the four quadrants gives
    the forced cell values, the forced image values, and the four orbit
    families with their dimension offsets.
    """
    # rows present: y_0..y_ytop, and x_k for k >= xlow (xlow = n+1 means none)
    if i <= n + 1:
        ytop, xlow = i - 1, n + 1
    else:
        ytop, xlow = n, 2 * n + 2 - i
    # cols present: x_k for k >= xcollow, and y_0..y_ycoltop (-1 means none)
    if j <= n:
        xcollow, ycoltop = n + 1 - j, -1
    else:
        xcollow, ycoltop = 1, j - n - 1
    kx = max(xlow, xcollow)
    offset = sum(dims[2 * k - 1] for k in range(kx, n + 1))
    my = min(ytop, ycoltop)
    offset += sum(dims[2 * k] for k in range(0, my + 1))
    rlo, rhi = my + 1, ytop
    clo, chi = xcollow, kx - 1
    edge_lo = max(2 * rlo, 2 * clo - 1)
    edge_hi = min(2 * rhi + 1, 2 * chi)
    return offset, edge_lo, edge_hi


def block_rank_symbolic(r: RankArray, dims: DimensionVector) -> BlockRankMatrix:
    """Fill the block rank matrix from the rank array alone."""
    n = r.n
    if len(dims) != 2 * n + 1:
        raise InputError("dimension vector does not match the rank array")
    table = interval_table(n)
    k = 2 * n + 1
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            offset, elo, ehi = _block_formula(n, dims, i, j)
            slot = table.rank_slot_of_span(elo - 1, ehi)
            row.append(offset + (r.values[slot] if slot >= 0 else 0))
        rows.append(tuple(row))
    return BlockRankMatrix(n, tuple(rows))


def recover_rank_array(b: BlockRankMatrix, dims: DimensionVector) -> RankArray:
    """Invert the symbolic route: read each interval's rank off its block,
    after checking every forced entry.  Left inverse of the symbolic map."""
    n = b.n
    if len(dims) != 2 * n + 1:
        raise InputError("dimension vector does not match the block rank matrix")
    table = interval_table(n)
    vals: list[int | None] = [None] * len(table)
    for p in range(table.vertex_count):
        vals[p] = 0
    k = 2 * n + 1
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            offset, elo, ehi = _block_formula(n, dims, i, j)
            got = b.entry(i, j)
            if elo > ehi:
                if got != offset:
                    raise InvalidBlockRankError(
                        f"forced entry at block ({i},{j}) should be {offset}, found {got}"
                    )
                continue
            val = got - offset
            if val < 0:
                raise InvalidBlockRankError(
                    f"entry at block ({i},{j}) is below its dimension offset"
                )
            slot = table.index[Interval(elo - 1, ehi)]
            if vals[slot] is None:
                vals[slot] = val
            elif vals[slot] != val:
                raise InvalidBlockRankError(
                    f"blocks disagree about the rank of {table.intervals[slot]}"
                )
    if any(v is None for v in vals):
        raise InvalidBlockRankError("some interval was not determined")
    return RankArray(n, tuple(vals))  # type: ignore[arg-type]


@dataclass(frozen=True)
class MinorSpec:
    """One family of vanishing minors: all minors of the given size supported
    on the listed rows and columns (1-based) of the named ambient matrix."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    size: int
    source: str

    def to_json(self) -> dict:
        return {
            "region": {"rows": list(self.rows), "cols": list(self.cols)},
            "size": self.size,
            "source": self.source,
        }


def defining_minor_specs(r: RankArray, dims: DimensionVector) -> list[MinorSpec]:
    """Generator inventories for the two determinantal descriptions of an
    orbit closure: per interval, minors of size 1 + rank in the interval's
    staircase region of the snake matrix; per block, minors of size
    1 + block rank in the northwest-justified region of the embedded matrix."""
    n = r.n
    if len(dims) != 2 * n + 1:
        raise InputError("dimension vector does not match the rank array")
    table = interval_table(n)
    lay = BlockLayout(n, dims)
    specs = []

    # snake-matrix coordinates: rows are y_0..y_n top to bottom, columns
    # x_n..x_1 left to right, both 1-based
    yoff = {}
    acc = 0
    for i in range(n + 1):
        yoff[2 * i] = acc
        acc += dims[2 * i]
    xoff = {}
    acc = 0
    for k in range(n, 0, -1):
        xoff[2 * k - 1] = acc
        acc += dims[2 * k - 1]
    for j in table.intervals:
        row_pos = [p for p in range(j.lo, j.hi + 1) if p % 2 == 0]
        col_pos = [p for p in range(j.lo, j.hi + 1) if p % 2 == 1]
        rows = []
        for p in row_pos:
            rows.extend(range(yoff[p] + 1, yoff[p] + dims[p] + 1))
        cols = []
        for p in col_pos:
            cols.extend(range(xoff[p] + 1, xoff[p] + dims[p] + 1))
        specs.append(
            MinorSpec(tuple(sorted(rows)), tuple(sorted(cols)), 1 + r[j], f"interval {j}")
        )

    row_cuts = lay.row_cuts
    col_cuts = lay.col_cuts
    b = block_rank_symbolic(r, dims)
    k = 2 * n + 1
    for i in range(1, k + 1):
        for jj in range(1, k + 1):
            specs.append(
                MinorSpec(
                    tuple(range(1, row_cuts[i - 1] + 1)),
                    tuple(range(1, col_cuts[jj - 1] + 1)),
                    b.entry(i, jj) + 1,
                    f"block ({i},{jj})",
                )
            )
    return specs
