"""Exact dense matrices over Q or a prime field.

Supports rank (fraction-free over Q, bitmask elimination over F_2), products,
inverses, and block assembly.  Matrices with zero rows or zero columns are
first-class citizens and have rank 0, so zero-dimensional vertex spaces need
no special handling elsewhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import FieldMismatchError, InputError, ShapeError, SingularMatrixError
from .fields import Field, FieldScalar, PrimeField, QQ, field_from_tag


class ExactMatrix:
    """Immutable-by-convention dense matrix with exact entries."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        # data: list of row lists of raw field values; trusted by internal callers
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, field: Field, entries) -> "ExactMatrix":
        """Build a matrix from nested sequences, normalizing every entry."""
        data = [[field.normalize(v) for v in row] for row in entries]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        for row in data:
            if len(row) != cols:
                raise ShapeError("ragged rows in matrix literal")
        return cls(field, rows, cols, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "ExactMatrix":
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, size: int) -> "ExactMatrix":
        z, o = field.zero(), field.one()
        data = [[o if i == j else z for j in range(size)] for i in range(size)]
        return cls(field, size, size, data)

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.field, self.data[i][j])

    def row(self, i: int):
        return tuple(self.data[i])

    def transpose(self) -> "ExactMatrix":
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return ExactMatrix(self.field, self.cols, self.rows, data)

    def copy_data(self):
        return [list(r) for r in self.data]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(v == z for row in self.data for v in row)

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols}, {self.data})"

    def key(self):
        """Hashable entry tuple, row-major; used for deterministic orderings."""
        return tuple(v for row in self.data for v in row)

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, other: "ExactMatrix") -> "ExactMatrix":
        """Exact matrix product; empty contractions yield zero matrices."""
        if self.field != other.field:
            raise FieldMismatchError(f"product over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        z = f.zero()
        out = []
        if isinstance(f, PrimeField):
            p = f.p
            bt = other.data
            for arow in self.data:
                orow = []
                for j in range(other.cols):
                    acc = 0
                    for k in range(self.cols):
                        acc += arow[k] * bt[k][j]
                    orow.append(acc % p)
                out.append(orow)
        else:
            for arow in self.data:
                orow = []
                for j in range(other.cols):
                    acc = z
                    for k in range(self.cols):
                        acc += arow[k] * other.data[k][j]
                    orow.append(acc)
                out.append(orow)
        return ExactMatrix(f, self.rows, other.cols, out)

    def __matmul__(self, other):
        return self.multiply(other)

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise FieldMismatchError("sum over mismatched fields")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("sum of differently shaped matrices")
        f = self.field
        data = [
            [f.add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return ExactMatrix(f, self.rows, self.cols, data)

    def scale(self, scalar) -> "ExactMatrix":
        f = self.field
        s = f.normalize(scalar)
        return ExactMatrix(
            f, self.rows, self.cols, [[f.mul(s, v) for v in row] for row in self.data]
        )

    def inverse(self) -> "ExactMatrix":
        """Exact inverse via Gauss-Jordan; raises on non-square or singular input."""
        if self.rows != self.cols:
            raise ShapeError(f"inverse of non-square {self.rows}x{self.cols} matrix")
        f = self.field
        n = self.rows
        work = self.copy_data()
        aug = ExactMatrix.identity(f, n).data
        z = f.zero()
        for col in range(n):
            piv = None
            for r in range(col, n):
                if work[r][col] != z:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            work[col], work[piv] = work[piv], work[col]
            aug[col], aug[piv] = aug[piv], aug[col]
            pinv = f.inv(work[col][col])
            work[col] = [f.mul(pinv, v) for v in work[col]]
            aug[col] = [f.mul(pinv, v) for v in aug[col]]
            for r in range(n):
                if r != col and work[r][col] != z:
                    c = work[r][col]
                    work[r] = [f.sub(a, f.mul(c, b)) for a, b in zip(work[r], work[col])]
                    aug[r] = [f.sub(a, f.mul(c, b)) for a, b in zip(aug[r], aug[col])]
        return ExactMatrix(f, n, n, aug)

    # -- rank ---------------------------------------------------------------

    def rank(self) -> int:
        """Row rank by exact elimination.

        Over Q this uses fraction-free (Bareiss) pivoting on the denominator-
        cleared matrix to bound entry growth; over F_2 it packs rows into
        integers and eliminates with xor.
        """
        if self.rows == 0 or self.cols == 0:
            return 0
        f = self.field
        if isinstance(f, PrimeField):
            if f.p == 2:
                return _rank_gf2(_bitrows(self.data, self.cols))
            return _rank_mod_p(self.copy_data(), self.cols, f.p)
        return _rank_bareiss(_cleared_int_rows(self.data), self.cols)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        f = self.field
        return {
            "rows": self.rows,
            "cols": self.cols,
            "field": f.tag,
            "entries": [[f.scalar_to_json(v) for v in row] for row in self.data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactMatrix":
        try:
            field = field_from_tag(obj["field"])
            rows = int(obj["rows"])
            cols = int(obj["cols"])
            entries = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad matrix object: {exc}") from exc
        if rows < 0 or cols < 0 or len(entries) != rows:
            raise InputError("matrix entry grid does not match declared shape")
        data = []
        for row in entries:
            if len(row) != cols:
                raise InputError("matrix entry grid does not match declared shape")
            data.append([field.scalar_from_json(v) for v in row])
        return cls(field, rows, cols, data)


def _bitrows(data, cols):
    # column c maps to bit (cols-1-c) so the leading bit is the leftmost column
    out = []
    for row in data:
        bits = 0
        for v in row:
            bits = (bits << 1) | (v & 1)
        out.append(bits)
    return out


def _rank_gf2(bitrows) -> int:
    pivots = {}
    rank = 0
    for v in bitrows:
        while v:
            b = v.bit_length()
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                rank += 1
                break
            v ^= p
    return rank


def _rank_mod_p(rows, cols, p) -> int:
    m = len(rows)
    rank = 0
    lead = 0
    for col in range(cols):
        piv = None
        for r in range(lead, m):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        prow = rows[lead]
        pinv = pow(prow[col], p - 2, p)
        for r in range(lead + 1, m):
            vr = rows[r]
            c = vr[col] % p
            if c:
                factor = (c * pinv) % p
                for k in range(col, cols):
                    vr[k] = (vr[k] - factor * prow[k]) % p
        lead += 1
        rank += 1
        if lead == m:
            break
    return rank


def _cleared_int_rows(data):
    # scale each row to integers; row scaling does not change the rank
    out = []
    for row in data:
        mult = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * mult) if isinstance(v, Fraction) else int(v) * mult for v in row])
    return out


def _rank_bareiss(rows, cols) -> int:
    m = len(rows)
    rank = 0
    lead = 0
    prev = 1
    for col in range(cols):
        piv = None
        for r in range(lead, m):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        prow = rows[lead]
        pv = prow[col]
        for r in range(lead + 1, m):
            vr = rows[r]
            c = vr[col]
            for k in range(col + 1, cols):
                vr[k] = (pv * vr[k] - c * prow[k]) // prev
            vr[col] = 0
        prev = pv
        lead += 1
        rank += 1
        if lead == m:
            break
    return rank


def rank(m: ExactMatrix) -> int:
    return m.rank()


def multiply(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a.multiply(b)


def inverse(m: ExactMatrix) -> ExactMatrix:
    return m.inverse()


def assemble_blocks(layout, row_sizes, col_sizes, field: Field | None = None) -> ExactMatrix:
    """Assemble a block matrix from a grid of optional blocks.

    ``layout`` is a sequence of block rows, each a sequence of blocks where
    ``None`` stands for a zero block of the slot's size.  Present blocks must
    match their (row_size, col_size) slot exactly and share one field.
    """
    row_sizes = list(row_sizes)
    col_sizes = list(col_sizes)
    grid = [list(r) for r in layout]
    if len(grid) != len(row_sizes):
        raise ShapeError("block grid height does not match row sizes")
    for r in grid:
        if len(r) != len(col_sizes):
            raise ShapeError("block grid width does not match column sizes")
    for bi, brow in enumerate(grid):
        for bj, blk in enumerate(brow):
            if blk is None:
                continue
            if (blk.rows, blk.cols) != (row_sizes[bi], col_sizes[bj]):
                raise ShapeError(
                    f"block ({bi},{bj}) is {blk.rows}x{blk.cols}, "
                    f"slot wants {row_sizes[bi]}x{col_sizes[bj]}"
                )
            if field is None:
                field = blk.field
            elif blk.field != field:
                raise FieldMismatchError("blocks over mismatched fields")
    if field is None:
        raise InputError("cannot infer field for an all-zero block assembly")
    z = field.zero()
    total_rows = sum(row_sizes)
    total_cols = sum(col_sizes)
    data = [[z] * total_cols for _ in range(total_rows)]
    roff = 0
    for bi, brow in enumerate(grid):
        coff = 0
        for bj, blk in enumerate(brow):
            if blk is not None:
                for i in range(blk.rows):
                    drow = data[roff + i]
                    srow = blk.data[i]
                    for j in range(blk.cols):
                        drow[coff + j] = srow[j]
            coff += col_sizes[bj]
        roff += row_sizes[bi]
    return ExactMatrix(field, total_rows, total_cols, data)


def prefix_block_ranks(m: ExactMatrix, row_cuts, col_cuts):
    """Ranks of all northwest-justified submatrices at the given cut lines.

    Returns a grid ``g`` with ``g[a][b] = rank of m[:row_cuts[a], :col_cuts[b]]``.
    One elimination per row cut suffices: the pivot-column profile of a row
    prefix yields every column-prefix rank at once.
    """
    f = m.field
    cols = m.cols
    out = []
    gf2 = isinstance(f, PrimeField) and f.p == 2
    for rc in row_cuts:
        if gf2:
            pivot_cols = _pivot_cols_gf2(_bitrows(m.data[:rc], cols), cols)
        elif isinstance(f, PrimeField):
            pivot_cols = _pivot_cols_mod_p([list(r) for r in m.data[:rc]], cols, f.p)
        else:
            pivot_cols = _pivot_cols_fractions([list(r) for r in m.data[:rc]], cols)
        counts = []
        for cc in col_cuts:
            counts.append(sum(1 for c in pivot_cols if c < cc))
        out.append(tuple(counts))
    return tuple(out)


def _pivot_cols_gf2(bitrows, cols):
    pivots = {}
    for v in bitrows:
        while v:
            b = v.bit_length()
            p = pivots.get(b)
            if p is None:
                pivots[b] = v
                break
            v ^= p
    return [cols - b for b in pivots]


def _pivot_cols_mod_p(rows, cols, p):
    m = len(rows)
    lead = 0
    pivot_cols = []
    for col in range(cols):
        piv = None
        for r in range(lead, m):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        prow = rows[lead]
        pinv = pow(prow[col], p - 2, p)
        for r in range(lead + 1, m):
            c = rows[r][col] % p
            if c:
                factor = (c * pinv) % p
                vr = rows[r]
                for k in range(col, cols):
                    vr[k] = (vr[k] - factor * prow[k]) % p
        pivot_cols.append(col)
        lead += 1
        if lead == m:
            break
    return pivot_cols


def _pivot_cols_fractions(rows, cols):
    m = len(rows)
    lead = 0
    pivot_cols = []
    for col in range(cols):
        piv = None
        for r in range(lead, m):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        prow = rows[lead]
        pv = prow[col]
        for r in range(lead + 1, m):
            c = rows[r][col]
            if c != 0:
                factor = c / pv
                vr = rows[r]
                for k in range(col, cols):
                    vr[k] = vr[k] - factor * prow[k]
        pivot_cols.append(col)
        lead += 1
        if lead == m:
            break
    return pivot_cols
