"""Permutation combinatorics: lengths, diagrams, essential sets, Bruhat
order, and the block-structured permutation attached to a block rank matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ShapeError
from .quiver import DimensionVector, d_x, d_y


@dataclass(frozen=True)
class Permutation:
    """One-line notation: ``word[i-1]`` is the image of i (all 1-based).

    The matrix view has a 1 in position (i, word[i-1]).
    """

    word: tuple[int, ...]

    def __post_init__(self):
        d = len(self.word)
        if sorted(self.word) != list(range(1, d + 1)):
            raise InputError(f"{self.word} is not a permutation of 1..{d}")

    @staticmethod
    def identity(d: int) -> "Permutation":
        return Permutation(tuple(range(1, d + 1)))

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.size != other.size:
            raise ShapeError("composition of permutations of different sizes")
        return Permutation(tuple(self.word[v - 1] for v in other.word))


def inversion_length(p: Permutation) -> int:
    """Number of pairs i < j with p(i) > p(j)."""
    w = p.word
    d = len(w)
    return sum(1 for i in range(d) for j in range(i + 1, d) if w[i] > w[j])


def diagram(p: Permutation) -> frozenset[tuple[int, int]]:
    """Boxes (i, j) with no 1 weakly north in the column or weakly west in
    the row; the box count equals the length."""
    w = p.word
    inv = p.inverse().word
    d = len(w)
    return frozenset(
        (i, j)
        for i in range(1, d + 1)
        for j in range(1, d + 1)
        if w[i - 1] > j and inv[j - 1] > i
    )


def essential_set(p: Permutation) -> frozenset[tuple[int, int]]:
    """Southeast-maximal boxes of the diagram."""
    dia = diagram(p)
    return frozenset((i, j) for (i, j) in dia if (i + 1, j) not in dia and (i, j + 1) not in dia)


def rank_table(p: Permutation):
    """r[i][j] = number of k <= i with p(k) <= j, with padding row/col 0."""
    d = p.size
    r = [[0] * (d + 1) for _ in range(d + 1)]
    for i in range(1, d + 1):
        pi = p.word[i - 1]
        for j in range(1, d + 1):
            r[i][j] = r[i - 1][j] + (1 if pi <= j else 0)
    return r


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Dominance criterion: u <= v iff every northwest rank count of u is at
    least the corresponding count of v."""
    if u.size != v.size:
        raise ShapeError("Bruhat comparison of permutations of different sizes")
    ru = rank_table(u)
    rv = rank_table(v)
    d = u.size
    for i in range(1, d + 1):
        rui = ru[i]
        rvi = rv[i]
        for j in range(1, d + 1):
            if rui[j] < rvi[j]:
                return False
    return True


def w_of(dims: DimensionVector) -> Permutation:
    """The block antidiagonal [[0, 1_dy],[1_dx, 0]] as a permutation."""
    dx = d_x(dims)
    dy = d_y(dims)
    word = tuple(range(dx + 1, dx + dy + 1)) + tuple(range(1, dx + 1))
    return Permutation(word)


@dataclass(frozen=True)
class BlockSpec:
    """Row and column block sizes partitioning 1..d."""

    row_sizes: tuple[int, ...]
    col_sizes: tuple[int, ...]

    def __post_init__(self):
        if sum(self.row_sizes) != sum(self.col_sizes):
            raise ShapeError("row and column blocks partition different totals")

    @property
    def total(self) -> int:
        return sum(self.row_sizes)

    @property
    def row_starts(self) -> tuple[int, ...]:
        out, acc = [], 1
        for s in self.row_sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    @property
    def col_starts(self) -> tuple[int, ...]:
        out, acc = [], 1
        for s in self.col_sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    def row_block_of(self, i: int) -> int:
        acc = 0
        for bi, s in enumerate(self.row_sizes, start=1):
            acc += s
            if i <= acc:
                return bi
        raise InputError(f"row {i} outside the blocks")

    def col_block_of(self, j: int) -> int:
        acc = 0
        for bj, s in enumerate(self.col_sizes, start=1):
            acc += s
            if j <= acc:
                return bj
        raise InputError(f"column {j} outside the blocks")


def zelevinsky_permutation(b, blocks: BlockSpec) -> Permutation:
    """The unique permutation whose block (i, j) holds the second difference
    of the block rank matrix, with 1s running northwest to southeast along
    every block row and down every block column.

    Sweeping blocks in reading order and greedily assigning the lowest
    unused row of the block row and lowest unused column of the block
    column realizes that arrangement.
    """
    nb = len(blocks.row_sizes)
    if len(blocks.col_sizes) != nb or nb != 2 * b.n + 1:
        raise ShapeError("block spec does not match the block rank matrix")
    d = blocks.total
    word = [0] * d
    row_starts = blocks.row_starts
    col_starts = blocks.col_starts
    next_row = list(row_starts)  # next free row per block row
    free_cols = [list(range(col_starts[j], col_starts[j] + blocks.col_sizes[j])) for j in range(nb)]
    used_cols = [0] * nb
    for bi in range(1, nb + 1):
        for bj in range(1, nb + 1):
            count = b.block_count(bi, bj)
            if count < 0:
                raise InputError(f"negative block count at ({bi},{bj})")
            if count == 0:
                continue
            cols = free_cols[bj - 1]
            if used_cols[bj - 1] + count > len(cols):
                raise InputError(f"block column {bj} cannot hold {count} more 1s")
            if next_row[bi - 1] + count - 1 >= row_starts[bi - 1] + blocks.row_sizes[bi - 1]:
                raise InputError(f"block row {bi} cannot hold {count} more 1s")
            for _ in range(count):
                r = next_row[bi - 1]
                c = cols[used_cols[bj - 1]]
                word[r - 1] = c
                next_row[bi - 1] += 1
                used_cols[bj - 1] += 1
    if 0 in word:
        raise InputError("block counts do not fill the permutation")
    return Permutation(tuple(word))


def length_from_blocks(b) -> int:
    """Length of the block permutation straight from the block rank matrix:
    over all blocks, (1s strictly northeast) times (1s inside)."""
    k = 2 * b.n + 1
    total = 0
    for i in range(2, k + 1):
        for j in range(1, k):
            ne = b.entry(i - 1, k) - b.entry(i - 1, j)
            if ne:
                total += ne * b.block_count(i, j)
    return total


def is_block_minimal(p: Permutation, blocks: BlockSpec) -> bool:
    """True when the 1s run northwest to southeast within every block row
    and every block column."""
    if blocks.total != p.size:
        raise ShapeError("block spec does not match the permutation size")
    d = p.size
    last_col_in_row_block: dict[int, int] = {}
    for i in range(1, d + 1):
        bi = blocks.row_block_of(i)
        c = p(i)
        if bi in last_col_in_row_block and c < last_col_in_row_block[bi]:
            return False
        last_col_in_row_block[bi] = c
    inv = p.inverse()
    last_row_in_col_block: dict[int, int] = {}
    for j in range(1, d + 1):
        bj = blocks.col_block_of(j)
        r = inv(j)
        if bj in last_row_in_col_block and r < last_row_in_col_block[bj]:
            return False
        last_row_in_col_block[bj] = r
    return True
