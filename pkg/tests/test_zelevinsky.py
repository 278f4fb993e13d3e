import random
from itertools import product

import pytest

from qloci import (
    BipartiteQuiver,
    DimensionVector,
    ExactMatrix,
    GF2,
    InvalidBlockRankError,
    QQ,
    Representation,
    block_rank_numeric,
    block_rank_symbolic,
    cell_matrix_from_star,
    defining_minor_specs,
    interval_table,
    layout_for,
    rank_array,
    recover_rank_array,
    zelevinsky_map,
    zero_rep,
)
from qloci.errors import InputError
from qloci.oracle import iter_reps
from qloci.quiver import Interval, d_x, d_y
from qloci.reps import RankArray
from qloci.zelevinsky import BlockRankMatrix


def rep1(a1, b1, field=QQ):
    q = BipartiteQuiver(1)
    return Representation(
        q,
        DimensionVector.of(1, 1, 1),
        (ExactMatrix.from_rows(field, [[a1]]), ExactMatrix.from_rows(field, [[b1]])),
    )


def rank1(a, b, c):
    table = interval_table(1)
    vals = [0] * len(table)
    vals[table.index[Interval.from_edges(1, 1)]] = a
    vals[table.index[Interval.from_edges(2, 2)]] = b
    vals[table.index[Interval.from_edges(1, 2)]] = c
    return RankArray(1, tuple(vals))


def test_map_zero_rep_n1():
    z = zelevinsky_map(zero_rep(BipartiteQuiver(1), DimensionVector.of(1, 1, 1)))
    assert [[int(v) for v in row] for row in z.matrix.data] == [
        [0, 1, 0],
        [0, 0, 1],
        [1, 0, 0],
    ]


def test_map_dense_rep_n1():
    z = zelevinsky_map(rep1(1, 1))
    assert [[int(v) for v in row] for row in z.matrix.data] == [
        [1, 1, 0],
        [1, 0, 1],
        [1, 0, 0],
    ]


def test_block_rank_numeric_n1():
    z = zelevinsky_map(zero_rep(BipartiteQuiver(1), DimensionVector.of(1, 1, 1)))
    assert block_rank_numeric(z).entries == ((0, 1, 1), (0, 1, 2), (1, 2, 3))
    z = zelevinsky_map(rep1(1, 1))
    assert block_rank_numeric(z).entries == ((1, 1, 1), (1, 2, 2), (1, 2, 3))


def test_block_rank_symbolic_n1():
    d = DimensionVector.of(1, 1, 1)
    assert block_rank_symbolic(rank1(1, 1, 1), d).entries == (
        (1, 1, 1),
        (1, 2, 2),
        (1, 2, 3),
    )
    zero = zero_rep(BipartiteQuiver(1), d)
    assert block_rank_symbolic(rank1(0, 0, 0), d) == block_rank_numeric(zelevinsky_map(zero))


def test_route_agreement_n1_exhaustive_gf2():
    q = BipartiteQuiver(1)
    for dims in product(range(3), repeat=3):
        d = DimensionVector(dims)
        for v in iter_reps(q, d, 2):
            assert block_rank_symbolic(rank_array(v), d) == block_rank_numeric(zelevinsky_map(v))


def test_cell_conditions_on_random_star():
    # forced entries hold for any element of the cell, not only embedded ones
    rng = random.Random(9)
    q = BipartiteQuiver(2)
    for dims in [(1, 1, 1, 1, 1), (2, 1, 2, 1, 1), (0, 2, 1, 1, 2)]:
        d = DimensionVector(dims)
        lay = layout_for(q, d)
        dy, dx = d_y(d), d_x(d)
        star = ExactMatrix.from_rows(
            QQ, [[rng.randint(-3, 3) for _ in range(dx)] for _ in range(dy)]
        )
        z = cell_matrix_from_star(star, lay)
        b = block_rank_numeric(z)
        n = q.n
        k = 2 * n + 1
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                ri = lay.row_positions[i - 1]
                cj = lay.col_positions[j - 1]
                if ri % 2 == 1 and cj % 2 == 1:
                    # both source blocks: forced once the row index is at or
                    # below the column index, to the total width remaining
                    xi, xj = (ri + 1) // 2, (cj + 1) // 2
                    if xi <= xj:
                        want = sum(d[2 * t - 1] for t in range(xj, n + 1))
                        assert b.entry(i, j) == want
                if ri % 2 == 0 and cj % 2 == 0:
                    yi, yj = ri // 2, cj // 2
                    if yj >= yi:
                        want = sum(d[2 * t] for t in range(0, yi + 1))
                        assert b.entry(i, j) == want
        # bottom block row and last block column are fully pivoted
        assert tuple(b.entries[k - 1]) == lay.col_cuts
        assert tuple(row[k - 1] for row in b.entries) == lay.row_cuts
        assert b.entry(k, k) == dy + dx


def test_image_conditions_characterize_the_image():
    # over F_2 at n=2, a cell matrix is an embedded representation exactly
    # when the forced entries match, i.e. recover_rank_array accepts it
    q = BipartiteQuiver(2)
    d = DimensionVector.of(1, 1, 1, 1, 1)
    lay = layout_for(q, d)
    dy, dx = d_y(d), d_x(d)
    embedded_keys = set()
    for v in iter_reps(q, d, 2):
        embedded_keys.add(zelevinsky_map(v).matrix.key())
    accepted = 0
    total = 0
    for bits in product(range(2), repeat=dy * dx):
        star = ExactMatrix.from_rows(
            GF2, [list(bits[i * dx : (i + 1) * dx]) for i in range(dy)]
        )
        z = cell_matrix_from_star(star, lay)
        total += 1
        try:
            recover_rank_array(block_rank_numeric(z), d)
            ok = True
        except InvalidBlockRankError:
            ok = False
        if ok:
            accepted += 1
            assert z.matrix.key() in embedded_keys
    assert accepted == len(embedded_keys)
    assert total == 2 ** (dy * dx)


def test_monotone_staircase_property():
    q = BipartiteQuiver(2)
    for dims in [(1, 1, 1, 1, 1), (2, 2, 2, 2, 2), (0, 1, 2, 1, 0)]:
        d = DimensionVector(dims)
        count = 0
        for v in iter_reps(q, d, 2):
            b = block_rank_numeric(zelevinsky_map(v))
            assert b.is_monotone_staircase()
            count += 1
            if count > 200:
                break


def test_recover_round_trip_exhaustive_small():
    from qloci.poset import iter_lace_values
    from qloci.reps import LaceArray, lace_to_rank

    for n in (1, 2):
        q = BipartiteQuiver(n)
        for dims in product(range(3), repeat=2 * n + 1):
            d = DimensionVector(dims)
            for values in iter_lace_values(q, d):
                r = lace_to_rank(LaceArray(n, values))
                b = block_rank_symbolic(r, d)
                assert recover_rank_array(b, d) == r


def test_recover_rejects_violated_forced_entry():
    d = DimensionVector.of(1, 1, 1)
    b = block_rank_symbolic(rank1(1, 0, 1), d)
    rows = [list(r) for r in b.entries]
    rows[2][0] += 1  # cell-forced corner
    bad = BlockRankMatrix(1, tuple(tuple(r) for r in rows))
    with pytest.raises(InvalidBlockRankError):
        recover_rank_array(bad, d)


def test_minor_specs_examples():
    d = DimensionVector.of(1, 1, 1)
    specs = defining_minor_specs(rank1(1, 0, 1), d)
    by_source = {s.source: s for s in specs}
    b1 = by_source["interval [b1]"]
    assert b1.size == 1
    assert b1.rows == (2,) and b1.cols == (1,)

    dense = defining_minor_specs(rank1(1, 1, 1), d)
    for s in dense:
        if s.source.startswith("interval"):
            assert s.size > min(len(s.rows), len(s.cols)) or s.size > 0

    zero = defining_minor_specs(rank1(0, 0, 0), d)
    for s in zero:
        if s.source.startswith("interval"):
            assert s.size == 1


def test_minor_specs_block_regions_are_prefixes():
    d = DimensionVector.of(1, 2, 1, 1, 1)
    q = BipartiteQuiver(2)
    r = rank_array(zero_rep(q, d))
    lay = layout_for(q, d)
    for s in defining_minor_specs(r, d):
        if s.source.startswith("block"):
            assert s.rows == tuple(range(1, len(s.rows) + 1))
            assert s.cols == tuple(range(1, len(s.cols) + 1))
            assert len(s.rows) in lay.row_cuts and len(s.cols) in lay.col_cuts


def test_cell_matrix_validation():
    q = BipartiteQuiver(1)
    d = DimensionVector.of(1, 1, 1)
    lay = layout_for(q, d)
    bad = ExactMatrix.from_rows(QQ, [[0, 1, 0], [0, 0, 1], [1, 0, 1]])
    with pytest.raises(InputError):
        from qloci.zelevinsky import ZelevinskyCellMatrix

        ZelevinskyCellMatrix(bad, lay)
