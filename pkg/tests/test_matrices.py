import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qloci import (
    ExactMatrix,
    FieldMismatchError,
    FieldScalar,
    GF2,
    GF3,
    PrimeField,
    QQ,
    ShapeError,
    SingularMatrixError,
    assemble_blocks,
)
from qloci.matrices import prefix_block_ranks


def mat(field, rows):
    return ExactMatrix.from_rows(field, rows)


def naive_fraction_rank(m):
    # independent oracle: plain Gaussian elimination with Fractions
    rows = [[Fraction(v) for v in row] for row in m.data]
    cols = m.cols
    rank = 0
    lead = 0
    for col in range(cols):
        piv = next((r for r in range(lead, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        for r in range(lead + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / rows[lead][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[lead])]
        lead += 1
        rank += 1
    return rank


def test_rank_identity():
    assert ExactMatrix.identity(QQ, 2).rank() == 2


def test_rank_zero_columns():
    assert ExactMatrix.zeros(QQ, 3, 0).rank() == 0
    assert ExactMatrix.zeros(GF2, 0, 5).rank() == 0


def test_rank_gf2_example():
    m = mat(GF2, [[1, 0], [0, 1], [1, 0]])
    assert m.rank() == 2


def test_multiply_identity():
    m = mat(QQ, [[2, 3], [5, 7]])
    assert ExactMatrix.identity(QQ, 2).multiply(m) == m


def test_multiply_empty_contraction():
    a = ExactMatrix.zeros(QQ, 2, 0)
    b = ExactMatrix.zeros(QQ, 0, 3)
    prod = a.multiply(b)
    assert (prod.rows, prod.cols) == (2, 3)
    assert prod.is_zero()


def test_multiply_example():
    a = mat(QQ, [[1, 1], [0, 1]])
    b = mat(QQ, [[1, 0], [1, 1]])
    assert a.multiply(b) == mat(QQ, [[2, 1], [1, 1]])


def test_multiply_shape_and_field_errors():
    a = mat(QQ, [[1, 2]])
    with pytest.raises(ShapeError):
        a.multiply(mat(QQ, [[1, 2]]))
    with pytest.raises(FieldMismatchError):
        a.multiply(mat(GF2, [[1], [0]]))


def test_inverse_examples():
    for size in range(4):
        ident = ExactMatrix.identity(QQ, size)
        assert ident.inverse() == ident
    assert mat(QQ, [[2]]).inverse() == mat(QQ, [["1/2"]])
    assert mat(QQ, [[1, 1], [0, 1]]).inverse() == mat(QQ, [[1, -1], [0, 1]])


def test_inverse_errors():
    with pytest.raises(ShapeError):
        mat(QQ, [[1, 2]]).inverse()
    with pytest.raises(SingularMatrixError):
        mat(QQ, [[1, 2], [2, 4]]).inverse()


def test_assemble_single_block():
    m = mat(QQ, [[1, 2], [3, 4]])
    assert assemble_blocks([[m]], [2], [2]) == m


def test_assemble_antidiagonal_identity_pattern():
    dy, dx = 2, 1
    w = assemble_blocks(
        [[None, ExactMatrix.identity(QQ, dy)], [ExactMatrix.identity(QQ, dx), None]],
        [dy, dx],
        [dx, dy],
    )
    assert w == mat(QQ, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_assemble_zero_fill_and_mismatch():
    a = mat(QQ, [[1]])
    out = assemble_blocks([[a, None], [None, a]], [1, 1], [1, 1])
    assert out == mat(QQ, [[1, 0], [0, 1]])
    with pytest.raises(ShapeError):
        assemble_blocks([[a, mat(QQ, [[1, 2]])]], [1], [1, 1])


def test_scalar_field_mismatch():
    a = FieldScalar.of(QQ, 1)
    b = FieldScalar.of(GF2, 1)
    with pytest.raises(FieldMismatchError):
        a + b
    assert (FieldScalar.of(GF3, 2) * FieldScalar.of(GF3, 2)).value == 1


def test_json_round_trip():
    m = mat(QQ, [[Fraction(1, 2), 3], [0, Fraction(-7, 5)]])
    assert ExactMatrix.from_json(m.to_json()) == m
    m2 = mat(GF3, [[1, 2], [0, 1]])
    assert ExactMatrix.from_json(m2.to_json()) == m2
    assert m2.to_json()["field"] == "Fp:3"


small_entries = st.integers(min_value=-9, max_value=9)


@st.composite
def random_matrix(draw, field=QQ, max_dim=5):
    rows = draw(st.integers(min_value=0, max_value=max_dim))
    cols = draw(st.integers(min_value=0, max_value=max_dim))
    data = draw(
        st.lists(
            st.lists(small_entries, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return ExactMatrix.from_rows(field, data)


@given(random_matrix())
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@given(random_matrix(max_dim=6))
def test_bareiss_agrees_with_naive_elimination(m):
    assert m.rank() == naive_fraction_rank(m)


@given(random_matrix(field=GF3, max_dim=5))
def test_modp_rank_agrees_with_independent_elimination(m):
    rows = [[int(v) % 3 for v in row] for row in m.data]
    rank = 0
    lead = 0
    for col in range(m.cols):
        piv = next((r for r in range(lead, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = 1 if rows[lead][col] == 1 else 2
        for r in range(lead + 1, len(rows)):
            c = rows[r][col]
            if c:
                f = (c * inv) % 3
                rows[r] = [(a - f * b) % 3 for a, b in zip(rows[r], rows[lead])]
        lead += 1
        rank += 1
    assert m.rank() == rank


def test_block_identity_rank_sums():
    rng = random.Random(5)
    for _ in range(20):
        sizes = [rng.randrange(0, 3) for _ in range(3)]
        grid = [[None] * 3 for _ in range(3)]
        for i in range(3):
            grid[i][i] = ExactMatrix.identity(QQ, sizes[i])
        m = assemble_blocks(grid, sizes, sizes, QQ)
        assert m.rank() == sum(sizes)


def test_inverse_round_trip():
    rng = random.Random(41)
    for size in range(1, 6):
        for _ in range(8):
            while True:
                m = ExactMatrix.from_rows(
                    QQ, [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
                )
                if m.rank() == size:
                    break
            assert m.inverse().multiply(m) == ExactMatrix.identity(QQ, size)
            assert m.multiply(m.inverse()) == ExactMatrix.identity(QQ, size)


def test_prefix_block_ranks_matches_direct_ranks():
    rng = random.Random(11)
    for field in (QQ, GF2, GF3):
        for _ in range(15):
            rows, cols = rng.randrange(1, 7), rng.randrange(1, 7)
            m = ExactMatrix.from_rows(
                field, [[rng.randrange(0, 5) for _ in range(cols)] for _ in range(rows)]
            )
            row_cuts = sorted(rng.sample(range(rows + 1), rng.randrange(1, rows + 2)))
            col_cuts = sorted(rng.sample(range(cols + 1), rng.randrange(1, cols + 2)))
            grid = prefix_block_ranks(m, row_cuts, col_cuts)
            for a, rc in enumerate(row_cuts):
                for b, cc in enumerate(col_cuts):
                    sub = ExactMatrix(field, rc, cc, [row[:cc] for row in m.data[:rc]])
                    assert grid[a][b] == sub.rank()


def test_prime_field_rejects_composite():
    from qloci import InputError

    with pytest.raises(InputError):
        PrimeField(6)
