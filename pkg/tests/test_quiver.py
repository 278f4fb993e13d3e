import pytest
from hypothesis import given
from hypothesis import strategies as st

from qloci import (
    BipartiteQuiver,
    DimensionVector,
    InputError,
    Interval,
    TypeAQuiver,
    enumerate_intervals,
    interval_join,
    interval_meet,
    interval_table,
)
from qloci.quiver import edge_name, edge_pos, vertex_name, vertex_pos
from qloci.serde import interval_from_json, interval_to_json


def J(first_edge, last_edge):
    return Interval.from_edges(first_edge, last_edge)


def test_enumerate_intervals_n1():
    names = [j.name() for j in enumerate_intervals(BipartiteQuiver(1))]
    assert names == ["y0", "x1", "y1", "[a1]", "[a1,b1]", "[b1]"]


def test_enumerate_intervals_counts():
    assert len(enumerate_intervals(BipartiteQuiver(2))) == 15
    assert len(enumerate_intervals(BipartiteQuiver(0))) == 1


@pytest.mark.parametrize("n", range(5))
def test_enumeration_matches_naive_double_loop(n):
    got = set(enumerate_intervals(BipartiteQuiver(n)))
    want = {Interval.vertex(p) for p in range(2 * n + 1)}
    for a in range(1, 2 * n + 1):
        for b in range(1, 2 * n + 1):
            if a <= b:
                want.add(Interval.from_edges(a, b))
    assert got == want


def test_vertex_and_edge_names():
    assert [vertex_name(p) for p in range(5)] == ["y0", "x1", "y1", "x2", "y2"]
    assert [edge_name(e) for e in range(1, 5)] == ["a1", "b1", "a2", "b2"]
    assert edge_name(0) == "b0"  # phantom left edge
    assert vertex_pos("x2") == 3 and edge_pos("b2") == 4
    with pytest.raises(InputError):
        vertex_pos("q7")


def test_shift_examples():
    assert J(3, 4).shift_left() == J(2, 3)  # [a2,b2] -> [b1,a2]
    assert J(1, 2).shift_left() == J(0, 1)  # [a1,b1] -> [b0,a1], b0 phantom
    assert J(1, 1).shift_right() == J(2, 2)  # [a1] -> [b1]
    with pytest.raises(InputError):
        Interval.vertex(2).shift_left()


def test_meet_join_examples():
    # shifts of J=[a1]: J_L = [b0], J_R = [b1]
    jl, jr = J(1, 1).shift_left(), J(1, 1).shift_right()
    assert interval_meet(jl, jr) is None
    assert interval_join(jl, jr) == J(0, 2)
    assert interval_meet(J(1, 2), J(2, 2)) == J(2, 2)
    assert interval_meet(J(1, 1), J(2, 2)) == Interval.vertex(1)


def test_arrow_count():
    assert Interval.vertex(0).arrow_count == 0
    assert J(1, 2).arrow_count == 2
    assert J(0, 2).arrow_count == 3  # [b0,b1] with phantom b0


spans = st.tuples(st.integers(0, 7), st.integers(0, 7)).map(
    lambda t: Interval(min(t), max(t) + 1)
)


@given(spans)
def test_shift_round_trip(j):
    assert j.shift_left().shift_right() == j
    assert j.shift_right().shift_left() == j


@given(spans)
def test_meet_join_arrow_count_relations(j):
    jl, jr = j.shift_left(), j.shift_right()
    meet = interval_meet(jl, jr)
    join = interval_join(jl, jr)
    assert join.arrow_count == j.arrow_count + 2
    if meet is not None:
        assert join.arrow_count - meet.arrow_count == 4
    # against a single shift the counts differ by two
    meet_l = interval_meet(j, jl)
    assert meet_l is not None
    assert interval_join(j, jl).arrow_count - meet_l.arrow_count == 2


def test_truncate():
    assert J(1, 2).truncate(1) == J(1, 2)
    assert Interval(0, 3).truncate(1) == Interval(0, 2)  # clip phantom a2
    assert Interval(-1, 0).truncate(1) == Interval.vertex(0)
    assert Interval(3, 3).truncate(1) is None or Interval(3, 3).truncate(1).is_vertex


def test_interval_table_shift_rows_signs():
    table = interval_table(2)
    for k, j in enumerate(table.arrow_intervals):
        sign = table.shift_rows[k][0]
        assert sign == (1 if j.arrow_count % 2 == 0 else -1)


def test_interval_json_round_trip():
    for j in enumerate_intervals(BipartiteQuiver(2)):
        assert interval_from_json(interval_to_json(j)) == j
    assert interval_to_json(Interval.vertex(0)) == {"vertex": "y0"}
    assert interval_to_json(J(1, 4)) == {"left": "a1", "right": "b2"}


def test_type_a_quiver():
    q = TypeAQuiver("RRLL")
    assert q.vertex_count == 5
    assert q.head_vertex(1) == 1 and q.tail_vertex(1) == 0
    assert q.head_vertex(3) == 2 and q.tail_vertex(3) == 3
    assert not q.is_bipartite()
    assert TypeAQuiver("LR").is_bipartite()
    with pytest.raises(InputError):
        TypeAQuiver("RX")


def test_dimension_vector():
    d = DimensionVector.of(1, 2, 3)
    assert d[1] == 2 and len(d) == 3
    with pytest.raises(InputError):
        DimensionVector.of(1, -1)
