import itertools

import pytest

from orienteq import (
    InvalidEdgeError,
    InvalidInputError,
    Multigraph,
    activities,
    connected_components,
    fundamental_cut,
    fundamental_cycle,
    spanning_forests,
)
from orienteq.corpus import named_graphs

NG = named_graphs()


def view(name):
    return NG[name].full_view()


def test_delete_examples():
    c3 = view("C3")
    after = c3.delete(3)
    assert after.present_edges() == [1, 2]
    assert len(connected_components(after)) == 1

    d2 = view("D2")
    assert d2.delete(2).is_bridge(1)

    l1 = view("L1")
    assert l1.delete(1).present_edges() == []


def test_delete_requires_present_edge():
    c3 = view("C3")
    with pytest.raises(InvalidEdgeError):
        c3.delete(3).delete(3)
    with pytest.raises(InvalidEdgeError):
        c3.delete(7)


def test_contract_examples():
    c3 = view("C3")
    digon = c3.contract(3)
    assert digon.present_edges() == [1, 2]
    assert digon.cls(0) == digon.cls(2)
    assert sorted(digon.classes()) == [0, 1]

    d2 = view("D2")
    after = d2.contract(1)
    assert after.is_view_loop(2)

    # contracting a loop is deletion
    l1 = view("L1")
    assert l1.contract(1) == l1.delete(1)


def test_bridge_and_loop_predicates():
    assert view("B1").is_bridge(1)
    c3 = view("C3")
    assert not c3.is_bridge(1) and not c3.is_view_loop(1)
    nested = c3.contract(3).contract(2)
    assert nested.is_view_loop(1)


def test_connected_components():
    c3 = view("C3")
    assert len(connected_components(c3)) == 1
    assert connected_components(c3, edge_subset=[3]) == [
        frozenset({0, 2}),
        frozenset({1}),
    ]
    empty = Multigraph(3, ()).full_view()
    assert len(connected_components(empty)) == 3


def test_spanning_forests():
    assert spanning_forests(view("C3")) == [(1, 2), (1, 3), (2, 3)]
    assert spanning_forests(view("D2")) == [(1,), (2,)]
    assert len(spanning_forests(view("K4"))) == 16


def test_fundamental_cut():
    c3 = view("C3")
    assert fundamental_cut(c3, (1, 2), 1) == {1, 3}
    assert fundamental_cut(c3, (2, 3), 2) == {1, 2}
    assert fundamental_cut(view("B1"), (1,), 1) == {1}
    with pytest.raises(InvalidInputError):
        fundamental_cut(c3, (1, 2), 3)


def test_fundamental_cycle():
    c3 = view("C3")
    assert fundamental_cycle(c3, (2, 3), 1) == {1, 2, 3}
    assert fundamental_cycle(view("D2"), (1,), 2) == {1, 2}
    assert fundamental_cycle(view("L1"), (), 1) == {1}
    # adding an edge across components has no cycle
    two = Multigraph(3, ((0, 1), (1, 2))).full_view()
    with pytest.raises(InvalidInputError):
        fundamental_cycle(two, (1,), 2)


def test_activities_table_c3():
    c3 = view("C3")
    assert activities(c3, (1, 2)) == (2, 0)
    assert activities(c3, (1, 3)) == (1, 0)
    assert activities(c3, (2, 3)) == (0, 1)


def test_cut_and_cycle_contain_their_edge():
    for name in ("C3", "D2", "P3E", "K4", "theta"):
        v = view(name)
        for forest in spanning_forests(v):
            for e in forest:
                assert e in fundamental_cut(v, forest, e)
            for e in v.present_edges():
                if e not in forest:
                    assert e in fundamental_cycle(v, forest, e)


def test_delete_contract_commute():
    for name in ("C3", "K4", "P3E", "theta"):
        v = view(name)
        for a, b in itertools.permutations(v.present_edges(), 2):
            if v.contract(b).is_present(a) and v.delete(a).is_present(b):
                left = v.delete(a).contract(b)
                right = v.contract(b).delete(a)
                assert left.status == right.status
                assert left.cls_of == right.cls_of


def test_forest_count_is_order_independent():
    g = NG["K4"]
    base_count = len(spanning_forests(g.full_view()))
    for order in ((6, 5, 4, 3, 2, 1), (2, 4, 6, 1, 3, 5)):
        assert len(spanning_forests(g.reorder(order).full_view())) == base_count


def test_endpoint_validation():
    with pytest.raises(InvalidInputError):
        Multigraph(2, ((0, 5),))
