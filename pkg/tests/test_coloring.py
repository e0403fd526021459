import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domchrom.coloring import (
    Coloring,
    classes_dominated_by,
    dominators_of_class,
    is_domination_coloring,
    is_proper,
)
from domchrom.graph import Graph, enumerate_connected_graphs, from_edges, make_named


def test_coloring_normalizes_gaps():
    c = Coloring([0, 5, 5, 2])
    assert c.assignment == (0, 1, 1, 2)
    assert c.class_count == 3
    assert c.classes == (0b0001, 0b0110, 0b1000)


def test_coloring_text_round_trip():
    c = Coloring.from_text("0,1,0,1")
    assert c.to_text() == "0,1,0,1"
    with pytest.raises(ValueError) as exc:
        Coloring.from_text("0,x,1")
    assert "byte offset 2" in str(exc.value)
    with pytest.raises(ValueError):
        Coloring([-1, 0])


def test_is_proper_examples():
    c4 = make_named("cycle", 4)
    assert is_proper(c4, Coloring([0, 1, 0, 1]))
    assert not is_proper(make_named("complete", 2), Coloring([0, 0]))
    assert is_proper(make_named("complete", 4), Coloring([0, 1, 2, 3]))
    with pytest.raises(ValueError):
        is_proper(c4, Coloring([0, 1, 0]))


def test_dominators_of_class_examples():
    p3 = make_named("path", 3)  # 0-1-2
    ends_then_mid = Coloring([0, 1, 0])
    assert dominators_of_class(p3, ends_then_mid, 0) == {1}
    k5 = make_named("complete", 5)
    singleton_first = Coloring([0, 1, 1, 1, 1])
    assert dominators_of_class(k5, singleton_first, 0) == {0, 1, 2, 3, 4}
    c6 = make_named("cycle", 6)
    antipodal = Coloring([0, 1, 2, 0, 3, 4])
    assert dominators_of_class(c6, antipodal, 0) == set()
    with pytest.raises(ValueError):
        dominators_of_class(p3, ends_then_mid, 2)


def test_classes_dominated_by_examples():
    star = make_named("star", 3)
    hub_vs_leaves = Coloring([0, 1, 1, 1])
    assert classes_dominated_by(star, hub_vs_leaves, 0) == {0, 1}
    p4 = make_named("path", 4)
    bipartition = Coloring([0, 1, 0, 1])
    assert classes_dominated_by(p4, bipartition, 0) == set()
    # a vertex always dominates its own singleton class
    for g in enumerate_connected_graphs(4):
        c = Coloring([0, 1, 2, 3])
        for v in range(4):
            assert v in dominators_of_class(g, c, v)
            assert v in classes_dominated_by(g, c, v)


def test_is_domination_coloring_examples():
    ok, diag = is_domination_coloring(make_named("cycle", 4), Coloring([0, 1, 0, 1]))
    assert ok and diag.ok
    ok, diag = is_domination_coloring(make_named("path", 4), Coloring([0, 1, 0, 1]))
    assert not ok
    assert diag.undominating_vertices == (0, 3)
    assert diag.undominated_classes == ()
    assert diag.improper_edges == ()
    ok, _ = is_domination_coloring(make_named("complete", 4), Coloring([0, 1, 2, 3]))
    assert ok


def test_diagnostic_fully_populated():
    # improper, undominated and undominating findings all reported at once
    c6 = make_named("cycle", 6)
    bad = Coloring([0, 0, 1, 2, 1, 2])
    ok, diag = is_domination_coloring(c6, bad)
    assert not ok
    assert (0, 1) in diag.improper_edges
    p4 = make_named("path", 4)
    ok, diag = is_domination_coloring(p4, Coloring([0, 1, 0, 1]))
    assert len(diag.undominating_vertices) == 2


def _random_graph_and_coloring(draw, nmin=2, nmax=6):
    n = draw(st.integers(nmin, nmax))
    nbits = n * (n - 1) // 2
    code = draw(st.integers(0, (1 << nbits) - 1))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    masks = [0] * n
    for t, (i, j) in enumerate(pairs):
        if (code >> t) & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    g = Graph(n, masks)
    colors = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return g, Coloring(colors)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_duality_of_domination_queries(data):
    g, c = _random_graph_and_coloring(data.draw)
    for v in range(g.n):
        for i in range(c.class_count):
            assert (v in dominators_of_class(g, c, i)) == (
                i in classes_dominated_by(g, c, v)
            )


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_diagnostic_iff_definition(data):
    # the boolean verdict must agree with first-principles set arithmetic
    g, c = _random_graph_and_coloring(data.draw)
    proper = is_proper(g, c)
    vertex_ok = all(classes_dominated_by(g, c, v) for v in range(g.n))
    class_ok = all(dominators_of_class(g, c, i) for i in range(c.class_count))
    ok, diag = is_domination_coloring(g, c)
    assert ok == (proper and vertex_ok and class_ok)
    assert diag.ok == ok
    assert (not diag.improper_edges) == proper


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_adding_edge_preserves_domination_coloring(data):
    g, c = _random_graph_and_coloring(data.draw)
    ok, _ = is_domination_coloring(g, c)
    if not ok:
        return
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) or c.assignment[u] == c.assignment[v]:
                continue
            bigger = from_edges(g.n, g.edges() + [(u, v)])
            assert is_domination_coloring(bigger, c)[0]


def test_all_singletons_is_domination_coloring():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            ok, _ = is_domination_coloring(g, Coloring(range(n)))
            assert ok
