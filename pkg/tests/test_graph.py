import pytest

from domchrom.graph import (
    CycleSpec,
    Graph,
    Graph6Error,
    bridges,
    cut_vertices,
    enumerate_connected_graphs,
    enumerate_cycles,
    from_edges,
    is_connected,
    make_named,
    parse_graph6,
    to_graph6,
)
from domchrom.ops import remove_edge, remove_vertex

# labeled connected graph counts for n = 1..6
CONNECTED_COUNTS = [1, 1, 4, 38, 728, 26704]


def test_from_edges_k2():
    g = from_edges(2, [(0, 1)])
    assert g.n == 2 and g.m == 1
    assert g.has_edge(0, 1)


def test_from_edges_c4_degrees():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert all(g.degree(v) == 2 for v in range(4))


def test_from_edges_collapses_duplicates():
    g = from_edges(3, [(0, 1), (0, 1), (1, 2)])
    assert g.m == 2


def test_from_edges_rejects_loop_and_range():
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])


def test_graph_rejects_asymmetric_masks():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])


def test_make_named_families():
    p4 = make_named("path", 4)
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    k4 = make_named("complete", 4)
    assert k4.m == 6
    star = make_named("star", 3)
    assert star.max_degree == 3 and star.min_degree == 1
    assert star.degree(0) == 3
    with pytest.raises(ValueError):
        make_named("cycle", 2)
    with pytest.raises(ValueError):
        make_named("mystery", 3)


def test_graph6_hand_encoded_values():
    # hand-encoded per the format: n=2 header 'A', single bit -> '_'
    assert to_graph6(make_named("complete", 2)) == "A_"
    assert to_graph6(make_named("complete", 4)) == "C~"
    assert parse_graph6("A_") == make_named("complete", 2)
    assert parse_graph6("C~") == make_named("complete", 4)
    empty3 = parse_graph6("B?")
    assert empty3.n == 3 and empty3.m == 0
    assert not is_connected(empty3)


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("")
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C~~")  # trailing garbage
    assert exc.value.offset == 2
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C")  # truncated body
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("B!")  # byte below 63
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A@")  # nonzero padding bits for K_2-complement
    assert exc.value.offset == 1


def test_graph6_round_trip_small_corpus():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            s = to_graph6(g)
            assert parse_graph6(s) == g
            assert to_graph6(parse_graph6(s)) == s


def test_is_connected():
    assert is_connected(make_named("path", 4))
    assert is_connected(make_named("complete", 1))
    assert not is_connected(from_edges(3, [(0, 1)]))


def test_cut_vertices_examples():
    assert cut_vertices(make_named("path", 4)) == {1, 2}
    assert cut_vertices(make_named("cycle", 4)) == set()
    assert cut_vertices(make_named("star", 3)) == {0}
    with pytest.raises(ValueError):
        cut_vertices(from_edges(3, [(0, 1)]))


def test_bridges_examples():
    assert bridges(make_named("path", 4)) == {(0, 1), (1, 2), (2, 3)}
    assert bridges(make_named("cycle", 4)) == set()
    assert bridges(make_named("complete", 4)) == set()
    with pytest.raises(ValueError):
        bridges(from_edges(3, [(0, 1)]))


def test_cut_structure_matches_removal_on_corpus():
    # v is a cut vertex iff deleting it disconnects; e is a bridge iff
    # deleting it disconnects (cross-check on all connected graphs n <= 6)
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            cuts = cut_vertices(g)
            for v in range(n):
                assert (v in cuts) == (not is_connected(remove_vertex(g, v)))
            brs = bridges(g)
            for e in g.edges():
                assert (e in brs) == (not is_connected(remove_edge(g, e)))


def test_enumerate_cycles_examples():
    c4 = make_named("cycle", 4)
    found = enumerate_cycles(c4, 4)
    assert len(found) == 1 and found[0].length == 4
    k4 = make_named("complete", 4)
    assert len(enumerate_cycles(k4, 3)) == 4  # brute-force count of triangles
    assert enumerate_cycles(make_named("path", 4), 4) == []


def test_enumerate_cycles_canonical_form():
    k4 = make_named("complete", 4)
    for c in enumerate_cycles(k4, 4):
        seq = c.vertices
        assert seq[0] == min(seq)
        assert seq[1] < seq[-1]
    # every cycle appears exactly once under rotation/reflection
    keys = set()
    for c in enumerate_cycles(k4, 4):
        key = frozenset(
            frozenset({c.vertices[i], c.vertices[(i + 1) % c.length]})
            for i in range(c.length)
        )
        assert key not in keys
        keys.add(key)


def test_enumerate_cycles_brute_force_cross_check():
    # independent count: try every vertex permutation of every subset
    from itertools import combinations, permutations

    for g in enumerate_connected_graphs(5):
        seen = set()
        for size in (3, 4, 5):
            for sub in combinations(range(5), size):
                for perm in permutations(sub):
                    if perm[0] != min(perm):
                        continue
                    edges = [
                        frozenset({perm[i], perm[(i + 1) % size]}) for i in range(size)
                    ]
                    if all(g.has_edge(*tuple(e)) for e in edges):
                        seen.add(frozenset(edges))
        assert len(enumerate_cycles(g, 5)) == len(seen)


def test_cycle_spec_validation():
    with pytest.raises(ValueError):
        CycleSpec((0, 1))
    with pytest.raises(ValueError):
        CycleSpec((0, 1, 1))
    c = CycleSpec((0, 1, 2))
    with pytest.raises(ValueError):
        c.validate(make_named("path", 3))
    c.validate(make_named("complete", 3))


def test_corpus_counts_and_agreement_with_connectivity_filter():
    # the union-find generator and the BFS connectivity filter must agree
    for n, want in enumerate(CONNECTED_COUNTS[:5], start=1):
        streamed = list(enumerate_connected_graphs(n))
        assert len(streamed) == want
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        filtered = []
        for code in range(1 << len(pairs)):
            masks = [0] * n
            for t, (i, j) in enumerate(pairs):
                if (code >> t) & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
            g = Graph(n, masks)
            if is_connected(g):
                filtered.append(g)
        assert streamed == filtered


def test_corpus_count_n6():
    assert sum(1 for _ in enumerate_connected_graphs(6)) == CONNECTED_COUNTS[5]


def test_generator_guard():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(8))
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(0))
