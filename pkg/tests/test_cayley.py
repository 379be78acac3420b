from collections import Counter

import pytest

from shufflegroups.cayley import build, edge_color, to_dot
from shufflegroups.errors import ResourceLimitError
from shufflegroups.group import bfs_enumerate
from shufflegroups.perm import apply_to_deck, identity
from shufflegroups.shuffles import ShuffleKind, in_shuffle, out_shuffle, power_shuffle


def square_deck():
    return build([("O", out_shuffle(2, 2)), ("I", in_shuffle(2, 2))])


def cube_deck(m=2):
    return build([("O_m2", power_shuffle(m, 3, 2, ShuffleKind.OUT)),
                  ("I_m2", power_shuffle(m, 3, 2, ShuffleKind.IN))])


def test_four_card_graph_is_a_cube():
    g = square_deck()
    assert g.num_vertices == 8 and g.num_edges == 16
    skeleton = g.undirected_skeleton()
    assert len(skeleton) == 12
    degree = Counter(v for e in skeleton for v in e)
    assert set(degree.values()) == {3}
    out_edges = {frozenset((u, v)) for u, v, s in g.edges if s == "O"}
    assert len(out_edges) == 4


def test_cuboctahedron():
    for m in (2, 3):
        g = cube_deck(m)
        assert g.num_vertices == 12 and g.num_edges == 24


def test_single_generator_cycle():
    g = build([("O", out_shuffle(2, 26))])
    assert g.num_vertices == 8
    succ = {u: v for u, v, _ in g.edges}
    seen, v = [], 0
    for _ in range(8):
        seen.append(v)
        v = succ[v]
    assert v == 0 and sorted(seen) == list(range(8))


def test_vertices_are_deck_arrangements():
    g = square_deck()
    assert g.arrangements[0] == (0, 1, 2, 3)
    for arr, el in zip(g.arrangements, g.elements):
        assert list(arr) == apply_to_deck(el, list(range(4)))
    assert len(set(g.arrangements)) == g.num_vertices


@pytest.mark.parametrize("graph", [square_deck, cube_deck])
def test_each_label_is_a_bijection(graph):
    g = graph()
    for label in g.generator_labels:
        edges = [(u, v) for u, v, s in g.edges if s == label]
        assert sorted(u for u, _ in edges) == list(range(g.num_vertices))
        assert sorted(v for _, v in edges) == list(range(g.num_vertices))


def test_vertex_count_matches_bfs():
    gens = [("O", power_shuffle(3, 3, 1, ShuffleKind.OUT)),
            ("I", power_shuffle(3, 3, 1, ShuffleKind.IN))]
    assert build(gens).num_vertices == bfs_enumerate(gens).order == 24


def test_cap():
    with pytest.raises(ResourceLimitError):
        build([("O", out_shuffle(2, 5)), ("I", in_shuffle(2, 5))], cap=100)


def test_dot_output():
    dot = to_dot(square_deck())
    lines = dot.splitlines()
    assert lines[0] == "digraph cayley {" and lines[-1] == "}"
    nodes = [l for l in lines if l.strip().endswith('";') and "->" not in l]
    edges = [l for l in lines if "->" in l]
    assert len(nodes) == 8 and len(edges) == 16
    assert '  "0,1,2,3";' in lines
    assert '  "0,1,2,3" -> "0,2,1,3" [label="O", color=red];' in lines
    assert sum("color=blue" in l for l in edges) == 8
    assert to_dot(square_deck()) == dot


def test_dot_cuboctahedron_counts():
    lines = to_dot(cube_deck()).splitlines()
    assert sum("->" in l for l in lines) == 24
    assert sum(l.endswith('";') and "->" not in l for l in lines) == 12


def test_trivial_group_graph():
    g = build([("e", identity(3))])
    assert g.num_vertices == 1 and g.edges == [(0, 0, "e")]
    dot = to_dot(g)
    assert dot.count("->") == 1 and "color=black" in dot


def test_edge_colors():
    assert edge_color("O") == "red"
    assert edge_color("I_4") == "blue"
    assert edge_color("B1") == "black"
