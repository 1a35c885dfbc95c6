import json
import math

import pytest
from hypothesis import given, strategies as st

from isgraph.errors import IndexOutOfRange, InvalidSpec
from isgraph.graphs import (
    SimpleGraph,
    complement,
    cycle_graph,
    cyclic_intersection_graph,
    induced_subgraph,
    intersection_subgroup_graph,
    path_graph,
    z_fragment_graph,
    z_vertex,
)
from isgraph.groups import build_group
from isgraph.lattice import enumerate_subgroups


def graph_of(spec):
    return intersection_subgroup_graph(enumerate_subgroups(build_group(spec)))


def naive_graph(spec):
    """Vertex and edge sets straight from the definition, on member sets."""
    subs = [frozenset(s.elements) for s in enumerate_subgroups(build_group(spec))]
    nontriv = [s for s in subs if len(s) > 1]
    verts = [h for h in nontriv if any(h & k == {0} for k in nontriv if k != h)]
    edges = {frozenset((h, k)) for h in verts for k in verts if h != k and h & k == {0}}
    return verts, edges


@pytest.mark.parametrize("spec", ["S3", "C12", "D4", "A4", "Q8xC3", "E3^2", "D6", "S4"])
def test_matches_definition(spec):
    L = enumerate_subgroups(build_group(spec))
    g = intersection_subgroup_graph(L)
    verts, edges = naive_graph(spec)
    assert g.n == len(verts)
    assert g.edge_count == len(edges)
    assert g.is_symmetric_irreflexive()


def test_examples():
    s3 = graph_of("S3")
    assert (s3.n, s3.edge_count) == (4, 6)
    assert sorted(s3.orders) == [2, 2, 2, 3]
    assert graph_of("Q8").n == 0
    assert graph_of("Q16").n == 0
    c12 = graph_of("C12")
    assert sorted(c12.orders) == [2, 3, 4]


def test_cyclic_fast_path():
    g = cyclic_intersection_graph(12)
    assert g.labels == ("2", "3", "4")
    assert g.edges() == [(0, 1), (1, 2)]
    for n in (8, 9, 5, 49, 1024):
        assert cyclic_intersection_graph(n).n == 0
    g = cyclic_intersection_graph(2310)
    assert g.n == 30
    for bad in (1, 10**9 + 1):
        with pytest.raises(InvalidSpec):
            cyclic_intersection_graph(bad)


@given(st.integers(2, 150))
def test_fast_path_matches_table(n):
    fast = cyclic_intersection_graph(n)
    table = graph_of(f"C{n}")
    assert sorted(fast.orders) == sorted(table.orders)
    at = {o: v for v, o in enumerate(table.orders)}
    for i, j in fast.edges():
        assert table.adjacent(at[fast.orders[i]], at[fast.orders[j]])
    assert fast.edge_count == table.edge_count


def test_z_fragment():
    g = z_fragment_graph(10)
    assert g.n == 9
    v = [z_vertex(m) for m in (10, 3, 5, 6)]
    assert [g.adjacent(v[i], v[i + 1]) for i in range(3)] == [True, True, True]
    assert not g.adjacent(v[0], v[2]) and not g.adjacent(v[0], v[3]) and not g.adjacent(v[1], v[3])
    g9 = z_fragment_graph(9)
    c = [z_vertex(m) for m in (2, 3, 4, 9)]
    assert all(g9.adjacent(c[i], c[(i + 1) % 4]) for i in range(4))
    assert not g9.adjacent(c[0], c[2]) and not g9.adjacent(c[1], c[3])
    g2 = z_fragment_graph(2)
    assert (g2.n, g2.edge_count) == (1, 0)
    with pytest.raises(InvalidSpec):
        z_fragment_graph(1)


@given(st.integers(2, 40))
def test_z_fragment_gcd(n):
    g = z_fragment_graph(n)
    for a in range(2, n + 1):
        for b in range(2, n + 1):
            assert g.adjacent(z_vertex(a), z_vertex(b)) == (a != b and math.gcd(a, b) == 1)


def test_induced_subgraph():
    g = cycle_graph(5)
    h = induced_subgraph(g, [0, 1, 2])
    assert h.edges() == [(0, 1), (1, 2)]
    with pytest.raises(IndexOutOfRange):
        induced_subgraph(g, [0, 7])
    with pytest.raises(IndexOutOfRange):
        induced_subgraph(g, [1, 1])


def test_complement_and_relabel():
    p = path_graph(4)
    assert complement(complement(p)) == p
    assert complement(p).edge_count == 3
    r = p.relabel([3, 2, 1, 0])
    assert sorted(r.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_exports():
    g = SimpleGraph.from_edges(3, [(0, 1)], ["a", "b", 'c"x'])
    dot = g.to_dot()
    assert dot.startswith("graph iggraf {")
    assert '"a" -- "b";' in dot
    assert '"c\\"x";' in dot
    data = json.loads(json.dumps(g.to_json()))
    assert data["edges"] == [[0, 1]]
    assert [v["label"] for v in data["vertices"]] == ["a", "b", 'c"x']
