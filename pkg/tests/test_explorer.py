import pytest

from rigcrystal.cartan import named, weyl_dimension
from rigcrystal.errors import CrystalError, IncomparableDepths
from rigcrystal.explorer import export_dot, export_json, generate, isomorphic, parse_json
from rigcrystal.folding import FoldedDiagram, image_graph
from rigcrystal.rigged import RiggedConfiguration

from conftest import fundamental, matrix


def test_top_of_binfinity_golden(A2, a2_top):
    g = generate(A2, None, depth=3)
    assert len(g.nodes) == 13
    assert len(g.edges) == 14

    ids = {}
    for name, parts in a2_top["nodes"].items():
        rc = RiggedConfiguration.from_strings(A2, {a: [(ln, x) for ln, x, _ in rows]
                                                   for a, rows in parts.items()})
        k = g.id_of(rc)
        assert k is not None, name
        ids[name] = k
        for a, rows in parts.items():
            for ln, x, p in rows:
                assert rc.vacancy(a, ln) == p, (name, a, ln)
    assert sorted(ids.values()) == list(range(13))

    expected = {(ids[s], ids[d], a) for a, pairs in a2_top["edges"].items() for s, d in pairs}
    assert set(g.edges) == expected


def test_small_examples(A2):
    g = generate(A2, fundamental(A2, 1, 0), depth=10)
    assert len(g.nodes) == 3 and g.complete
    for A in (A2, named("G2"), named("A2~")):
        g = generate(A, None, depth=0)
        assert len(g.nodes) == 1 and g.edges == ()


def test_infinity_needs_depth(A2):
    with pytest.raises(CrystalError):
        generate(A2, None)
    with pytest.raises(CrystalError):
        generate(A2, fundamental(A2, 1, 0), depth=-1)


def test_truncation_by_max_nodes(A2):
    g = generate(named("A2~"), fundamental(named("A2~"), 1, 0, 0), max_nodes=50)
    assert not g.complete and len(g.nodes) > 50


@pytest.mark.parametrize("name, hw", [
    ("A2", None), ("A2", (1, 1)), ("G2", (1, 1)), ("C2", None), ("A2~", (1, 0, 0)), ("H64", None),
])
def test_graph_invariants(name, hw):
    A = matrix(name)
    w = None if hw is None else fundamental(A, *hw)
    g = generate(A, w, depth=5)
    out = {}
    for s, d, a in g.edges:
        assert (s, a) not in out
        out[(s, a)] = d
        assert g.nodes[s].f(a) == g.nodes[d]
    tops = [k for k, rc in enumerate(g.nodes) if all(rc.e(a) is None for a in A.labels)]
    assert tops == [g.root]
    # the last level is not expanded, so only check nodes above it
    for k, rc in enumerate(g.nodes):
        if rc.depth >= 5:
            continue
        for a in A.labels:
            has_edge = (k, a) in out
            if w is None:
                assert has_edge
            else:
                assert has_edge == (rc.phi(a) > 0)


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2", "B3"])
def test_sizes_match_weyl_dimension(name):
    A = matrix(name)
    for coeffs in [(1,) + (0,) * (A.rank - 1), (0,) * (A.rank - 1) + (1,), (1,) * A.rank]:
        w = fundamental(A, *coeffs)
        g = generate(A, w)
        assert g.complete and len(g.nodes) == weyl_dimension(A, w)


def test_isomorphism_examples(A2):
    g = generate(A2, fundamental(A2, 1, 1))
    assert isomorphic(g, g)
    assert not isomorphic(generate(A2, fundamental(A2, 1, 0)), generate(A2, fundamental(A2, 0, 1)))
    for name, hw in (("A2", (1, 1)), ("G2", (1, 0))):
        A = matrix(name)
        w = fundamental(A, *hw)
        assert isomorphic(generate(A, w), image_graph(FoldedDiagram.identity(A), w))
    assert isomorphic(generate(A2, None, depth=4), image_graph(FoldedDiagram.identity(A2), None, depth=4))


def test_isomorphism_under_color_swap(A2):
    g = generate(A2, None, depth=3)
    swapped = type(g)(g.cartan, g.highest_weight, g.nodes,
                      tuple((s, d, "2" if a == "1" else "1") for s, d, a in g.edges), 0, 3, g.complete)
    # A2 has a diagram automorphism exchanging the colors
    assert isomorphic(g, swapped)
    broken = type(g)(g.cartan, g.highest_weight, g.nodes, g.edges[:-1] + ((12, 0, "1"),), 0, 3, g.complete)
    assert not isomorphic(g, broken)
    assert not isomorphic(generate(named("C2"), None, depth=3), generate(named("B2"), None, depth=3))


def test_incomparable_depths(A2):
    with pytest.raises(IncomparableDepths):
        isomorphic(generate(A2, None, depth=2), generate(A2, None, depth=3))


def test_dot_export(A2):
    one = generate(A2, fundamental(A2, 0, 0))
    dot = export_dot(one)
    assert dot.count("[label=") == 1 and "->" not in dot
    fig = export_dot(generate(A2, None, depth=3))
    assert fig.count("->") == 14
    assert fig.count('label="1"') == 7 and fig.count('label="2"') == 7
    assert "1 : -1 (-2)" in fig


def test_json_round_trip():
    for name, hw, depth in (("A2", None, 3), ("G2", (1, 1), None), ("A2~", (0, 1, 0), 4), ("R3", None, 3)):
        A = matrix(name)
        g = generate(A, None if hw is None else fundamental(A, *hw), depth=depth)
        h = parse_json(export_json(g))
        assert h == g
        assert export_json(h) == export_json(g)


def test_worker_count_does_not_change_output():
    A = matrix("G2")
    w = fundamental(A, 1, 1)
    base = export_json(generate(A, w))
    for workers in (2, 4):
        assert export_json(generate(A, w, workers=workers)) == base
    base = export_json(generate(A, None, depth=5))
    assert export_json(generate(A, None, depth=5, workers=3)) == base
