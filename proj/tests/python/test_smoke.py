import pytest

import deltaconf as dc

K3 = "0 1\n1 2\n2 0\n"
C5 = "0 1\n1 2\n2 3\n3 4\n4 0\n"


def test_triangle_sequence():
    seq = dc.eliminate(dc.Graph.parse(K3))
    assert seq.steps == [("true_twin", 1, 0)]
    assert seq.terminal_pair == (0, 2)
    assert str(seq) == "1 merged into 0 true\nK2: 0 2\n"


def test_five_cycle_refused():
    g = dc.Graph.parse(C5)
    assert not dc.is_distance_hereditary(g)
    assert not dc.is_distance_hereditary_oracle(g)
    with pytest.raises(dc.RecognitionError):
        dc.eliminate(g)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        dc.Graph.parse("0 x\n")


def test_graph_from_edges():
    g = dc.Graph([(0, 1), (1, 2)], vertices=[7])
    assert g.vertices() == [0, 1, 2, 7]
    assert g.edges() == [(0, 1), (1, 2)]
    assert not g.is_connected()


@pytest.mark.parametrize("seed", range(10))
def test_tree_round_trip(seed):
    g = dc.gen_dh_random(40, seed=seed)
    t = dc.build_delta_tree(g)
    assert t.leaf_count == 40
    assert t.junction_count == 38
    assert t.validate() == []
    assert t.semantics() == g
    assert dc.DeltaTree.parse(str(t)).semantics() == g
    assert t.to_sequence().replay() == g


def test_layouts_validate():
    t = dc.build_delta_tree(dc.gen_dh_random(60, seed=4))
    assert dc.check_ortho(dc.ortho_layout(t)) == []
    assert dc.check_hex(dc.hex_layout(t)) == []


@pytest.mark.parametrize("layout", ["ortho", "hex", "radial"])
def test_draw_svg(layout):
    g = dc.gen_dh_random(25, seed=2)
    svg = dc.draw_svg(g, layout=layout)
    assert svg.startswith("<?xml")
    assert "<svg" in svg
    assert dc.check_svg(svg, 5.0) == []
    assert svg == dc.draw_svg(g, layout=layout)


def test_draw_rejects_bad_options():
    g = dc.Graph.parse(K3)
    with pytest.raises(dc.ArgumentError):
        dc.draw_svg(g, layout="circle")
    with pytest.raises(dc.RenderError):
        dc.draw_svg(g, junction_radius=100)


def test_balanced_tree_is_clique():
    t = dc.DeltaTree.balanced(2)
    g = t.semantics()
    n = len(g.vertices())
    assert n == 12
    assert len(g.edges()) == n * (n - 1) // 2
    assert dc.check_svg(dc.draw_tree_svg(t, layout="radial"), 5.0) == []


def test_maxsub():
    c5 = dc.Graph.parse(C5)
    assert len(dc.max_dh_subgraph(c5, 4)) == 4
    assert dc.max_dh_subgraph(c5, 5) is None
    with pytest.raises(dc.TooLargeError):
        dc.max_dh_subgraph(dc.gen_dh_random(20, seed=1), 3)


def test_ratio_bound():
    assert dc.radial_ratio_bound() == pytest.approx(0.5241, abs=1e-4)
