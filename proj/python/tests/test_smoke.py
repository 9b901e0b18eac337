"""Smoke tests for the gphpy module: every exposed operation is driven once
on small graphs with independently known answers."""

import pytest

import gphpy


def test_parse_and_roundtrip():
    g = gphpy.parse_graph("graph g\nnode a\nnode b\narc e a b\n")
    assert g.name == "g"
    assert g.node_count() == 2
    assert g.arcs == [("e", "a", "b")]
    again = gphpy.parse_graph(gphpy.serialize_graph(g))
    assert again == g
    assert gphpy.validate(g) == []
    assert '"a" -> "b" [label="e"];' in gphpy.to_dot(g)


def test_parse_errors_surface_as_exceptions():
    with pytest.raises(RuntimeError):
        gphpy.parse_graph("graph g\nnode a\nnode a\n")


def test_standard_graphs_and_arc_graph():
    c4 = gphpy.standard_graph("C(4)")
    assert c4.node_count() == 4
    assert gphpy.isomorphic(gphpy.arc_graph(c4), c4)
    p3 = gphpy.standard_graph("P(3)")
    assert gphpy.isomorphic(gphpy.arc_graph(p3), gphpy.standard_graph("P(2)"))
    assert gphpy.arc_graph(p3, 3).node_count() == 1
    b2 = gphpy.standard_graph("B(2)")
    assert gphpy.is_separated(gphpy.arc_graph(b2))
    assert not gphpy.is_separated(b2)


def test_zeta_numbers():
    b2 = gphpy.standard_graph("B(2)")
    assert gphpy.cycle_counts(b2, 5) == [2, 4, 8, 16, 32]
    assert gphpy.char_poly(b2) == "x-2"
    assert gphpy.zeta_det(b2) == "1-2*u"
    assert gphpy.zeta_series(b2, 4) == [(1, 1), (2, 1), (4, 1), (8, 1), (16, 1)]
    # Cycle counts overflow 64 bits gracefully: the all-pairs graph on 10
    # nodes has exactly 10^m based closed walks of length m.
    k = gphpy.standard_graph("K(10)")
    counts = gphpy.cycle_counts(k, 25)
    assert counts[-1] == 10**25


def test_zeta_equal_star_square():
    star = gphpy.parse_graph(
        "graph star\n"
        + "".join(f"node {i}\n" for i in range(5))
        + "".join(f"arc (0,{i}) 0 {i}\narc ({i},0) {i} 0\n" for i in range(1, 5))
    )
    square = gphpy.parse_graph(
        "graph square\n"
        + "".join(f"node {i}\n" for i in range(4))
        + "".join(
            f"arc ({i},{(i + 1) % 4}) {i} {(i + 1) % 4}\n"
            f"arc ({i},{(i + 3) % 4}) {i} {(i + 3) % 4}\n"
            for i in range(4)
        )
    )
    assert gphpy.zeta_equal(star, square)
    report = gphpy.compare(star, square)
    assert report["zeta_equal"] is True
    assert report["basal_isomorphic"] is False
    assert report["refuted"] is True

    bs, proj = gphpy.basal(star)
    assert bs.node_count() == 2 and bs.arc_count() == 5
    assert proj["0"] == "0" and proj["2"] == proj["1"]
    assert gphpy.is_basal(bs)


def test_walkable_and_tree_blocks():
    p3 = gphpy.standard_graph("P(3)")
    assert gphpy.walkable(p3).node_count() == 0
    assert not gphpy.is_walkable(p3)
    assert gphpy.is_walkable(gphpy.standard_graph("C(3)"))
    assert gphpy.tree_blocks(gphpy.standard_graph("C(3)")) == [["0", "1", "2"]]
    assert len(gphpy.tree_blocks(p3)) == 4


def test_walk_distance():
    x = gphpy.parse_graph(
        "graph X\nnode x0\nnode x1\n"
        "arc b1 x0 x1\narc b2 x1 x0\narc c1 x0 x0\narc c2 x1 x1\n"
    )
    assert gphpy.walk_distance(x, [], ["c1"], ["c1", "c1"], ["b1", "b2"]) == "1/8"
    assert gphpy.walk_distance(x, [], ["c1"], ["c1"], ["c1", "c1"]) == "0"
    assert gphpy.walk_distance(x, [], ["c1"], [], ["c2"]) == "1"
