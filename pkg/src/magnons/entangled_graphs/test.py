"""Tests for entangled graph construction, classification and export.

Run:
  python -m magnons.entangled_graphs.test
"""

import json
from fractions import Fraction

from magnons.errors import InvalidInputError, InvalidLabelError, MagnonError
from magnons.tableaux import StandardYoungTableau, hook_tableau, one_magnon_tableaux, row_tableau
from magnons.tests.utils import expect_error


def test_five_node_table() -> None:
    from .graph import EdgeClass, GraphMode, build_graph

    expected = {
        2: {EdgeClass.C2: Fraction(1)},
        3: {EdgeClass.C1: Fraction(1, 3), EdgeClass.C2: Fraction(2, 3)},
        4: {EdgeClass.C1: Fraction(1, 6), EdgeClass.C2: Fraction(1, 2)},
        5: {EdgeClass.C1: Fraction(1, 10), EdgeClass.C2: Fraction(4, 10)},
    }
    for s, weights in expected.items():
        closed = build_graph(5, hook_tableau(5, s))
        assert {c: e.exact for c, e in closed.class_weights().items()} == weights
        numeric = build_graph(5, hook_tableau(5, s), GraphMode.NUMERIC)
        for edge_class, value in weights.items():
            assert abs(numeric.class_weights()[edge_class].weight - float(value)) < 1e-9

    row = build_graph(5, row_tableau(5))
    assert {c: e.exact for c, e in row.class_weights().items()} == {EdgeClass.UNIFORM: Fraction(4, 10)}
    assert len(row.edges) == 10
    print("✅ N=5 concurrence table OK")


def test_graph_structure() -> None:
    from .graph import EdgeClass, build_graph

    for n in range(2, 13):
        for label in one_magnon_tableaux(n):
            graph = build_graph(n, label)
            s = label.second_row_entry
            if s is None:
                assert len(graph.edges) == n * (n - 1) // 2
                assert graph.isolated_vertices() == []
                continue
            special = [e for e in graph.edges if e.edge_class is EdgeClass.C2]
            assert len(graph.edges) == s * (s - 1) // 2
            assert len(special) == s - 1 and all(e.k == s for e in special)
            assert graph.isolated_vertices() == list(range(s + 1, n + 1))
            for v in range(1, s - 1):
                assert graph.relabeled({v: v + 1, v + 1: v}) == graph
            if s > 2:
                # moving the special node breaks the symmetry
                assert graph.relabeled({1: s, s: 1}) != graph
    print("✅ graph structure OK")


def test_closed_form_matches_numeric() -> None:
    from .graph import GraphMode, build_graph, graph_equal

    for n in range(2, 13):
        for label in one_magnon_tableaux(n):
            closed = build_graph(n, label, GraphMode.CLOSED_FORM)
            numeric = build_graph(n, label, "numeric")
            assert graph_equal(closed, numeric), label.inline()
    assert not graph_equal(build_graph(5, hook_tableau(5, 3)), build_graph(5, hook_tableau(5, 4)))
    print("✅ closed-form and numeric graphs agree")


def test_weight_classification() -> None:
    from .graph import EdgeClass, classify_weights

    assert classify_weights(2, {(1, 2): 1.0}) == {(1, 2): EdgeClass.UNIFORM}
    assert classify_weights(3, {(1, 2): 1.0}) == {(1, 2): EdgeClass.C2}
    assert classify_weights(3, {(1, 2): 1 / 3, (1, 3): 2 / 3, (2, 3): 2 / 3}) == {
        (1, 2): EdgeClass.C1,
        (1, 3): EdgeClass.C2,
        (2, 3): EdgeClass.C2,
    }
    assert classify_weights(4, {}) == {}
    print("✅ weight classification OK")


def test_exports() -> None:
    from .graph import Edge, EdgeClass, EntangledGraph, build_graph

    graph = build_graph(4, hook_tableau(4, 3))
    dot = graph.to_dot()
    assert dot.splitlines()[0] == 'graph "(124/3)" {'
    assert '  1 -- 2 [label="1/3", class="C1", style=solid];' in dot
    assert '  1 -- 3 [label="2/3", class="C2", style=dashed];' in dot
    assert "  4;" in dot and dot.endswith("}")

    data = json.loads(graph.to_json())
    assert data["n"] == 4
    assert [(e["j"], e["k"], e["exact"]) for e in data["edges"]] == [
        (1, 2, "1/3"),
        (1, 3, "2/3"),
        (2, 3, "2/3"),
    ]
    assert graph.render().splitlines()[-1] == "  isolated: 4"

    edge = Edge(1, 2, 0.5, EdgeClass.C1)
    expect_error(MagnonError, EntangledGraph, 3, (edge, edge))
    expect_error(MagnonError, EntangledGraph, 3, (Edge(2, 1, 0.5, EdgeClass.C1),))
    expect_error(MagnonError, EntangledGraph, 3, (Edge(1, 2, 0.0, EdgeClass.C1),))
    expect_error(
        MagnonError,
        EntangledGraph,
        3,
        (Edge(1, 2, 0.5, EdgeClass.C1), Edge(1, 3, 0.25, EdgeClass.C1)),
    )
    print("✅ exports OK")


def test_enumeration_and_modes() -> None:
    from .graph import GraphMode, build_graph, enumerate_graphs, parse_mode

    entries = enumerate_graphs(5, max_workers=2)
    assert [e.label.inline() for e in entries] == [
        "(1345/2)",
        "(1245/3)",
        "(1235/4)",
        "(1234/5)",
        "(12345)",
    ]
    assert entries[2].to_dict()["configuration"] == "00100"
    assert entries[4].graph == build_graph(5, row_tableau(5))
    connected = [e for e in enumerate_graphs(8) if not e.graph.isolated_vertices()]
    assert [e.label.inline() for e in connected] == ["(1234567/8)", "(12345678)"]

    assert parse_mode("closed") is GraphMode.CLOSED_FORM
    assert parse_mode("numeric") is GraphMode.NUMERIC
    expect_error(InvalidInputError, parse_mode, "exact")
    bad = StandardYoungTableau.from_rows([[1, 2, 4], [3, 5]])
    expect_error(InvalidLabelError, build_graph, 5, bad)
    print("✅ enumeration and modes OK")


def main() -> None:
    print("\n=== Entangled Graph Tests ===")
    test_five_node_table()
    test_graph_structure()
    test_closed_form_matches_numeric()
    test_weight_classification()
    test_exports()
    test_enumeration_and_modes()
    print("\n✅ All entangled graph tests passed.")


if __name__ == "__main__":
    main()
