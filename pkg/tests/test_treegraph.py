import json

import pydot
import pytest

from shufflebits.core import EdgeKind, InstanceTooLargeError, ShuffleSpec
from shufflebits.treegraph import build_tree, export_dot, export_json, load_json, tree_stats


def parse_dot(text):
    graphs = pydot.graph_from_dot_data(text)
    assert graphs and len(graphs) == 1
    graph = graphs[0]
    nodes = [n for n in graph.get_nodes() if n.get_name() not in ("graph", "node", "edge")]
    return graph, nodes, graph.get_edges()


def test_fig9_tree_paths(backend):
    tree = build_tree(ShuffleSpec(3, 2), backend)
    assert len(tree.nodes) == 10
    node = tree.find(17)
    path = tree.path(node.event.index)
    assert [n.event.value for n in path] == [3, 6, 12, 24, 17]
    assert [n.event.edge for n in path[1:]] == [EdgeKind.SHIFT] * 3 + [EdgeKind.SUBTRACT]
    assert (node.path_length, node.turn_count) == (4, 1)


def test_metrics_match_hand_walk():
    tree = build_tree(ShuffleSpec(4, 5))
    for node in tree.nodes:
        kinds = [n.event.edge for n in tree.path(node.event.index)[1:]]
        turns = sum(1 for a, b in zip(kinds, kinds[1:]) if a is not b)
        assert node.path_length == len(kinds)
        assert node.turn_count == turns
        assert node.turn_count <= max(node.path_length - 1, 0)
        assert kinds.count(EdgeKind.SHIFT) == node.event.shift_count
        assert kinds.count(EdgeKind.SUBTRACT) == node.event.subtract_count


def test_tree_structure():
    tree = build_tree(ShuffleSpec(5, 4))
    roots = [n for n in tree.nodes if n.event.edge is EdgeKind.ROOT]
    assert len(roots) == 1 and roots[0] is tree.root
    reached = set()
    stack = [0]
    while stack:
        i = stack.pop()
        assert i not in reached
        reached.add(i)
        stack.extend(tree.nodes[i].children)
    assert reached == set(range(len(tree.nodes)))
    assert sum(len(n.children) for n in tree.nodes) == len(tree.nodes) - 1


def test_stats():
    stats = tree_stats(build_tree(ShuffleSpec(3, 2)))
    assert (stats.node_count, stats.max_path_length) == (10, 4)
    assert stats.edge_kind_totals == {"shift": 6, "subtract": 3}
    assert sum(stats.branching_histogram.values()) == 10

    stats = tree_stats(build_tree(ShuffleSpec(4, 5)))
    assert (stats.node_count, stats.max_path_length) == (126, 8)
    assert sum(stats.edge_kind_totals.values()) == 125

    stats = tree_stats(build_tree(ShuffleSpec(0, 0)))
    assert (stats.node_count, stats.max_path_length, stats.max_turn_count) == (1, 0, 0)


@pytest.mark.parametrize("zeros", range(0, 8))
@pytest.mark.parametrize("ones", range(1, 8))
def test_max_path_length(zeros, ones):
    stats = tree_stats(build_tree(ShuffleSpec(zeros, ones)))
    if ones == 1:
        assert stats.max_path_length == zeros
    elif zeros == 0:
        assert stats.max_path_length == 0
    else:
        assert stats.max_path_length == zeros + ones - 1


def test_tree_width_limit():
    with pytest.raises(InstanceTooLargeError):
        build_tree(ShuffleSpec(13, 12))


def test_dot_small():
    text = export_dot(build_tree(ShuffleSpec(1, 1)))
    graph, nodes, edges = parse_dot(text)
    assert sorted(n.get("label").strip('"') for n in nodes) == ["01", "10"]
    assert len(edges) == 1 and edges[0].get("kind") == "shift"


def test_dot_fig9():
    graph, nodes, edges = parse_dot(export_dot(build_tree(ShuffleSpec(3, 2))))
    assert len(nodes) == 10 and len(edges) == 9
    edge = next(e for e in edges if (e.get_source(), e.get_destination()) == ('"12"', '"9"'))
    assert edge.get("kind") == "subtract"
    assert edge.get("label").strip('"') == "11"


def test_dot_is_stable():
    spec = ShuffleSpec(4, 4)
    assert export_dot(build_tree(spec)) == export_dot(build_tree(spec))


def test_json_records():
    doc = json.loads(export_json(build_tree(ShuffleSpec(1, 1))))
    assert doc["spec"] == {"zeros": 1, "ones": 1, "width": 2}
    root, child = doc["nodes"]
    assert "parent_index" not in root and "subtrahend" not in root
    assert child["parent_index"] == 0 and child["edge"] == "shift"

    doc = json.loads(export_json(build_tree(ShuffleSpec(3, 2))))
    assert [r["value"] for r in doc["nodes"]] == [3, 6, 5, 10, 20, 12, 9, 18, 24, 17]
    assert doc["nodes"][6] == {
        "index": 6, "value": 9, "binary": "01001", "edge": "subtract", "parent_index": 5,
        "subtrahend": 3, "shift_count": 2, "subtract_count": 1, "path_length": 3, "turn_count": 1,
    }


@pytest.mark.parametrize("zeros, ones", [(0, 0), (1, 1), (3, 2), (4, 5), (6, 7)])
def test_json_round_trip(zeros, ones):
    tree = build_tree(ShuffleSpec(zeros, ones))
    again = load_json(export_json(tree))
    assert again == tree
    assert export_json(again) == export_json(tree)


def test_load_rejects_foreign_json():
    with pytest.raises(ValueError):
        load_json('{"nodes": []}')
