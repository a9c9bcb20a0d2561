"""Traversal tree built from the enumeration event stream, plus DOT/JSON export.

Each node is one emitted permutation; its parent is the permutation it was
derived from by a shift or a subtraction. Two per-node path metrics are
kept: ``path_length`` (edges from the root) and ``turn_count`` (how often
the edge kind changes along the root path).
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from shufflebits.core import (
    EdgeKind,
    EnumerationEvent,
    InstanceTooLargeError,
    ShuffleSpec,
    enumerate_events,
)

TREE_MAX_WIDTH = 24
JSON_FORMAT = "shufflebits.tree"
JSON_VERSION = 1


@dataclass(slots=True)
class TraversalNode:
    event: EnumerationEvent
    children: list[int] = field(default_factory=list)
    path_length: int = 0
    turn_count: int = 0


@dataclass
class TraversalTree:
    spec: ShuffleSpec
    nodes: list[TraversalNode]

    @property
    def root(self) -> TraversalNode:
        return self.nodes[0]

    def edges(self):
        """Yield ``(parent_node, child_node)`` pairs in emission order of the child."""
        nodes = self.nodes
        for node in nodes[1:]:
            yield nodes[node.event.parent_index], node

    def path(self, index: int) -> list[TraversalNode]:
        """Nodes from the root down to ``index``, inclusive."""
        out = []
        node = self.nodes[index]
        while True:
            out.append(node)
            if node.event.parent_index is None:
                break
            node = self.nodes[node.event.parent_index]
        out.reverse()
        return out

    def find(self, value: int) -> TraversalNode:
        for node in self.nodes:
            if node.event.value == value:
                return node
        raise KeyError(value)


def _attach(nodes: list[TraversalNode], event: EnumerationEvent) -> None:
    node = TraversalNode(event)
    if event.parent_index is not None:
        parent = nodes[event.parent_index]
        parent.children.append(event.index)
        node.path_length = parent.path_length + 1
        node.turn_count = parent.turn_count
        if parent.event.edge is not EdgeKind.ROOT and parent.event.edge is not event.edge:
            node.turn_count += 1
    nodes.append(node)


def build_tree(spec: ShuffleSpec, backend: str | None = None) -> TraversalTree:
    if spec.width() > TREE_MAX_WIDTH:
        raise InstanceTooLargeError(f"tree export is limited to width {TREE_MAX_WIDTH}")
    nodes: list[TraversalNode] = []
    enumerate_events(spec, lambda event: _attach(nodes, event), backend)
    return TraversalTree(spec, nodes)


@dataclass
class TreeStats:
    node_count: int
    max_path_length: int
    max_turn_count: int
    edge_kind_totals: dict[str, int]
    branching_histogram: dict[int, int]


def tree_stats(tree: TraversalTree) -> TreeStats:
    kinds = Counter(node.event.edge for node in tree.nodes[1:])
    return TreeStats(
        node_count=len(tree.nodes),
        max_path_length=max(node.path_length for node in tree.nodes),
        max_turn_count=max(node.turn_count for node in tree.nodes),
        edge_kind_totals={
            EdgeKind.SHIFT.value: kinds[EdgeKind.SHIFT],
            EdgeKind.SUBTRACT.value: kinds[EdgeKind.SUBTRACT],
        },
        branching_histogram=dict(sorted(Counter(len(n.children) for n in tree.nodes).items())),
    )


def export_dot(tree: TraversalTree) -> str:
    spec = tree.spec
    lines = [
        "digraph shuffle {",
        f'  graph [zeros={spec.zeros}, ones={spec.ones}];',
    ]
    for node in tree.nodes:
        value = node.event.value
        lines.append(f'  "{value}" [label="{spec.binary(value)}"];')
    for parent, child in tree.edges():
        event = child.event
        attrs = f"kind={event.edge.value}"
        if event.edge is EdgeKind.SUBTRACT:
            attrs += f', label="{event.subtrahend_used:b}"'
        lines.append(f'  "{parent.event.value}" -> "{event.value}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def event_record(spec: ShuffleSpec, event: EnumerationEvent) -> dict:
    """Flat JSON-ready record for one event; root omits ``parent_index``."""
    record = {
        "index": event.index,
        "value": event.value,
        "binary": spec.binary(event.value),
        "edge": event.edge.value,
    }
    if event.parent_index is not None:
        record["parent_index"] = event.parent_index
    if event.subtrahend_used is not None:
        record["subtrahend"] = event.subtrahend_used
    record["shift_count"] = event.shift_count
    record["subtract_count"] = event.subtract_count
    return record


def _node_record(spec: ShuffleSpec, node: TraversalNode) -> dict:
    record = event_record(spec, node.event)
    record["path_length"] = node.path_length
    record["turn_count"] = node.turn_count
    return record


def export_json(tree: TraversalTree, indent: int | None = None) -> str:
    spec = tree.spec
    doc = {
        "format": JSON_FORMAT,
        "version": JSON_VERSION,
        "spec": {"zeros": spec.zeros, "ones": spec.ones, "width": spec.width()},
        "nodes": [_node_record(spec, node) for node in tree.nodes],
    }
    return json.dumps(doc, indent=indent)


def load_json(text: str) -> TraversalTree:
    """Rebuild a tree from :func:`export_json` output."""
    doc = json.loads(text)
    if doc.get("format") != JSON_FORMAT:
        raise ValueError(f"not a {JSON_FORMAT} document")
    spec = ShuffleSpec(doc["spec"]["zeros"], doc["spec"]["ones"])
    nodes = []
    for record in doc["nodes"]:
        event = EnumerationEvent(
            index=record["index"],
            value=record["value"],
            parent_index=record.get("parent_index"),
            edge=EdgeKind(record["edge"]),
            subtrahend_used=record.get("subtrahend"),
            shift_count=record["shift_count"],
            subtract_count=record["subtract_count"],
        )
        node = TraversalNode(event, [], record["path_length"], record["turn_count"])
        if event.parent_index is not None:
            nodes[event.parent_index].children.append(event.index)
        nodes.append(node)
    return TraversalTree(spec, nodes)
