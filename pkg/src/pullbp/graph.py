"""Markov random field topology: node kinds, neighbor queries, and the
directed message slots the inference loops iterate over."""
from __future__ import annotations

from enum import Enum
from typing import Any, Iterable, Mapping


class NodeKind(str, Enum):
    CIRCLE = "circle"
    INNER_LINK = "inner_link"
    OUTER_LINK = "outer_link"


KIND_DIM = {
    NodeKind.CIRCLE: 3,
    NodeKind.INNER_LINK: 5,
    NodeKind.OUTER_LINK: 5,
}


class GraphError(ValueError):
    pass


class GraphTopology:
    """Undirected pairwise MRF over hidden nodes, each paired with one
    observation handle. Immutable after construction; safe for concurrent
    reads."""

    def __init__(
        self,
        node_kinds: Mapping[int, NodeKind],
        edges: Iterable[tuple[int, int]],
        observations: Mapping[int, Any] | None = None,
    ) -> None:
        self._kinds = {int(n): NodeKind(k) for n, k in node_kinds.items()}
        if any(n < 0 for n in self._kinds):
            raise GraphError("node ids must be nonnegative")
        edge_set: set[tuple[int, int]] = set()
        adjacency: dict[int, set[int]] = {n: set() for n in self._kinds}
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise GraphError(f"self-loop on node {a}")
            if a not in self._kinds or b not in self._kinds:
                raise GraphError(f"edge ({a}, {b}) references an unknown node")
            key = (min(a, b), max(a, b))
            if key in edge_set:
                raise GraphError(f"duplicate edge ({a}, {b})")
            edge_set.add(key)
            adjacency[a].add(b)
            adjacency[b].add(a)
        self._edges = frozenset(edge_set)
        self._adjacency = {n: tuple(sorted(nbrs)) for n, nbrs in adjacency.items()}
        if observations is None:
            observations = {n: None for n in self._kinds}
        if set(observations) != set(self._kinds):
            raise GraphError("observations must cover every hidden node exactly once")
        self._observations = dict(observations)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self._kinds))

    @property
    def node_count(self) -> int:
        return len(self._kinds)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def node_kind(self, node: int) -> NodeKind:
        self._check(node)
        return self._kinds[node]

    def node_dim(self, node: int) -> int:
        return KIND_DIM[self.node_kind(node)]

    def observation(self, node: int) -> Any:
        self._check(node)
        return self._observations[node]

    def neighbors(self, node: int) -> tuple[int, ...]:
        """Neighbors of `node` in ascending id order."""
        self._check(node)
        return self._adjacency[node]

    def directed_slots(self) -> tuple[tuple[int, int], ...]:
        """All directed message slots (t, s), both orientations of each edge."""
        slots = [(t, s) for a, b in self._edges for t, s in ((a, b), (b, a))]
        return tuple(sorted(slots))

    def incoming_slots_excluding(
        self, t: int, s: int
    ) -> tuple[tuple[int, int], ...]:
        """Slots u -> t for every neighbor u of t except s."""
        if s not in self.neighbors(t):
            raise GraphError(f"node {s} is not adjacent to node {t}")
        return tuple((u, t) for u in self._adjacency[t] if u != s)

    def _check(self, node: int) -> None:
        if node not in self._kinds:
            raise GraphError(f"unknown node id {node}")


def pattern_graph(observations: Mapping[int, Any] | None = None) -> GraphTopology:
    """The 9-node articulated pattern: circle 1, inner links 2..5, each
    connected to its outer link i + 4. Yields 8 edges and 16 directed slots."""
    kinds: dict[int, NodeKind] = {1: NodeKind.CIRCLE}
    edges: list[tuple[int, int]] = []
    for i in range(2, 6):
        kinds[i] = NodeKind.INNER_LINK
        kinds[i + 4] = NodeKind.OUTER_LINK
        edges.append((1, i))
        edges.append((i, i + 4))
    return GraphTopology(kinds, edges, observations)
