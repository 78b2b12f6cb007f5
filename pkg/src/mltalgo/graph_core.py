"""
Graph core

This module holds the two graph types every other part of mltalgo works on:
``Graph``, an immutable simple undirected graph on the vertices 0..m-1, and
``BipartiteGraph``, the crossing graph between two disjoint vertex sets of a
``Graph``.

A ``Graph`` is canonical: its edges are stored as pairs ``(u, v)`` with
``u < v`` in lexicographic order, and the per-vertex neighbor sets are derived
from that list once, at construction. Two graphs with the same vertex count and
edge set therefore compare equal and hash equal, which lets the exhaustive test
suites use them as dictionary keys.

The edge-list text format is:

    # comment lines start with '#'
    4          <- vertex count m
    0 1        <- one edge per line, 0 <= u, v < m, u != v
    1 2

``parse_graph`` reports the first offending line by number, and
``render_graph`` writes the canonical form back out, so that
``parse_graph(render_graph(G)) == G`` for every graph.
"""

from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from .mlt_config import GraphError, GraphParseError

Edge = Tuple[int, int]


class Graph:
    """Immutable simple undirected graph on vertices 0..m-1

    Examples:
        >>> G = Graph(3, [(2, 1), (0, 1)])
        >>> G.edges
        ((0, 1), (1, 2))
        >>> G.degree(1)
        2
    """

    __slots__ = ("_m", "_edges", "_adj")

    def __init__(self, m: int, edges: Iterable[Edge] = ()) -> None:
        """
        Canonicalizes the edge list and derives the adjacency.

        :param m: number of vertices
        :type m: int
        :param edges: unordered pairs of distinct vertices, each at most once
        :raises GraphError: on a self-loop, a duplicate edge or a vertex out of range
        """
        if m < 0:
            raise GraphError(f"negative vertex count {m}")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < m and 0 <= v < m):
                raise GraphError(f"edge ({u}, {v}) out of range for m = {m}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        self._m: int = m
        self._edges: Tuple[Edge, ...] = tuple(sorted(seen))
        adj: List[set] = [set() for _ in range(m)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: Tuple[FrozenSet[int], ...] = tuple(frozenset(s) for s in adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> List[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._m and v in self._adj[u]

    def vertices(self) -> range:
        return range(self._m)

    def adjacency_masks(self) -> List[int]:
        """Neighbor sets as integer bit masks, bit v set for neighbor v."""
        masks = []
        for nbrs in self._adj:
            mask = 0
            for w in nbrs:
                mask |= 1 << w
            masks.append(mask)
        return masks

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._m))
        g.add_edges_from(self._edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Converts a networkx graph, relabeling its nodes 0..m-1 in sorted order."""
        mapping: Dict = {node: i for i, node in enumerate(sorted(g.nodes()))}
        return cls(len(mapping), ((mapping[u], mapping[v]) for u, v in g.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._m == other._m and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._m, self._edges))

    def __repr__(self) -> str:
        return f"Graph(m={self._m}, edges={list(self._edges)})"


class BipartiteGraph:
    """Crossing graph G(V1, V2) between two disjoint vertex sets

    Vertex labels are the labels of the parent graph. ``left_index`` and
    ``right_index`` give the 0-based local position of a label within its side,
    which is how the birank matrix addresses rows of X and columns of Y.
    """

    __slots__ = ("left", "right", "edges", "_lpos", "_rpos")

    def __init__(
        self, left: Iterable[int], right: Iterable[int], edges: Iterable[Edge] = ()
    ) -> None:
        self.left: Tuple[int, ...] = tuple(sorted(set(left)))
        self.right: Tuple[int, ...] = tuple(sorted(set(right)))
        if set(self.left) & set(self.right):
            raise GraphError("bipartition sides overlap")
        self._lpos: Dict[int, int] = {v: i for i, v in enumerate(self.left)}
        self._rpos: Dict[int, int] = {v: j for j, v in enumerate(self.right)}
        kept = set()
        for i, j in edges:
            if i not in self._lpos or j not in self._rpos:
                raise GraphError(f"edge ({i}, {j}) does not cross the bipartition")
            if (i, j) in kept:
                raise GraphError(f"duplicate edge ({i}, {j})")
            kept.add((i, j))
        self.edges: Tuple[Edge, ...] = tuple(sorted(kept))

    @property
    def m1(self) -> int:
        return len(self.left)

    @property
    def m2(self) -> int:
        return len(self.right)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def left_index(self, v: int) -> int:
        return self._lpos[v]

    def right_index(self, v: int) -> int:
        return self._rpos[v]

    def degrees(self) -> Dict[int, int]:
        deg = {v: 0 for v in self.left + self.right}
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.left, self.right, self.edges) == (
            other.left,
            other.right,
            other.edges,
        )

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(left={list(self.left)}, right={list(self.right)}, "
            f"edges={list(self.edges)})"
        )


def parse_graph(text: str) -> Graph:
    """
    The function `parse_graph` reads the edge-list format into a canonical ``Graph``.

    :param text: edge-list text; '#' lines are comments, the first remaining line is m
    :type text: str
    :raises GraphParseError: naming the 1-based line of the first problem

    Examples:
        >>> parse_graph("3\\n0 1\\n1 2").edges
        ((0, 1), (1, 2))
    """
    m = None
    seen: Dict[Edge, int] = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if m is None:
            try:
                (count,) = fields
                m = int(count)
            except ValueError:
                raise GraphParseError(lineno, f"expected vertex count, got {line!r}") from None
            if m < 0:
                raise GraphParseError(lineno, f"negative vertex count {m}")
            continue
        if len(fields) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex in {line!r}") from None
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < m and 0 <= v < m):
            raise GraphParseError(lineno, f"vertex out of range 0..{m - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphParseError(
                lineno, f"duplicate edge {e} (first on line {seen[e]})"
            )
        seen[e] = lineno
    if m is None:
        raise GraphParseError(len(lines) + 1, "missing vertex count before end of input")
    return Graph(m, seen.keys())


def render_graph(G: Graph) -> str:
    """Canonical edge-list text for ``G``, newline terminated."""
    lines = [str(G.m)]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def induced_subgraph(G: Graph, S: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    The function `induced_subgraph` returns G_S relabeled 0..#S-1 in ascending
    original order, together with the map from new labels to original ones.

    :raises GraphError: if a vertex of ``S`` is out of range

    Examples:
        >>> K4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        >>> H, labels = induced_subgraph(K4, [0, 1, 2])
        >>> H.num_edges, labels
        (3, (0, 1, 2))
    """
    labels = tuple(sorted(set(S)))
    for v in labels:
        if not 0 <= v < G.m:
            raise GraphError(f"vertex {v} out of range for m = {G.m}")
    pos = {v: i for i, v in enumerate(labels)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    return Graph(len(labels), edges), labels


def bipartite_between(
    G: Graph, V1: Iterable[int], V2: Iterable[int]
) -> BipartiteGraph:
    """Keeps exactly the edges of ``G`` with one endpoint in each part."""
    left, right = set(V1), set(V2)
    if left & right:
        raise GraphError("bipartition sides overlap")
    for v in left | right:
        if not 0 <= v < G.m:
            raise GraphError(f"vertex {v} out of range for m = {G.m}")
    crossing = []
    for u, v in G.edges:
        if u in left and v in right:
            crossing.append((u, v))
        elif v in left and u in right:
            crossing.append((v, u))
    return BipartiteGraph(left, right, crossing)


def check_partition(G: Graph, parts: Sequence[Iterable[int]]) -> List[Tuple[int, ...]]:
    """Validates that ``parts`` partitions V(G); returns them as sorted tuples."""
    result = [tuple(sorted(set(p))) for p in parts]
    covered: List[int] = [v for p in result for v in p]
    if len(covered) != len(set(covered)):
        raise GraphError("parts are not disjoint")
    if sorted(covered) != list(range(G.m)):
        raise GraphError("parts do not cover all vertices")
    if any(len(p) == 0 for p in result):
        raise GraphError("empty part")
    return result
