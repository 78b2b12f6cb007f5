"""
PebbleOracle

The (k, l) pebble game decides (k, l)-sparsity: every subgraph on n' vertices
spans at most k*n' - l edges. For (k, l) = (2, 3) this is Laman's condition and
decides independence in the two-dimensional generic rigidity matroid; for
(1, 1) it decides acyclicity, i.e. independence in A(1).

Every vertex starts with k pebbles. Edges are directed as they are accepted: the
tail is the vertex whose pebble covers the edge. To test a new edge uv the game
tries to gather l + 1 pebbles on u and v by moving pebbles backwards along
directed paths (a pebble found at w with a path u -> ... -> w is brought to u and
the path is reversed). When l + 1 pebbles cannot be gathered, the vertices
reachable from u and v span a tight subgraph, and together with uv they form a
violating subgraph that is returned as a witness.

The game runs in O(#V * #E) time.
"""

import logging
from typing import List, NamedTuple, Set, Tuple

import networkx as nx

from mltalgo.graph_core import Edge, Graph
from mltalgo.mlt_typing import OracleIndep

_logger = logging.getLogger(__name__)


class PebbleResult(NamedTuple):
    independent: bool
    witness_vertices: Tuple[int, ...] = ()
    witness_edges: Tuple[Edge, ...] = ()


class PebbleGame:
    """(k, l) pebble game on a directed pebble graph

    Examples:
        >>> game = PebbleGame(4, 2, 3)
        >>> [game.insert(u, v) for u, v in [(0, 1), (0, 2), (1, 2)]]
        [True, True, True]
    """

    def __init__(self, m: int, k: int, l: int) -> None:
        if not (k >= 1 and 0 <= l < 2 * k):
            raise ValueError(f"pebble game needs 0 <= l < 2k, got k={k}, l={l}")
        self.k = k
        self.l = l
        self.D = nx.DiGraph()
        self.D.add_nodes_from(range(m), pebbles=k)

    def pebbles(self, v: int) -> int:
        return self.D.nodes[v]["pebbles"]

    def _fetch(self, root: int, blocked: int) -> bool:
        """Moves one free pebble from the reach of ``root`` onto ``root``."""
        dnodes = self.D.nodes
        parent = {root: None, blocked: None}
        stack = [root]
        while stack:
            w = stack.pop()
            for s in self.D.successors(w):
                if s in parent:
                    continue
                parent[s] = w
                if dnodes[s]["pebbles"] > 0:
                    dnodes[s]["pebbles"] -= 1
                    dnodes[root]["pebbles"] += 1
                    # reverse the path root -> ... -> s
                    child = s
                    while child != root:
                        par = parent[child]
                        self.D.remove_edge(par, child)
                        self.D.add_edge(child, par)
                        child = par
                    return True
                stack.append(s)
        return False

    def _gather(self, u: int, v: int) -> bool:
        need = self.l + 1
        while self.pebbles(u) + self.pebbles(v) < need:
            if self.pebbles(u) < self.k and self._fetch(u, v):
                continue
            if self.pebbles(v) < self.k and self._fetch(v, u):
                continue
            return False
        return True

    def insert(self, u: int, v: int) -> bool:
        """Accepts edge uv if l + 1 pebbles can be gathered on its endpoints."""
        if not self._gather(u, v):
            return False
        dnodes = self.D.nodes
        if dnodes[u]["pebbles"] > 0:
            dnodes[u]["pebbles"] -= 1
            self.D.add_edge(u, v)
        else:
            dnodes[v]["pebbles"] -= 1
            self.D.add_edge(v, u)
        return True

    def reach(self, u: int, v: int) -> Set[int]:
        """Vertices reachable from u or v along the directed pebble graph."""
        return {u, v} | nx.descendants(self.D, u) | nx.descendants(self.D, v)


def pebble_game(G: Graph, k: int, l: int) -> PebbleResult:
    """
    The function `pebble_game` decides (k, l)-sparsity of G's edge set.

    Edges are inserted in canonical order; the first rejected edge yields the
    witness: the reach of its endpoints with the accepted edges inside it plus
    the rejected edge, which spans more than k*n' - l edges.

    :raises ValueError: when (k, l) is outside 0 <= l < 2k

    Examples:
        >>> from mltalgo.generators import complete
        >>> res = pebble_game(complete(4), 2, 3)
        >>> res.independent, res.witness_vertices, len(res.witness_edges)
        (False, (0, 1, 2, 3), 6)
    """
    game = PebbleGame(G.m, k, l)
    for u, v in G.edges:
        if game.insert(u, v):
            continue
        span = game.reach(u, v)
        accepted: List[Edge] = [
            (min(a, b), max(a, b)) for a, b in game.D.edges() if a in span and b in span
        ]
        accepted.append((u, v))
        _logger.debug("(%d,%d) pebble game rejects %s", k, l, (u, v))
        return PebbleResult(False, tuple(sorted(span)), tuple(sorted(accepted)))
    return PebbleResult(True)


class PebbleOracle(OracleIndep):
    """Exact independence in A(1) and A(2)"""

    def __init__(self, G: Graph) -> None:
        self.G = G
        self.evidence: dict = {}

    def assess_indep(self, dim: int) -> bool:
        if dim == 1:
            res = pebble_game(self.G, 1, 1)
        elif dim == 2:
            res = pebble_game(self.G, 2, 3)
        else:
            raise ValueError(f"no pebble game decides A({dim})")
        self.evidence[dim] = res
        return res.independent

