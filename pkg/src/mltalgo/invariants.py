"""
Classical graph invariants used as bounds

- ``max_clique`` / ``clique_number``: exact branch-and-bound search through
  networkx's ``max_weight_clique`` up to ``Options.clique_cap`` vertices; beyond
  the cap the best clique of the networkx approximation is returned, flagged as a
  lower bound only.
- ``is_chordal``: lexicographic breadth-first search, returning a perfect
  elimination ordering when the graph is chordal.
- ``treewidth_upper``: min-fill greedy elimination. Chordal graphs are recognized
  first and eliminated along their perfect elimination ordering, so the width is
  exact on them.
- ``chromatic_number``: DSATUR branch-and-bound up to ``Options.chromatic_cap``
  vertices, otherwise networkx's DSATUR greedy coloring flagged as an upper bound.
- ``chordless_cycles``: induced cycles in their natural cyclic order, enumerated
  by networkx within ``Options.cycle_budget``.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms import approximation

from .graph_core import Graph
from .mlt_config import Exactness, Options

_logger = logging.getLogger(__name__)


class CliqueResult(NamedTuple):
    size: int
    clique: Tuple[int, ...]
    exactness: Exactness


class ColoringResult(NamedTuple):
    colors_used: int
    coloring: Tuple[int, ...]  # color of each vertex
    exactness: Exactness


class CycleEnumeration(NamedTuple):
    cycles: List[Tuple[int, ...]]
    complete: bool


def max_clique(G: Graph, options=Options()) -> CliqueResult:
    if G.m == 0:
        return CliqueResult(0, (), Exactness.Exact)
    g = G.to_networkx()
    if G.m <= options.clique_cap:
        clique, _ = nx.max_weight_clique(g, weight=None)
        return CliqueResult(len(clique), tuple(sorted(clique)), Exactness.Exact)
    _logger.debug("clique search capped at %d vertices", options.clique_cap)
    clique = approximation.max_clique(g)
    return CliqueResult(len(clique), tuple(sorted(clique)), Exactness.LowerBoundOnly)


def clique_number(G: Graph, options=Options()) -> int:
    """
    Examples:
        >>> from mltalgo.generators import complete, grotzsch
        >>> clique_number(complete(4)), clique_number(grotzsch())
        (4, 2)
    """
    return max_clique(G, options).size


def _lex_bfs(G: Graph) -> List[int]:
    """Lexicographic BFS visiting order (ties broken by smallest label)."""
    labels: List[List[int]] = [[] for _ in range(G.m)]
    visited = [False] * G.m
    order = []
    for stamp in range(G.m, 0, -1):
        best = -1
        for v in range(G.m):
            if not visited[v] and (best < 0 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in G.neighbors(best):
            if not visited[w]:
                labels[w].append(stamp)
    return order


def _is_peo(G: Graph, ordering: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(ordering)}
    for v in ordering:
        later = [w for w in G.neighbors(v) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        if any(w != first and not G.has_edge(first, w) for w in later):
            return False
    return True


def is_chordal(G: Graph) -> Tuple[bool, Optional[List[int]]]:
    """
    The function `is_chordal` tests chordality by lexicographic BFS.

    :return: ``(True, peo)`` with a perfect elimination ordering, or ``(False, None)``

    Examples:
        >>> from mltalgo.generators import cycle, complete
        >>> is_chordal(cycle(4))[0], is_chordal(complete(5))[0]
        (False, True)
    """
    peo = _lex_bfs(G)[::-1]
    if _is_peo(G, peo):
        return True, peo
    return False, None


def elimination_width(G: Graph, ordering: Sequence[int]) -> int:
    """Width of the chordal cover produced by eliminating along ``ordering``."""
    adj = [set(G.neighbors(v)) for v in G.vertices()]
    width = 0
    for v in ordering:
        nbrs = adj[v]
        width = max(width, len(nbrs))
        for a in nbrs:
            adj[a] |= nbrs
            adj[a].discard(a)
            adj[a].discard(v)
        adj[v] = set()
    return width


def _fill_in(adj: List[Set[int]], v: int) -> int:
    nbrs = sorted(adj[v])
    return sum(
        1
        for i, a in enumerate(nbrs)
        for b in nbrs[i + 1 :]
        if b not in adj[a]
    )


def treewidth_upper(G: Graph) -> Tuple[int, List[int]]:
    """
    The function `treewidth_upper` returns the width of a min-fill elimination
    ordering together with the ordering itself.

    Ties are broken by degree and then by label. On chordal input the perfect
    elimination ordering is used and the width equals ω(G) - 1.

    Examples:
        >>> from mltalgo.generators import complete_bipartite, path
        >>> treewidth_upper(complete_bipartite(3, 3))[0], treewidth_upper(path(5))[0]
        (3, 1)
    """
    chordal, peo = is_chordal(G)
    if chordal:
        assert peo is not None
        return elimination_width(G, peo), peo
    adj = [set(G.neighbors(v)) for v in G.vertices()]
    remaining = set(G.vertices())
    ordering: List[int] = []
    width = 0
    while remaining:
        v = min(remaining, key=lambda u: (_fill_in(adj, u), len(adj[u]), u))
        nbrs = adj[v]
        width = max(width, len(nbrs))
        for a in nbrs:
            adj[a] |= nbrs
            adj[a].discard(a)
            adj[a].discard(v)
        adj[v] = set()
        remaining.discard(v)
        ordering.append(v)
    return width, ordering


def _dsatur_exact(G: Graph, upper: List[int], lower: int) -> Tuple[int, List[int]]:
    m = G.m
    colors = [-1] * m
    best_k = max(upper) + 1
    best = list(upper)

    def recurse(ncolored: int, nused: int) -> None:
        nonlocal best_k, best
        if nused >= best_k:
            return
        if ncolored == m:
            best_k, best = nused, list(colors)
            return
        v = max(
            (u for u in range(m) if colors[u] < 0),
            key=lambda u: (
                len({colors[w] for w in G.neighbors(u) if colors[w] >= 0}),
                G.degree(u),
                -u,
            ),
        )
        forbidden = {colors[w] for w in G.neighbors(v)}
        for c in range(nused):
            if c not in forbidden:
                colors[v] = c
                recurse(ncolored + 1, nused)
                colors[v] = -1
                if best_k <= lower:
                    return
        colors[v] = nused
        recurse(ncolored + 1, nused + 1)
        colors[v] = -1

    recurse(0, 0)
    return best_k, best


def chromatic_number(G: Graph, options=Options()) -> ColoringResult:
    """
    The function `chromatic_number` colors ``G`` with as few colors as it can prove.

    The DSATUR greedy coloring seeds the upper bound and the clique number the
    lower bound; the branch-and-bound search closes the gap when ``G.m`` is
    within ``options.chromatic_cap``.

    Examples:
        >>> from mltalgo.generators import grotzsch
        >>> chromatic_number(grotzsch()).colors_used
        4
    """
    if G.m == 0:
        return ColoringResult(0, (), Exactness.Exact)
    greedy = nx.greedy_color(G.to_networkx(), strategy="DSATUR")
    upper = [greedy[v] for v in G.vertices()]
    if G.m > options.chromatic_cap:
        _logger.debug("chromatic search capped at %d vertices", options.chromatic_cap)
        return ColoringResult(max(upper) + 1, tuple(upper), Exactness.UpperBoundOnly)
    lower = clique_number(G, options)
    k, coloring = _dsatur_exact(G, upper, lower)
    return ColoringResult(k, tuple(coloring), Exactness.Exact)


def canonical_cycle(cyc: Sequence[int]) -> Tuple[int, ...]:
    """Rotates a cyclic sequence to start at its minimum, then orients it so
    that the second entry is smaller than the last."""
    k = len(cyc)
    i = min(range(k), key=cyc.__getitem__)
    rot = list(cyc[i:]) + list(cyc[:i])
    if k > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def chordless_cycles(
    G: Graph, length_cap: Optional[int] = None, options=Options()
) -> CycleEnumeration:
    """
    The function `chordless_cycles` lists every induced cycle of length at least 3
    and at most ``length_cap``, each in its natural cyclic order.

    Enumeration stops after ``options.cycle_budget`` cycles, in which case the
    returned list is partial and ``complete`` is False.

    Examples:
        >>> from mltalgo.generators import complete
        >>> len(chordless_cycles(complete(4)).cycles)
        4
    """
    found: List[Tuple[int, ...]] = []
    complete = True
    for cyc in nx.chordless_cycles(G.to_networkx(), length_bound=length_cap):
        if len(cyc) < 3:
            continue
        if len(found) >= options.cycle_budget:
            complete = False
            _logger.debug("chordless cycle budget %d exhausted", options.cycle_budget)
            break
        found.append(canonical_cycle(cyc))
    found.sort(key=lambda c: (len(c), c))
    return CycleEnumeration(found, complete)
