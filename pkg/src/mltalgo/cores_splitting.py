"""
Cores and splittings

Two families of upper bounds on rank(G):

1. Cores. Deleting a vertex of degree < n is the inverse of a vertex addition
   with at most n - 1 neighbors, which preserves rank <= n. Hence an empty
   n-core certifies rank(G) <= n, and the smallest such n is the degeneracy of G
   plus one.

2. Splittings. If V(G) = V_1 u ... u V_k with rank(G[V_i]) <= r_i for every part
   and (r_i, r_j) in birank(G(V_i, V_j)) for every pair of parts, then
   rank(G) <= r_1 + ... + r_k. An acyclic coloring (proper, with every two color
   classes inducing a forest) is the special case r_i = 1, because a bipartite
   forest has an empty (1, 1)-core.

``search_splitting`` automates the second family: acyclic colorings with growing
color budgets, then two-part plans with small targets over a set of
bipartitions (all of them on small graphs).
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .ff_matrix import RandomSource
from .graph_core import Graph, bipartite_between, check_partition, induced_subgraph
from .invariants import chromatic_number, clique_number
from .mlt_config import BirankMethod, GraphError, Options
from .oracles.birank_oracle import birank_check
from .rigidity import rank_at_most, rank_of_graph

_logger = logging.getLogger(__name__)


class CoreResult(NamedTuple):
    core: Graph  # induced on ``kept``, relabeled
    kept: Tuple[int, ...]
    removal_order: Tuple[int, ...]


def n_core(G: Graph, n: int, queue_order: Optional[Sequence[int]] = None) -> CoreResult:
    """
    The function `n_core` deletes vertices of degree < n until none is left.

    :param queue_order: order in which the initial low-degree vertices are
        queued, a permutation of V(G); the surviving vertex set does not depend on it
    :raises ValueError: when n is negative or ``queue_order`` is not a permutation

    Examples:
        >>> from mltalgo.generators import grid
        >>> n_core(grid(3, 3), 3).kept
        ()
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    order = list(G.vertices()) if queue_order is None else list(queue_order)
    if sorted(order) != list(G.vertices()):
        raise ValueError(f"queue order must be a permutation of 0..{G.m - 1}, got {order}")
    degree = [G.degree(v) for v in G.vertices()]
    removed = [False] * G.m
    removal: List[int] = []
    queue = deque(v for v in order if degree[v] < n)
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        removal.append(v)
        for w in G.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
                if degree[w] == n - 1:
                    queue.append(w)
    kept = [v for v in G.vertices() if not removed[v]]
    core, labels = induced_subgraph(G, kept)
    return CoreResult(core, labels, tuple(removal))


def empty_core_bound(G: Graph) -> int:
    """
    The smallest n whose n-core is empty, i.e. the degeneracy plus one.

    Examples:
        >>> from mltalgo.generators import grid, complete
        >>> empty_core_bound(grid(2, 4)), empty_core_bound(complete(5))
        (3, 5)
    """
    if G.m == 0:
        return 1
    return max(nx.core_number(G.to_networkx()).values()) + 1


@dataclass
class PartCheck:
    part: int
    target: int
    holds: bool


@dataclass
class PairCheck:
    first: int
    second: int
    member: bool
    method: BirankMethod
    generic_rank: Optional[int] = None
    seeds: List[int] = field(default_factory=list)


@dataclass
class SplitPlan:
    parts: List[Tuple[int, ...]]
    targets: List[int]
    part_checks: List[PartCheck] = field(default_factory=list)
    pair_checks: List[PairCheck] = field(default_factory=list)
    bound: Optional[int] = None  # sum of targets once every check passed
    failure: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "targets": list(self.targets),
            "bound": self.bound,
            "failure": self.failure,
            "part_checks": [
                {"part": c.part, "target": c.target, "holds": c.holds}
                for c in self.part_checks
            ],
            "pair_checks": [
                {
                    "parts": [c.first, c.second],
                    "member": c.member,
                    "method": c.method.name.lower(),
                    "generic_rank": c.generic_rank,
                    "seeds": list(c.seeds),
                }
                for c in self.pair_checks
            ],
        }


def splitting_bound(G: Graph, plan: SplitPlan, options=Options()) -> Optional[int]:
    """
    The function `splitting_bound` verifies a split plan and returns the sum of
    its targets, or None.

    The checks are recorded on ``plan``; on failure ``plan.failure`` names the
    first condition that does not hold.

    :raises GraphError: when the parts do not partition V(G) or a target is below 1

    Examples:
        >>> from mltalgo.generators import octahedron
        >>> splitting_bound(octahedron(), SplitPlan([(0, 3, 4), (1, 2, 5)], [2, 2]))
        4
    """
    parts = check_partition(G, plan.parts)
    if len(plan.targets) != len(parts):
        raise GraphError("one target per part is required")
    if any(r < 1 for r in plan.targets):
        raise GraphError("targets must be at least 1")
    plan.parts = parts
    plan.part_checks, plan.pair_checks = [], []
    plan.bound, plan.failure = None, None
    for idx, (part, r) in enumerate(zip(parts, plan.targets)):
        H, _ = induced_subgraph(G, part)
        holds = rank_at_most(H, r, options)
        plan.part_checks.append(PartCheck(idx, r, holds))
        if not holds:
            plan.failure = f"part {idx} has rank above {r}"
            return None
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            B = bipartite_between(G, parts[i], parts[j])
            r1, r2 = plan.targets[i], plan.targets[j]
            res = birank_check(B, r1, r2, options.trials, None, options)
            plan.pair_checks.append(
                PairCheck(i, j, res.member, res.method, res.generic_rank, res.seeds)
            )
            if not res.member:
                plan.failure = f"({r1}, {r2}) is not in the birank of parts {i} and {j}"
                return None
    plan.bound = sum(plan.targets)
    return plan.bound


class _EffortExceeded(Exception):
    pass


def _bfs_order(G: Graph) -> List[int]:
    seen = [False] * G.m
    order: List[int] = []
    for root in G.vertices():
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in G.sorted_neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _closes_cycle(G: Graph, colors: List[int], v: int, c: int) -> bool:
    """True if coloring v with c breaks properness or closes a bichromatic cycle."""
    by_color: Dict[int, List[int]] = {}
    for w in G.neighbors(v):
        cw = colors[w]
        if cw == c:
            return True
        if cw >= 0:
            by_color.setdefault(cw, []).append(w)
    for c2, nbrs in by_color.items():
        if len(nbrs) < 2:
            continue
        # components of the colored subgraph on classes {c, c2}
        label: Dict[int, int] = {}
        for start in nbrs:
            if start in label:
                return True
            label[start] = start
            stack = [start]
            while stack:
                x = stack.pop()
                for y in G.neighbors(x):
                    if y not in label and colors[y] in (c, c2) and y != v:
                        label[y] = start
                        stack.append(y)
    return False


def _backtrack(
    G: Graph, budget: int, effort: Optional[int]
) -> Tuple[Optional[List[int]], bool]:
    """Returns (coloring or None, complete) where complete means the search finished."""
    order = _bfs_order(G)
    colors = [-1] * G.m
    nodes = 0

    def recurse(idx: int, nused: int) -> bool:
        nonlocal nodes
        if idx == G.m:
            return True
        nodes += 1
        if effort is not None and nodes > effort:
            raise _EffortExceeded
        v = order[idx]
        for c in range(min(nused + 1, budget)):
            if not _closes_cycle(G, colors, v, c):
                colors[v] = c
                if recurse(idx + 1, max(nused, c + 1)):
                    return True
                colors[v] = -1
        return False

    try:
        found = recurse(0, 0)
    except _EffortExceeded:
        return None, False
    return (list(colors) if found else None), True


def _greedy_repair(
    G: Graph, budget: int, steps: int, rng: RandomSource
) -> Optional[List[int]]:
    colors = [-1] * G.m
    queue = deque(rng.permutation(G.m))
    while queue and steps > 0:
        steps -= 1
        v = queue.popleft()
        feasible = [c for c in range(budget) if not _closes_cycle(G, colors, v, c)]
        if feasible:
            colors[v] = feasible[rng.integers(0, len(feasible))]
            continue
        # kick: uncolor every neighbor, then v is safe with any color
        for w in G.neighbors(v):
            if colors[w] >= 0:
                colors[w] = -1
                queue.append(w)
        colors[v] = rng.integers(0, budget)
    return None if queue else colors


def _plan_from_coloring(colors: Sequence[int]) -> SplitPlan:
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    parts = [tuple(classes[c]) for c in sorted(classes)]
    return SplitPlan(parts, [1] * len(parts))


def acyclic_coloring(
    G: Graph, color_budget: int, effort: Optional[int] = None, options=Options()
) -> Optional[SplitPlan]:
    """
    The function `acyclic_coloring` looks for an acyclic coloring with at most
    ``color_budget`` colors and returns it as a verified plan with all targets 1.

    Graphs with at most ``options.acyclic_exact_cap`` vertices are searched
    exhaustively. Larger graphs get a backtracking search limited to ``effort``
    nodes, then randomized greedy coloring with local repair.

    Examples:
        >>> from mltalgo.generators import grid, complete
        >>> acyclic_coloring(grid(3, 3), 3).bound
        3
        >>> acyclic_coloring(complete(4), 3) is None
        True
    """
    if color_budget < 1:
        raise ValueError(f"color budget must be at least 1, got {color_budget}")
    if G.m == 0:
        return None
    if effort is None:
        effort = options.acyclic_effort
    exact = G.m <= options.acyclic_exact_cap
    colors, _ = _backtrack(G, color_budget, None if exact else effort)
    if colors is None and not exact:
        rng = RandomSource(options.seed)
        for attempt in range(8):
            colors = _greedy_repair(G, color_budget, effort // 8 + G.m, rng.spawn(attempt))
            if colors is not None:
                break
    if colors is None:
        return None
    plan = _plan_from_coloring(colors)
    if splitting_bound(G, plan, options) is None:
        _logger.debug("acyclic coloring failed verification: %s", plan.failure)
        return None
    return plan


def _bipartitions(G: Graph, options: Options) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    m = G.m
    if m <= options.split_exhaustive_cap:
        for mask in range(1 << (m - 1)):
            left = (0,) + tuple(v for v in range(1, m) if mask >> (v - 1) & 1)
            right = tuple(v for v in range(m) if v not in left)
            if right:
                yield left, right
        return
    seen = set()
    coloring = chromatic_number(G, options).coloring
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    candidates = []
    for s in range(1, len(groups)):
        candidates.append(sorted(v for g in groups[:s] for v in g))
    order = _bfs_order(G)
    candidates.append(sorted(order[: m // 2]))
    for left in candidates:
        key = frozenset(left)
        if key in seen or len(left) in (0, m):
            continue
        seen.add(key)
        yield tuple(left), tuple(v for v in range(m) if v not in key)


def search_splitting(
    G: Graph, options=Options(), ceiling: Optional[int] = None, floor: int = 1
) -> Optional[SplitPlan]:
    """
    The function `search_splitting` returns the verified plan with the smallest
    bound below ``ceiling`` that it can find, or None.

    The search stops early once a plan reaches ``floor`` (a known lower bound on
    rank(G)).

    Examples:
        >>> from mltalgo.generators import octahedron
        >>> search_splitting(octahedron()).bound
        4
    """
    m = G.m
    if m == 0:
        return None
    best: Optional[SplitPlan] = None
    best_bound = m + 1 if ceiling is None else ceiling

    def offer(plan: Optional[SplitPlan]) -> None:
        nonlocal best, best_bound
        if plan is not None and plan.bound is not None and plan.bound < best_bound:
            best, best_bound = plan, plan.bound
            _logger.debug("split plan with bound %d", best_bound)

    if m < best_bound:
        trivial = SplitPlan([(v,) for v in G.vertices()], [1] * m)
        splitting_bound(G, trivial, options)
        offer(trivial)
    if best_bound <= floor:
        return best

    for k in range(max(1, clique_number(G, options)), best_bound):
        if m >= k and G.num_edges > (k - 1) * m - comb(k, 2):
            continue  # two-class forests cannot hold that many edges
        plan = acyclic_coloring(G, k, options.acyclic_effort, options)
        if plan is not None:
            offer(plan)
            break
    if best_bound <= floor:
        return best

    rank_cache: Dict[FrozenSet[int], int] = {}

    def part_rank(part: Tuple[int, ...]) -> int:
        key = frozenset(part)
        if key not in rank_cache:
            rank_cache[key] = rank_of_graph(induced_subgraph(G, part)[0], options)
        return rank_cache[key]

    cap = options.split_max_target
    for left, right in _bipartitions(G, options):
        lo1, lo2 = part_rank(left), part_rank(right)
        if lo1 > cap or lo2 > cap or lo1 + lo2 >= best_bound:
            continue
        found = False
        for total in range(lo1 + lo2, best_bound):
            for r1 in range(lo1, min(cap, total - lo2) + 1):
                r2 = total - r1
                if r2 > cap:
                    continue
                plan = SplitPlan([left, right], [r1, r2])
                if splitting_bound(G, plan, options) is not None:
                    offer(plan)
                    found = True
                    break
            if found:
                break
        if best_bound <= floor:
            break
    return best
