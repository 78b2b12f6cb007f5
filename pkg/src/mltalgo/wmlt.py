"""
Weak maximum likelihood threshold

wmlt(G) is the smallest sample count for which the maximum likelihood estimate
exists with positive probability. What is known and used here:

- wmlt = 1 iff G is edgeless; otherwise wmlt >= 2, and wmlt >= 3 as soon as G
  contains a triangle, since wmlt(C_3) = 3 and the bound passes to supergraphs.
- wmlt(C_k) = 2 for k >= 4, wmlt(G) <= χ(G), and wmlt(G) <= mlt(G).
- Splitting: if rᵢ bounds wmlt(G[Vᵢ]) for a partition V_1, ..., V_k then
  wmlt(G) <= r_1 + ... + r_k. For a disjoint union wmlt is the maximum over the
  components.
- Buhl's cycle condition is necessary for wmlt(G) = 2: some cyclic ordering of V
  must restrict, on every chordless cycle, to an ordering other than the cycle's
  own. Whether it is sufficient is open, so a satisfied condition is reported
  as a note and never as a value.

By default the cycle condition forbids the cycle order in the orientation the
chordless cycle enumeration returns, a reading the Grötzsch graph satisfies.
``strict=True`` forbids its reflection as well; under that reading the Grötzsch
graph has no admissible ordering. A triangle fails under both readings.
"""

import logging
from itertools import islice
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .graph_core import Graph, check_partition, induced_subgraph
from .invariants import canonical_cycle, chordless_cycles, chromatic_number, clique_number
from .mlt_config import GraphError, Options, UnverifiedBoundError, Verdict
from .mlt_engine import BoundsReport, Certificate, mlt_bounds

_logger = logging.getLogger(__name__)


class CyclicOrdering:
    """A permutation of 0..m-1 read cyclically, stored rotated to start at 0

    Examples:
        >>> CyclicOrdering([2, 0, 3, 1]).order
        (0, 3, 1, 2)
    """

    __slots__ = ("order",)

    def __init__(self, order: Sequence[int]) -> None:
        seq = [int(v) for v in order]
        if sorted(seq) != list(range(len(seq))):
            raise GraphError(f"{seq} is not a permutation of 0..{len(seq) - 1}")
        if seq:
            i = seq.index(0)
            seq = seq[i:] + seq[:i]
        self.order: Tuple[int, ...] = tuple(seq)

    @property
    def m(self) -> int:
        return len(self.order)

    def restrict(self, vertices: Sequence[int]) -> Tuple[int, ...]:
        """The induced cyclic ordering on ``vertices``."""
        keep = set(vertices)
        return tuple(v for v in self.order if v in keep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicOrdering):
            return NotImplemented
        return self.order == other.order

    def __repr__(self) -> str:
        return f"CyclicOrdering({list(self.order)})"


class BuhlResult(NamedTuple):
    verdict: Verdict
    witness: Optional[CyclicOrdering]
    nodes: int  # search nodes visited


class WmltSplit(NamedTuple):
    parts: List[Tuple[int, ...]]
    targets: List[int]
    bound: int


class _BudgetExhausted(Exception):
    pass


def _rotation_form(cyc: Sequence[int]) -> Tuple[int, ...]:
    i = min(range(len(cyc)), key=cyc.__getitem__)
    return tuple(cyc[i:]) + tuple(cyc[:i])


def _repeats_cycle(restricted: Sequence[int], cyc: Sequence[int], strict: bool) -> bool:
    if strict:
        return canonical_cycle(restricted) == canonical_cycle(cyc)
    return _rotation_form(restricted) == _rotation_form(cyc)


def verify_buhl_witness(
    G: Graph, ordering: CyclicOrdering, options=Options(), strict: bool = False
) -> bool:
    """
    The function `verify_buhl_witness` rechecks a cyclic ordering against every
    chordless cycle of G.

    Returns False when the cycle enumeration exceeds its budget.

    Examples:
        >>> from mltalgo.generators import cycle
        >>> verify_buhl_witness(cycle(4), CyclicOrdering([0, 2, 1, 3]))
        True
        >>> verify_buhl_witness(cycle(4), CyclicOrdering([0, 1, 2, 3]))
        False
    """
    if ordering.m != G.m:
        raise GraphError(f"ordering has {ordering.m} vertices, graph has {G.m}")
    cycles = chordless_cycles(G, options=options)
    if not cycles.complete:
        return False
    return not any(
        _repeats_cycle(ordering.restrict(cyc), cyc, strict) for cyc in cycles.cycles
    )


def _search_ordering(
    G: Graph,
    cycles: List[Tuple[int, ...]],
    effort: Optional[int],
    strict: bool,
) -> Tuple[Optional[List[int]], int, bool]:
    """Depth-first search with vertex 0 first; returns (order, nodes, complete)."""
    containing: Dict[int, List[int]] = {v: [] for v in G.vertices()}
    for idx, cyc in enumerate(cycles):
        for v in cyc:
            containing[v].append(idx)
    missing = [len(cyc) for cyc in cycles]
    placed = [0]
    used = [False] * G.m
    used[0] = True
    for idx in containing[0]:
        missing[idx] -= 1
    nodes = 0

    def closes_bad_cycle(v: int) -> bool:
        for idx in containing[v]:
            if missing[idx] == 0:
                cyc = cycles[idx]
                keep = set(cyc)
                restricted = [w for w in placed if w in keep]
                if _repeats_cycle(restricted, cyc, strict):
                    return True
        return False

    def recurse() -> bool:
        nonlocal nodes
        if len(placed) == G.m:
            return True
        nodes += 1
        if effort is not None and nodes > effort:
            raise _BudgetExhausted
        for v in G.vertices():
            if used[v]:
                continue
            used[v] = True
            placed.append(v)
            for idx in containing[v]:
                missing[idx] -= 1
            if not closes_bad_cycle(v) and recurse():
                return True
            for idx in containing[v]:
                missing[idx] += 1
            placed.pop()
            used[v] = False
        return False

    try:
        found = recurse()
    except _BudgetExhausted:
        return None, nodes, False
    return (list(placed) if found else None), nodes, True


def buhl_cycle_condition(G: Graph, options=Options(), strict: bool = False) -> BuhlResult:
    """
    The function `buhl_cycle_condition` searches for a cyclic ordering of V(G)
    satisfying Buhl's cycle condition.

    A triangle settles the condition negatively at once. A proper
    coloring with at most 3 colors, listed class by class, is tried next. After
    that orderings are enumerated with vertex 0 first; the enumeration is
    complete up to ``options.buhl_cap`` vertices and limited to
    ``options.buhl_effort`` search nodes above it, returning ``Unknown`` when
    the limit is hit.

    Examples:
        >>> from mltalgo.generators import cycle, complete
        >>> res = buhl_cycle_condition(cycle(4))
        >>> res.verdict, res.witness
        (<Verdict.Satisfied: 0>, CyclicOrdering([0, 2, 1, 3]))
        >>> buhl_cycle_condition(complete(3)).verdict
        <Verdict.Unsatisfied: 1>
    """
    if G.m == 0:
        return BuhlResult(Verdict.Satisfied, CyclicOrdering([]), 0)
    if clique_number(G, options) >= 3:
        return BuhlResult(Verdict.Unsatisfied, None, 0)
    coloring = chromatic_number(G, options)
    if coloring.colors_used <= 3:
        blocks = CyclicOrdering(sorted(G.vertices(), key=lambda v: (coloring.coloring[v], v)))
        if verify_buhl_witness(G, blocks, options, strict):
            return BuhlResult(Verdict.Satisfied, blocks, 0)
    enumeration = chordless_cycles(G, options=options)
    if not enumeration.complete:
        return BuhlResult(Verdict.Unknown, None, 0)
    effort = None if G.m <= options.buhl_cap else options.buhl_effort
    order, nodes, complete = _search_ordering(G, enumeration.cycles, effort, strict)
    _logger.debug("cycle condition search: %d nodes, complete=%s", nodes, complete)
    if order is not None:
        witness = CyclicOrdering(order)
        assert verify_buhl_witness(G, witness, options, strict)
        return BuhlResult(Verdict.Satisfied, witness, nodes)
    if not complete:
        return BuhlResult(Verdict.Unknown, None, nodes)
    return BuhlResult(Verdict.Unsatisfied, None, nodes)


def _is_long_cycle(g: nx.Graph) -> bool:
    return g.number_of_nodes() >= 4 and all(d == 2 for _, d in g.degree())


def verified_wmlt_upper(G: Graph, options=Options()) -> int:
    """
    The function `verified_wmlt_upper` bounds wmlt(G) component by component.

    A component is bounded by 1 when it is a single vertex, by 2 when it is
    bipartite or a chordless cycle of length at least 4, and by its chromatic
    number otherwise. The maximum over the components is returned.

    Examples:
        >>> from mltalgo.generators import cycle, complete
        >>> verified_wmlt_upper(cycle(5)), verified_wmlt_upper(complete(4))
        (2, 4)
    """
    if G.m == 0:
        return 1
    g = G.to_networkx()
    best = 1
    for comp in nx.connected_components(g):
        if len(comp) == 1:
            continue
        sub = g.subgraph(comp)
        if nx.is_bipartite(sub) or _is_long_cycle(sub):
            best = max(best, 2)
        else:
            H, _ = induced_subgraph(G, comp)
            best = max(best, chromatic_number(H, options).colors_used)
    return best


def wmlt_split_bound(
    G: Graph, parts: Sequence[Sequence[int]], targets: Sequence[int], options=Options()
) -> int:
    """
    The function `wmlt_split_bound` verifies every target against its part and
    returns their sum.

    :raises GraphError: when the parts do not partition V(G) or a target is below 1
    :raises UnverifiedBoundError: naming the first part whose target cannot be verified

    Examples:
        >>> from mltalgo.generators import grotzsch
        >>> wmlt_split_bound(grotzsch(), [[5, 6, 7, 8, 9], [0, 1, 2, 3, 4, 10]], [1, 2])
        3
    """
    checked = check_partition(G, parts)
    if len(targets) != len(checked):
        raise GraphError("one target per part is required")
    if any(r < 1 for r in targets):
        raise GraphError("targets must be at least 1")
    for idx, (part, r) in enumerate(zip(checked, targets)):
        verified = verified_wmlt_upper(induced_subgraph(G, part)[0], options)
        if r < verified:
            raise UnverifiedBoundError(idx, r, verified)
    return sum(targets)


def wmlt_split_search(G: Graph, options=Options()) -> Optional[WmltSplit]:
    """
    The function `wmlt_split_search` tries the whole graph as one part, then
    every maximal independent set against the rest, and keeps the best split.

    At most ``options.independent_set_budget`` independent sets are tried.
    """
    if G.m == 0:
        return None
    whole = tuple(G.vertices())
    r_whole = verified_wmlt_upper(G, options)
    best = WmltSplit([whole], [r_whole], r_whole)
    complement = nx.complement(G.to_networkx())
    for indep in islice(nx.find_cliques(complement), options.independent_set_budget):
        part = tuple(sorted(indep))
        rest = tuple(v for v in G.vertices() if v not in set(part))
        if not rest:
            continue
        r_rest = verified_wmlt_upper(induced_subgraph(G, rest)[0], options)
        if 1 + r_rest < best.bound:
            best = WmltSplit([part, rest], [1, r_rest], 1 + r_rest)
    return best


def wmlt_bounds(G: Graph, options=Options()) -> BoundsReport:
    """
    The function `wmlt_bounds` computes a certified interval for wmlt(G).

    Examples:
        >>> from mltalgo.generators import cycle
        >>> report = wmlt_bounds(cycle(5))
        >>> report.lower, report.upper, report.exact
        (2, 2, 2)
    """
    if G.num_edges == 0:
        return BoundsReport("wmlt", 1, 1, 1, [Certificate("degenerate", 1, {"edgeless": True})])
    certs: List[Certificate] = []
    notes: List[str] = []
    omega = clique_number(G, options)
    lower = 3 if omega >= 3 else 2
    certs.append(Certificate("degenerate", lower, {"triangle": omega >= 3}))

    chrom = chromatic_number(G, options)
    certs.append(Certificate("chromatic", chrom.colors_used, {"coloring": list(chrom.coloring)}))
    upper = chrom.colors_used

    split = wmlt_split_search(G, options)
    if split is not None:
        certs.append(
            Certificate(
                "splitting",
                split.bound,
                {"parts": [list(p) for p in split.parts], "targets": list(split.targets)},
            )
        )
        upper = min(upper, split.bound)

    mlt = mlt_bounds(G, options)
    certs.append(Certificate("mlt", mlt.upper, {"mlt_lower": mlt.lower}))
    upper = min(upper, mlt.upper)

    if lower == 2 and upper > 2:
        buhl = buhl_cycle_condition(G, options)
        witness = {"verdict": buhl.verdict.name.lower()}
        if buhl.witness is not None:
            witness["ordering"] = list(buhl.witness.order)
        certs.append(Certificate("buhl", 2, witness))
        if buhl.verdict is Verdict.Satisfied:
            notes.append("cycle condition satisfied; necessary but not known sufficient for wmlt 2")
            # the reading that also forbids reflections runs only as a complete search
            if G.m <= options.buhl_cap:
                strict_res = buhl_cycle_condition(G, options, strict=True)
                witness["strict_verdict"] = strict_res.verdict.name.lower()
                if strict_res.verdict is Verdict.Unsatisfied:
                    notes.append("no ordering avoids the reflected cycle orders as well")
            else:
                witness["strict_verdict"] = "unchecked"
        elif buhl.verdict is Verdict.Unknown:
            notes.append("cycle condition undecided within the search budget")
        else:
            notes.append("cycle condition fails for every cyclic ordering")

    exact = lower if lower == upper else None
    return BoundsReport("wmlt", lower, upper, exact, certs, notes)
