"""
Bounds engine

``mlt_bounds`` gathers every bound mltalgo knows into a certified interval
[lower, upper] for the maximum likelihood threshold, and ``rank_report`` computes
rank(G) exactly together with the certificates that pin it down from both sides.

Bounds used:

    lower   1 for an edgeless graph, 2 for a forest with an edge, 3 otherwise;
            the clique number
    upper   rank(G); treewidth + 1; the empty-core bound; splitting plans

Every bound comes with a ``Certificate`` whose witness is self-contained
(cliques, elimination orderings, removal orders, split plans, violating
subgraphs, seeds), so that a verifier can recheck it without repeating the
search. mlt is only reported exact when the two ends meet; rank alone is never
taken as the value of mlt.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx

from .cores_splitting import empty_core_bound, n_core, search_splitting
from .ff_matrix import RandomSource
from .graph_core import Graph
from .invariants import is_chordal, max_clique, treewidth_upper
from .mlt_config import Exactness, Options
from .oracles.pebble_oracle import pebble_game
from .oracles.rigidity_oracle import generic_rank
from .rigidity import laman_count_check, rank_of_graph, rank_with_seeds

_logger = logging.getLogger(__name__)


@dataclass
class Certificate:
    method: str
    bound: int
    witness: Dict[str, Any] = field(default_factory=dict)
    seeds: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "bound": self.bound,
            "witness": self.witness,
            "seeds": list(self.seeds),
        }


@dataclass
class BoundsReport:
    """Certified interval for one invariant (mlt, rank, wmlt or smt)

    Examples:
        >>> report = BoundsReport("rank", 3, 3, 3)
        >>> report.to_dict()["exact"]
        3
    """

    invariant: str
    lower: int
    upper: int
    exact: Optional[int] = None
    certificates: List[Certificate] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        assert self.lower <= self.upper, "empty interval"
        assert self.exact is None or self.lower == self.exact == self.upper

    def to_dict(self) -> Dict[str, Any]:
        return {
            "invariant": self.invariant,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "certificates": [c.to_dict() for c in self.certificates],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"{self.invariant}.lower {self.lower}",
            f"{self.invariant}.upper {self.upper}",
            f"{self.invariant}.exact {'-' if self.exact is None else self.exact}",
        ]
        for c in self.certificates:
            seeds = ",".join(str(s) for s in c.seeds) or "-"
            lines.append(f"{self.invariant}.certificate {c.method} {c.bound} seeds={seeds}")
        lines.extend(f"{self.invariant}.note {note}" for note in self.notes)
        return "\n".join(lines) + "\n"


def _independence_certificate(
    G: Graph, d: int, rank: int, options: Options
) -> Certificate:
    """Evidence for E(G) being independent, or dependent, in A(d)."""
    if d <= 2:
        k, l = (1, 1) if d == 1 else (2, 3)
        res = pebble_game(G, k, l)
        witness: Dict[str, Any] = {
            "dimension": d,
            "route": "pebble",
            "independent": res.independent,
        }
        if not res.independent:
            witness["circuit_vertices"] = list(res.witness_vertices)
            witness["circuit_edges"] = [list(e) for e in res.witness_edges]
        return Certificate("independence" if res.independent else "dependence", rank, witness)
    gen = generic_rank(G, d, options.trials, RandomSource(options.seed), options)
    witness = {
        "dimension": d,
        "route": "generic",
        "independent": gen.independent,
        "generic_rank": gen.generic_rank,
        "num_edges": gen.size,
        "prime": gen.prime,
    }
    return Certificate(
        "independence" if gen.independent else "dependence", rank, witness, gen.seeds
    )


def mlt_bounds(G: Graph, options=Options()) -> BoundsReport:
    """
    The function `mlt_bounds` computes a certified interval for mlt(G).

    Examples:
        >>> from mltalgo.generators import complete_bipartite
        >>> report = mlt_bounds(complete_bipartite(3, 3))
        >>> report.lower, report.upper, report.exact
        (3, 3, 3)
    """
    if G.num_edges == 0:
        cert = Certificate("degenerate", 1, {"edgeless": True})
        return BoundsReport("mlt", 1, 1, 1, [cert])

    certs: List[Certificate] = []
    notes: List[str] = []
    forest = nx.is_forest(G.to_networkx())
    lower = 2 if forest else 3
    certs.append(Certificate("degenerate", lower, {"forest": forest}))

    clique = max_clique(G, options)
    certs.append(Certificate("clique", clique.size, {"clique": list(clique.clique)}))
    if clique.exactness is not Exactness.Exact:
        notes.append("clique search capped; clique bound is a lower bound only")
    lower = max(lower, clique.size)

    rank, rank_seeds = rank_with_seeds(G, options)
    certs.append(Certificate("rank", rank, {"prime": options.prime}, rank_seeds))
    width, ordering = treewidth_upper(G)
    certs.append(Certificate("treewidth", width + 1, {"ordering": list(ordering)}))
    core = empty_core_bound(G)
    certs.append(
        Certificate("core", core, {"removal_order": list(n_core(G, core).removal_order)})
    )
    upper = min(rank, width + 1, core)

    # rank never exceeds a splitting bound, so a plan only adds a certificate
    ceiling = min(width + 1, core)
    if ceiling > rank:
        plan = search_splitting(G, options, ceiling=ceiling, floor=max(rank, lower))
        if plan is not None and plan.bound is not None:
            seeds = sorted({s for c in plan.pair_checks for s in c.seeds})
            certs.append(Certificate("splitting", plan.bound, plan.to_dict(), seeds))

    if is_chordal(G)[0]:
        notes.append("chordal: mlt equals the clique number")
    exact = lower if lower == upper else None
    if exact is None:
        notes.append(f"interval [{lower}, {upper}] is not tight")
    _logger.info("mlt in [%d, %d]", lower, upper)
    return BoundsReport("mlt", lower, upper, exact, certs, notes)


def rank_report(G: Graph, options=Options()) -> BoundsReport:
    """
    The function `rank_report` computes rank(G) exactly and certifies it.

    Lower certificates: a Laman count violation at n = rank - 1 and dependence
    of E(G) in A(rank - 2). Upper certificates: independence in A(rank - 1),
    the empty-core bound when it matches, and a splitting plan when one with
    bound rank is found.

    Examples:
        >>> from mltalgo.generators import octahedron
        >>> report = rank_report(octahedron())
        >>> report.exact, report.certificates[0].witness["num_edges"]
        (4, 12)
    """
    rank = rank_of_graph(G, options)
    certs: List[Certificate] = []
    notes: List[str] = []
    if rank >= 3:
        laman = laman_count_check(G, rank - 1, options)
        if laman.violation is not None:
            v = laman.violation
            certs.append(
                Certificate(
                    "laman",
                    rank,
                    {
                        "n": rank - 1,
                        "vertices": list(v.vertices),
                        "num_edges": v.num_edges,
                        "bound": v.bound,
                    },
                )
            )
        if laman.partial:
            notes.append("Laman count checked on the whole graph and maximal cliques only")
        certs.append(_independence_certificate(G, rank - 2, rank, options))
    elif rank == 2:
        certs.append(Certificate("degenerate", 2, {"edge": list(G.edges[0])}))

    if rank >= 2:
        certs.append(_independence_certificate(G, rank - 1, rank, options))
    else:
        certs.append(Certificate("degenerate", 1, {"edgeless": True}))

    core = empty_core_bound(G)
    if core == rank:
        certs.append(
            Certificate("core", core, {"removal_order": list(n_core(G, core).removal_order)})
        )
    if rank >= 2:
        plan = search_splitting(G, options, ceiling=rank + 1, floor=rank)
        if plan is not None and plan.bound == rank:
            seeds = sorted({s for c in plan.pair_checks for s in c.seeds})
            certs.append(Certificate("splitting", rank, plan.to_dict(), seeds))
    _logger.info("rank %d", rank)
    return BoundsReport("rank", rank, rank, rank, certs, notes)
