"""
Command-line front end, installed as the ``mltalgo`` console script::

    console_scripts =
         mltalgo = mltalgo.cli:run

Every subcommand reads a graph in edge-list format from a file, or from stdin
when the file is ``-``, and writes one JSON document (``--format json``, the
default) or ``key value`` lines (``--format text``) to stdout. Logging goes to
stderr. Exit codes: 0 on success, 1 when a domain computation fails (the score
matching estimator does not exist, a split plan does not verify), 2 on usage,
parse and input errors.

Examples::

    mltalgo gen grid 3 3 | mltalgo bounds -
    mltalgo gen octahedron | mltalgo rank -
    mltalgo gen complete 4 | mltalgo sme exists - --data random:3
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from mltalgo import __version__

from .cores_splitting import SplitPlan, n_core, search_splitting, splitting_bound
from .ff_matrix import RandomSource
from .generators import generate_named, generator_names
from .graph_core import Graph, bipartite_between, parse_graph, render_graph
from .mlt_config import (
    GraphError,
    Options,
    PrimeChoice,
    SingularSystemError,
    UnverifiedBoundError,
)
from .mlt_engine import BoundsReport, mlt_bounds, rank_report
from .oracles.birank_oracle import birank_check
from .oracles.pebble_oracle import pebble_game
from .score_matching import SampleData, conjecture_lf_check, sme_exists, sme_solve
from .wmlt import wmlt_bounds

__author__ = "Wai-Shing Luk"
__copyright__ = "Wai-Shing Luk"
__license__ = "MIT"

_logger = logging.getLogger(__name__)


class DomainFailure(Exception):
    """A computation finished with a negative domain answer (exit code 1)."""


# ---- CLI ----


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _vertex_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=int,
        default=os.environ.get("MLT_SEED", "0"),
        help="base seed of all randomized verdicts (default: $MLT_SEED or 0)",
    )
    common.add_argument("--trials", type=_positive, default=Options.trials)
    common.add_argument("--prime", choices=[c.name for c in PrimeChoice], default="p61")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--subgraph-cap", type=_positive, default=Options.subgraph_cap)
    common.add_argument("--chromatic-cap", type=_positive, default=Options.chromatic_cap)
    common.add_argument("--buhl-cap", type=_positive, default=Options.buhl_cap)
    common.add_argument(
        "-v",
        "--verbose",
        dest="loglevel",
        help="set loglevel to INFO",
        action="store_const",
        const=logging.INFO,
    )
    common.add_argument(
        "-vv",
        "--very-verbose",
        dest="loglevel",
        help="set loglevel to DEBUG",
        action="store_const",
        const=logging.DEBUG,
    )
    return common


def parse_args(args):
    """Parse command line parameters

    Args:
      args (List[str]): command line parameters as list of strings
          (for example  ``["rank", "graph.txt"]``).

    Returns:
      :obj:`argparse.Namespace`: command line parameters namespace
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="mltalgo", description="Certified bounds on maximum likelihood thresholds"
    )
    parser.add_argument("--version", action="version", version=f"mltalgo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("bounds", "certified interval for mlt"),
        ("rank", "exact rank with certificates"),
        ("wmlt", "certified interval for wmlt"),
        ("smt", "score matching threshold"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")

    p = sub.add_parser("core", parents=[common], help="n-core of the graph")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("pebble", parents=[common], help="(k, l) pebble game")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("birank", parents=[common], help="birank membership of a crossing graph")
    p.add_argument("file")
    p.add_argument("--left", type=_vertex_list, required=True)
    p.add_argument("--right", type=_vertex_list, required=True)
    p.add_argument("--r1", type=_positive, required=True)
    p.add_argument("--r2", type=_positive, required=True)

    p = sub.add_parser("split", parents=[common], help="verify or search a splitting")
    p.add_argument("file")
    p.add_argument("--parts", nargs="+", type=_vertex_list, help="one comma list per part")
    p.add_argument("--targets", type=_vertex_list, help="comma list of targets")

    p = sub.add_parser("sme", parents=[common], help="score matching estimator")
    p.add_argument("action", choices=["exists", "solve"])
    p.add_argument("file")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--data", help="CSV data file, or random:N")
    source.add_argument("--cov", help="CSV covariance file")

    p = sub.add_parser("conjecture-lf", parents=[common], help="count prediction vs smt")
    p.add_argument("file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--strong", action="store_true", help="count every subgraph")

    p = sub.add_parser("gen", parents=[common], help="write a named graph")
    p.add_argument("name", choices=generator_names())
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    return parser.parse_args(args)


def setup_logging(loglevel):
    """Setup basic logging

    Args:
      loglevel (int): minimum loglevel for emitting messages
    """
    logformat = "[%(asctime)s] %(levelname)s:%(name)s:%(message)s"
    logging.basicConfig(
        level=loglevel, stream=sys.stderr, format=logformat, datefmt="%Y-%m-%d %H:%M:%S"
    )


def _options(args) -> Options:
    options = Options()
    options.seed = args.seed
    options.trials = args.trials
    options.prime = PrimeChoice[args.prime].value
    options.subgraph_cap = args.subgraph_cap
    options.chromatic_cap = args.chromatic_cap
    options.buhl_cap = args.buhl_cap
    return options


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def _emit(result, fmt: str) -> None:
    if isinstance(result, BoundsReport):
        text = result.to_json() + "\n" if fmt == "json" else result.to_text()
    elif fmt == "json":
        text = json.dumps(result, indent=2) + "\n"
    else:
        text = "".join(
            f"{key} {json.dumps(value, separators=(',', ':')) if isinstance(value, (list, dict)) else value}\n"
            for key, value in result.items()
        )
    sys.stdout.write(text)


def _load_data(args, G: Graph, options: Options) -> SampleData:
    if args.cov is not None:
        return SampleData.from_covariance(np.loadtxt(args.cov, delimiter=",", ndmin=2))
    if args.data.startswith("random:"):
        n = int(args.data.split(":", 1)[1])
        if n < 1:
            raise ValueError(f"sample count must be positive, got {n}")
        return SampleData.random(n, G.m, RandomSource(options.seed))
    return SampleData.from_csv(args.data)


def _dispatch(args, options: Options) -> Any:
    if args.command == "gen":
        return render_graph(generate_named(args.name, args.params))
    G = _read_graph(args.file)
    cmd = args.command
    if cmd == "bounds":
        return mlt_bounds(G, options)
    if cmd == "rank":
        return rank_report(G, options)
    if cmd == "smt":
        report = rank_report(G, options)
        report.invariant = "smt"
        return report
    if cmd == "wmlt":
        return wmlt_bounds(G, options)
    if cmd == "core":
        res = n_core(G, args.n)
        return {
            "n": args.n,
            "empty": len(res.kept) == 0,
            "kept": list(res.kept),
            "removal_order": list(res.removal_order),
        }
    if cmd == "pebble":
        res = pebble_game(G, args.k, args.l)
        return {
            "independent": res.independent,
            "witness_vertices": list(res.witness_vertices),
            "witness_edges": [list(e) for e in res.witness_edges],
        }
    if cmd == "birank":
        B = bipartite_between(G, args.left, args.right)
        res = birank_check(B, args.r1, args.r2, options.trials, None, options)
        return {
            "member": res.member,
            "method": res.method.name.lower(),
            "generic_rank": res.generic_rank,
            "num_edges": B.num_edges,
            "seeds": list(res.seeds),
        }
    if cmd == "split":
        return _split(G, args, options)
    if cmd == "sme":
        data = _load_data(args, G, options)
        if args.action == "exists":
            if not sme_exists(G, data, options):
                raise DomainFailure(f"SME does not exist for n = {data.n}")
            return {"exists": True, "n": data.n}
        sol = sme_solve(G, data, options)
        return {"n": data.n, "K": sol.K.tolist(), "residual": sol.residual}
    if cmd == "conjecture-lf":
        res = conjecture_lf_check(G, args.n, options, args.strong)
        return {
            "n": args.n,
            "predicted": res.predicted,
            "actual": res.actual,
            "count": res.count,
            "bound": res.bound,
            "counterexample": res.predicted != res.actual,
        }
    raise AssertionError(f"unhandled command {cmd}")


def _split(G: Graph, args, options: Options) -> Dict[str, Any]:
    if args.parts is None:
        plan: Optional[SplitPlan] = search_splitting(G, options)
        if plan is None:
            raise DomainFailure("no splitting plan found")
        return plan.to_dict()
    targets: Sequence[int] = args.targets or [1] * len(args.parts)
    plan = SplitPlan([tuple(p) for p in args.parts], list(targets))
    if splitting_bound(G, plan, options) is None:
        _emit(plan.to_dict(), args.format)
        raise DomainFailure(plan.failure or "split plan does not verify")
    return plan.to_dict()


def main(args):
    """Wrapper allowing the engine to be called with string arguments in a CLI fashion

    Args:
      args (List[str]): command line parameters as list of strings
          (for example  ``["--verbose", "rank", "graph.txt"]``).

    Returns:
      int: exit code
    """
    try:
        args = parse_args(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    setup_logging(args.loglevel)
    options = _options(args)
    _logger.debug("running %s with seed %d", args.command, options.seed)
    try:
        result = _dispatch(args, options)
        if args.command != "gen":
            _emit(result, args.format)
        elif args.output:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(result)
        else:
            sys.stdout.write(result)
    except (DomainFailure, SingularSystemError, UnverifiedBoundError) as err:
        print(f"mltalgo: {err}", file=sys.stderr)
        return 1
    except (GraphError, ValueError, OSError) as err:
        print(f"mltalgo: error: {err}", file=sys.stderr)
        return 2
    _logger.info("%s done", args.command)
    return 0


def run():
    """Calls :func:`main` passing the CLI arguments extracted from :obj:`sys.argv`

    This function can be used as entry point to create console scripts with setuptools.
    """
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
