from enum import Enum

P61: int = 2**61 - 1  # Mersenne prime, default modulus
P62: int = 2**62 - 57  # cross-checking modulus


# The PrimeChoice enum maps the command-line prime selector onto a modulus.
class PrimeChoice(Enum):
    p61 = P61
    p62 = P62


# The Verdict enum records the outcome of a search whose answer may be
# undecided within its effort budget (for example Buhl's cycle condition).
#
# Satisfied - a witness was found and re-verified
# Unsatisfied - the search was complete and no witness exists
# Unknown - the budget ran out first
class Verdict(Enum):
    Satisfied = 0
    Unsatisfied = 1
    Unknown = 2


# How membership in birank was established.
class BirankMethod(Enum):
    Core = 0
    Generic = 1


# Whether a capped exact search delivered an exact answer or only one side.
class Exactness(Enum):
    Exact = 0
    LowerBoundOnly = 1
    UpperBoundOnly = 2


class GraphError(ValueError):
    """Invalid vertex, edge, partition or generator parameter."""


class GraphParseError(GraphError):
    """Malformed edge-list text; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, reason: str) -> None:
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class UnverifiedBoundError(ValueError):
    """A split target could not be verified as a wmlt upper bound of its part."""

    def __init__(self, part: int, target: int, verified: int) -> None:
        super().__init__(
            f"part {part}: target {target} is below the verified bound {verified}"
        )
        self.part = part
        self.target = target
        self.verified = verified


class SingularSystemError(ValueError):
    """A dense linear system has a pivot below the relative threshold."""


class SmeNonexistent(SingularSystemError):
    """The score matching estimator does not exist for the given data."""


# The class "Options" collects every cap, seed and tolerance. Callers create an
# instance and overwrite the attributes they need, e.g. ``options.trials = 5``.
class Options:
    seed: int = 0  # base seed of every randomized verdict
    trials: int = 3  # generic evaluations per rank query
    prime: int = P61
    clique_cap: int = 64
    chromatic_cap: int = 32
    subgraph_cap: int = 16
    buhl_cap: int = 10
    buhl_effort: int = 200000  # search nodes when m > buhl_cap
    acyclic_exact_cap: int = 12
    acyclic_effort: int = 200000
    split_exhaustive_cap: int = 10
    split_max_target: int = 3
    cycle_budget: int = 100000  # chordless cycles enumerated before giving up
    independent_set_budget: int = 100000  # maximal independent sets tried by wmlt splitting
    rank_tol: float = 1e-9  # relative pivot threshold for real_rank
    singular_tol: float = 1e-12  # pivot threshold for solve_dense, relative to max |A|
