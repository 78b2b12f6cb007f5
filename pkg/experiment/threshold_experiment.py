"""
Score matching existence around smt(G)

For each regression graph the estimator is tried on standard normal data of
sizes smt - 1, smt and smt + 1; the fraction of trials in which it existed is
printed next to the count prediction at smt - 1. The fractions should read
0, 1, 1 since smt(G) = rank(G).
"""

import logging

from mltalgo.ff_matrix import RandomSource
from mltalgo.generators import (
    double_banana,
    grid,
    k4_pendant,
    octahedron,
    random_triangulation,
    torus_grid,
)
from mltalgo.score_matching import conjecture_lf_check, empirical_existence, smt

_logger = logging.getLogger(__name__)


def run(trials: int = 50, seed: int = 0):
    graphs = {
        "grid(4, 4)": grid(4, 4),
        "torus_grid(4, 3)": torus_grid(4, 3),
        "octahedron": octahedron(),
        "k4_pendant": k4_pendant(),
        "double_banana": double_banana(),
    }
    for m in (8, 12, 16):
        graphs[f"triangulation({m})"] = random_triangulation(m, seed)

    rng = RandomSource(seed)
    rows = []
    for t, (name, G) in enumerate(graphs.items()):
        s = smt(G)
        sub = rng.spawn(t)
        fractions = [
            empirical_existence(G, n, trials, sub.spawn(n)) if n >= 1 else 0.0
            for n in (s - 1, s, s + 1)
        ]
        predicted = conjecture_lf_check(G, s - 1).predicted if s > 1 else False
        if fractions[0] > 0.0 or fractions[1] < 1.0:
            _logger.warning("%s: fractions %s around smt %d", name, fractions, s)
        rows.append((name, s, fractions, predicted))
    return rows


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    print(f"{'graph':20} {'smt':>4} {'smt-1':>6} {'smt':>6} {'smt+1':>6} {'count at smt-1':>15}")
    for name, s, (below, at, above), predicted in run():
        print(f"{name:20} {s:4d} {below:6.2f} {at:6.2f} {above:6.2f} {str(predicted):>15}")
