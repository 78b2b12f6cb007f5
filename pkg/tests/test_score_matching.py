import numpy as np
import pytest

from mltalgo.ff_matrix import RandomSource
from mltalgo.generators import (
    complete,
    complete_bipartite,
    double_banana,
    grid,
    k4_pendant,
    octahedron,
)
from mltalgo.graph_core import Graph
from mltalgo.mlt_config import SmeNonexistent
from mltalgo.oracles.gram_oracle import is_independent_sym
from mltalgo.score_matching import (
    SampleData,
    conjecture_lf_check,
    empirical_existence,
    empirical_threshold,
    sme_coefficient_matrix,
    sme_exists,
    sme_solve,
    sme_system,
    smt,
    smt_at_most_three,
)


def _data(n: int, m: int, seed: int = 0) -> SampleData:
    return SampleData.random(n, m, RandomSource(seed))


def test_sample_data_validation():
    with pytest.raises(ValueError):
        SampleData([1.0, 2.0])
    with pytest.raises(ValueError):
        SampleData([[1.0, np.nan]])


def test_sample_data_from_csv(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text("1,2\n0,1\n")
    data = SampleData.from_csv(str(path))
    assert data.n == 2
    assert data.covariance.tolist() == [[1.0, 2.0], [2.0, 5.0]]


def test_sample_data_from_covariance():
    data = _data(5, 3)
    rebuilt = SampleData.from_covariance(data.covariance)
    assert rebuilt.n == 3
    assert np.allclose(rebuilt.covariance, data.covariance)
    low = _data(2, 4, 1)
    assert SampleData.from_covariance(low.covariance).n == 2
    with pytest.raises(ValueError):
        SampleData.from_covariance([[1.0, 0.5], [0.0, 1.0]])
    with pytest.raises(ValueError):
        SampleData.from_covariance([[-1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        SampleData.from_covariance([[1.0, 0.0, 0.0]])


def test_coefficient_matrix():
    C = sme_coefficient_matrix(Graph(2, [(0, 1)]), SampleData([[1.0, 2.0]]))
    assert C.tolist() == [[1.0, 0.0, 2.0], [0.0, 2.0, 1.0]]
    assert sme_coefficient_matrix(grid(3, 3), _data(3, 9)).shape == (27, 21)
    with pytest.raises(ValueError):
        sme_coefficient_matrix(grid(3, 3), _data(3, 4))


def test_sme_exists():
    assert sme_exists(complete(4), _data(4, 4))
    assert not sme_exists(complete(4), _data(3, 4))
    assert sme_exists(grid(3, 3), _data(3, 9))
    assert not sme_exists(grid(3, 3), _data(2, 9))


def test_sme_system_shape():
    G = grid(2, 3)
    system = sme_system(G, _data(4, 6).covariance)
    assert system.coefficients.shape == (13, 13)
    assert system.rhs.tolist() == [1.0] * 6 + [0.0] * 7


@pytest.mark.parametrize("m", range(2, 11))
def test_sme_complete_graph_inverts(m):
    data = _data(2 * m, m, m)
    sol = sme_solve(complete(m), data)
    error = sol.K - np.linalg.inv(data.covariance)
    assert np.max(np.sum(np.abs(error), axis=1)) <= 1e-7


def test_sme_small_scale_data():
    data = _data(5, 3, 4)
    tiny = SampleData(data.values * 1e-7)
    assert sme_exists(complete(3), tiny)
    sol = sme_solve(complete(3), tiny)
    S = tiny.covariance
    R = (sol.K @ S + S @ sol.K) / 2
    assert np.allclose(R, np.eye(3), atol=1e-8)
    assert np.allclose(sol.K * 1e-14, sme_solve(complete(3), data).K, rtol=1e-7)
    path3 = Graph(3, [(0, 1), (1, 2)])
    sol = sme_solve(path3, tiny)
    assert sol.K[0, 2] == 0.0
    assert sol.residual <= 1e-8


def test_sme_identity():
    sol = sme_solve(grid(2, 2), SampleData(np.eye(4)))
    assert np.allclose(sol.K, np.eye(4))
    assert sol.residual < 1e-12


def test_sme_edgeless_diagonal():
    data = _data(3, 4, 2)
    sol = sme_solve(Graph(4), data)
    assert np.allclose(sol.K, np.diag(1.0 / np.diag(data.covariance)))


def test_sme_solution_satisfies_equations():
    G = octahedron()
    data = _data(4, 6, 3)
    sol = sme_solve(G, data)
    S = data.covariance
    R = (sol.K @ S + S @ sol.K) / 2
    for i in G.vertices():
        assert R[i, i] == pytest.approx(1.0, abs=1e-8)
    for i, j in G.edges:
        assert R[i, j] == pytest.approx(0.0, abs=1e-8)
    for i in G.vertices():
        for j in G.vertices():
            if i != j and not G.has_edge(i, j):
                assert sol.K[i, j] == 0.0


def test_sme_nonexistent():
    with pytest.raises(SmeNonexistent):
        sme_solve(complete(4), _data(3, 4))


@pytest.mark.parametrize(
    "G", [grid(3, 3), complete(4), complete_bipartite(3, 3), octahedron()]
)
def test_empirical_existence_jumps_at_smt(G):
    s = smt(G)
    rng = RandomSource(5)
    assert empirical_existence(G, s, 50, rng) == 1.0
    assert empirical_existence(G, s - 1, 50, rng) == 0.0


def test_empirical_threshold():
    assert empirical_threshold(grid(3, 3), 10) == 3
    assert empirical_threshold(complete(4), 10) == 4
    assert empirical_threshold(Graph(0), 10) == 1
    with pytest.raises(ValueError):
        empirical_existence(complete(3), 2, 0)


def test_smt_against_symmetric_minors(atlas6):
    # smt is the least n with the diagonal and E(G) independent in rank-n minors
    for G in atlas6:
        s = smt(G)
        assert is_independent_sym(G, s).independent
        if s > 1:
            assert not is_independent_sym(G, s - 1).independent


def test_smt_at_most_three():
    assert smt_at_most_three(grid(3, 3)).independent
    res = smt_at_most_three(k4_pendant())
    assert not res.independent
    assert set(res.witness_vertices) == {0, 1, 2, 3}


def test_conjecture_counterexamples():
    res = conjecture_lf_check(k4_pendant(), 3)
    assert res == (True, False, 12, 12)
    res = conjecture_lf_check(double_banana(), 4)
    assert res.predicted and not res.actual
    assert (res.count, res.bound) == (26, 26)


def test_conjecture_strong():
    # the local count catches the dense K4 but not the double banana
    res = conjecture_lf_check(k4_pendant(), 3, strong=True)
    assert not res.predicted and not res.actual
    res = conjecture_lf_check(double_banana(), 4, strong=True)
    assert res.predicted and not res.actual
    assert conjecture_lf_check(Graph(3), 1, strong=True).predicted
    with pytest.raises(ValueError):
        conjecture_lf_check(Graph(3), 0)
