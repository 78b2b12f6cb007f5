from mltalgo.mlt_typing import OracleBS, OracleIndep
from mltalgo.threshold_search import IndepAdaptor, bsearch, linear_search


class MyOracle(OracleBS):
    def __init__(self, threshold: int) -> None:
        self.threshold = threshold
        self.calls = []

    def assess_bs(self, gamma: int) -> bool:
        self.calls.append(gamma)
        return gamma >= self.threshold


class MyIndep(OracleIndep):
    def assess_indep(self, dim: int) -> bool:
        return dim >= 3


def test_linear_search():
    omega = MyOracle(4)
    gamma, niter = linear_search(omega, (2, 10))
    assert gamma == 4
    assert niter == 3
    assert omega.calls == [2, 3, 4]


def test_linear_search_upper_fallback():
    omega = MyOracle(100)
    gamma, niter = linear_search(omega, (2, 6))
    assert gamma == 6
    assert niter == 4


def test_bsearch():
    for threshold in range(0, 17):
        gamma, _ = bsearch(MyOracle(threshold), (0, 16))
        assert gamma == threshold


def test_indep_adaptor():
    gamma, _ = linear_search(IndepAdaptor(MyIndep()), (2, 8))
    assert gamma == 4
