from abc import ABC, abstractmethod


class OracleIndep(ABC):
    @abstractmethod
    def assess_indep(self, dim: int) -> bool:
        """
        The `assess_indep` function decides whether the edge set of the oracle's
        graph is independent in the generic rigidity matroid of dimension ``dim``.

        :param dim: The dimension d of the rigidity matroid A(d), at least 1
        :type dim: int
        """


class OracleBS(ABC):
    @abstractmethod
    def assess_bs(self, gamma: int) -> bool:
        """
        The `assess_bs` function evaluates a monotone predicate at ``gamma``: once it
        holds for some value it holds for every larger one.

        :param gamma: The candidate threshold
        :type gamma: int
        """
