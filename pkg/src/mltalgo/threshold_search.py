"""
Threshold search

Every threshold in mltalgo (rank, smt, the smallest dimension in which an edge
set is stress-free) is the smallest integer at which a monotone predicate
becomes true. ``linear_search`` scans an interval upwards and stops at the first
success; ranks of interest are small, so the scan touches few values and every
failing value is cheap to evaluate. ``bsearch`` is the bisection variant for
wide intervals.

``IndepAdaptor`` turns an independence oracle into such a predicate via
rank(G) = n  iff  E is independent in A(n - 1).
"""

import logging
from typing import Tuple

from .mlt_typing import OracleBS, OracleIndep

_logger = logging.getLogger(__name__)


def linear_search(omega: OracleBS, intrvl: Tuple[int, int]) -> Tuple[int, int]:
    """
    The `linear_search` function returns the smallest gamma in ``intrvl`` where the
    oracle holds, together with the number of evaluations.

    :param omega: monotone predicate
    :param intrvl: inclusive bounds ``(lower, upper)``; the predicate must hold at ``upper``
    :return: ``(gamma, niter)``; ``upper`` when the predicate never holds earlier
    """
    lower, upper = intrvl
    niter = 0
    for gamma in range(lower, upper):
        niter += 1
        if omega.assess_bs(gamma):
            return gamma, niter
    return upper, niter


def bsearch(omega: OracleBS, intrvl: Tuple[int, int]) -> Tuple[int, int]:
    """
    The `bsearch` function performs a binary search for the same threshold as
    :func:`linear_search`.

    Examples:
        >>> class AtLeast(OracleBS):
        ...     def assess_bs(self, gamma):
        ...         return gamma >= 13
        >>> bsearch(AtLeast(), (0, 100))
        (13, 7)
    """
    lower, upper = intrvl  # invariant: holds at upper, fails below lower
    niter = 0
    while lower < upper:
        niter += 1
        gamma = (lower + upper) // 2
        if omega.assess_bs(gamma):
            upper = gamma
        else:
            lower = gamma + 1
    return upper, niter


class IndepAdaptor(OracleBS):
    def __init__(self, omega: OracleIndep) -> None:
        """
        :param omega: independence oracle of a fixed graph
        """
        self.omega = omega

    def assess_bs(self, gamma: int) -> bool:
        """True iff the graph's rank is at most ``gamma`` (``gamma`` >= 2)."""
        verdict = self.omega.assess_indep(gamma - 1)
        _logger.debug("rank <= %d: %s", gamma, verdict)
        return verdict
