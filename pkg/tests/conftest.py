"""
Shared fixtures for mltalgo.

The networkx graph atlas lists every graph on up to 7 vertices, one per
isomorphism class; it is the exhaustive small-graph suite of these tests.
"""

from typing import List

import networkx as nx
import pytest

from mltalgo.graph_core import Graph


def _atlas(max_vertices: int) -> List[Graph]:
    return [
        Graph.from_networkx(g)
        for g in nx.graph_atlas_g()
        if 1 <= g.number_of_nodes() <= max_vertices
    ]


@pytest.fixture(scope="session")
def atlas6() -> List[Graph]:
    """All graphs on 1 to 6 vertices."""
    return _atlas(6)


@pytest.fixture(scope="session")
def atlas7() -> List[Graph]:
    """All graphs on 1 to 7 vertices."""
    return _atlas(7)
