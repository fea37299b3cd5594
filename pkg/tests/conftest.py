import itertools

import networkx as nx
import pytest

from agspectra.graph import Graph


def nx_to_graph(G) -> Graph:
    G = nx.convert_node_labels_to_integers(G)
    return Graph.from_edges(G.number_of_nodes(), G.edges())


@pytest.fixture(scope="session")
def atlas():
    """Every graph on at most 7 vertices, one per isomorphism class (networkx atlas)."""
    return [nx_to_graph(G) for G in nx.graph_atlas_g()[1:]]


def connected_with_edges(atlas, n, m):
    return [g for g in atlas if g.n == n and g.m == m and g.is_connected()]


def brute_force_classes(n, m):
    """All labelled graphs with n vertices and m edges, connected, up to isomorphism (nx check)."""
    reps = []
    for edges in itertools.combinations(itertools.combinations(range(n), 2), m):
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        if not nx.is_connected(G):
            continue
        if not any(nx.is_isomorphic(G, H) for H in reps):
            reps.append(G)
    return reps


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Collects one summary line per acceptance criterion, printed at the end of the run."""
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
