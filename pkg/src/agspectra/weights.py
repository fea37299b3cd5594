"""Degree-based edge weights, weighted adjacency matrices and index sums."""

from __future__ import annotations

import enum
import io
import math

import numpy as np

from .graph import Graph


class Scheme(str, enum.Enum):
    ADJACENCY = "adj"
    AG = "ag"
    RANDIC = "randic"
    ABC = "abc"


def edge_weight(scheme: Scheme | str, dx: int, dy: int) -> float:
    """Weight of an edge whose end vertices have degrees ``dx`` and ``dy``."""
    if dx < 1 or dy < 1:
        raise ValueError(f"degrees must be >= 1, got ({dx}, {dy})")
    scheme = Scheme(scheme)
    if scheme is Scheme.AG:
        return (dx + dy) / (2.0 * math.sqrt(dx * dy))
    if scheme is Scheme.RANDIC:
        return 1.0 / math.sqrt(dx * dy)
    if scheme is Scheme.ABC:
        return math.sqrt((dx + dy - 2) / (dx * dy))
    return 1.0


def weighted_adjacency(g: Graph, scheme: Scheme | str = Scheme.AG) -> np.ndarray:
    """Dense symmetric ``n x n`` matrix with ``edge_weight`` on edges and 0 elsewhere."""
    if g.n < 2:
        raise ValueError("weighted adjacency needs at least two vertices")
    if min(g.degrees) == 0:
        raise ValueError(f"isolated vertex {g.degrees.index(0)}: weights undefined")
    d = g.degrees
    M = np.zeros((g.n, g.n))
    for u, v in g.edges:
        M[u, v] = M[v, u] = edge_weight(scheme, d[u], d[v])
    return M


def ag_matrix(g: Graph) -> np.ndarray:
    return weighted_adjacency(g, Scheme.AG)


def _edge_sum(g: Graph, scheme: Scheme) -> float:
    d = g.degrees
    return math.fsum(edge_weight(scheme, d[u], d[v]) for u, v in g.edges)


def ag_index(g: Graph) -> float:
    return _edge_sum(g, Scheme.AG)


def randic_index(g: Graph) -> float:
    return _edge_sum(g, Scheme.RANDIC)


def abc_index(g: Graph) -> float:
    return _edge_sum(g, Scheme.ABC)


def first_zagreb(g: Graph) -> float:
    return float(sum(g.degrees[u] + g.degrees[v] for u, v in g.edges))


def matrix_to_csv(M: np.ndarray) -> str:
    """Dense CSV dump, one row per line, every entry at full ``%.17g`` precision."""
    buf = io.StringIO()
    np.savetxt(buf, M, fmt="%.17g", delimiter=",")
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    M = np.loadtxt(io.StringIO(text), delimiter=",", ndmin=2)
    return M
