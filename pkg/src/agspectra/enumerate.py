"""Isomorphism-free generation of connected unicyclic and bicyclic graphs.

Unicyclic graphs of order n are ``C_n`` together with every graph obtained by
hanging a pendant vertex on a unicyclic graph of order ``n - 1`` (strip leaves
until only the cycle is left).  Bicyclic graphs are unicyclic graphs plus one
extra edge (deleting any cycle edge of a bicyclic graph leaves a unicyclic
one).  Duplicates are removed by canonical form, and every representative is
returned in its canonical labeling, sorted by certificate.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .canon import canonical_form, canonical_graph
from .graph import Family, Graph, build_family, max_degree

MAX_UNICYCLIC_ORDER = 12
MAX_BICYCLIC_ORDER = 10
# budget of candidate edge sets for the hub construction in enumerate_unicyclic_with_max_degree
HUB_SEARCH_BUDGET = 250_000


class LimitExceededError(ValueError):
    """Requested order is outside what the enumerator supports."""


def _dedup(graphs) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for g in graphs:
        cf = canonical_form(g)
        if cf not in out:
            out[cf] = g
    return out


def _finalize(classes: dict[bytes, Graph]) -> tuple[Graph, ...]:
    return tuple(canonical_graph(classes[k]) for k in sorted(classes))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    if n == 3:
        return (build_family(Family.CYCLE, 3),)

    def candidates():
        yield build_family(Family.CYCLE, n)
        for g in _unicyclic(n - 1):
            for v in range(g.n):
                yield g.add_pendant(v)

    return _finalize(_dedup(candidates()))


def enumerate_unicyclic(n: int) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of connected unicyclic graphs of order ``n``."""
    if n < 3:
        raise ValueError(f"unicyclic graphs need n >= 3, got n={n}")
    if n > MAX_UNICYCLIC_ORDER:
        raise LimitExceededError(f"unicyclic enumeration supports n <= {MAX_UNICYCLIC_ORDER}, got n={n}")
    yield from _unicyclic(n)


def _hub_search_cost(n: int, delta: int) -> int:
    r = n - 1 - delta
    return sum(comb(comb(k + r, 2), r + 1) for k in range(0, min(delta, 2 * (r + 1)) + 1))


def _hub_candidates(n: int, delta: int) -> Iterator[Graph]:
    # Vertex 0 is a hub of degree delta.  Its neighbours split into k "active"
    # ones (with further edges) and delta - k pendants; the r non-neighbours and
    # the active neighbours carry the remaining n - delta edges.  Each of those
    # edges touches at most two active neighbours, so k <= 2(r + 1).
    r = n - 1 - delta
    extra = n - delta
    for k in range(0, min(delta, 2 * (r + 1)) + 1):
        active = list(range(1, k + 1))
        far = list(range(k + 1, k + 1 + r))
        core = active + far
        pairs = list(combinations(core, 2))
        npend = delta - k
        base = [(0, a) for a in active] + [(0, k + 1 + r + j) for j in range(npend)]
        for chosen in combinations(pairs, extra):
            deg = dict.fromkeys(core, 0)
            for u, v in chosen:
                deg[u] += 1
                deg[v] += 1
            if any(deg[a] == 0 for a in active) or any(deg[b] == 0 for b in far):
                continue
            if any(deg[a] + 1 > delta for a in active) or any(deg[b] > delta for b in far):
                continue
            g = Graph.from_edges(n, base + list(chosen))
            if g.is_connected():
                yield g


@lru_cache(maxsize=None)
def _unicyclic_max_degree(n: int, delta: int) -> tuple[Graph, ...]:
    if delta == 2:
        return (canonical_graph(build_family(Family.CYCLE, n)),)
    if _hub_search_cost(n, delta) <= HUB_SEARCH_BUDGET:
        return _finalize(_dedup(_hub_candidates(n, delta)))
    if n <= MAX_UNICYCLIC_ORDER:
        return tuple(g for g in _unicyclic(n) if max_degree(g) == delta)
    raise LimitExceededError(
        f"no supported enumeration route for unicyclic graphs with n={n}, max degree {delta}"
    )


def enumerate_unicyclic_with_max_degree(n: int, delta: int) -> Iterator[Graph]:
    """Yield the unicyclic isomorphism classes of order ``n`` with maximum degree ``delta``.

    Small ``n - delta`` is handled by a direct hub construction, which reaches
    orders well beyond the full enumerator (e.g. ``delta = n - 3`` up to n = 40).
    """
    if n < 3:
        raise ValueError(f"unicyclic graphs need n >= 3, got n={n}")
    if not 2 <= delta <= n - 1:
        raise ValueError(f"max degree must lie in 2..{n - 1}, got {delta}")
    yield from _unicyclic_max_degree(n, delta)


@lru_cache(maxsize=None)
def _bicyclic(n: int) -> tuple[Graph, ...]:
    def candidates():
        for g in _unicyclic(n):
            for u, v in combinations(range(n), 2):
                if not g.has_edge(u, v):
                    yield g.add_edge(u, v)

    return _finalize(_dedup(candidates()))


def enumerate_bicyclic(n: int) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of connected graphs with ``n + 1`` edges."""
    if n < 4:
        raise ValueError(f"bicyclic graphs need n >= 4, got n={n}")
    if n > MAX_BICYCLIC_ORDER:
        raise LimitExceededError(f"bicyclic enumeration supports n <= {MAX_BICYCLIC_ORDER}, got n={n}")
    yield from _bicyclic(n)
