"""Exact canonical labeling by colour refinement plus individualization.

The search tree is the usual one: refine the vertex colouring to an equitable
partition, individualize each vertex of the first non-singleton cell in turn,
recurse.  Every leaf is a vertex ordering; the certificate is the smallest
adjacency bit string over all leaves.  Because the tree depends only on the
graph, the minimum is a complete invariant.

Children that differ by a transposition automorphism (twin vertices) are
skipped: their subtrees are images of each other and give the same leaves.
That alone keeps pendant-heavy graphs such as stars cheap.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, to_graph6


def _rank(keys: list) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _refine(adj: tuple[frozenset[int], ...], colors: list[int]) -> list[int]:
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        new = _rank(sigs)
        k = len(set(new))
        if k == ncells:
            return new
        colors, ncells = new, k


def _individualize(colors: list[int], v: int) -> list[int]:
    return _rank([2 * c + (u != v) for u, c in enumerate(colors)])


def _twins(adj: tuple[frozenset[int], ...], a: int, b: int) -> bool:
    return adj[a] - {b} == adj[b] - {a}


def _certificate(adj: tuple[frozenset[int], ...], order: list[int]) -> int:
    # bits in graph6 order (column-major upper triangle), first bit most significant
    value = 0
    for j in range(1, len(order)):
        nj = adj[order[j]]
        for i in range(j):
            value = (value << 1) | (order[i] in nj)
    return value


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` such that ``g.relabel(perm)`` is the canonical representative."""
    adj = g.adjacency
    n = g.n
    best_cert = None
    best_order: list[int] = []

    def search(colors: list[int]) -> None:
        nonlocal best_cert, best_order
        colors = _refine(adj, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            order = sorted(range(n), key=colors.__getitem__)
            cert = _certificate(adj, order)
            if best_cert is None or cert < best_cert:
                best_cert, best_order = cert, order
            return
        reps: list[int] = []
        for v in range(n):
            if colors[v] == target and not any(_twins(adj, r, v) for r in reps):
                reps.append(v)
        for v in reps:
            search(_individualize(colors, v))

    search([0] * n)
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return perm


def canonical_form(g: Graph) -> bytes:
    """Isomorphism certificate: graph6 bytes of the canonical relabeling."""
    return to_graph6(g.relabel(canonical_labeling(g))).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Reference certificate: minimum over all ``n!`` orderings (small ``n`` only).

    Not comparable byte-for-byte with :func:`canonical_form`; only the induced
    equivalence relation agrees.
    """
    if g.n > 9:
        raise ValueError(f"brute-force canonical form is limited to n <= 9, got {g.n}")
    adj = g.adjacency
    best = min(_certificate(adj, list(p)) for p in permutations(range(g.n)))
    nbits = g.n * (g.n - 1) // 2
    return g.n.to_bytes(2, "big") + best.to_bytes((nbits + 7) // 8 or 1, "big")
