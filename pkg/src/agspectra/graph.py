"""Simple undirected graphs, the named unicyclic families, and text formats.

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` is immutable once
built; edges are stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, TextIO


class GraphError(ValueError):
    """Invalid graph data (loops, parallel edges, bad vertex ids, bad text)."""


class OrderTooSmallError(GraphError):
    """A named family was requested below its minimum order."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise GraphError(f"parallel edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        object.__setattr__(self, "degrees", tuple(deg))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return Graph(self.n, tuple((p[u], p[v]) for u, v in self.edges))

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))

    def add_pendant(self, v: int) -> "Graph":
        """Attach a new vertex ``n`` to ``v``."""
        return Graph(self.n + 1, self.edges + ((v, self.n),))

    def girth(self) -> int | None:
        """Length of a shortest cycle, or ``None`` for forests."""
        best = None
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        c = dist[u] + dist[w] + 1
                        if best is None or c < best:
                            best = c
        return best


def max_degree(g: Graph) -> int:
    return max(g.degrees)


class Family(str, enum.Enum):
    """Named unicyclic families. Vertex 0 is always the hub (or a cycle vertex)."""

    CYCLE = "cycle"
    STAR_PLUS_EDGE = "star-plus-edge"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"


_MIN_ORDER = {
    Family.CYCLE: 3,
    Family.STAR_PLUS_EDGE: 3,
    Family.G1: 5,
    Family.G2: 5,
    Family.G3: 5,
}


def _star_plus_edge_edges(n: int) -> list[tuple[int, int]]:
    # hub 0, leaves 1..n-1, triangle closed on 1-2
    return [(0, k) for k in range(1, n)] + [(1, 2)]


def build_family(family: Family | str, n: int) -> Graph:
    """Build a named unicyclic graph on ``n`` vertices.

    Labelings:

    * cycle: ``0-1-...-(n-1)-0``
    * star-plus-edge: hub 0 joined to every other vertex, plus edge ``1-2``
    * g1: quadrangle ``0-1-2-3-0`` with pendants ``4..n-1`` on vertex 0
    * g2: star-plus-edge on ``0..n-2`` with vertex ``n-1`` hung on triangle vertex 1
    * g3: star-plus-edge on ``0..n-2`` with vertex ``n-1`` hung on leaf 3
    """
    family = Family(family)
    if n < _MIN_ORDER[family]:
        raise OrderTooSmallError(
            f"{family.value} needs n >= {_MIN_ORDER[family]}, got n={n}"
        )
    if family is Family.CYCLE:
        edges = [(k, (k + 1) % n) for k in range(n)]
    elif family is Family.STAR_PLUS_EDGE:
        edges = _star_plus_edge_edges(n)
    elif family is Family.G1:
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)] + [(0, k) for k in range(4, n)]
    elif family is Family.G2:
        edges = _star_plus_edge_edges(n - 1) + [(1, n - 1)]
    else:
        edges = _star_plus_edge_edges(n - 1) + [(3, n - 1)]
    return Graph.from_edges(n, edges)


def star(n: int) -> Graph:
    """The star ``S_n`` with centre 0 (a tree, not a unicyclic graph)."""
    if n < 2:
        raise OrderTooSmallError(f"star needs n >= 2, got n={n}")
    return Graph.from_edges(n, [(0, k) for k in range(1, n)])


# --- graph6 -----------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 order {n} not supported")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header, no newline)."""
    bits = []
    adj = g.adjacency
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if j in adj[i] else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_order(g.n) + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 orders above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not match n={n}")
    bits = [(d >> s) & 1 for d in body for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# --- edge list ----------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(stream: TextIO) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``."""
    rows = [ln.split() for ln in stream if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
