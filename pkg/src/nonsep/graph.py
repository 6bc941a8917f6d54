"""Immutable simple graphs and digraphs over dense 0-based vertex ids.

Every subgraph operation returns the new graph together with a ``labels``
tuple where ``labels[new_id] == old_id``; finders that recurse into
subgraphs use it to report answers in the caller's coordinates.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import InputError, ParseError

__all__ = [
    "Graph",
    "Digraph",
    "GraphBuilder",
    "induced",
    "delete",
    "min_degree",
    "semi_degree",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
]


def _mask(vs: Iterable[int]) -> int:
    bits = 0
    for v in vs:
        bits |= 1 << v
    return bits


class Graph:
    """Simple undirected graph. Build with :meth:`from_edges` or a builder."""

    directed = False
    __slots__ = ("n", "_adj", "_bits", "_m")

    def __init__(self, n: int, adj: Sequence[frozenset]):
        self.n = n
        self._adj = tuple(adj)
        self._bits = tuple(_mask(a) for a in self._adj)
        self._m = sum(len(a) for a in self._adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        b = GraphBuilder(n, directed=False)
        for u, v in edges:
            b.add(u, v)
        return b.build()

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def neighbor_bits(self, v: int) -> int:
        return self._bits[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._bits[u] >> v) & 1 == 1

    def num_edges(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def neighborhood(self, vs: Iterable[int]) -> set[int]:
        """N(U): vertices outside U adjacent to some vertex of U."""
        vs = set(vs)
        out: set[int] = set()
        for v in vs:
            out |= self._adj[v]
        return out - vs

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self._adj)

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


class Digraph:
    """Simple digraph: no loops, no parallel arcs, digons allowed."""

    directed = True
    __slots__ = ("n", "_out", "_in", "_out_bits", "_in_bits", "_m")

    def __init__(self, n: int, out: Sequence[frozenset], inn: Sequence[frozenset]):
        self.n = n
        self._out = tuple(out)
        self._in = tuple(inn)
        self._out_bits = tuple(_mask(a) for a in self._out)
        self._in_bits = tuple(_mask(a) for a in self._in)
        self._m = sum(len(a) for a in self._out)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        b = GraphBuilder(n, directed=True)
        for u, v in arcs:
            b.add(u, v)
        return b.build()

    @property
    def vertices(self) -> range:
        return range(self.n)

    def out_neighbors(self, v: int) -> frozenset:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset:
        return self._in[v]

    def outdegree(self, v: int) -> int:
        return len(self._out[v])

    def indegree(self, v: int) -> int:
        return len(self._in[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (self._out_bits[u] >> v) & 1 == 1

    def num_arcs(self) -> int:
        return self._m

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._out[u])]

    # Graph-style aliases so code that only needs "edges" can take either.
    def edges(self) -> list[tuple[int, int]]:
        return self.arcs()

    def num_edges(self) -> int:
        return self._m

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self._m})"


AnyGraph = Union[Graph, Digraph]


class GraphBuilder:
    """Single-owner mutable builder; ``build()`` freezes the result.

    Duplicate edges and loops are rejected, matching the strict edge-list
    parser. Pass ``strict=False`` to silently ignore duplicates instead.
    """

    def __init__(self, n: int, directed: bool = False, strict: bool = True):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.directed = directed
        self.strict = strict
        self._out: list[set[int]] = [set() for _ in range(n)]
        self._in: list[set[int]] = [set() for _ in range(n)] if directed else self._out

    def has(self, u: int, v: int) -> bool:
        return v in self._out[u]

    def add(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"edge ({u}, {v}) out of range for n={self.n}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        if v in self._out[u]:
            if self.strict:
                kind = "arc" if self.directed else "edge"
                raise InputError(f"duplicate {kind} ({u}, {v})")
            return
        self._out[u].add(v)
        self._in[v].add(u)

    def build(self) -> AnyGraph:
        if self.directed:
            return Digraph(self.n, [frozenset(s) for s in self._out], [frozenset(s) for s in self._in])
        return Graph(self.n, [frozenset(s) for s in self._out])


def _check_vertices(g: AnyGraph, vs: Iterable[int]) -> set[int]:
    vs = set(vs)
    bad = [v for v in vs if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        raise InputError(f"vertices {sorted(bad)} out of range for n={g.n}")
    return vs


def induced(g: AnyGraph, keep: Iterable[int]) -> tuple[AnyGraph, tuple[int, ...]]:
    """Subgraph induced by ``keep``; returns ``(h, labels)`` with labels[new] = old."""
    labels = tuple(sorted(_check_vertices(g, keep)))
    index = {old: new for new, old in enumerate(labels)}
    if g.directed:
        out = [frozenset(index[w] for w in g.out_neighbors(v) if w in index) for v in labels]
        inn = [frozenset(index[w] for w in g.in_neighbors(v) if w in index) for v in labels]
        return Digraph(len(labels), out, inn), labels
    adj = [frozenset(index[w] for w in g.neighbors(v) if w in index) for v in labels]
    return Graph(len(labels), adj), labels


def delete(g: AnyGraph, drop: Iterable[int]) -> tuple[AnyGraph, tuple[int, ...]]:
    """G - U, i.e. ``induced(g, V(g) - drop)``."""
    drop = _check_vertices(g, drop)
    return induced(g, [v for v in range(g.n) if v not in drop])


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(g.degree(v) for v in range(g.n))


def semi_degree(d: Digraph) -> int:
    """min(delta+, delta-) over all vertices."""
    if d.n == 0:
        raise InputError("semi-degree of the empty digraph is undefined")
    return min(min(d.outdegree(v), d.indegree(v)) for v in range(d.n))


# ---------------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text: str) -> AnyGraph:
    """Parse ``n m directed|undirected`` followed by ``m`` lines ``u v``.

    ``#`` starts a comment. Loops, duplicates, out-of-range ids and a wrong
    edge count are all :class:`ParseError`.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list: missing header")
    lineno, header = rows[0]
    if len(header) != 3 or header[2] not in ("directed", "undirected"):
        raise ParseError(f"line {lineno}: header must be 'n m directed|undirected'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line {lineno}: n and m must be integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} were given")
    b = GraphBuilder(n, directed=header[2] == "directed")
    for lineno, parts in body:
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        if not b.directed and 0 <= u < n and 0 <= v < n and b.has(v, u):
            raise ParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        try:
            b.add(u, v)
        except InputError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return b.build()


def format_edge_list(g: AnyGraph) -> str:
    kind = "directed" if g.directed else "undirected"
    edges = g.edges()
    lines = [f"{g.n} {len(edges)} {kind}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> AnyGraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: AnyGraph, path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
