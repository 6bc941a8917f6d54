"""Vertex connectivity, strong components, separators, fragments and ends.

Connectivity is computed with Menger's theorem: unit vertex capacities,
one max-flow per vertex pair, pairs chosen as in Even's algorithm. The
common cases k <= 2 short-circuit to DFS (components / articulation points).

Functions that finders call in inner loops accept an ``exclude`` set so a
remainder ``G - X`` can be tested without materialising the subgraph.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import InputError
from .graph import Digraph, Graph, GraphBuilder, delete, min_degree

__all__ = [
    "ComponentOrder",
    "Fragment",
    "SeparationContext",
    "components",
    "is_connected",
    "is_biconnected",
    "kappa",
    "is_k_connected",
    "local_connectivity",
    "minimum_separator",
    "minimum_separators",
    "strong_components",
    "max_strong_component",
    "is_strongly_connected",
    "fragments",
    "ends",
    "completion",
    "hamidoune_check",
    "kpair_check",
]

ComponentOrder = tuple  # tuple[frozenset[int], ...], sources first


def _alive(g, exclude: Optional[Iterable[int]]) -> set[int]:
    if not exclude:
        return set(range(g.n))
    exclude = set(exclude)
    return {v for v in range(g.n) if v not in exclude}


# ---------------------------------------------------------------------------
# undirected: components and biconnectivity

def components(g: Graph, exclude: Optional[Iterable[int]] = None) -> list[frozenset]:
    """Connected components of ``g - exclude``, ordered by smallest vertex."""
    alive = _alive(g, exclude)
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in alive and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, exclude: Optional[Iterable[int]] = None) -> bool:
    """True for a nonempty connected remainder."""
    alive = _alive(g, exclude)
    if not alive:
        return False
    start = next(iter(alive))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in alive and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def _articulation_free(g: Graph, alive: set[int]) -> bool:
    """Connected and without cut vertex (iterative Tarjan lowpoints)."""
    root = min(alive)
    disc = {root: 0}
    low = {root: 0}
    clock = 1
    root_children = 0
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        v, parent, it = stack[-1]
        pushed = False
        for w in it:
            if w == parent or w not in alive:
                continue
            if w in disc:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = low[w] = clock
                clock += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
                pushed = True
                break
        if not pushed:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    return False
    return root_children <= 1 and len(disc) == len(alive)


def is_biconnected(g: Graph, exclude: Optional[Iterable[int]] = None) -> bool:
    """2-connectivity of ``g - exclude`` (needs at least 3 vertices)."""
    alive = _alive(g, exclude)
    return len(alive) >= 3 and _articulation_free(g, alive)


# ---------------------------------------------------------------------------
# undirected: Menger flows

def _max_flow(g: Graph, s: int, t: int, alive: set[int], cutoff: int):
    """Vertex-disjoint s-t paths in ``g[alive]`` (s, t non-adjacent).

    Node 2v is v_in, 2v+1 is v_out. Stops once ``cutoff`` paths are found.
    Returns (flow, residual) so callers can read off a minimum cut.
    """
    big = len(alive) + 1
    res: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        res.setdefault(a, {})[b] = res.get(a, {}).get(b, 0) + c
        res.setdefault(b, {}).setdefault(a, 0)

    for v in alive:
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in g.neighbors(v):
            if w in alive:
                arc(2 * v + 1, 2 * w, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in res[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while parent[y] is not None:
            x = parent[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow, res


def local_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    if g.has_edge(s, t) or s == t:
        raise InputError("local connectivity is defined for distinct non-adjacent vertices")
    alive = set(range(g.n))
    flow, _ = _max_flow(g, s, t, alive, cutoff if cutoff is not None else g.n)
    return flow


def _min_cut(g: Graph, s: int, t: int, alive: set[int]) -> frozenset:
    _, res = _max_flow(g, s, t, alive, len(alive))
    seen = {2 * s + 1}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y, c in res[x].items():
            if c > 0 and y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(v for v in alive if 2 * v in seen and 2 * v + 1 not in seen)


def _even(g: Graph, bound: int) -> tuple[int, Optional[tuple[int, int]]]:
    """Vertex connectivity of a connected non-complete graph, with witness pair."""
    alive = set(range(g.n))
    best, pair = bound, None
    i = 0
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            flow, _ = _max_flow(g, i, j, alive, best)
            if flow < best:
                best, pair = flow, (i, j)
        i += 1
    return best, pair


def kappa(g: Graph) -> int:
    """Vertex connectivity; n-1 for complete graphs, 0 if disconnected."""
    if g.n == 0:
        raise InputError("connectivity of the empty graph is undefined")
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    if not is_biconnected(g):
        return 1
    return _even(g, min_degree(g))[0]


def is_k_connected(g: Graph, k: int) -> bool:
    """kappa(g) >= k and |g| >= k + 1."""
    if k < 0:
        raise InputError("k must be non-negative")
    if g.n < k + 1:
        return False
    if k == 0:
        return True
    if k == 1:
        return is_connected(g)
    if k == 2:
        return is_biconnected(g)
    if min_degree(g) < k:
        return False
    if g.is_complete():
        return True
    if not is_biconnected(g):
        return False
    alive = set(range(g.n))
    for i in range(k):
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j) and _max_flow(g, i, j, alive, k)[0] < k:
                return False
    return True


def minimum_separator(g: Graph) -> frozenset:
    """One minimum separating set of a connected non-complete graph."""
    if g.is_complete():
        raise InputError("no separating set: graph is complete")
    if not is_connected(g):
        raise InputError("graph is disconnected: the empty set already separates it")
    k, pair = _even(g, min_degree(g))
    if pair is None:
        # no pair beat the degree bound, so a minimum-degree neighbourhood is a cut
        v = min(range(g.n), key=lambda x: (g.degree(x), x))
        return frozenset(g.neighbors(v))
    return _min_cut(g, pair[0], pair[1], set(range(g.n)))


def minimum_separators(g: Graph) -> list[frozenset]:
    """All separating sets of size kappa(g), in lexicographic order."""
    if g.n == 0 or g.is_complete():
        raise InputError("no separating set: graph is complete")
    if not is_connected(g):
        raise InputError("minimum separators need a connected graph")
    k = kappa(g)
    out = []
    for combo in combinations(range(g.n), k):
        if not is_connected(g, exclude=combo):
            out.append(frozenset(combo))
    return out


# ---------------------------------------------------------------------------
# fragments and ends

@dataclass(frozen=True)
class Fragment:
    vertices: frozenset
    complement: frozenset
    is_end: bool


@dataclass(frozen=True)
class SeparationContext:
    separator: frozenset
    fragments: tuple  # tuple[Fragment, ...]


def _all_fragment_sets(g: Graph) -> list[tuple[frozenset, frozenset]]:
    return [(s, comp) for s in minimum_separators(g) for comp in components(g, exclude=s)]


def fragments(g: Graph, S: Iterable[int]) -> SeparationContext:
    """Single-component fragments to the minimum separator ``S``.

    Every fragment that is a union of several components strictly contains
    one of these, so ends are always among them.
    """
    S = frozenset(S)
    if any(not 0 <= v < g.n for v in S):
        raise InputError("separator vertex out of range")
    comps = components(g, exclude=S)
    if len(comps) < 2:
        raise InputError(f"{sorted(S)} does not separate the graph")
    if len(S) != kappa(g):
        raise InputError(f"|S| = {len(S)} differs from kappa = {kappa(g)}")
    everything = [f for _, f in _all_fragment_sets(g)]
    full = frozenset(range(g.n))
    frags = []
    for comp in comps:
        is_end = not any(other < comp for other in everything)
        frags.append(Fragment(comp, full - S - comp, is_end))
    return SeparationContext(S, tuple(frags))


def ends(g: Graph) -> list[tuple[frozenset, frozenset]]:
    """All (separator, end) pairs, sorted by (|F|, sorted S, sorted F)."""
    if g.n == 0 or g.is_complete():
        raise InputError("a complete graph has no ends")
    pairs = _all_fragment_sets(g)
    frag_sets = {f for _, f in pairs}
    out = [(s, f) for s, f in pairs if not any(o < f for o in frag_sets)]
    out.sort(key=lambda sf: (len(sf[1]), sorted(sf[0]), sorted(sf[1])))
    return out


def completion(g: Graph, S: Iterable[int]) -> Graph:
    """G[S]: ``g`` plus every missing edge between vertices of ``S``."""
    S = sorted(set(S))
    if any(not 0 <= v < g.n for v in S):
        raise InputError("completion set out of range")
    b = GraphBuilder(g.n, strict=False)
    for u, v in g.edges():
        b.add(u, v)
    for u, v in combinations(S, 2):
        b.add(u, v)
    return b.build()


def hamidoune_check(g: Graph, S: Iterable[int], F: Iterable[int], k: int) -> bool:
    """Is ``G[S] - V(F-bar)`` k-connected?

    ``S`` must be a minimum separator and ``F`` a fragment to it. The
    lemma this checks promises ``k = |S|`` always holds, and ``k = |S| + 1``
    when ``F`` is an end with at least two vertices.
    """
    S, F = frozenset(S), frozenset(F)
    comps = components(g, exclude=S)
    if len(comps) < 2 or len(S) != kappa(g):
        raise InputError("S is not a minimum separating set")
    covered = [c for c in comps if c <= F]
    if not F or F & S or frozenset().union(*covered) != F or len(covered) == len(comps):
        raise InputError("F is not a fragment to S")
    if k < 1:
        raise InputError("k must be positive")
    rest = frozenset(range(g.n)) - S - F
    h, _ = delete(completion(g, S), rest)
    return is_k_connected(h, k)


def kpair_check(g: Graph, C: Iterable[int], k: int, m: int, plus: bool = False) -> bool:
    """Membership of (g, C) in K_k(m), or K_k^+(m) when ``plus``."""
    C = frozenset(C)
    if g.n < k + 1 or len(C) != k or any(not 0 <= v < g.n for v in C):
        return False
    if any(not g.has_edge(u, v) for u, v in combinations(sorted(C), 2)):
        return False
    outside = [v for v in range(g.n) if v not in C]
    if outside and min(g.degree(v) for v in outside) < (3 * k) // 2 + m - 1:
        return False
    return is_k_connected(g, k + 1 if plus else k)


# ---------------------------------------------------------------------------
# digraphs

def _tarjan(d: Digraph, alive: set[int]) -> list[frozenset]:
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[frozenset] = []
    clock = 0
    for s in sorted(alive):
        if s in index:
            continue
        index[s] = low[s] = clock
        clock += 1
        stack.append(s)
        on_stack.add(s)
        work = [(s, iter(sorted(d.out_neighbors(s))))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in alive:
                    continue
                if w not in index:
                    index[w] = low[w] = clock
                    clock += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(d.out_neighbors(w)))))
                    pushed = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if pushed:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                comp = set()
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.add(x)
                    if x == v:
                        break
                out.append(frozenset(comp))
    return out


def strong_components(d: Digraph, exclude: Optional[Iterable[int]] = None) -> ComponentOrder:
    """Strong components of ``d - exclude`` in topological order.

    No arc goes from a later component to an earlier one. Incomparable
    components are ordered by their smallest vertex.
    """
    alive = _alive(d, exclude)
    if not alive:
        return ()
    comps = _tarjan(d, alive)
    where = {v: i for i, c in enumerate(comps) for v in c}
    succ = [set() for _ in comps]
    indeg = [0] * len(comps)
    for i, c in enumerate(comps):
        for v in c:
            for w in d.out_neighbors(v):
                j = where.get(w)
                if j is not None and j != i and j not in succ[i]:
                    succ[i].add(j)
                    indeg[j] += 1
    heap = [(min(c), i) for i, c in enumerate(comps) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(comps[i])
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (min(comps[j]), j))
    return tuple(order)


def max_strong_component(d: Digraph, exclude: Optional[Iterable[int]] = None) -> frozenset:
    """A largest strong component; ties go to the one with the smallest vertex."""
    comps = strong_components(d, exclude)
    if not comps:
        raise InputError("no vertices left")
    return min(comps, key=lambda c: (-len(c), min(c)))


def is_strongly_connected(d: Digraph, exclude: Optional[Iterable[int]] = None) -> bool:
    """One strong component covering a nonempty remainder."""
    return len(strong_components(d, exclude)) == 1
