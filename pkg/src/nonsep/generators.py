"""Named graph families and seeded random instance generators."""
from __future__ import annotations

import random
from itertools import combinations

from .connectivity import (
    components,
    is_connected,
    is_k_connected,
    is_strongly_connected,
    minimum_separator,
    strong_components,
)
from .errors import InputError
from .graph import Digraph, Graph, GraphBuilder

__all__ = [
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "wheel_graph",
    "complete_bipartite",
    "petersen_graph",
    "circulant_graph",
    "complete_digraph",
    "directed_cycle",
    "directed_path",
    "bidirected_cycle",
    "gen_random_graph",
    "gen_random_digraph",
    "clique_chain",
    "named_graph",
    "NAMED_FAMILY",
]


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to a cycle on 1..n-1."""
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph.from_edges(n, [(0, i) for i in range(1, n)] + rim)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def circulant_graph(n: int, jumps) -> Graph:
    b = GraphBuilder(n, strict=False)
    for i in range(n):
        for j in jumps:
            b.add(i, (i + j) % n)
    return b.build()


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def bidirected_cycle(n: int) -> Digraph:
    arcs = [(i, (i + 1) % n) for i in range(n)] + [((i + 1) % n, i) for i in range(n)]
    return Digraph.from_arcs(n, arcs)


def _clusters(n: int, clusters: int, rng: random.Random) -> list[int]:
    if clusters < 1:
        raise InputError("clusters must be positive")
    order = list(range(n))
    rng.shuffle(order)
    label = [0] * n
    for pos, v in enumerate(order):
        label[v] = pos * clusters // n
    return label


def gen_random_graph(n: int, delta_min: int, k: int, seed: int, clusters: int = 1) -> Graph:
    """Random simple graph with minimum degree >= delta_min and kappa >= k.

    Low-degree vertices get random edges inside their cluster (anywhere once
    the cluster is saturated); then, while the graph is not k-connected, an
    edge is added across a minimum separator. With ``clusters > 1`` the
    clusters end up joined through small separators, which is what makes
    low-connectivity instances likely.
    """
    if n < 1 or delta_min < 0 or k < 0:
        raise InputError("n must be positive and delta_min, k non-negative")
    if delta_min >= n or k >= n:
        raise InputError(f"infeasible: delta_min={delta_min}, k={k} need more than {n} vertices")
    rng = random.Random(seed)
    label = _clusters(n, clusters, rng)
    adj = [set() for _ in range(n)]

    def link(u, v):
        adj[u].add(v)
        adj[v].add(u)

    for v in rng.sample(range(n), n):
        while len(adj[v]) < delta_min:
            pool = [w for w in range(n) if w != v and w not in adj[v] and label[w] == label[v]]
            if not pool:
                pool = [w for w in range(n) if w != v and w not in adj[v]]
            link(v, rng.choice(pool))
    for _ in range(rng.randint(0, n // 2)):
        v = rng.randrange(n)
        pool = [w for w in range(n) if w != v and w not in adj[v] and label[w] == label[v]]
        if pool:
            link(v, rng.choice(pool))
    while True:
        g = Graph(n, [frozenset(a) for a in adj])
        if is_k_connected(g, k):
            return g
        if not is_connected(g):
            comps = components(g)
        else:
            comps = components(g, exclude=minimum_separator(g))
        a, b = rng.sample(comps, 2)
        link(rng.choice(sorted(a)), rng.choice(sorted(b)))


def gen_random_digraph(n: int, semidelta_min: int, seed: int, clusters: int = 1) -> Digraph:
    """Random strongly connected digraph with minimum semi-degree >= semidelta_min.

    Out- and in-degrees are filled inside clusters first; strong connectivity
    is then repaired by adding arcs from a sink component to a source
    component of the condensation.
    """
    if n < 1 or semidelta_min < 0:
        raise InputError("n must be positive and semidelta_min non-negative")
    if semidelta_min >= n:
        raise InputError(f"infeasible: semi-degree {semidelta_min} needs more than {n} vertices")
    rng = random.Random(seed)
    label = _clusters(n, clusters, rng)
    out = [set() for _ in range(n)]
    inn = [set() for _ in range(n)]

    def arc(u, v):
        out[u].add(v)
        inn[v].add(u)

    def pick(v, taken):
        pool = [w for w in range(n) if w != v and w not in taken and label[w] == label[v]]
        if not pool:
            pool = [w for w in range(n) if w != v and w not in taken]
        return rng.choice(pool)

    for v in rng.sample(range(n), n):
        while len(out[v]) < semidelta_min:
            arc(v, pick(v, out[v]))
    for v in rng.sample(range(n), n):
        while len(inn[v]) < semidelta_min:
            arc(pick(v, inn[v]), v)
    while True:
        d = Digraph(n, [frozenset(a) for a in out], [frozenset(a) for a in inn])
        if is_strongly_connected(d):
            return d
        order = strong_components(d)
        sink, source = order[-1], order[0]
        arc(rng.choice(sorted(sink)), rng.choice(sorted(source)))


def clique_chain(sizes, seed: int = 0, cyclic: bool = False) -> Graph:
    """Cliques of the given sizes, consecutive ones joined by two disjoint
    random edges (also last to first when ``cyclic``). An open chain of at
    least two blocks has connectivity 2 and its first and last blocks are
    ends."""
    rng = random.Random(seed)
    blocks, start = [], 0
    for size in sizes:
        if size < 3:
            raise InputError("blocks need at least 3 vertices")
        blocks.append(list(range(start, start + size)))
        start += size
    b = GraphBuilder(start, strict=False)
    for blk in blocks:
        for u, v in combinations(blk, 2):
            b.add(u, v)
    pairs = list(zip(blocks, blocks[1:]))
    if cyclic and len(blocks) > 2:
        pairs.append((blocks[-1], blocks[0]))
    for x, y in pairs:
        for u, v in zip(rng.sample(x, 2), rng.sample(y, 2)):
            b.add(u, v)
    return b.build()


def _ints(args, count):
    if len(args) != count:
        raise InputError(f"expected {count} integer parameters")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise InputError(f"bad integer in {args}") from None


def named_graph(text: str):
    """Build a graph from ``petersen``, ``complete:n``, ``cycle:n``,
    ``wheel:n``, ``path:n``, ``bipartite:a:b``, ``circulant:n:j1,j2,..``,
    ``complete-digraph:n``, ``dicycle:n`` or ``bicycle:n``."""
    name, *args = text.strip().lower().split(":")
    if name == "petersen" and not args:
        return petersen_graph()
    if name == "circulant" and len(args) == 2:
        (n,) = _ints(args[:1], 1)
        return circulant_graph(n, _ints(args[1].split(","), len(args[1].split(","))))
    if name == "bipartite":
        return complete_bipartite(*_ints(args, 2))
    single = {
        "complete": complete_graph,
        "cycle": cycle_graph,
        "wheel": wheel_graph,
        "path": path_graph,
        "complete-digraph": complete_digraph,
        "dicycle": directed_cycle,
        "bicycle": bidirected_cycle,
    }
    if name in single:
        return single[name](*_ints(args, 1))
    raise InputError(f"unknown named graph {text!r}")


# small fixed family used by enumerated sweeps and the test corpus
NAMED_FAMILY = (
    "petersen", "complete:6", "complete:8", "complete:9", "wheel:7", "bipartite:5:5",
    "circulant:10:1,2,3", "circulant:11:1,2,3", "circulant:13:1,2,3,4", "circulant:15:1,2,3,4",
    "complete-digraph:6", "complete-digraph:8", "bicycle:8",
)
