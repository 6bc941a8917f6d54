"""Shared strategies, fixtures and small brute-force references for the tests."""
import json
import random
from itertools import combinations
from pathlib import Path

from hypothesis import strategies as st

from nonsep.generators import clique_chain, gen_random_digraph, gen_random_graph, named_graph
from nonsep.graph import Digraph, Graph, parse_edge_list
from nonsep.oracle import reachable
from nonsep.shapes import Embedding, parse_shape

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def digraphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [e for e, k in zip(pairs, keep) if k])


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_digraph(n, p, seed):
    rng = random.Random(seed)
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def brute_components(g, alive=None):
    alive = set(range(g.n)) if alive is None else set(alive)
    comps, left = [], set(alive)
    while left:
        c = reachable(g, min(left), alive)
        comps.append(frozenset(c))
        left -= c
    return comps


def brute_scc(d):
    """Strong components via pairwise reachability closure."""
    alive = set(range(d.n))
    fwd = {v: reachable(d, v, alive) for v in range(d.n)}
    comps = {frozenset(u for u in fwd[v] if v in fwd[u]) for v in range(d.n)}
    return comps


def branch_fixtures():
    """Hand-built digraphs that drive the improvement loop into its rarest branches."""
    raw = json.loads((FIXTURES / "digraph_branches.json").read_text())
    out = []
    for item in raw:
        d = parse_edge_list(item["graph"])
        init = Embedding(parse_shape(item["initial"]["shape"]), tuple(item["initial"]["map"]))
        out.append((item["name"], d, item["m"], item["r"], item["s"], init, item["label"]))
    return out


def small_corpus():
    """Undirected and directed instances with at most 10 vertices."""
    items = []
    for name in ("complete:6", "complete:7", "complete:8", "complete:9", "complete:10",
                 "wheel:7", "bipartite:5:5", "petersen", "circulant:10:1,2,3",
                 "circulant:9:1,2,3", "cycle:8",
                 "complete-digraph:5", "complete-digraph:6", "complete-digraph:7",
                 "bicycle:7", "dicycle:6"):
        items.append((name, named_graph(name)))
    for i in range(10):
        n = 8 + i % 3
        items.append((f"gen_random_graph({n},{6 + i % 2},s{i})", gen_random_graph(n, 6 + i % 2, 2, 100 + i)))
    for i in range(10):
        n = 6 + i % 5
        items.append((f"gen_random_digraph({n},4,s{i})", gen_random_digraph(n, 4, 200 + i, 1 + i % 2)))
    items.append(("clique_chain(5,5)", clique_chain([5, 5], seed=1)))
    return items
