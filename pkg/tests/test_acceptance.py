"""Acceptance criteria, one test each. Every test prints a single
``ACCEPTANCE <n> PASS|FAIL`` line with its measured figures."""
import random
import time

import pytest

from helpers import random_graph, small_corpus
from nonsep.connectivity import (
    components,
    fragments,
    hamidoune_check,
    is_k_connected,
    kappa,
    minimum_separators,
)
from nonsep.digraph_finder import improve_oriented_double_star, improve_oriented_star
from nonsep.errors import NonsepError
from nonsep.generators import (
    clique_chain,
    complete_bipartite,
    cycle_graph,
    gen_random_digraph,
    gen_random_graph,
    wheel_graph,
)
from nonsep.graph import delete, min_degree
from nonsep.graph_finder import lift_by_lemma32
from nonsep.harness import default_k, preconditions_hold, solve
from nonsep.oracle import brute_kappa, exists_nonseparating_bruteforce, verify_nonseparating
from nonsep.shapes import Kind, double_star_from_arc, parse_shape, accepted_family, validate_embedding

SEED = 20240611


@pytest.fixture
def report(capsys):
    def emit(num, title, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {title} [{detail}]")
        assert ok, detail
    return emit


def _increasing(trace):
    sizes = [b for _, b in trace]
    return all(a < b for a, b in zip(sizes, sizes[1:]))


def test_c1_oriented_star_sweep(report):
    rng = random.Random(SEED + 1)
    total, ok, looped, worst, problems = 500, 0, 0, 0.0, []
    for i in range(total):
        m = (3, 4, 5)[i % 3]
        n = rng.randint(m + 2, 30)
        d = gen_random_digraph(n, m + 1, rng.randrange(2 ** 31), rng.choice([1, 2, 3]))
        start = time.perf_counter()
        try:
            state = improve_oriented_star(d, m)
        except NonsepError as exc:
            problems.append(f"#{i}: {exc}")
            continue
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        looped += state.iterations > 0
        good = (
            state.tree.spec.kind in (Kind.OUT_STAR, Kind.IN_STAR)
            and verify_nonseparating(d, state.tree, 1)
            and _increasing(state.trace)
            and state.iterations <= n
            and elapsed < 1.0
        )
        ok += good
        if not good:
            problems.append(f"#{i}")
    report(1, "oriented star sweep", ok == total,
           f"{ok}/{total} verified, {looped} entered the loop, max {worst:.3f}s, problems={problems[:5]}")


def test_c2_oriented_double_star_sweep(report):
    rng = random.Random(SEED + 2)
    legal = [(m, r, m - 2 - r) for m in (4, 5, 6) for r in range(1, m - 2)]
    total, ok, looped, problems = 500, 0, 0, []
    for i in range(total):
        m, r, s = legal[i % len(legal)]
        n = rng.randint(m + 2, 30)
        d = gen_random_digraph(n, m + 1, rng.randrange(2 ** 31), rng.choice([1, 2, 3]))
        try:
            state = improve_oriented_double_star(d, m, r, s)
        except NonsepError as exc:
            problems.append(f"#{i}: {exc}")
            continue
        looped += state.iterations > 0
        good = (
            state.tree.spec in accepted_family(parse_shape(f"ods:{m}:{r}:{s}"))
            and verify_nonseparating(d, state.tree, 1)
            and _increasing(state.trace)
            and state.iterations <= n
        )
        ok += good
        if not good:
            problems.append(f"#{i}")
    report(2, "oriented double-star sweep", ok == total,
           f"{ok}/{total} verified, {looped} entered the loop with strictly growing |B|, "
           f"problems={problems[:5]}")


def _undirected_shapes():
    out = []
    for m in (4, 5, 6):
        out += [f"ps:{r}:{m}" for r in range(1, m - 2)]
        out += [f"pds{v}:{r}:{m}" for r in range(1, m - 3) for v in (1, 2)]
    return out


def test_c3_path_star_sweep(report):
    rng = random.Random(SEED + 3)
    shapes = _undirected_shapes()
    total, ok, worst, problems = 200, 0, 0.0, []
    for i in range(total):
        spec = parse_shape(shapes[i % len(shapes)])
        n = rng.randint(spec.m + 3, 25)
        g = gen_random_graph(n, spec.m + 2, 2, rng.randrange(2 ** 31), rng.choice([1, 2, 3]))
        start = time.perf_counter()
        try:
            emb, _ = solve(g, spec)
        except NonsepError as exc:
            problems.append(f"#{i} {spec}: {exc}")
            continue
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        good = emb.spec in accepted_family(spec) and verify_nonseparating(g, emb, 2) and elapsed < 10.0
        ok += good
        if not good:
            problems.append(f"#{i} {spec}")
    report(3, "path-star and path-double-star sweep", ok == total,
           f"{ok}/{total} verified over {len(shapes)} shapes, max {worst:.3f}s, problems={problems[:5]}")


UNDIRECTED_SMALL = ["star:3", "star:4", "dstar:4:1", "dstar:5:2", "path:3", "path:4",
                    "ps:1:4", "ps:1:5", "ps:2:5", "pds1:1:5", "pds1:1:6", "pds2:1:6"]
DIRECTED_SMALL = ["os:2", "os:3", "is:3", "os:4", "ods:4:1:1", "ods:5:1:2", "ids:5:2:1", "oids:6:2:2"]


def _small_instances():
    items = small_corpus()
    rng = random.Random(SEED + 4)
    for i in range(20):
        n = rng.randint(7, 10)
        items.append((f"r{i}", gen_random_graph(n, rng.randint(5, n - 1), 2, rng.randrange(2 ** 31), rng.choice([1, 2]))))
        n = rng.randint(5, 10)
        items.append((f"d{i}", gen_random_digraph(n, rng.randint(3, n - 1), rng.randrange(2 ** 31), rng.choice([1, 2]))))
    return [(name, g) for name, g in items if g.n <= 10]


def test_c4_oracle_equivalence(report):
    checked, agree, mismatches = 0, 0, []
    for name, g in _small_instances():
        for text in DIRECTED_SMALL if g.directed else UNDIRECTED_SMALL:
            spec = parse_shape(text)
            if not preconditions_hold(g, spec):
                continue
            checked += 1
            k = default_k(spec)
            try:
                emb, _ = solve(g, spec)
                finder = emb.spec in accepted_family(spec) and verify_nonseparating(g, emb, k)
            except NonsepError:
                finder = False
            oracle = exists_nonseparating_bruteforce(g, accepted_family(spec), k) is not None
            agree += finder == oracle
            if finder != oracle:
                mismatches.append((name, text, finder, oracle))
    report(4, "finder vs brute-force oracle (n <= 10)", checked > 0 and agree == checked,
           f"{agree}/{checked} (instance, shape) pairs agree, mismatches={mismatches[:5]}")


def _two_connected_graphs(count):
    rng = random.Random(SEED + 5)
    out = []
    while len(out) < count // 2:
        sizes = [rng.randint(3, 7) for _ in range(rng.randint(2, 4))]
        g = clique_chain(sizes, rng.randrange(2 ** 31), cyclic=rng.random() < 0.3)
        if kappa(g) == 2:
            out.append(g)
    while len(out) < count:
        n = rng.randint(7, 16)
        g = gen_random_graph(n, rng.randint(2, 5), 2, rng.randrange(2 ** 31), rng.choice([2, 3]))
        if not g.is_complete() and kappa(g) == 2:
            out.append(g)
    return out


def test_c5_fragment_completion_invariant(report):
    graphs = _two_connected_graphs(100)
    checks = passed = 0
    failures = []
    for gi, g in enumerate(graphs):
        if g.is_complete():
            continue
        k = kappa(g)
        for s in minimum_separators(g):
            for frag in fragments(g, s).fragments:
                checks += 1
                good = hamidoune_check(g, s, frag.vertices, k)
                if frag.is_end and len(frag.vertices) >= 2:
                    checks += 1
                    good2 = hamidoune_check(g, s, frag.vertices, k + 1)
                    passed += good2
                    if not good2:
                        failures.append((gi, sorted(s), sorted(frag.vertices), k + 1))
                passed += good
                if not good:
                    failures.append((gi, sorted(s), sorted(frag.vertices), k))
    kappas = {kappa(g) for g in graphs}
    report(5, "fragment completions stay k- / (k+1)-connected", checks > 0 and passed == checks and kappas == {2},
           f"{len(graphs)} graphs (kappa {sorted(kappas)}), {passed}/{checks} checks, failures={failures[:5]}")


def test_c6_double_star_builder(report):
    rng = random.Random(SEED + 6)
    kinds = [Kind.ODS, Kind.IDS, Kind.OIDS]
    total, eligible, built, wrong = 1000, 0, 0, []
    for i in range(total):
        n = rng.randint(6, 14)
        d = gen_random_digraph(n, rng.randint(1, min(6, n - 1)), rng.randrange(2 ** 31), rng.choice([1, 2]))
        u, v = rng.choice(list(d.arcs()))
        m = rng.randint(4, 8)
        r = rng.randint(1, m - 3)
        s = m - 2 - r
        kind = rng.choice(kinds)
        rest = [x for x in range(n) if x not in (u, v)]
        forbidden = set(rng.sample(rest, rng.randint(0, min(2, len(rest)))))
        pool_u = d.out_neighbors(u) if kind in (Kind.ODS, Kind.OIDS) else d.in_neighbors(u)
        pool_v = d.out_neighbors(v) if kind is Kind.ODS else d.in_neighbors(v)
        a = set(pool_u) - forbidden - {u, v}
        b = set(pool_v) - forbidden - {u, v}
        hypotheses = len(a) >= r and len(b) >= s and len(a | b) >= r + s
        emb = double_star_from_arc(d, u, v, kind, m, r, s, forbidden)
        if hypotheses:
            eligible += 1
            if emb is not None and not validate_embedding(d, emb) and not emb.vertices & forbidden \
                    and emb.mapping[:2] == (u, v):
                built += 1
            else:
                wrong.append(i)
        elif emb is not None:
            wrong.append(i)
    report(6, "double-star from an arc", eligible > 0 and built == eligible and not wrong,
           f"{built}/{eligible} eligible tuples built and validated out of {total}, wrong={wrong[:5]}")


def _lift_hosts():
    rng = random.Random(SEED + 7)
    while True:
        m = rng.randint(1, 3)
        if rng.random() < 0.5:
            sizes = [rng.randint(m + 3, m + 6) for _ in range(rng.randint(2, 4))]
            g = clique_chain(sizes, rng.randrange(2 ** 31))
        else:
            n = rng.randint(m + 8, 18)
            g = gen_random_graph(n, m + 2, 2, rng.randrange(2 ** 31), rng.choice([2, 3]))
        if not g.is_complete() and kappa(g) == 2 and min_degree(g) >= m + 2:
            yield g, m, rng


def test_c7_lifting_soundness(report):
    target, tried, confirmed, failures = 200, 0, 0, []
    samples = 0
    hosts = _lift_hosts()
    while samples < target and tried < 50000:
        g, m, rng = next(hosts)
        seps = minimum_separators(g)
        S = rng.choice(seps)
        comps = components(g, exclude=S)
        F = frozenset().union(*rng.sample(comps, rng.randint(1, len(comps) - 1)))
        rest = sorted(set(range(g.n)) - S - F)
        for _ in range(5):
            tried += 1
            W = frozenset(rng.sample(rest, rng.randint(1, min(m, len(rest)))))
            if not lift_by_lemma32(g, S, F, W, 2, m):
                continue
            samples += 1
            if is_k_connected(delete(g, W)[0], 2):
                confirmed += 1
            else:
                failures.append((sorted(S), sorted(F), sorted(W)))
            if samples == target:
                break
    report(7, "completion test licenses kappa(G - W) >= 2", samples == target and confirmed == samples,
           f"{confirmed}/{samples} samples confirmed ({tried} drawn), failures={failures[:5]}")


def _kappa_family():
    fam = [(f"C{n}", cycle_graph(n)) for n in range(3, 9)]
    fam += [(f"W{n}", wheel_graph(n)) for n in range(4, 9)]
    fam += [(f"K{a},{b}", complete_bipartite(a, b)) for a in range(1, 5) for b in range(a, 9 - a)]
    rng = random.Random(SEED + 8)
    for i in range(150):
        n = rng.randint(1, 8)
        fam.append((f"G{i}", random_graph(n, rng.choice([0.3, 0.5, 0.7, 0.9]), rng.randrange(2 ** 31))))
    return fam


def test_c8_kappa_matches_brute_force(report):
    fam = _kappa_family()
    bad = [(name, kappa(g), brute_kappa(g)) for name, g in fam if kappa(g) != brute_kappa(g)]
    report(8, "kappa vs cut enumeration (n <= 8)", not bad,
           f"{len(fam) - len(bad)}/{len(fam)} graphs exact, mismatches={bad[:5]}")
