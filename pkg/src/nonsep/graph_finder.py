"""Undirected finders: nonseparating stars, double-stars, rooted paths and
path-(double-)stars in 2-connected graphs.

The star, double-star and rooted-path pieces are bounded backtracking
searches; their existence is guaranteed under the stated degree bounds, so
running out of candidates raises :class:`NotFoundError`. The path-star
finders follow the end/completion reduction: grow a star part whose removal
keeps the graph 2-connected, then hang a path off it inside a 3-connected
completion of an end, recursing into that completion when no end touches the
star part. Every reduction hypothesis is re-checked at runtime and a failure
raises :class:`ContradictionError` with the instance attached.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .connectivity import (
    completion,
    components,
    ends,
    is_biconnected,
    is_k_connected,
    kpair_check,
)
from .errors import ContradictionError, InputError, NotFoundError, PreconditionError
from .graph import Graph, delete, format_edge_list, induced, min_degree
from .shapes import (
    Embedding,
    Kind,
    ShapeSpec,
    double_star,
    iter_embeddings,
    path_double_star,
    path_star,
    star,
)

__all__ = [
    "KPair",
    "find_nonsep_star_k2",
    "find_nonsep_double_star_k2",
    "find_rooted_nonsep_path",
    "find_nonsep_shape_in_pair",
    "find_path_star",
    "find_path_double_star",
    "lift_by_lemma32",
]

# embeddings of the requested PDS variant tried when the reduction returns the other one
VARIANT_SEARCH_BUDGET = 20000


@dataclass(frozen=True)
class KPair:
    """A graph with a distinguished k-clique ``C`` and min degree off ``C``
    at least floor(3k/2) + m - 1; with ``plus`` the graph is (k+1)-connected,
    otherwise k-connected."""

    g: Graph
    C: frozenset
    k: int
    m: int
    plus: bool = False

    def __post_init__(self):
        object.__setattr__(self, "C", frozenset(self.C))
        if not isinstance(self.g, Graph):
            raise InputError("KPair needs an undirected graph")
        if not kpair_check(self.g, self.C, self.k, self.m, self.plus):
            label = "K_{}^+({})" if self.plus else "K_{}({})"
            raise PreconditionError(f"(g, {sorted(self.C)}) is not in " + label.format(self.k, self.m))


def _require_graph(g) -> None:
    if not isinstance(g, Graph):
        raise InputError("expected an undirected graph")


def _require_k2(g: Graph, m: int) -> None:
    _require_graph(g)
    if not is_k_connected(g, 2):
        raise PreconditionError("graph is not 2-connected")
    if min_degree(g) < m + 2:
        raise PreconditionError(f"minimum degree {min_degree(g)} < m + 2 = {m + 2}")


def _witness(h: Graph, **extra) -> dict:
    w = {"graph": format_edge_list(h)}
    w.update({k: sorted(v) if isinstance(v, (set, frozenset)) else v for k, v in extra.items()})
    return w


# ---------------------------------------------------------------------------
# search-backed pieces

def _search_tree(h: Graph, spec: ShapeSpec, avoid=frozenset()) -> Optional[Embedding]:
    """First star/double-star in ``h - avoid`` whose removal leaves ``h`` 2-connected.

    Centres are tried by descending degree.
    """
    roots = sorted((v for v in range(h.n) if v not in avoid), key=lambda v: (-h.degree(v), v))
    for emb in iter_embeddings(h, spec, forbidden=avoid, root_order=roots):
        if is_biconnected(h, exclude=emb.mapping):
            return emb
    return None


def _search_path(h: Graph, order: int, start: int, avoid=frozenset()) -> Optional[tuple]:
    spec = ShapeSpec(Kind.PATH, order)
    for emb in iter_embeddings(h, spec, forbidden=avoid, anchors={0: start}):
        if is_biconnected(h, exclude=emb.mapping):
            return emb.mapping
    return None


def find_nonsep_star_k2(g: Graph, m: int) -> Embedding:
    """Star of order ``m`` whose removal leaves ``g`` 2-connected."""
    spec = star(m)
    _require_k2(g, m)
    emb = _search_tree(g, spec)
    if emb is None:
        raise NotFoundError(f"no nonseparating star of order {m}")
    return emb


def find_nonsep_double_star_k2(g: Graph, m: int, a: int) -> Embedding:
    """Double-star of order ``m`` with ``a`` leaves on the first centre."""
    spec = double_star(m, a)
    _require_k2(g, m)
    emb = _search_tree(g, spec)
    if emb is None:
        raise NotFoundError(f"no nonseparating double-star {spec}")
    return emb


def find_rooted_nonsep_path(pair_or_graph: Union[KPair, Graph], p: int, r: int) -> Embedding:
    """Path of order ``r`` starting at ``p`` with a 2-connected remainder.

    With a :class:`KPair` the pair must lie in K_2^+(r) and the path avoids
    ``C``; a bare graph must be 3-connected with minimum degree >= r + 2.
    """
    if r < 1:
        raise InputError("path order must be positive")
    if isinstance(pair_or_graph, KPair):
        pair = pair_or_graph
        g, avoid = pair.g, pair.C
        if pair.k != 2 or not kpair_check(g, avoid, 2, r, plus=True):
            raise PreconditionError(f"pair is not in K_2^+({r})")
    else:
        g, avoid = pair_or_graph, frozenset()
        _require_graph(g)
        if not is_k_connected(g, 3):
            raise PreconditionError("graph is not 3-connected")
        if min_degree(g) < r + 2:
            raise PreconditionError(f"minimum degree {min_degree(g)} < r + 2 = {r + 2}")
    if not 0 <= p < g.n:
        raise InputError(f"start vertex {p} out of range")
    if p in avoid:
        raise InputError(f"start vertex {p} lies in C")
    path = _search_path(g, r, p, avoid)
    if path is None:
        raise NotFoundError(f"no nonseparating path of order {r} from {p}")
    return Embedding(ShapeSpec(Kind.PATH, r), path)


def find_nonsep_shape_in_pair(pair: KPair, spec: ShapeSpec) -> Embedding:
    """Path, star or double-star of order ``spec.m`` inside ``G - C``."""
    if spec.kind not in (Kind.PATH, Kind.STAR, Kind.DOUBLE_STAR):
        raise InputError(f"{spec.kind.value} is not a path, star or double-star")
    if pair.k != 2 or not kpair_check(pair.g, pair.C, 2, spec.m, pair.plus):
        raise PreconditionError(f"pair is not in K_2({spec.m})")
    g, avoid = pair.g, pair.C
    if spec.kind is Kind.PATH:
        for p in range(g.n):
            if p not in avoid:
                path = _search_path(g, spec.m, p, avoid)
                if path is not None:
                    return Embedding(spec, path)
        raise NotFoundError(f"no nonseparating path of order {spec.m} off C")
    emb = _search_tree(g, spec, avoid)
    if emb is None:
        raise NotFoundError(f"no nonseparating {spec} off C")
    return emb


# ---------------------------------------------------------------------------
# path-star reduction

def _parts(base: ShapeSpec, emb: Embedding):
    """Centres and per-centre leaf lists of a star or double-star embedding."""
    mp = emb.mapping
    if base.kind is Kind.STAR:
        return [mp[0]], [list(mp[1:])]
    a = base.r
    return [mp[0], mp[1]], [list(mp[2:2 + a]), list(mp[2 + a:])]


def _assemble(base: ShapeSpec, m: int, r: int, centres, leaves, x: int, glue: int,
              path: Sequence[int]) -> Embedding:
    """Path-star or path-double-star with ``path`` hung off leaf ``glue`` of centre ``x``."""
    lx = [glue] + [v for v in leaves[x] if v != glue]
    if base.kind is Kind.STAR:
        return Embedding(path_star(r, m), (centres[0], *lx, *path))
    lo = leaves[1 - x]
    if len(lx) >= len(lo):
        spec = ShapeSpec(Kind.PDS1, m, r, len(lx))
        return Embedding(spec, (centres[x], centres[1 - x], *lx, *lo, *path))
    spec = ShapeSpec(Kind.PDS2, m, r, len(lo))
    return Embedding(spec, (centres[1 - x], centres[x], *lo, *lx, *path))


def _options(centres, leaves, prefer: int):
    """(centre index, vertex, is_leaf), preferred centre's leaves first."""
    out = []
    for x in [prefer] + [i for i in range(len(centres)) if i != prefer]:
        out += [(x, v, True) for v in leaves[x]]
        out.append((x, centres[x], False))
    return out


def _hang(h: Graph, removed: frozenset, S: frozenset, F: frozenset, w: int, order: int,
          depth: int) -> list:
    """Path of order ``order`` from ``w`` inside the completion of end ``F``.

    The completion ``h[S] - (everything but F and S)`` must be 3-connected
    with enough degree off ``S``; the path found there avoids ``S`` and its
    removal, together with ``removed``, must leave ``h`` 2-connected.
    """
    gp, lab = induced(completion(h, S), F | S)
    idx = {o: i for i, o in enumerate(lab)}
    local_s = frozenset(idx[v] for v in S)
    if not kpair_check(gp, local_s, 2, order, plus=True):
        raise ContradictionError(
            f"completion of end at depth {depth} is not in K_2^+({order})",
            _witness(h, S=S, F=F, removed=removed, order=order))
    p = _search_path(gp, order, idx[w], local_s)
    if p is None:
        raise NotFoundError(f"no nonseparating path of order {order} from {w} in the completion")
    path = [lab[x] for x in p]
    if not is_biconnected(h, exclude=removed | frozenset(path)):
        raise ContradictionError("lifted path separates the host",
                                 _witness(h, S=S, F=F, removed=removed, path=path))
    return path


def _grow(h: Graph, m: int, r: int, base: ShapeSpec, prefer: int, avoid: frozenset,
          depth: int) -> Embedding:
    if depth > h.n:
        raise ContradictionError("recursion depth guard exceeded", _witness(h, avoid=avoid, m=m, r=r))
    if avoid and not kpair_check(h, avoid, 2, m, plus=True):
        raise ContradictionError(f"recursion pair at depth {depth} is not in K_2^+({m})",
                                 _witness(h, avoid=avoid, m=m))
    t1 = _search_tree(h, base, avoid)
    if t1 is None:
        raise NotFoundError(f"no nonseparating {base} at depth {depth}")
    centres, leaves = _parts(base, t1)
    tv = t1.vertices
    g1, lab1 = delete(h, tv)
    idx1 = {o: i for i, o in enumerate(lab1)}
    options = _options(centres, leaves, prefer)

    if is_k_connected(g1, 3):
        x, v, _ = options[0]
        free = sorted(set(h.neighbors(v)) - tv - avoid)
        if not free:
            raise ContradictionError("leaf has no neighbour outside the tree and C",
                                     _witness(h, tree=list(t1.mapping), avoid=avoid))
        local_avoid = frozenset(idx1[c] for c in avoid)
        if avoid:
            ok = kpair_check(g1, local_avoid, 2, r, plus=True)
        else:
            ok = min_degree(g1) >= r + 2
        if not ok:
            raise ContradictionError("remainder lost the degree bound for the path",
                                     _witness(h, tree=list(t1.mapping), avoid=avoid))
        p = _search_path(g1, r, idx1[free[0]], local_avoid)
        if p is None:
            raise NotFoundError(f"no nonseparating path of order {r} from {free[0]}")
        return _assemble(base, m, r, centres, leaves, x, v, [lab1[y] for y in p])

    end_list = [(frozenset(lab1[i] for i in S), frozenset(lab1[i] for i in F)) for S, F in ends(g1)]
    if avoid:
        end_list = [(S, F) for S, F in end_list if not F & avoid]
        if not end_list:
            raise ContradictionError("every end meets C", _witness(h, tree=list(t1.mapping), avoid=avoid))

    for x, v, is_leaf in options:
        for S, F in end_list:
            hits = sorted(set(h.neighbors(v)) & F)
            if not hits:
                continue
            w = hits[0]
            if is_leaf:
                path = _hang(h, tv, S, F, w, r, depth)
                return _assemble(base, m, r, centres, leaves, x, v, path)
            # centre touches F but none of its leaves does: free the last leaf
            drop = leaves[x][-1]
            if set(h.neighbors(drop)) & F:
                continue
            kept = [list(ls) for ls in leaves]
            kept[x] = kept[x][:-1]
            path = _hang(h, tv - {drop}, S, F, w, r + 1, depth)
            kept[x].append(w)
            return _assemble(base, m, r, centres, kept, x, w, path[1:])

    # no end touches the tree: recurse into the smallest end's completion
    S, F = end_list[0]
    if set().union(*(h.neighbors(f) for f in F)) - F - S:
        raise ContradictionError("end is not a component of the host minus its separator",
                                 _witness(h, S=S, F=F, tree=list(t1.mapping)))
    gp, lab = induced(completion(h, S), F | S)
    if gp.n >= g1.n:
        raise ContradictionError("recursion did not shrink the host", _witness(h, S=S, F=F))
    idx = {o: i for i, o in enumerate(lab)}
    sub = _grow(gp, m, r, base, prefer, frozenset(idx[v] for v in S), depth + 1)
    emb = Embedding(sub.spec, tuple(lab[y] for y in sub.mapping))
    if not is_biconnected(h, exclude=emb.mapping):
        raise ContradictionError("lifted tree separates the host",
                                 _witness(h, S=S, F=F, tree=list(emb.mapping)))
    return emb


def _finish(g: Graph, emb: Embedding) -> Embedding:
    from .shapes import validate_embedding

    problems = validate_embedding(g, emb)
    if problems or not is_biconnected(g, exclude=emb.mapping):
        raise ContradictionError("final tree failed verification",
                                 _witness(g, tree=list(emb.mapping), problems=problems))
    return emb


def find_path_star(g: Graph, m: int, r: int) -> Embedding:
    """PS(r, m-r) whose removal leaves a 2-connected graph.

    Needs ``g`` 2-connected with minimum degree >= m + 2 and 1 <= r <= m - 3.
    """
    spec = path_star(r, m)
    _require_k2(g, m)
    emb = _grow(g, m, r, star(m - r), 0, frozenset(), 0)
    if emb.spec != spec:
        raise ContradictionError("assembled the wrong shape", _witness(g, tree=list(emb.mapping)))
    return _finish(g, emb)


def find_path_double_star(g: Graph, m: int, r: int, variant: int = 1,
                          a: Optional[int] = None) -> Embedding:
    """PDS1 or PDS2 of order ``m`` with a 2-connected remainder.

    The reduction is steered toward ``variant`` (leaf of the larger centre
    for 1, of the smaller for 2). Existence is only promised for one of the
    two variants, so if the reduction lands on the other one a bounded
    direct search for the requested variant is tried before returning it.
    """
    if variant not in (1, 2):
        raise InputError("variant must be 1 or 2")
    spec = path_double_star(variant, r, m, a)
    _require_k2(g, m)
    base = double_star(m - r, spec.s)
    prefer = 0 if spec.kind is Kind.PDS1 else 1
    emb = _grow(g, m, r, base, prefer, frozenset(), 0)
    if emb.spec != spec:
        for i, cand in enumerate(iter_embeddings(g, spec)):
            if i >= VARIANT_SEARCH_BUDGET:
                break
            if is_biconnected(g, exclude=cand.mapping):
                emb = cand
                break
    return _finish(g, emb)


# ---------------------------------------------------------------------------
# lifting predicate

def lift_by_lemma32(g: Graph, S, F, W, k: int, m: int, C=None) -> bool:
    """Does the completion test license kappa(g - W) >= k?

    ``S`` is a k-separator of the k-connected ``g``, ``F`` a fragment to it
    and ``W`` (at most ``m`` vertices) avoids ``S`` and ``F``. Returns whether
    ``completion(g, S) - (F | W)`` is k-connected, which under the degree bound
    floor(3k/2) + m - 1 implies ``g - W`` is k-connected. With ``C`` the
    pair hypothesis ((g, C) in K_k(m), C inside F and S) replaces the
    degree bound.
    """
    _require_graph(g)
    S, F, W = frozenset(S), frozenset(F), frozenset(W)
    full = frozenset(range(g.n))
    if not (S | F | W) <= full:
        raise InputError("vertex out of range")
    if k < 1 or len(S) != k:
        raise InputError(f"|S| = {len(S)} must equal k = {k}")
    if not is_k_connected(g, k):
        raise InputError(f"graph is not {k}-connected")
    comps = components(g, exclude=S)
    covered = [c for c in comps if c <= F]
    if len(comps) < 2 or not F or F & S or frozenset().union(*covered) != F or len(covered) == len(comps):
        raise InputError("F is not a fragment to the separator S")
    if W & (S | F):
        raise InputError("W must avoid S and F")
    if len(W) > m:
        raise InputError(f"|W| = {len(W)} exceeds m = {m}")
    if C is None:
        if min_degree(g) < (3 * k) // 2 + m - 1:
            raise InputError("minimum degree below floor(3k/2) + m - 1")
    else:
        C = frozenset(C)
        if not C <= F | S or not kpair_check(g, C, k, m):
            raise InputError(f"C must lie in F and S with (g, C) in K_{k}({m})")
    h, _ = delete(completion(g, S), F | W)
    return is_k_connected(h, k)
