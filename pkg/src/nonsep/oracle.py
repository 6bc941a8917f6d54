"""Brute-force ground truth for embeddings and remainder connectivity.

Nothing here calls the flow code, the articulation-point routine or the
finders' searches: connectivity is re-derived from plain reachability so a
bug there cannot hide a bug in the finders.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import InputError, InvalidEmbeddingError
from .shapes import Embedding, ShapeSpec, shape_edges

__all__ = [
    "reachable",
    "remainder_is_k_connected",
    "brute_kappa",
    "verify_nonseparating",
    "enumerate_embeddings",
    "exists_nonseparating_bruteforce",
]


def reachable(g, start: int, alive: set, reverse: bool = False) -> set:
    """Vertices of ``alive`` reachable from ``start`` (inside ``alive``)."""
    if g.directed:
        step = g.in_neighbors if reverse else g.out_neighbors
    else:
        step = g.neighbors
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in step(x):
            if y in alive and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _strong(g, alive: set) -> bool:
    if not alive:
        return False
    s = min(alive)
    if g.directed:
        return reachable(g, s, alive) == alive and reachable(g, s, alive, reverse=True) == alive
    return reachable(g, s, alive) == alive


def remainder_is_k_connected(g, removed: Iterable[int], k: int) -> bool:
    """Is ``g - removed`` (strongly) k-connected?

    Undirected: at least k+1 vertices and no set of fewer than k vertices
    disconnects it. Directed with k = 1: nonempty and strongly connected
    (a single vertex counts).
    """
    alive = set(range(g.n)) - set(removed)
    if g.directed and k == 1:
        return _strong(g, alive)
    if len(alive) < k + 1:
        return False
    order = sorted(alive)
    for size in range(k):
        for cut in combinations(order, size):
            if not _strong(g, alive - set(cut)):
                return False
    return True


def brute_kappa(g) -> int:
    """Connectivity by enumerating cut sets in increasing size."""
    n = g.n
    everything = set(range(n))
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            if not _strong(g, everything - set(cut)):
                return size
    return n - 1


def _check_shape(g, emb: Embedding) -> None:
    problems = []
    spec = emb.spec
    if spec.directed != g.directed:
        raise InvalidEmbeddingError(["orientation of shape and host differ"])
    if len(emb.mapping) != spec.m:
        raise InvalidEmbeddingError([f"expected {spec.m} vertices, got {len(emb.mapping)}"])
    if any(not (isinstance(v, int) and 0 <= v < g.n) for v in emb.mapping):
        raise InvalidEmbeddingError(["map leaves the host vertex range"])
    if len(set(emb.mapping)) != len(emb.mapping):
        problems.append("two shape vertices share a host vertex")
    for a, b in shape_edges(spec):
        x, y = emb.mapping[a], emb.mapping[b]
        ok = y in (g.out_neighbors(x) if g.directed else g.neighbors(x))
        if not ok:
            problems.append(f"shape edge {a}-{b} -> ({x}, {y}) absent from host")
    if problems:
        raise InvalidEmbeddingError(problems)


def verify_nonseparating(g, tree: Embedding, k: int) -> bool:
    """Check the embedding itself, then that ``g - V(tree)`` is k-connected.

    Raises :class:`InvalidEmbeddingError` listing every mismatch when the
    map is not an embedding of its shape.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    _check_shape(g, tree)
    return remainder_is_k_connected(g, tree.mapping, k)


def _image_key(g, spec: ShapeSpec, mapping: Sequence[int]):
    edges = []
    for a, b in shape_edges(spec):
        x, y = mapping[a], mapping[b]
        edges.append((x, y) if g.directed else (min(x, y), max(x, y)))
    return frozenset(mapping), frozenset(edges)


def _iter_images(g, spec: ShapeSpec) -> Iterator[Embedding]:
    if spec.directed != g.directed:
        return
    edges = shape_edges(spec)
    # edges whose later endpoint is i, checked when i is placed
    due = [[] for _ in range(spec.m)]
    for a, b in edges:
        due[max(a, b)].append((a, b))
    image: list[int] = []
    seen_keys = set()

    def adjacent(x: int, y: int) -> bool:
        return y in (g.out_neighbors(x) if g.directed else g.neighbors(x))

    def extend():
        i = len(image)
        if i == spec.m:
            key = _image_key(g, spec, image)
            if key not in seen_keys:
                seen_keys.add(key)
                yield Embedding(spec, tuple(image))
            return
        for v in range(g.n):
            if v in image:
                continue
            image.append(v)
            if all(adjacent(image[a], image[b]) for a, b in due[i]):
                yield from extend()
            image.pop()

    yield from extend()


def enumerate_embeddings(g, spec: ShapeSpec, limit: Optional[int] = None) -> list[Embedding]:
    """Distinct embedded copies of ``spec`` (one map per image subgraph)."""
    out = []
    for emb in _iter_images(g, spec):
        if limit is not None and len(out) >= limit:
            break
        out.append(emb)
    return out


def exists_nonseparating_bruteforce(g, spec: Union[ShapeSpec, Sequence[ShapeSpec]],
                                    k: int) -> Optional[Embedding]:
    """First embedding (of ``spec`` or any member of a family) whose removal
    leaves a k-connected remainder."""
    family = [spec] if isinstance(spec, ShapeSpec) else list(spec)
    for member in family:
        for emb in _iter_images(g, member):
            if remainder_is_k_connected(g, emb.mapping, k):
                return emb
    return None
