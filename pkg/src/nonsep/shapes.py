"""Tree shapes, their canonical construction, and embeddings into hosts.

Canonical numbering of every shape: centres first, then leaves, then path
vertices in order away from the star part. For path-stars the leaf that
carries the path is vertex 1; for path-double-stars it is the first leaf of
whichever centre the variant names.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import InputError, InvalidEmbeddingError, ParseError
from .graph import Digraph, Graph

__all__ = [
    "Kind",
    "ShapeSpec",
    "Embedding",
    "parse_shape",
    "format_shape",
    "shape_edges",
    "build_shape",
    "accepted_family",
    "validate_embedding",
    "check_embedding",
    "iter_embeddings",
    "embed_shape",
    "double_star_from_arc",
]


class Kind(str, Enum):
    STAR = "star"
    DOUBLE_STAR = "dstar"
    PATH = "path"
    PATH_STAR = "ps"
    PDS1 = "pds1"
    PDS2 = "pds2"
    OUT_STAR = "os"
    IN_STAR = "is"
    ODS = "ods"
    IDS = "ids"
    OIDS = "oids"


DIRECTED_KINDS = frozenset({Kind.OUT_STAR, Kind.IN_STAR, Kind.ODS, Kind.IDS, Kind.OIDS})
ORIENTED_DOUBLE_STARS = (Kind.ODS, Kind.IDS, Kind.OIDS)


@dataclass(frozen=True)
class ShapeSpec:
    """A shape of order ``m``.

    Meaning of ``r`` and ``s`` by kind:

    * ``dstar``, ``ods``/``ids``/``oids``: leaf counts of the first and
      second centre (the centre arc runs first -> second), ``r + s = m - 2``.
    * ``ps``: the attached path has ``r`` vertices beyond the star leaf.
    * ``pds1``/``pds2``: ``r`` as for ``ps``; ``s`` is the leaf count of the
      maximum-degree centre of the double-star part. Normalised on
      construction so ``s`` is the larger split, and ``pds2`` with a
      balanced double-star becomes ``pds1`` (the two are isomorphic then).
    """

    kind: Kind
    m: int
    r: int = 0
    s: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        k, m, r, s = self.kind, self.m, self.r, self.s
        if m < 1:
            raise InputError(f"shape order must be positive, got {m}")
        if k in (Kind.STAR, Kind.PATH, Kind.OUT_STAR, Kind.IN_STAR):
            if r or s:
                raise InputError(f"{k.value} takes no r/s parameters")
        elif k in (Kind.DOUBLE_STAR,) + ORIENTED_DOUBLE_STARS:
            if m < 4 or not (1 <= r <= m - 3 and 1 <= s <= m - 3) or r + s != m - 2:
                raise InputError(f"{k.value}({m};{r},{s}) needs 1 <= r,s <= m-3 and r+s = m-2")
        elif k is Kind.PATH_STAR:
            if not 1 <= r <= m - 3 or s:
                raise InputError(f"ps(r={r}, m={m}) needs 1 <= r <= m-3")
        else:
            if not 1 <= r <= m - 4:
                raise InputError(f"{k.value}(r={r}, m={m}) needs 1 <= r <= m-4")
            other = m - r - 2 - s
            if s < 1 or other < 1:
                raise InputError(f"{k.value} split {s} leaves no leaf for the other centre")
            if s < other:
                object.__setattr__(self, "s", other)
            if k is Kind.PDS2 and self.s == m - r - 2 - self.s:
                object.__setattr__(self, "kind", Kind.PDS1)

    @property
    def directed(self) -> bool:
        return self.kind in DIRECTED_KINDS

    @property
    def centers(self) -> tuple[int, ...]:
        if self.kind in (Kind.PATH,):
            return ()
        if self.kind in (Kind.DOUBLE_STAR, Kind.PDS1, Kind.PDS2) + ORIENTED_DOUBLE_STARS:
            return (0, 1)
        return (0,)

    @property
    def attachment(self) -> Optional[int]:
        """Shape vertex where the path is glued on (path shapes only)."""
        if self.kind is Kind.PATH_STAR:
            return 1
        if self.kind is Kind.PDS1:
            return 2
        if self.kind is Kind.PDS2:
            return 2 + self.s
        return None

    def __str__(self) -> str:
        return format_shape(self)


def star(m: int) -> ShapeSpec:
    return ShapeSpec(Kind.STAR, m)


def double_star(m: int, a: int) -> ShapeSpec:
    return ShapeSpec(Kind.DOUBLE_STAR, m, a, m - 2 - a)


def path_star(r: int, m: int) -> ShapeSpec:
    return ShapeSpec(Kind.PATH_STAR, m, r)


def path_double_star(variant: int, r: int, m: int, a: Optional[int] = None) -> ShapeSpec:
    if a is None:
        a = -(-(m - r - 2) // 2)
    return ShapeSpec(Kind.PDS1 if variant == 1 else Kind.PDS2, m, r, a)


# ---------------------------------------------------------------------------
# text grammar

_ARITY = {
    "star": 1, "path": 1, "os": 1, "is": 1, "dstar": 2, "ps": 2,
    "pds1": (2, 3), "pds2": (2, 3), "ods": 3, "ids": 3, "oids": 3,
}


def parse_shape(text: str) -> ShapeSpec:
    """Parse ``star:m``, ``dstar:m:a``, ``ps:r:m``, ``pds1:r:m[:a]``, ``os:m``,
    ``ods:m:r:s`` and friends."""
    parts = text.strip().lower().split(":")
    name, args = parts[0], parts[1:]
    if name not in _ARITY:
        raise ParseError(f"unknown shape {name!r}")
    arity = _ARITY[name]
    allowed = arity if isinstance(arity, tuple) else (arity,)
    if len(args) not in allowed:
        raise ParseError(f"{name} takes {' or '.join(map(str, allowed))} integer parameters")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ParseError(f"bad integer in shape {text!r}") from None
    try:
        if name in ("star", "path", "os", "is"):
            return ShapeSpec(Kind(name), nums[0])
        if name == "dstar":
            return double_star(nums[0], nums[1])
        if name == "ps":
            return path_star(nums[0], nums[1])
        if name in ("pds1", "pds2"):
            return path_double_star(int(name[-1]), *nums)
        m, r, s = nums
        return ShapeSpec(Kind(name), m, r, s)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def format_shape(spec: ShapeSpec) -> str:
    k = spec.kind
    if k in (Kind.STAR, Kind.PATH, Kind.OUT_STAR, Kind.IN_STAR):
        return f"{k.value}:{spec.m}"
    if k is Kind.DOUBLE_STAR:
        return f"dstar:{spec.m}:{spec.r}"
    if k is Kind.PATH_STAR:
        return f"ps:{spec.r}:{spec.m}"
    if k in (Kind.PDS1, Kind.PDS2):
        return f"{k.value}:{spec.r}:{spec.m}:{spec.s}"
    return f"{k.value}:{spec.m}:{spec.r}:{spec.s}"


# ---------------------------------------------------------------------------
# construction

def shape_edges(spec: ShapeSpec) -> list[tuple[int, int]]:
    """Edges (or arcs, tail first) of the canonical shape, parent first for edges."""
    k, m, r, s = spec.kind, spec.m, spec.r, spec.s
    if k in (Kind.STAR, Kind.OUT_STAR):
        return [(0, i) for i in range(1, m)]
    if k is Kind.IN_STAR:
        return [(i, 0) for i in range(1, m)]
    if k is Kind.PATH:
        return [(i, i + 1) for i in range(m - 1)]
    if k in (Kind.DOUBLE_STAR, Kind.ODS):
        return [(0, 1)] + [(0, i) for i in range(2, r + 2)] + [(1, i) for i in range(r + 2, m)]
    if k is Kind.IDS:
        return [(0, 1)] + [(i, 0) for i in range(2, r + 2)] + [(i, 1) for i in range(r + 2, m)]
    if k is Kind.OIDS:
        return [(0, 1)] + [(0, i) for i in range(2, r + 2)] + [(i, 1) for i in range(r + 2, m)]
    base = m - r
    if k is Kind.PATH_STAR:
        edges = [(0, i) for i in range(1, base)]
    else:
        edges = [(0, 1)] + [(0, i) for i in range(2, s + 2)] + [(1, i) for i in range(s + 2, base)]
    prev = spec.attachment
    for x in range(base, m):
        edges.append((prev, x))
        prev = x
    return edges


def build_shape(spec: ShapeSpec):
    edges = shape_edges(spec)
    if spec.directed:
        return Digraph.from_arcs(spec.m, edges)
    return Graph.from_edges(spec.m, edges)


def accepted_family(spec: ShapeSpec) -> list[ShapeSpec]:
    """Shapes a finder for ``spec`` may legitimately return (the orientation
    or path-placement variants that count as success)."""
    k, m, r, s = spec.kind, spec.m, spec.r, spec.s
    if k in (Kind.OUT_STAR, Kind.IN_STAR):
        return [ShapeSpec(Kind.OUT_STAR, m), ShapeSpec(Kind.IN_STAR, m)]
    if k in ORIENTED_DOUBLE_STARS:
        return [ShapeSpec(x, m, r, s) for x in ORIENTED_DOUBLE_STARS]
    if k in (Kind.PDS1, Kind.PDS2):
        fam = [ShapeSpec(Kind.PDS1, m, r, s), ShapeSpec(Kind.PDS2, m, r, s)]
        return fam if fam[0] != fam[1] else fam[:1]
    return [spec]


# ---------------------------------------------------------------------------
# embeddings

@dataclass(frozen=True)
class Embedding:
    """``mapping[i]`` is the host vertex carrying canonical shape vertex ``i``."""

    spec: ShapeSpec
    mapping: tuple

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.mapping)

    @property
    def centers(self) -> tuple[int, ...]:
        return tuple(self.mapping[i] for i in self.spec.centers)

    @property
    def center_arc(self) -> Optional[tuple[int, int]]:
        if self.spec.kind in ORIENTED_DOUBLE_STARS:
            return self.mapping[0], self.mapping[1]
        return None

    @property
    def attachment(self) -> Optional[int]:
        a = self.spec.attachment
        return None if a is None else self.mapping[a]

    def image_edges(self) -> list[tuple[int, int]]:
        return [(self.mapping[a], self.mapping[b]) for a, b in shape_edges(self.spec)]

    def to_dict(self) -> dict:
        return {"shape": format_shape(self.spec), "map": list(self.mapping)}


def validate_embedding(host, emb: Embedding) -> list[str]:
    """Every way ``emb`` fails to be a subgraph embedding; empty if valid."""
    problems = []
    spec = emb.spec
    if spec.directed != host.directed:
        problems.append(f"{'directed' if spec.directed else 'undirected'} shape in "
                        f"{'directed' if host.directed else 'undirected'} host")
        return problems
    if len(emb.mapping) != spec.m:
        problems.append(f"map has {len(emb.mapping)} entries, shape order is {spec.m}")
        return problems
    for i, v in enumerate(emb.mapping):
        if not isinstance(v, int) or not 0 <= v < host.n:
            problems.append(f"shape vertex {i} -> {v} is not a host vertex")
    if problems:
        return problems
    if len(set(emb.mapping)) != spec.m:
        problems.append("map is not injective")
    for a, b in shape_edges(spec):
        x, y = emb.mapping[a], emb.mapping[b]
        ok = host.has_arc(x, y) if host.directed else host.has_edge(x, y)
        if not ok:
            kind = "arc" if host.directed else "edge"
            problems.append(f"shape {kind} {a}->{b} maps to missing {kind} ({x}, {y})")
    return problems


def check_embedding(host, emb: Embedding) -> None:
    problems = validate_embedding(host, emb)
    if problems:
        raise InvalidEmbeddingError(problems)


def _plan(spec: ShapeSpec):
    """Per shape vertex: (parent, parent_is_tail, twin) for backtracking.

    ``twin`` is an earlier plain leaf with the same parent and orientation;
    its image must be smaller, which turns leaf permutations into subsets.
    """
    edges = shape_edges(spec)
    degree = [0] * spec.m
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    parent = {}
    for a, b in edges:
        if b not in parent and b != 0 and (a == 0 or a in parent):
            parent[b] = (a, True)
        elif a not in parent and a != 0:
            parent[a] = (b, False)
    plan = [None]
    last_leaf: dict = {}
    for i in range(1, spec.m):
        p, tail = parent[i]
        twin = None
        if degree[i] == 1 and p in spec.centers:
            twin = last_leaf.get((p, tail))
            last_leaf[(p, tail)] = i
        plan.append((p, tail, twin))
    return plan


def iter_embeddings(host, spec: ShapeSpec, forbidden: Iterable[int] = (),
                    anchors: Optional[Mapping[int, int]] = None,
                    root_order: Optional[Sequence[int]] = None) -> Iterator[Embedding]:
    """All embeddings of ``spec`` avoiding ``forbidden``, leaves as subsets.

    Candidates are tried in increasing host order (``root_order`` overrides
    the order for shape vertex 0). ``anchors`` pins shape vertices.
    """
    if spec.directed != host.directed:
        raise InputError("shape and host must both be directed or both undirected")
    forbidden = frozenset(forbidden)
    anchors = dict(anchors or {})
    for i, v in anchors.items():
        if not 0 <= i < spec.m or not 0 <= v < host.n:
            raise InputError(f"anchor {i} -> {v} out of range")
        if v in forbidden:
            raise InputError(f"anchor {i} -> {v} conflicts with the forbidden set")
    if len(set(anchors.values())) != len(anchors):
        raise InputError("anchors are not injective")
    plan = _plan(spec)
    image = [-1] * spec.m
    used: set[int] = set()

    def candidates(i: int):
        if i == 0:
            pool = root_order if root_order is not None else range(host.n)
        else:
            p, tail, twin = plan[i]
            x = image[p]
            if not host.directed:
                pool = host.neighbors(x)
            else:
                pool = host.out_neighbors(x) if tail else host.in_neighbors(x)
            floor = image[twin] if twin is not None else -1
            pool = sorted(v for v in pool if v > floor)
        if i in anchors:
            return [anchors[i]] if anchors[i] in pool else []
        return [v for v in pool if v not in forbidden]

    def extend(i: int):
        if i == spec.m:
            yield Embedding(spec, tuple(image))
            return
        for v in candidates(i):
            if v in used:
                continue
            image[i] = v
            used.add(v)
            yield from extend(i + 1)
            used.discard(v)
        image[i] = -1

    yield from extend(0)


def embed_shape(host, spec: ShapeSpec, forbidden: Iterable[int] = (),
                anchors: Optional[Mapping[int, int]] = None) -> Optional[Embedding]:
    """First embedding in lexicographic candidate order, or None."""
    return next(iter_embeddings(host, spec, forbidden, anchors), None)


def double_star_from_arc(d: Digraph, u: int, v: int, kind, m: int, r: int, s: int,
                         forbidden: Iterable[int] = ()) -> Optional[Embedding]:
    """Oriented double-star with centre arc (u, v), ``r`` leaves at u, ``s`` at v.

    Leaves come from the out- or in-neighbourhoods of u and v (by ``kind``),
    minus ``forbidden``. Exclusive neighbours are used first and the shared
    pool is split afterwards, which succeeds exactly when
    ``|A| >= r``, ``|B| >= s`` and ``|A u B| >= r + s``.
    """
    kind = Kind(kind)
    if kind not in ORIENTED_DOUBLE_STARS:
        raise InputError(f"{kind.value} is not an oriented double-star")
    spec = ShapeSpec(kind, m, r, s)
    if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_arc(u, v):
        raise InputError(f"({u}, {v}) is not an arc")
    forbidden = frozenset(forbidden)
    if u in forbidden or v in forbidden:
        raise InputError("centre arc meets the forbidden set")
    pool_u = d.out_neighbors(u) if kind in (Kind.ODS, Kind.OIDS) else d.in_neighbors(u)
    pool_v = d.out_neighbors(v) if kind is Kind.ODS else d.in_neighbors(v)
    blocked = forbidden | {u, v}
    a = pool_u - blocked
    b = pool_v - blocked
    if len(a) < r or len(b) < s or len(a | b) < r + s:
        return None
    shared = sorted(a & b)
    leaves_u = sorted(a - b)[:r]
    leaves_v = sorted(b - a)[:s]
    need_u = r - len(leaves_u)
    leaves_u += shared[:need_u]
    leaves_v += shared[need_u:need_u + s - len(leaves_v)]
    emb = Embedding(spec, (u, v, *sorted(leaves_u), *sorted(leaves_v)))
    if validate_embedding(d, emb) or emb.vertices & forbidden:
        return None
    return emb
