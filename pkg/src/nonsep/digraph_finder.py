"""Nonseparating oriented stars and double-stars in strongly connected digraphs.

Both finders run the same loop. Keep a candidate tree ``T``; let ``B`` be a
largest strong component of ``D - V(T)`` and ``P`` a shortest dipath that
leaves ``B`` and comes back. Each step builds a new tree avoiding ``B`` and
``P`` (or a rerouted ``P'``), so ``B`` together with that path ends up
inside a single strong component of the new remainder and the largest
component strictly grows. That caps the loop at ``n`` steps.

Which tree to build depends on the length ``t`` of ``P``; every branch
below names the case it implements in its trace label.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .connectivity import is_strongly_connected, strong_components
from .errors import ContradictionError, InputError, PreconditionError
from .graph import Digraph, format_edge_list, semi_degree
from .shapes import (
    Embedding,
    Kind,
    ShapeSpec,
    double_star_from_arc,
    embed_shape,
    format_shape,
    validate_embedding,
)

__all__ = [
    "ReentrantPath",
    "ImproveState",
    "reentrant_path",
    "start_state",
    "improve_star_step",
    "improve_double_star_step",
    "improve_oriented_star",
    "improve_oriented_double_star",
    "find_nonsep_oriented_star",
    "find_nonsep_oriented_double_star",
]


@dataclass(frozen=True)
class ReentrantPath:
    """Dipath p0 ... pt with both ends in a vertex set and interior outside it."""

    vertices: tuple

    @property
    def t(self) -> int:
        return len(self.vertices) - 1

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]


@dataclass(frozen=True)
class ImproveState:
    tree: Embedding
    order: tuple  # strong components of D - V(tree), sources first
    best: frozenset
    path: Optional[ReentrantPath]
    trace: tuple = field(default=())  # (case label, |best|) per iteration

    @property
    def done(self) -> bool:
        return len(self.order) == 1

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1


def reentrant_path(d: Digraph, H: Iterable[int]) -> ReentrantPath:
    """Shortest dipath leaving ``H`` and re-entering it (length >= 2).

    Breadth-first search from the arcs leaving ``H``; ties go to smaller
    vertex ids at every level.
    """
    H = frozenset(H)
    if not H or len(H) >= d.n or any(not 0 <= v < d.n for v in H):
        raise InputError("H must be a nonempty proper subset of the vertices")
    if not is_strongly_connected(d):
        raise InputError("reentrant paths need a strongly connected digraph")
    parent: dict[int, int] = {}
    frontier = []
    for p0 in sorted(H):
        for p1 in sorted(d.out_neighbors(p0)):
            if p1 not in H and p1 not in parent:
                parent[p1] = p0
                frontier.append(p1)
    while frontier:
        frontier.sort()
        for x in frontier:
            back = d.out_neighbors(x) & H
            if back:
                walk = [min(back), x]
                while walk[-1] not in H:
                    walk.append(parent[walk[-1]])
                return ReentrantPath(tuple(reversed(walk)))
        nxt = []
        for x in frontier:
            for y in sorted(d.out_neighbors(x)):
                if y not in H and y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    raise InputError("no path returns to H; digraph is not strongly connected")


# ---------------------------------------------------------------------------
# state bookkeeping

def _witness(d: Digraph, state: Optional[ImproveState], label: str, **extra) -> dict:
    out = {"instance": format_edge_list(d), "case": label}
    if state is not None:
        out.update(
            tree=state.tree.to_dict(),
            best=sorted(state.best),
            path=list(state.path.vertices) if state.path else None,
            trace=[list(x) for x in state.trace],
        )
    out.update(extra)
    return out


def _fail(d, state, label, message, **extra):
    raise ContradictionError(f"{label}: {message}", _witness(d, state, label, **extra))


def start_state(d: Digraph, tree: Embedding, trace: tuple = ()) -> ImproveState:
    """State for candidate ``tree``: components, largest one, reentrant path."""
    order = strong_components(d, exclude=tree.vertices)
    best = min(order, key=lambda c: (-len(c), min(c)))
    path = None if len(order) == 1 else reentrant_path(d, best)
    if not trace:
        trace = (("init", len(best)),)
    return ImproveState(tree, order, best, path, trace)


def _check_path(d, state, label, B, vertices) -> ReentrantPath:
    ok = (
        len(vertices) >= 3
        and vertices[0] in B and vertices[-1] in B
        and not any(v in B for v in vertices[1:-1])
        and len(set(vertices[1:])) == len(vertices) - 1
        and all(d.has_arc(a, b) for a, b in zip(vertices, vertices[1:]))
    )
    if not ok:
        _fail(d, state, label, f"rerouted path {list(vertices)} is not a reentrant dipath")
    return ReentrantPath(tuple(vertices))


def _commit(d: Digraph, state: ImproveState, tree: Optional[Embedding],
            used: ReentrantPath, label: str) -> ImproveState:
    """Accept ``tree`` after checking disjointness and strict progress."""
    if tree is None:
        _fail(d, state, label, "no tree could be built where the case analysis guarantees one")
    problems = validate_embedding(d, tree)
    if problems:
        _fail(d, state, label, "built an invalid tree: " + "; ".join(problems))
    keep = state.best | set(used.vertices)
    if tree.vertices & keep:
        _fail(d, state, label, "new tree meets B or the reentrant path", new_tree=tree.to_dict())
    new = start_state(d, tree, state.trace + ((label, 0),))
    home = next(c for c in new.order if min(state.best) in c)
    if not keep <= home:
        _fail(d, state, label, "B and the path are split across strong components",
              new_tree=tree.to_dict())
    if len(new.best) <= len(state.best):
        _fail(d, state, label, "largest strong component did not grow", new_tree=tree.to_dict())
    return ImproveState(new.tree, new.order, new.best, new.path,
                        state.trace + ((label, len(new.best)),))


def _rooted_star(d, state, label, kind, m, root, blocked):
    if root in blocked:
        _fail(d, state, label, f"root {root} lies in B or on the path")
    return embed_shape(d, ShapeSpec(kind, m), forbidden=blocked, anchors={0: root})


# ---------------------------------------------------------------------------
# oriented stars

def improve_star_step(d: Digraph, state: ImproveState, m: int) -> ImproveState:
    """One improvement step for the out-star/in-star finder."""
    if state.done:
        raise InputError("remainder is already strongly connected")
    B, P = state.best, state.path
    blocked = B | set(P.vertices)
    out, inn = d.out_neighbors, d.in_neighbors

    if P.t == 2:
        # p1 lies on T; B is the source or some other component
        if B == state.order[0]:
            c = min(state.order[-1])
            label = "t=2 out-star in sink component"
            tree = _rooted_star(d, state, label, Kind.OUT_STAR, m, c, blocked)
        else:
            c = min(state.order[0])
            label = "t=2 in-star in source component"
            tree = _rooted_star(d, state, label, Kind.IN_STAR, m, c, blocked)
        return _commit(d, state, tree, P, label)

    p1 = P[1]
    if P.t == 3:
        free = out(p1) - blocked
        if not free:
            _fail(d, state, "t=3", "p1 has no out-neighbour off B and P")
        q = min(free)
        if not out(q) & B:
            label = "t=3 out-star at q"
            tree = _rooted_star(d, state, label, Kind.OUT_STAR, m, q, blocked)
        else:
            label = "t=3 in-star at q"
            if inn(q) & B:
                _fail(d, state, label, "q has arcs both to and from B; P was not shortest")
            tree = _rooted_star(d, state, label, Kind.IN_STAR, m, q, blocked)
        return _commit(d, state, tree, P, label)

    qs = sorted(out(p1) - blocked)[:m]
    if len(qs) < m:
        _fail(d, state, "t>=4", f"p1 has only {len(qs)} out-neighbours off B and P")
    for q in qs:
        if len(out(q) - blocked) >= m - 1:
            label = "t>=4 out-star at q_j"
            tree = _rooted_star(d, state, label, Kind.OUT_STAR, m, q, blocked)
            return _commit(d, state, tree, P, label)
    # Every q_j then sends arcs to p1, p2, p3; only q_j -> p2 (in-star) and
    # q_m -> p3 (rerouted path) are used below, and both are checked.
    label = "t>=4 in-star at p2, path rerouted through q_m"
    p0, p2, p3 = P[0], P[2], P[3]
    leaves, qm = qs[: m - 1], qs[m - 1]
    if any(not d.has_arc(q, p2) for q in leaves):
        _fail(d, state, label, "some q_j has no arc to p2")
    new_path = _check_path(d, state, label, B, (p0, p1, qm) + P.vertices[3:])
    tree = Embedding(ShapeSpec(Kind.IN_STAR, m), (p2, *leaves))
    return _commit(d, state, tree, new_path, label)


def _check_digraph(d: Digraph, m: int) -> None:
    if not isinstance(d, Digraph):
        raise InputError("expected a digraph")
    if m < 1:
        raise InputError("m must be positive")
    if d.n < m + 2:
        raise PreconditionError(f"need at least m+2 = {m + 2} vertices, have {d.n}")
    delta = semi_degree(d)
    if delta < m + 1:
        raise PreconditionError(f"minimum semi-degree {delta} < m+1 = {m + 1}")
    if not is_strongly_connected(d):
        raise PreconditionError("digraph is not strongly connected")


def _run(d, state, step, final_check):
    steps = 0
    while not state.done:
        if steps >= d.n:
            _fail(d, state, "loop", f"no success after {steps} iterations")
        state = step(state)
        steps += 1
    if not is_strongly_connected(d, exclude=state.tree.vertices):
        _fail(d, state, "final", "remainder is not strongly connected")
    final_check(state.tree)
    return state


def improve_oriented_star(d: Digraph, m: int, initial: Optional[Embedding] = None) -> ImproveState:
    """Run the star loop from ``initial`` (default: first out-star) to success."""
    _check_digraph(d, m)
    if initial is None:
        initial = embed_shape(d, ShapeSpec(Kind.OUT_STAR, m))
        if initial is None:
            raise ContradictionError("no out-star despite the degree bound",
                                     _witness(d, None, "init"))
    allowed = {ShapeSpec(Kind.OUT_STAR, m), ShapeSpec(Kind.IN_STAR, m)}

    def final_check(tree):
        if tree.spec not in allowed or validate_embedding(d, tree):
            raise ContradictionError("final tree has the wrong shape", _witness(d, None, "final"))

    final_check(initial)
    return _run(d, start_state(d, initial), lambda s: improve_star_step(d, s, m), final_check)


def find_nonsep_oriented_star(d: Digraph, m: int, initial: Optional[Embedding] = None) -> Embedding:
    """An out-star or in-star of order m whose removal keeps ``d`` strongly connected.

    Requires ``d`` strongly connected with minimum semi-degree at least m+1.
    """
    return improve_oriented_star(d, m, initial).tree


# ---------------------------------------------------------------------------
# oriented double-stars

def improve_double_star_step(d: Digraph, state: ImproveState, m: int, r: int, s: int) -> ImproveState:
    """One improvement step for the ODS/IDS/OIDS finder."""
    if state.done:
        raise InputError("remainder is already strongly connected")
    B, P = state.best, state.path
    blocked = B | set(P.vertices)
    out, inn = d.out_neighbors, d.in_neighbors

    def build(u, v, kind, forbidden):
        return double_star_from_arc(d, u, v, kind, m, r, s, forbidden)

    if P.t == 2:
        if B == state.order[0]:
            comp = state.order[-1]
            c = min(comp)
            label = "t=2 out-double-star on an arc of the sink component"
            kind = Kind.ODS
        else:
            comp = state.order[0]
            c = min(comp)
            label = "t=2 in-double-star on an arc of the source component"
            kind = Kind.IDS
        inside = out(c) & comp
        if not inside:
            _fail(d, state, label, f"component of {c} has no arc leaving {c}")
        return _commit(d, state, build(c, min(inside), kind, blocked), P, label)

    p1 = P[1]
    if P.t == 3:
        free = out(p1) - blocked
        if not free:
            _fail(d, state, "t=3", "p1 has no out-neighbour off B and P")
        q = min(free)
        if not out(q) & B:
            w = min(out(q) - blocked, default=None)
            if w is None:
                _fail(d, state, "t=3", "q has no out-neighbour off B and P")
            if not out(w) & B:
                label = "t=3 ODS on (q, w)"
                tree = build(q, w, Kind.ODS, blocked)
            else:
                label = "t=3 OIDS on (q, w)"
                if inn(w) & B:
                    _fail(d, state, label, "w has arcs both to and from B")
                tree = build(q, w, Kind.OIDS, blocked)
        else:
            if inn(q) & B:
                _fail(d, state, "t=3", "q has arcs both to and from B")
            w = min(inn(q) - blocked, default=None)
            if w is None:
                _fail(d, state, "t=3", "q has no in-neighbour off B and P")
            if not out(w) & B:
                label = "t=3 OIDS on (w', q)"
                tree = build(w, q, Kind.OIDS, blocked)
            else:
                label = "t=3 IDS on (w', q)"
                if inn(w) & B:
                    _fail(d, state, label, "w' has arcs both to and from B")
                tree = build(w, q, Kind.IDS, blocked)
        return _commit(d, state, tree, P, label)

    qs = sorted(out(p1) - blocked)[:m]
    if len(qs) < m:
        _fail(d, state, "t>=4", f"p1 has only {len(qs)} out-neighbours off B and P")

    def via_w(q):
        for w in sorted(out(q) - blocked):
            if out(w) & B:
                label = "t>=4 OIDS on (q_j, w), w has an arc into B"
                return _commit(d, state, build(q, w, Kind.OIDS, blocked), P, label)
            if inn(w) & B:
                label = "t>=4 ODS on (q_j, w), w has an arc from B"
                return _commit(d, state, build(q, w, Kind.ODS, blocked), P, label)
        return None

    done = via_w(qs[0])
    if done is not None:
        return done
    for q in qs:
        free = sorted(out(q) - blocked)
        if len(free) < m - 1:
            continue
        done = via_w(q)
        if done is not None:
            return done
        ws = free[: m - 1]
        for w in ws:
            if len(out(w) - blocked) >= m - 2:
                label = "t>=4 ODS on (q_j, w_k)"
                return _commit(d, state, build(q, w, Kind.ODS, blocked), P, label)
        label = "t>=4 IDS on (p2, p3), path rerouted through q_j, w_{m-1}"
        p2, p3 = P[2], P[3]
        keep = {p2, p3, *ws[: m - 2]}
        new_path = _check_path(d, state, label, B, (P[0], p1, q, ws[m - 2]) + P.vertices[4:])
        others = frozenset(range(d.n)) - keep
        return _commit(d, state, build(p2, p3, Kind.IDS, others), new_path, label)

    label = "t>=4 OIDS on (q_1, p2), path rerouted through q_m"
    q1, p2 = qs[0], P[2]
    qm = next((q for q in qs[1:] if not d.has_arc(q1, q)), None)
    if qm is None:
        _fail(d, state, label, "every q_j is an out-neighbour of q_1")
    new_path = _check_path(d, state, label, B, (P[0], p1, qm) + P.vertices[3:])
    tree = build(q1, p2, Kind.OIDS, B | set(new_path.vertices))
    return _commit(d, state, tree, new_path, label)


def _initial_double_star(d, m, r, s) -> Optional[Embedding]:
    for u, v in d.arcs():
        emb = double_star_from_arc(d, u, v, Kind.ODS, m, r, s)
        if emb is not None:
            return emb
    return None


def improve_oriented_double_star(d: Digraph, m: int, r: int, s: int,
                                 initial: Optional[Embedding] = None) -> ImproveState:
    ShapeSpec(Kind.ODS, m, r, s)  # validates 1 <= r, s <= m-3, r + s = m-2
    _check_digraph(d, m)
    if initial is None:
        initial = _initial_double_star(d, m, r, s)
        if initial is None:
            raise ContradictionError("no out-double-star despite the degree bound",
                                     _witness(d, None, "init"))
    allowed = {ShapeSpec(k, m, r, s) for k in (Kind.ODS, Kind.IDS, Kind.OIDS)}

    def final_check(tree):
        if tree.spec not in allowed or validate_embedding(d, tree):
            raise ContradictionError(f"final tree {format_shape(tree.spec)} has the wrong shape",
                                     _witness(d, None, "final"))

    final_check(initial)
    return _run(d, start_state(d, initial),
                lambda st: improve_double_star_step(d, st, m, r, s), final_check)


def find_nonsep_oriented_double_star(d: Digraph, m: int, r: int, s: int,
                                     initial: Optional[Embedding] = None) -> Embedding:
    """A member of {ODS, IDS, OIDS}(m; r, s) with strongly connected remainder."""
    return improve_oriented_double_star(d, m, r, s, initial).tree
