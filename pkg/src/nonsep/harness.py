"""Sweeps: generate instances, run a finder or the brute-force oracle on each,
and report one JSON line per instance."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Optional

from .connectivity import is_k_connected, is_strongly_connected
from .digraph_finder import improve_oriented_double_star, improve_oriented_star
from .errors import ContradictionError, InputError, NotFoundError, ParseError, PreconditionError
from .generators import NAMED_FAMILY, gen_random_digraph, gen_random_graph, named_graph
from .graph import format_edge_list, min_degree, semi_degree
from .graph_finder import (
    find_nonsep_double_star_k2,
    find_nonsep_star_k2,
    find_path_double_star,
    find_path_star,
    find_rooted_nonsep_path,
)
from .oracle import exists_nonseparating_bruteforce, verify_nonseparating
from .shapes import Embedding, Kind, ShapeSpec, format_shape, parse_shape, accepted_family

__all__ = [
    "InstanceReport",
    "SweepConfig",
    "default_k",
    "guaranteed_degree",
    "preconditions_hold",
    "solve",
    "run_instance",
    "make_tasks",
    "sweep",
    "load_config",
    "summarize",
]

OUTCOMES = ("found", "precondition-failed", "not-found", "contradiction")


def default_k(spec: ShapeSpec) -> int:
    """Connectivity the finders keep: strong for digraphs, 2 for graphs."""
    return 1 if spec.directed else 2


def guaranteed_degree(spec: ShapeSpec) -> int:
    """Minimum (semi-)degree under which a nonseparating copy is guaranteed."""
    return spec.m + 1 if spec.directed else spec.m + 2


def preconditions_hold(g, spec: ShapeSpec) -> bool:
    """Hypotheses under which ``solve`` is guaranteed to succeed."""
    if spec.directed != g.directed or g.n == 0:
        return False
    if spec.directed:
        return g.n >= spec.m + 2 and semi_degree(g) >= spec.m + 1 and is_strongly_connected(g)
    k = 3 if spec.kind is Kind.PATH else 2
    return min_degree(g) >= spec.m + 2 and is_k_connected(g, k)


def solve(g, spec: ShapeSpec) -> tuple[Embedding, Optional[tuple]]:
    """Run the finder for ``spec`` on ``g``; returns the tree and, for the
    digraph loops, the improvement trace."""
    if spec.directed != g.directed:
        raise InputError(f"{spec} needs a {'directed' if spec.directed else 'undirected'} host")
    k = spec.kind
    if k in (Kind.OUT_STAR, Kind.IN_STAR):
        state = improve_oriented_star(g, spec.m)
        return state.tree, state.trace
    if k in (Kind.ODS, Kind.IDS, Kind.OIDS):
        state = improve_oriented_double_star(g, spec.m, spec.r, spec.s)
        return state.tree, state.trace
    if k is Kind.STAR:
        return find_nonsep_star_k2(g, spec.m), None
    if k is Kind.DOUBLE_STAR:
        return find_nonsep_double_star_k2(g, spec.m, spec.r), None
    if k is Kind.PATH:
        return find_rooted_nonsep_path(g, 0, spec.m), None
    if k is Kind.PATH_STAR:
        return find_path_star(g, spec.m, spec.r), None
    variant = 1 if k is Kind.PDS1 else 2
    return find_path_double_star(g, spec.m, spec.r, variant, spec.s), None


@dataclass
class InstanceReport:
    id: int
    family: str
    source: str  # generator call or graph name
    n: int
    shape: str
    mode: str
    preconditions: bool
    outcome: str
    iterations: int = 0
    trace: list = field(default_factory=list)
    tree: Optional[list] = None
    tree_shape: Optional[str] = None
    verified: Optional[bool] = None
    message: str = ""
    witness: Optional[str] = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome}")
        if self.outcome == "found" and self.verified is not True:
            raise ValueError("a found tree must be verified")

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return json.dumps(d, sort_keys=True)


@dataclass
class SweepConfig:
    family: str = "random"  # random | named | enumerated
    shapes: list = field(default_factory=list)
    count: int = 10  # instances per shape (random family)
    n_min: Optional[int] = None
    n_max: int = 20
    seed: int = 0
    clusters: list = field(default_factory=lambda: [1, 2, 3])
    delta: Optional[int] = None
    mode: str = "finder"  # finder | oracle
    probe: bool = False
    jobs: int = 1
    names: list = field(default_factory=list)
    witnesses: Optional[str] = "witnesses"

    def __post_init__(self):
        if self.family not in ("random", "named", "enumerated"):
            raise ParseError(f"unknown family {self.family!r}")
        if self.mode not in ("finder", "oracle"):
            raise ParseError(f"unknown mode {self.mode!r}")
        if self.count < 0 or self.jobs < 1 or self.n_max < 1:
            raise ParseError("count must be >= 0, jobs >= 1 and n_max >= 1")
        if not self.clusters or any(c < 1 for c in self.clusters):
            raise ParseError("clusters must be a nonempty list of positive integers")
        self.shapes = [s if isinstance(s, ShapeSpec) else parse_shape(s) for s in self.shapes]


def load_config(path) -> SweepConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("config must be a JSON object")
    known = {f.name for f in fields(SweepConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ParseError(f"unknown config keys: {sorted(unknown)}")
    try:
        return SweepConfig(**raw)
    except TypeError as exc:
        raise ParseError(str(exc)) from None


def make_tasks(cfg: SweepConfig) -> list[dict]:
    """Instance descriptions, fully determined by the config (and its seed)."""
    rng = random.Random(cfg.seed)
    tasks = []
    for spec in cfg.shapes:
        if cfg.family == "random":
            delta = cfg.delta if cfg.delta is not None else guaranteed_degree(spec) - (1 if cfg.probe else 0)
            lo = max(cfg.n_min if cfg.n_min is not None else spec.m + (2 if spec.directed else 3), delta + 1)
            for _ in range(cfg.count):
                if lo > cfg.n_max:
                    break
                tasks.append({
                    "family": "random",
                    "directed": spec.directed,
                    "n": rng.randint(lo, cfg.n_max),
                    "delta": delta,
                    "clusters": rng.choice(cfg.clusters),
                    "seed": rng.randrange(2 ** 31),
                    "shape": format_shape(spec),
                })
        else:
            names = cfg.names if cfg.family == "named" else NAMED_FAMILY
            for name in names:
                tasks.append({"family": cfg.family, "name": name, "shape": format_shape(spec)})
    for i, t in enumerate(tasks):
        # below the guaranteed degree the finders refuse, so probes use the oracle
        t.update(id=i, mode="oracle" if cfg.probe else cfg.mode, probe=cfg.probe,
                 witnesses=cfg.witnesses)
    return tasks


def _build(task: dict):
    if task["family"] == "random":
        if task["directed"]:
            g = gen_random_digraph(task["n"], task["delta"], task["seed"], task["clusters"])
            src = f"gen_random_digraph({task['n']}, {task['delta']}, seed={task['seed']}, clusters={task['clusters']})"
        else:
            g = gen_random_graph(task["n"], task["delta"], 2, task["seed"], task["clusters"])
            src = f"gen_random_graph({task['n']}, {task['delta']}, 2, seed={task['seed']}, clusters={task['clusters']})"
        return g, src
    return named_graph(task["name"]), task["name"]


def _dump_witness(task: dict, g, spec, message: str, witness: Optional[dict] = None) -> Optional[str]:
    if not task.get("witnesses"):
        return None
    out = Path(task["witnesses"])
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"instance_{task['id']:05d}.json"
    path.write_text(json.dumps({
        "shape": format_shape(spec),
        "graph": format_edge_list(g),
        "message": message,
        "witness": witness,
    }, indent=1, sort_keys=True, default=str))
    return str(path)


def run_instance(task: dict) -> InstanceReport:
    spec = parse_shape(task["shape"])
    g, src = _build(task)
    k = default_k(spec)
    base = dict(id=task["id"], family=task["family"], source=src, n=g.n,
                shape=task["shape"], mode=task["mode"])
    start = time.perf_counter()
    if spec.directed != g.directed:
        return InstanceReport(**base, preconditions=False, outcome="precondition-failed",
                              message="host and shape orientation differ")
    if task["mode"] == "oracle":
        emb = exists_nonseparating_bruteforce(g, accepted_family(spec), k)
        elapsed = time.perf_counter() - start
        pre = preconditions_hold(g, spec)
        if emb is None:
            dump = None
            if task.get("probe"):
                dump = _dump_witness(task, g, spec, "no nonseparating copy below the degree bound")
            return InstanceReport(**base, preconditions=pre, outcome="not-found", witness=dump,
                                  wall_time=elapsed)
        return InstanceReport(**base, preconditions=pre, outcome="found", tree=list(emb.mapping),
                              tree_shape=format_shape(emb.spec), verified=True, wall_time=elapsed)
    try:
        emb, trace = solve(g, spec)
    except PreconditionError as exc:
        return InstanceReport(**base, preconditions=False, outcome="precondition-failed",
                              message=str(exc), wall_time=time.perf_counter() - start)
    except NotFoundError as exc:
        return InstanceReport(**base, preconditions=True, outcome="not-found",
                              message=str(exc), wall_time=time.perf_counter() - start)
    except ContradictionError as exc:
        return InstanceReport(**base, preconditions=True, outcome="contradiction", message=str(exc),
                              witness=_dump_witness(task, g, spec, str(exc), exc.witness),
                              wall_time=time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    verified = verify_nonseparating(g, emb, k)
    trace = list(trace or ())
    report = dict(base, preconditions=True, tree=list(emb.mapping), tree_shape=format_shape(emb.spec),
                  iterations=max(len(trace) - 1, 0), trace=[list(x) for x in trace], wall_time=elapsed)
    if not verified:
        exc = ContradictionError("returned tree failed independent verification",
                                 {"tree": list(emb.mapping)})
        return InstanceReport(**report, outcome="contradiction", verified=False, message=str(exc),
                              witness=_dump_witness(task, g, spec, str(exc), exc.witness))
    return InstanceReport(**report, outcome="found", verified=True)


def sweep(cfg: SweepConfig) -> list[InstanceReport]:
    """Reports in instance order, whatever order the workers finish in."""
    tasks = make_tasks(cfg)
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(run_instance, tasks, chunksize=4))
    return [run_instance(t) for t in tasks]


def summarize(reports: list[InstanceReport]) -> dict:
    counts = {o: 0 for o in OUTCOMES}
    for r in reports:
        counts[r.outcome] += 1
    eligible = len(reports) - counts["precondition-failed"]
    return {
        "instances": len(reports),
        **counts,
        "success_rate": counts["found"] / eligible if eligible else None,
        "max_wall_time": max((r.wall_time for r in reports), default=0.0),
    }
