"""Command line interface.

Exit codes: 0 success, 1 precondition failure, 2 nothing found,
3 bad input or config, 4 internal contradiction.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import (
    ContradictionError,
    InputError,
    InvalidEmbeddingError,
    NotFoundError,
    PreconditionError,
)
from .generators import gen_random_digraph, gen_random_graph
from .graph import format_edge_list, read_edge_list
from .harness import SweepConfig, default_k, load_config, preconditions_hold, solve, summarize, sweep
from .oracle import exists_nonseparating_bruteforce, verify_nonseparating
from .shapes import Embedding, format_shape, parse_shape, accepted_family

EXIT_OK, EXIT_PRECONDITION, EXIT_NOT_FOUND, EXIT_INPUT, EXIT_CONTRADICTION = range(5)


def _load(args):
    try:
        return read_edge_list(args.input)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None


def _k(args, spec) -> int:
    k = default_k(spec) if args.k is None else args.k
    if k < 1:
        raise InputError("--k must be positive")
    return k


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_find(args) -> int:
    g = _load(args)
    spec = parse_shape(args.shape)
    k = _k(args, spec)
    if k != default_k(spec):
        raise InputError(f"the finders keep connectivity {default_k(spec)} for {spec}; "
                         f"use 'oracle' for other k")
    emb, trace = solve(g, spec)
    verified = verify_nonseparating(g, emb, k)
    out = {"shape": format_shape(emb.spec), "map": list(emb.mapping), "verified": verified}
    if trace is not None:
        out["trace"] = [list(t) for t in trace]
    _emit(out)
    if not verified:
        raise ContradictionError("returned tree failed verification", out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args)
    spec = parse_shape(args.shape)
    try:
        mapping = tuple(int(x) for x in args.map.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad vertex map {args.map!r}") from None
    k = _k(args, spec)
    ok = verify_nonseparating(g, Embedding(spec, mapping), k)
    _emit({"shape": format_shape(spec), "map": list(mapping), "k": k, "nonseparating": ok})
    return EXIT_OK if ok else EXIT_NOT_FOUND


def cmd_oracle(args) -> int:
    g = _load(args)
    spec = parse_shape(args.shape)
    k = _k(args, spec)
    family = [spec] if args.exact else accepted_family(spec)
    emb = exists_nonseparating_bruteforce(g, family, k)
    out = {"shapes": [format_shape(s) for s in family], "k": k,
           "preconditions": preconditions_hold(g, spec), "found": emb is not None}
    if emb is not None:
        out.update(shape=format_shape(emb.spec), map=list(emb.mapping))
    _emit(out)
    return EXIT_OK if emb is not None else EXIT_NOT_FOUND


def cmd_gen(args) -> int:
    if args.n is None or args.delta is None:
        raise InputError("gen needs --n and --delta")
    if args.directed:
        g = gen_random_digraph(args.n, args.delta, args.seed, args.clusters)
    else:
        g = gen_random_graph(args.n, args.delta, 2 if args.k is None else args.k, args.seed, args.clusters)
    text = format_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.config:
        cfg = load_config(args.config)
        if args.jobs is not None:
            cfg.jobs = args.jobs
    else:
        if not args.shape:
            raise InputError("sweep needs --config or at least one --shape")
        cfg = SweepConfig(
            family=args.family, shapes=args.shape, count=args.count,
            n_max=args.n if args.n is not None else 20, seed=args.seed,
            delta=args.delta, mode=args.mode, probe=args.probe, jobs=args.jobs or 1,
            names=args.name or [], witnesses=args.witnesses,
        )
    reports = sweep(cfg)
    lines = "".join(r.to_json() + "\n" for r in reports)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    summary = summarize(reports)
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if summary["contradiction"]:
        return EXIT_CONTRADICTION
    if summary["not-found"] and not cfg.probe and cfg.mode == "finder":
        return EXIT_NOT_FOUND
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nonsep", description="Find trees whose removal keeps a "
                                "graph 2-connected or a digraph strongly connected.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, shape=True):
        sp.add_argument("--input", "-i", required=True, help="edge-list file")
        if shape:
            sp.add_argument("--shape", "-s", required=True, help="shape, e.g. ps:2:6 or ods:5:1:2")
        sp.add_argument("--k", type=int, help="connectivity to keep (default 2, or 1 = strong)")

    sp = sub.add_parser("find", help="run the finder for a shape")
    common(sp)
    sp.set_defaults(func=cmd_find)

    sp = sub.add_parser("verify", help="check a given vertex map")
    common(sp)
    sp.add_argument("--map", "-m", required=True, help="host vertices in canonical shape order")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force existence check (small graphs)")
    common(sp)
    sp.add_argument("--exact", action="store_true", help="only the given shape, not its family")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--n", type=int)
    sp.add_argument("--delta", type=int, help="minimum (semi-)degree")
    sp.add_argument("--k", type=int, help="connectivity for graphs (default 2)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--clusters", type=int, default=1)
    sp.add_argument("--directed", action="store_true")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sweep", help="run many instances, JSON lines out")
    sp.add_argument("--config", "-c", help="JSON config file")
    sp.add_argument("--shape", "-s", action="append", help="shape (repeatable)")
    sp.add_argument("--family", default="random", choices=["random", "named", "enumerated"])
    sp.add_argument("--name", action="append", help="named graph for --family named (repeatable)")
    sp.add_argument("--count", type=int, default=10, help="instances per shape")
    sp.add_argument("--n", type=int, help="largest instance order (default 20)")
    sp.add_argument("--delta", type=int, help="override the minimum degree")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", default="finder", choices=["finder", "oracle"])
    sp.add_argument("--probe", action="store_true", help="one below the guaranteed degree")
    sp.add_argument("--jobs", "-j", type=int)
    sp.add_argument("--witnesses", default="witnesses", help="directory for contradiction dumps")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NotFoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except ContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        print(json.dumps(exc.witness, sort_keys=True, default=str), file=sys.stderr)
        return EXIT_CONTRADICTION
    except InvalidEmbeddingError as exc:
        print("invalid embedding: " + "; ".join(exc.problems), file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
