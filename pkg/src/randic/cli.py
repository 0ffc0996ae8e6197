"""Command-line entry points ``randic`` and ``bmatch``."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import experiments, oracle, textio
from .bmatching import Infeasible, solve_bmatching
from .connector import CannotConnect, connect_by_two_switches
from .graph_core import degree_sequence, randic_index
from .randic_opt import (
    NotGraphicError,
    format_percent,
    maximize_randic,
    minimize_directed_randic,
    optimize_randic,
)

PQ_CHOICES = ("++", "+-", "-+", "--")


def _fmt_value(x) -> str:
    if isinstance(x, float) and not x.is_integer():
        return repr(x)
    return str(int(x))


def _cmd_opt(args) -> int:
    d = textio.parse_degree_sequence(textio.read_text(args.file))
    rng = np.random.default_rng(args.seed) if args.hh_random else None
    res = optimize_randic(d, args.command, args.alpha, hh_rng=rng)
    sys.stdout.write(_fmt_value(res.index_value) + "\n")
    if args.out == "matrix":
        sys.stdout.write(textio.format_matrix(res.realization))
    else:
        sys.stdout.write(textio.format_edgelist(res.realization))
    return 0


def _cmd_directed(args) -> int:
    pairs = textio.parse_pairs(textio.read_text(args.file))
    res = minimize_directed_randic(pairs, args.pq[0], args.pq[1], args.objective)
    sys.stdout.write(f"{res.index_value}\n")
    sys.stdout.write(textio.format_edgelist(res.realization))
    return 0


def _cmd_normalize(args) -> int:
    G = textio.parse_graph(textio.read_text(args.file))
    r = randic_index(G, 1)
    top = maximize_randic(degree_sequence(G)).index_value
    if top <= 0:
        raise ValueError("normalization needs a graph with at least one edge")
    ratio = r / top
    sys.stdout.write(f"{ratio:.6f}\n")
    sys.stdout.write(f"R={r} U_b={top} normalized={format_percent(ratio)}\n")
    return 0


def _cmd_connect(args) -> int:
    G = textio.parse_graph(textio.read_text(args.file))
    rep = connect_by_two_switches(G, np.random.default_rng(args.seed))
    sys.stdout.write(textio.format_edgelist(rep.graph))
    sys.stdout.write(rep.line() + "\n")
    return 0


def _type_param(args) -> float | None:
    given = [(k, v) for k, v in (("p", args.p), ("r", args.r), ("mindeg", args.mindeg)) if v is not None]
    if len(given) > 1:
        raise ValueError("give at most one of --p, --r, --mindeg")
    if not given:
        return None
    expected = {"er": "p", "geo": "r", "sf": "mindeg"}[args.type]
    if given[0][0] != expected:
        raise ValueError(f"--{given[0][0]} does not apply to {args.type}; use --{expected}")
    return given[0][1]


def _cmd_gen(args) -> int:
    G = experiments.generate(args.type, args.n, np.random.default_rng(args.seed), _type_param(args))
    text = textio.format_edgelist(G)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_experiment(args) -> int:
    records = experiments.run_ensemble(args.type, args.n, args.trials, args.seed, _type_param(args))
    summary = experiments.write_outputs(records, args.out)
    counts = summary["counts"]
    sys.stdout.write(" ".join(f"{k}={counts[k]}" for k in experiments.OUTCOMES) + "\n")
    for pop in ("pct_orig_vs_min", "pct_heur_vs_min"):
        s = summary[pop]
        mean = "NA" if s["mean"] is None else f"{s['mean']:.4f}"
        median = "NA" if s["median"] is None else f"{s['median']:.4f}"
        sys.stdout.write(f"{pop}: count={s['count']} mean={mean} median={median}\n")
    for note in summary["notes"]:
        sys.stdout.write(f"note: {note}\n")
    return 0


def _cmd_oracle(args) -> int:
    if not args.i_know_this_is_slow:
        sys.stderr.write("randic oracle enumerates every realization; pass --i-know-this-is-slow\n")
        return 2
    text = textio.read_text(args.file)
    if args.pq:
        pairs = textio.parse_pairs(text)
        value, G = oracle.brute_directed_optimum(pairs, args.pq[0], args.pq[1], args.objective)
        count = sum(1 for _ in oracle.enumerate_directed_realizations(pairs))
    else:
        d = textio.parse_degree_sequence(text)
        value, G = oracle.brute_optimum(d, args.objective, args.connected_only)
        count = sum(1 for _ in oracle.enumerate_realizations(d))
    sys.stdout.write(f"{value}\n")
    sys.stdout.write(textio.format_edgelist(G))
    sys.stdout.write(f"realizations={count}\n")
    return 0


def _add_type_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=float, help="edge probability (er)")
    p.add_argument("--r", type=float, help="connection radius (geo)")
    p.add_argument("--mindeg", type=int, help="minimum degree (sf)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="randic", description="Extremal Randić index realizations of degree sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("min", "max"):
        p = sub.add_parser(name, help=f"{name}imum-index realization of a degree sequence")
        p.add_argument("file", help="degree sequence, one line")
        p.add_argument("--alpha", type=float, default=1.0)
        p.add_argument("--out", choices=("edgelist", "matrix"), default="edgelist")
        p.add_argument("--hh-random", action="store_true", help="random-index Havel-Hakimi for the starting support")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=_cmd_opt)

    p = sub.add_parser("directed", help="optimal directed index for (out, in) degree pairs")
    p.add_argument("file", help="one 'out in' pair per line")
    p.add_argument("--pq", choices=PQ_CHOICES, required=True)
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.set_defaults(func=_cmd_directed)

    p = sub.add_parser("normalize", help="index divided by its maximum over the degree sequence")
    p.add_argument("file", help="edge list or adjacency matrix")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("connect", help="join components with degree-preserving two-switches")
    p.add_argument("file", help="edge list or adjacency matrix")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_connect)

    p = sub.add_parser("gen", help="random graph")
    p.add_argument("type", choices=experiments.GRAPH_TYPES)
    p.add_argument("--n", type=int, required=True)
    _add_type_params(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("experiment", help="ensemble run writing CSV tables")
    p.add_argument("--type", choices=experiments.GRAPH_TYPES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_type_params(p)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("oracle", help="exhaustive optimum for tiny inputs")
    p.add_argument("file", help="degree sequence, or pairs file with --pq")
    p.add_argument("--objective", choices=("min", "max"), default="min")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--pq", choices=PQ_CHOICES, help="treat the file as (out, in) pairs")
    p.add_argument("--i-know-this-is-slow", action="store_true")
    p.set_defaults(func=_cmd_oracle)
    return parser


def _run(func, args) -> int:
    try:
        return func(args)
    except (Infeasible, NotGraphicError, CannotConnect) as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _run(args.func, args)


def _cmd_bmatch(args) -> int:
    inst = textio.parse_instance(textio.read_text(args.file))
    M = solve_bmatching(inst, "max" if args.max else "min")
    sys.stdout.write(textio.format_matching(M))
    return 0


def bmatch_main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="bmatch", description="Optimal perfect b-matching.")
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--min", action="store_true")
    mode.add_argument("--max", action="store_true")
    parser.add_argument("file", help="instance: 'n m', b-vector, then 'i j w' lines")
    args = parser.parse_args(argv)
    return _run(_cmd_bmatch, args)


if __name__ == "__main__":
    sys.exit(main())
