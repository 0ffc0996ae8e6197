"""Random-graph experiments: generate, optimize, classify, repair, tabulate."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Sequence

import numpy as np

from .connector import connect_by_two_switches, percent_difference
from .generators import SF_MIN_DEGREE, erdos_renyi, er_probability, geometric, geometric_radius, scale_free
from .graph_core import SimpleGraph, degree_sequence, randic_index
from .graphic import has_connected_realization
from .randic_opt import minimize_randic

GRAPH_TYPES = ("er", "geo", "sf")
OUTCOMES = ("connected", "disconnected", "no_connected_realization")


@dataclass(frozen=True)
class ExperimentRecord:
    graph_type: str
    n: int
    seed: int
    R_original: int
    R_min: int | None
    R_after_heuristic: int | None
    outcome: str
    pct_orig_vs_min: float | None
    pct_heur_vs_min: float | None


def generate(graph_type: str, n: int, rng: np.random.Generator, param: float | None = None) -> SimpleGraph:
    """One random graph; ``param`` overrides p, r or the minimum degree."""
    if graph_type == "er":
        return erdos_renyi(n, er_probability(n) if param is None else param, rng)
    if graph_type == "geo":
        return geometric(n, geometric_radius(n) if param is None else param, rng)
    if graph_type == "sf":
        return scale_free(n, SF_MIN_DEGREE if param is None else int(param), rng)
    raise ValueError(f"unknown graph type {graph_type!r}; expected one of {GRAPH_TYPES}")


def run_trial(graph_type: str, n: int, seed: int, param: float | None = None) -> ExperimentRecord:
    rng = np.random.default_rng(seed)
    G = generate(graph_type, n, rng, param)
    d = degree_sequence(G)
    r_orig = randic_index(G, 1)
    if not has_connected_realization(d):
        return ExperimentRecord(graph_type, n, seed, r_orig, None, None, "no_connected_realization", None, None)
    best = minimize_randic(d)
    r_min = best.index_value
    pct_orig = percent_difference(r_orig, r_min)
    if best.connected:
        return ExperimentRecord(graph_type, n, seed, r_orig, r_min, None, "connected", pct_orig, None)
    fixed = connect_by_two_switches(best.realization, rng)
    return ExperimentRecord(
        graph_type, n, seed, r_orig, r_min, fixed.r_after, "disconnected", pct_orig, percent_difference(fixed.r_after, r_min)
    )


def _worker_count(trials: int) -> int:
    env = os.environ.get("RANDIC_THREADS")
    cap = int(env) if env else (os.cpu_count() or 1)
    return max(1, min(cap, trials))


def run_ensemble(
    graph_type: str, n: int, trials: int, seed: int, param: float | None = None, workers: int | None = None
) -> list[ExperimentRecord]:
    """Run ``trials`` independent trials; trial ``t`` uses seed ``seed + t``.

    Records come back in trial order whatever the worker count.
    """
    if graph_type not in GRAPH_TYPES:
        raise ValueError(f"unknown graph type {graph_type!r}")
    seeds = [seed + t for t in range(trials)]
    workers = _worker_count(trials) if workers is None else workers
    args = ([graph_type] * trials, [n] * trials, seeds, [param] * trials)
    if workers <= 1:
        return list(map(run_trial, *args))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_trial, *args, chunksize=max(1, trials // (4 * workers))))


def _quartiles(values: Sequence[float]) -> dict[str, float | int | None]:
    if not values:
        return {"count": 0, "mean": None, "min": None, "q1": None, "median": None, "q3": None, "max": None}
    arr = np.asarray(values, dtype=float)
    q1, med, q3 = np.percentile(arr, [25, 50, 75])
    return {
        "count": int(arr.size),
        "mean": float(arr.mean()),
        "min": float(arr.min()),
        "q1": float(q1),
        "median": float(med),
        "q3": float(q3),
        "max": float(arr.max()),
    }


def summarize(records: Sequence[ExperimentRecord]) -> dict:
    """Outcome counts plus box-plot statistics of both percent differences.

    The original-vs-minimum population pools every optimized trial; the
    heuristic population only has the disconnected ones.
    """
    if not records:
        raise ValueError("no records to summarize")
    counts = {k: 0 for k in OUTCOMES}
    for r in records:
        counts[r.outcome] += 1
    orig = [r.pct_orig_vs_min for r in records if r.pct_orig_vs_min is not None]
    heur = [r.pct_heur_vs_min for r in records if r.pct_heur_vs_min is not None]
    out = {
        "trials": len(records),
        "counts": counts,
        "pct_orig_vs_min": _quartiles(orig),
        "pct_heur_vs_min": _quartiles(heur),
        "notes": [],
    }
    if not heur:
        out["notes"].append("no disconnected optima: heuristic distribution is empty")
    return out


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def records_csv(records: Sequence[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(ExperimentRecord)])
    for r in records:
        w.writerow([_cell(v) for v in asdict(r).values()])
    return buf.getvalue()


def read_records(path: str | Path) -> list[ExperimentRecord]:
    ints = {"n", "seed", "R_original", "R_min", "R_after_heuristic"}
    floats = {"pct_orig_vs_min", "pct_heur_vs_min"}
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            vals = {}
            for k, v in row.items():
                if v == "":
                    vals[k] = None
                elif k in ints:
                    vals[k] = int(v)
                elif k in floats:
                    vals[k] = float(v)
                else:
                    vals[k] = v
            out.append(ExperimentRecord(**vals))
    return out


def write_outputs(records: Sequence[ExperimentRecord], out_dir: str | Path) -> dict:
    """Write ``records.csv``, ``summary.csv`` and ``boxplot.csv`` into ``out_dir``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "records.csv").write_text(records_csv(records))
    summary = summarize(records)
    first = records[0]
    with open(out_dir / "summary.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["graph_type", "n", "trials", *OUTCOMES])
        w.writerow([first.graph_type, first.n, summary["trials"], *(summary["counts"][k] for k in OUTCOMES)])
    with open(out_dir / "boxplot.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        cols = ["count", "mean", "min", "q1", "median", "q3", "max"]
        w.writerow(["population", *cols])
        for pop in ("pct_orig_vs_min", "pct_heur_vs_min"):
            w.writerow([pop, *(_cell(summary[pop][c]) for c in cols)])
    return summary
