"""Seeded experiments: scaling of found cycle lengths and lemma empirics, as CSV rows.

Per-trial seeds are ``derive_seed(master_seed, n, trial)``, so rows do not
depend on the order in which trials run.  Rows are always emitted in
(n, trial) order.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bounds import feasible_params
from .core import MATCHING2, SINGLE, TRIANGLE, ColoredGraph, build_colored_graph
from .finders import (
    DEFAULT_RETRIES,
    RetriesExhausted,
    SubsetSampler,
    TrialRecord,
    appendix_trial,
    dispatch_branch,
    find_matching_edge_sampled,
    find_matchings_appendix,
    find_mixed,
    find_simplified,
    find_triangle_edge,
    lemma_thresholds,
    sampled_trial,
    selection_stats,
    triangle_selection,
)
from .generators import (
    InstanceSpec,
    gen_half_matchings_gadget,
    gen_rainbow_ncycle,
    gen_random_mixed,
    matchings_for_gamma,
)
from .oracle import rainbow_girth_exact
from .seeds import derive_seed
from .sparse_cycle import bs_bound

log = logging.getLogger(__name__)

FAMILIES = ("gadget", "ncycle", "mixed", "matchings-only")
ALGOS = ("exact", "sampled", "simplified", "triangle", "appendix", "mixed")
EXACT_MAX_N = 24

SCALING_COLUMNS = (
    "family", "n", "trial", "seed", "algo", "length", "bound",
    "accepted", "retries", "sizeS", "X", "Y", "sizeZ",
)
EMPIRICS_COLUMNS = (
    "row", "family", "n", "trial", "seed",
    "sizeS", "S_bound", "S_ok",
    "X", "X_bound", "X_ok",
    "Y", "Y_bound", "Y_ok",
    "sizeZ", "Z_bound", "Z_ok",
)


@dataclass
class ExperimentSpec:
    """What to run.

    ``alpha_mix`` is the fraction of the leading kind for the ``mixed``
    family: matchings for the sampled/simplified/mixed algorithms (the rest
    singles, or triangles for ``mixed``), triangles for ``triangle`` (the
    rest singles).  ``gamma`` sets the matching count ``ceil(gamma n)`` of
    the ``matchings-only`` family.
    """

    family: str
    n_grid: Sequence[int]
    trials: int = 1
    algo: str = "exact"
    master_seed: int = 0
    alpha_mix: float | None = None
    gamma: float = 0.93
    retries: int = DEFAULT_RETRIES
    alpha0: float = 0.05

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.algo not in ALGOS:
            raise ValueError(f"unknown algo {self.algo!r}; choose from {ALGOS}")
        grid = list(self.n_grid)
        if not grid:
            raise ValueError("n grid is empty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError(f"n grid must be strictly ascending, got {grid}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


def build_instance(spec: ExperimentSpec, n: int, seed: int) -> ColoredGraph:
    if spec.family == "gadget":
        return gen_half_matchings_gadget(n)
    if spec.family == "ncycle":
        return gen_rainbow_ncycle(n)
    if spec.family == "matchings-only":
        return gen_random_mixed(InstanceSpec(n=n, matchings2=matchings_for_gamma(n, spec.gamma), seed=seed))
    alpha = 0.6 if spec.alpha_mix is None else spec.alpha_mix
    k = int(round(alpha * n))
    if spec.algo == "triangle":
        counts = dict(triangles=k, singles=n - k)
    elif spec.algo == "mixed":
        counts = dict(matchings2=k, triangles=n - k)
    else:
        counts = dict(matchings2=k, singles=n - k)
    return gen_random_mixed(InstanceSpec(n=n, seed=seed, **counts))


def _record_fields(rec: TrialRecord | None) -> dict:
    if rec is None:
        return {}
    out = {"sizeS": rec.size_s, "X": rec.x, "Y": rec.y, "sizeZ": rec.size_z}
    bound = rec.bound()
    if bound is not None:
        out["bound"] = bound
    return out


def _selection_fields(g: ColoredGraph) -> dict:
    sel = triangle_selection(g)
    span, k = selection_stats(sel)
    counts = g.kind_counts()
    out = {"sizeS": span, "X": 2 * counts[TRIANGLE], "Y": counts[SINGLE]}
    if span >= 4 and k >= 2:
        out["bound"] = bs_bound(span, k)
    return out


def run_one(spec: ExperimentSpec, g: ColoredGraph, seed: int) -> dict:
    """Run the configured algorithm on one instance; returns the measured CSV fields."""
    algo = spec.algo
    if algo == "exact":
        if g.n > EXACT_MAX_N:
            raise ValueError(f"exact oracle limited to n <= {EXACT_MAX_N} in experiments")
        cyc = rainbow_girth_exact(g)
        return {"length": cyc.length if cyc else None, "accepted": cyc is not None, "retries": 0}
    if algo in ("sampled", "simplified"):
        alpha = len(g.classes_of_kind(MATCHING2)) / g.n
        params = feasible_params(alpha)
        if params is None:
            raise ValueError(f"no feasible parameters at matching fraction {alpha}")
        fn = find_matching_edge_sampled if algo == "sampled" else find_simplified
        cyc, trials = fn(g, params, seed, spec.retries)
        return {"length": cyc.length, "accepted": True, "retries": len(trials), **_record_fields(trials[-1])}
    if algo == "appendix":
        cyc, trials = find_matchings_appendix(g, spec.gamma, seed, spec.retries)
        return {"length": cyc.length, "accepted": True, "retries": len(trials), **_record_fields(trials[-1])}
    if algo == "triangle":
        cyc = find_triangle_edge(g, seed)
        return {"length": cyc.length, "accepted": True, "retries": 0, **_selection_fields(g)}
    if algo == "mixed":
        trials: list[TrialRecord] = []
        cyc = find_mixed(g, seed, spec.alpha0, spec.retries, trials=trials)
        row = {"length": cyc.length, "accepted": True, "retries": len(trials)}
        if dispatch_branch(g, spec.alpha0) == "triangle":
            demoted = [cls.edges[:1] if cls.kind == MATCHING2 else cls.edges for cls in g.classes]
            row.update(_selection_fields(build_colored_graph(g.n, demoted)))
        elif trials:
            row.update(_record_fields(trials[-1]))
        return row
    raise ValueError(f"unknown algo {algo!r}")


def run_scaling(spec: ExperimentSpec) -> list[dict]:
    """One row per (n, trial) with the found cycle length and its certified bound.

    Errors inside a trial are logged and recorded as ``accepted=False`` with
    an empty length; they never abort the experiment.
    """
    spec.validate()
    rows = []
    for n in spec.n_grid:
        for trial in range(spec.trials):
            seed = derive_seed(spec.master_seed, n, trial)
            row = {"family": spec.family, "n": n, "trial": trial, "seed": seed, "algo": spec.algo,
                   "accepted": False}
            try:
                g = build_instance(spec, n, seed)
                row.update(run_one(spec, g, seed))
            except RetriesExhausted as exc:
                row["retries"] = len(exc.trials)
                log.warning("n=%d trial=%d: %s", n, trial, exc)
            except (ValueError, RuntimeError) as exc:
                log.warning("n=%d trial=%d: %s", n, trial, exc)
            rows.append(row)
    return rows


def _mean(values: Iterable[float]) -> float | None:
    vs = [v for v in values if v is not None]
    return sum(vs) / len(vs) if vs else None


def run_lemma_empirics(spec: ExperimentSpec) -> list[dict]:
    """Per-trial lemma measurements plus one summary row per n.

    For the ``mixed`` family (matchings + singles at ``alpha_mix``) one
    instance is drawn per n and ``trials`` heavy-vertex subsets S are
    sampled from it; each row records |S|, X, Y against np + n^(2/3),
    (1-eps)|F_M|(2p^2-p^4) and (1-eps)|F_E|p^2.  For ``matchings-only``
    each trial picks one edge per matching and records |Z| against
    n 2^(-4 gamma).  Summary rows hold means of the measured values and
    satisfaction fractions in the ``*_ok`` columns.
    """
    spec.validate()
    if spec.family not in ("mixed", "matchings-only"):
        raise ValueError("lemma empirics need the mixed or matchings-only family")
    rows: list[dict] = []
    for n in spec.n_grid:
        inst_seed = derive_seed(spec.master_seed, n)
        per_n = []
        if spec.family == "mixed":
            alpha = 0.6 if spec.alpha_mix is None else spec.alpha_mix
            k = int(round(alpha * n))
            g = gen_random_mixed(InstanceSpec(n=n, matchings2=k, singles=n - k, seed=inst_seed))
            params = feasible_params(alpha)
            if params is None:
                raise ValueError(f"no feasible parameters at alpha={alpha}")
            sampler = SubsetSampler(g)
            th = lemma_thresholds(params, n, sampler.num_matchings, sampler.num_singles)
            for trial in range(spec.trials):
                seed = derive_seed(spec.master_seed, n, trial)
                rec, _, _ = sampled_trial(sampler, params, seed)
                per_n.append({
                    "sizeS": rec.size_s, "S_bound": th["s_max"], "S_ok": int(rec.size_s <= th["s_max"]),
                    "X": rec.x, "X_bound": th["x_min"], "X_ok": int(rec.x >= th["x_min"]),
                    "Y": rec.y, "Y_bound": th["y_min"], "Y_ok": int(rec.y >= th["y_min"]),
                    "seed": seed, "trial": trial,
                })
        else:
            g = gen_random_mixed(
                InstanceSpec(n=n, matchings2=matchings_for_gamma(n, spec.gamma), seed=inst_seed)
            )
            mat = np.array([c.edges for c in g.classes], dtype=np.int64).reshape(-1, 2, 2)
            z_min = n * 0.5 ** (4 * spec.gamma)
            for trial in range(spec.trials):
                seed = derive_seed(spec.master_seed, n, trial)
                rec, _ = appendix_trial(g, mat, spec.gamma, seed)
                per_n.append({
                    "sizeZ": rec.size_z, "Z_bound": z_min, "Z_ok": int(rec.size_z >= z_min),
                    "seed": seed, "trial": trial,
                })
        for r in per_n:
            rows.append({"row": "trial", "family": spec.family, "n": n, **r})
        summary = {"row": "summary", "family": spec.family, "n": n, "trial": len(per_n)}
        for col in EMPIRICS_COLUMNS[5:]:
            if any(col in r for r in per_n):
                summary[col] = _mean(r.get(col) for r in per_n)
        rows.append(summary)
    return rows


def summaries(rows: list[dict]) -> list[dict]:
    return [r for r in rows if r.get("row") == "summary"]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(rows: list[dict], columns: Sequence[str] = SCALING_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def row_within_bound(row: dict) -> bool | None:
    """Recompute ``length <= bound`` from a row's own sizeS, X, Y fields.

    None when the row carries no bound (exact rows, failed rows).
    """
    try:
        size_s, x, y, length = (float(row[k]) for k in ("sizeS", "X", "Y", "length"))
    except (KeyError, TypeError, ValueError):
        return None
    k = x + y - size_s
    if size_s < 4 or k < 2:
        return None
    return length <= bs_bound(size_s, k)

