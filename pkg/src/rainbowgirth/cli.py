"""Command line interface.

    rainbowgirth gen --family gadget --n 12 --out g12.txt
    rainbowgirth exact g12.txt
    rainbowgirth find inst.txt --algo sampled --seed 1
    rainbowgirth bounds --alpha 0.6
    rainbowgirth experiment scaling --family gadget --n 8 12 16 20
    rainbowgirth experiment empirics --family mixed --alpha 0.6 --n 5000 --trials 200
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys

from . import bounds, finders
from .core import MATCHING2, CycleResult, parse_instance, serialize_instance
from .generators import (
    InstanceSpec,
    gen_half_matchings_gadget,
    gen_rainbow_ncycle,
    gen_random_mixed,
    matchings_for_gamma,
)
from .harness import (
    ALGOS,
    EMPIRICS_COLUMNS,
    FAMILIES,
    SCALING_COLUMNS,
    ExperimentSpec,
    run_lemma_empirics,
    run_scaling,
    to_csv,
)
from .oracle import rainbow_girth_exact

FIND_ALGOS = tuple(a for a in ALGOS if a != "exact")


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_instance(path: str):
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path) as fh:
        return parse_instance(fh.read())


def _format_cycle(cyc: CycleResult | None, fmt: str, extra: dict | None = None) -> str:
    extra = extra or {}
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["length", "rainbow", "vertices", "colors", *extra])
        if cyc is None:
            w.writerow(["", "", "", "", *extra.values()])
        else:
            w.writerow([
                cyc.length, str(cyc.rainbow).lower(),
                " ".join(map(str, cyc.vertices)), " ".join(map(str, cyc.colors)),
                *extra.values(),
            ])
        return buf.getvalue()
    if cyc is None:
        lines = ["length inf", "rainbow none"]
    else:
        lines = [
            f"length {cyc.length}",
            f"rainbow {str(cyc.rainbow).lower()}",
            "vertices " + " ".join(map(str, cyc.vertices)),
            "colors " + " ".join(map(str, cyc.colors)),
        ]
    lines += [f"{k} {v}" for k, v in extra.items()]
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> None:
    fam = args.family
    if fam == "gadget":
        g = gen_half_matchings_gadget(args.n)
    elif fam == "ncycle":
        g = gen_rainbow_ncycle(args.n)
    else:
        m, t, s = args.matchings, args.triangles, args.singles
        if args.alpha is not None:
            m = int(round(args.alpha * args.n))
            s = args.n - m
        elif fam == "matchings-only" and not m:
            m = matchings_for_gamma(args.n, args.gamma)
        g = gen_random_mixed(InstanceSpec(args.n, m, t, s, args.seed))
    _write(serialize_instance(g), args.out)


def cmd_exact(args) -> None:
    g = _read_instance(args.instance)
    _write(_format_cycle(rainbow_girth_exact(g, args.cutoff), args.format), args.out)


def cmd_find(args) -> None:
    g = _read_instance(args.instance)
    extra: dict = {}
    if args.algo in ("sampled", "simplified"):
        alpha = args.params_from_alpha
        if alpha is None:
            alpha = len(g.classes_of_kind(MATCHING2)) / g.n
        params = bounds.feasible_params(alpha)
        if params is None:
            raise ValueError(f"no feasible parameters for alpha={alpha}")
        fn = finders.find_matching_edge_sampled if args.algo == "sampled" else finders.find_simplified
        cyc, trials = fn(g, params, args.seed, args.retries)
        extra = {"retries": len(trials), "bound": trials[-1].bound()}
    elif args.algo == "appendix":
        cyc, trials = finders.find_matchings_appendix(g, args.gamma, args.seed, args.retries)
        extra = {"retries": len(trials), "bound": trials[-1].bound()}
    elif args.algo == "triangle":
        cyc = finders.find_triangle_edge(g, args.seed)
    else:
        cyc = finders.find_mixed(g, args.seed, max_retries=args.retries)
        extra = {"branch": finders.dispatch_branch(g)}
    _write(_format_cycle(cyc, args.format, extra), args.out)


def _kv(d: dict) -> str:
    return "".join(f"{k}={v!r}\n" if isinstance(v, float) else f"{k}={v}\n" for k, v in d.items())


def cmd_bounds(args) -> None:
    out = {}
    if args.alpha is not None:
        params = bounds.feasible_params(args.alpha)
        if params is None:
            raise ValueError(f"no feasible parameters for alpha={args.alpha}")
        out.update(params.as_dict())
    if args.gamma is not None:
        gp = bounds.GammaParams.of(args.gamma)
        out.update(gamma=gp.gamma, gamma_prime=gp.gamma_prime, admissible=str(gp.admissible).lower())
    if not out:
        out = {
            "gamma_threshold": bounds.gamma_threshold(),
            "alpha_upper_reference": bounds.alpha_upper_reference(),
        }
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(out.keys())
        w.writerow(out.values())
        _write(buf.getvalue(), args.out)
    else:
        _write(_kv(out), args.out)


def cmd_experiment(args) -> None:
    algo = args.algo
    if algo is None:
        algo = {"gadget": "exact", "ncycle": "exact", "mixed": "simplified",
                "matchings-only": "appendix"}[args.family]
    spec = ExperimentSpec(
        family=args.family, n_grid=args.n, trials=args.trials, algo=algo,
        master_seed=args.seed, alpha_mix=args.alpha, gamma=args.gamma, retries=args.retries,
    )
    if args.kind == "scaling":
        text = to_csv(run_scaling(spec), SCALING_COLUMNS)
    else:
        text = to_csv(run_lemma_empirics(spec), EMPIRICS_COLUMNS)
    _write(text, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowgirth", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an instance file")
    p.add_argument("--family", choices=FAMILIES, default="mixed")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, help="matching fraction (rest singles) for random instances")
    p.add_argument("--gamma", type=float, default=0.93)
    p.add_argument("--matchings", type=int, default=0)
    p.add_argument("--triangles", type=int, default=0)
    p.add_argument("--singles", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact rainbow girth of an instance file")
    p.add_argument("instance", help="instance file, '-' for stdin")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("find", help="run a finder on an instance file")
    p.add_argument("instance", help="instance file, '-' for stdin")
    p.add_argument("--algo", choices=FIND_ALGOS, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=finders.DEFAULT_RETRIES)
    p.add_argument("--params-from-alpha", type=float, dest="params_from_alpha")
    p.add_argument("--gamma", type=float, default=0.93)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("bounds", help="parameter sets and thresholds")
    p.add_argument("--alpha", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("experiment", help="seeded experiments as CSV")
    p.add_argument("kind", choices=("scaling", "empirics"))
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--algo", choices=ALGOS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float)
    p.add_argument("--gamma", type=float, default=0.93)
    p.add_argument("--retries", type=int, default=finders.DEFAULT_RETRIES)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0
