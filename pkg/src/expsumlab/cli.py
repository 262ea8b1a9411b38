"""Command-line entry point.

One subcommand per operation: sieve, supscan, uniformity, fixedalpha,
archdemo, distance, msd, graph, walks, primeproducts, mixing, fitmodel,
triple, chowla2, l3check, plus the composite `suite` that runs the
demonstration battery.  Options may come from flags or a JSON config file
(flags win).  Reports are JSON documents with a meta/payload split or CSV
bodies with a .meta.json sidecar; payloads are deterministic given the
config and seed.  Exit status is 0 only if every requested assertion holds.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys

from ._version import __version__
from .acceptance import run_battery
from .correlations import (
    CSV_HEADER_CHOWLA2,
    CSV_HEADER_TRIPLE,
    SequenceSpec,
    averaged_chowla2,
    l3_bound_check,
    triple_report,
)
from .errors import ParameterError
from .expsum import Interval
from .pretend import CSV_HEADER_DISTANCE, pretentious_distance
from .proofgraph import (
    CSV_HEADER_EDGES,
    EdgeRecord,
    PrimeRatioGraph,
    assign_frequencies,
    build_graph,
    complete_graph,
    count_prime_products,
    fit_frequency_model,
    mixing_count,
    msd_check,
    synthetic_assignment,
    walk_count,
)
from .reports import emit_csv, emit_json
from .sieve import sieve_range
from .specs import FunctionSpec
from .uniformity import (
    CSV_HEADER_UNIFORMITY,
    archimedean_demo,
    build_family,
    fixed_alpha_statistic,
    rational_candidates,
    uniformity_statistic,
)

SPEC_NAMES = (
    "liouville", "moebius", "one", "archimedean", "char", "random",
    "linear", "zero",
)


def _parse_spec(name, args):
    if name == "liouville":
        return FunctionSpec.liouville()
    if name == "moebius":
        return FunctionSpec.moebius()
    if name == "one":
        return FunctionSpec.one()
    if name == "zero":
        return FunctionSpec.custom_primes((), default=0.0)
    if name == "archimedean":
        if args.t is None:
            raise ParameterError("--spec archimedean requires --t")
        return FunctionSpec.archimedean(args.t)
    if name == "char":
        if args.modulus is None or args.index is None:
            raise ParameterError("--spec char requires --modulus and --index")
        return FunctionSpec.char_twist(args.modulus, args.index, args.t or 0.0)
    if name == "random":
        if args.spec_seed is None:
            raise ParameterError("--spec random requires --spec-seed")
        return FunctionSpec.random_pm1(args.spec_seed)
    if name == "linear":
        if args.beta is None:
            raise ParameterError("--spec linear requires --beta")
        return FunctionSpec.linear_phase(args.beta)
    raise ParameterError(f"unknown spec {name!r}; choose from {SPEC_NAMES}")


def _parse_seq(name, args):
    if name == "one":
        return SequenceSpec.one()
    if name == "mangoldt":
        return SequenceSpec.mangoldt()
    return SequenceSpec.bounded(_parse_spec(name, args))


def _resolve_H(args):
    if getattr(args, "H", None) is not None:
        return int(args.H)
    if getattr(args, "theta", None) is not None:
        if not 0 < args.theta < 1:
            raise ParameterError("theta must lie in (0, 1)")
        return int(math.floor(args.X**args.theta))
    raise ParameterError("provide --H or --theta")


def _need_seed(args):
    if args.seed is None:
        raise ParameterError("--seed is required for sampled runs")
    return int(args.seed)


def _spec_config(args, keys):
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


# -- handlers ------------------------------------------------------------------

def _cmd_sieve(args):
    table = sieve_range(args.kind, int(args.start), int(args.stop),
                        threads=args.threads)
    if args.dump:
        table.dump(args.dump)
    payload = {
        "version": __version__,
        "config": _spec_config(args, ("kind", "start", "stop", "dump", "threads")),
        "results": {
            "length": len(table.values),
            "sum": float(table.values.sum()),
            "nonzero": int((table.values != 0).sum()),
            "sha256": hashlib.sha256(table.values.tobytes()).hexdigest(),
        },
    }
    emit_json(payload, args.out, {"command": "sieve"})
    return 0


def _cmd_supscan(args):
    spec = _parse_spec(args.spec, args)
    H = _resolve_H(args)
    report = uniformity_statistic(
        spec, int(args.X), H, tau=args.tau, seed=_need_seed(args),
        size=args.size, threads=args.threads,
    )
    rows = [
        f"{x},{alpha:.12g},{value:.12g},{value + args.tau * H:.12g}"
        for (x, alpha, value) in report.per_interval
    ]
    if args.format == "csv":
        emit_csv("x,alpha,value,sup_bound", rows, args.out,
                 {"command": "supscan"})
    else:
        payload = {
            "version": __version__,
            "config": _spec_config(
                args, ("spec", "X", "H", "theta", "tau", "seed", "size", "threads")
            ),
            "results": {
                "summary": report,
                "rows": [
                    {"x": x, "alpha": a, "value": v, "sup_bound": v + args.tau * H}
                    for (x, a, v) in report.per_interval
                ],
            },
        }
        emit_json(payload, args.out, {"command": "supscan"})
    return 0


def _uniformity_like(args, report, command):
    if args.format == "csv":
        emit_csv(CSV_HEADER_UNIFORMITY, [report.csv_row()], args.out,
                 {"command": command})
    else:
        report.per_interval = report.per_interval if args.per_interval else []
        payload = {
            "version": __version__,
            "config": _spec_config(
                args,
                ("spec", "t", "X", "H", "theta", "tau", "seed", "size", "threads"),
            ),
            "results": report,
        }
        emit_json(payload, args.out, {"command": command})
    return 0


def _cmd_uniformity(args):
    spec = _parse_spec(args.spec, args)
    H = _resolve_H(args)
    report = uniformity_statistic(
        spec, int(args.X), H, tau=args.tau, seed=_need_seed(args),
        size=args.size, threads=args.threads,
    )
    return _uniformity_like(args, report, "uniformity")


def _cmd_archdemo(args):
    H = _resolve_H(args)
    t = args.t if args.t is not None else 0.01 * args.X**2 / H**2
    report = archimedean_demo(t, int(args.X), H, seed=_need_seed(args),
                              size=args.size, threads=args.threads)
    args.t = t
    return _uniformity_like(args, report, "archdemo")


def _cmd_fixedalpha(args):
    spec = _parse_spec(args.spec, args)
    H = _resolve_H(args)
    if args.alphas:
        alphas = [float(a) for a in args.alphas.split(",")]
    else:
        alphas = rational_candidates(args.qmax)
    report = fixed_alpha_statistic(spec, int(args.X), H, alphas,
                                   size=args.size, threads=args.threads)
    payload = {
        "version": __version__,
        "config": _spec_config(
            args, ("spec", "X", "H", "theta", "qmax", "alphas", "size", "threads")
        ),
        "results": report,
    }
    emit_json(payload, args.out, {"command": "fixedalpha"})
    return 0


def _cmd_distance(args):
    spec = _parse_spec(args.spec, args)
    if args.tmax == "auto":
        H = _resolve_H(args)
        t_max = args.X**2 / H ** (2.0 - args.rho)
    else:
        t_max = float(args.tmax)
    res = pretentious_distance(spec, int(args.X), int(args.Q),
                               t_max=t_max, tol=args.tol)
    if args.format == "csv":
        emit_csv(CSV_HEADER_DISTANCE, [res.csv_row()], args.out,
                 {"command": "distance"})
    else:
        payload = {
            "version": __version__,
            "config": _spec_config(
                args, ("spec", "t", "modulus", "index", "X", "Q", "tmax",
                       "tol", "rho", "H", "theta")
            ),
            "results": res,
        }
        emit_json(payload, args.out, {"command": "distance"})
    return 0


def _cmd_msd(args):
    spec = _parse_spec(args.spec, args)
    rep = msd_check(spec, int(args.x), int(args.H), delta=args.delta)
    payload = {
        "version": __version__,
        "config": _spec_config(args, ("spec", "x", "H", "delta")),
        "results": rep,
    }
    emit_json(payload, args.out, {"command": "msd"})
    return 0


def _build_graph_from_args(args):
    H = _resolve_H(args)
    seed = _need_seed(args)
    fam = build_family(int(args.X), H, args.family, seed=seed, size=args.size)
    if args.synthetic_T is not None:
        freqs = synthetic_assignment(fam, args.synthetic_T, q=args.synthetic_q)
    else:
        spec = _parse_spec(args.spec, args)
        freqs = assign_frequencies(spec, fam, tau=args.tau, threads=args.threads)
    pp2 = (args.pp1, args.pp2) if args.pp1 is not None else None
    graph = build_graph(
        fam, freqs, (args.p1, args.p2), geom_tol=args.geom_tol,
        freq_tol=args.freq_tol, ppprime_range=pp2,
    )
    return graph


def _cmd_graph(args):
    graph = _build_graph_from_args(args)
    rows = [e.csv_row() for e in graph.edges]
    if args.format == "csv":
        emit_csv(CSV_HEADER_EDGES, rows, args.out, {"command": "graph"})
    else:
        payload = {
            "version": __version__,
            "config": _spec_config(
                args, ("spec", "X", "H", "theta", "seed", "size", "family",
                       "p1", "p2", "pp1", "pp2", "geom_tol", "freq_tol",
                       "tau", "synthetic_T", "synthetic_q", "threads")
            ),
            "results": {
                "n_vertices": graph.n_vertices,
                "n_edges": len(graph.edges),
                "geom_tol": graph.geom_tol,
                "freq_tol": graph.freq_tol,
                "edges": graph.edges,
            },
        }
        emit_json(payload, args.out, {"command": "graph"})
    return 0


def _cmd_walks(args):
    if args.complete is not None:
        graph = complete_graph(int(args.complete))
    elif args.edges is not None:
        if args.n is None:
            raise ParameterError("--edges requires --n (vertex count)")
        edges = []
        with open(args.edges) as fh:
            header = fh.readline()
            if not header.startswith("i,j"):
                raise ParameterError("edge CSV must start with the i,j header")
            for line in fh:
                parts = line.strip().split(",")
                if len(parts) < 2:
                    continue
                i, j = int(parts[0]), int(parts[1])
                p1 = int(parts[2]) if len(parts) > 2 else 0
                p2 = int(parts[3]) if len(parts) > 3 else 0
                edges.append(EdgeRecord(i, j, p1, p2, 0.0, 0.0, ()))
        graph = PrimeRatioGraph(int(args.n), edges, (0, 0), (), 0.0, 0.0)
    else:
        raise ParameterError("provide --complete N or --edges CSV with --n")
    results = []
    ok = True
    for k in args.k:
        res = walk_count(graph, int(k))
        ok = ok and res.nonnegative
        results.append(res)
    payload = {
        "version": __version__,
        "config": _spec_config(args, ("complete", "edges", "n", "k")),
        "results": results,
    }
    emit_json(payload, args.out, {"command": "walks"})
    return 0 if ok else 1


def _cmd_primeproducts(args):
    res = count_prime_products(args.k, (args.p1, args.p2), C=args.C,
                               N=args.N, q=args.q)
    payload = {
        "version": __version__,
        "config": _spec_config(args, ("k", "p1", "p2", "C", "N", "q")),
        "results": res,
    }
    emit_json(payload, args.out, {"command": "primeproducts"})
    return 0


def _cmd_mixing(args):
    H = _resolve_H(args)
    fam = build_family(int(args.X), H, "strict", seed=_need_seed(args),
                       size=args.size)
    res = mixing_count(fam, fam, (args.p1, args.p2), geom_tol=args.geom_tol,
                       X=int(args.X), H=H)
    payload = {
        "version": __version__,
        "config": _spec_config(
            args, ("X", "H", "theta", "seed", "size", "p1", "p2", "geom_tol")
        ),
        "results": res,
    }
    emit_json(payload, args.out, {"command": "mixing"})
    return 0


def _cmd_fitmodel(args):
    H = _resolve_H(args)
    seed = _need_seed(args)
    fam = build_family(int(args.X), H, "stratified", seed=seed, size=args.size)
    if args.synthetic_T is not None:
        freqs = synthetic_assignment(fam, args.synthetic_T, q=args.synthetic_q)
    else:
        spec = _parse_spec(args.spec, args)
        freqs = assign_frequencies(spec, fam, tau=args.tau, threads=args.threads)
    fit = fit_frequency_model(
        freqs, q_max=args.qmax, rho=args.rho,
        t_max=None if args.tmax == "auto" else float(args.tmax),
        min_strength=args.min_strength,
    )
    payload = {
        "version": __version__,
        "config": _spec_config(
            args, ("spec", "t", "X", "H", "theta", "seed", "size", "qmax",
                   "rho", "tmax", "tau", "min_strength", "synthetic_T",
                   "synthetic_q", "threads")
        ),
        "results": fit.payload(),
    }
    emit_json(payload, args.out, {"command": "fitmodel"})
    return 0


def _cmd_triple(args):
    f = _parse_spec(args.f, args)
    a = _parse_seq(args.a, args)
    b = _parse_seq(args.b, args)
    direct = not args.spectral_only
    spectral = not args.direct_only
    rep = triple_report(f, a, b, int(args.X), int(args.H), direct=direct,
                        spectral=spectral, threads=args.threads)
    ok = True
    if args.check_identity:
        if rep.rel_gap is None:
            raise ParameterError("--check-identity needs both paths")
        ok = rep.rel_gap <= 1e-6
    if args.format == "csv":
        emit_csv(CSV_HEADER_TRIPLE, [rep.csv_row()], args.out,
                 {"command": "triple"})
    else:
        payload = {
            "version": __version__,
            "config": _spec_config(
                args, ("f", "a", "b", "X", "H", "check_identity", "threads")
            ),
            "results": rep,
        }
        emit_json(payload, args.out, {"command": "triple"})
    return 0 if ok else 1


def _cmd_chowla2(args):
    spec = _parse_spec(args.spec, args)
    rep = averaged_chowla2(spec, int(args.X), int(args.H), threads=args.threads)
    if args.format == "csv":
        emit_csv(CSV_HEADER_CHOWLA2, [rep.csv_row()], args.out,
                 {"command": "chowla2"})
    else:
        payload = {
            "version": __version__,
            "config": _spec_config(args, ("spec", "X", "H", "threads")),
            "results": rep,
        }
        emit_json(payload, args.out, {"command": "chowla2"})
    return 0


def _cmd_l3check(args):
    seq = _parse_seq(args.a, args)
    rep = l3_bound_check(seq, int(args.x), int(args.H))
    payload = {
        "version": __version__,
        "config": _spec_config(args, ("a", "x", "H")),
        "results": rep,
    }
    emit_json(payload, args.out, {"command": "l3check"})
    return 0


def _cmd_suite(args):
    results = run_battery(threads=args.threads)
    return 0 if all(r.passed for r in results) else 1


# -- parser --------------------------------------------------------------------

def _add_common(p, spec=True, seed=False, xh=False, out=True, fmt=None):
    if spec:
        p.add_argument("--spec", default="liouville",
                       help="function: " + ", ".join(SPEC_NAMES))
        p.add_argument("--t", type=float, default=None,
                       help="archimedean twist exponent t (f includes n^{it})")
        p.add_argument("--modulus", type=int, default=None,
                       help="character modulus for --spec char")
        p.add_argument("--index", type=int, default=None,
                       help="character index for --spec char")
        p.add_argument("--spec-seed", type=int, default=None,
                       help="seed for --spec random")
        p.add_argument("--beta", type=float, default=None,
                       help="slope for --spec linear (f(n) = e(beta n))")
    if seed:
        p.add_argument("--seed", type=int, default=None,
                       help="sampling seed (required for sampled runs)")
        p.add_argument("--size", type=int, default=None,
                       help="number of sampled intervals")
    if xh:
        p.add_argument("--X", type=float, required=True)
        p.add_argument("--H", type=float, default=None)
        p.add_argument("--theta", type=float, default=None,
                       help="use H = floor(X^theta)")
    if out:
        p.add_argument("--out", default=None, help="output path (default stdout)")
    if fmt:
        p.add_argument("--format", choices=("json", "csv"), default=fmt)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--config", default=None, help=argparse.SUPPRESS)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="expsumlab",
        description="Desk-scale experiments on short exponential sums of "
                    "bounded multiplicative functions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", default=None,
                        help="JSON config file; flags override its entries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="sieve a value table and checksum it")
    p.add_argument("--kind", choices=("liouville", "moebius", "mangoldt"),
                   required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--dump", default=None, help="write the binary table here")
    _add_common(p, spec=False)
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("supscan", help="certified sup per sampled interval")
    _add_common(p, seed=True, xh=True, fmt="csv")
    p.add_argument("--tau", type=float, default=0.01)
    p.set_defaults(func=_cmd_supscan)

    p = sub.add_parser("uniformity", help="Fourier-uniformity statistic U")
    _add_common(p, seed=True, xh=True, fmt="csv")
    p.add_argument("--tau", type=float, default=0.01)
    p.add_argument("--per-interval", action="store_true")
    p.set_defaults(func=_cmd_uniformity)

    p = sub.add_parser("fixedalpha", help="family averages at fixed frequencies")
    _add_common(p, seed=True, xh=True, fmt=None)
    p.add_argument("--qmax", type=int, default=4,
                   help="use rationals a/q, q <= qmax, as candidates")
    p.add_argument("--alphas", default=None,
                   help="comma-separated explicit candidate list")
    p.set_defaults(func=_cmd_fixedalpha)

    p = sub.add_parser("archdemo", help="archimedean candidate demonstration")
    _add_common(p, seed=True, xh=True, fmt="csv")
    p.add_argument("--per-interval", action="store_true")
    p.set_defaults(func=_cmd_archdemo)

    p = sub.add_parser("distance", help="pretentious distance minimization")
    _add_common(p, xh=False, fmt="json")
    p.add_argument("--X", type=float, required=True)
    p.add_argument("--H", type=float, default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--Q", type=int, default=1)
    p.add_argument("--tmax", default="auto",
                   help='twist bound; "auto" = X^2/H^(2-rho)')
    p.add_argument("--tol", type=float, default=0.01)
    p.add_argument("--rho", type=float, default=0.1)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("msd", help="mean-scales-down deviation sum")
    _add_common(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--H", type=float, required=True)
    p.add_argument("--delta", type=float, default=0.1)
    p.set_defaults(func=_cmd_msd)

    p = sub.add_parser("graph", help="prime-ratio graph on an interval family")
    _add_common(p, seed=True, xh=True, fmt="csv")
    p.add_argument("--family", choices=("strict", "stratified"),
                   default="strict")
    p.add_argument("--p1", type=int, required=True, help="prime range start")
    p.add_argument("--p2", type=int, required=True, help="prime range end")
    p.add_argument("--pp1", type=int, default=None,
                   help="second-scale prime range start")
    p.add_argument("--pp2", type=int, default=None,
                   help="second-scale prime range end")
    p.add_argument("--geom-tol", type=float, default=None)
    p.add_argument("--freq-tol", type=float, default=None)
    p.add_argument("--tau", type=float, default=0.05)
    p.add_argument("--synthetic-T", type=float, default=None,
                   help="use a synthetic frequency assignment instead of --spec")
    p.add_argument("--synthetic-q", type=int, default=1)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("walks", help="exact walk counts and Blakley-Roy margin")
    _add_common(p, spec=False)
    p.add_argument("--complete", type=int, default=None,
                   help="use the complete graph K_n")
    p.add_argument("--edges", default=None, help="edge CSV from the graph command")
    p.add_argument("--n", type=int, default=None, help="vertex count for --edges")
    p.add_argument("--k", type=int, nargs="+", default=[2],
                   help="walk lengths")
    p.set_defaults(func=_cmd_walks)

    p = sub.add_parser("primeproducts", help="near-equal k-fold prime products")
    _add_common(p, spec=False)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--p2", type=int, required=True)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--N", type=float, required=True)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=_cmd_primeproducts)

    p = sub.add_parser("mixing", help="mixing counts between family halves")
    _add_common(p, spec=False, seed=True, xh=True)
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--p2", type=int, required=True)
    p.add_argument("--geom-tol", type=float, default=None)
    p.set_defaults(func=_cmd_mixing)

    p = sub.add_parser("fitmodel", help="global frequency-model fit")
    _add_common(p, seed=True, xh=True)
    p.add_argument("--qmax", type=int, default=4)
    p.add_argument("--rho", type=float, default=0.1)
    p.add_argument("--tmax", default="auto")
    p.add_argument("--tau", type=float, default=0.01)
    p.add_argument("--min-strength", type=float, default=None)
    p.add_argument("--synthetic-T", type=float, default=None)
    p.add_argument("--synthetic-q", type=int, default=1)
    p.set_defaults(func=_cmd_fitmodel)

    p = sub.add_parser("triple", help="Fejér-weighted triple correlation")
    _add_common(p, spec=False, fmt="csv")
    p.add_argument("--f", default="liouville")
    p.add_argument("--a", default="one")
    p.add_argument("--b", default="one")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--spec-seed", type=int, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--X", type=float, required=True)
    p.add_argument("--H", type=float, required=True)
    p.add_argument("--check-identity", action="store_true",
                   help="assert the two paths agree to 1e-6 relative")
    p.add_argument("--direct-only", action="store_true")
    p.add_argument("--spectral-only", action="store_true")
    p.set_defaults(func=_cmd_triple)

    p = sub.add_parser("chowla2", help="averaged two-point correlation")
    _add_common(p, fmt="json")
    p.add_argument("--X", type=float, required=True)
    p.add_argument("--H", type=float, required=True)
    p.set_defaults(func=_cmd_chowla2)

    p = sub.add_parser("l3check", help="cube integral of a window sum")
    _add_common(p, spec=False)
    p.add_argument("--a", default="one")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--spec-seed", type=int, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--H", type=float, required=True)
    p.set_defaults(func=_cmd_l3check)

    p = sub.add_parser("suite", help="run the demonstration battery")
    _add_common(p, spec=False, out=False)
    p.set_defaults(func=_cmd_suite)

    return parser


def _apply_config(parser, argv):
    """Load --config JSON (if any) and fold it in as parser defaults."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)
    if known.config:
        with open(known.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise ParameterError("config file must hold a JSON object")
        defaults = {k.replace("-", "_"): v for k, v in cfg.items()}
        for action in parser._subparsers._group_actions:
            for sp in action.choices.values():
                sp.set_defaults(**defaults)
                for act in sp._actions:
                    if act.required and act.dest in defaults:
                        act.required = False
    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        parser = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report and signal failure
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
