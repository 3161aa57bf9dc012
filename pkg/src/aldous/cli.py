"""Command-line front end.

Subcommands: spectrum, check-pair, scan, hasse, game, verify, characters,
print-config. Exit codes: 0 success (or, for check-pair, no refutation),
1 a violation or refutation was found, 2 usage error. All randomized
commands are deterministic for a fixed seed; identical configuration
produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from . import partitions as pt
from . import spectral, symrep
from .graphs import WeightedGraph, graph_family, quasi_complete_weights
from .order import (
    LedgerConflict,
    RelationLedger,
    check_pair,
    export_dot,
    scan,
    SCAN_FAMILIES,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    tol: float = 1e-9
    dim_cap: int = symrep.DEFAULT_DIM_CAP
    tableau_cap: int = 10**7
    seed: int = 0
    budget: int = 100
    families: str = ",".join(SCAN_FAMILIES)
    workers: int = 1
    format: str = "csv"


def _load_config(path: str | None, args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if path:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        for key, value in data.items():
            if not hasattr(config, key):
                raise ValueError(f"unknown config key {key!r}")
            setattr(config, key, value)
    env_cap = os.environ.get("ALDOUS_DIM_CAP")
    if env_cap:
        config.dim_cap = int(env_cap)
    for key in vars(config):
        override = getattr(args, key, None)
        if override is not None:
            setattr(config, key, override)
    if config.dim_cap <= 0 or config.tableau_cap <= 0 or config.workers <= 0:
        raise ValueError("caps and worker count must be positive")
    pt.TABLEAU_CAP = config.tableau_cap
    return config


def _load_graph(args: argparse.Namespace, n: int, config: RunConfig) -> tuple:
    """(graph, witness descriptor or None) from --graph or --family flags."""
    if args.graph:
        with open(args.graph, "r", encoding="utf-8") as handle:
            graph = WeightedGraph.from_json(handle.read())
        if graph.n != n:
            raise ValueError(f"graph has n={graph.n}, shapes have n={n}")
        return graph, None
    if not args.family:
        raise ValueError("need --graph FILE or --family NAME")
    if args.family in ("quasi", "weighted_star") and not args.weights:
        raise ValueError(f"family {args.family!r} requires --weights")
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.m is not None:
        params["m"] = args.m
    if args.weights:
        params["a"] = [float(w) for w in args.weights.split(",")]
    if args.family == "random":
        params["seed"] = config.seed
        params["density"] = args.density
    graph = graph_family(args.family, n, **params)
    descriptor = None
    if args.family in ("complete", "star", "clique", "cycle", "path", "matching"):
        descriptor = {"kind": "family", "family": args.family, "n": n}
        if params:
            descriptor["params"] = {
                key: value for key, value in params.items() if key in ("k", "m")
            }
    return graph, descriptor


def _graph_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="graph JSON file")
    parser.add_argument("--family", help="graph family name")
    parser.add_argument("--k", type=int, help="family parameter k")
    parser.add_argument("--m", type=int, help="family parameter m")
    parser.add_argument("--weights", help="comma-separated family weights")
    parser.add_argument("--density", type=float, default=0.5,
                        help="edge density for random graphs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aldous",
        description="Spectra of the swap operator on S_n irreducibles and "
                    "the order they induce.",
    )
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--dim-cap", dest="dim_cap", type=int, default=None)
    parser.add_argument("--tableau-cap", dest="tableau_cap", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--format", choices=("csv", "json", "dot"), default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="full spectrum on one irreducible")
    p.add_argument("--shape", required=True)
    p.add_argument("--exact", action="store_true",
                   help="also print the exact values when available")
    _graph_flags(p)

    p = sub.add_parser("check-pair", help="try to refute sigma >= tau on a graph")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    _graph_flags(p)

    p = sub.add_parser("scan", help="search graphs for refutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--families", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="ledger JSON output path")

    p = sub.add_parser("hasse", help="ledger to DOT diagram")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", help="DOT output path")

    p = sub.add_parser("game", help="decide the corner-removal game")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--graphs", type=int, default=None)

    p = sub.add_parser("characters", help="character table as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="CSV output path")

    sub.add_parser("print-config", help="print the effective configuration")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _spectrum_lines(args, config: RunConfig) -> str:
    shape = pt.parse_partition(args.shape)
    graph, _ = _load_graph(args, shape.n, config)
    numeric = spectral.spectrum(
        symrep.delta_matrix(shape, graph, dim_cap=config.dim_cap)
    )
    exact_values = None
    weights = quasi_complete_weights(graph)
    if args.exact and weights is not None:
        exact_values = spectral.quasi_complete_spectrum(shape, weights, exact=True)
    if config.format == "json":
        payload = {
            "shape": str(shape),
            "lambda1": numeric.lambda1,
            "lambda_max": numeric.lambda_max,
            "spectrum": list(numeric.values),
        }
        if exact_values is not None:
            payload["exact"] = [str(v) for v in exact_values.values]
        return json.dumps(payload, sort_keys=True) + "\n"
    lines = [
        f"shape,{shape}",
        f"lambda1,{numeric.lambda1!r}",
        f"lambda_max,{numeric.lambda_max!r}",
        "spectrum," + ",".join(repr(v) for v in numeric.values),
    ]
    if exact_values is not None:
        lines.append("exact," + ",".join(str(v) for v in exact_values.values))
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # flag spelling accepted as an alias for the subcommand
    argv = ["print-config" if a == "--print-config" else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = _load_config(args.config, args)

        if args.command == "spectrum":
            sys.stdout.write(_spectrum_lines(args, config))
            return EXIT_OK

        if args.command == "check-pair":
            sigma = pt.parse_partition(args.sigma)
            tau = pt.parse_partition(args.tau)
            if sigma.n != tau.n:
                raise ValueError("sigma and tau must partition the same n")
            graph, descriptor = _load_graph(args, sigma.n, config)
            refutation = check_pair(sigma, tau, graph, tol=config.tol,
                                    descriptor=descriptor,
                                    dim_cap=config.dim_cap)
            if refutation is None:
                print(f"no refutation: ({sigma}) >= ({tau}) consistent "
                      "with this graph")
                return EXIT_OK
            print(f"refuted: ({sigma}) >= ({tau}) fails, margin "
                  f"{refutation.margin!r}"
                  f"{' (exact)' if refutation.exact else ''}")
            return EXIT_VIOLATION

        if args.command == "scan":
            families = tuple(
                name.strip() for name in config.families.split(",") if name.strip()
            )
            ledger, report = scan(
                args.n, families, budget=config.budget, tol=config.tol,
                seed=config.seed, dim_cap=config.dim_cap,
                workers=config.workers,
            )
            _emit(ledger.to_json() + "\n", args.out)
            summary = {
                "graphs_tried": report.graphs_tried,
                "refutations_found": report.refutations_found,
                "unknown": len(ledger.unknown_pairs()),
                "contradictions": report.contradictions,
            }
            sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
            return EXIT_OK if report.consistent else EXIT_VIOLATION

        if args.command == "hasse":
            with open(args.infile, "r", encoding="utf-8") as handle:
                ledger = RelationLedger.from_json(handle.read())
            _emit(export_dot(ledger), args.out)
            return EXIT_OK

        if args.command == "game":
            from .game import game_trace, game_winner

            sigma = pt.parse_partition(args.sigma)
            tau = pt.parse_partition(args.tau)
            winner = game_winner(sigma, tau)
            print(f"A holding ({sigma}) {'wins' if winner else 'loses'} "
                  f"against B holding ({tau})")
            if args.trace:
                for round_no, (b_box, a_box) in enumerate(game_trace(sigma, tau), 1):
                    print(f"round {round_no}: B removes (col {b_box.col}, "
                          f"row {b_box.row}) content {b_box.content}; "
                          f"A removes (col {a_box.col}, row {a_box.row}) "
                          f"content {a_box.content}")
            return EXIT_OK

        if args.command == "verify":
            params = {}
            if args.seed is not None:
                params["seed"] = args.seed
            for key in ("budget", "trials", "samples", "graphs"):
                value = getattr(args, key)
                if value is not None:
                    params[key] = value
            result = run_suite(args.suite, args.n, **params)
            for check in result.checks:
                status = "ok" if check["ok"] else "FAIL"
                print(f"{status} {check['name']}")
            if not result.passed:
                sys.stderr.write(json.dumps(
                    {"suite": result.suite, "failures": result.failures()},
                    sort_keys=True, default=str,
                ) + "\n")
                return EXIT_VIOLATION
            return EXIT_OK

        if args.command == "characters":
            from .characters import character_table_rows

            lines = []
            header_written = False
            for shape, classes, values in character_table_rows(args.n):
                if not header_written:
                    lines.append("shape," + ",".join(f"({c})" for c in classes))
                    header_written = True
                lines.append(str(shape.compact_str()) + ","
                             + ",".join(str(v) for v in values))
            _emit("\n".join(lines) + "\n", args.out)
            return EXIT_OK

        if args.command == "print-config":
            print(json.dumps(asdict(config), sort_keys=True, indent=2))
            return EXIT_OK

        raise ValueError(f"unhandled command {args.command}")
    except (ValueError, OSError, KeyError, LedgerConflict) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
