"""Command-line front end: analyze, moran, nplayer, market, simulate.

Every run writes its outputs plus a manifest JSON (command, parameters,
seed, version, output names) next to them; deterministic commands rerun
from an equal manifest reproduce their outputs byte for byte.

Exit codes: 0 success, 2 input/parse error, 3 domain or cap error,
4 property-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .classify import classify, insuperable_vertices
from .errors import CapExceeded, DimensionError, DomainError
from .exact import as_fraction, format_fraction
from .games import (
    BimatrixGame,
    catalog,
    game_to_dict,
    load_game,
    weak_selection,
)
from .market import (
    OnePeriodMarket,
    find_arbitrage,
    find_state_price_vector,
    load_market,
    market_to_dict,
    trivial_outcome_check,
)
from .moran import (
    TwoByTwoPayoff,
    critical_sizes,
    fixation_probabilities,
    fixation_to_csv,
    scan_to_csv,
    weak_selection_scan,
)
from .multiplayer import (
    is_reducible,
    load_nplayer,
    n_catalog,
    n_player_classify,
    nplayer_to_dict,
)
from .nash import nash_vs_insuperable
from .sim import (
    UltimatumConfig,
    moran_monte_carlo,
    survivors_within_fair_bounds,
    trace_to_csv,
    ultimatum_tournament,
)

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_CHECK = 0, 2, 3, 4


class _InputError(Exception):
    pass


def _fr(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise _InputError(f"cannot parse rational {text!r}: {exc}") from None


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"exact": format_fraction(value), "decimal": float(value)}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, "weights"):
        return _jsonable(list(value.weights))
    return value


def _out_dir(args) -> Path:
    path = Path(args.out or os.environ.get("INSUPERABLE_OUT_DIR") or ".")
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write(path: Path, text: str):
    path.write_text(text, encoding="utf-8")


def _manifest(out_dir: Path, stem: str, command: str, params: dict, outputs: list[str], seed=None):
    manifest = {
        "command": command,
        "params": _jsonable({k: v for k, v in params.items() if not callable(v)}),
        "seed": seed,
        "version": __version__,
        "outputs": outputs,
    }
    _write(out_dir / f"{stem}.manifest.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _catalog_params(args) -> dict:
    params = {}
    for name in ("G", "C", "a", "b", "c", "d", "r", "alpha"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = _fr(value)
    for name in ("M", "N"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = int(value)
    return params


def _load_bimatrix(args) -> BimatrixGame:
    if args.game:
        text = Path(args.game).read_text(encoding="utf-8")
        return load_game(text)
    if args.catalog:
        params = _catalog_params(args)
        params.pop("N", None)  # population size is not a catalog parameter here
        return catalog(args.catalog, **params)
    raise _InputError("provide --game FILE or --catalog NAME")


def _add_catalog_flags(parser):
    parser.add_argument("--catalog", help="named example game")
    parser.add_argument("--game", help="path to a game JSON file")
    for flag in ("--G", "--C", "--a", "--b", "--c", "--d"):
        parser.add_argument(flag, help="catalog parameter (exact rational)")
    parser.add_argument("--M", type=int, help="ultimatum offer bound")


def cmd_analyze(args) -> int:
    game = _load_bimatrix(args)
    if args.weak:
        if args.N is None:
            raise _InputError("--weak needs --N for the population size")
        game = weak_selection(game, args.N)
    report = classify(game)
    comparison = nash_vs_insuperable(game, cap=args.cap)
    payload = {
        "game": game_to_dict(game),
        "insuperable": {
            "value_sign": report.value_sign,
            "a_insuperable": _jsonable(report.a_insuperable),
            "b_insuperable": _jsonable(report.b_insuperable),
            "a_strict": report.a_strict,
            "b_strict": report.b_strict,
            "pair_exists": report.pair_exists,
        },
        "nash": [
            {
                "x": _jsonable(eq.x),
                "y": _jsonable(eq.y),
                "payoff_a": _jsonable(eq.payoff_a),
                "payoff_b": _jsonable(eq.payoff_b),
                "kind": eq.kind,
                "strict": eq.strict,
                "degenerate": eq.degenerate,
            }
            for eq in comparison.equilibria
        ],
        "comparison": {
            "nash_x_insuperable": list(comparison.nash_x_insuperable),
            "nash_y_insuperable": list(comparison.nash_y_insuperable),
            "any_nash_strategy_insuperable": comparison.any_nash_strategy_insuperable,
            "witness_x_is_nash": comparison.witness_x_is_nash,
            "witness_y_is_nash": comparison.witness_y_is_nash,
        },
    }
    if args.vertices:
        payload["insuperable_vertices"] = {
            "A": [_jsonable(v) for v in insuperable_vertices(game, "A", cap=args.cap_vertices)],
            "B": [_jsonable(v) for v in insuperable_vertices(game, "B", cap=args.cap_vertices)],
        }
    out_dir = _out_dir(args)
    text = json.dumps(payload, indent=2) + "\n"
    _write(out_dir / "analyze.json", text)
    _manifest(out_dir, "analyze", "analyze", vars(args), ["analyze.json"])
    print(text, end="")
    return EXIT_OK


def _payoff_from_args(args) -> TwoByTwoPayoff:
    if args.payoff:
        parts = [p.strip() for p in args.payoff.split(",")]
        if len(parts) != 4:
            raise _InputError("--payoff expects a,b,c,d")
        return TwoByTwoPayoff(*(_fr(p) for p in parts))
    if args.catalog:
        params = _catalog_params(args)
        params.pop("N", None)
        game = catalog(args.catalog, **params)
        return TwoByTwoPayoff.from_game(game)
    raise _InputError("provide --payoff a,b,c,d or --catalog NAME")


def cmd_moran(args) -> int:
    payoff = _payoff_from_args(args)
    out_dir = _out_dir(args)
    outputs = []
    payload = {}
    if args.critical:
        sizes = critical_sizes(payoff)
        payload["critical_sizes"] = {
            "N_inf": _jsonable(sizes.N_inf),
            "N_sup": _jsonable(sizes.N_sup),
        }
    if args.scan:
        result = weak_selection_scan(payoff, args.Nmax)
        csv_text = scan_to_csv(result)
        _write(out_dir / "moran_scan.csv", csv_text)
        outputs.append("moran_scan.csv")
        payload["scan"] = {"N_max": args.Nmax, "crossover": result.crossover}
    if args.N is not None:
        p = payoff
        if args.weak and not args.scan:
            p = TwoByTwoPayoff.from_game(weak_selection(payoff.as_game(), args.N))
        vec = fixation_probabilities(p, args.N)
        csv_text = fixation_to_csv(vec)
        _write(out_dir / "moran_fixation.csv", csv_text)
        outputs.append("moran_fixation.csv")
        payload["fixation"] = {"N": args.N, "F": _jsonable(list(vec.F))}
    if not payload:
        raise _InputError("nothing to do: pass --N, --scan or --critical")
    text = json.dumps(payload, indent=2) + "\n"
    _write(out_dir / "moran.json", text)
    outputs.append("moran.json")
    _manifest(out_dir, "moran", "moran", vars(args), outputs)
    print(text, end="")
    return EXIT_OK


def cmd_nplayer(args) -> int:
    if args.game:
        g = load_nplayer(Path(args.game).read_text(encoding="utf-8"))
    elif args.catalog:
        params = {}
        if args.r is not None:
            params["r"] = _fr(args.r)
        if args.alpha is not None:
            params["alpha"] = _fr(args.alpha)
        if args.N is not None and args.catalog in ("pgg", "zerinho_n"):
            params["N"] = args.N
        g = n_catalog(args.catalog, **params)
    else:
        raise _InputError("provide --game FILE or --catalog NAME")
    cls = n_player_classify(g)
    payload = {
        "game": nplayer_to_dict(g),
        "classification": {
            "A_insuperable": cls.A_insuperable,
            "B_insuperable": cls.B_insuperable,
            "A_dominates": cls.A_dominates,
            "B_dominates": cls.B_dominates,
            "A_strictly_insuperable": cls.A_strictly_insuperable,
            "B_strictly_insuperable": cls.B_strictly_insuperable,
            "A_strictly_dominates": cls.A_strictly_dominates,
            "B_strictly_dominates": cls.B_strictly_dominates,
        },
    }
    if args.reduce:
        reduction = is_reducible(g)
        payload["reduction"] = {"reducible": reduction.reducible}
        if reduction.reducible:
            payload["reduction"]["matrix"] = game_to_dict(reduction.two_player)["A"]
            if args.analyze:
                rep = classify(reduction.two_player)
                payload["reduction"]["analysis"] = {
                    "value_sign": rep.value_sign,
                    "a_insuperable": _jsonable(rep.a_insuperable),
                    "b_insuperable": _jsonable(rep.b_insuperable),
                    "pair_exists": rep.pair_exists,
                }
    out_dir = _out_dir(args)
    text = json.dumps(payload, indent=2) + "\n"
    _write(out_dir / "nplayer.json", text)
    _manifest(out_dir, "nplayer", "nplayer", vars(args), ["nplayer.json"])
    print(text, end="")
    return EXIT_OK


def cmd_market(args) -> int:
    if args.file:
        market = load_market(Path(args.file).read_text(encoding="utf-8"))
    elif args.D and args.p:
        market = OnePeriodMarket(
            json.loads(args.D, parse_float=Fraction),
            json.loads(args.p, parse_float=Fraction),
        )
    else:
        raise _InputError("provide --file FILE or both --D and --p")
    spv = find_state_price_vector(market)
    arb = find_arbitrage(market)
    report = trivial_outcome_check(market)
    payload = {
        "market": market_to_dict(market),
        "state_price_vector": _jsonable(list(spv.pi)) if spv else None,
        "arbitrage": (
            {"theta": _jsonable(list(arb[0].theta)), "kind": arb[1]} if arb else None
        ),
        "trivial_outcome": {
            "value_sign": report.value_sign,
            "no_strict_insuperable": report.no_strict_insuperable,
            "all_insuperable_trivial": report.all_insuperable_trivial,
            "no_negative_cost_insuperable": report.no_negative_cost_insuperable,
            "no_zero_cost_nontrivial": report.no_zero_cost_nontrivial,
            "verdict_no_arbitrage": report.verdict_no_arbitrage,
        },
        "consistent": (arb is None) == report.verdict_no_arbitrage,
    }
    out_dir = _out_dir(args)
    text = json.dumps(payload, indent=2) + "\n"
    _write(out_dir / "market.json", text)
    _manifest(out_dir, "market", "market", vars(args), ["market.json"])
    print(text, end="")
    if not payload["consistent"]:
        return EXIT_CHECK
    return EXIT_OK


def cmd_simulate(args) -> int:
    out_dir = _out_dir(args)
    if args.kind == "ultimatum":
        cfg = UltimatumConfig(
            M=args.M,
            copies_per_strategy=args.copies,
            steps=int(float(args.steps)),
            seed=args.seed,
            snapshot_every=args.snapshot_every,
            threshold_max=args.threshold_max,
            role_mode=args.mode,
        )
        trace = ultimatum_tournament(cfg)
        _write(out_dir / "ultimatum_trace.csv", trace_to_csv(trace))
        fair = survivors_within_fair_bounds(trace)
        payload = {
            "population": cfg.population,
            "steps_run": trace.steps_run,
            "termination": trace.termination,
            "survivor_classes": [[m, t] for m, t in trace.survivors()],
            "survivors_within_fair_bounds": fair,
        }
        text = json.dumps(payload, indent=2) + "\n"
        _write(out_dir / "ultimatum_result.json", text)
        _manifest(
            out_dir,
            "ultimatum",
            "simulate ultimatum",
            vars(args),
            ["ultimatum_trace.csv", "ultimatum_result.json"],
            seed=args.seed,
        )
        print(text, end="")
        if args.check_survivors and not fair:
            return EXIT_CHECK
        return EXIT_OK
    if args.kind == "moran-mc":
        parts = [p.strip() for p in (args.payoff or "").split(",")]
        if len(parts) != 4:
            raise _InputError("--payoff expects a,b,c,d")
        payoff = TwoByTwoPayoff(*(_fr(p) for p in parts))
        estimate = moran_monte_carlo(
            payoff, N=args.N, i0=args.i0, replicates=int(float(args.reps)), seed=args.seed
        )
        payload = {
            "rate": estimate.fixation_rate,
            "se": estimate.standard_error,
            "replicates": estimate.replicates,
            "seed": estimate.seed,
        }
        text = json.dumps(payload, indent=2) + "\n"
        _write(out_dir / "moran_mc.json", text)
        _manifest(out_dir, "moran_mc", "simulate moran-mc", vars(args), ["moran_mc.json"], seed=args.seed)
        print(text, end="")
        return EXIT_OK
    raise _InputError(f"unknown simulation kind {args.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="insuperable",
        description="Insuperable-strategy analysis of two-player and N-player games",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a bimatrix game and enumerate equilibria")
    _add_catalog_flags(p)
    p.add_argument("--N", type=int, help="population size for --weak")
    p.add_argument("--weak", action="store_true", help="apply the 1 + g/N transform")
    p.add_argument("--vertices", action="store_true", help="enumerate insuperable polytope vertices")
    p.add_argument("--cap", type=int, default=6, help="support enumeration cap")
    p.add_argument("--cap-vertices", type=int, default=8, dest="cap_vertices")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("moran", help="exact Moran fixation quantities")
    p.add_argument("--payoff", help="a,b,c,d entries (exact rationals)")
    _add_catalog_flags(p)
    p.add_argument("--N", type=int, help="population size for the fixation vector")
    p.add_argument("--weak", action="store_true", help="weak-selection transform")
    p.add_argument("--scan", action="store_true", help="invasion scan over N")
    p.add_argument("--Nmax", type=int, default=30)
    p.add_argument("--critical", action="store_true", help="critical population sizes")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_moran)

    p = sub.add_parser("nplayer", help="N-player two-strategy analysis")
    p.add_argument("--game", help="path to an N-player JSON file")
    p.add_argument("--catalog", help="pgg | zerinho_original | zerinho_modified | zerinho_n")
    p.add_argument("--r", help="public good multiplier")
    p.add_argument("--alpha", help="matching reward")
    p.add_argument("--N", type=int, help="number of players")
    p.add_argument("--reduce", action="store_true", help="attempt the 2-player reduction")
    p.add_argument("--analyze", action="store_true", help="classify the reduced game")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_nplayer)

    p = sub.add_parser("market", help="one-period market analysis")
    p.add_argument("--file", help="path to a market JSON file")
    p.add_argument("--D", help="inline cash-flow matrix JSON")
    p.add_argument("--p", help="inline price vector JSON")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_market)

    p = sub.add_parser("simulate", help="seeded stochastic runs")
    p.add_argument("kind", choices=["ultimatum", "moran-mc"])
    p.add_argument("--M", type=int, default=20)
    p.add_argument("--copies", type=int, default=100)
    p.add_argument("--steps", default="1e6")
    p.add_argument("--seed", type=int, required=False)
    p.add_argument("--snapshot-every", type=int, default=0, dest="snapshot_every")
    p.add_argument("--threshold-max", type=int, default=None, dest="threshold_max")
    p.add_argument("--mode", choices=["single", "both"], default="single")
    p.add_argument("--check-survivors", action="store_true", dest="check_survivors")
    p.add_argument("--payoff", help="a,b,c,d for moran-mc")
    p.add_argument("--N", type=int, help="population size for moran-mc")
    p.add_argument("--i0", type=int, help="initial A count for moran-mc")
    p.add_argument("--reps", default="100000")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate" and args.seed is None:
            raise _InputError("--seed is required for stochastic commands")
        return args.func(args)
    except _InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"input error: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, CapExceeded, DimensionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
