"""Command-line surface: cop numbers, the one-cop test, bounds reports,
theorem-verification sweeps, random-graph statistics, and the play server.

Every command has a --json mirror whose output is byte-deterministic for a
fixed seed (keys sorted; wall-clock timings zeroed unless --timings is
given).  Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 budget
exceeded, 4 precondition violated, 5 environment failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    alon_spencer_domination_bound,
    domination_number_exact,
    edge_isoperimetric_exact,
    theorem34_bounds,
    vertex_isoperimetric_exact,
)
from .copwin import decide_one_cop
from .errors import (
    BudgetExceeded,
    InfeasibleInput,
    InvalidEdge,
    NotConnected,
    ParseError,
    TooLarge,
    TooSmall,
)
from .generators import gnp, random_regular
from .graph import INFINITE, Graph, block_decomposition, from_edge_list, is_connected
from .solver import DEFAULT_MAX_STATES, GameConfig, solve
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4
EXIT_ENVIRONMENT = 5


def _load_graph(path: str) -> Graph:
    return from_edge_list(Path(path).read_text())


def _parse_speed(text: str):
    if text.lower() in ("inf", "infinity", "unbounded"):
        return INFINITE
    return int(text)


def _speed_label(a, b) -> str:
    if a == INFINITE and b == 1:
        return "c_inf"
    if a == 1 and b == 1:
        return "c_1"
    a_txt = "inf" if a == INFINITE else str(int(a))
    return f"c_{{{a_txt},{b}}}"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(", ", ": ")))


def _cmd_copnumber(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise NotConnected("cop numbers are computed per connected graph")
    a = _parse_speed(args.robber_speed)
    b = args.cop_speed
    label = _speed_label(a, b)
    value = None
    placement = None
    states = rounds = 0
    for k in range(1, args.max_cops + 1):
        res = solve(g, GameConfig(k, a, b), args.max_states)
        states, rounds = res.num_states, res.rounds
        wins = res.winning_placements()
        if wins:
            value = k
            placement = list(wins[0])
            break
    if args.json:
        _emit_json(
            {
                "command": "copnumber",
                "label": label,
                "value": value,
                "above_max": value is None,
                "max_cops": args.max_cops,
                "placement": placement,
                "states": states,
                "rounds": rounds,
            }
        )
    elif value is None:
        print(f"{label} > {args.max_cops}  (no winning placement up to {args.max_cops} cops)")
        print(f"last solve: {states} states, {rounds} rounds")
    else:
        print(f"{label} = {value}")
        print(f"winning placement: {placement}")
        print(f"solver: {states} states, {rounds} rounds")
    return EXIT_OK


def _cmd_copwin1(args) -> int:
    g = _load_graph(args.graph)
    verdict = decide_one_cop(g)
    witness = None
    if verdict.bad_block is not None:
        blocks = block_decomposition(g).blocks
        witness = {"kind": "block", "block": list(blocks[verdict.bad_block])}
    elif verdict.hallway is not None:
        blocks = block_decomposition(g).blocks
        a, b = verdict.hallway
        witness = {
            "kind": "hallway",
            "blocks": [list(blocks[a.block_index]), list(blocks[b.block_index])],
            "exits": [a.cut_vertex, b.cut_vertex],
        }
    if args.json:
        _emit_json({"command": "copwin1", "copwin": verdict.is_copwin, "witness": witness})
    elif verdict.is_copwin:
        print("YES: one cop catches the unbounded-speed robber")
    elif witness["kind"] == "block":
        print(f"NO: block {witness['block']} has no dominating vertex")
    else:
        print(
            f"NO: hallway between blocks {witness['blocks'][0]} and "
            f"{witness['blocks'][1]} (exits {witness['exits']})"
        )
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    ie = edge_isoperimetric_exact(g, args.max_iso_n)
    iv = vertex_isoperimetric_exact(g, args.max_iso_n)
    rep = theorem34_bounds(g, ie.value, iv.value)
    gamma, gamma_wit = domination_number_exact(g)
    alon = alon_spencer_domination_bound(g)
    cinf = None
    if is_connected(g):
        try:
            from .solver import cop_number

            cinf = cop_number(g, INFINITE, 1, gamma, args.max_states)
        except BudgetExceeded:
            cinf = None
    payload = {
        "command": "bounds",
        "n": g.n,
        "m": g.m,
        "max_degree": rep.max_degree,
        "iota_e": _frac(ie.value),
        "iota_e_witness": list(ie.witness),
        "iota_v": _frac(iv.value),
        "iota_v_witness": list(iv.witness),
        "gamma": gamma,
        "gamma_witness": sorted(gamma_wit),
        "lower_edge_sharp": _frac(rep.lower_edge_sharp),
        "lower_edge_relaxed": _frac(rep.lower_edge_relaxed),
        "lower_vertex_b": _frac(rep.lower_vertex_b),
        "lower_vertex_c": _frac(rep.lower_vertex_c),
        "alon_spencer_upper": round(alon, 9),
        "c_inf": cinf,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"n={g.n} m={g.m} max_degree={rep.max_degree}")
        print(f"iota_e = {_frac(ie.value)}   witness {list(ie.witness)}")
        print(f"iota_v = {_frac(iv.value)}   witness {list(iv.witness)}")
        print(f"gamma  = {gamma}     witness {sorted(gamma_wit)}")
        print(f"lower bounds: sharp {_frac(rep.lower_edge_sharp)}, relaxed "
              f"{_frac(rep.lower_edge_relaxed)}, vertex-b {_frac(rep.lower_vertex_b)}, "
              f"vertex-c {_frac(rep.lower_vertex_c)}")
        print(f"alon-spencer upper on gamma: {alon:.4f}")
        mid = str(cinf) if cinf is not None else "c_inf"
        print(f"sandwich: {_frac(rep.best_lower())} <= {mid} <= {gamma}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.suite in ("characterization", "sandwich", "escape", "powergraph"):
        kwargs["max_n"] = args.max_n
    if args.suite == "subsetpick":
        kwargs["random_cases"] = args.random_cases
        kwargs["seed"] = args.seed
    report = run_suite(args.suite, **kwargs)
    if args.json:
        _emit_json({"command": "verify", **report.to_dict(include_timing=args.timings)})
    else:
        status = "ok" if report.ok else "FAILED"
        print(f"suite {report.suite}: {report.checked} instances, "
              f"{len(report.failures)} failures [{status}] ({report.elapsed_ms} ms)")
        for note in report.notes:
            print(f"  note: {note}")
        for f in report.failures[:20]:
            print(f"  FAIL {f.detail}\n    expected {f.expected}, got {f.actual}\n"
                  f"    instance: {f.instance!r}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_random_stats(args) -> int:
    if (args.p is None) == (args.regular is None):
        raise InfeasibleInput("give exactly one of --p or --regular")
    if args.p is not None:
        family = f"gnp(n={args.n}, p={args.p})"
    else:
        family = f"regular(n={args.n}, d={args.regular})"
    rows = []
    threshold_hits = 0
    for i in range(args.samples):
        seed = args.seed + i
        if args.p is not None:
            g = gnp(args.n, args.p, seed)
        else:
            g = random_regular(args.n, args.regular, seed)
        row = {
            "seed": seed,
            "m": g.m,
            "min_degree": g.min_degree,
            "max_degree": g.max_degree,
            "connected": is_connected(g),
        }
        gamma, _ = domination_number_exact(g)
        row["gamma"] = gamma
        if g.n <= args.max_iso_n and g.m > 0:
            iv = vertex_isoperimetric_exact(g).value
            ie = edge_isoperimetric_exact(g).value
            rep = theorem34_bounds(g, ie, iv)
            row["iota_v"] = _frac(iv)
            row["iota_e"] = _frac(ie)
            row["lower_edge_sharp"] = _frac(rep.lower_edge_sharp)
            row["lower_vertex_c"] = _frac(rep.lower_vertex_c)
            if iv >= Fraction(1, 1000):
                threshold_hits += 1
        if args.regular is not None and row["connected"] and g.n <= 14:
            from .solver import cop_number

            row["c_inf"] = cop_number(g, INFINITE, 1, gamma, args.max_states)
        rows.append(row)
    aggregate = {"samples": args.samples, "expansion_at_least_0.001": threshold_hits}
    if args.p is not None and args.samples:
        aggregate["np_over_log_n"] = (
            round(args.n * args.p / math.log(args.n), 4) if args.n > 1 else None
        )
    if args.json:
        _emit_json({"command": "random_stats", "family": family, "rows": rows,
                    "aggregate": aggregate})
    else:
        print(family)
        for row in rows:
            print("  " + " ".join(f"{k}={v}" for k, v in row.items()))
        print(f"aggregate: {aggregate}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        preset_dir=args.preset_dir,
        ui_dir=args.ui_dir,
        max_states=args.max_states,
    )
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except OSError as exc:
        print(f"serve: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    except SystemExit:
        print(f"serve: server failed to start on {args.host}:{args.port}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fastrobber",
        description="Cops and Robber with an unbounded-speed robber",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("copnumber", help="exact cop number of a graph file")
    p.add_argument("graph")
    p.add_argument("--robber-speed", default="inf", help="positive integer or 'inf'")
    p.add_argument("--cop-speed", type=int, default=1)
    p.add_argument("--max-cops", type=int, default=3)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    add_json(p)
    p.set_defaults(fn=_cmd_copnumber)

    p = sub.add_parser("copwin1", help="does one cop suffice? (structural test)")
    p.add_argument("graph")
    add_json(p)
    p.set_defaults(fn=_cmd_copwin1)

    p = sub.add_parser("bounds", help="exact expansion/domination bounds report")
    p.add_argument("graph")
    p.add_argument("--max-iso-n", type=int, default=24)
    p.add_argument("--max-states", type=int, default=2_000_000)
    add_json(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run a theorem-verification sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=6, help="corpus size cap for graph sweeps")
    p.add_argument("--random-cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock ms in JSON (breaks byte determinism)")
    add_json(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("random-stats", help="per-sample statistics for random families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--regular", type=int, default=None, metavar="D")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iso-n", type=int, default=20)
    p.add_argument("--max-states", type=int, default=2_000_000)
    add_json(p)
    p.set_defaults(fn=_cmd_random_stats)

    p = sub.add_parser("serve", help="HTTP play service and web UI")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--preset-dir", default=None)
    p.add_argument("--ui-dir", default=None)
    p.add_argument("--max-states", type=int, default=500_000)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, InvalidEdge, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotConnected, InfeasibleInput, TooSmall, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
