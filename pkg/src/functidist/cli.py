"""``functidist`` command line.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or parse error,
3 a budget cap left the answer unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import __version__
from .constructions import FAMILIES, construct
from .distinguishing import BudgetExceeded, SearchBudget, dist_exact, dist_oracle
from .functigraph import Functigraph, build_functigraph, functigraph_from_json
from .graph import Graph, GraphError, graph_from_json, to_dot
from .harness import OUT, SUITES, config_for, failures, report_lines, run_suites, summary_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    command: str
    inputs: tuple[str, ...] = ()
    max_group_order: int = 10**6
    max_colorings: int = 50_000_000
    max_n: int = 400
    max_nodes: int = 2_000_000
    fmt: str = "json"
    deterministic: bool = True

    def __post_init__(self):
        for f in fields(self):
            if f.name.startswith("max_") and getattr(self, f.name) < 1:
                raise ValueError(f"--{f.name.replace('_', '-')} must be positive")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise GraphError(f"{path}: {exc.strerror}") from None


def _graph_or_functigraph(path: str) -> tuple[Graph, Functigraph | None]:
    data = _load_json(path)
    try:
        if isinstance(data, dict) and "g" in data:
            F = functigraph_from_json(data)
            return F.composite, F
        return graph_from_json(data), None
    except GraphError as exc:
        raise GraphError(f"{path}: {exc}") from None


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


# -- subcommands -----------------------------------------------------------------


def cmd_dist(args, cfg: CliConfig, out) -> int:
    G, _ = _graph_or_functigraph(args.graph)
    budget = SearchBudget(max_nodes=cfg.max_nodes, max_n=cfg.max_n)
    if args.oracle:
        try:
            value, witness = dist_oracle(
                G, cfg.max_colorings, cfg.max_group_order, with_witness=True
            )
        except OverflowError as exc:
            payload = {"value": "unknown", "method": "oracle", "reason": str(exc)}
            out.write(_dump(payload) if cfg.fmt == "json" else _table(list(payload.items())))
            return EXIT_UNKNOWN
        payload = {"value": value, "witness": witness.to_json(), "method": "oracle"}
        result_value = value
    else:
        try:
            res = dist_exact(G, budget)
        except BudgetExceeded as exc:
            payload = {"value": "unknown", "method": "exact", "reason": str(exc)}
            out.write(_dump(payload) if cfg.fmt == "json" else _table(list(payload.items())))
            return EXIT_UNKNOWN
        payload = res.to_json() | {"method": "exact"}
        witness = res.witness
        result_value = res.value
    if cfg.fmt == "dot":
        out.write(to_dot(G, witness))
    elif cfg.fmt == "table":
        rows = [(k, payload[k]) for k in sorted(payload) if k != "stats"]
        out.write(_table([(k, json.dumps(v) if isinstance(v, list) else v) for k, v in rows]))
    else:
        out.write(_dump(payload))
    return EXIT_OK if result_value is not None else EXIT_UNKNOWN


def cmd_functigraph(args, cfg: CliConfig, out) -> int:
    data = _load_json(args.spec)
    try:
        F = functigraph_from_json(data)
    except GraphError as exc:
        raise GraphError(f"{args.spec}: {exc}") from None
    if args.stats:
        st = F.stats
        if cfg.fmt == "table":
            out.write(_table([("s", st.s), ("l", st.l), ("m", st.m), ("fibers", list(st.fibers))]))
        else:
            out.write(_dump(st.to_json()))
    elif args.emit_dot or cfg.fmt == "dot":
        out.write(to_dot(F.composite, name="functigraph"))
    else:
        out.write(_dump(F.composite.to_json()))
    return EXIT_OK


def _sidecar(path: Path) -> Path:
    return path.with_name(path.stem + ".predictions.json")


def cmd_construct(args, cfg: CliConfig, out) -> int:
    try:
        spec = construct(args.family, args.t)
    except ValueError as exc:
        raise GraphError(str(exc)) from None
    body = _dump(build_functigraph(spec.graph, spec.g).to_json())
    preds = _dump(spec.predictions())
    if args.out:
        path = Path(args.out)
        path.write_text(body)
        _sidecar(path).write_text(preds)
        out.write(f"wrote {path} and {_sidecar(path)}\n")
    else:
        out.write(body)
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig, out) -> int:
    profile = os.environ.get("DIST_BUDGET_PROFILE", "desk")
    overrides = {
        "max_colorings": cfg.max_colorings,
        "max_group_order": cfg.max_group_order,
        "max_nodes": cfg.max_nodes,
    }
    if args.max_n_given:
        overrides["complete_fiber_max"] = cfg.max_n
    try:
        hcfg = config_for(profile, **overrides)
    except ValueError as exc:
        raise GraphError(f"DIST_BUDGET_PROFILE: {exc}") from None
    names = list(args.suites) + list(args.suite or [])
    try:
        checks = run_suites(names or ["all"], hcfg)
    except KeyError as exc:
        raise GraphError(exc.args[0]) from None
    text = "".join(line + "\n" for line in report_lines(checks))
    summary = summary_table(checks)
    if args.out:
        Path(args.out).write_text(text)
        out.write(summary)
    else:
        out.write(text)
        sys.stderr.write(summary)
    if failures(checks):
        return EXIT_FAIL
    if any(c.verdict == OUT for c in checks):
        return EXIT_UNKNOWN
    return EXIT_OK


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "table"), default="json")
    common.add_argument("--max-colorings", type=int, default=50_000_000)
    common.add_argument("--max-group-order", type=int, default=10**6)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--max-nodes", type=int, default=2_000_000)

    p = argparse.ArgumentParser(prog="functidist", description="Distinguishing numbers of graphs and functigraphs.")
    p.add_argument("--version", action="version", version=f"functidist {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", parents=[common], help="distinguishing number of a graph or functigraph spec")
    d.add_argument("graph")
    d.add_argument("--oracle", action="store_true", help="use the exhaustive oracle instead of the search")
    d.set_defaults(func=cmd_dist)

    f = sub.add_parser("functigraph", parents=[common], help="build a functigraph from a spec file")
    f.add_argument("spec")
    mode = f.add_mutually_exclusive_group()
    mode.add_argument("--emit-dot", action="store_true")
    mode.add_argument("--emit-json", action="store_true")
    mode.add_argument("--stats", action="store_true")
    f.set_defaults(func=cmd_functigraph)

    c = sub.add_parser("construct", parents=[common], help="emit a stem-family construction")
    c.add_argument("family", choices=sorted(FAMILIES))
    c.add_argument("t", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="run verification suites, JSONL report")
    v.add_argument("suites", nargs="*", metavar="SUITE", help=f"one of {', '.join(SUITES)} or all")
    v.add_argument("--suite", action="append")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.max_n_given = args.max_n is not None
    try:
        cfg = CliConfig(
            command=args.command,
            max_group_order=args.max_group_order,
            max_colorings=args.max_colorings,
            max_n=args.max_n if args.max_n is not None else 400,
            max_nodes=args.max_nodes,
            fmt=args.format,
        )
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args, cfg, sys.stdout)
    except (GraphError, ValueError) as exc:
        sys.stderr.write(f"functidist: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
