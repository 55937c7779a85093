"""Batch front door: parse complexes, dispatch commands, emit JSON reports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import cells
from .classify import classify
from .cohomology import hochster_betti, hochster_table, is_trivial_ring
from .complexes import SimplicialComplex, full_subcomplex
from .errors import GhostVertexError, InputError, MacError, ResourceError
from .generate import FAMILIES, generate
from .loops import free_lie_ranks, growth_certificate, product_ranks, wedge_model, SphereModel
from .nonfaces import minimal_nonfaces

COMMANDS = (
    "classify",
    "nonfaces",
    "betti",
    "oracle-betti",
    "ring",
    "loop-ranks",
    "crosscheck",
    "generate",
)

DEFAULT_LIMIT_N = {
    "classify": 24,
    "nonfaces": 24,
    "betti": 20,
    "ring": 20,
    "loop-ranks": 20,
    "oracle-betti": 12,
    "crosscheck": 12,
}


@dataclass
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    fmt: str = "json"
    limit_n: int | None = None
    limit_cells: int = cells.DEFAULT_CELL_LIMIT
    seed: int = 0
    family: str | None = None
    size: int | None = None
    truncation: int = 24
    dump_cells: bool = False


def _load_complex(text: str) -> SimplicialComplex:
    source = text.strip()
    if source == "-":
        source = sys.stdin.read().strip()
    elif not source.startswith("{"):
        try:
            with open(text) as handle:
                source = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read input file {text!r}: {exc}")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}")
    return SimplicialComplex.from_json_dict(data)


def _check_limit(K: SimplicialComplex, config: RunConfig) -> None:
    limit = config.limit_n
    if limit is None:
        limit = DEFAULT_LIMIT_N.get(config.command, 63)
    if K.n > limit:
        raise ResourceError(
            f"n={K.n} exceeds the limit of {limit} for '{config.command}' "
            "(raise it with --limit-n)"
        )


def _report_classify(K, config):
    return classify(K).to_json_dict()


def _report_nonfaces(K, config):
    return minimal_nonfaces(K).to_json_dict()


def _report_betti(K, config):
    return hochster_table(K).to_json_dict()


def _report_oracle(K, config):
    complex = cells.build(K, cell_limit=config.limit_cells)
    report = {"betti": cells.oracle_betti(complex), "cells": complex.cell_count}
    if config.dump_cells:
        report["chain"] = complex.to_json_dict(include_boundary=True)
    return report


def _report_ring(K, config):
    trivial, certificate = is_trivial_ring(K)
    return {"trivial": trivial, "certificate": certificate}


def _report_loop_ranks(K, config):
    verdict = classify(K)
    if verdict.is_elliptic:
        model = SphereModel(kind="product", dims=verdict.sphere_dims)
        series = product_ranks(model, N=config.truncation)
    else:
        witness = full_subcomplex(K, verdict.witness_vertices)
        model = wedge_model(witness)
        series = free_lie_ranks(model, N=config.truncation)
    growth = growth_certificate(series)
    return {
        "model": model.to_json_dict(),
        "ranks": list(series.ranks[1:]),
        "verdict": growth.kind,
        "ratio": growth.ratio,
    }


def _report_crosscheck(K, config):
    hochster = hochster_betti(K)
    oracle = cells.oracle_betti(cells.build(K, cell_limit=config.limit_cells))
    return {"hochster": hochster, "oracle": oracle, "equal": hochster == oracle}


HANDLERS = {
    "classify": _report_classify,
    "nonfaces": _report_nonfaces,
    "betti": _report_betti,
    "oracle-betti": _report_oracle,
    "ring": _report_ring,
    "loop-ranks": _report_loop_ranks,
    "crosscheck": _report_crosscheck,
}

_ERROR_CODES = (
    (ResourceError, 3),
    (GhostVertexError, 2),
    (InputError, 2),
    (MacError, 2),
)


def _error_report(exc: MacError) -> tuple[int, dict]:
    for klass, code in _ERROR_CODES:
        if isinstance(exc, klass):
            return code, {"error": {"type": type(exc).__name__, "message": str(exc)}}
    raise exc


def _run_one(config: RunConfig, source: str) -> tuple[int, dict]:
    try:
        K = _load_complex(source)
        _check_limit(K, config)
        return 0, HANDLERS[config.command](K, config)
    except MacError as exc:
        return _error_report(exc)


def _worker_count(njobs: int) -> int:
    env = os.environ.get("MAC_THREADS")
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            raise InputError(f"MAC_THREADS must be an integer, got {env!r}")
    else:
        cap = os.cpu_count() or 1
    return max(1, min(cap, njobs))


def run(config: RunConfig) -> tuple[int, object]:
    """Execute a command; returns (exit code, JSON-serialisable report)."""
    if config.command == "generate":
        try:
            K = generate(config.family, size=config.size, seed=config.seed)
            return 0, K.to_json_dict()
        except MacError as exc:
            return _error_report(exc)
    if config.command not in HANDLERS:
        return 2, {"error": {"type": "InputError", "message": f"unknown command {config.command!r}"}}
    if not config.inputs:
        return 2, {"error": {"type": "InputError", "message": "no --input given"}}
    if len(config.inputs) == 1:
        return _run_one(config, config.inputs[0])
    try:
        workers = _worker_count(len(config.inputs))
    except MacError as exc:
        return _error_report(exc)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda src: _run_one(config, src), config.inputs))
    code = max(c for c, _ in results)
    batch = [
        {"input": label, "report": report}
        for label, (_, report) in zip(config.inputs, results)
    ]
    return code, batch


def _render_text(command: str, report) -> str:
    if isinstance(report, list):
        return "\n".join(
            f"{item['input']}: {_render_text(command, item['report'])}" for item in report
        )
    if "error" in report:
        err = report["error"]
        return f"error[{err['type']}]: {err['message']}"
    if command == "classify":
        if report["kind"] == "elliptic":
            return f"elliptic: spheres {report['spheres']}, disk {report['disk']}"
        return (
            f"hyperbolic: witness {report['witness_I']}, "
            f"non-faces {report['witness_nonfaces']}"
        )
    if command == "nonfaces":
        return f"n={report['n']}, minimal non-faces {report['members']}"
    if command == "betti":
        return f"betti {report['betti']} ({len(report['entries'])} table entries)"
    if command == "oracle-betti":
        return f"betti {report['betti']} ({report['cells']} cells)"
    if command == "ring":
        state = "trivial" if report["trivial"] else "non-trivial"
        return f"{state} ring; certificate {report['certificate']}"
    if command == "loop-ranks":
        ratio = f", ratio {report['ratio']}" if report["ratio"] is not None else ""
        return f"{report['verdict']}{ratio}; ranks {report['ranks']}"
    if command == "crosscheck":
        state = "agree" if report["equal"] else "DISAGREE"
        return f"engines {state}: hochster {report['hochster']}, oracle {report['oracle']}"
    if command == "generate":
        return f"n={report['n']}, facets {report['facets']}"
    return json.dumps(report, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mac",
        description="Classify moment-angle complexes and verify the result.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--format", choices=("json", "text"), default="json")
        cmd.add_argument("--seed", type=int, default=0)
        if name == "generate":
            cmd.add_argument("--family", choices=FAMILIES, required=True)
            cmd.add_argument(
                "--size",
                type=int,
                required=True,
                help="dimension q (simplex/boundary), length m (cycle), "
                "factor count k (cross_polytope) or vertex count n (random)",
            )
        else:
            cmd.add_argument(
                "--input",
                action="append",
                required=True,
                help="path to a complex JSON file, inline JSON, or - for stdin",
            )
            cmd.add_argument("--limit-n", type=int, default=None)
            cmd.add_argument("--limit-cells", type=int, default=cells.DEFAULT_CELL_LIMIT)
        if name == "loop-ranks":
            cmd.add_argument("--truncation", type=int, default=24)
        if name == "oracle-betti":
            cmd.add_argument("--dump-cells", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        inputs=tuple(getattr(args, "input", None) or ()),
        fmt=args.format,
        limit_n=getattr(args, "limit_n", None),
        limit_cells=getattr(args, "limit_cells", cells.DEFAULT_CELL_LIMIT),
        seed=args.seed,
        family=getattr(args, "family", None),
        size=getattr(args, "size", None),
        truncation=getattr(args, "truncation", 24),
        dump_cells=getattr(args, "dump_cells", False),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    code, report = run(config)
    if config.fmt == "text":
        print(_render_text(config.command, report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
