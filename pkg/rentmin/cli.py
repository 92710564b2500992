"""Command-line interface: gen, simulate, opt, check and sweep."""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import json
import logging
from pathlib import Path
import sys
from typing import Any

from rentmin.diagnostics import (
    GENERATOR_INVALID_PARAMETERS,
    Diagnostic,
    InvariantBreach,
    ValidationError,
    render_report,
)
from rentmin.generators import GenKind, GenSpec, generate
from rentmin.model import Instance, instance_digest, parse_instance, parse_trace, serialize_instance
from rentmin.oracle import OracleStrategy
from rentmin.pipeline import (
    OptAlgorithm,
    SweepOptions,
    aggregate_record,
    run_check,
    run_opt,
    run_simulate,
    run_sweep,
    simulate_document,
    write_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# flag dest → GenSpec field
_GENERATOR_FLAGS = {
    "kind": "kind",
    "seed": "seed",
    "n": "n",
    "horizon": "horizon",
    "T": "T",
    "lam": "lambda",
    "min_window": "min_window",
    "max_window": "max_window",
    "max_jobs": "max_jobs",
}


def _add_generator_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=[kind.value for kind in GenKind], default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--n", type=int, default=None, help="Job count (waves for late-emergence)")
    parser.add_argument("--horizon", type=int, default=None)
    parser.add_argument("--T", dest="T", type=int, default=None, help="Rent length")
    parser.add_argument("--lambda", dest="lam", type=int, default=None, help="Delay λ")
    parser.add_argument("--min-window", type=int, default=None)
    parser.add_argument("--max-window", type=int, default=None)
    parser.add_argument("--max-jobs", type=int, default=None, help="Exhaustive grid: jobs per instance")
    parser.add_argument("--spec", type=Path, default=None, help="JSON generator spec; flags override it")
    parser.add_argument("--count", type=int, default=1, help="Random instances to draw")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rentmin", description="Online rent minimization experiments")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate instances")
    _add_generator_args(gen)
    gen.add_argument("--out", type=Path, default=None, help="File for one instance, directory for many")
    gen.set_defaults(handler=_cmd_gen)

    simulate = commands.add_parser("simulate", help="Run the online algorithm and write its trace")
    simulate.add_argument("--instance", type=Path, required=True)
    simulate.add_argument("--out", type=Path, default=None)
    simulate.add_argument("--strategy", choices=[s.value for s in OracleStrategy], default=OracleStrategy.MATCHING)
    simulate.set_defaults(handler=_cmd_simulate)

    opt = commands.add_parser("opt", help="Offline OPT, lower bound or 2-approximation")
    opt.add_argument("--instance", type=Path, required=True)
    opt.add_argument("--algorithm", choices=[a.value for a in OptAlgorithm], default=OptAlgorithm.BRUTE)
    opt.add_argument("--k-max", type=int, default=None)
    opt.set_defaults(handler=_cmd_opt)

    check = commands.add_parser("check", help="Verify a trace against its instance")
    check.add_argument("--instance", type=Path, required=True)
    check.add_argument("--trace", type=Path, required=True)
    check.set_defaults(handler=_cmd_check)

    sweep = commands.add_parser("sweep", help="Competitive-ratio sweep over generated instances")
    _add_generator_args(sweep)
    sweep.add_argument("--exhaustive", action="store_true", help="Shorthand for --kind exhaustive")
    sweep.add_argument("--k-max", type=int, default=None)
    sweep.add_argument("--jobs", type=int, default=1, help="Parallel worker processes")
    sweep.add_argument("--out", type=Path, default=None, help="Directory for ratios.csv and ratios.json")
    sweep.add_argument("--no-progress", action="store_true")
    sweep.add_argument("--tie-break", action="store_true", help="Also compare reversed within-τ order")
    sweep.set_defaults(handler=_cmd_sweep)
    return parser


def _gen_spec(args: argparse.Namespace) -> GenSpec:
    document: dict[str, Any] = {}
    if args.spec is not None:
        try:
            loaded = json.loads(args.spec.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, f"Spec file: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ValidationError.from_spec(GENERATOR_INVALID_PARAMETERS, "Spec file must hold an object.")
        document.update(loaded)
    for dest, key in _GENERATOR_FLAGS.items():
        value = getattr(args, dest)
        if value is not None:
            document[key] = value
    if getattr(args, "exhaustive", False):
        document["kind"] = GenKind.EXHAUSTIVE
    return GenSpec.from_mapping(document)


def _read_instance(path: Path) -> Instance:
    return parse_instance(path.read_bytes())


def _emit(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8") + "\n")
    else:
        out.write_bytes(data)


def _cmd_gen(args: argparse.Namespace) -> int:
    instances = list(generate(_gen_spec(args), count=args.count))
    if len(instances) == 1:
        _emit(serialize_instance(instances[0]), args.out)
        return EXIT_OK
    if args.out is None:
        for inst in instances:
            _emit(serialize_instance(inst), None)
        return EXIT_OK
    args.out.mkdir(parents=True, exist_ok=True)
    for inst in instances:
        (args.out / f"{instance_digest(inst)}.json").write_bytes(serialize_instance(inst))
    logger.info("gen: wrote %d instances to %s", len(instances), args.out)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    result = run_simulate(_read_instance(args.instance), strategy=OracleStrategy(args.strategy))
    logger.info(
        "simulate: %d rents in %d batches over %d events",
        result.trace.total_rents,
        result.trace.total_batches,
        len(result.trace.steps),
    )
    _emit(simulate_document(result), args.out)
    return EXIT_OK


def _cmd_opt(args: argparse.Namespace) -> int:
    result = run_opt(_read_instance(args.instance), OptAlgorithm(args.algorithm), k_max=args.k_max)
    document: dict[str, Any] = {
        "algorithm": str(result.algorithm),
        "count": result.count,
        "method": str(result.method),
    }
    if result.rents is not None:
        document["rents"] = [list(rent.as_tuple()) for rent in result.rents]
    _emit(json.dumps(document, sort_keys=True).encode("utf-8"), None)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    result = run_check(inst, parse_trace(args.trace.read_bytes()))
    _print_diagnostics(result.diagnostics)
    if result.has_errors:
        return EXIT_CHECK
    print("ok")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    options = SweepOptions(
        workers=args.jobs,
        k_max=args.k_max,
        tie_break_study=args.tie_break,
        show_progress=not args.no_progress,
    )
    result = run_sweep(generate(_gen_spec(args), count=args.count), options)
    _print_diagnostics(result.diagnostics)
    if args.out is not None:
        csv_path, json_path = write_report(result.report, args.out)
        logger.info("sweep: wrote %s and %s", csv_path, json_path)
    print(json.dumps(aggregate_record(result.report), sort_keys=True))
    return EXIT_CHECK if result.has_errors else EXIT_OK


def _print_diagnostics(diagnostics: Sequence[Diagnostic]) -> None:
    if diagnostics:
        print(render_report(diagnostics), file=sys.stderr)


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def app(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except ValidationError as exc:
        print(exc.diagnostic.render(), file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantBreach as exc:
        print(exc.diagnostic.render(), file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    raise SystemExit(app())
