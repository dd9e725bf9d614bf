"""
Command-line surface of the workbench.

    python cli.py run "(9, 0, 11, 1, 15, 2, 17, 3, 1, 4, 23, 5, 24, 6, 3, 7, 21, 9, 0)" --rado
    python cli.py recombine --sources row:5,row:2,row:1 --cuts 7,9 --step-limit 20000000
    python cli.py search --pool builtin --select row:1,row:2,row:5 --k 3 --step-limit 20000000 --out found.jsonl
    python cli.py verify --golden
"""
import argparse
import json
import logging
import re
import sys
from pathlib import Path

import uvicorn
from pydantic import ValidationError

from config import config
from exception.exceptions import (
    ActionCodeError,
    LineageError,
    MachineNameError,
    OutcomeNotHaltedError,
    PoolLoadError,
    RecombinationError,
    RuleListError,
    SearchOutputError,
    UnknownMachineError,
)
from models.machine.MachineModels import Machine
from models.search.SearchModels import SearchConfig, VerifyVerdict
from pool_storage.BuiltinCatalog import builtin_catalog, golden_recombinations
from pool_storage.PoolStorage import export_pool, format_pool, registry_for
from pool_storage.Utility import resolve_machine
from services.recombinator.LineageService import evaluate_lineage, format_lineage, parse_lineage
from services.recombinator.Recombinator import make_spec, recombine_with_provenance
from services.search.SearchService import classify_mpp, search
from services.search.VerifyService import entries_for_verification, verify_catalog
from services.simulator.TuringSimulator import rado_report, run_with_tape
from services.tm_core.MachineCodec import diff_machines, encode_name, format_rules, parse_rules

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    ActionCodeError,
    LineageError,
    MachineNameError,
    OutcomeNotHaltedError,
    PoolLoadError,
    RecombinationError,
    RuleListError,
    SearchOutputError,
    UnknownMachineError,
    ValidationError,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2

_SOURCE_TOKEN = re.compile(r"[({\[][^)}\]]*[)}\]]|[^,\s()]+")


def split_sources(text: str):
    """Split '--sources' on commas, keeping parenthesized machine names whole."""
    return _SOURCE_TOKEN.findall(text)


def split_ints(text: str):
    return [int(token) for token in text.split(",") if token.strip()]


def print_outcome(machine: Machine, outcome, tape=None, rado: bool = False):
    print(f"name:   {encode_name(machine)}")
    print(f"status: {outcome.status.value}")
    print(f"steps:  {outcome.steps}")
    if outcome.halted:
        print(f"ones:   {outcome.ones}")
        print(f"class:  {classify_mpp(outcome)}")
    print(f"extent: {outcome.extent} cells [{outcome.leftmost}, {outcome.rightmost}]")
    if rado:
        report = rado_report(outcome)
        print(f"rado:   steps {report.rado_steps}, ones {report.rado_ones}")
    if tape is not None:
        print(f"tape:   {tape.render()}")


def cmd_run(args) -> int:
    machine = resolve_machine(args.name, registry_for(args.pool, args.states), args.states)
    outcome, tape = run_with_tape(machine, args.step_limit)
    print_outcome(machine, outcome, tape if args.tape else None, args.rado)
    return EXIT_OK


def cmd_decode(args) -> int:
    machine = resolve_machine(args.name, registry_for(args.pool, args.states), args.states)
    print(encode_name(machine))
    print(format_rules(machine))
    return EXIT_OK


def cmd_encode(args) -> int:
    text = Path(args.rules_file).read_text(encoding="utf-8")
    print(encode_name(parse_rules(text, args.states)))
    return EXIT_OK


def cmd_diff(args) -> int:
    registry = registry_for(args.pool, args.states)
    a = resolve_machine(args.a, registry, args.states)
    b = resolve_machine(args.b, registry, args.states)
    differences = diff_machines(a, b)
    for index, code_a, code_b in differences:
        state, read = divmod(index, 2)
        print(f"rule {index} ({state}, {read}): {'-' if code_a is None else code_a} -> {'-' if code_b is None else code_b}")
    print(f"{len(differences)} differing rules")
    return EXIT_OK


def cmd_recombine(args) -> int:
    registry = registry_for(args.pool, args.states)
    sources = [resolve_machine(token, registry, args.states) for token in split_sources(args.sources)]
    machine, provenance = recombine_with_provenance(make_spec(sources, split_ints(args.cuts or "")))
    print(encode_name(machine))
    print("provenance: " + " ".join(str(m) for m in provenance))
    if args.step_limit is not None:
        outcome, _ = run_with_tape(machine, args.step_limit)
        print_outcome(machine, outcome)
    return EXIT_OK


def cmd_lineage(args) -> int:
    lineage = parse_lineage(args.lineage)
    machine = evaluate_lineage(lineage, registry_for(args.pool, args.states))
    print(format_lineage(lineage))
    print(encode_name(machine))
    if args.step_limit is not None:
        outcome, _ = run_with_tape(machine, args.step_limit)
        print_outcome(machine, outcome)
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig(
        pool=args.pool,
        select=args.select,
        k=args.k,
        step_limit=args.step_limit,
        jobs=args.jobs,
        out=args.out,
        dedup=not args.no_dedup,
        min_ones=args.filter_ones,
        min_steps=args.filter_steps,
        states=args.states,
        rounds=args.rounds,
        count_provenance=args.count_provenance,
        csv_mirror=args.csv_mirror,
    )
    result = search(cfg)
    summary = result.summary
    if not args.out:
        for record in result.records:
            print(record.model_dump_json())
    print(f"enumerated {summary.enumerated}, distinct {summary.distinct}, halted {summary.halted}, "
          f"step limit exceeded {summary.step_limit_exceeded}, kept {summary.kept}", file=sys.stderr)
    for label, count in summary.classes.items():
        print(f"  {label}: {count}", file=sys.stderr)
    if summary.max_steps is not None:
        best = summary.max_steps
        print(f"max steps: {best.steps} ({best.mpp_class}) {best.name} via {best.lineage}", file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = golden_recombinations() if args.golden else builtin_catalog()
    if args.export:
        export_pool(entries, args.export)
    else:
        sys.stdout.write(format_pool(entries))
    return EXIT_OK


def cmd_verify(args) -> int:
    entries = entries_for_verification(args.golden, args.pool, args.states)
    report = verify_catalog(entries, args.cap)
    for result in report.results:
        measured = f"ones {result.ones}, steps {result.steps}" if result.ones is not None else f"steps {result.steps}"
        line = f"{result.verdict.value:8} {result.id:10} {measured}"
        if result.reason:
            line += f"  ({result.reason})"
        print(line)
    print(f"{report.passed} PASS, {report.failed} FAIL, "
          f"{sum(1 for r in report.results if r.verdict == VerifyVerdict.MEASURED)} MEASURED")
    if args.json:
        print(json.dumps(report.model_dump(mode="json"), indent=2))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_serve(args) -> int:
    uvicorn.run("app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--states", type=int, default=config.states, help="number of states n (default %(default)s)")
    common.add_argument("--pool", default=None, help="extra pool file whose ids can be used as machines")

    parser = argparse.ArgumentParser(prog="bbwb", description="Busy Beaver machine workbench")
    parser.add_argument("--log-level", default=config.log_level)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="simulate a machine from the blank tape")
    p.add_argument("name", help="machine name or id such as row:0")
    p.add_argument("--step-limit", type=int, default=config.step_limit)
    p.add_argument("--rado", action="store_true", help="also print Radó-model counts")
    p.add_argument("--tape", action="store_true", help="print the tape around the head")
    p.set_defaults(handler=cmd_run)

    p = sub.add_parser("decode", parents=[common], help="print the rules of a machine name")
    p.add_argument("name")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("encode", parents=[common], help="name the machine of a rule listing file")
    p.add_argument("rules_file")
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("diff", parents=[common], help="list the rules where two machines differ")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=cmd_diff)

    p = sub.add_parser("recombine", parents=[common], help="recombine source machines at cut points")
    p.add_argument("--sources", required=True, help="comma-separated ids or names")
    p.add_argument("--cuts", default="", help="comma-separated nondecreasing cut points")
    p.add_argument("--step-limit", type=int, default=None, help="simulate the result under this cap")
    p.set_defaults(handler=cmd_recombine)

    p = sub.add_parser("lineage", parents=[common], help="evaluate a lineage expression")
    p.add_argument("lineage")
    p.add_argument("--step-limit", type=int, default=None)
    p.set_defaults(handler=cmd_lineage)

    p = sub.add_parser("search", help="enumerate, simulate and persist recombinations")
    p.add_argument("--states", type=int, default=config.states)
    p.add_argument("--pool", default="builtin", help="builtin, golden, all or a pool file")
    p.add_argument("--select", default=None, help="comma-separated pool ids to use, in order")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--step-limit", type=int, default=config.step_limit)
    p.add_argument("--jobs", type=int, default=config.jobs)
    p.add_argument("--out", default=None, help="output file, .jsonl or .csv")
    p.add_argument("--filter-ones", type=int, default=None)
    p.add_argument("--filter-steps", type=int, default=None)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--count-provenance", action="store_true")
    p.add_argument("--csv-mirror", action="store_true")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("catalog", parents=[common], help="print or export the builtin machines")
    p.add_argument("--golden", action="store_true", help="the recombined machines instead of the seeds")
    p.add_argument("--export", default=None, help="write a pool file")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("verify", parents=[common], help="check catalog machines against their counts")
    p.add_argument("--cap", type=int, default=config.step_limit)
    p.add_argument("--golden", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("serve", help="serve the HTTP API")
    p.add_argument("--host", default=config.host)
    p.add_argument("--port", type=int, default=config.port)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    try:
        return args.handler(args)
    except DOMAIN_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
