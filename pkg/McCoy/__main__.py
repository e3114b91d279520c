# McCoy/__main__.py

import argparse
import asyncio
import sys
from typing import Any, Dict, List, Optional

from uvloop import install

from McCoy import __version__
from McCoy.core.mccoy import PropertyKind, check_property
from McCoy.core.radical import radical_report
from McCoy.core.ring import check_axioms, idempotents, is_commutative
from McCoy.suite import SuiteContext, run_suite
from McCoy.utils.evaluator import Evaluator
from McCoy.utils.exceptions import (
    BudgetExceeded,
    ConsistencyFault,
    ConstructionError,
    McCoyError,
    ParseError,
    RingMismatch,
    UnknownName,
)
from McCoy.utils.logger import logger
from McCoy.utils.messages import (
    MSG_CLI_DESCRIPTION,
    MSG_CLI_INTERRUPTED,
    MSG_CLI_UNEXPECTED,
    MSG_HUNT_CLEAR,
    MSG_HUNT_FOUND,
)
from McCoy.utils.registry import Registry, describe
from McCoy.utils.render_template import render_report
from McCoy.utils.report import envelope, to_json
from McCoy.vars import Var

VERSION = __version__

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_BUDGET = 4
EXIT_FAULT = 5

DESK_RINGS = [
    "Z2", "Z4", "Z6", "Z8", "TruncSeries(Z2,3)", "Prod(Z2,Z2)",
    "Tri(Z2,2)", "S(Z2,2)", "T(Z2,3)", "Mat(Z2,2)",
]


def print_banner():
    banner = f"""
╔═════════════════════════════════════════════════════╗
║                                                     ║
║   ███╗   ███╗ ██████╗ ██████╗ ██████╗ ██╗   ██╗     ║
║   ████╗ ████║██╔════╝██╔════╝██╔═══██╗╚██╗ ██╔╝     ║
║   ██╔████╔██║██║     ██║     ██║   ██║ ╚████╔╝      ║
║   ██║╚██╔╝██║██║     ██║     ██║   ██║  ╚██╔╝       ║
║   ██║ ╚═╝ ██║╚██████╗╚██████╗╚██████╔╝   ██║        ║
║   ╚═╝     ╚═╝ ╚═════╝ ╚═════╝ ╚═════╝    ╚═╝        ║
║                                                     ║
║            Finite Ring Workbench v{VERSION}             ║
╚═════════════════════════════════════════════════════╝
"""
    print(banner, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mccoy", description=MSG_CLI_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--budget", type=int, default=None, help="zero-pair search budget (partial products)")
    parser.add_argument("--workers", type=int, default=None, help="parallel search blocks / suite jobs")
    parser.add_argument("--format", choices=("json", "text"), default=None, dest="fmt")
    parser.add_argument("--seedless", action="store_true", help="accepted for compatibility; runs are always deterministic")
    parser.add_argument("--registry", default=None, help="TOML file with extra sigma/bimodule definitions")

    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="construct a ring, check its axioms and list its elements")
    build.add_argument("expr")
    build.add_argument("--limit", type=int, default=64)

    radical = sub.add_parser("radical", help="Jacobson radical, units, nilpotents and idempotents")
    radical.add_argument("expr")

    check = sub.add_parser("check", help="decide a McCoy-type property up to a degree bound")
    check.add_argument("expr")
    _property_args(check)

    hunt = sub.add_parser("hunt", help="stream counterexamples across a list of rings")
    hunt.add_argument("exprs", nargs="*")
    _property_args(hunt, default_family="j-mccoy")

    validate = sub.add_parser("validate", help="run a validation suite")
    validate.add_argument("--suite", default="paper")
    validate.add_argument("--truncation", type=int, default=None)
    validate.add_argument("--only", action="append", default=None, help="run only the named job (repeatable)")

    sub.add_parser("registry", help="list the known sigma and bimodule names")
    return parser


def _property_args(parser: argparse.ArgumentParser, default_family: str = "mccoy") -> None:
    parser.add_argument("--property", default=default_family, choices=("mccoy", "nc-mccoy", "j-mccoy"))
    parser.add_argument("--side", default="right", choices=("right", "left"))
    parser.add_argument("--max-degree", type=int, default=1, dest="max_degree")


# ---------------- COMMANDS ----------------

def cmd_build(args, evaluator: Evaluator):
    R = evaluator(args.expr)
    axioms = check_axioms(R)
    shown = max(0, min(args.limit, R.order))
    body = {
        "ring": R.label,
        "order": R.order,
        "commutative": is_commutative(R),
        "axioms": axioms.to_dict(),
        "idempotents": R.format_set(idempotents(R)),
        "elements": [R.element_label(x) for x in range(shown)],
        "truncated": shown < R.order,
    }
    return body, EXIT_OK if axioms.ok else EXIT_FAULT


def cmd_radical(args, evaluator: Evaluator):
    return radical_report(evaluator(args.expr)).to_dict(), EXIT_OK


def cmd_check(args, evaluator: Evaluator):
    R = evaluator(args.expr)
    kind = PropertyKind.parse(args.property, args.side)
    verdict = check_property(R, kind, args.max_degree, workers=args.workers, budget=args.budget)
    return verdict.to_dict(), EXIT_OK if verdict.holds else EXIT_COUNTEREXAMPLE


def cmd_hunt(args, evaluator: Evaluator):
    kind = PropertyKind.parse(args.property, args.side)
    results: List[Dict[str, Any]] = []
    found = False
    for expr in args.exprs or DESK_RINGS:
        R = evaluator(expr)
        try:
            verdict = check_property(R, kind, args.max_degree, workers=args.workers, budget=args.budget, log_limit=0)
        except BudgetExceeded as e:
            logger.warning(f"Hunt skipped {R.label}: {e}")
            results.append({"ring": R.label, "outcome": None, "counterexample": None, "refused": str(e)})
            continue
        if verdict.holds:
            logger.info(MSG_HUNT_CLEAR.format(label=R.label, dmax=args.max_degree))
        else:
            found = True
            pair = verdict.counterexample
            logger.info(MSG_HUNT_FOUND.format(label=R.label, f=pair.f, g=pair.g))
        results.append({
            "ring": R.label,
            "outcome": verdict.outcome,
            "counterexample": verdict.counterexample.to_dict() if verdict.counterexample else None,
            "refused": None,
        })
    body = {"property": kind.to_dict(), "dmax": args.max_degree, "results": results}
    return body, EXIT_COUNTEREXAMPLE if found else EXIT_OK


async def cmd_validate(args, evaluator: Evaluator):
    truncation = Var.EXAMPLE_TRUNCATION if args.truncation is None else args.truncation
    context = SuiteContext(evaluator, truncation=truncation, budget=args.budget)
    report = await run_suite(args.suite, context=context, workers=args.workers, only=args.only)
    return report.to_dict(), EXIT_OK if report.ok else EXIT_FAULT


def cmd_registry(args, evaluator: Evaluator):
    return describe(evaluator.registry), EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "radical": cmd_radical,
    "check": cmd_check,
    "hunt": cmd_hunt,
    "registry": cmd_registry,
}
MAIN_THREAD_COMMANDS = {"check", "hunt"}
TEMPLATES = {"build": "build", "radical": "radical", "check": "verdict", "hunt": "hunt", "validate": "suite"}


async def emit(command: str, body: Dict[str, Any], fmt: str) -> None:
    if fmt == "text" and command in TEMPLATES:
        sys.stdout.write(await render_report(TEMPLATES[command], **body))
    else:
        sys.stdout.write(to_json(envelope(command, body)) + "\n")
    sys.stdout.flush()


def exit_code_for(error: McCoyError) -> int:
    if isinstance(error, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(error, ConsistencyFault):
        return EXIT_FAULT
    if isinstance(error, (ParseError, UnknownName, ConstructionError, RingMismatch)):
        return EXIT_USAGE
    return EXIT_FAULT


async def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if Var.SHOW_BANNER:
        print_banner()
    fmt = args.fmt or Var.REPORT_FORMAT
    try:
        evaluator = Evaluator(Registry(args.registry or Var.REGISTRY_FILE or None))
        if args.command == "validate":
            body, code = await cmd_validate(args, evaluator)
        elif args.command in MAIN_THREAD_COMMANDS:
            # worker processes are forked from the main thread only
            body, code = COMMANDS[args.command](args, evaluator)
        else:
            body, code = await asyncio.to_thread(COMMANDS[args.command], args, evaluator)
        await emit(args.command, body, fmt)
        return code
    except McCoyError as e:
        logger.debug(f"{args.command} stopped with {type(e).__name__}: {e}")
        print(str(e), file=sys.stderr)
        return exit_code_for(e)


def run(argv: Optional[List[str]] = None) -> int:
    install()
    try:
        return asyncio.run(main(argv))
    except KeyboardInterrupt:
        print(MSG_CLI_INTERRUPTED, file=sys.stderr)
        return 130
    except Exception as e:
        logger.critical(f"Unexpected error: {e}", exc_info=True)
        print(MSG_CLI_UNEXPECTED.format(error=e), file=sys.stderr)
        return EXIT_FAULT


if __name__ == "__main__":
    sys.exit(run())
