import argparse
import logging
import logging.config
import sys
from typing import Any, Callable, Dict, List, Optional

from walled_brauer import __version__
from walled_brauer.algebra.coeff_ring import lp_from_json
from walled_brauer.config import get_settings, override_settings
from walled_brauer.orchestration.tasks import (
    dimension_report,
    multiply_files,
    restriction_task,
    run_verification,
    structure_task,
    twist_files,
)
from walled_brauer.storage.serialize import (
    parse_cell,
    parse_shape,
    restriction_csv,
    structure_csv,
    to_json_text,
    write_output,
)
from walled_brauer.types import GenericDelta

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _configure_logging(level: str = "INFO") -> None:
    """Configure structured logging; logs go to stderr so reports stay clean on stdout."""
    logging_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"
            }
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "detailed" if level.upper() == "DEBUG" else "standard",
                "stream": "ext://sys.stderr",
                "level": level.upper()
            }
        },
        "root": {
            "level": "WARNING",
            "handlers": ["console"]
        },
        "loggers": {
            "walled_brauer": {
                "level": level.upper(),
                "handlers": ["console"],
                "propagate": False
            }
        }
    }
    logging.config.dictConfig(logging_config)


logger = logging.getLogger("walled_brauer.main")


# --- rendering ---------------------------------------------------------------


def _parts(parts: List[int]) -> str:
    return ",".join(str(p) for p in parts) if parts else "0"


def _cell(cell: Dict[str, Any]) -> str:
    return f"{_parts(cell['lamL'])};{_parts(cell['lamR'])};l={cell['l']}"


def _dots(pairs: List[List[int]]) -> str:
    def label(d: int) -> str:
        return str(d) if d > 0 else f"{-d}'"

    return " ".join(f"{label(a)}-{label(b)}" for a, b in pairs)


def render_dimensions(payload: Dict[str, Any], fmt: str) -> str:
    rows = [(f"B_{{{payload['r']},{payload['s']}}}", payload["algebra"])]
    if "half" in payload:
        rows.append((f"V^{payload['l']}", payload["half"]))
    if "module" in payload:
        rows.append((f"Δ({_cell(payload['cell'])})", payload["module"]))
    if fmt == "csv":
        return "quantity,dim\n" + "".join(f"{name},{value}\n" for name, value in rows)
    return "".join(f"dim {name} = {value}\n" for name, value in rows)


def render_element(payload: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        lines = ["pairs,coeff"]
        lines += [f"{_dots(t['diagram']['pairs'])},{lp_from_json(t['coeff'])}" for t in payload["terms"]]
        return "\n".join(lines) + "\n"
    header = f"element of B_{{{payload['r']},{payload['s']}}}"
    if not payload["terms"]:
        return f"{header}: 0\n"
    body = "".join(f"  ({lp_from_json(t['coeff'])}) [{_dots(t['diagram']['pairs'])}]\n" for t in payload["terms"])
    return f"{header}:\n{body}"


def render_restriction(payload: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        return restriction_csv(payload)
    shape = payload["shape"]
    lines = [
        f"Res Δ({_cell(payload['cell'])}) to B_{{{shape['r1']},{shape['s1']}}} x B_{{{shape['r2']},{shape['s2']}}}:"
    ]
    lines += [f"  {t['mult']} x Δ({_cell(t['cell1'])}) ⊗ Δ({_cell(t['cell2'])})" for t in payload["terms"]]
    return "\n".join(lines) + "\n"


def render_structure(payload: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        return structure_csv(payload)
    lines = [f"[Δ({_cell(payload['nu1'])})] · [Δ({_cell(payload['nu2'])})] ="]
    lines += [f"  {row['coeff']} x [Δ({_cell(row['cell'])})]" for row in payload["result"]]
    return "\n".join(lines) + "\n"


def render_verification(payload: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        lines = ["suite,passed,checks,delta0_retries"]
        lines += [f"{s['name']},{s['passed']},{s['checks']},{s['delta0_retries']}" for s in payload["suites"]]
        return "\n".join(lines) + "\n"
    lines = []
    for suite in payload["suites"]:
        status = "PASS" if suite["passed"] else "FAIL"
        retries = f", {suite['delta0_retries']} δ0 retries" if suite["delta0_retries"] else ""
        lines.append(f"{status}  {suite['name']} ({suite['checks']} checks{retries})")
    failure = payload["first_failure"]
    if failure:
        lines.append(f"first failure in {failure['suite']}:")
        lines.append(to_json_text(failure["counterexample"] or {"error": failure["error"]}).rstrip())
    else:
        lines.append(f"all {len(payload['suites'])} suites passed (level {payload['level']}, δ0={payload['delta0']})")
    return "\n".join(lines) + "\n"


def _emit(payload: Dict[str, Any], render: Callable[[Dict[str, Any], str], str], fmt: str, output: Optional[str]) -> None:
    text = to_json_text(payload) if fmt == "json" else render(payload, fmt)
    write_output(text, output)


# --- commands ----------------------------------------------------------------


def cmd_dim(args: argparse.Namespace, fmt: str) -> int:
    cell = parse_cell(args.cell) if args.cell else None
    _emit(dimension_report(args.r, args.s, l=args.l, cell=cell), render_dimensions, fmt, args.output)
    return EXIT_OK


def cmd_multiply(args: argparse.Namespace, fmt: str) -> int:
    _emit(multiply_files(args.file_x, args.file_y), render_element, fmt, args.output)
    return EXIT_OK


def cmd_twist(args: argparse.Namespace, fmt: str) -> int:
    _emit(twist_files(args.file_x, args.file_y), render_element, fmt, args.output)
    return EXIT_OK


def cmd_restrict(args: argparse.Namespace, fmt: str) -> int:
    _emit(restriction_task(parse_shape(args.shape), parse_cell(args.cell)), render_restriction, fmt, args.output)
    return EXIT_OK


def cmd_structure_constants(args: argparse.Namespace, fmt: str) -> int:
    payload = structure_task(parse_shape(args.shape), parse_cell(args.nu1), parse_cell(args.nu2))
    _emit(payload, render_structure, fmt, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, fmt: str) -> int:
    report = run_verification(level=args.level)
    _emit(report, render_verification, fmt, args.output)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default=None, help="Output format")
    common.add_argument("--delta0", default=None, help="Rational stand-in for delta in matrix checks, e.g. 104729 or 22/7")
    common.add_argument("--max-size", type=int, default=None, help="Enumeration bound on r+s")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized checks")
    common.add_argument("--output", default=None, help="Write the report to this file instead of stdout")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="walled_brauer",
        description="Exact computations in walled Brauer algebras B_{r,s}(δ).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    dim = commands.add_parser("dim", parents=[common], help="Dimensions of B_{r,s}, V^l or a cell module")
    dim.add_argument("--r", type=int, required=True)
    dim.add_argument("--s", type=int, required=True)
    choice = dim.add_mutually_exclusive_group()
    choice.add_argument("--l", type=int, default=None, help="Arc count of the half-diagram module")
    choice.add_argument("--cell", default=None, help="Cell label 'lamL;lamR;l=K'")
    dim.set_defaults(handler=cmd_dim)

    for name, handler, text in (
        ("multiply", cmd_multiply, "Product of two elements stored as JSON"),
        ("twist", cmd_twist, "Twisted tensor product of two elements stored as JSON"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("file_x")
        sub.add_argument("file_y")
        sub.set_defaults(handler=handler)

    restrict = commands.add_parser("restrict", parents=[common], help="Branching of a cell module")
    restrict.add_argument("--shape", required=True, help="Split 'r1,s1|r2,s2'")
    restrict.add_argument("--cell", required=True, help="Cell label 'lamL;lamR;l=K'")
    restrict.set_defaults(handler=cmd_restrict)

    structure = commands.add_parser("structure-constants", parents=[common], help="Induction product of two cell classes")
    structure.add_argument("--shape", required=True, help="Split 'r1,s1|r2,s2'")
    structure.add_argument("--nu1", required=True, help="Cell label of the first factor")
    structure.add_argument("--nu2", required=True, help="Cell label of the second factor")
    structure.set_defaults(handler=cmd_structure_constants)

    verify = commands.add_parser("verify", parents=[common], help="Run the invariant suites")
    verify.add_argument("--level", choices=["quick", "full"], default="quick")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point.

    Returns:
        0 on success, 1 on verification failure or an unexpected error,
        2 on invalid input
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.delta0 is not None:
            GenericDelta(value=args.delta0)
        settings = override_settings(
            max_size=args.max_size,
            delta0=args.delta0,
            seed=args.seed,
            output_format=args.format,
            log_level=args.log_level,
        )
    except ValueError as e:
        print(f"walled_brauer: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _configure_logging(settings.log_level)
    logger.debug(f"Running {args.command} with {settings}")

    try:
        return args.handler(args, get_settings().output_format)
    except ValueError as e:
        logger.warning(f"Invalid input for {args.command}: {e}")
        print(f"walled_brauer: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Error running {args.command}: {e}", exc_info=True)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
