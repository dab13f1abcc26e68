"""
Batch command line front end.

Every invocation prints a report followed by exactly one ``RESULT: <verdict>`` line. Exit codes: 0 success or
positive verdict, 1 negative verdict (countermodel found, proof rejected, statement violated, ...), 2 usage, parse
or file format error, 3 internal error.
"""
import argparse
import sys
from dataclasses import dataclass, field

from ialcbench.errors import (
    IALCError,
    ParseError,
    ModelFormatError,
    BoundError,
    CapExceededError,
    UnmappedNominalError,
)
from ialcbench.logging import logger, set_logging_level, LEVEL_NAMES
from ialcbench.syntax import (
    parse_concept,
    parse_statement,
    parse_item,
    parse_sequent,
    print_item,
    print_sequent,
    is_concept,
    concept_depth,
)
from ialcbench.semantics import (
    load_interpretation,
    dumps_interpretation,
    eval_concept,
    satisfies_statement,
    sequent_valid,
    find_countermodel,
)
from ialcbench.calculus import (
    load_proof,
    check_proof,
    prove_bounded,
    dumps_proof,
    tree_depth,
    tree_size,
)
from ialcbench.sdl import (
    load_trace,
    check_derivation,
    parse_formula,
    print_formula,
    sdl_find_model,
)
from ialcbench.tasks import DEMOS, judge_corpus
from ialcbench.corpus import load_manifest

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(IALCError, ValueError):
    """Malformed command line."""


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


class _HelpRequested(Exception):
    def __init__(self, text):
        super().__init__(text)
        self.text = text


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing and exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        raise _HelpRequested(self.format_help())

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or f"{self.prog}: exit {status}")
        raise _HelpRequested(message or "")


@dataclass
class CommandResult:
    """
    Outcome of one invocation.

    Attributes
    ----------
    exit_code : int

    report : list of str
        Lines for standard output, not including the RESULT line.

    result : str
        Verdict printed on the RESULT line.

    errors : list of str
        Lines for standard error.
    """

    exit_code: int
    report: list = field(default_factory=list)
    result: str = ""
    errors: list = field(default_factory=list)

    @property
    def result_line(self):
        return f"RESULT: {self.result}"

    def stdout(self):
        return "".join(line + "\n" for line in self.report + [self.result_line])


class _Output:
    """Collects plain lines and key/value records; renders one of them depending on --format."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.records = []

    def say(self, text=""):
        self.lines.extend(text.split("\n") if text else [""])

    def record(self, key, value):
        self.records.append((key, value))

    def render(self):
        if self.fmt == "records":
            return [f"{k}={v}" for k, v in self.records]
        return self.lines


# --- commands ------------------------------------------------------------------------------------------------


def _cmd_parse(args, out):
    text = args.expr
    if "|-" in text:
        seq = parse_sequent(text)
        out.say(print_sequent(seq))
        out.record("kind", "sequent")
        out.record("text", print_sequent(seq))
        return EXIT_OK, "sequent"
    item = parse_item(text)
    kind = "concept" if is_concept(item) else "statement"
    out.say(print_item(item))
    out.record("kind", kind)
    out.record("text", print_item(item))
    if is_concept(item):
        out.record("depth", concept_depth(item))
    return EXIT_OK, kind


def _violation_line(v):
    line = f"violation {v.tag} {' '.join(str(w) for w in v.witness)}"
    return line + (f" role {v.role}" if v.role else "")


def _cmd_lint(args, out):
    interp, report = load_interpretation(args.file, close=args.close, strict=False)
    for v in report.violations:
        out.say(_violation_line(v))
    if args.close:
        out.say(dumps_interpretation(interp).rstrip("\n"))
    out.record("entities", interp.n_entities)
    out.record("violations", len(report.violations))
    if report.passed:
        out.say(f"{args.file}: lint passed")
        return EXIT_OK, "lint-passed"
    out.say(f"{args.file}: lint failed ({', '.join(report.tags())})")
    return EXIT_NEGATIVE, "lint-failed"


def _cmd_eval(args, out):
    interp, _ = load_interpretation(args.file)
    concept = parse_concept(args.concept)
    ext = eval_concept(interp, concept)
    members = [e for e in interp.entities if e in ext]
    out.say("{" + ", ".join(members) + "}")
    out.record("extension", ",".join(members))
    out.record("size", len(members))
    return EXIT_OK, f"extension {len(members)}/{interp.n_entities}"


def _cmd_sat(args, out):
    interp, _ = load_interpretation(args.file)
    statement = parse_statement(args.statement)
    holds = satisfies_statement(interp, statement)
    out.say(f"{print_item(statement)} is {'satisfied' if holds else 'violated'}")
    out.record("satisfied", str(holds).lower())
    return (EXIT_OK, "satisfied") if holds else (EXIT_NEGATIVE, "violated")


def _cmd_valid(args, out):
    interp, _ = load_interpretation(args.file)
    seq = parse_sequent(args.sequent)
    holds = sequent_valid(interp, seq)
    out.say(
        f"{print_sequent(seq)} is {'valid' if holds else 'not valid'} in {args.file}"
    )
    out.record("valid", str(holds).lower())
    return (EXIT_OK, "valid") if holds else (EXIT_NEGATIVE, "invalid")


def _cmd_countermodel(args, out):
    seq = parse_sequent(args.sequent)
    witness = find_countermodel(None, seq, args.max)
    if witness is None:
        out.say(f"no countermodel with at most {args.max} entities")
        out.record("countermodel", "none")
        return EXIT_OK, "no-countermodel"
    text = dumps_interpretation(witness)
    out.say(text.rstrip("\n"))
    out.record("countermodel", "found")
    out.record("entities", witness.n_entities)
    return EXIT_NEGATIVE, f"countermodel {witness.n_entities}"


def _cmd_check_proof(args, out):
    tree = load_proof(args.file)
    verdict = check_proof(tree)
    for path, reason in verdict.failures:
        out.say(f"node {path}: {reason}")
        out.record(f"failure.{path}", reason)
    out.say(f"{args.file}: proof {'accepted' if verdict.accepted else 'rejected'}")
    out.record("nodes", tree_size(tree))
    out.record("depth", tree_depth(tree))
    out.record("accepted", str(verdict.accepted).lower())
    return (EXIT_OK, "accepted") if verdict.accepted else (EXIT_NEGATIVE, "rejected")


def _cmd_prove(args, out):
    seq = parse_sequent(args.sequent)
    tree = prove_bounded(seq, args.depth)
    if tree is None:
        out.say(f"no proof of depth at most {args.depth}")
        out.record("proof", "none")
        return EXIT_NEGATIVE, "no-proof"
    out.say(dumps_proof(tree).rstrip("\n"))
    out.record("proof", "found")
    out.record("depth", tree_depth(tree))
    out.record("nodes", tree_size(tree))
    return EXIT_OK, f"proved {tree_depth(tree)}"


def _cmd_sdl_check(args, out):
    trace = load_trace(args.file)
    verdict = check_derivation(trace)
    for step, reason in verdict.failures:
        out.say(f"step {step}: {reason}")
        out.record(f"failure.{step}", reason)
    if trace.steps:
        out.say(f"last step: {print_formula(trace.conclusion)}")
        out.record("conclusion", print_formula(trace.conclusion))
    out.say(f"{args.file}: trace {'accepted' if verdict.accepted else 'rejected'}")
    out.record("accepted", str(verdict.accepted).lower())
    return (EXIT_OK, "accepted") if verdict.accepted else (EXIT_NEGATIVE, "rejected")


def _cmd_sdl_sat(args, out):
    formulas = []
    for arg in args.formulas:
        formulas += [parse_formula(part) for part in arg.split(";") if part.strip()]
    if not formulas:
        raise UsageError("sdl sat: no formula given")
    model = sdl_find_model(formulas, args.max)
    if model is None:
        out.say(
            f"no serial model with at most {args.max} worlds satisfies "
            f"{', '.join(map(print_formula, formulas))}"
        )
        out.record("model", "none")
        return EXIT_NEGATIVE, "unsat"
    out.say(model.describe())
    out.record("model", "found")
    out.record("worlds", len(model.worlds))
    out.record("world", model.world)
    return EXIT_OK, "sat"


def _cmd_demo(args, out):
    report = DEMOS[args.name]()
    out.say(report.text())
    for key, value in report.records.items():
        out.record(key, value)
    if report.ok:
        return EXIT_OK, f"demo {args.name} ok"
    return EXIT_NEGATIVE, f"demo {args.name} failed"


def _cmd_judge(args, out):
    manifest = load_manifest(args.manifest)
    results = judge_corpus(manifest=manifest)
    out.say(results.to_string(index=False))
    for row in results.itertuples(index=False):
        out.record(row.id, row.predicted)
    failed = int((~results["passed"]).sum())
    if failed == 0:
        return EXIT_OK, f"fixtures {len(results)} passed"
    return EXIT_NEGATIVE, f"fixtures {failed} failed"


def build_parser():
    parser = _ArgumentParser(
        prog="ialcbench", description="iALC and SDL reasoning toolkit"
    )
    parser.add_argument(
        "--format",
        choices=["plain", "records"],
        default="plain",
        help="Output format",
    )
    parser.add_argument(
        "--log-level",
        choices=sorted(LEVEL_NAMES),
        default=None,
        help="Logging verbosity",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True

    s = sub.add_parser(
        "parse", help="Parse and pretty print a concept, statement or sequent"
    )
    s.add_argument("expr")
    s.set_defaults(handler=_cmd_parse)

    s = sub.add_parser(
        "lint-model", help="Check frame and heredity conditions of an .ikm file"
    )
    s.add_argument("file")
    s.add_argument(
        "--close",
        action="store_true",
        help="Close atom extensions upward before linting",
    )
    s.set_defaults(handler=_cmd_lint)

    s = sub.add_parser("eval", help="Print the extension of a concept")
    s.add_argument("file")
    s.add_argument("concept")
    s.set_defaults(handler=_cmd_eval)

    s = sub.add_parser("sat", help="Decide a statement on an interpretation")
    s.add_argument("file")
    s.add_argument("statement")
    s.set_defaults(handler=_cmd_sat)

    s = sub.add_parser("valid", help="Decide a sequent on an interpretation")
    s.add_argument("file")
    s.add_argument("sequent")
    s.set_defaults(handler=_cmd_valid)

    s = sub.add_parser(
        "countermodel", help="Search the least countermodel of a sequent"
    )
    s.add_argument("sequent")
    s.add_argument(
        "--max",
        type=_positive_int,
        required=True,
        help="Largest entity count",
    )
    s.set_defaults(handler=_cmd_countermodel)

    s = sub.add_parser("check-proof", help="Check an .ipf proof")
    s.add_argument("file")
    s.set_defaults(handler=_cmd_check_proof)

    s = sub.add_parser("prove", help="Bounded backward proof search")
    s.add_argument("sequent")
    s.add_argument(
        "--depth",
        type=_positive_int,
        required=True,
        help="Largest proof depth",
    )
    s.set_defaults(handler=_cmd_prove)

    s = sub.add_parser("sdl", help="Standard deontic logic commands")
    sdl_sub = s.add_subparsers(dest="sdl_command", parser_class=_ArgumentParser)
    sdl_sub.required = True
    t = sdl_sub.add_parser("check", help="Check an .sdt derivation trace")
    t.add_argument("file")
    t.set_defaults(handler=_cmd_sdl_check)
    t = sdl_sub.add_parser("sat", help="Search a serial Kripke model of formulas")
    t.add_argument(
        "formulas",
        nargs="+",
        help="Formulas, as separate arguments or separated by ';'",
    )
    t.add_argument(
        "--max",
        type=_positive_int,
        required=True,
        help="Largest world count",
    )
    t.set_defaults(handler=_cmd_sdl_sat)

    s = sub.add_parser("demo", help="Run a worked example end to end")
    s.add_argument("name", choices=sorted(DEMOS))
    s.set_defaults(handler=_cmd_demo)

    s = sub.add_parser(
        "judge", help="Judge every fixture of a manifest with the reference reasoner"
    )
    s.add_argument(
        "--manifest", default=None, help="Manifest file (default: the bundled corpus)"
    )
    s.set_defaults(handler=_cmd_judge)
    return parser


def run_command(argv):
    """
    Run one command without touching the process streams.

    Parameters
    ----------
    argv : list of str
        Arguments, without the program name.

    Returns
    -------
    result : CommandResult
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _HelpRequested as e:
        return CommandResult(EXIT_OK, e.text.rstrip("\n").split("\n"), "help")
    except UsageError as e:
        return CommandResult(EXIT_USAGE, [], "usage-error", [str(e)])
    if args.log_level is not None:
        set_logging_level(args.log_level)

    out = _Output(args.format)
    try:
        code, verdict = args.handler(args, out)
    except UsageError as e:
        return CommandResult(EXIT_USAGE, [], "usage-error", [str(e)])
    except (ParseError, ModelFormatError) as e:
        return CommandResult(EXIT_USAGE, out.render(), "parse-error", [str(e)])
    except (BoundError, CapExceededError, UnmappedNominalError) as e:
        return CommandResult(EXIT_USAGE, out.render(), "input-error", [str(e)])
    except OSError as e:
        return CommandResult(EXIT_USAGE, out.render(), "io-error", [str(e)])
    except Exception as e:
        logger().error(f"run_command : {args.command} has failed! Exception {e!r}")
        return CommandResult(EXIT_INTERNAL, out.render(), "internal-error", [repr(e)])
    return CommandResult(code, out.render(), verdict)


def main(argv=None):
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout())
    for line in result.errors:
        sys.stderr.write(line + "\n")
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
