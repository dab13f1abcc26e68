"""
``.sdt`` derivation traces and ``.sds`` formula sets.

A trace file lists ``assume <formula>`` lines followed by ``n. <formula> [JUST refs]`` lines, where refs are
comma-separated step numbers. A formula-set file has one formula per line. In both formats blank lines and lines
starting with ``#`` are skipped.
"""
import re

from ialcbench.errors import ModelFormatError, ParseError
from ialcbench.sdl.formulas import print_formula
from ialcbench.sdl.parser import parse_formula
from ialcbench.sdl.derivation import DerivationTrace, Step, Justification

_STEP = re.compile(r"^(\d+)\.\s+(.*?)\s*\[([A-Z\-]+)(?:\s+(\d+(?:\s*,\s*\d+)*))?\]$")


def _formula(text, lineno):
    try:
        return parse_formula(text)
    except ParseError as e:
        raise ModelFormatError(f"bad formula: {e}", lineno) from e


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def loads_trace(text):
    """
    Parse ``.sdt`` text into a :class:`ialcbench.sdl.DerivationTrace`.

    Only the layout is checked here. Unknown justification names and references to later steps are left to
    :func:`ialcbench.sdl.check_derivation`, which reports them as failures.

    Raises
    ------
    ModelFormatError
        On lines that are neither assumptions nor steps, on assumptions after the first step and on bad formulas.
    """
    assumptions, steps = [], []
    for lineno, line in _content_lines(text):
        if line.startswith("assume "):
            if steps:
                raise ModelFormatError("assumption after the first step", lineno)
            assumptions.append(_formula(line[len("assume ") :], lineno))
            continue
        match = _STEP.match(line)
        if match is None:
            raise ModelFormatError(
                "expected 'assume <formula>' or 'n. <formula> [JUST refs]'", lineno
            )
        refs = ()
        if match.group(4):
            refs = tuple(int(r) for r in match.group(4).split(","))
        formula = _formula(match.group(2), lineno)
        justification = Justification(match.group(3), refs)
        steps.append(Step(int(match.group(1)), formula, justification))
    return DerivationTrace(tuple(assumptions), tuple(steps))


def load_trace(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_trace(fh.read())


def dumps_trace(trace):
    lines = [f"assume {print_formula(f)}" for f in trace.assumptions]
    lines += [
        f"{s.number}. {print_formula(s.formula)} [{s.justification}]"
        for s in trace.steps
    ]
    return "\n".join(lines) + "\n"


def loads_formula_set(text):
    """Parse ``.sds`` text into a list of SDL formulas."""
    return [_formula(line, lineno) for lineno, line in _content_lines(text)]


def load_formula_set(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_formula_set(fh.read())


def dumps_formula_set(formulas):
    return "".join(print_formula(f) + "\n" for f in formulas)
