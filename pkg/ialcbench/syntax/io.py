"""
Line based lists of statements (``.stm``) and sequents (``.seq``), one per line.

Blank lines and lines starting with ``#`` are skipped.
"""
from ialcbench.errors import ModelFormatError, ParseError
from ialcbench.syntax.parser import parse_statement, parse_sequent
from ialcbench.syntax.printer import print_statement, print_sequent


def _loads(text, parse, what):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse(line))
        except ParseError as e:
            raise ModelFormatError(f"bad {what}: {e}", lineno) from e
    return out


def loads_statements(text):
    return _loads(text, parse_statement, "statement")


def loads_sequents(text):
    return _loads(text, parse_sequent, "sequent")


def load_statements(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_statements(fh.read())


def load_sequents(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_sequents(fh.read())


def dumps_statements(statements):
    return "".join(print_statement(s) + "\n" for s in statements)


def dumps_sequents(sequents):
    return "".join(print_sequent(s) + "\n" for s in sequents)
