"""
Exceptions raised by ialcbench.

Checkers never raise on a bad proof or trace; they report failures in a
:class:`ialcbench.verdict.CheckVerdict`. The exceptions below signal malformed input or misuse.
"""


class IALCError(Exception):
    """Base class of every ialcbench exception."""


class ParseError(IALCError, ValueError):
    """
    Malformed concept, statement, sequent or SDL formula text.

    Parameters
    ----------
    message : str
        Human readable description.

    text : str
        The text that failed to parse.

    line : int
        1-based line of the offending position (None if unknown).

    column : int
        1-based column of the offending position (None if unknown).
    """

    def __init__(self, message, text="", line=None, column=None):
        self.text = text
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ReservedWordError(ParseError):
    """A keyword was used where a nominal name is expected."""


class ModelFormatError(IALCError, ValueError):
    """
    Malformed fixture file (``.ikm``, ``.ipf``, ``.sdt``, ``.sds``, ``.stm``, ``.seq``).

    Parameters
    ----------
    message : str
        Human readable description.

    lineno : int
        1-based line number in the file, None when the problem is not tied to a line.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ModelLintError(ModelFormatError):
    """A loaded interpretation violates a frame or heredity condition."""

    def __init__(self, report):
        self.report = report
        tags = ", ".join(sorted({v.tag for v in report.violations}))
        super().__init__(f"interpretation fails lint ({tags})")


class UnmappedNominalError(IALCError, KeyError):
    """A nominal mentioned by a query has no entity in the interpretation."""

    def __init__(self, nominal):
        self.nominal = nominal
        super().__init__(f"nominal {nominal!r} is not mapped to an entity")

    def __str__(self):
        return self.args[0]


class BoundError(IALCError, ValueError):
    """A search bound is not a positive integer."""

    def __init__(self, what, requested):
        self.requested = requested
        super().__init__(f"{what} must be a positive integer, got {requested!r}")


class CapExceededError(IALCError, ValueError):
    """A search bound is larger than the configured cap in :mod:`ialcbench.settings`."""

    def __init__(self, what, requested, cap):
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} {requested} exceeds the configured cap {cap}")


class UnknownRuleError(IALCError, ValueError):
    """A proof node names a rule that is not part of the calculus."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown rule name {name!r}")
