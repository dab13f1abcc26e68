"""
``.ipf`` proof files.

One node per line, ``n. <sequent> [<RULE> premises=n1,n2 fresh=y cut=<formula>]``. Premises must carry smaller
numbers than the node using them, each line except the last is used exactly once and the last line is the root.
"""
import re

from ialcbench.errors import ModelFormatError, ParseError, UnknownRuleError
from ialcbench.syntax import parse_sequent, parse_item, print_sequent, print_item
from ialcbench.calculus.rules import RuleName, Instantiation
from ialcbench.calculus.proof import ProofTree

_LINE = re.compile(r"^(\d+)\.\s+(.*?)\s*\[([^\[\]]*)\]$")


def _parse_annotation(text, lineno):
    head, _, cut = text.partition(" cut=")
    if not cut and head.startswith("cut="):
        raise ModelFormatError("cut formula without rule name", lineno)
    tokens = head.split()
    if not tokens:
        raise ModelFormatError("missing rule name", lineno)
    try:
        rule = RuleName.parse(tokens[0])
    except UnknownRuleError as e:
        raise ModelFormatError(str(e), lineno) from e
    premises, fresh = (), None
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise ModelFormatError(f"malformed annotation {token!r}", lineno)
        if key == "premises":
            try:
                premises = tuple(int(v) for v in value.split(","))
            except ValueError:
                raise ModelFormatError(
                    f"malformed premise list {value!r}", lineno
                ) from None
        elif key == "fresh":
            fresh = value
        else:
            raise ModelFormatError(f"unknown annotation {key!r}", lineno)
    cut_formula = None
    if cut:
        try:
            cut_formula = parse_item(cut)
        except ParseError as e:
            raise ModelFormatError(f"bad cut formula: {e}", lineno) from e
    return rule, premises, Instantiation(fresh=fresh, cut=cut_formula)


def loads_proof(text):
    """
    Parse ``.ipf`` text into a :class:`ialcbench.calculus.ProofTree`.

    The loader checks the file structure only; rule instances are checked by
    :func:`ialcbench.calculus.check_proof`.

    Raises
    ------
    ModelFormatError
        On malformed lines, forward or dangling references, reused or orphan lines.
    """
    nodes = {}
    used = set()
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _LINE.match(line)
        if match is None:
            raise ModelFormatError("expected 'n. <sequent> [RULE ...]'", lineno)
        number = int(match.group(1))
        if last is not None and number <= last:
            raise ModelFormatError(f"line number {number} is not increasing", lineno)
        try:
            conclusion = parse_sequent(match.group(2))
        except ParseError as e:
            raise ModelFormatError(f"bad sequent: {e}", lineno) from e
        rule, premises, inst = _parse_annotation(match.group(3), lineno)
        children = []
        for ref in premises:
            if ref not in nodes:
                raise ModelFormatError(
                    f"premise {ref} does not refer to an earlier line", lineno
                )
            if ref in used:
                raise ModelFormatError(f"line {ref} is used as a premise twice", lineno)
            used.add(ref)
            children.append(nodes[ref])
        nodes[number] = ProofTree(conclusion, rule, tuple(children), inst)
        last = number
    if last is None:
        raise ModelFormatError("empty proof")
    orphans = sorted(set(nodes) - used - {last})
    if orphans:
        raise ModelFormatError(f"lines {orphans} are not used by the root")
    return nodes[last]


def load_proof(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_proof(fh.read())


def dumps_proof(tree):
    """
    Serialize a proof tree, numbering nodes in post-order from 1 so the root comes last.
    """
    lines = []

    def emit(node):
        refs = [emit(p) for p in node.premises]
        annotation = str(RuleName.parse(node.rule))
        if refs:
            annotation += " premises=" + ",".join(str(r) for r in refs)
        if node.instantiation.fresh is not None:
            annotation += f" fresh={node.instantiation.fresh}"
        if node.instantiation.cut is not None:
            annotation += " cut=" + print_item(node.instantiation.cut)
        number = len(lines) + 1
        lines.append(f"{number}. {print_sequent(node.conclusion)} [{annotation}]")
        return number

    emit(tree)
    return "\n".join(lines) + "\n"
