"""
Concrete text syntax of iALC, parsed with a lark LALR grammar.

See ``docs/syntax.md`` for the full grammar. Precedence from tightest to loosest: ``not``, ``some``/``all``
(whose body is a unary concept), ``and``, ``or``, ``->``. ``and``/``or`` associate to the left and ``->`` to
the right.
"""
from lark import Lark, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from ialcbench.errors import ParseError, ReservedWordError
from ialcbench.syntax.concepts import (
    Atom,
    Bottom,
    Top,
    Not,
    And,
    Or,
    Subs,
    Exists,
    Forall,
    NominalAssertion,
    RoleAssertion,
    ConceptFormula,
    Sequent,
)

RESERVED_WORDS = frozenset(["Top", "Bot", "not", "and", "or", "some", "all", "tbox"])

_GRAMMAR = r"""
    concept_text: concept
    statement_text: statement
    item_text: item
    sequent_text: tbox? items? "|-" item

    tbox: "tbox" ":" concept (";" concept)* "|"
    items: item (";" item)*

    ?item: statement
         | concept

    ?statement: NOMINAL ":" concept          -> nominal_assertion
              | NOMINAL ":" "(" statement ")" -> nominal_assertion
              | NOMINAL UNAME NOMINAL         -> role_assertion

    ?concept: disj
            | disj "->" concept -> subs

    ?disj: conj
         | disj "or" conj -> disj

    ?conj: unary
         | conj "and" unary -> conj

    ?unary: "not" unary              -> neg
          | "some" UNAME "." unary   -> exists
          | "all" UNAME "." unary    -> forall
          | UNAME                    -> atom
          | "Top"                    -> top
          | "Bot"                    -> bot
          | "(" concept ")"

    NOMINAL: /[a-z][A-Za-z0-9_]*/
    UNAME: /[A-Z][A-Za-z0-9_]*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@v_args(inline=True)
class _ToSyntax(Transformer):
    def concept_text(self, c):
        return c

    statement_text = concept_text
    item_text = concept_text

    def sequent_text(self, *parts):
        theta, antecedent = (), ()
        for part in parts[:-1]:
            if isinstance(part, _TBox):
                theta = part.items
            else:
                antecedent = part
        return Sequent(theta, antecedent, parts[-1])

    def tbox(self, *concepts):
        for c in concepts:
            if not isinstance(c, Subs):
                raise ValueError(f"TBox members must be subsumptions, got {c!r}")
        return _TBox(tuple(ConceptFormula(c) for c in concepts))

    def items(self, *items):
        return tuple(items)

    def nominal_assertion(self, nominal, body):
        return NominalAssertion(str(nominal), body)

    def role_assertion(self, subject, role, obj):
        return RoleAssertion(str(subject), str(role), str(obj))

    def subs(self, left, right):
        return Subs(left, right)

    def disj(self, left, right):
        return Or(left, right)

    def conj(self, left, right):
        return And(left, right)

    def neg(self, body):
        return Not(body)

    def exists(self, role, body):
        return Exists(str(role), body)

    def forall(self, role, body):
        return Forall(str(role), body)

    def atom(self, name):
        return Atom(str(name))

    def top(self):
        return Top()

    def bot(self):
        return Bottom()


class _TBox:
    def __init__(self, items):
        self.items = items


_parser = Lark(
    _GRAMMAR,
    parser="lalr",
    lexer="basic",
    start=["concept_text", "statement_text", "item_text", "sequent_text"],
    maybe_placeholders=False,
)


def _parse(text, start):
    if not text or not text.strip():
        raise ParseError("empty input", text)
    try:
        tree = _parser.parse(text, start=start)
        return _ToSyntax().transform(tree)
    except UnexpectedToken as e:
        value = str(e.token)
        if value in RESERVED_WORDS and "NOMINAL" in e.expected:
            raise ReservedWordError(
                f"reserved word {value!r} used as a nominal", text, e.line, e.column
            ) from None
        if e.token.type == "$END":
            raise ParseError(
                "unexpected end of input", text, e.line, e.column
            ) from None
        raise ParseError(
            f"unexpected token {value!r}", text, e.line, e.column
        ) from None
    except UnexpectedCharacters as e:
        raise ParseError(
            f"unexpected character {e.char!r}", text, e.line, e.column
        ) from None
    except UnexpectedEOF:
        raise ParseError("unexpected end of input", text) from None
    except UnexpectedInput as e:
        raise ParseError("malformed input", text, e.line, e.column) from None
    except VisitError as e:
        raise ParseError(str(e.orig_exc), text) from None


def parse_concept(text):
    """
    Parse a concept.

    Parameters
    ----------
    text : str
        Concept text such as ``"all R.(A -> B) -> (all R.A -> all R.B)"``.

    Returns
    -------
    out : :class:`ialcbench.syntax.concepts.Concept`

    Raises
    ------
    ParseError
        With line and column of the offending token.
    """
    return _parse(text, "concept_text")


def parse_statement(text):
    """
    Parse a statement: ``x : C``, ``x : (y : ...)`` or ``x R y``.

    Raises
    ------
    ReservedWordError
        If a keyword sits where a nominal is expected.
    ParseError
        For any other malformed input.
    """
    return _parse(text, "statement_text")


def parse_item(text):
    """
    Parse a sequent member, i.e. a statement or a concept.
    """
    return _parse(text, "item_text")


def parse_sequent(text):
    """
    Parse a sequent of the form ``[tbox: F1; ...; Fn |] G1; ...; Gm |- D``.

    Empty antecedents and TBoxes are allowed. Exactly one succedent item is accepted.
    """
    return _parse(text, "sequent_text")
