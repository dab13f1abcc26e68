from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from ialcbench.errors import ParseError
from ialcbench.sdl.formulas import Prop, Falsum, Neg, Conj, Disj, Impl, Ob, perm

_GRAMMAR = r"""
    start: formula

    ?formula: disj
            | disj "=>" formula -> impl

    ?disj: conj
         | disj "|" conj -> disj

    ?conj: unary
         | conj "&" unary -> conj

    ?unary: "~" unary            -> neg
          | "O" "(" formula ")"  -> ob
          | "P" "(" formula ")"  -> perm
          | "false"              -> falsum
          | PROP                 -> prop
          | "(" formula ")"

    PROP: /[a-z][A-Za-z0-9_]*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@v_args(inline=True)
class _ToFormula(Transformer):
    def start(self, f):
        return f

    def impl(self, left, right):
        return Impl(left, right)

    def disj(self, left, right):
        return Disj(left, right)

    def conj(self, left, right):
        return Conj(left, right)

    def neg(self, body):
        return Neg(body)

    def ob(self, body):
        return Ob(body)

    def perm(self, body):
        return perm(body)

    def falsum(self):
        return Falsum()

    def prop(self, name):
        return Prop(str(name))


_parser = Lark(_GRAMMAR, parser="lalr", lexer="basic", maybe_placeholders=False)


def parse_formula(text):
    """
    Parse an SDL formula: ``O(...)``, ``P(...)``, ``~``, ``&``, ``|``, ``=>`` (right associative) and ``false``.

    Raises
    ------
    ParseError
        With line and column of the offending token.
    """
    if not text or not text.strip():
        raise ParseError("empty input", text)
    try:
        return _ToFormula().transform(_parser.parse(text))
    except UnexpectedToken as e:
        if e.token.type == "$END":
            raise ParseError(
                "unexpected end of input", text, e.line, e.column
            ) from None
        raise ParseError(
            f"unexpected token {str(e.token)!r}", text, e.line, e.column
        ) from None
    except UnexpectedCharacters as e:
        raise ParseError(
            f"unexpected character {e.char!r}", text, e.line, e.column
        ) from None
    except UnexpectedInput as e:
        raise ParseError("malformed input", text, e.line, e.column) from None
