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
    is_concept,
)

# Binding strength of each printed form; higher binds tighter.
_SUBS, _OR, _AND, _UNARY, _ATOM = 1, 2, 3, 4, 5


def _concept(c, need):
    if isinstance(c, Atom):
        text, level = c.name, _ATOM
    elif isinstance(c, Top):
        text, level = "Top", _ATOM
    elif isinstance(c, Bottom):
        text, level = "Bot", _ATOM
    elif isinstance(c, Not):
        text, level = "not " + _concept(c.body, _UNARY), _UNARY
    elif isinstance(c, Exists):
        text, level = f"some {c.role}." + _concept(c.body, _UNARY), _UNARY
    elif isinstance(c, Forall):
        text, level = f"all {c.role}." + _concept(c.body, _UNARY), _UNARY
    elif isinstance(c, And):
        text = _concept(c.left, _AND) + " and " + _concept(c.right, _UNARY)
        level = _AND
    elif isinstance(c, Or):
        text = _concept(c.left, _OR) + " or " + _concept(c.right, _AND)
        level = _OR
    elif isinstance(c, Subs):
        text = _concept(c.left, _OR) + " -> " + _concept(c.right, _SUBS)
        level = _SUBS
    else:
        raise TypeError(f"not a concept: {c!r}")
    return f"({text})" if level < need else text


def print_concept(concept):
    """
    Render a concept with the minimal parentheses the grammar needs.

    Examples
    --------
    >>> print_concept(Subs(Exists("R", Bottom()), Bottom()))
    'some R.Bot -> Bot'
    """
    return _concept(concept, _SUBS)


def print_statement(statement):
    if isinstance(statement, NominalAssertion):
        body = statement.body
        if is_concept(body):
            return f"{statement.nominal} : {print_concept(body)}"
        return f"{statement.nominal} : ({print_statement(body)})"
    if isinstance(statement, RoleAssertion):
        return f"{statement.subject} {statement.role} {statement.object}"
    if isinstance(statement, ConceptFormula):
        return print_concept(statement.body)
    raise TypeError(f"not a statement: {statement!r}")


def print_item(item):
    """
    Render a sequent member, statement or concept.
    """
    if is_concept(item):
        return print_concept(item)
    return print_statement(item)


def print_sequent(sequent):
    """
    Render a sequent as ``tbox: F1 ; F2 | G1 ; G2 |- D``.

    The TBox part is omitted when empty and an empty antecedent renders as ``|- D``.
    """
    if not isinstance(sequent, Sequent):
        raise TypeError(f"not a sequent: {sequent!r}")
    parts = []
    if sequent.theta:
        parts.append("tbox: " + " ; ".join(print_item(f) for f in sequent.theta) + " |")
    if sequent.antecedent:
        parts.append(" ; ".join(print_item(item) for item in sequent.antecedent))
    parts.append("|- " + print_item(sequent.succedent))
    return " ".join(parts)
