"""
Formulas of Standard Deontic Logic (the normal modal logic KD).

Permission is not a constructor: ``P(f)`` is read as ``~O(~f)`` when parsing and printed back as ``P(f)``.
"""
from dataclasses import dataclass


class SDLFormula:
    __slots__ = ()


@dataclass(frozen=True)
class Prop(SDLFormula):
    name: str


@dataclass(frozen=True)
class Falsum(SDLFormula):
    pass


@dataclass(frozen=True)
class Neg(SDLFormula):
    body: SDLFormula


@dataclass(frozen=True)
class Conj(SDLFormula):
    left: SDLFormula
    right: SDLFormula


@dataclass(frozen=True)
class Disj(SDLFormula):
    left: SDLFormula
    right: SDLFormula


@dataclass(frozen=True)
class Impl(SDLFormula):
    left: SDLFormula
    right: SDLFormula


@dataclass(frozen=True)
class Ob(SDLFormula):
    body: SDLFormula


def perm(body):
    """Permission, as the dual of obligation."""
    return Neg(Ob(Neg(body)))


def perm_body(formula):
    """Return f if `formula` is ``~O(~f)``, else None."""
    if not (isinstance(formula, Neg) and isinstance(formula.body, Ob)):
        return None
    if isinstance(formula.body.body, Neg):
        return formula.body.body.body
    return None


def props_of(*formulas):
    out = set()

    def walk(f):
        if isinstance(f, Prop):
            out.add(f.name)
        elif isinstance(f, (Neg, Ob)):
            walk(f.body)
        elif isinstance(f, (Conj, Disj, Impl)):
            walk(f.left)
            walk(f.right)

    for f in formulas:
        walk(f)
    return tuple(sorted(out))


_IMPL, _DISJ, _CONJ, _UNARY = 1, 2, 3, 4


def _render(f, need):
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Ob):
        return "O(" + _render(f.body, _IMPL) + ")"
    permitted = perm_body(f)
    if permitted is not None:
        return "P(" + _render(permitted, _IMPL) + ")"
    if isinstance(f, Neg):
        text, level = "~" + _render(f.body, _UNARY), _UNARY
    elif isinstance(f, Conj):
        text, level = _render(f.left, _CONJ) + " & " + _render(f.right, _UNARY), _CONJ
    elif isinstance(f, Disj):
        text, level = _render(f.left, _DISJ) + " | " + _render(f.right, _CONJ), _DISJ
    elif isinstance(f, Impl):
        text, level = _render(f.left, _DISJ) + " => " + _render(f.right, _IMPL), _IMPL
    else:
        raise TypeError(f"not an SDL formula: {f!r}")
    return f"({text})" if level < need else text


def print_formula(formula):
    """
    Render a formula with minimal parentheses; ``~O(~f)`` is shown as ``P(f)``.
    """
    return _render(formula, _IMPL)
