"""
Hilbert-style derivation traces for SDL and their checker.

Justifications: HYP (an assumption), TAUT (a propositional tautology once every maximal ``O(...)`` subformula is
read as an atom), OB-K ``O(a => b) => O(a) => O(b)``, OB-D ``O(a) => P(a)``, FCP ``P(a | b) => P(a) & P(b)``,
MP i,j (modus ponens, premises in either order), OB-NEC i (necessitation of a step derived without HYP) and
CP i (contraposition of an implication).
"""
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ialcbench.sdl.formulas import (
    Prop,
    Falsum,
    Neg,
    Conj,
    Disj,
    Impl,
    Ob,
    perm,
    perm_body,
)
from ialcbench.verdict import CheckVerdict

HYP = "HYP"
TAUT = "TAUT"
OB_K = "OB-K"
OB_D = "OB-D"
FCP = "FCP"
MP = "MP"
OB_NEC = "OB-NEC"
CP = "CP"

ARITY = {HYP: 0, TAUT: 0, OB_K: 0, OB_D: 0, FCP: 0, MP: 2, OB_NEC: 1, CP: 1}


@dataclass(frozen=True)
class Justification:
    rule: str
    refs: tuple = ()

    def __str__(self):
        if not self.refs:
            return self.rule
        return f"{self.rule} " + ",".join(str(r) for r in self.refs)


@dataclass(frozen=True)
class Step:
    number: int
    formula: object
    justification: Justification


@dataclass(frozen=True)
class DerivationTrace:
    """
    Assumptions plus numbered steps.

    Attributes
    ----------
    assumptions : tuple of SDLFormula

    steps : tuple of Step
        Steps in order; references point to earlier step numbers.
    """

    assumptions: tuple = field(default_factory=tuple)
    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "assumptions", tuple(self.assumptions))
        object.__setattr__(self, "steps", tuple(self.steps))

    def prefix(self, count):
        """The trace truncated to its first `count` steps."""
        return DerivationTrace(self.assumptions, self.steps[:count])

    def without_step(self, number):
        kept = tuple(s for s in self.steps if s.number != number)
        return DerivationTrace(self.assumptions, kept)

    @property
    def conclusion(self):
        return self.steps[-1].formula if self.steps else None


# --- tautologies ---------------------------------------------------------------------------------------------


def _abstract(formula, table):
    """Replace maximal O-subformulas by atoms; `table` maps them to atom positions."""
    if isinstance(formula, Ob):
        return ("atom", table.setdefault(formula, len(table)))
    if isinstance(formula, Prop):
        return ("atom", table.setdefault(formula, len(table)))
    if isinstance(formula, Falsum):
        return ("false",)
    if isinstance(formula, Neg):
        return ("not", _abstract(formula.body, table))
    op = {Conj: "and", Disj: "or", Impl: "implies"}[type(formula)]
    return (op, _abstract(formula.left, table), _abstract(formula.right, table))


def _truth(node, rows):
    kind = node[0]
    if kind == "atom":
        return rows[:, node[1]]
    if kind == "false":
        return np.zeros(rows.shape[0], dtype=bool)
    if kind == "not":
        return ~_truth(node[1], rows)
    left, right = _truth(node[1], rows), _truth(node[2], rows)
    if kind == "and":
        return left & right
    if kind == "or":
        return left | right
    return ~left | right


def taut_check(formula):
    """
    Decide whether a formula is a substitution instance of a propositional tautology.

    Every maximal ``O(...)`` subformula is abstracted to a fresh atom and the result is evaluated on the full
    truth table.

    Examples
    --------
    >>> from ialcbench.sdl import parse_formula
    >>> taut_check(parse_formula("p => p | q"))
    True
    >>> taut_check(parse_formula("p => q"))
    False
    """
    table = {}
    tree = _abstract(formula, table)
    k = len(table)
    rows = np.array(list(product([False, True], repeat=k)), dtype=bool)
    rows = rows.reshape(2**k, k)
    return bool(np.all(_truth(tree, rows)))


# --- axiom schemata ------------------------------------------------------------------------------------------


def is_ob_k(f):
    return (
        isinstance(f, Impl)
        and isinstance(f.left, Ob)
        and isinstance(f.left.body, Impl)
        and f.right == Impl(Ob(f.left.body.left), Ob(f.left.body.right))
    )


def is_ob_d(f):
    if not (isinstance(f, Impl) and isinstance(f.left, Ob)):
        return False
    return f.right == perm(f.left.body)


def is_fcp(f):
    if not isinstance(f, Impl):
        return False
    choice = perm_body(f.left)
    if not isinstance(choice, Disj):
        return False
    return f.right == Conj(perm(choice.left), perm(choice.right))


_AXIOMS = {TAUT: taut_check, OB_K: is_ob_k, OB_D: is_ob_d, FCP: is_fcp}


def _check_step(step, derived, assumptions):
    """Return (reason or None, pure) for one step given the earlier derived steps."""
    rule, refs, f = step.justification.rule, step.justification.refs, step.formula
    if rule not in ARITY:
        return "UNKNOWN-JUSTIFICATION", False
    if len(refs) != ARITY[rule]:
        return "ARITY", False
    for ref in refs:
        if ref not in derived:
            return "DANGLING-REFERENCE", False
    if rule == HYP:
        return (None if f in assumptions else "NOT-AN-ASSUMPTION"), False
    if rule in _AXIOMS:
        return (None if _AXIOMS[rule](f) else f"NOT-{rule}"), True
    premises = [derived[r] for r in refs]
    if rule == MP:
        (a, pure_a), (b, pure_b) = premises
        if Impl(a, f) == b or Impl(b, f) == a:
            return None, pure_a and pure_b
        return "NOT-MP", False
    (source, pure) = premises[0]
    if rule == OB_NEC:
        if f != Ob(source):
            return "NOT-OB-NEC", False
        return (None if pure else "IMPURE"), True
    if isinstance(source, Impl) and f == Impl(Neg(source.right), Neg(source.left)):
        return None, pure
    return "NOT-CP", False


def check_derivation(trace):
    """
    Check every step of a derivation trace.

    Parameters
    ----------
    trace : DerivationTrace

    Returns
    -------
    verdict : :class:`ialcbench.verdict.CheckVerdict`
        Failures are (step number as str, reason) pairs. Steps are checked in order, each only against earlier
        ones, so a trace is accepted iff all of its prefixes are.
    """
    assumptions = set(trace.assumptions)
    derived = {}
    failures = []
    last = None
    for step in trace.steps:
        if last is not None and step.number <= last:
            failures.append((str(step.number), "NUMBERING"))
            continue
        last = step.number
        reason, pure = _check_step(step, derived, assumptions)
        if reason is not None:
            failures.append((str(step.number), reason))
            continue
        derived[step.number] = (step.formula, pure)
    return CheckVerdict(tuple(failures))
