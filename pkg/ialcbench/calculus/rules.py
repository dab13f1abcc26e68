"""
Rules of the labeled sequent calculus for iALC and the single-node checker.

Every propositional rule has a nominal counterpart, prefixed ``N-``, in which the active formulas are nominal
assertions sharing one outer nominal. Antecedents are multisets, so exchange is implicit. ``MP`` and ``NEC`` are
derived-rule macros: ``MP`` stands for a CUT on the implication followed by SUBS-L, ``NEC`` for P-FORALL with an
empty context.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from ialcbench.errors import UnknownRuleError
from ialcbench.syntax import (
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
    Sequent,
    is_concept,
    nominals_of,
)


class RuleName(Enum):
    AX = "AX"
    BOT_L = "BOT-L"
    TOP_R = "TOP-R"
    FORALL_R = "FORALL-R"
    FORALL_L = "FORALL-L"
    EXISTS_R = "EXISTS-R"
    EXISTS_L = "EXISTS-L"
    SUBS_R = "SUBS-R"
    N_SUBS_R = "N-SUBS-R"
    SUBS_L = "SUBS-L"
    N_SUBS_L = "N-SUBS-L"
    AND_R = "AND-R"
    N_AND_R = "N-AND-R"
    AND_L = "AND-L"
    N_AND_L = "N-AND-L"
    OR1_R = "OR1-R"
    N_OR1_R = "N-OR1-R"
    OR2_R = "OR2-R"
    N_OR2_R = "N-OR2-R"
    OR_L = "OR-L"
    N_OR_L = "N-OR-L"
    NOT_R = "NOT-R"
    N_NOT_R = "N-NOT-R"
    NOT_L = "NOT-L"
    N_NOT_L = "N-NOT-L"
    P_EXISTS = "P-EXISTS"
    P_FORALL = "P-FORALL"
    P_N = "P-N"
    TBOX = "TBOX"
    WEAK = "WEAK"
    CONTR = "CONTR"
    CUT = "CUT"
    MP = "MP"
    NEC = "NEC"

    @classmethod
    def parse(cls, name):
        """
        Look a rule up by its printed name.

        Raises
        ------
        UnknownRuleError
            If no rule has this name.
        """
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            raise UnknownRuleError(name) from None

    def __str__(self):
        return self.value


LEAF_RULES = frozenset([RuleName.AX, RuleName.BOT_L, RuleName.TOP_R])
MACRO_RULES = frozenset([RuleName.MP, RuleName.NEC])

ARITY = {rule: 1 for rule in RuleName}
ARITY.update({rule: 0 for rule in LEAF_RULES})
ARITY.update(
    {
        rule: 2
        for rule in (
            RuleName.EXISTS_R,
            RuleName.SUBS_L,
            RuleName.N_SUBS_L,
            RuleName.AND_R,
            RuleName.N_AND_R,
            RuleName.OR_L,
            RuleName.N_OR_L,
            RuleName.CUT,
            RuleName.MP,
        )
    }
)

OK = "OK"
ARITY_MISMATCH = "ARITY"
SHAPE = "SHAPE"
FRESHNESS = "FRESHNESS"
MISSING_FRESH = "MISSING-FRESH"
UNEXPECTED_FRESH = "UNEXPECTED-FRESH"
MISSING_CUT = "MISSING-CUT"
UNEXPECTED_CUT = "UNEXPECTED-CUT"
THETA = "THETA"
UNKNOWN_RULE = "UNKNOWN-RULE"


@dataclass(frozen=True)
class Instantiation:
    """
    Side information a proof node carries.

    Attributes
    ----------
    fresh : str or None
        The eigen-nominal introduced by EXISTS-L.

    cut : Statement or Concept or None
        The cut formula of CUT.
    """

    fresh: str = None
    cut: object = None


# --- multiset helpers ----------------------------------------------------------------------------------------


def _bag(items):
    return Counter(items)


def _minus(items, item):
    """Return the multiset `items` with one copy of `item` removed, or None if absent."""
    bag = _bag(items)
    if bag[item] == 0:
        return None
    bag[item] -= 1
    return +bag


def _plus(bag, *items):
    out = Counter(bag)
    out.update(items)
    return out


def _same(a, b):
    return +_bag(a) == +_bag(b)


def _sub_bag(small, big):
    return all(big[k] >= v for k, v in small.items())


def _split_context(ctx, left, right):
    """Both side contexts are sub-multisets of `ctx` and together mention every member of it."""
    return (
        _sub_bag(left, ctx)
        and _sub_bag(right, ctx)
        and set(+left) | set(+right) == set(+ctx)
    )


def _principals(conclusion, test):
    """Yield (principal, rest of antecedent) for every distinct antecedent member passing `test`."""
    for item in dict.fromkeys(conclusion.antecedent):
        if test(item):
            yield item, _minus(conclusion.antecedent, item)


def _nominal(item, body_type):
    return (
        isinstance(item, NominalAssertion)
        and is_concept(item.body)
        and isinstance(item.body, body_type)
    )


def _na(x, body):
    return NominalAssertion(x, body)


# --- leaf rules ----------------------------------------------------------------------------------------------


def _ax(conclusion, premises, inst):
    if conclusion.succedent in conclusion.antecedent:
        return None
    return SHAPE


def _bot_l(conclusion, premises, inst):
    for item in conclusion.antecedent:
        if isinstance(item, Bottom) or (
            isinstance(item, NominalAssertion) and isinstance(item.body, Bottom)
        ):
            return None
    return SHAPE


def _top_r(conclusion, premises, inst):
    goal = conclusion.succedent
    if isinstance(goal, Top):
        return None
    if isinstance(goal, NominalAssertion) and isinstance(goal.body, Top):
        return None
    return SHAPE


# --- quantifier rules ----------------------------------------------------------------------------------------


def _forall_r(conclusion, premises, inst):
    (premise,) = premises
    goal = conclusion.succedent
    if not _nominal(goal, Forall):
        return SHAPE
    target = premise.succedent
    if not isinstance(target, NominalAssertion) or target.body != goal.body.body:
        return SHAPE
    y = target.nominal
    link = RoleAssertion(goal.nominal, goal.body.role, y)
    if not _same(premise.antecedent, _plus(conclusion.antecedent, link)):
        return SHAPE
    if y in nominals_of(conclusion):
        return FRESHNESS
    return None


def _forall_l(conclusion, premises, inst):
    (premise,) = premises
    if premise.succedent != conclusion.succedent:
        return SHAPE
    extra = _bag(premise.antecedent) - _bag(conclusion.antecedent)
    if sum(extra.values()) != 1 or not _sub_bag(
        _bag(conclusion.antecedent), _bag(premise.antecedent)
    ):
        return SHAPE
    (added,) = extra
    if not isinstance(added, NominalAssertion) or not is_concept(added.body):
        return SHAPE
    for item in conclusion.antecedent:
        if _nominal(item, Forall) and item.body.body == added.body:
            link = RoleAssertion(item.nominal, item.body.role, added.nominal)
            if link in conclusion.antecedent:
                return None
    return SHAPE


def _exists_r(conclusion, premises, inst):
    left, right = premises
    goal = conclusion.succedent
    if not _nominal(goal, Exists):
        return SHAPE
    link = left.succedent
    if not (
        isinstance(link, RoleAssertion)
        and link.subject == goal.nominal
        and link.role == goal.body.role
    ):
        return SHAPE
    if right.succedent != _na(link.object, goal.body.body):
        return SHAPE
    if not _same(left.antecedent, conclusion.antecedent):
        return SHAPE
    if not _same(right.antecedent, conclusion.antecedent):
        return SHAPE
    return None


def _exists_l(conclusion, premises, inst):
    (premise,) = premises
    y = inst.fresh
    if y is None:
        return MISSING_FRESH
    if y in nominals_of(conclusion):
        return FRESHNESS
    if premise.succedent != conclusion.succedent:
        return SHAPE
    for principal, ctx in _principals(conclusion, lambda i: _nominal(i, Exists)):
        x, role, body = principal.nominal, principal.body.role, principal.body.body
        expected = _plus(ctx, RoleAssertion(x, role, y), _na(y, body))
        if _same(premise.antecedent, expected):
            return None
    return SHAPE


# --- propositional rules -------------------------------------------------------------------------------------


def _right_one(build):
    """
    Checker for a one-premise right rule. `build(goal)` returns (added antecedent items, premise succedent) or
    None when the goal has the wrong shape.
    """

    def check(conclusion, premises, inst):
        (premise,) = premises
        shape = build(conclusion.succedent)
        if shape is None:
            return SHAPE
        added, target = shape
        if premise.succedent != target:
            return SHAPE
        if not _same(premise.antecedent, _plus(conclusion.antecedent, *added)):
            return SHAPE
        return None

    return check


def _right_two(build):
    def check(conclusion, premises, inst):
        shape = build(conclusion.succedent)
        if shape is None:
            return SHAPE
        for premise, target in zip(premises, shape):
            if premise.succedent != target:
                return SHAPE
            if not _same(premise.antecedent, conclusion.antecedent):
                return SHAPE
        return None

    return check


def _left_one(build):
    """
    Checker for a left rule whose premises replace the principal formula. `build(principal)` returns, for each
    premise, the list of items replacing it, or None when the item is not a candidate principal.
    """

    def check(conclusion, premises, inst):
        for premise in premises:
            if premise.succedent != conclusion.succedent:
                return SHAPE
        for principal, ctx in _principals(conclusion, lambda i: build(i) is not None):
            replacements = build(principal)
            if all(
                _same(premise.antecedent, _plus(ctx, *added))
                for premise, added in zip(premises, replacements)
            ):
                return None
        return SHAPE

    return check


def _subs_l(build):
    """
    Checker for SUBS-L and N-SUBS-L: from Δ1 |- C and Δ2, D |- δ infer Δ, C -> D |- δ.
    """

    def check(conclusion, premises, inst):
        left, right = premises
        if right.succedent != conclusion.succedent:
            return SHAPE
        for principal, ctx in _principals(conclusion, lambda i: build(i) is not None):
            antecedent, consequent = build(principal)
            if left.succedent != antecedent:
                continue
            rest = _minus(right.antecedent, consequent)
            if rest is None:
                continue
            if _split_context(ctx, _bag(left.antecedent), rest):
                return None
        return SHAPE

    return check


def _not_l(build):
    def check(conclusion, premises, inst):
        (premise,) = premises
        for principal, ctx in _principals(conclusion, lambda i: build(i) is not None):
            if premise.succedent == build(principal) and _same(premise.antecedent, ctx):
                return None
        return SHAPE

    return check


def _concept_of(kind):
    return lambda item: is_concept(item) and isinstance(item, kind)


def _shape(kind, fn, nominal=False):
    """Wrap `fn(body, x)` so it only fires on items of the given concept kind (optionally under a nominal)."""
    if nominal:
        return lambda item: (
            fn(item.body, item.nominal) if _nominal(item, kind) else None
        )
    return lambda item: fn(item, None) if _concept_of(kind)(item) else None


def _lift(x, item):
    return item if x is None else _na(x, item)


def _propositional_checkers():
    checkers = {}
    for nominal, prefix in ((False, ""), (True, "N_")):
        rule = lambda name: RuleName[prefix + name]
        checkers[rule("SUBS_R")] = _right_one(
            _shape(Subs, lambda c, x: ([_lift(x, c.left)], _lift(x, c.right)), nominal)
        )
        checkers[rule("NOT_R")] = _right_one(
            _shape(Not, lambda c, x: ([_lift(x, c.body)], _lift(x, Bottom())), nominal)
        )
        checkers[rule("OR1_R")] = _right_one(
            _shape(Or, lambda c, x: ([], _lift(x, c.left)), nominal)
        )
        checkers[rule("OR2_R")] = _right_one(
            _shape(Or, lambda c, x: ([], _lift(x, c.right)), nominal)
        )
        checkers[rule("AND_R")] = _right_two(
            _shape(And, lambda c, x: (_lift(x, c.left), _lift(x, c.right)), nominal)
        )
        checkers[rule("AND_L")] = _left_one(
            _shape(And, lambda c, x: ([_lift(x, c.left), _lift(x, c.right)],), nominal)
        )
        checkers[rule("OR_L")] = _left_one(
            _shape(Or, lambda c, x: ([_lift(x, c.left)], [_lift(x, c.right)]), nominal)
        )
        checkers[rule("SUBS_L")] = _subs_l(
            _shape(Subs, lambda c, x: (_lift(x, c.left), _lift(x, c.right)), nominal)
        )
        checkers[rule("NOT_L")] = _not_l(
            _shape(Not, lambda c, x: _lift(x, c.body), nominal)
        )
    return checkers


# --- context rules -------------------------------------------------------------------------------------------


def _prefix(items, wrap):
    return [wrap(i) if is_concept(i) else i for i in items]


def _p_exists(conclusion, premises, inst):
    (premise,) = premises
    goal = conclusion.succedent
    if not (is_concept(goal) and isinstance(goal, Exists)):
        return SHAPE
    if premise.succedent != goal.body:
        return SHAPE
    role = goal.role
    for principal, ctx in _principals(
        conclusion, lambda i: is_concept(i) and isinstance(i, Exists) and i.role == role
    ):
        rest = _minus(premise.antecedent, principal.body)
        if rest is None:
            continue
        if _same(_prefix(rest.elements(), lambda c: Forall(role, c)), ctx):
            return None
    return SHAPE


def _p_forall(conclusion, premises, inst):
    (premise,) = premises
    goal = conclusion.succedent
    if not (is_concept(goal) and isinstance(goal, Forall)):
        return SHAPE
    if premise.succedent != goal.body:
        return SHAPE
    expected = _prefix(premise.antecedent, lambda c: Forall(goal.role, c))
    if _same(expected, conclusion.antecedent):
        return None
    return SHAPE


def _p_n(conclusion, premises, inst):
    (premise,) = premises
    goal = conclusion.succedent
    if is_concept(premise.succedent):
        if not isinstance(goal, NominalAssertion) or goal.body != premise.succedent:
            return SHAPE
        candidates = [goal.nominal]
    else:
        if goal != premise.succedent:
            return SHAPE
        candidates = (
            sorted(nominals_of(*conclusion.antecedent)) if conclusion.antecedent else []
        )
        if not candidates and _same(premise.antecedent, conclusion.antecedent):
            return None
    for x in candidates:
        expected = _prefix(premise.antecedent, lambda c: _na(x, c))
        if _same(expected, conclusion.antecedent):
            return None
    return SHAPE


def _tbox(conclusion, premises, inst):
    (premise,) = premises
    if premise.succedent != conclusion.succedent:
        return SHAPE
    extra = _bag(premise.antecedent) - _bag(conclusion.antecedent)
    if sum(extra.values()) != 1 or not _sub_bag(
        _bag(conclusion.antecedent), _bag(premise.antecedent)
    ):
        return SHAPE
    (added,) = extra
    body = added.body if isinstance(added, NominalAssertion) else added
    if any(f.body == body for f in conclusion.theta):
        return None
    return SHAPE


def _weak(conclusion, premises, inst):
    (premise,) = premises
    if premise.succedent != conclusion.succedent:
        return SHAPE
    dropped = _bag(conclusion.antecedent) - _bag(premise.antecedent)
    if sum(dropped.values()) == 1 and _sub_bag(
        _bag(premise.antecedent), _bag(conclusion.antecedent)
    ):
        return None
    return SHAPE


def _contr(conclusion, premises, inst):
    (premise,) = premises
    if premise.succedent != conclusion.succedent:
        return SHAPE
    extra = _bag(premise.antecedent) - _bag(conclusion.antecedent)
    if sum(extra.values()) != 1 or not _sub_bag(
        _bag(conclusion.antecedent), _bag(premise.antecedent)
    ):
        return SHAPE
    (doubled,) = extra
    if doubled in conclusion.antecedent:
        return None
    return SHAPE


def _cut(conclusion, premises, inst):
    left, right = premises
    formula = inst.cut
    if formula is None:
        return MISSING_CUT
    if left.succedent != formula or right.succedent != conclusion.succedent:
        return SHAPE
    rest = _minus(right.antecedent, formula)
    if rest is None:
        return SHAPE
    if _split_context(_bag(conclusion.antecedent), _bag(left.antecedent), rest):
        return None
    return SHAPE


# --- macros --------------------------------------------------------------------------------------------------


def mp_expansion(conclusion, minor, major):
    """
    Return the intermediate sequents of an MP step.

    MP from ``Δ1 |- φ`` (minor) and ``Δ2 |- φ -> δ`` (major) to ``Δ |- δ`` is a CUT on ``φ -> δ`` whose right
    premise ``Δ1, φ -> δ |- δ`` comes from the minor premise and the axiom ``δ |- δ`` by SUBS-L (N-SUBS-L for
    nominal implications).

    Returns
    -------
    out : tuple or None
        (subs_rule, middle sequent, axiom sequent, cut formula), or None if the major premise is not an implication.
    """
    implication = major.succedent
    if is_concept(implication) and isinstance(implication, Subs):
        rule = RuleName.SUBS_L
    elif _nominal(implication, Subs):
        rule = RuleName.N_SUBS_L
    else:
        return None
    middle = Sequent(
        conclusion.theta,
        tuple(minor.antecedent) + (implication,),
        conclusion.succedent,
    )
    axiom = Sequent(conclusion.theta, (conclusion.succedent,), conclusion.succedent)
    return rule, middle, axiom, implication


def _mp(conclusion, premises, inst):
    minor, major = premises
    expansion = mp_expansion(conclusion, minor, major)
    if expansion is None:
        return SHAPE
    rule, middle, axiom, implication = expansion
    for reason in (
        _CHECKERS[rule](middle, [minor, axiom], Instantiation()),
        _ax(axiom, [], Instantiation()),
        _cut(conclusion, [major, middle], Instantiation(cut=implication)),
    ):
        if reason is not None:
            return reason
    return None


def _nec(conclusion, premises, inst):
    (premise,) = premises
    if premise.antecedent or conclusion.antecedent:
        return SHAPE
    return _p_forall(conclusion, premises, inst)


_CHECKERS = {
    RuleName.AX: _ax,
    RuleName.BOT_L: _bot_l,
    RuleName.TOP_R: _top_r,
    RuleName.FORALL_R: _forall_r,
    RuleName.FORALL_L: _forall_l,
    RuleName.EXISTS_R: _exists_r,
    RuleName.EXISTS_L: _exists_l,
    RuleName.P_EXISTS: _p_exists,
    RuleName.P_FORALL: _p_forall,
    RuleName.P_N: _p_n,
    RuleName.TBOX: _tbox,
    RuleName.WEAK: _weak,
    RuleName.CONTR: _contr,
    RuleName.CUT: _cut,
    RuleName.MP: _mp,
    RuleName.NEC: _nec,
}
_CHECKERS.update(_propositional_checkers())


def check_node(rule, conclusion, premises, instantiation=None):
    """
    Check that a conclusion and its premises form an instance of a rule.

    Parameters
    ----------
    rule : RuleName or str
        The rule, by enum member or printed name.

    conclusion : :class:`ialcbench.syntax.Sequent`

    premises : sequence of :class:`ialcbench.syntax.Sequent`

    instantiation : Instantiation, optional
        Fresh nominal (EXISTS-L) and cut formula (CUT).

    Returns
    -------
    ok : bool

    reason : str
        ``"OK"`` or one of ARITY, THETA, SHAPE, FRESHNESS, MISSING-FRESH, UNEXPECTED-FRESH, MISSING-CUT,
        UNEXPECTED-CUT.

    Raises
    ------
    UnknownRuleError
        If `rule` names no rule of the calculus.
    """
    rule = RuleName.parse(rule)
    inst = instantiation or Instantiation()
    premises = list(premises)
    if len(premises) != ARITY[rule]:
        return False, ARITY_MISMATCH
    theta = frozenset(conclusion.theta)
    if any(frozenset(p.theta) != theta for p in premises):
        return False, THETA
    if inst.fresh is not None and rule is not RuleName.EXISTS_L:
        return False, UNEXPECTED_FRESH
    if inst.cut is not None and rule is not RuleName.CUT:
        return False, UNEXPECTED_CUT
    reason = _CHECKERS[rule](conclusion, premises, inst)
    if reason is None:
        return True, OK
    return False, reason
