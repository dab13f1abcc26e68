"""
Bounded backward proof search.

The search reads the rules bottom-up by iterative deepening. At each node the rules are tried in the order of
:class:`ialcbench.calculus.RuleName` and, within a rule, principal formulas from left to right. It never applies
CUT, WEAK, CONTR or the macros. P-EXISTS, P-FORALL and P-N are only tried when the goal already has the shape of
their conclusion. A branch fails when a sequent repeats on it.
"""
from ialcbench.logging import logger
from ialcbench.settings import settings
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
    is_concept,
    nominals_of,
)
from ialcbench.calculus.rules import RuleName, Instantiation
from ialcbench.calculus.proof import ProofTree
from ialcbench.utils import check_cap, fresh_name


def _without(items, item):
    idx = items.index(item)
    return items[:idx] + items[idx + 1 :]


def _is(item, kind):
    return is_concept(item) and isinstance(item, kind)


def _nominal(item, kind):
    return isinstance(item, NominalAssertion) and _is(item.body, kind)


def _lift(x, item):
    return item if x is None else NominalAssertion(x, item)


def _unpack(item, kind, nominal):
    """Return (x, concept) if the item is a (nominal) concept of the given kind, else None."""
    if nominal:
        return (item.nominal, item.body) if _nominal(item, kind) else None
    return (None, item) if _is(item, kind) else None


def backward_steps(seq):
    """
    Yield (rule, premise sequents, instantiation) for every backward rule application, in search order.
    """
    ant, goal = seq.antecedent, seq.succedent
    distinct = list(dict.fromkeys(ant))
    prefix = settings["FRESH_PREFIX"]

    def fresh():
        return fresh_name(prefix, nominals_of(seq))

    def sub(antecedent=None, succedent=None):
        return seq.replace(antecedent, succedent)

    if goal in ant:
        yield RuleName.AX, (), Instantiation()
    if any(_is(i, Bottom) or _nominal(i, Bottom) for i in ant):
        yield RuleName.BOT_L, (), Instantiation()
    if _is(goal, Top) or _nominal(goal, Top):
        yield RuleName.TOP_R, (), Instantiation()

    if _nominal(goal, Forall):
        y = fresh()
        link = RoleAssertion(goal.nominal, goal.body.role, y)
        premise = sub(ant + (link,), NominalAssertion(y, goal.body.body))
        yield RuleName.FORALL_R, (premise,), Instantiation()

    for item in distinct:
        if not _nominal(item, Forall):
            continue
        for link in distinct:
            if (
                isinstance(link, RoleAssertion)
                and link.subject == item.nominal
                and link.role == item.body.role
            ):
                added = NominalAssertion(link.object, item.body.body)
                if added not in ant:
                    yield RuleName.FORALL_L, (sub(ant + (added,)),), Instantiation()

    if _nominal(goal, Exists):
        for link in distinct:
            if (
                isinstance(link, RoleAssertion)
                and link.subject == goal.nominal
                and link.role == goal.body.role
            ):
                yield RuleName.EXISTS_R, (
                    sub(succedent=link),
                    sub(succedent=NominalAssertion(link.object, goal.body.body)),
                ), Instantiation()

    for item in distinct:
        if _nominal(item, Exists):
            y = fresh()
            added = (
                RoleAssertion(item.nominal, item.body.role, y),
                NominalAssertion(y, item.body.body),
            )
            premise = sub(_without(ant, item) + added)
            yield RuleName.EXISTS_L, (premise,), Instantiation(fresh=y)

    yield from _propositional(seq, distinct)
    yield from _context_rules(seq, distinct)


def _propositional(seq, distinct):
    ant, goal = seq.antecedent, seq.succedent

    def sub(antecedent=None, succedent=None):
        return seq.replace(antecedent, succedent)

    def pairs(rule):
        return ((RuleName[rule], False), (RuleName["N_" + rule], True))

    for rule, nominal in pairs("SUBS_R"):
        hit = _unpack(goal, Subs, nominal)
        if hit:
            x, c = hit
            premise = sub(ant + (_lift(x, c.left),), _lift(x, c.right))
            yield rule, (premise,), Instantiation()
    for rule, nominal in pairs("SUBS_L"):
        for item in distinct:
            hit = _unpack(item, Subs, nominal)
            if hit:
                x, c = hit
                rest = _without(ant, item)
                yield rule, (
                    sub(rest, _lift(x, c.left)),
                    sub(rest + (_lift(x, c.right),)),
                ), Instantiation()
    for rule, nominal in pairs("AND_R"):
        hit = _unpack(goal, And, nominal)
        if hit:
            x, c = hit
            yield rule, (
                sub(succedent=_lift(x, c.left)),
                sub(succedent=_lift(x, c.right)),
            ), Instantiation()
    for rule, nominal in pairs("AND_L"):
        for item in distinct:
            hit = _unpack(item, And, nominal)
            if hit:
                x, c = hit
                rest = _without(ant, item)
                yield rule, (
                    sub(rest + (_lift(x, c.left), _lift(x, c.right))),
                ), Instantiation()
    for side in ("left", "right"):
        name = "OR1_R" if side == "left" else "OR2_R"
        for rule, nominal in pairs(name):
            hit = _unpack(goal, Or, nominal)
            if hit:
                x, c = hit
                premise = sub(succedent=_lift(x, getattr(c, side)))
                yield rule, (premise,), Instantiation()
    for rule, nominal in pairs("OR_L"):
        for item in distinct:
            hit = _unpack(item, Or, nominal)
            if hit:
                x, c = hit
                rest = _without(ant, item)
                yield rule, (
                    sub(rest + (_lift(x, c.left),)),
                    sub(rest + (_lift(x, c.right),)),
                ), Instantiation()
    for rule, nominal in pairs("NOT_R"):
        hit = _unpack(goal, Not, nominal)
        if hit:
            x, c = hit
            premise = sub(ant + (_lift(x, c.body),), _lift(x, Bottom()))
            yield rule, (premise,), Instantiation()
    for rule, nominal in pairs("NOT_L"):
        for item in distinct:
            hit = _unpack(item, Not, nominal)
            if hit:
                x, c = hit
                premise = sub(_without(ant, item), _lift(x, c.body))
                yield rule, (premise,), Instantiation()


def _context_rules(seq, distinct):
    ant, goal = seq.antecedent, seq.succedent
    concepts = [i for i in ant if is_concept(i)]
    statements = tuple(i for i in ant if not is_concept(i))

    if _is(goal, Exists):
        role = goal.role
        for item in distinct:
            if not (_is(item, Exists) and item.role == role):
                continue
            others = list(concepts)
            others.remove(item)
            if all(_is(c, Forall) and c.role == role for c in others):
                premise_ant = statements + tuple(c.body for c in others) + (item.body,)
                premise = seq.replace(premise_ant, goal.body)
                yield RuleName.P_EXISTS, (premise,), Instantiation()

    if _is(goal, Forall):
        role = goal.role
        if all(_is(c, Forall) and c.role == role for c in concepts):
            premise_ant = statements + tuple(c.body for c in concepts)
            premise = seq.replace(premise_ant, goal.body)
            yield RuleName.P_FORALL, (premise,), Instantiation()

    if isinstance(goal, NominalAssertion) and is_concept(goal.body) and not concepts:
        x = goal.nominal
        premise_ant = tuple(
            (
                i.body
                if isinstance(i, NominalAssertion)
                and i.nominal == x
                and is_concept(i.body)
                else i
            )
            for i in ant
        )
        yield RuleName.P_N, (seq.replace(premise_ant, goal.body),), Instantiation()

    for formula in seq.theta:
        if formula.body not in ant:
            yield RuleName.TBOX, (seq.replace(ant + (formula.body,)),), Instantiation()
        for x in sorted(nominals_of(seq)):
            labeled = NominalAssertion(x, formula.body)
            if labeled not in ant:
                yield RuleName.TBOX, (seq.replace(ant + (labeled,)),), Instantiation()


class _Search:
    def __init__(self):
        self.failed = set()
        self.visited = 0

    def prove(self, seq, budget, branch):
        """
        Return (tree or None, clean). A failure is clean when no loop check cut the subtree, so it may be cached.
        """
        if budget < 1:
            return None, True
        key = seq.key()
        if key in branch:
            return None, False
        if (key, budget) in self.failed:
            return None, True
        self.visited += 1
        branch = branch | {key}
        clean = True
        for rule, premises, inst in backward_steps(seq):
            if premises and budget < 2:
                continue
            subtrees = []
            for premise in premises:
                tree, premise_clean = self.prove(premise, budget - 1, branch)
                clean = clean and premise_clean
                if tree is None:
                    break
                subtrees.append(tree)
            else:
                return ProofTree(seq, rule, tuple(subtrees), inst), True
        if clean:
            self.failed.add((key, budget))
        return None, clean


def prove_bounded(goal, max_depth):
    """
    Search for a proof of a sequent of depth at most `max_depth`.

    Parameters
    ----------
    goal : :class:`ialcbench.syntax.Sequent`

    max_depth : int
        Bound on the number of nodes of a root-to-leaf path, at most ``settings["PROOF_DEPTH_CAP"]``.

    Returns
    -------
    tree : :class:`ialcbench.calculus.ProofTree` or None
        The first proof found in the deterministic search order; a shallowest one, since depths are tried in
        increasing order.

    Raises
    ------
    CapExceededError
        If `max_depth` is larger than the configured cap.
    """
    check_cap("proof depth", max_depth, settings["PROOF_DEPTH_CAP"])
    search = _Search()
    for depth in range(1, max_depth + 1):
        tree, _ = search.prove(goal, depth, frozenset())
        if tree is not None:
            logger().debug(
                f"prove_bounded : proof of depth {depth} found "
                f"after {search.visited} visits"
            )
            return tree
    logger().debug(
        f"prove_bounded : no proof up to depth {max_depth} "
        f"({search.visited} visits)"
    )
    return None
