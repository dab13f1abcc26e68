from dataclasses import dataclass, field

from ialcbench.errors import UnknownRuleError
from ialcbench.calculus.rules import (
    RuleName,
    Instantiation,
    check_node,
    mp_expansion,
)
from ialcbench.verdict import CheckVerdict


@dataclass(frozen=True)
class ProofTree:
    """
    A sequent calculus derivation.

    Attributes
    ----------
    conclusion : :class:`ialcbench.syntax.Sequent`

    rule : RuleName
        The rule concluding this node.

    premises : tuple of ProofTree
        Subproofs, one per premise of the rule, in rule order.

    instantiation : Instantiation
        Fresh nominal and cut formula, when the rule needs them.
    """

    conclusion: object
    rule: object
    premises: tuple = field(default_factory=tuple)
    instantiation: Instantiation = field(default_factory=Instantiation)

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))


def iter_nodes(tree, path="root"):
    """
    Yield (path, node) pairs in pre-order. Children of the root are "0", "1", grandchildren "0.1" and so on.
    """
    yield path, tree
    for k, child in enumerate(tree.premises):
        yield from iter_nodes(child, str(k) if path == "root" else f"{path}.{k}")


def tree_depth(tree):
    """Number of nodes on the longest root-to-leaf path."""
    return 1 + max((tree_depth(p) for p in tree.premises), default=0)


def tree_size(tree):
    return sum(1 for _ in iter_nodes(tree))


def check_proof(tree):
    """
    Check every node of a proof tree.

    A tree is accepted iff every node is an instance of its rule. Leaves must be AX, BOT-L or TOP-R, which the
    arity check enforces.

    Parameters
    ----------
    tree : ProofTree

    Returns
    -------
    verdict : :class:`ialcbench.verdict.CheckVerdict`
        Failures are (tree path, reason) pairs.
    """
    failures = []
    for path, node in iter_nodes(tree):
        try:
            ok, reason = check_node(
                node.rule,
                node.conclusion,
                [p.conclusion for p in node.premises],
                node.instantiation,
            )
        except UnknownRuleError:
            ok, reason = False, "UNKNOWN-RULE"
        if not ok:
            failures.append((path, reason))
    return CheckVerdict(tuple(failures))


def expand_macros(tree):
    """
    Replace every MP and NEC node by the core rule instances it abbreviates.

    The result contains only CUT, SUBS-L/N-SUBS-L, AX and P-FORALL in place of the macros. If :func:`check_proof`
    accepts the original tree it accepts the result. The converse fails: a NEC node with a non-empty context is
    rejected, while the P-FORALL node it becomes may be accepted.
    """
    premises = tuple(expand_macros(p) for p in tree.premises)
    rule = tree.rule
    if rule is RuleName.NEC:
        return ProofTree(tree.conclusion, RuleName.P_FORALL, premises)
    if rule is RuleName.MP and len(premises) == 2:
        minor, major = premises
        expansion = mp_expansion(tree.conclusion, minor.conclusion, major.conclusion)
        if expansion is not None:
            subs_rule, middle, axiom, implication = expansion
            axiom_tree = ProofTree(axiom, RuleName.AX)
            middle_tree = ProofTree(middle, subs_rule, (minor, axiom_tree))
            return ProofTree(
                tree.conclusion,
                RuleName.CUT,
                (major, middle_tree),
                Instantiation(cut=implication),
            )
    return ProofTree(tree.conclusion, rule, premises, tree.instantiation)
