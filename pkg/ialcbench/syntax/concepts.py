"""
Abstract syntax of iALC: concepts, statements and sequents.

All syntax objects are immutable and hashable, so they can be used as dictionary keys and collected in sets
and :class:`collections.Counter` multisets.
"""
from collections import Counter, namedtuple
from dataclasses import dataclass


class Concept:
    """Base class of concept expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Concept):
    name: str


@dataclass(frozen=True)
class Bottom(Concept):
    pass


@dataclass(frozen=True)
class Top(Concept):
    pass


@dataclass(frozen=True)
class Not(Concept):
    body: Concept


@dataclass(frozen=True)
class And(Concept):
    left: Concept
    right: Concept


@dataclass(frozen=True)
class Or(Concept):
    left: Concept
    right: Concept


@dataclass(frozen=True)
class Subs(Concept):
    """Subsumption used as a concept constructor (C -> D)."""

    left: Concept
    right: Concept


@dataclass(frozen=True)
class Exists(Concept):
    role: str
    body: Concept


@dataclass(frozen=True)
class Forall(Concept):
    role: str
    body: Concept


class Statement:
    """Base class of statements (hybrid formulas)."""

    __slots__ = ()


@dataclass(frozen=True)
class NominalAssertion(Statement):
    """
    `nominal : body` where body is a concept or, nested, another statement.
    """

    nominal: str
    body: object


@dataclass(frozen=True)
class RoleAssertion(Statement):
    subject: str
    role: str
    object: str


@dataclass(frozen=True)
class ConceptFormula(Statement):
    """A concept used as a global formula, the form TBox members take."""

    body: Concept


@dataclass(frozen=True)
class Sequent:
    """
    Labeled sequent `theta | antecedent |- succedent`.

    Attributes
    ----------
    theta : tuple of ConceptFormula
        TBox members in declared order. Compared as a set by :meth:`key`.

    antecedent : tuple
        Statements and concepts in declared order. Compared as a multiset by :meth:`key`.

    succedent : Statement or Concept
        The single right hand side item.
    """

    theta: tuple
    antecedent: tuple
    succedent: object

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "antecedent", tuple(self.antecedent))

    def key(self):
        """
        Return a hashable key identifying the sequent up to TBox order and antecedent permutation.
        """
        return (
            frozenset(self.theta),
            frozenset(Counter(self.antecedent).items()),
            self.succedent,
        )

    def same_as(self, other):
        return self.key() == other.key()

    def replace(self, antecedent=None, succedent=None):
        """
        Return a copy with the same TBox and the given antecedent and/or succedent.
        """
        return Sequent(
            self.theta,
            self.antecedent if antecedent is None else antecedent,
            self.succedent if succedent is None else succedent,
        )


Signature = namedtuple("Signature", ["atoms", "roles", "nominals"])
Signature.__doc__ = "Sorted tuples of atom, role and nominal names a query ranges over."


def is_concept(item):
    return isinstance(item, Concept)


def is_statement(item):
    return isinstance(item, Statement)


def outer_nominal(statement):
    """
    Return the topmost label of a nominal assertion, or None for other items.
    """
    if isinstance(statement, NominalAssertion):
        return statement.nominal
    return None


def _walk(obj, atoms, roles, nominals):
    if isinstance(obj, Atom):
        atoms.add(obj.name)
    elif isinstance(obj, (Bottom, Top)):
        pass
    elif isinstance(obj, Not):
        _walk(obj.body, atoms, roles, nominals)
    elif isinstance(obj, (And, Or, Subs)):
        _walk(obj.left, atoms, roles, nominals)
        _walk(obj.right, atoms, roles, nominals)
    elif isinstance(obj, (Exists, Forall)):
        roles.add(obj.role)
        _walk(obj.body, atoms, roles, nominals)
    elif isinstance(obj, NominalAssertion):
        nominals.add(obj.nominal)
        _walk(obj.body, atoms, roles, nominals)
    elif isinstance(obj, RoleAssertion):
        nominals.add(obj.subject)
        nominals.add(obj.object)
        roles.add(obj.role)
    elif isinstance(obj, ConceptFormula):
        _walk(obj.body, atoms, roles, nominals)
    elif isinstance(obj, Sequent):
        for item in obj.theta + obj.antecedent + (obj.succedent,):
            _walk(item, atoms, roles, nominals)
    else:
        raise TypeError(f"not an iALC syntax object: {obj!r}")


def signature_of(*objects):
    """
    Collect the atoms, roles and nominals occurring in the given syntax objects.

    Returns
    -------
    out : Signature
    """
    atoms, roles, nominals = set(), set(), set()
    for obj in objects:
        _walk(obj, atoms, roles, nominals)
    return Signature(
        tuple(sorted(atoms)), tuple(sorted(roles)), tuple(sorted(nominals))
    )


def merge_signatures(*sigs):
    return Signature(
        tuple(sorted(set().union(*(s.atoms for s in sigs)))),
        tuple(sorted(set().union(*(s.roles for s in sigs)))),
        tuple(sorted(set().union(*(s.nominals for s in sigs)))),
    )


def nominals_of(*objects):
    return set(signature_of(*objects).nominals)


def concept_depth(concept):
    if isinstance(concept, (Atom, Bottom, Top)):
        return 0
    if isinstance(concept, (Not, Exists, Forall)):
        return 1 + concept_depth(concept.body)
    return 1 + max(concept_depth(concept.left), concept_depth(concept.right))


def atoms_of(*objects):
    return set(signature_of(*objects).atoms)


def roles_of(*objects):
    return set(signature_of(*objects).roles)
