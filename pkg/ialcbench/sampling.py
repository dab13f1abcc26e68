"""
Seeded random generation of interpretations, concepts and sequents for property suites.
"""
import numpy as np

from ialcbench.syntax import (
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
    Signature,
)
from ialcbench.semantics import Interpretation, check_frame_conditions
from ialcbench.utils import iter_bits, mask_of

_BINARY = (And, Or, Subs)
_QUANTIFIERS = (Exists, Forall)


def repair_roles(up, succ):
    """
    Close a role relation under the preorder on both sides.

    Every edge w -> v is copied to w' -> v' for all refinements w' of w and v' of v. The preorder is transitive, so
    one pass reaches the least closed superset, which also satisfies F1 and F2.

    Parameters
    ----------
    up : sequence of int
        Closed preorder as bit set rows.

    succ : sequence of int
        Successor bit sets.

    Returns
    -------
    out : tuple of int
    """
    closed = [0] * len(up)
    for w in range(len(up)):
        targets = 0
        for v in iter_bits(succ[w]):
            targets |= up[v]
        for w2 in iter_bits(up[w]):
            closed[w2] |= targets
    return tuple(closed)


class Sampler:
    """
    Random syntax and interpretations drawn from a :class:`numpy.random.RandomState`.

    Parameters
    ----------
    seed : int
        Random seed. If None, the state is seeded from the operating system.

    atoms : sequence of str

    roles : sequence of str

    nominals : sequence of str
    """

    def __init__(self, seed=None, atoms=("A", "B"), roles=("R",), nominals=("x", "y")):
        self.set_seed(seed)
        self.atoms = tuple(atoms)
        self.roles = tuple(roles)
        self.nominals = tuple(nominals)

    @property
    def rng(self):
        return self._rng

    def get_seed(self):
        return self._seed

    def set_seed(self, value):
        self._seed = value
        self._rng = np.random.RandomState(value)

    @property
    def signature(self):
        return Signature(self.atoms, self.roles, self.nominals)

    def _pick(self, options):
        return options[self.rng.randint(len(options))]

    # --- interpretations -----------------------------------------------------------------------------------

    def interpretation(self, max_entities=4, edge_p=0.3, atom_p=0.3, role_p=0.2):
        """
        Draw a linted interpretation over the sampler's signature.

        The preorder is the closure of random edges, atom extensions are upward closures of random sets and role
        relations are random edge sets closed with :func:`repair_roles`.

        Returns
        -------
        interp : :class:`ialcbench.semantics.Interpretation`
        """
        n = self.rng.randint(1, max_entities + 1)
        names = tuple(f"e{i}" for i in range(n))
        edges = [
            (names[i], names[j])
            for i in range(n)
            for j in range(n)
            if i != j and self.rng.rand() < edge_p
        ]
        frame = Interpretation(names, edges)
        up = tuple(frame.up(i) for i in range(n))

        valuation = {}
        for atom in self.atoms:
            seeds = [i for i in range(n) if self.rng.rand() < atom_p]
            closed = 0
            for i in seeds:
                closed |= up[i]
            valuation[atom] = [names[i] for i in iter_bits(closed)]

        roles = {}
        for role in self.roles:
            raw = [
                mask_of(j for j in range(n) if self.rng.rand() < role_p)
                for _ in range(n)
            ]
            succ = repair_roles(up, raw)
            roles[role] = [
                (names[i], names[j]) for i in range(n) for j in iter_bits(succ[i])
            ]

        nominals = {x: names[self.rng.randint(n)] for x in self.nominals}
        interp = Interpretation(names, edges, roles, valuation, nominals)
        assert check_frame_conditions(interp).passed
        return interp

    # --- syntax ----------------------------------------------------------------------------------------------

    def concept(self, max_depth=3):
        """Draw a concept of depth at most `max_depth`."""
        if max_depth == 0 or self.rng.rand() < 0.25:
            roll = self.rng.rand()
            if roll < 0.1:
                return Bottom()
            if roll < 0.2:
                return Top()
            return Atom(self._pick(self.atoms))
        kind = self.rng.randint(4)
        if kind == 0:
            return Not(self.concept(max_depth - 1))
        if kind == 1:
            cls = self._pick(_BINARY)
            return cls(self.concept(max_depth - 1), self.concept(max_depth - 1))
        cls = self._pick(_QUANTIFIERS)
        return cls(self._pick(self.roles), self.concept(max_depth - 1))

    def statement(self, max_depth=2, nesting=0.15):
        roll = self.rng.rand()
        if roll < 0.2:
            return RoleAssertion(
                self._pick(self.nominals),
                self._pick(self.roles),
                self._pick(self.nominals),
            )
        if roll < 0.2 + nesting:
            return NominalAssertion(
                self._pick(self.nominals), self.statement(max_depth, nesting / 2)
            )
        return NominalAssertion(self._pick(self.nominals), self.concept(max_depth))

    def item(self, max_depth=2):
        if self.rng.rand() < 0.4:
            return self.concept(max_depth)
        return self.statement(max_depth)

    def sequent(self, max_items=3, max_depth=2, tbox_p=0.2):
        theta = []
        if self.rng.rand() < tbox_p:
            left, right = self.concept(max_depth - 1), self.concept(max_depth - 1)
            theta.append(ConceptFormula(Subs(left, right)))
        count = self.rng.randint(max_items + 1)
        antecedent = [self.item(max_depth) for _ in range(count)]
        return Sequent(theta, antecedent, self.item(max_depth))

    def theorem_goal(self, max_depth=1):
        """
        Draw a provable sequent from a fixed list of templates filled with random concepts.

        Proofs of these goals exercise most rules of the calculus, which makes them a source of rule instances
        with valid premises.
        """
        a, b = self.concept(max_depth), self.concept(max_depth)
        role = self._pick(self.roles)
        x, y = self.nominals[0], self.nominals[1]
        templates = [
            ((), Subs(a, a)),
            ((And(a, b),), And(b, a)),
            ((a,), Or(a, b)),
            ((b,), Or(a, b)),
            ((Or(a, b),), Or(b, a)),
            ((Subs(a, b), a), b),
            ((Forall(role, Subs(a, b)), Forall(role, a)), Forall(role, b)),
            ((Forall(role, Subs(a, b)), Exists(role, a)), Exists(role, b)),
            ((NominalAssertion(x, And(a, b)),), NominalAssertion(x, And(b, a))),
            (
                (NominalAssertion(x, a), NominalAssertion(x, Subs(a, b))),
                NominalAssertion(x, b),
            ),
            (
                (RoleAssertion(x, role, y), NominalAssertion(y, a)),
                NominalAssertion(x, Exists(role, a)),
            ),
            (
                (NominalAssertion(x, Forall(role, a)), RoleAssertion(x, role, y)),
                NominalAssertion(y, a),
            ),
            (
                (NominalAssertion(x, Exists(role, a)),),
                NominalAssertion(x, Exists(role, Or(a, b))),
            ),
            (
                (NominalAssertion(x, Not(a)), NominalAssertion(x, a)),
                NominalAssertion(x, Bottom()),
            ),
            ((Bottom(),), a),
            ((a,), Top()),
        ]
        antecedent, succedent = templates[self.rng.randint(len(templates))]
        theta = ()
        if self.rng.rand() < 0.1:
            theta = (ConceptFormula(Subs(a, b)),)
            antecedent = (NominalAssertion(x, a),)
            succedent = NominalAssertion(x, b)
        return Sequent(theta, antecedent, succedent)
