from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np

from ialcbench.utils import iter_bits

Violation = namedtuple("Violation", ["tag", "witness", "role"], defaults=(None,))
Violation.__doc__ = """
A failed condition together with the entities witnessing it.

`tag` is one of REFL, TRANS, HEREDITY, F1, F2 or ROLE-MONOTONE. `role` names the role relation for F1, F2 and
ROLE-MONOTONE.
"""

REFL = "REFL"
TRANS = "TRANS"
HEREDITY = "HEREDITY"
F1 = "F1"
F2 = "F2"
ROLE_MONOTONE = "ROLE-MONOTONE"


@dataclass(frozen=True)
class LintReport:
    """
    Result of :func:`check_frame_conditions`.

    Attributes
    ----------
    violations : tuple of Violation
        Every violated condition, in the order REFL, TRANS, HEREDITY, then F1, F2 and ROLE-MONOTONE per role.
    """

    violations: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return len(self.violations) == 0

    def tags(self):
        return {v.tag for v in self.violations}


def check_frame_conditions(interp):
    """
    Lint an interpretation against the preorder, heredity and frame conditions.

    Parameters
    ----------
    interp : :class:`ialcbench.semantics.Interpretation`

    Returns
    -------
    report : LintReport
        Reports every violation, each with a minimal witness tuple of entity ids:
        REFL ``(w,)``, TRANS ``(a, b, c)`` with the least middle entity b, HEREDITY ``(w, w', A)``,
        F1 ``(w, w', v)``, F2 ``(w, v, v')`` and ROLE-MONOTONE ``(w, v, w', v')``. ROLE-MONOTONE implies F1 and F2 and
        is only reported for a role that satisfies both.
    """
    names = interp.entities
    n = interp.n_entities
    violations = []

    closure = interp.closure
    for w in range(n):
        if not closure[w, w]:
            violations.append(Violation(REFL, (names[w],)))
    two_step = closure.astype(np.int64) @ closure.astype(np.int64) > 0
    for a, c in zip(*np.nonzero(two_step & ~closure)):
        b = next(b for b in range(n) if closure[a, b] and closure[b, c])
        violations.append(Violation(TRANS, (names[a], names[b], names[c])))

    for atom in interp.atom_names:
        mask = interp.atom_mask(atom)
        for w in iter_bits(mask):
            for w2 in iter_bits(interp.up(w) & ~mask):
                violations.append(Violation(HEREDITY, (names[w], names[w2], atom)))

    for role in interp.role_names:
        before = len(violations)
        succ = interp.successors(role)
        reach = interp.reach(role)
        for w in range(n):
            for w2 in iter_bits(interp.up(w)):
                for v in iter_bits(succ[w]):
                    if succ[w2] & interp.up(v) == 0:
                        triple = (names[w], names[w2], names[v])
                        violations.append(Violation(F1, triple, role))
        for w in range(n):
            for v in iter_bits(succ[w]):
                for v2 in iter_bits(interp.up(v) & ~reach[w]):
                    triple = (names[w], names[v], names[v2])
                    violations.append(Violation(F2, triple, role))
        witness = _monotonicity_witness(interp, succ)
        if witness is not None and len(violations) == before:
            violations.append(
                Violation(ROLE_MONOTONE, tuple(names[i] for i in witness), role)
            )
    return LintReport(tuple(violations))


def _monotonicity_witness(interp, succ):
    for w in range(len(succ)):
        for v in iter_bits(succ[w]):
            for w2 in iter_bits(interp.up(w)):
                missing = interp.up(v) & ~succ[w2]
                if missing:
                    return (w, v, w2, next(iter_bits(missing)))
    return None


def hereditary_closure(interp):
    """
    Extend every atom extension to the least superset closed under refinement.

    Roles, nominals and the preorder are unchanged and the operation is idempotent.
    """
    atoms = {}
    for atom in interp.atom_names:
        mask = interp.atom_mask(atom)
        closed = mask
        for w in iter_bits(mask):
            closed |= interp.up(w)
        atoms[atom] = closed
    return interp.with_atom_masks(atoms)
