"""
Evaluation of concepts, statements and sequents on an interpretation.

Concept extensions are computed as bit sets over entity positions. Atoms and roles the interpretation does not
declare evaluate to the empty extension and the empty relation.
"""
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
    is_concept,
)


def _select(interp, test):
    out = 0
    for x in range(interp.n_entities):
        if test(x):
            out |= 1 << x
    return out


def extension_mask(interp, concept):
    """
    Return the extension of a concept as a bit set over entity positions.
    """
    if isinstance(concept, Atom):
        return interp.atom_mask(concept.name)
    if isinstance(concept, Top):
        return interp.full
    if isinstance(concept, Bottom):
        return 0
    if isinstance(concept, Not):
        body = extension_mask(interp, concept.body)
        return _select(interp, lambda x: interp.up(x) & body == 0)
    if isinstance(concept, And):
        left = extension_mask(interp, concept.left)
        return left & extension_mask(interp, concept.right)
    if isinstance(concept, Or):
        left = extension_mask(interp, concept.left)
        return left | extension_mask(interp, concept.right)
    if isinstance(concept, Subs):
        left = extension_mask(interp, concept.left)
        right = extension_mask(interp, concept.right)
        return _select(interp, lambda x: interp.up(x) & left & ~right == 0)
    if isinstance(concept, Exists):
        body = extension_mask(interp, concept.body)
        succ = interp.successors(concept.role)
        return _select(interp, lambda x: succ[x] & body != 0)
    if isinstance(concept, Forall):
        body = extension_mask(interp, concept.body)
        reach = interp.reach(concept.role)
        return _select(interp, lambda x: reach[x] & ~body == 0)
    raise TypeError(f"not a concept: {concept!r}")


def eval_concept(interp, concept):
    """
    Compute the extension of a concept.

    Parameters
    ----------
    interp : :class:`ialcbench.semantics.Interpretation`
        A linted interpretation.

    concept : :class:`ialcbench.syntax.Concept`

    Returns
    -------
    out : frozenset of str
        Entity ids in the extension.
    """
    return interp.entities_of(extension_mask(interp, concept))


def satisfies_statement(interp, statement):
    """
    Decide whether an interpretation satisfies a statement.

    ``x : C`` holds iff every refinement of x is in the extension of C, ``x : (y : ...)`` holds iff the inner
    statement holds, ``x R y`` holds iff every refinement of x is R-related to every refinement of y and a
    concept formula holds iff its extension is total.

    Raises
    ------
    UnmappedNominalError
        If the statement mentions a nominal without an entity.
    """
    if isinstance(statement, NominalAssertion):
        x = interp.nominal_index(statement.nominal)
        body = statement.body
        if is_concept(body):
            return interp.up(x) & ~extension_mask(interp, body) == 0
        return satisfies_statement(interp, body)
    if isinstance(statement, RoleAssertion):
        x = interp.nominal_index(statement.subject)
        y = interp.nominal_index(statement.object)
        succ = interp.successors(statement.role)
        up_y = interp.up(y)
        for z in range(interp.n_entities):
            if interp.up(x) >> z & 1 and succ[z] & up_y != up_y:
                return False
        return True
    if isinstance(statement, ConceptFormula):
        return extension_mask(interp, statement.body) == interp.full
    raise TypeError(f"not a statement: {statement!r}")


def item_mask(interp, item):
    """
    Return the entities at which a sequent member holds.

    Concepts hold at the members of their extension; statements hold everywhere or nowhere.
    """
    if is_concept(item):
        return extension_mask(interp, item)
    return interp.full if satisfies_statement(interp, item) else 0


def sequent_valid(interp, sequent):
    """
    Decide whether a sequent is valid on an interpretation.

    The TBox is read globally: if some TBox member does not hold at every entity the sequent is vacuously valid.
    Otherwise the sequent is valid iff at every entity where all antecedent members hold the succedent holds.

    Parameters
    ----------
    interp : :class:`ialcbench.semantics.Interpretation`

    sequent : :class:`ialcbench.syntax.Sequent`

    Returns
    -------
    out : bool
    """
    if not isinstance(sequent, Sequent):
        raise TypeError(f"not a sequent: {sequent!r}")
    full = interp.full
    for formula in sequent.theta:
        if extension_mask(interp, formula.body) != full:
            return True
    holds = full
    for item in sequent.antecedent:
        holds &= item_mask(interp, item)
    return holds & ~item_mask(interp, sequent.succedent) == 0
