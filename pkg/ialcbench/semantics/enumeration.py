"""
Canonical exhaustive enumeration of small linted interpretations and countermodel search.

Interpretations with ``n`` entities are named ``w0 .. w{n-1}``. The enumeration order is: entity count
ascending; preorders as closures of off-diagonal edge sets in increasing edge-set order, keeping the first member
of every isomorphism class; then hereditary valuations (atoms in sorted order, extensions by increasing bit set);
then role relations closed under the preorder on both sides (roles in sorted order, relations by increasing
bit set); then nominal maps (nominals in sorted order, entities by position).
"""
from functools import lru_cache
from itertools import permutations, product

from ialcbench.logging import logger
from ialcbench.settings import settings
from ialcbench.syntax import signature_of, merge_signatures, Signature
from ialcbench.semantics.interpretation import (
    Interpretation,
    reflexive_transitive_closure,
)
from ialcbench.semantics.evaluation import sequent_valid
from ialcbench.utils import iter_bits, mask_of, check_cap, full_mask


@lru_cache(maxsize=None)
def entity_names(n):
    return tuple(f"w{i}" for i in range(n))


def _off_diagonal_pairs(n):
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def _canonical_key(n, up):
    best = None
    for perm in permutations(range(n)):
        relabeled = [0] * n
        for i in range(n):
            relabeled[perm[i]] = mask_of(perm[j] for j in iter_bits(up[i]))
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def preorder_representatives(n):
    """
    Return one preorder per isomorphism class over ``n`` entities.

    Returns
    -------
    out : tuple of (edges, up)
        `edges` is the generating edge set (pairs of positions) and `up` the closed preorder as bit set rows.
    """
    pairs = _off_diagonal_pairs(n)
    seen = set()
    reps = []
    for edge_mask in range(1 << len(pairs)):
        edges = tuple(pairs[k] for k in iter_bits(edge_mask))
        closure = reflexive_transitive_closure(n, edges)
        up = tuple(mask_of(j for j in range(n) if closure[i, j]) for i in range(n))
        key = _canonical_key(n, up)
        if key not in seen:
            seen.add(key)
            reps.append((edges, up))
    logger().debug(
        f"preorder_representatives : {len(reps)} preorders over {n} entities"
    )
    return tuple(reps)


@lru_cache(maxsize=None)
def upsets(up):
    """
    Return all subsets closed under the preorder, as increasing bit sets.
    """
    n = len(up)
    return tuple(
        m for m in range(1 << n) if all(up[i] & ~m == 0 for i in iter_bits(m))
    )


def frame_conditions_hold(up, succ):
    """
    Check that a role relation, given as successor bit sets, is closed under the preorder on both sides.

    Closure implies F1 and F2.
    """
    for w in range(len(up)):
        for v in iter_bits(succ[w]):
            for w2 in iter_bits(up[w]):
                if up[v] & ~succ[w2]:
                    return False
    return True


@lru_cache(maxsize=None)
def valid_roles(up):
    """
    Return every role relation over the preorder passing the role frame conditions, as tuples of successor bit sets.
    """
    n = len(up)
    row = full_mask(n)
    out = []
    for rel in range(1 << (n * n)):
        succ = tuple((rel >> (i * n)) & row for i in range(n))
        if frame_conditions_hold(up, succ):
            out.append(succ)
    logger().debug(
        f"valid_roles : {len(out)} role relations pass the frame conditions"
    )
    return tuple(out)


def iter_interpretations(signature, max_entities):
    """
    Enumerate, in canonical order, all linted interpretations over a signature with at most `max_entities`.

    Parameters
    ----------
    signature : :class:`ialcbench.syntax.Signature`
        Atoms, roles and nominals to interpret. Names are used in sorted order.

    max_entities : int
        Largest entity count.

    Returns
    -------
    out : generator of :class:`ialcbench.semantics.Interpretation`
    """
    atoms = tuple(sorted(signature.atoms))
    roles = tuple(sorted(signature.roles))
    nominals = tuple(sorted(signature.nominals))
    for n in range(1, max_entities + 1):
        names = entity_names(n)
        for edges, up in preorder_representatives(n):
            precedes = tuple((names[i], names[j]) for i, j in edges)
            hereditary = upsets(up)
            relations = valid_roles(up) if roles else ()
            for atom_masks in product(hereditary, repeat=len(atoms)):
                atom_table = dict(zip(atoms, atom_masks))
                for succs in product(relations, repeat=len(roles)):
                    succ_table = dict(zip(roles, succs))
                    for targets in product(range(n), repeat=len(nominals)):
                        yield Interpretation.from_masks(
                            names,
                            up,
                            succ_table,
                            atom_table,
                            {x: names[t] for x, t in zip(nominals, targets)},
                            precedes,
                        )


def find_countermodel(signature, sequent, max_entities):
    """
    Search exhaustively for the canonically least interpretation falsifying a sequent.

    Parameters
    ----------
    signature : :class:`ialcbench.syntax.Signature` or None
        Extra names to interpret; the sequent's own atoms, roles and nominals are always included.

    sequent : :class:`ialcbench.syntax.Sequent`

    max_entities : int
        Largest entity count, at most ``settings["COUNTERMODEL_CAP"]``.

    Returns
    -------
    out : :class:`ialcbench.semantics.Interpretation` or None
        The first falsifying interpretation in canonical order, or None if the sequent holds on all of them.

    Raises
    ------
    CapExceededError
        If `max_entities` is larger than the configured cap.
    """
    check_cap("max entities", max_entities, settings["COUNTERMODEL_CAP"])
    own = signature_of(sequent)
    sig = own if signature is None else merge_signatures(Signature(*signature), own)
    checked = 0
    for interp in iter_interpretations(sig, max_entities):
        checked += 1
        if not sequent_valid(interp, sequent):
            logger().debug(
                f"find_countermodel : countermodel found after {checked} candidates"
            )
            return interp
    logger().debug(f"find_countermodel : no countermodel among {checked} candidates")
    return None


def is_valid(sequent, max_entities, signature=None):
    """
    True iff no interpretation of at most `max_entities` entities falsifies the sequent.
    """
    return find_countermodel(signature, sequent, max_entities) is None
