"""
Finite constructive Kripke interpretations.

An :class:`Interpretation` is immutable. Internally every relation is kept as a tuple of integer bit sets indexed
by entity position: ``up[i]`` holds the entities refining entity ``i`` (its row of the preorder closure) and
``succ[R][i]`` holds the R-successors of ``i``. Atom extensions are single bit sets.
"""
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from ialcbench.errors import UnmappedNominalError
from ialcbench.syntax import Signature
from ialcbench.utils import iter_bits, mask_of, full_mask


def reflexive_transitive_closure(n, edges):
    """
    Compute the reflexive-transitive closure of a relation over ``range(n)``.

    Parameters
    ----------
    n : int
        Number of nodes.

    edges : iterable of (int, int)
        Generating pairs.

    Returns
    -------
    closure : np.ndarray
        Boolean matrix of shape (n, n) with ``closure[i, j]`` true iff j is reachable from i.
    """
    graph = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        graph[i, j] = True
    dist = shortest_path(csr_matrix(graph), directed=True, unweighted=True)
    return np.isfinite(dist)


def _row_masks(matrix):
    return tuple(mask_of(np.flatnonzero(row)) for row in matrix)


class Interpretation:
    """
    Finite constructive interpretation of iALC.

    Parameters
    ----------
    entities : sequence of str
        Entity ids, in canonical order.

    precedes : iterable of (str, str)
        Generators of the refinement preorder. The reflexive-transitive closure is computed automatically.

    roles : dict
        Maps a role name to an iterable of entity pairs.

    valuation : dict
        Maps an atom name to an iterable of entities.

    nominals : dict
        Maps a nominal name to an entity.

    closure : array-like, optional
        Explicit boolean matrix used as the stored preorder instead of the computed closure. Only useful for
        linting relations that are not preorders.
    """

    def __init__(
        self,
        entities,
        precedes=(),
        roles=None,
        valuation=None,
        nominals=None,
        closure=None,
    ):
        entities = tuple(entities)
        assert len(entities) > 0, "an interpretation needs at least one entity"
        assert len(set(entities)) == len(entities), "entity ids must be unique"
        index = {e: i for i, e in enumerate(entities)}
        precedes = tuple((a, b) for a, b in precedes)
        self._entities = entities
        self._index = index
        self._precedes = precedes
        if closure is None:
            closure = reflexive_transitive_closure(
                len(entities), [(self.index(a), self.index(b)) for a, b in precedes]
            )
        else:
            closure = np.asarray(closure, dtype=bool)
            assert closure.shape == (len(entities),) * 2
        self._closure = closure
        self._up = _row_masks(closure)
        self._succ = {}
        for role, pairs in (roles or {}).items():
            succ = [0] * len(entities)
            for a, b in pairs:
                succ[self.index(a)] |= 1 << self.index(b)
            self._succ[role] = tuple(succ)
        self._atoms = {
            atom: mask_of(self.index(e) for e in members)
            for atom, members in (valuation or {}).items()
        }
        self._nominals = {}
        for name, entity in (nominals or {}).items():
            self.index(entity)
            self._nominals[name] = entity
        self._reach = {}

    @classmethod
    def from_masks(cls, entities, up, succ, atoms, nominals, precedes=()):
        """
        Build an interpretation directly from bit set tables.

        This skips all validation and is what enumeration uses. `up` must already be the closed preorder.
        """
        obj = cls.__new__(cls)
        obj._entities = entities
        obj._index = None
        obj._precedes = precedes
        obj._closure = None
        obj._up = up
        obj._succ = succ
        obj._atoms = atoms
        obj._nominals = nominals
        obj._reach = {}
        return obj

    # --- structure -----------------------------------------------------------------------------------------

    @property
    def entities(self):
        return self._entities

    @property
    def n_entities(self):
        return len(self._entities)

    @property
    def precedes(self):
        """Generators of the preorder, as given."""
        return self._precedes

    @property
    def closure(self):
        """Boolean matrix of the stored preorder."""
        if self._closure is None:
            n = self.n_entities
            self._closure = np.array(
                [[bool(self._up[i] >> j & 1) for j in range(n)] for i in range(n)],
                dtype=bool,
            )
        return self._closure

    @property
    def roles(self):
        return {
            role: frozenset(
                (self._entities[i], self._entities[j])
                for i, row in enumerate(succ)
                for j in iter_bits(row)
            )
            for role, succ in self._succ.items()
        }

    @property
    def valuation(self):
        return {atom: self.entities_of(mask) for atom, mask in self._atoms.items()}

    @property
    def nominals(self):
        return dict(self._nominals)

    @property
    def atom_names(self):
        """Atom names in declaration order."""
        return tuple(self._atoms)

    @property
    def role_names(self):
        """Role names in declaration order."""
        return tuple(self._succ)

    def signature(self):
        return Signature(
            tuple(sorted(self._atoms)),
            tuple(sorted(self._succ)),
            tuple(sorted(self._nominals)),
        )

    def index(self, entity):
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self._entities)}
        try:
            return self._index[entity]
        except KeyError:
            raise ValueError(f"unknown entity {entity!r}") from None

    def entity_of(self, nominal):
        """
        Return the entity a nominal denotes.

        Raises
        ------
        UnmappedNominalError
            If the nominal is not mapped.
        """
        try:
            return self._nominals[nominal]
        except KeyError:
            raise UnmappedNominalError(nominal) from None

    def refines(self, a, b):
        """True iff a precedes b in the stored preorder (b refines a)."""
        return bool(self._up[self.index(a)] >> self.index(b) & 1)

    def entities_of(self, mask):
        return frozenset(self._entities[i] for i in iter_bits(mask))

    def mask(self, entities):
        return mask_of(self.index(e) for e in entities)

    # --- bit set tables used by evaluation -----------------------------------------------------------------

    @property
    def full(self):
        return full_mask(self.n_entities)

    def up(self, i):
        return self._up[i]

    def successors(self, role):
        """Tuple of successor bit sets for a role; unknown roles have none."""
        succ = self._succ.get(role)
        if succ is None:
            return (0,) * self.n_entities
        return succ

    def reach(self, role):
        """
        For each entity x the bit set of R-successors of any refinement of x.
        """
        if role not in self._reach:
            succ = self.successors(role)
            self._reach[role] = tuple(
                _union(succ[y] for y in iter_bits(self._up[x]))
                for x in range(self.n_entities)
            )
        return self._reach[role]

    def atom_mask(self, atom):
        return self._atoms.get(atom, 0)

    def nominal_index(self, nominal):
        return self.index(self.entity_of(nominal))

    # --- derived copies ------------------------------------------------------------------------------------

    def replace(self, precedes=None, roles=None, valuation=None, nominals=None):
        """
        Return a copy with some components replaced. The preorder closure is recomputed when `precedes` is given.
        """
        return Interpretation(
            self._entities,
            self._precedes if precedes is None else precedes,
            self.roles if roles is None else roles,
            self.valuation if valuation is None else valuation,
            self._nominals if nominals is None else nominals,
            closure=self.closure if precedes is None else None,
        )

    def with_atom_masks(self, atoms):
        return Interpretation.from_masks(
            self._entities,
            self._up,
            self._succ,
            dict(atoms),
            self._nominals,
            self._precedes,
        )

    def _key(self):
        return (
            self._entities,
            self._up,
            tuple(sorted(self._succ.items())),
            tuple(sorted(self._atoms.items())),
            tuple(sorted(self._nominals.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, Interpretation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (
            f"Interpretation(entities={self._entities}, precedes={self._precedes}, "
            f"roles={self.roles}, valuation={self.valuation}, "
            f"nominals={self._nominals})"
        )


def _union(masks):
    out = 0
    for m in masks:
        out |= m
    return out
