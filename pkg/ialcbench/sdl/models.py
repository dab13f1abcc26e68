"""
Finite Kripke models of KD and bounded satisfiability search.

Worlds of an enumerated model are named ``w0 .. w{n-1}``. Enumeration order: world count ascending, then
accessibility relations (successor bit set of each world, lowest world varying slowest, by increasing bit set),
then valuations (propositions in sorted order, extensions by increasing bit set); the witness world is the lowest
world satisfying every formula.
"""
from dataclasses import dataclass, field
from itertools import product

from ialcbench.logging import logger
from ialcbench.settings import settings
from ialcbench.sdl.formulas import (
    Prop,
    Falsum,
    Neg,
    Conj,
    Disj,
    Impl,
    Ob,
    props_of,
    print_formula,
)
from ialcbench.utils import iter_bits, full_mask, check_cap


@dataclass(frozen=True)
class KDModel:
    """
    A Kripke model with a designated world.

    Attributes
    ----------
    worlds : tuple of str

    access : frozenset of (str, str)
        Deontic accessibility; serial in KD models.

    valuation : dict
        Maps a proposition name to the frozenset of worlds where it is true.

    world : str
        The world at which the formulas of a query hold.
    """

    worlds: tuple
    access: frozenset
    valuation: dict = field(hash=False)
    world: str = None

    def is_serial(self):
        return all(any(a == w for a, _ in self.access) for w in self.worlds)

    def describe(self):
        """Return a short multi-line text description."""
        lines = [f"worlds {' '.join(self.worlds)}"]
        lines += [f"access {a} {b}" for a, b in sorted(self.access)]
        for name, members in sorted(self.valuation.items()):
            lines.append(f"true {name} {' '.join(sorted(members))}".rstrip())
        lines.append(f"at {self.world}")
        return "\n".join(lines)


def _mask(formula, succ, val, full):
    if isinstance(formula, Prop):
        return val.get(formula.name, 0)
    if isinstance(formula, Falsum):
        return 0
    if isinstance(formula, Neg):
        return full & ~_mask(formula.body, succ, val, full)
    if isinstance(formula, (Conj, Disj, Impl)):
        left = _mask(formula.left, succ, val, full)
        right = _mask(formula.right, succ, val, full)
        if isinstance(formula, Conj):
            return left & right
        if isinstance(formula, Disj):
            return left | right
        return (full & ~left) | right
    if isinstance(formula, Ob):
        body = _mask(formula.body, succ, val, full)
        out = 0
        for w, s in enumerate(succ):
            if s & ~body == 0:
                out |= 1 << w
        return out
    raise TypeError(f"not an SDL formula: {formula!r}")


def _tables(model):
    index = {w: i for i, w in enumerate(model.worlds)}
    succ = [0] * len(model.worlds)
    for a, b in model.access:
        succ[index[a]] |= 1 << index[b]
    val = {
        p: sum(1 << index[w] for w in members)
        for p, members in model.valuation.items()
    }
    return index, succ, val


def holds_at(model, formula, world=None):
    """True iff `formula` is true at `world` (default: the model's designated world)."""
    index, succ, val = _tables(model)
    world = model.world if world is None else world
    mask = _mask(formula, succ, val, full_mask(len(model.worlds)))
    return bool(mask >> index[world] & 1)


def holds_everywhere(model, formula):
    _, succ, val = _tables(model)
    full = full_mask(len(model.worlds))
    return _mask(formula, succ, val, full) == full


def iter_kd_models(props, max_worlds, serial=True):
    """
    Enumerate Kripke models over the given propositions in canonical order.

    Parameters
    ----------
    props : iterable of str

    max_worlds : int

    serial : bool
        If False, relations where a world has no successor are enumerated too.

    Returns
    -------
    out : generator of (names, successor bit sets, valuation bit sets)
    """
    props = tuple(sorted(props))
    for n in range(1, max_worlds + 1):
        names = tuple(f"w{i}" for i in range(n))
        first = 1 if serial else 0
        for succ in product(range(first, 1 << n), repeat=n):
            for masks in product(range(1 << n), repeat=len(props)):
                yield names, succ, dict(zip(props, masks))


def _to_model(names, succ, val, world):
    access = frozenset(
        (names[a], names[b]) for a in range(len(names)) for b in iter_bits(succ[a])
    )
    valuation = {p: frozenset(names[i] for i in iter_bits(m)) for p, m in val.items()}
    return KDModel(names, access, valuation, names[world])


def sdl_find_model(formulas, max_worlds, serial=True):
    """
    Search for a KD model and world satisfying all formulas simultaneously.

    Parameters
    ----------
    formulas : sequence of SDLFormula

    max_worlds : int
        Largest world count, at most ``settings["SDL_WORLD_CAP"]``.

    serial : bool
        Restrict to serial accessibility relations (KD). Dropping seriality gives plain K models.

    Returns
    -------
    model : KDModel or None
        The canonically least witness, or None.

    Raises
    ------
    CapExceededError
        If `max_worlds` is larger than the configured cap.
    """
    check_cap("max worlds", max_worlds, settings["SDL_WORLD_CAP"])
    formulas = list(formulas)
    checked = 0
    for names, succ, val in iter_kd_models(props_of(*formulas), max_worlds, serial):
        checked += 1
        full = full_mask(len(names))
        common = full
        for f in formulas:
            common &= _mask(f, succ, val, full)
            if not common:
                break
        if common:
            world = next(iter_bits(common))
            logger().debug(f"sdl_find_model : witness after {checked} candidates")
            return _to_model(names, succ, val, world)
    logger().debug(
        f"sdl_find_model : {', '.join(print_formula(f) for f in formulas)} "
        f"unsatisfiable up to {max_worlds} worlds ({checked} candidates)"
    )
    return None


def find_violation(formula, max_worlds, serial=True):
    """
    Return the least model (with designated world) where `formula` is false, or None.
    """
    return sdl_find_model([Neg(formula)], max_worlds, serial)
