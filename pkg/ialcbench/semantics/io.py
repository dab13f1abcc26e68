"""
Line based ``.ikm`` interpretation files.

::

    world <id>
    prec <id> <id>
    role <Role> <id> <id>
    atom <Atom> [<id>]
    nominal <name> <id>

``#`` starts a comment. An ``atom`` line without an entity declares an atom with an empty extension.
"""
from ialcbench.errors import ModelFormatError, ModelLintError
from ialcbench.semantics.interpretation import Interpretation
from ialcbench.semantics.lint import check_frame_conditions, hereditary_closure
from ialcbench.utils import iter_bits

_ARITY = {"world": (1,), "prec": (2,), "role": (3,), "atom": (1, 2), "nominal": (2,)}


def _strip(line):
    return line.split("#", 1)[0].strip()


def parse_interpretation(text):
    """
    Parse ``.ikm`` text into an :class:`ialcbench.semantics.Interpretation` without linting it.

    Raises
    ------
    ModelFormatError
        On unknown directives, wrong argument counts, duplicate or undeclared entities.
    """
    worlds, precedes, roles, valuation, nominals = [], [], {}, {}, {}
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        directive, *args = line.split()
        if directive not in _ARITY:
            raise ModelFormatError(f"unknown directive {directive!r}", lineno)
        if len(args) not in _ARITY[directive]:
            raise ModelFormatError(
                f"wrong number of arguments for {directive!r}", lineno
            )
        if directive == "world":
            if args[0] in declared:
                raise ModelFormatError(f"duplicate world {args[0]!r}", lineno)
            declared.add(args[0])
            worlds.append(args[0])
            continue
        entity_args = {
            "prec": args,
            "role": args[1:],
            "atom": args[1:],
            "nominal": args[1:],
        }
        for entity in entity_args[directive]:
            if entity not in declared:
                raise ModelFormatError(f"undeclared world {entity!r}", lineno)
        if directive == "prec":
            precedes.append((args[0], args[1]))
        elif directive == "role":
            roles.setdefault(args[0], []).append((args[1], args[2]))
        elif directive == "atom":
            valuation.setdefault(args[0], []).extend(args[1:])
        else:
            if args[0] in nominals:
                raise ModelFormatError(f"nominal {args[0]!r} mapped twice", lineno)
            nominals[args[0]] = args[1]
    if not worlds:
        raise ModelFormatError("no world declared")
    return Interpretation(worlds, precedes, roles, valuation, nominals)


def loads_interpretation(text, close=False, strict=True):
    """
    Parse ``.ikm`` text and lint the result.

    Parameters
    ----------
    text : str
        File contents.

    close : bool
        If True, apply :func:`ialcbench.semantics.hereditary_closure` before linting.

    strict : bool
        If True, raise when the interpretation fails lint.

    Returns
    -------
    interp : :class:`ialcbench.semantics.Interpretation`

    report : :class:`ialcbench.semantics.LintReport`

    Raises
    ------
    ModelLintError
        If `strict` is set and a violation is found.
    """
    interp = parse_interpretation(text)
    if close:
        interp = hereditary_closure(interp)
    report = check_frame_conditions(interp)
    if strict and not report.passed:
        raise ModelLintError(report)
    return interp, report


def load_interpretation(path, close=False, strict=True):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_interpretation(fh.read(), close=close, strict=strict)


def dumps_interpretation(interp):
    """
    Serialize an interpretation to ``.ikm`` text.

    Worlds come in entity order and precedence generators as stored; role pairs, atom extensions and nominals
    follow declaration order, pairs sorted by entity position.
    """
    names = interp.entities
    lines = [f"world {e}" for e in names]
    lines += [f"prec {a} {b}" for a, b in interp.precedes]
    for role in interp.role_names:
        succ = interp.successors(role)
        for i in range(interp.n_entities):
            lines += [f"role {role} {names[i]} {names[j]}" for j in iter_bits(succ[i])]
    for atom in interp.atom_names:
        members = [names[i] for i in iter_bits(interp.atom_mask(atom))]
        lines += [f"atom {atom} {e}" for e in members] if members else [f"atom {atom}"]
    lines += [f"nominal {x} {e}" for x, e in interp.nominals.items()]
    return "\n".join(lines) + "\n"
