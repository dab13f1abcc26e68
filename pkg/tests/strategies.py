"""hypothesis strategies for iALC and SDL syntax"""
from hypothesis.strategies import (
    builds,
    from_regex,
    just,
    lists,
    one_of,
    recursive,
    sampled_from,
)

from ialcbench.syntax import (
    RESERVED_WORDS,
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
)
from ialcbench.sdl import Prop, Falsum, Neg, Conj, Disj, Impl, Ob, perm

upper_names = from_regex(r"[A-Z][A-Za-z0-9_]{0,4}", fullmatch=True).filter(
    lambda s: s not in RESERVED_WORDS
)
lower_names = from_regex(r"[a-z][A-Za-z0-9_]{0,4}", fullmatch=True).filter(
    lambda s: s not in RESERVED_WORDS
)

atom_names = one_of(sampled_from(["A", "B", "C", "P", "Q"]), upper_names)
role_names = one_of(sampled_from(["R", "S"]), upper_names)
nominal_names = one_of(sampled_from(["x", "y", "z", "l0", "l1"]), lower_names)

concepts = recursive(
    one_of(atom_names.map(Atom), just(Top()), just(Bottom())),
    lambda inner: one_of(
        inner.map(Not),
        builds(And, inner, inner),
        builds(Or, inner, inner),
        builds(Subs, inner, inner),
        builds(Exists, role_names, inner),
        builds(Forall, role_names, inner),
    ),
    max_leaves=12,
)

statements = recursive(
    one_of(
        builds(NominalAssertion, nominal_names, concepts),
        builds(RoleAssertion, nominal_names, role_names, nominal_names),
    ),
    lambda inner: builds(NominalAssertion, nominal_names, inner),
    max_leaves=3,
)

items = one_of(concepts, statements)

tbox_members = builds(lambda c, d: ConceptFormula(Subs(c, d)), concepts, concepts)

sequents = builds(
    Sequent,
    lists(tbox_members, max_size=2),
    lists(items, max_size=3),
    items,
)

prop_names = one_of(
    sampled_from(["p", "q", "r"]),
    from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True).filter(lambda s: s != "false"),
)

sdl_formulas = recursive(
    one_of(prop_names.map(Prop), just(Falsum())),
    lambda inner: one_of(
        inner.map(Neg),
        inner.map(Ob),
        inner.map(perm),
        builds(Conj, inner, inner),
        builds(Disj, inner, inner),
        builds(Impl, inner, inner),
    ),
    max_leaves=10,
)
