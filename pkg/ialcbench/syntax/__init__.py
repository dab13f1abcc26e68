from .concepts import (
    Concept,
    Atom,
    Bottom,
    Top,
    Not,
    And,
    Or,
    Subs,
    Exists,
    Forall,
    Statement,
    NominalAssertion,
    RoleAssertion,
    ConceptFormula,
    Sequent,
    Signature,
    is_concept,
    is_statement,
    outer_nominal,
    signature_of,
    merge_signatures,
    nominals_of,
    concept_depth,
    atoms_of,
    roles_of,
)
from .parser import (
    parse_concept,
    parse_statement,
    parse_item,
    parse_sequent,
    RESERVED_WORDS,
)
from .printer import print_concept, print_statement, print_item, print_sequent
from .io import (
    loads_statements,
    load_statements,
    dumps_statements,
    loads_sequents,
    load_sequents,
    dumps_sequents,
)
