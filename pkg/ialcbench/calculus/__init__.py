from .rules import RuleName, Instantiation, ARITY, check_node, mp_expansion
from .proof import (
    ProofTree,
    iter_nodes,
    tree_depth,
    tree_size,
    check_proof,
    expand_macros,
)
from .search import prove_bounded, backward_steps
from .io import loads_proof, load_proof, dumps_proof
