from .interpretation import Interpretation, reflexive_transitive_closure
from .lint import LintReport, Violation, check_frame_conditions, hereditary_closure
from .evaluation import (
    extension_mask,
    eval_concept,
    satisfies_statement,
    item_mask,
    sequent_valid,
)
from .enumeration import iter_interpretations, find_countermodel, is_valid
from .io import (
    parse_interpretation,
    loads_interpretation,
    load_interpretation,
    dumps_interpretation,
)
from .axioms import IALC_AXIOMS, MISPRINTED_AXIOMS
