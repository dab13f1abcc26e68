from .formulas import (
    SDLFormula,
    Prop,
    Falsum,
    Neg,
    Conj,
    Disj,
    Impl,
    Ob,
    perm,
    perm_body,
    props_of,
    print_formula,
)
from .parser import parse_formula
from .derivation import (
    Justification,
    Step,
    DerivationTrace,
    taut_check,
    is_ob_k,
    is_ob_d,
    is_fcp,
    check_derivation,
)
from .models import (
    KDModel,
    iter_kd_models,
    sdl_find_model,
    find_violation,
    holds_at,
    holds_everywhere,
)
from .io import (
    loads_trace,
    load_trace,
    dumps_trace,
    loads_formula_set,
    load_formula_set,
    dumps_formula_set,
)
