"""
Axiom schemata of the iALC Hilbert system, instantiated with atoms A, B and role R.

Keys are the axiom numbers of the Hilbert system. Axioms 2 and 5 are given in the form their derivations in the
sequent calculus establish; the printed variants with the quantifier typo are kept in `MISPRINTED_AXIOMS`, both
have small countermodels.
"""
from ialcbench.syntax import parse_concept

IALC_AXIOMS = {
    1: parse_concept("all R.(A -> B) -> (all R.A -> all R.B)"),
    2: parse_concept("all R.(A -> B) -> (some R.A -> some R.B)"),
    3: parse_concept("some R.(A or B) -> some R.A or some R.B"),
    4: parse_concept("some R.Bot -> Bot"),
    5: parse_concept("(some R.A -> all R.B) -> all R.(A -> B)"),
}

MISPRINTED_AXIOMS = {
    2: parse_concept("some R.(A -> B) -> (some R.A -> some R.B)"),
    5: parse_concept("(some R.A -> all R.A) -> all R.(A -> B)"),
}
