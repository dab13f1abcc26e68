import sciunit
from overrides import overrides

from ialcbench.capabilities import (
    LintsInterpretations,
    ChecksProofs,
    FindsCountermodels,
    ChecksDerivations,
    FindsKDModels,
)
from ialcbench.errors import ModelLintError
from ialcbench.logging import logger
from ialcbench.syntax import load_statements, load_sequents
from ialcbench.semantics import (
    load_interpretation,
    satisfies_statement,
    find_countermodel,
)
from ialcbench.calculus import load_proof, check_proof
from ialcbench.sdl import load_trace, load_formula_set, check_derivation, sdl_find_model


class ReferenceReasoner(
    sciunit.Model,
    LintsInterpretations,
    ChecksProofs,
    FindsCountermodels,
    ChecksDerivations,
    FindsKDModels,
):
    """
    Reasoner implementing every fixture capability with the operations of this package.

    Alternative reasoners (for instance wrappers around external provers) can be benchmarked against the corpus by
    implementing the same capabilities.
    """

    def __init__(self, name="ReferenceReasoner", **kwargs):
        super().__init__(name=name, **kwargs)

    @overrides
    def statements_hold(self, model_path, statements_path):
        try:
            interp, _ = load_interpretation(model_path)
        except ModelLintError as e:
            logger().info(f"{self.name} : {model_path} fails lint ({e})")
            return False
        statements = load_statements(statements_path)
        return all(satisfies_statement(interp, s) for s in statements)

    @overrides
    def proof_accepted(self, proof_path):
        verdict = check_proof(load_proof(proof_path))
        for path, reason in verdict.failures:
            logger().debug(
                f"{self.name} : {proof_path} node {path} rejected ({reason})"
            )
        return verdict.accepted

    @overrides
    def sequents_valid(self, sequents_path, max_entities):
        for seq in load_sequents(sequents_path):
            if find_countermodel(None, seq, max_entities) is not None:
                return False
        return True

    @overrides
    def derivation_accepted(self, trace_path):
        verdict = check_derivation(load_trace(trace_path))
        for step, reason in verdict.failures:
            logger().debug(
                f"{self.name} : {trace_path} step {step} rejected ({reason})"
            )
        return verdict.accepted

    @overrides
    def formulas_satisfiable(self, formulas_path, max_worlds):
        return sdl_find_model(load_formula_set(formulas_path), max_worlds) is not None
