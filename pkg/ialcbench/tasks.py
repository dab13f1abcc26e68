"""
End-to-end tasks over the corpus: judging every fixture with a reasoner and the narrative demonstrations.
"""
from dataclasses import dataclass, field

import pandas as pd

from ialcbench.corpus import (
    load_manifest,
    load_chisholm_ialc,
    load_chisholm_sdl,
    load_axiom_proofs,
    load_free_choice_trace,
)
from ialcbench.logging import logger
from ialcbench.reasoners import ReferenceReasoner
from ialcbench.syntax import Sequent, print_sequent, print_statement, print_concept
from ialcbench.semantics import (
    check_frame_conditions,
    satisfies_statement,
    find_countermodel,
    is_valid,
    MISPRINTED_AXIOMS,
)
from ialcbench.calculus import check_proof, prove_bounded, tree_depth
from ialcbench.sdl import Falsum, check_derivation, sdl_find_model, print_formula
from ialcbench.sdl.derivation import FCP
from ialcbench.testing import tests_from_manifest


@dataclass
class DemoReport:
    """
    Outcome of a demonstration.

    Attributes
    ----------
    name : str

    ok : bool
        True iff every claim of the demonstration was reproduced.

    lines : list of str
        Human readable narrative.

    records : dict
        Machine readable key/value summary.
    """

    name: str
    ok: bool = True
    lines: list = field(default_factory=list)
    records: dict = field(default_factory=dict)

    def say(self, text=""):
        self.lines.append(text)

    def claim(self, key, value, holds):
        """Record a key/value pair and fold `holds` into `ok`."""
        self.records[key] = value
        self.ok = self.ok and bool(holds)

    def text(self):
        return "\n".join(self.lines)


def _verdict(accepted):
    return "ACCEPTED" if accepted else "REJECTED"


def _step_line(step):
    return f"  {step.number:>2}. {print_formula(step.formula)}  [{step.justification}]"


def judge_corpus(reasoner=None, manifest=None, **kwargs):
    """
    Judge every fixture of a manifest with a reasoner.

    Parameters
    ----------
    reasoner : :class:`sciunit.Model` (Optional)
        Model implementing the capabilities of :mod:`ialcbench.capabilities`. Defaults to
        :class:`ialcbench.reasoners.ReferenceReasoner`.

    manifest : :class:`pandas.DataFrame` (Optional)
        Defaults to :func:`ialcbench.corpus.load_manifest`.

    Other Parameters
    ----------------
    kwargs : dict
        Passed to the fixture test constructors.

    Returns
    -------
    results : :class:`pandas.DataFrame`
        One row per fixture with columns ``id``, ``kind``, ``expected``, ``predicted`` and ``passed``.
    """
    reasoner = reasoner or ReferenceReasoner()
    manifest = load_manifest() if manifest is None else manifest
    rows = []
    tests = tests_from_manifest(manifest, **kwargs)
    for (_, fixture), test in zip(manifest.iterrows(), tests):
        score = test.judge(reasoner)
        predicted = getattr(score, "prediction", None)
        rows.append(
            {
                "id": fixture["id"],
                "kind": fixture["kind"],
                "expected": fixture["expected"],
                "predicted": predicted,
                "passed": bool(score.score),
            }
        )
    results = pd.DataFrame(
        rows, columns=["id", "kind", "expected", "predicted", "passed"]
    )
    logger().info(
        f"judge_corpus : {int(results['passed'].sum())}/{len(results)} fixtures reproduced"
    )
    return results


def demo_chisholm():
    """
    Contrast the SDL reading of the Chisholm scenario, which is inconsistent, with the iALC model that satisfies
    all four encoded statements.
    """
    report = DemoReport("chisholm")
    formulas, trace = load_chisholm_sdl()
    report.say("SDL reading of the Chisholm scenario")
    for f in formulas:
        report.say(f"  assume {print_formula(f)}")
    verdict = check_derivation(trace)
    for step in trace.steps:
        report.say(_step_line(step))
    report.say(
        f"  trace {'accepted' if verdict.accepted else 'REJECTED'}; "
        f"last step {print_formula(trace.conclusion)}"
    )
    for where, reason in verdict.failures:
        report.say(f"  step {where}: {reason}")
    report.claim("sdl_trace", _verdict(verdict.accepted), verdict.accepted)
    conclusion = print_formula(trace.conclusion)
    report.claim("sdl_conclusion", conclusion, trace.conclusion == Falsum())

    witness = sdl_find_model(formulas, 3)
    if witness is None:
        report.say(
            "  no serial Kripke model with at most 3 worlds satisfies the assumptions"
        )
    else:
        report.say("  unexpected model of the assumptions:")
        report.lines += ["    " + line for line in witness.describe().splitlines()]
    report.claim("sdl_model", "NONE" if witness is None else "FOUND", witness is None)

    report.say()
    report.say("iALC reading: laws as nominals over the refinement preorder")
    interp, statements = load_chisholm_ialc()
    lint = check_frame_conditions(interp)
    precedence = ", ".join(f"{a} <= {b}" for a, b in interp.precedes)
    report.say(f"  entities {', '.join(interp.entities)}; precedence {precedence}")
    report.say(f"  lint {'passed' if lint.passed else 'FAILED'}")
    report.claim("ialc_lint", "PASSED" if lint.passed else "FAILED", lint.passed)
    satisfied = 0
    for s in statements:
        holds = satisfies_statement(interp, s)
        satisfied += holds
        report.say(f"  {print_statement(s)} : {'satisfied' if holds else 'VIOLATED'}")
    report.claim(
        "ialc_statements",
        f"{satisfied}/{len(statements)}",
        satisfied == len(statements),
    )
    report.say()
    report.say(
        "The SDL assumptions derive false, while the iALC model satisfies every "
        "statement: the scenario is not paradoxical in iALC."
    )
    return report


def demo_free_choice():
    """
    Check the free choice permission trace, the same trace without its FCP step and the FCP-free prefix.
    """
    report = DemoReport("free-choice")
    trace = load_free_choice_trace()
    verdict = check_derivation(trace)
    for step in trace.steps:
        report.say(_step_line(step))
    report.say(
        f"full trace {'accepted' if verdict.accepted else 'REJECTED'}: "
        f"{print_formula(trace.conclusion)}"
    )
    report.claim("trace", _verdict(verdict.accepted), verdict.accepted)

    fcp_steps = [s.number for s in trace.steps if s.justification.rule == FCP]
    without = trace
    for number in fcp_steps:
        without = without.without_step(number)
    stripped = check_derivation(without)
    report.say(
        f"without the FCP step(s) {fcp_steps}: "
        f"{'accepted' if stripped.accepted else 'rejected'}"
    )
    for where, reason in stripped.failures:
        report.say(f"  step {where}: {reason}")
    report.claim(
        "without_fcp",
        _verdict(stripped.accepted),
        fcp_steps and not stripped.accepted,
    )

    first_fcp = fcp_steps[0] if fcp_steps else len(trace.steps) + 1
    prefix = trace.prefix(sum(1 for s in trace.steps if s.number < first_fcp))
    prefix_verdict = check_derivation(prefix)
    last = print_formula(prefix.conclusion) if prefix.steps else "(empty)"
    report.say(
        f"prefix up to {last}: "
        f"{'accepted' if prefix_verdict.accepted else 'REJECTED'}"
    )
    report.claim(
        "prefix", _verdict(prefix_verdict.accepted), prefix_verdict.accepted
    )
    report.say(
        "The conclusion is the conjunction of permissions P(p) & P(q), "
        "not the permission P(p & q)."
    )
    return report


def demo_axioms(validity_entities=3, search_depth=8):
    """
    For each Hilbert axiom: check the bundled proof, re-derive the theorem by proof search and confirm it has no
    small countermodel. Also show countermodels of the misprinted axiom variants.
    """
    report = DemoReport("axioms")
    for k, (theorem, tree) in enumerate(load_axiom_proofs(), start=1):
        verdict = check_proof(tree)
        found = prove_bounded(theorem, search_depth)
        valid = is_valid(theorem, validity_entities)
        report.say(f"axiom {k}: {print_sequent(theorem)}")
        search = "FAILED" if found is None else f"depth {tree_depth(found)}"
        report.say(
            f"  proof {'accepted' if verdict.accepted else 'REJECTED'} "
            f"(depth {tree_depth(tree)}); search {search}; "
            f"{'no' if valid else 'a'} countermodel "
            f"with at most {validity_entities} entities"
        )
        reproduced = verdict.accepted and found is not None and valid
        report.claim(f"axiom_{k}", "OK" if reproduced else "FAILED", reproduced)
    for k, concept in sorted(MISPRINTED_AXIOMS.items()):
        witness = find_countermodel(None, Sequent((), (), concept), 3)
        report.say(f"misprinted axiom {k}: {print_concept(concept)}")
        if witness is None:
            report.say("  NO countermodel with at most 3 entities")
        else:
            report.say(f"  countermodel with {witness.n_entities} entities")
        refuted = witness is not None
        report.claim(
            f"misprinted_{k}", "REFUTED" if refuted else "UNREFUTED", refuted
        )
    return report


DEMOS = {
    "chisholm": demo_chisholm,
    "free-choice": demo_free_choice,
    "axioms": demo_axioms,
}
