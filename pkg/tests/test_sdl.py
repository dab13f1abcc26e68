import unittest

from hypothesis import given, settings

from ialcbench.errors import CapExceededError, ModelFormatError, ParseError
from ialcbench.corpus import corpus_path
from ialcbench.sdl import (
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
    parse_formula,
    Justification,
    Step,
    DerivationTrace,
    taut_check,
    is_ob_k,
    is_ob_d,
    is_fcp,
    check_derivation,
    sdl_find_model,
    find_violation,
    holds_at,
    holds_everywhere,
    iter_kd_models,
    loads_trace,
    load_trace,
    dumps_trace,
    loads_formula_set,
    load_formula_set,
)
from strategies import sdl_formulas

p, q = Prop("p"), Prop("q")


def f(text):
    return parse_formula(text)


class TestFormulas(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(f("p & q | ~p"), Disj(Conj(p, q), Neg(p)))
        self.assertEqual(f("p => q => p"), Impl(p, Impl(q, p)))
        self.assertEqual(f("O(p => q)"), Ob(Impl(p, q)))
        self.assertEqual(f("false"), Falsum())

    def test_permission_is_dual(self):
        self.assertEqual(f("P(p)"), Neg(Ob(Neg(p))))
        self.assertEqual(perm_body(f("P(p | q)")), Disj(p, q))
        self.assertIsNone(perm_body(f("~O(p)")))
        self.assertEqual(print_formula(perm(p)), "P(p)")
        self.assertEqual(print_formula(f("~O(~p)")), "P(p)")

    def test_print(self):
        self.assertEqual(print_formula(f("(p => q) => p")), "(p => q) => p")
        self.assertEqual(print_formula(f("~(p & q)")), "~(p & q)")
        self.assertEqual(print_formula(f("p & (q | p)")), "p & (q | p)")

    def test_props(self):
        self.assertEqual(props_of(f("O(r => p)"), q), ("p", "q", "r"))

    def test_errors(self):
        for text in ["", "O p", "p &", "(p", "p => => q", "Q"]:
            with self.assertRaises(ParseError, msg=text):
                parse_formula(text)
        with self.assertRaises(ParseError) as ctx:
            parse_formula("p $ q")
        self.assertEqual(ctx.exception.column, 3)

    @settings(max_examples=300, deadline=None)
    @given(sdl_formulas)
    def test_print_parse(self, formula):
        self.assertEqual(parse_formula(print_formula(formula)), formula)


class TestTautologies(unittest.TestCase):
    def test_taut_check(self):
        self.assertTrue(taut_check(f("p => p | q")))
        self.assertTrue(taut_check(f("O(p) => O(p)")))
        self.assertTrue(taut_check(f("O(q) => O(~q) => O(q) & O(~q)")))
        self.assertFalse(taut_check(f("p => q")))
        # obligations are opaque to TAUT
        self.assertFalse(taut_check(f("O(p => p)")))
        self.assertFalse(taut_check(f("O(p) => O(p | q)")))

    def test_taut_steps_hold_in_every_model(self):
        for name in ["chisholm.sdt", "free_choice.sdt"]:
            for step in load_trace(corpus_path("sdl", name)).steps:
                if step.justification.rule == "TAUT":
                    self.assertIsNone(
                        find_violation(step.formula, 3, serial=False),
                        print_formula(step.formula),
                    )

    def test_schemata(self):
        self.assertTrue(is_ob_k(f("O(p => q) => O(p) => O(q)")))
        self.assertFalse(is_ob_k(f("O(p => q) => O(q) => O(p)")))
        self.assertTrue(is_ob_d(f("O(p & q) => P(p & q)")))
        self.assertFalse(is_ob_d(f("O(p) => P(q)")))
        self.assertTrue(is_fcp(f("P(p | q) => P(p) & P(q)")))
        self.assertFalse(is_fcp(f("P(p & q) => P(p) & P(q)")))

    def test_schemata_semantics(self):
        self.assertIsNone(
            find_violation(f("O(p => q) => O(p) => O(q)"), 3, serial=False)
        )
        self.assertIsNone(find_violation(f("O(p) => P(p)"), 3))
        self.assertIsNotNone(find_violation(f("O(p) => P(p)"), 1, serial=False))
        # free choice is not a theorem of KD
        self.assertIsNotNone(find_violation(f("P(p | q) => P(p) & P(q)"), 1))


class TestDerivations(unittest.TestCase):
    def setUp(self):
        self.chisholm = load_trace(corpus_path("sdl", "chisholm.sdt"))
        self.free_choice = load_trace(corpus_path("sdl", "free_choice.sdt"))

    def test_chisholm_derives_false(self):
        verdict = check_derivation(self.chisholm)
        self.assertTrue(verdict.accepted, verdict.failures)
        self.assertEqual(len(self.chisholm.steps), 17)
        self.assertEqual(self.chisholm.conclusion, Falsum())

    def test_free_choice(self):
        self.assertTrue(check_derivation(self.free_choice))
        self.assertEqual(self.free_choice.conclusion, f("P(p) => P(p) & P(q)"))

    def test_free_choice_needs_fcp(self):
        trace = load_trace(corpus_path("sdl", "free_choice_no_fcp.sdt"))
        self.assertEqual(
            check_derivation(trace).failures, (("10", "DANGLING-REFERENCE"),)
        )
        self.assertEqual(trace, self.free_choice.without_step(7))
        self.assertTrue(check_derivation(self.free_choice.prefix(6)))

    def test_prefixes(self):
        for trace in (self.chisholm, self.free_choice):
            for count in range(len(trace.steps) + 1):
                self.assertTrue(check_derivation(trace.prefix(count)).accepted)

    def test_failure_reasons(self):
        cases = {
            "1. p [HYP]\n": ("1", "NOT-AN-ASSUMPTION"),
            "1. p => q [TAUT]\n": ("1", "NOT-TAUT"),
            "1. p => p [TAUT]\n1. p => p [TAUT]\n": ("1", "NUMBERING"),
            "1. p [MAGIC]\n": ("1", "UNKNOWN-JUSTIFICATION"),
            "1. p [MP]\n": ("1", "ARITY"),
            "1. p => p [TAUT]\n2. p [MP 1,1]\n": ("2", "NOT-MP"),
            "1. p => p [TAUT]\n2. O(p) [OB-NEC 1]\n": ("2", "NOT-OB-NEC"),
            "1. p => p [TAUT]\n2. p => p [CP 1]\n": ("2", "NOT-CP"),
            "1. O(p) => O(q) [OB-K]\n": ("1", "NOT-OB-K"),
            "assume p\n1. p [HYP]\n2. O(p) [OB-NEC 1]\n": ("2", "IMPURE"),
        }
        for text, failure in cases.items():
            self.assertEqual(
                check_derivation(loads_trace(text)).failures, (failure,), text
            )

    def test_purity_flows_through_mp(self):
        text = (
            "assume p\n1. p [HYP]\n2. p => p | q [TAUT]\n"
            "3. p | q [MP 1,2]\n4. O(p | q) [OB-NEC 3]\n"
        )
        self.assertEqual(
            check_derivation(loads_trace(text)).failures, (("4", "IMPURE"),)
        )
        pure = "1. p => p [TAUT]\n2. O(p => p) [OB-NEC 1]\n3. ~p => ~p [CP 1]\n"
        self.assertTrue(check_derivation(loads_trace(pure)))

    def test_built_by_hand(self):
        trace = DerivationTrace([p], [Step(1, p, Justification("HYP"))])
        self.assertTrue(check_derivation(trace))
        self.assertEqual(str(Justification("MP", (1, 2))), "MP 1,2")


class TestModels(unittest.TestCase):
    def test_single_obligation(self):
        model = sdl_find_model([f("O(p)")], 3)
        self.assertEqual(model.worlds, ("w0",))
        self.assertTrue(model.is_serial())
        self.assertEqual(model.describe(), "worlds w0\naccess w0 w0\ntrue p w0\nat w0")
        self.assertTrue(holds_at(model, f("O(p)")))

    def test_conflict_unsat(self):
        self.assertIsNone(
            sdl_find_model(load_formula_set(corpus_path("sdl", "conflict.sds")), 3)
        )

    def test_chisholm_sets(self):
        self.assertIsNone(
            sdl_find_model(load_formula_set(corpus_path("sdl", "chisholm.sds")), 3)
        )
        model = sdl_find_model(
            load_formula_set(corpus_path("sdl", "chisholm_no_fact.sds")), 2
        )
        self.assertIsNotNone(model)
        for formula in load_formula_set(corpus_path("sdl", "chisholm_no_fact.sds")):
            self.assertTrue(holds_at(model, formula))

    def test_no_conflict_needs_seriality(self):
        nc = f("~(O(p) & O(~p))")
        self.assertIsNone(find_violation(nc, 3))
        model = find_violation(nc, 3, serial=False)
        self.assertIsNotNone(model)
        self.assertFalse(model.is_serial())
        self.assertFalse(holds_at(model, nc))

    def test_holds_everywhere(self):
        model = sdl_find_model([f("O(p)")], 1)
        self.assertTrue(holds_everywhere(model, f("p | ~p")))
        self.assertFalse(holds_everywhere(model, f("~p")))

    def test_enumeration_counts(self):
        self.assertEqual(sum(1 for _ in iter_kd_models([], 2)), 1 + 9)
        self.assertEqual(sum(1 for _ in iter_kd_models([], 2, serial=False)), 2 + 16)
        self.assertEqual(sum(1 for _ in iter_kd_models(["p"], 1)), 2)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            sdl_find_model([p], 5)


class TestFiles(unittest.TestCase):
    def test_trace_layout(self):
        text = (
            "# comment\nassume O(p)\n\n"
            "1. O(p) [HYP]\n2. O(p) => P(p) [OB-D]\n3. P(p) [MP 1, 2]\n"
        )
        trace = loads_trace(text)
        self.assertEqual(trace.assumptions, (Ob(p),))
        self.assertEqual(trace.steps[2].justification, Justification("MP", (1, 2)))
        self.assertEqual(
            dumps_trace(trace),
            "assume O(p)\n1. O(p) [HYP]\n2. O(p) => P(p) [OB-D]\n3. P(p) [MP 1,2]\n",
        )

    def test_trace_errors(self):
        cases = {
            "assume p\n1. p [HYP]\nassume q\n": 3,
            "1 p [HYP]\n": 1,
            "1. p => p [TAUT]\n2. p & [TAUT]\n": 2,
            "assume O(\n": 1,
        }
        for text, lineno in cases.items():
            with self.assertRaises(ModelFormatError, msg=text) as ctx:
                loads_trace(text)
            self.assertEqual(ctx.exception.lineno, lineno)

    def test_formula_set(self):
        self.assertEqual(
            loads_formula_set("# set\nO(p)\n\nO(~p)\n"), [Ob(p), Ob(Neg(p))]
        )
        with self.assertRaises(ModelFormatError) as ctx:
            loads_formula_set("O(p)\nO(\n")
        self.assertEqual(ctx.exception.lineno, 2)


if __name__ == "__main__":
    unittest.main()
