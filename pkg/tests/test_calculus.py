import unittest
from itertools import product

from ialcbench.errors import CapExceededError, ModelFormatError, UnknownRuleError
from ialcbench.syntax import (
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
    Signature,
    is_concept,
    parse_sequent,
    parse_concept,
)
from ialcbench.semantics import sequent_valid, is_valid, iter_interpretations
from ialcbench.calculus import (
    RuleName,
    Instantiation,
    ARITY,
    check_node,
    ProofTree,
    iter_nodes,
    tree_depth,
    tree_size,
    check_proof,
    expand_macros,
    prove_bounded,
    backward_steps,
    loads_proof,
    load_proof,
    dumps_proof,
)
from ialcbench.corpus import corpus_path, load_axiom_proofs
from ialcbench.sampling import Sampler


CORPUS_PROOFS = ["ax1.ipf", "ax2.ipf", "ax3.ipf", "ax4.ipf", "ax5.ipf", "mp_nec.ipf"]


def seq(text):
    return parse_sequent(text)


def corpus_proof(name):
    return load_proof(corpus_path("proofs", name))


class TestCheckNode(unittest.TestCase):
    def test_ax(self):
        self.assertEqual(check_node(RuleName.AX, seq("B ; A |- A"), []), (True, "OK"))
        self.assertEqual(check_node("AX", seq("B |- A"), []), (False, "SHAPE"))

    def test_arity(self):
        self.assertEqual(
            check_node("AX", seq("A |- A"), [seq("A |- A")]), (False, "ARITY")
        )
        self.assertEqual(ARITY[RuleName.CUT], 2)
        self.assertEqual(ARITY[RuleName.BOT_L], 0)

    def test_theta_must_agree(self):
        ok, reason = check_node(
            "SUBS-R", seq("tbox: A -> B | |- A -> A"), [seq("A |- A")]
        )
        self.assertEqual((ok, reason), (False, "THETA"))

    def test_p_exists(self):
        ok, _ = check_node(
            "P-EXISTS",
            seq("all R.(A -> B) ; some R.A |- some R.B"),
            [seq("A -> B ; A |- B")],
        )
        self.assertTrue(ok)

    def test_p_exists_keeps_statements(self):
        ok, _ = check_node(
            "P-EXISTS",
            seq("x : C ; all R.(A -> B) ; some R.A |- some R.B"),
            [seq("x : C ; A -> B ; A |- B")],
        )
        self.assertTrue(ok)
        ok, _ = check_node(
            "P-EXISTS",
            seq("x : C ; some R.A |- some R.B"),
            [seq("C ; A |- B")],
        )
        self.assertFalse(ok)

    def test_p_n_prefixes_concepts_only(self):
        self.assertTrue(
            check_node("P-N", seq("x : A ; y R z |- x : B"), [seq("A ; y R z |- B")])[0]
        )
        self.assertFalse(check_node("P-N", seq("x : A |- y : B"), [seq("A |- B")])[0])

    def test_exists_l_freshness(self):
        conclusion = seq("x : some R.A |- x : B")
        premise = seq("x R y ; y : A |- x : B")
        self.assertTrue(
            check_node("EXISTS-L", conclusion, [premise], Instantiation(fresh="y"))[0]
        )
        stale = seq("x : some R.A |- x : B")
        premise = seq("x R x ; x : A |- x : B")
        self.assertEqual(
            check_node("EXISTS-L", stale, [premise], Instantiation(fresh="x")),
            (False, "FRESHNESS"),
        )
        self.assertEqual(
            check_node("EXISTS-L", conclusion, [premise]), (False, "MISSING-FRESH")
        )

    def test_forall_r_freshness(self):
        ok, reason = check_node(
            "FORALL-R", seq("x R y |- x : all R.A"), [seq("x R y ; x R y |- y : A")]
        )
        self.assertEqual((ok, reason), (False, "FRESHNESS"))
        self.assertTrue(
            check_node("FORALL-R", seq("|- x : all R.A"), [seq("x R y |- y : A")])[0]
        )

    def test_instantiation_fields(self):
        self.assertEqual(
            check_node("AX", seq("A |- A"), [], Instantiation(fresh="y")),
            (False, "UNEXPECTED-FRESH"),
        )
        self.assertEqual(
            check_node("AX", seq("A |- A"), [], Instantiation(cut=parse_concept("A"))),
            (False, "UNEXPECTED-CUT"),
        )
        self.assertEqual(
            check_node("CUT", seq("A |- A"), [seq("A |- A"), seq("A ; A |- A")]),
            (False, "MISSING-CUT"),
        )

    def test_cut(self):
        inst = Instantiation(cut=parse_concept("A"))
        premises = [seq("A |- A"), seq("A ; A |- A")]
        self.assertTrue(check_node("CUT", seq("A |- A"), premises, inst)[0])

    def test_subs_l_additive_context(self):
        ok, _ = check_node(
            "SUBS-L", seq("C ; A -> B ; A |- B"), [seq("C ; A |- A"), seq("C ; B |- B")]
        )
        self.assertTrue(ok)
        ok, _ = check_node(
            "SUBS-L", seq("A -> B ; A |- B"), [seq("D |- A"), seq("B |- B")]
        )
        self.assertFalse(ok)

    def test_nominal_counterparts(self):
        self.assertTrue(
            check_node("N-SUBS-R", seq("|- x : A -> A"), [seq("x : A |- x : A")])[0]
        )
        self.assertTrue(
            check_node(
                "N-OR-L",
                seq("x : A or B |- x : B or A"),
                [seq("x : A |- x : B or A"), seq("x : B |- x : B or A")],
            )[0]
        )
        self.assertTrue(
            check_node("N-NOT-R", seq("|- x : not Bot"), [seq("x : Bot |- x : Bot")])[0]
        )
        self.assertFalse(
            check_node("N-SUBS-R", seq("|- x : A -> A"), [seq("A |- A")])[0]
        )

    def test_structural(self):
        self.assertTrue(check_node("WEAK", seq("A ; B |- A"), [seq("A |- A")])[0])
        self.assertTrue(check_node("CONTR", seq("A |- A"), [seq("A ; A |- A")])[0])
        self.assertFalse(check_node("CONTR", seq("A |- A"), [seq("A ; B |- A")])[0])

    def test_tbox(self):
        conclusion = seq("tbox: A -> B | x : A |- x : B")
        premise = seq("tbox: A -> B | x : A ; x : A -> B |- x : B")
        self.assertTrue(check_node("TBOX", conclusion, [premise])[0])

    def test_unknown_rule(self):
        with self.assertRaises(UnknownRuleError):
            check_node("MAGIC", seq("A |- A"), [])


class TestCheckProof(unittest.TestCase):
    def test_single_ax(self):
        self.assertTrue(check_proof(ProofTree(seq("A |- A"), RuleName.AX)).accepted)

    def test_corpus_proofs(self):
        for name in CORPUS_PROOFS:
            verdict = check_proof(corpus_proof(name))
            self.assertTrue(verdict.accepted, f"{name}: {verdict.failures}")

    def test_missing_premise(self):
        verdict = check_proof(corpus_proof("missing_premise.ipf"))
        self.assertFalse(verdict)
        self.assertEqual(verdict.failures, (("0", "ARITY"),))

    def test_stale_fresh(self):
        self.assertEqual(
            check_proof(corpus_proof("stale_fresh.ipf")).failures,
            (("root", "FRESHNESS"),),
        )

    def test_unknown_rule_is_a_failure(self):
        tree = ProofTree(seq("A |- A"), "MAGIC")
        self.assertEqual(check_proof(tree).failures, (("root", "UNKNOWN-RULE"),))

    def test_paths_and_sizes(self):
        tree = corpus_proof("ax1.ipf")
        self.assertEqual(
            [p for p, _ in iter_nodes(tree)], ["root", "0", "0.0", "0.0.0", "0.0.1"]
        )
        self.assertEqual(tree_size(tree), 5)
        self.assertEqual(tree_depth(tree), 4)

    def test_expand_macros(self):
        tree = corpus_proof("mp_nec.ipf")
        expanded = expand_macros(tree)
        rules = {node.rule for _, node in iter_nodes(expanded)}
        self.assertNotIn(RuleName.MP, rules)
        self.assertNotIn(RuleName.NEC, rules)
        self.assertIn(RuleName.CUT, rules)
        self.assertTrue(check_proof(expanded).accepted)
        self.assertEqual(expanded.conclusion, tree.conclusion)
        self.assertFalse(
            check_proof(expand_macros(corpus_proof("missing_premise.ipf"))).accepted
        )

    def test_expanded_nec_drops_empty_context_check(self):
        leaf = ProofTree(seq("A |- A"), RuleName.AX)
        tree = ProofTree(seq("all R.A |- all R.A"), RuleName.NEC, (leaf,))
        self.assertFalse(check_proof(tree).accepted)
        expanded = expand_macros(tree)
        self.assertEqual(expanded.rule, RuleName.P_FORALL)
        self.assertTrue(check_proof(expanded).accepted)


class TestProveBounded(unittest.TestCase):
    def test_axiom_leaf(self):
        tree = prove_bounded(seq("A |- A"), 1)
        self.assertEqual(tree, ProofTree(seq("A |- A"), RuleName.AX))

    def test_empty_existential(self):
        tree = prove_bounded(seq("|- x : some R.Bot -> Bot"), 3)
        self.assertEqual(
            [node.rule for _, node in iter_nodes(tree)],
            [RuleName.N_SUBS_R, RuleName.EXISTS_L, RuleName.BOT_L],
        )
        self.assertEqual(tree.premises[0].instantiation.fresh, "y0")
        self.assertTrue(check_proof(tree).accepted)

    def test_nominal_connectives(self):
        tree = prove_bounded(seq("x : A and B |- x : B and A"), 4)
        self.assertIsNotNone(tree)
        rules = {node.rule for _, node in iter_nodes(tree)}
        self.assertLessEqual({RuleName.N_AND_L, RuleName.N_AND_R}, rules)
        self.assertTrue(check_proof(tree).accepted)

    def test_axiom_theorems(self):
        for theorem, _ in load_axiom_proofs():
            found = prove_bounded(theorem, 8)
            self.assertIsNotNone(found, str(theorem))
            self.assertTrue(check_proof(found).accepted)
            self.assertEqual(found.conclusion, theorem)

    def test_paracomplete_goals(self):
        for text in ["|- x : A or not A", "|- x : not not A -> A"]:
            self.assertIsNone(prove_bounded(seq(text), 8), text)

    def test_tbox_goal(self):
        tree = prove_bounded(seq("tbox: A -> B | x : A |- x : B"), 6)
        self.assertIsNotNone(tree)
        self.assertTrue(check_proof(tree).accepted)
        self.assertIn(RuleName.TBOX, {node.rule for _, node in iter_nodes(tree)})

    def test_deterministic(self):
        goal = seq("|- x : some R.(A or B) -> some R.A or some R.B")
        self.assertEqual(prove_bounded(goal, 8), prove_bounded(goal, 8))

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            prove_bounded(seq("A |- A"), 13)


class TestProofFiles(unittest.TestCase):
    def setUp(self):
        self.cut = (
            "1. A |- A [AX]\n2. A ; A |- A [AX]\n3. A |- A [CUT premises=1,2 cut=A]\n"
        )

    def test_cut_annotation(self):
        tree = loads_proof(self.cut)
        self.assertEqual(tree.instantiation.cut, parse_concept("A"))
        self.assertTrue(check_proof(tree).accepted)
        self.assertEqual(dumps_proof(tree), self.cut)

    def test_search_output_reloads(self):
        tree = prove_bounded(seq("|- x : some R.(A or B) -> some R.A or some R.B"), 8)
        self.assertEqual(loads_proof(dumps_proof(tree)), tree)

    def test_structure_errors(self):
        bad = {
            "orphan": "1. A |- A [AX]\n2. B |- B [AX]\n",
            "forward": "1. A |- A [SUBS-R premises=2]\n2. A |- A [AX]\n",
            "reused": (
                "1. A |- A [AX]\n2. A ; A |- A [WEAK premises=1]\n"
                "3. A ; A |- A [CUT premises=1,2 cut=A]\n"
            ),
            "numbering": "2. A |- A [AX]\n1. A |- A [AX]\n",
            "rule": "1. A |- A [MAGIC]\n",
            "annotation": "1. A |- A [AX depth=3]\n",
            "sequent": "1. A |- [AX]\n",
            "layout": "A |- A [AX]\n",
            "empty": "# nothing\n",
        }
        for name, text in bad.items():
            with self.assertRaises(ModelFormatError, msg=name):
                loads_proof(text)

    def test_error_line(self):
        with self.assertRaises(ModelFormatError) as ctx:
            loads_proof("# header\n1. A |- A [AX]\n2. A |- A [FOO premises=1]\n")
        self.assertEqual(ctx.exception.lineno, 3)


class TestSoundness(unittest.TestCase):
    def setUp(self):
        self.sampler = Sampler(seed=7, nominals=("x", "y", "y0", "y1", "y2"))
        self.trees = [corpus_proof(name) for name in CORPUS_PROOFS]

    def test_corpus_nodes_on_random_models(self):
        sequents = [
            node.conclusion for tree in self.trees for _, node in iter_nodes(tree)
        ]
        for _ in range(500):
            interp = self.sampler.interpretation(max_entities=4)
            for s in sequents:
                self.assertTrue(sequent_valid(interp, s), f"{s} on {interp}")

    def test_corpus_conclusions_exhaustively(self):
        for tree in self.trees:
            self.assertTrue(is_valid(tree.conclusion, 3))

    def test_searched_proofs_on_random_models(self):
        goals = Sampler(seed=8, atoms=("A", "B"), roles=("R",), nominals=("x", "y"))
        for _ in range(40):
            tree = prove_bounded(goals.theorem_goal(), 6)
            if tree is None:
                continue
            self.assertTrue(check_proof(tree).accepted)
            for _ in range(25):
                interp = self.sampler.interpretation()
                for _, node in iter_nodes(tree):
                    self.assertTrue(sequent_valid(interp, node.conclusion))


class TestRuleLocalSoundness(unittest.TestCase):
    """
    Generated rule instances over one atom, one role and the nominals x, y, y0. Whenever an interpretation with at
    most three entities falsifies a conclusion, some premise fails on the same interpretation, possibly with its
    nominals reassigned. Every interpretation with at most two entities is tried, plus sampled ones with up to three.
    """

    per_rule = 6

    def setUp(self):
        self.sampler = Sampler(seed=42, atoms=("A",), nominals=("x", "y"))
        signature = Signature(("A",), ("R",), ("x", "y", "y0"))
        models = Sampler(seed=43, atoms=("A",), nominals=signature.nominals)
        self.models = list(iter_interpretations(signature, 2))
        self.models += [models.interpretation(max_entities=3) for _ in range(40)]

    def shaped(self):
        s = self.sampler
        a, b, d = s.concept(1), s.concept(1), s.concept(1)
        extra = s.item(1)
        link = RoleAssertion("x", "R", "y")

        def at(c):
            return NominalAssertion("x", c)

        templates = [
            ((a, extra), a),
            ((Bottom(), extra), a),
            ((extra,), at(Top())),
            ((extra,), at(Forall("R", a))),
            ((at(Forall("R", a)), link), NominalAssertion("y", b)),
            ((link, extra), at(Exists("R", a))),
            ((at(Exists("R", a)), extra), NominalAssertion("y", b)),
            ((Subs(a, b), d), Subs(d, b)),
            ((And(a, b),), Or(a, d)),
            ((Or(a, b),), And(d, a)),
            ((Not(a), d), Not(b)),
            ((at(Subs(a, b)), at(d)), at(Subs(d, b))),
            ((at(And(a, b)), at(Or(a, b))), at(Or(b, d))),
            ((at(Not(a)), extra), at(And(a, Not(b)))),
            ((at(Not(a)),), at(Not(b))),
            ((Forall("R", a), Exists("R", b)), Exists("R", d)),
            ((Forall("R", a),), Forall("R", b)),
            ((at(a), link), at(b)),
        ]
        out = [Sequent((), ant, goal) for ant, goal in templates]
        out.append(Sequent((ConceptFormula(Subs(a, b)),), (at(d),), at(b)))
        out.append(s.sequent(max_depth=1))
        return out

    def structural(self):
        s = self.sampler
        base = s.sequent(max_depth=1)
        ant = base.antecedent
        k = len(ant) // 2
        phi, d = s.item(1), s.concept(1)
        weakened = base.replace(ant + (s.item(1),))
        out = [
            (RuleName.WEAK, weakened, [base], Instantiation()),
            (
                RuleName.CUT,
                base,
                [base.replace(ant[:k], phi), base.replace(ant[k:] + (phi,))],
                Instantiation(cut=phi),
            ),
            (
                RuleName.NEC,
                Sequent(base.theta, (), Forall("R", d)),
                [Sequent(base.theta, (), d)],
                Instantiation(),
            ),
        ]
        if is_concept(phi):
            minor = base.replace(ant[:k], phi)
            major = base.replace(ant[k:], Subs(phi, d))
            conclusion = base.replace(succedent=d)
            out.append((RuleName.MP, conclusion, [minor, major], Instantiation()))
        if ant:
            contracted = base.replace(ant + (ant[0],))
            out.append((RuleName.CONTR, base, [contracted], Instantiation()))
        return out

    def instances(self):
        found = {rule: [] for rule in RuleName}
        for _ in range(200):
            steps = list(self.structural())
            for conclusion in self.shaped():
                for rule, premises, inst in backward_steps(conclusion):
                    steps.append((rule, conclusion, list(premises), inst))
            for rule, conclusion, premises, inst in steps:
                if len(found[rule]) < self.per_rule:
                    found[rule].append((conclusion, premises, inst))
            if all(len(v) == self.per_rule for v in found.values()):
                break
        return found

    def refuted(self, interp, premises):
        if any(not sequent_valid(interp, p) for p in premises):
            return True
        names = sorted(interp.nominals)
        for targets in product(interp.entities, repeat=len(names)):
            renamed = interp.replace(nominals=dict(zip(names, targets)))
            if any(not sequent_valid(renamed, p) for p in premises):
                return True
        return False

    def test_every_rule(self):
        found = self.instances()
        for rule, instances in found.items():
            self.assertEqual(len(instances), self.per_rule, str(rule))
            countered = 0
            for conclusion, premises, inst in instances:
                ok, reason = check_node(rule, conclusion, premises, inst)
                self.assertTrue(ok, f"{rule} {reason} at {conclusion}")
                for interp in self.models:
                    if sequent_valid(interp, conclusion):
                        continue
                    countered += 1
                    self.assertTrue(
                        self.refuted(interp, premises),
                        f"{rule} at {conclusion} on {interp}",
                    )
            if ARITY[rule] == 0:
                self.assertEqual(countered, 0, str(rule))
            else:
                self.assertGreater(countered, 0, str(rule))

    def test_existential_witness_is_linked(self):
        # sound only where role relations are closed under refinement
        conclusion = seq("x : some R.(not not A) |- x : some R.A")
        ((rule, premises, inst),) = [
            step
            for step in backward_steps(conclusion)
            if step[0] is RuleName.EXISTS_L
        ]
        self.assertEqual(
            premises[0].antecedent,
            seq("x R y0 ; y0 : not not A |- x : some R.A").antecedent,
        )
        self.assertEqual(check_node(rule, conclusion, premises, inst), (True, "OK"))
        self.assertTrue(is_valid(premises[0], 3))
        self.assertTrue(is_valid(conclusion, 3))

    def test_universal_witness_is_linked(self):
        conclusion = seq(
            "x : (some R.A -> all R.not A) |- x : all R.(A -> not A)"
        )
        ((rule, premises, inst),) = [
            step
            for step in backward_steps(conclusion)
            if step[0] is RuleName.FORALL_R
        ]
        self.assertEqual(check_node(rule, conclusion, premises, inst), (True, "OK"))
        self.assertTrue(is_valid(premises[0], 3))
        self.assertTrue(is_valid(conclusion, 3))


if __name__ == "__main__":
    unittest.main()
