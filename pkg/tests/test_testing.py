import tempfile
import unittest
from os.path import isfile, join as pathjoin

import numpy as np
import sciunit
from sciunit.errors import CapabilityError

from ialcbench.settings import settings
from ialcbench.corpus import corpus_path, load_manifest, load_fixture_suite
from ialcbench.capabilities import ChecksProofs
from ialcbench.reasoners import ReferenceReasoner
from ialcbench.testing import (
    ERROR_VERDICT,
    ModelFixtureTest,
    ProofFixtureTest,
    SequentFixtureTest,
    TraceFixtureTest,
    FormulaSetFixtureTest,
    tests_from_manifest as build_tests_from_manifest,
)


class BrokenReasoner(ReferenceReasoner):
    def __init__(self):
        super().__init__(name="BrokenReasoner")

    def proof_accepted(self, proof_path):
        raise RuntimeError("prover crashed")


def fixture(*parts, expected):
    return {"path": corpus_path(*parts), "expected": expected}


class TestFixtureTests(unittest.TestCase):
    def setUp(self):
        self.reasoner = ReferenceReasoner()

    def test_model(self):
        test = ModelFixtureTest(
            fixture("models", "chisholm.ikm", expected="SATISFIED"), name="chisholm"
        )
        self.assertTrue(test.judge(self.reasoner).score)
        test = ModelFixtureTest(
            fixture("models", "chisholm_p_at_l1.ikm", expected="SATISFIED"),
            name="p-at-l1",
        )
        score = test.judge(self.reasoner)
        self.assertFalse(score.score)
        self.assertEqual(score.prediction, "VIOLATED")

    def test_proof(self):
        test = ProofFixtureTest(
            fixture("proofs", "stale_fresh.ipf", expected="REJECTED"), name="stale"
        )
        self.assertTrue(test.judge(self.reasoner).score)

    def test_sequent_bound_from_observation(self):
        obs = fixture("sequents", "excluded_middle.seq", expected="VALID")
        obs["max_entities"] = 1
        self.assertTrue(SequentFixtureTest(obs, name="em-1").judge(self.reasoner).score)
        obs = fixture("sequents", "excluded_middle.seq", expected="INVALID")
        self.assertTrue(SequentFixtureTest(obs, name="em").judge(self.reasoner).score)

    def test_sdl(self):
        test = TraceFixtureTest(
            fixture("sdl", "free_choice.sdt", expected="ACCEPTED"), name="fc"
        )
        self.assertTrue(test.judge(self.reasoner).score)
        test = FormulaSetFixtureTest(
            fixture("sdl", "chisholm_no_fact.sds", expected="SAT"), name="cnf"
        )
        self.assertTrue(test.judge(self.reasoner).score)

    def test_unknown_verdict(self):
        with self.assertRaises(AssertionError):
            ProofFixtureTest(fixture("proofs", "ax1.ipf", expected="SAT"), name="bad")

    def test_incapable_model(self):
        test = ProofFixtureTest(
            fixture("proofs", "ax1.ipf", expected="ACCEPTED"), name="ax1"
        )
        with self.assertRaises(CapabilityError) as ctx:
            test.judge(sciunit.Model(name="Nobody"))
        self.assertIs(ctx.exception.capability, ChecksProofs)
        with self.assertRaises(CapabilityError):
            SequentFixtureTest(
                fixture("sequents", "axioms.seq", expected="VALID"), name="axioms"
            ).judge(sciunit.Model(name="Nobody"))


class TestCrashEarly(unittest.TestCase):
    def setUp(self):
        self.saved = settings["CRASH_EARLY"]
        self.test = ProofFixtureTest(
            fixture("proofs", "ax1.ipf", expected="ACCEPTED"), name="ax1"
        )

    def tearDown(self):
        settings["CRASH_EARLY"] = self.saved

    def test_error_verdict(self):
        settings["CRASH_EARLY"] = False
        score = self.test.judge(BrokenReasoner())
        self.assertEqual(score.prediction, ERROR_VERDICT)
        self.assertFalse(score.score)

    def test_reraise(self):
        settings["CRASH_EARLY"] = True
        with self.assertRaises(RuntimeError):
            self.test.judge(BrokenReasoner())


class TestPersistence(unittest.TestCase):
    def test_persist(self):
        with tempfile.TemporaryDirectory() as tmp:
            test = TraceFixtureTest(
                fixture("sdl", "chisholm.sdt", expected="ACCEPTED"),
                name="chisholm-trace",
                persist_path=tmp,
            )
            test.judge(ReferenceReasoner())
            folder = pathjoin(tmp, "ReferenceReasoner", "chisholm-trace")
            self.assertTrue(isfile(pathjoin(folder, "score.npy")))
            self.assertEqual(
                str(np.load(pathjoin(folder, "prediction.npy"))), "ACCEPTED"
            )
            self.assertTrue(bool(np.load(pathjoin(folder, "score.npy"))))


class TestManifestSuite(unittest.TestCase):
    def test_tests_from_manifest(self):
        tests = build_tests_from_manifest(load_manifest())
        self.assertEqual(len(tests), 19)
        self.assertEqual(tests[0].name, "chisholm-model")
        self.assertIsInstance(tests[0], ModelFixtureTest)
        self.assertIsInstance(tests[-1], FormulaSetFixtureTest)

    def test_suite(self):
        suite = load_fixture_suite()
        self.assertIsInstance(suite, sciunit.TestSuite)
        self.assertEqual(len(suite.tests), 19)


if __name__ == "__main__":
    unittest.main()
