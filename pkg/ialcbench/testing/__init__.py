from .base import IALCTest, ERROR_VERDICT
from .tests import (
    ModelFixtureTest,
    ProofFixtureTest,
    SequentFixtureTest,
    TraceFixtureTest,
    FormulaSetFixtureTest,
    FIXTURE_TESTS,
    tests_from_manifest,
    suite_from_manifest,
)
