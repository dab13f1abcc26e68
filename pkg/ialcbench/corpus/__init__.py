"""
Bundled fixtures: the worked examples as text files plus a manifest of expected verdicts.

Fixtures live in the text formats of the modules that own them (``models/*.ikm`` with ``.stm`` statement lists,
``proofs/*.ipf``, ``sequents/*.seq``, ``sdl/*.sdt`` and ``sdl/*.sds``). ``manifest.txt`` lists one fixture per
line as ``id kind path expected``.
"""
from os.path import dirname, join as pathjoin, splitext

import pandas as pd

from ialcbench.errors import ModelFormatError
from ialcbench.logging import logger
from ialcbench.syntax import load_statements
from ialcbench.semantics import load_interpretation
from ialcbench.calculus import load_proof
from ialcbench.sdl import load_trace, load_formula_set

CORPUS_DIR = dirname(__file__)

IALC_MODEL = "IALC_MODEL"
IALC_PROOF = "IALC_PROOF"
IALC_SEQUENT = "IALC_SEQUENT"
SDL_TRACE = "SDL_TRACE"
SDL_SET = "SDL_SET"

VERDICTS = {
    IALC_MODEL: ("SATISFIED", "VIOLATED"),
    IALC_PROOF: ("ACCEPTED", "REJECTED"),
    IALC_SEQUENT: ("VALID", "INVALID"),
    SDL_TRACE: ("ACCEPTED", "REJECTED"),
    SDL_SET: ("SAT", "UNSAT"),
}

AXIOM_PROOF_FILES = ["ax1.ipf", "ax2.ipf", "ax3.ipf", "ax4.ipf", "ax5.ipf"]


def corpus_path(*parts):
    """Absolute path of a file below the corpus directory."""
    return pathjoin(CORPUS_DIR, *parts)


def statements_path(model_path):
    """The ``.stm`` file paired with an ``.ikm`` model file."""
    return splitext(model_path)[0] + ".stm"


def load_chisholm_ialc():
    """
    Load the iALC reading of the Chisholm scenario.

    Returns
    -------
    interp : :class:`ialcbench.semantics.Interpretation`
        Five entities l0..l4 with l4 below l0 and l3, l0 below l1 and l2, empty atoms P and Q, no roles.

    statements : list of Statement
        ``l1 : Top``, ``l2 : Top``, ``l3 : not P`` and ``l4 : not P``.
    """
    path = corpus_path("models", "chisholm.ikm")
    interp, _ = load_interpretation(path)
    return interp, load_statements(statements_path(path))


def load_chisholm_sdl():
    """
    Return the four SDL assumptions of the Chisholm scenario and the trace deriving ``false`` from them.
    """
    formulas = load_formula_set(corpus_path("sdl", "chisholm.sds"))
    return formulas, load_trace(corpus_path("sdl", "chisholm.sdt"))


def load_axiom_proofs():
    """
    Load the derivations of the five Hilbert axioms.

    Returns
    -------
    out : list of (Sequent, ProofTree)
        Theorem sequent and its proof. The first two are nominal-free; the others use the nominal ``x``.
    """
    out = []
    for name in AXIOM_PROOF_FILES:
        tree = load_proof(corpus_path("proofs", name))
        out.append((tree.conclusion, tree))
    return out


def load_free_choice_trace():
    return load_trace(corpus_path("sdl", "free_choice.sdt"))


def load_manifest(path=None):
    """
    Read the fixture manifest.

    Parameters
    ----------
    path : str (Optional)
        Manifest file. Defaults to the bundled ``manifest.txt``; fixture paths are relative to its directory.

    Returns
    -------
    manifest : :class:`pandas.DataFrame`
        Columns ``id``, ``kind``, ``path`` (absolute), ``expected``, in file order.

    Raises
    ------
    ModelFormatError
        If a row has an unknown kind, an expected verdict that does not belong to its kind or a duplicate id.
    """
    path = path or corpus_path("manifest.txt")
    df = pd.read_csv(
        path,
        sep=r"\s+",
        comment="#",
        header=None,
        names=["id", "kind", "path", "expected"],
        dtype=str,
        engine="python",
    )
    base = dirname(path)
    for row in df.itertuples(index=False):
        if row.kind not in VERDICTS:
            raise ModelFormatError(f"fixture {row.id}: unknown kind {row.kind!r}")
        if row.expected not in VERDICTS[row.kind]:
            raise ModelFormatError(
                f"fixture {row.id}: verdict {row.expected!r} is not one of {VERDICTS[row.kind]}"
            )
    duplicated = df["id"][df["id"].duplicated()].tolist()
    if duplicated:
        raise ModelFormatError(f"duplicate fixture ids {duplicated}")
    df["path"] = [pathjoin(base, p) for p in df["path"]]
    logger().debug(f"load_manifest : {len(df)} fixtures from {path}")
    return df


def load_fixture_suite(path=None, **kwargs):
    """
    Build a :class:`sciunit.TestSuite` with one fixture test per manifest row.

    Other Parameters
    ----------------
    kwargs : dict
        Passed to every test constructor (e.g. `persist_path`).
    """
    from ialcbench.testing import suite_from_manifest

    return suite_from_manifest(load_manifest(path), **kwargs)
