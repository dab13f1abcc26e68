import sciunit


class LintsInterpretations(sciunit.Capability):
    """
    Capability to load an ``.ikm`` interpretation and decide statements on it.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def statements_hold(self, model_path, statements_path):
        """
        Parameters
        ----------
        model_path : str
            Path of an ``.ikm`` file.

        statements_path : str
            Path of a ``.stm`` file with one statement per line.

        Returns
        -------
        out : bool
            True iff the interpretation passes lint and satisfies every statement.
        """
        raise NotImplementedError("Must implement statements_hold.")


class ChecksProofs(sciunit.Capability):
    """
    Capability to check ``.ipf`` sequent calculus proofs.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def proof_accepted(self, proof_path):
        raise NotImplementedError("Must implement proof_accepted.")


class FindsCountermodels(sciunit.Capability):
    """
    Capability to search bounded countermodels of sequents.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def sequents_valid(self, sequents_path, max_entities):
        """
        Returns
        -------
        out : bool
            True iff no sequent of the ``.seq`` file has a countermodel with at most `max_entities` entities.
        """
        raise NotImplementedError("Must implement sequents_valid.")


class ChecksDerivations(sciunit.Capability):
    """
    Capability to check ``.sdt`` SDL derivation traces.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def derivation_accepted(self, trace_path):
        raise NotImplementedError("Must implement derivation_accepted.")


class FindsKDModels(sciunit.Capability):
    """
    Capability to search serial Kripke models for SDL formula sets.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def formulas_satisfiable(self, formulas_path, max_worlds):
        raise NotImplementedError("Must implement formulas_satisfiable.")
