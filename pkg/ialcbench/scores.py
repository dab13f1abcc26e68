from sciunit import scores


class VerdictScore(scores.BooleanScore):
    """
    Whether a reasoner reproduced the expected verdict of a fixture.

    The observation is the fixture dictionary (its ``expected`` key holds the expected verdict) and the prediction
    is the verdict string produced by the reasoner, or ``"ERROR"`` when the reasoner failed.
    """

    _description = "True iff the reasoner reproduces the expected fixture verdict"

    @classmethod
    def compute(cls, observation, prediction):
        """
        Parameters
        ----------
        observation : dict
            Fixture dictionary with at least the ``expected`` key.

        prediction : str
            Reproduced verdict.

        Returns
        -------
        score : VerdictScore
        """
        return cls(observation["expected"] == prediction)
