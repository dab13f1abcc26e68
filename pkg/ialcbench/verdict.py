from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckVerdict:
    """
    Outcome of checking a proof tree or a derivation trace.

    Attributes
    ----------
    failures : tuple of (str, str)
        Pairs of (location, reason). For proof trees the location is a tree path such as "root" or "0.1";
        for derivation traces it is the step number.
    """

    failures: tuple = field(default_factory=tuple)

    @property
    def accepted(self):
        return len(self.failures) == 0

    def __bool__(self):
        return self.accepted
