"""Module contains all the exceptions

"""


class UnrecognizedFormat(Exception):
    """Could not recognize the format of a counts or matrix file.

    """
    def __init__(self, value):
        self.value = value

    def __str__(self):
        return repr(self.value)


class InvalidState(ValueError):
    """A state, a density matrix or a unitary does not satisfy its invariants
    (normalization, hermiticity, trace, positivity, exchange symmetry or
    block structure).
    """
    pass


class IncompleteDesign(ValueError):
    """The measurement settings do not determine all the parameters of the
    visible density matrix.
    """
    pass


class ReconstructionError(Exception):
    """Tomographic reconstruction could not produce an estimate.

    Parameters
    ----------
    message : str
        description of the problem
    best : instance of TomographyResult, optional
        best iterate reached before giving up, if there is one
    """
    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
