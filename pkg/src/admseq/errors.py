"""Exception types shared across the package."""


class AdmseqError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCartanError(AdmseqError):
    """Matrix is not a symmetric generalized Cartan matrix."""


class IndecomposabilityError(AdmseqError):
    """Graph is disconnected / Cartan matrix splits into blocks."""


class AcyclicityError(AdmseqError):
    """Orientation contains an oriented cycle."""


class FilterViolationError(AdmseqError):
    """Vertex set is not upward closed in the path order."""


class NotAdmissibleError(AdmseqError):
    """A letter of the sequence is not a sink in the running orientation.

    ``index`` is the 1-based position of the offending letter.
    """

    def __init__(self, index, letter):
        self.index = index
        self.letter = letter
        super().__init__(f"letter {letter} at position {index} is not a sink")


class BaseQuiverMismatchError(AdmseqError):
    """Binary operation on sequences with different base quivers."""


class InvalidMultiplicityError(AdmseqError):
    """Multiplicity vector has no admissible realization.

    ``level`` is the 1-based level set that breaks the filter or hull
    condition.
    """

    def __init__(self, level, reason):
        self.level = level
        super().__init__(f"level {level}: {reason}")


class EmptySequenceError(AdmseqError):
    """Operation requires a nonempty sequence."""


class NotPrincipalError(AdmseqError):
    """Sequence is not principal."""


class NotCompleteError(AdmseqError):
    """Sequence is not complete (some vertex multiplicity differs from 1)."""


class NotReducedError(AdmseqError):
    """The word of the sequence is not reduced."""


class NotSinkError(AdmseqError):
    """Reflection functor applied at a vertex that is not a sink."""


class NotSourceError(AdmseqError):
    """Reflection functor applied at a vertex that is not a source."""


class UndecidedError(AdmseqError):
    """Preprojectivity could not be decided within the iteration budget."""
