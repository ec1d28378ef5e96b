"""Exception types shared across the package."""


class MatbaseError(Exception):
    """Base class for every error raised by this package."""


class GroundMismatchError(MatbaseError):
    """Two objects built over different ground sets were combined."""


class ConstraintError(MatbaseError):
    """A 01-linear constraint is malformed or out of range."""


class FormatError(MatbaseError):
    """Text or JSON input does not match the documented format."""


class EmptyFamilyError(MatbaseError):
    """A base family must contain at least one member."""


class MixedCardinalityError(MatbaseError):
    """All members of a base family must have the same cardinality."""


class ExchangeAxiomError(MatbaseError):
    """The basis exchange axiom failed.

    witness is a triple (B1, B2, x) of label tuples: x lies in B1 - B2 and no
    y in B2 - B1 makes B1 - x + y a member of the family.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LoopError(MatbaseError):
    """The operation requires a loopless matroid."""


class NotConnectedError(MatbaseError):
    """The operation requires a connected matroid."""


class NotSimpleError(MatbaseError):
    """The operation requires a simple matroid."""


class RankError(MatbaseError):
    """The operation requires a different rank or ground size."""


class ContradictionError(MatbaseError):
    """Constraint propagation reached an unsatisfiable state."""


class InconclusiveError(MatbaseError):
    """A bounded search hit its cap before reaching a verdict."""
