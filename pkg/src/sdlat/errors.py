"""Exception types raised by the lattice toolkit."""


class LatticeError(Exception):
    """Base class for all structural and input errors."""


class CycleError(LatticeError):
    """The cover digraph contains a directed cycle."""


class NotTransitiveReduction(LatticeError):
    """A listed cover is implied by other covers (redundant edge)."""


class NotALattice(LatticeError):
    """Some pair of elements has no unique join or meet."""


class NoBoundsError(LatticeError):
    """The poset has no unique minimum or maximum element."""


class NotComparable(LatticeError):
    """An interval endpoint pair is not ordered lo <= hi."""


class NotSemidistributive(LatticeError):
    """Operation requires a semidistributive lattice."""


class NoUniqueMax(LatticeError):
    """A candidate set expected to have a unique extremum does not."""


class NotACover(LatticeError):
    """The given pair is not a cover relation."""


class NotJoinIrreducible(LatticeError):
    """An element outside cji(L) was passed where a join-irreducible is required."""


class SizeLimitExceeded(LatticeError):
    """Input exceeds the configured size cap for an exhaustive search."""


class RecursionMismatch(LatticeError):
    """The recursive labeling of the upper core label order failed to line up."""


class MissingLabel(LatticeError):
    """A cover relation of a labeled poset carries no label."""


class ChainCapExceeded(LatticeError):
    """An interval has more maximal chains than the configured cap."""


class SchemaError(LatticeError):
    """A lattice document does not conform to the JSON schema."""


class BadParameter(LatticeError):
    """A generator was called with an out-of-range or unknown parameter."""
