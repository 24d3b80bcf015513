"""Exception types shared across the package."""


class B3RepError(Exception):
    """Base class for all package-specific errors."""


class NotSimpleDimension(B3RepError):
    """The dimension vector admits no simple representation."""


class GenerationFailed(B3RepError):
    """Random generation exhausted its retry budget.

    Hitting this for a dimension vector that passed the simplicity
    criterion points at a bug in the criterion itself, not at bad luck:
    generic representations of a simple type are simple.
    """


class InvalidSpec(B3RepError):
    """A semisimple specification violates one of its invariants."""


class IsomorphicDistinctEntries(InvalidSpec):
    """Two distinct spec entries denote isomorphic modules.

    Duplicates must be merged into the multiplicity of a single entry.
    """


class ToleranceAmbiguity(B3RepError):
    """A singular value fell within a factor 10 of the rank threshold.

    The computed dimension would depend on the tolerance; re-randomize
    the instances instead of trusting it.
    """


class WitnessUnavailable(B3RepError):
    """Singular point with no constructible second component.

    Raised for points whose only failures are 2-dimensional simple
    factors of multiplicity two or more: such points are singular but
    need not lie on a second component with generically semisimple
    points, so no witness is fabricated.
    """
