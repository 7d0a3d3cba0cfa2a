"""Exception types shared across the package."""


class RegimeError(ValueError):
    """Inputs fall outside a verifier's hypotheses.

    Callers that sweep ranges treat this as "not applicable, skip" rather
    than as a failed check.
    """


class InternalCheckError(AssertionError):
    """A consistency check that must hold for every valid input failed.

    Raised for conditions like a divisibility that is guaranteed by theory,
    or an ambiguous norm-form representation that should be unique.  Seeing
    this exception means a bug in this package, not a refuted identity.
    """
