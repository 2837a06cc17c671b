"""Exception hierarchy shared by all modules."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class ZeroVector(ToricError, ValueError):
    pass


class DimensionMismatch(ToricError, ValueError):
    pass


class InvalidFan(ToricError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid fan: " + "; ".join(report.problems()))


class NotStronglyConvex(ToricError, ValueError):
    pass


class NotCartier(ToricError):
    """No integral Cartier data exists on some maximal cone.

    ``witness`` is a rational solution when one exists (the divisor is then
    Q-Cartier on that cone but not Cartier), otherwise ``None``.
    """

    def __init__(self, cone_index, cone, witness=None):
        self.cone_index = cone_index
        self.cone = tuple(cone)
        self.witness = witness
        if witness is None:
            detail = "no rational solution"
        else:
            detail = "rational solution (%s) is not integral" % ", ".join(str(x) for x in witness)
        super().__init__("not Cartier on cone %d %s: %s" % (cone_index, list(self.cone), detail))


class Unbounded(ToricError):
    def __init__(self, direction):
        self.direction = tuple(direction)
        super().__init__("polyhedron is unbounded along %s" % (list(self.direction),))


class RationalityCertificationFailed(ToricError):
    pass


class VerificationFailed(ToricError):
    pass


class HeightLimitExceeded(ToricError):
    """The certified degree bound for generators exceeds the configured cap."""

    def __init__(self, required, limit):
        self.required = required
        self.limit = limit
        super().__init__(
            "Hilbert basis search needs height %d but the cap is %d; "
            "rerun with TORIC_MAX_HEIGHT=%d" % (required, limit, required)
        )


class InputError(ToricError, ValueError):
    """Malformed fan, divisor or polytope file."""
