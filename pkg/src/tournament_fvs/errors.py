"""Exception hierarchy.

Every error raised by the library derives from :class:`TournamentError`, which
is itself a ``ValueError`` so callers that only care about "bad input" can
catch that.
"""


class TournamentError(ValueError):
    pass


# core-model
class DiagonalArc(TournamentError):
    pass


class NotComplete(TournamentError):
    pass


class BadOrdering(TournamentError):
    pass


class NotTransitive(TournamentError):
    pass


class OutOfRange(TournamentError):
    pass


class BadWeights(TournamentError):
    pass


# catalog / pattern
class BadParameter(TournamentError):
    pass


class TooLarge(TournamentError):
    pass


class PatternTooLarge(TooLarge):
    pass


# decompose
class NotHomogeneous(TournamentError):
    pass


class TrivialSet(TournamentError):
    pass


# solvers
class NotInClass(TournamentError):
    """The input is outside the class a solver is correct for."""


class BadLabeling(NotInClass):
    pass


class InvalidPartition(NotInClass):
    pass


class NoTriangle(TournamentError):
    pass


class Unsupported(TournamentError):
    pass


# reductions
class VerificationError(TournamentError):
    pass


class IdentityViolation(VerificationError):
    pass


class FreenessViolation(VerificationError):
    pass
