"""
Exceptions thrown by seqgames.
"""


class ConfigError(Exception):
    """
    Base class for any error raised because of a problem with the config file.
    """


class ConfigValidationFailed(ConfigError):
    """
    The config file validation failed.
    """


class SeqGamesError(Exception):
    """
    Base class for errors raised while building or running games and strategies.
    """


class GameSyntaxError(SeqGamesError):
    """
    A game expression, move or trace could not be parsed.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__("%s at line %d, column %d" % (message, line, column))
        self.message = message
        self.line = line
        self.column = column


class ConstructionError(SeqGamesError):
    """
    A game, relation or strategy was built from arguments it cannot accept.
    """


class IllegalMoveError(SeqGamesError):
    """
    A move does not address a leaf of the game it was played in.
    """


class HostMismatchError(SeqGamesError):
    """
    The host games of two strategies do not fit together.
    """


class NotStrictError(HostMismatchError):
    """
    A strategy was required to be strict but replied on the right first.
    """


class LivelockError(SeqGamesError):
    """
    A composite exceeded its internal move budget or unfolding limit.
    """


class ResourceError(SeqGamesError):
    """
    An exhaustive exploration would exceed its configured budget.
    """


class PreconditionFailed(SeqGamesError):
    """
    An input structure failed the laws required of it.
    """


class UnsupportedOrdinalError(SeqGamesError):
    """
    An ordinal or expression lies outside the range the calculus decides.
    """


class NegativeOrdinalError(ArithmeticError):
    """
    Ordinal subtraction or predecessor asked for something below zero.
    """


class ZetaError(SeqGamesError):
    """
    A symbolic position lacks the restriction data a win formula needs.
    """


class UnknownSuiteError(SeqGamesError):
    """
    No law suite exists with the requested name.
    """


class UnknownStrategyError(SeqGamesError):
    """
    No explorable strategy exists with the requested name.
    """
