"""Exact maximum transitive subtournament (minimum feedback vertex set)
solvers for tournaments, with polynomial algorithms for several classes
defined by forbidden subtournaments."""

from .core import Solution, Tournament, from_adjacency, is_transitive, reverse
from .errors import TournamentError
from .solvers import solve

__all__ = ["Solution", "Tournament", "TournamentError", "from_adjacency", "is_transitive", "reverse", "solve"]
