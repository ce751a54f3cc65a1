"""
Strategies as deterministic partial response functions, plus the generic copycat
machinery that every structural map is built from.
"""

import abc
import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .constants import LEFT, RIGHT
from .expr import GameExpr, limp_parts
from .games import GameIntension, build_game
from .moves import Move, Polarity, Position, format_position
from .types import Path

_LOG = logging.getLogger(__name__)

Translation = Callable[[Position, Move], Optional[Move]]
Rules = Sequence[Tuple[Path, Path]]
ResponseFunction = Callable[[Position], Optional[Move]]


class Strategy(abc.ABC):
    """
    A deterministic strategy on ``host``: for each O-position, the P-move to play, or
    None for no response.

    Responses are memoised per instance. Subclasses only implement ``_respond``, which
    must be a pure function of the position.
    """

    def __init__(self, host: GameExpr, name: Optional[str] = None):
        self.host = host
        self.name = name or type(self).__name__
        self._responses: Dict[Position, Optional[Move]] = {}
        self._game: Optional[GameIntension] = None
        self._lock = threading.Lock()

    @property
    def game(self) -> GameIntension:
        """
        The host game as a legality oracle.
        """
        if self._game is None:
            self._game = build_game(self.host)
        return self._game

    def respond(self, position: Position) -> Optional[Move]:
        """
        The reply to the O-position ``position``, if any.
        """
        position = tuple(position)
        with self._lock:
            if position in self._responses:
                return self._responses[position]
        response = self._respond(position)
        with self._lock:
            self._responses[position] = response
        return response

    @abc.abstractmethod
    def _respond(self, position: Position) -> Optional[Move]:
        """
        Compute the reply to ``position``.
        """

    def __repr__(self) -> str:
        return "<%s %s on %s>" % (type(self).__name__, self.name, self.host.to_text())


class Undefined(Strategy):
    """
    The empty strategy: never responds.
    """

    def __init__(self, host: GameExpr, name: str = "undefined"):
        super().__init__(host, name)

    def _respond(self, position: Position) -> Optional[Move]:
        return None


class FunctionStrategy(Strategy):
    """
    A strategy given directly by a response function.
    """

    def __init__(self, host: GameExpr, function: ResponseFunction, name: str = "function"):
        super().__init__(host, name)
        self._function = function

    def _respond(self, position: Position) -> Optional[Move]:
        return self._function(position)


class Copycat(Strategy):
    """
    Mirrors each O-move to the other side of a linear implication.

    ``to_left`` translates a move made on the right (relative to the right component)
    into the left component, and ``to_right`` does the converse. Both receive the whole
    position as well, so the translation may depend on the history.
    """

    def __init__(
        self,
        host: GameExpr,
        to_left: Translation,
        to_right: Translation,
        name: str = "copycat",
    ):
        super().__init__(host, name)
        limp_parts(host, name)
        self._to_left = to_left
        self._to_right = to_right

    def _respond(self, position: Position) -> Optional[Move]:
        last = position[-1]
        if last.head == RIGHT:
            mirrored = self._to_left(position, last.tail)
            return None if mirrored is None else mirrored.under(LEFT)
        mirrored = self._to_right(position, last.tail)
        return None if mirrored is None else mirrored.under(RIGHT)


def rewrite(rules: Rules, move: Move, from_right: bool) -> Optional[Move]:
    """
    Rewrite the address of ``move`` by the first matching (left, right) prefix pair.
    Longer prefixes are tried first.
    """
    pairs = [(r, l) if from_right else (l, r) for l, r in rules]
    for source, target in sorted(pairs, key=lambda pair: -len(pair[0])):
        if move.starts_with(source):
            return move.replace_prefix(source, target)
    return None


def rule_copycat(host: GameExpr, rules: Rules, name: str = "copycat") -> Copycat:
    """
    A copycat whose address bijection is a fixed table of prefix pairs.
    """
    return Copycat(
        host,
        lambda _, move: rewrite(rules, move, from_right=True),
        lambda _, move: rewrite(rules, move, from_right=False),
        name,
    )


def chosen_rule_copycat(
    host: GameExpr,
    choose: Callable[[Move], int],
    table: Sequence[Rules],
    name: str = "copycat",
) -> Copycat:
    """
    A copycat whose prefix table is picked by the opening move of the play.
    """

    def to_left(position: Position, move: Move) -> Optional[Move]:
        return rewrite(table[choose(position[0])], move, from_right=True)

    def to_right(position: Position, move: Move) -> Optional[Move]:
        return rewrite(table[choose(position[0])], move, from_right=False)

    return Copycat(host, to_left, to_right, name)


class Retagged(Strategy):
    """
    Another strategy seen through a bijection of move addresses.
    """

    def __init__(
        self,
        inner: Strategy,
        host: GameExpr,
        to_inner: Callable[[Move], Move],
        to_outer: Callable[[Move], Move],
        name: Optional[str] = None,
    ):
        super().__init__(host, name or inner.name)
        self.inner = inner
        self._to_inner = to_inner
        self._to_outer = to_outer

    def _respond(self, position: Position) -> Optional[Move]:
        response = self.inner.respond(tuple(self._to_inner(m) for m in position))
        return None if response is None else self._to_outer(response)


def _same(move: Move) -> Move:
    return move


def rehost(strategy: Strategy, host: GameExpr, name: Optional[str] = None) -> Strategy:
    """
    The same response function over a host whose positions are among the original's.
    """
    return Retagged(strategy, host, _same, _same, name)


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of auditing a strategy's responses.
    """

    valid: bool
    checked: int
    position: Optional[Position] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.valid


def validate_strategy(strategy: Strategy, depth: int) -> ValidationReport:
    """
    Check that every response to an O-position of length at most ``depth`` is a legal
    P-move. Determinism and O-reply closure hold by construction.
    """
    game = strategy.game
    checked = 0
    stack: List[Position] = [()]
    while stack:
        position = stack.pop()
        for move in reversed(game.next_moves(position)):
            o_position = position + (move,)
            if len(o_position) > depth:
                continue
            checked += 1
            response = strategy.respond(o_position)
            if response is None:
                continue
            if not isinstance(response, Move) or response not in game.next_moves(o_position):
                message = "Illegal response %s at position %s" % (
                    response,
                    format_position(o_position),
                )
                _LOG.warning("%s: %s", strategy.name, message)
                return ValidationReport(False, checked, o_position, message)
            if game.polarity_of(response) is not Polarity.P:
                message = "Response %s is not a P-move" % response
                return ValidationReport(False, checked, o_position, message)
            if len(o_position) + 1 < depth:
                stack.append(o_position + (response,))
    return ValidationReport(True, checked)


def is_strict(strategy: Strategy, depth: int = 1) -> bool:
    """
    Whether every reply to an opening move on the right lands on the left.
    """
    limp_parts(strategy.host, strategy.name)
    if depth < 1:
        return True
    for opening in strategy.game.next_moves(()):
        response = strategy.respond((opening,))
        if response is not None and response.head != LEFT:
            _LOG.debug(
                "%s is not strict: %s answered by %s", strategy.name, opening, response
            )
            return False
    return True


def response_set(strategy: Strategy, depth: int) -> FrozenSet[Position]:
    """
    The positions of length at most ``depth`` that arise when playing ``strategy``
    against every O behaviour.
    """
    game = strategy.game
    found: Set[Position] = {()}
    stack: List[Position] = [()]
    while stack:
        position = stack.pop()
        for move in game.next_moves(position):
            o_position = position + (move,)
            if len(o_position) > depth:
                continue
            found.add(o_position)
            response = strategy.respond(o_position)
            if response is not None and len(o_position) < depth:
                found.add(o_position + (response,))
                stack.append(o_position + (response,))
    return frozenset(found)


def is_strategy_set(game: GameIntension, positions: FrozenSet[Position], depth: int) -> bool:
    """
    Whether ``positions`` is non-empty, prefix closed, deterministic and closed under
    O-replies, as far as positions of length at most ``depth`` go.
    """
    if () not in positions:
        return False
    replies: Dict[Position, Move] = {}
    for position in positions:
        if len(position) > depth or not game.is_position(position):
            return False
        if position and position[:-1] not in positions:
            return False
        if len(position) % 2 == 0 and position:
            previous = replies.setdefault(position[:-1], position[-1])
            if previous != position[-1]:
                return False
    for position in positions:
        if len(position) % 2 == 0 and len(position) < depth:
            for move in game.next_moves(position):
                if position + (move,) not in positions:
                    return False
    return True


def strategy_from_set(
    host: GameExpr, positions: FrozenSet[Position], name: str = "from-set"
) -> Strategy:
    """
    The response function whose positions are ``positions``.
    """
    replies = {p[:-1]: p[-1] for p in positions if p and len(p) % 2 == 0}
    return FunctionStrategy(host, replies.get, name)
