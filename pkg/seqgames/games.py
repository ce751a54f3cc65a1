"""
Games as legality oracles over path-addressed moves.
"""

import abc
import logging
from collections import deque
from functools import lru_cache
from typing import Deque, Iterable, List, Set, Tuple

from .constants import DEFAULT_NODE_BUDGET, LEFT, QUESTION, RIGHT
from .exceptions import IllegalMoveError, ResourceError
from .expr import UNIT, Bang, Flat, GameExpr, Limp, Prod, Seq, Tensor, Unit
from .moves import (
    Move,
    Polarity,
    Position,
    copy_tag,
    index_tag,
    polarity_at,
    restrict,
    tag_number,
)

_LOG = logging.getLogger(__name__)


class GameIntension(abc.ABC):
    """
    The semantic form of a game: a polarity labelling, a legality oracle and a
    finitely branching move enumerator.
    """

    @property
    @abc.abstractmethod
    def alphabet(self) -> str:
        """
        A short description of the move alphabet.
        """

    @abc.abstractmethod
    def polarity_of(self, move: Move) -> Polarity:
        """
        Which player owns ``move``.
        """

    @abc.abstractmethod
    def next_moves(self, position: Position) -> Tuple[Move, ...]:
        """
        Exactly the moves ``m`` for which ``position + (m,)`` is a position, sorted.
        """

    def is_position(self, position: Position) -> bool:
        """
        Whether every prefix extension of ``position`` is legal.
        """
        for i, move in enumerate(position):
            if move not in self.next_moves(position[:i]):
                return False
        return True


class ExprGame(GameIntension):
    """
    The game denoted by a game expression.
    """

    def __init__(self, expr: GameExpr):
        self.expr = expr

    @property
    def alphabet(self) -> str:
        return "moves of %s" % self.expr.to_text()

    def polarity_of(self, move: Move) -> Polarity:
        return move_polarity(self.expr, move)

    def next_moves(self, position: Position) -> Tuple[Move, ...]:
        return next_moves(self.expr, tuple(position))

    def __repr__(self) -> str:
        return "ExprGame(%s)" % self.expr.to_text()


@lru_cache(maxsize=1 << 14)
def move_polarity(expr: GameExpr, move: Move) -> Polarity:
    """
    The owner of ``move`` in ``expr``: ``q`` belongs to O at a flat leaf, values to P,
    and each pass through the left of a linear implication swaps the two.
    """
    node = expr
    flipped = False
    for tag in move.path:
        if isinstance(node, (Tensor, Seq, Limp)) and tag in (LEFT, RIGHT):
            if isinstance(node, Limp) and tag == LEFT:
                flipped = not flipped
            node = node.left if tag == LEFT else node.right
        elif isinstance(node, Prod) and tag.startswith("i:"):
            index = tag_number(tag)
            if index >= len(node.factors):
                raise IllegalMoveError("No factor %d in %s" % (index, node.to_text()))
            node = node.factors[index]
        elif isinstance(node, Bang) and tag.startswith("c:"):
            node = node.inner
        else:
            raise IllegalMoveError(
                "Move %s does not address a leaf of %s" % (move, expr.to_text())
            )
    if not isinstance(node, Flat) or (
        move.base != QUESTION and move.base not in node.values
    ):
        raise IllegalMoveError("Move %s does not address a leaf of %s" % (move, expr.to_text()))
    polarity = Polarity.O if move.base == QUESTION else Polarity.P
    return polarity.flip() if flipped else polarity


def _filtered(expr: GameExpr, moves: Iterable[Move], want: Polarity, flip: bool) -> List[Move]:
    kept = []
    for move in moves:
        polarity = move_polarity(expr, move)
        if (polarity.flip() if flip else polarity) is want:
            kept.append(move)
    return kept


def opened_copies(position: Position) -> int:
    """
    How many copies of an exponential the position has opened.
    """
    highest = -1
    for move in position:
        highest = max(highest, tag_number(move.head))
    return highest + 1


@lru_cache(maxsize=1 << 16)
def next_moves(expr: GameExpr, position: Position) -> Tuple[Move, ...]:
    """
    Legal continuations of a (legal) position of ``expr``, in address order.
    """
    # pylint: disable=too-many-return-statements
    if isinstance(expr, Unit):
        return ()
    if isinstance(expr, Flat):
        if not position:
            return (Move((), QUESTION),)
        if len(position) == 1:
            return tuple(Move((), value) for value in expr.values)
        return ()
    if isinstance(expr, Prod):
        if not position:
            return tuple(
                sorted(
                    move.under(index_tag(i))
                    for i, factor in enumerate(expr.factors)
                    for move in next_moves(factor, ())
                )
            )
        tag = position[0].head
        factor = expr.factors[tag_number(tag)]
        return tuple(move.under(tag) for move in next_moves(factor, restrict(position, tag)))

    want = polarity_at(len(position))
    moves: List[Move] = []
    if isinstance(expr, Bang):
        opened = opened_copies(position)
        for copy in range(opened):
            tag = copy_tag(copy)
            candidates = next_moves(expr.inner, restrict(position, tag))
            moves.extend(m.under(tag) for m in _filtered(expr.inner, candidates, want, False))
        # Only the next unopened copy may be started.
        candidates = next_moves(expr.inner, ())
        moves.extend(
            m.under(copy_tag(opened)) for m in _filtered(expr.inner, candidates, want, False)
        )
        return tuple(sorted(moves))

    if isinstance(expr, (Tensor, Seq, Limp)):
        sides = [(LEFT, expr.left, isinstance(expr, Limp)), (RIGHT, expr.right, False)]
        if isinstance(expr, Seq) and not position:
            sides = sides[:1]
        for tag, sub, flip in sides:
            candidates = next_moves(sub, restrict(position, tag))
            moves.extend(m.under(tag) for m in _filtered(sub, candidates, want, flip))
        return tuple(sorted(moves))
    raise TypeError("Unknown game expression %r" % (expr,))


def build_game(expr: GameExpr) -> GameIntension:
    """
    The game denoted by ``expr``.
    """
    return ExprGame(expr)


def flat_game(values: Iterable[object]) -> GameIntension:
    """
    The game with one O-question answered by one of ``values``.
    """
    return ExprGame(Flat(tuple(str(v) for v in values)))


def unit_game() -> GameIntension:
    """
    The empty game.
    """
    return ExprGame(UNIT)


def positions_up_to(
    game: GameIntension, depth: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> Set[Position]:
    """
    Every position of ``game`` of length at most ``depth``, found breadth first.
    """
    if depth < 0:
        raise ValueError("Depth must not be negative, got %d" % depth)
    found: Set[Position] = {()}
    queue: Deque[Position] = deque([()])
    while queue:
        position = queue.popleft()
        if len(position) >= depth:
            continue
        for move in game.next_moves(position):
            extended = position + (move,)
            found.add(extended)
            if len(found) > node_budget:
                raise ResourceError(
                    "More than %d positions of %s up to depth %d"
                    % (node_budget, game.alphabet, depth)
                )
            queue.append(extended)
    _LOG.debug("%d positions of %s up to depth %d", len(found), game.alphabet, depth)
    return found
