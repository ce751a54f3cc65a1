"""
Composition of strategies by interaction and hiding, currying, and the bounded
observational equivalence check that every law suite is built on.
"""

import logging
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from typing_extensions import Literal

from .connectives import lunit
from .constants import DEFAULT_BUDGET, DEFAULT_NODE_BUDGET, LEFT, RIGHT
from .exceptions import HostMismatchError, LivelockError, ResourceError
from .expr import Limp, Tensor, limp_parts
from .moves import Move, Position, format_position
from .strategies import Retagged, Strategy

_LOG = logging.getLogger(__name__)

BudgetPolicy = Literal["raise", "diverge"]
_Views = Tuple[Position, Position]

_HIDDEN_BUDGET: ContextVar[int] = ContextVar("hidden_budget", default=DEFAULT_BUDGET)


@contextmanager
def hidden_budget(budget: Optional[int]) -> Iterator[None]:
    """
    Composites built inside the block without an explicit budget get ``budget``. The
    setting is per thread, so suites checking games concurrently each keep their own.
    """
    if budget is None:
        yield
        return
    if budget < 1:
        raise ValueError("Internal move budget must be at least 1, got %d" % budget)
    token = _HIDDEN_BUDGET.set(budget)
    try:
        yield
    finally:
        _HIDDEN_BUDGET.reset(token)


def default_budget() -> int:
    return _HIDDEN_BUDGET.get()


class Composite(Strategy):
    """
    σ;τ for σ: A ⊸ B and τ: B ⊸ C.

    For each visible position the composite remembers the two component positions its
    interaction produced, so answering an O-move only replays the new internal chatter.
    Like the response memo, the views grow with the positions explored, which
    :func:`equiv_up_to` bounds by its node budget.
    """

    def __init__(
        self,
        first: Strategy,
        second: Strategy,
        budget: Optional[int] = None,
        on_budget: BudgetPolicy = "raise",
        name: Optional[str] = None,
    ):
        source, middle = limp_parts(first.host, first.name)
        middle_again, target = limp_parts(second.host, second.name)
        if middle != middle_again:
            raise HostMismatchError(
                "Cannot compose %s with %s: %s differs from %s"
                % (first.name, second.name, middle.to_text(), middle_again.to_text())
            )
        if budget is None:
            budget = default_budget()
        if budget < 1:
            raise ValueError("Internal move budget must be at least 1, got %d" % budget)
        super().__init__(Limp(source, target), name or "%s;%s" % (first.name, second.name))
        self.first = first
        self.second = second
        self.budget = budget
        self.on_budget = on_budget
        self._views: Dict[Position, _Views] = {(): ((), ())}

    def _views_at(self, position: Position) -> Optional[_Views]:
        """
        Component positions behind the P-position ``position``, or None if the position
        is not one this composite plays to.
        """
        with self._lock:
            views = self._views.get(position)
        if views is not None:
            return views
        if self.respond(position[:-1]) != position[-1]:
            return None
        with self._lock:
            return self._views.get(position)

    def _respond(self, position: Position) -> Optional[Move]:
        try:
            return self._interact(position)
        except LivelockError:
            if self.on_budget == "raise":
                raise
            _LOG.debug(
                "%s treats a livelock at %s as divergence", self.name, format_position(position)
            )
            return None

    def _interact(self, position: Position) -> Optional[Move]:
        views = self._views_at(position[:-1])
        if views is None:
            return None
        left_view, right_view = views
        move = position[-1]
        if move.head == LEFT:
            left_view += (move,)
            first_to_move = True
        else:
            right_view += (move,)
            first_to_move = False

        hidden = 0
        while True:
            if first_to_move:
                reply = self.first.respond(left_view)
                if reply is None:
                    return None
                left_view += (reply,)
                if reply.head == LEFT:
                    break
                right_view += (reply.tail.under(LEFT),)
            else:
                reply = self.second.respond(right_view)
                if reply is None:
                    return None
                right_view += (reply,)
                if reply.head == RIGHT:
                    break
                left_view += (reply.tail.under(RIGHT),)
            first_to_move = not first_to_move
            hidden += 1
            if hidden > self.budget:
                raise LivelockError(
                    "%s exchanged more than %d hidden moves at position %s"
                    % (self.name, self.budget, format_position(position))
                )
        with self._lock:
            self._views[position + (reply,)] = (left_view, right_view)
        return reply


def compose(
    first: Strategy,
    second: Strategy,
    budget: Optional[int] = None,
    on_budget: BudgetPolicy = "raise",
) -> Strategy:
    """
    Diagrammatic composition: play ``first`` then ``second``, hiding the middle game.
    """
    return Composite(first, second, budget, on_budget)


def compose_all(*strategies: Strategy, budget: Optional[int] = None) -> Strategy:
    """
    Left-to-right composite of a non-empty chain of strategies.
    """
    if not strategies:
        raise ValueError("Nothing to compose")
    result = strategies[0]
    for strategy in strategies[1:]:
        result = Composite(result, strategy, budget)
    return result


@dataclass(frozen=True)
class Equivalence:
    """
    Outcome of a bounded comparison of two strategies.
    """

    equal: bool
    explored: int
    position: Optional[Position] = None
    expected: Optional[Move] = None
    actual: Optional[Move] = None

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        """
        Human readable summary of a mismatch.
        """
        if self.equal:
            return "equal on %d O-positions" % self.explored
        return "at %s expected %s, got %s" % (
            format_position(self.position or ()),
            self.expected or "no response",
            self.actual or "no response",
        )


def equiv_up_to(
    expected: Strategy,
    actual: Strategy,
    depth: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Equivalence:
    """
    Compare responses at every O-position of length at most ``depth`` reachable when
    both play. The first mismatch in address order is reported.
    """
    if expected.host != actual.host:
        raise HostMismatchError(
            "Cannot compare strategies on %s and %s"
            % (expected.host.to_text(), actual.host.to_text())
        )
    game = expected.game
    stack: List[Position] = [(m,) for m in reversed(game.next_moves(()))]
    explored = 0
    while stack:
        position = stack.pop()
        if len(position) > depth:
            continue
        explored += 1
        if explored > node_budget:
            raise ResourceError(
                "Comparing %s with %s explored more than %d positions"
                % (expected.name, actual.name, node_budget)
            )
        want = expected.respond(position)
        got = actual.respond(position)
        if want != got:
            _LOG.debug(
                "%s and %s differ at %s", expected.name, actual.name, format_position(position)
            )
            return Equivalence(False, explored, position, want, got)
        if want is None or len(position) + 2 > depth:
            continue
        extended = position + (want,)
        stack.extend(extended + (m,) for m in reversed(game.next_moves(extended)))
    return Equivalence(True, explored)


_CURRY_RULES = [
    ((LEFT,), (LEFT, LEFT)),
    ((RIGHT, LEFT), (LEFT, RIGHT)),
    ((RIGHT, RIGHT), (RIGHT,)),
]


def _swap(move: Move, to_tensor: bool) -> Move:
    for curried, uncurried in _CURRY_RULES:
        source, target = (curried, uncurried) if to_tensor else (uncurried, curried)
        if move.starts_with(source):
            return move.replace_prefix(source, target)
    raise HostMismatchError("Move %s cannot be re-addressed for currying" % move)


class Curried(Retagged):
    """
    Λ(σ): A ⊸ (B ⊸ C) from σ: (A⊗B) ⊸ C.
    """


class Uncurried(Retagged):
    """
    The converse re-addressing of :class:`Curried`.
    """


def curry(strategy: Strategy) -> Strategy:
    """
    (A⊗B) ⊸ C to A ⊸ (B ⊸ C), exactly inverse to :func:`uncurry`.
    """
    if isinstance(strategy, Uncurried):
        return strategy.inner
    source, target = limp_parts(strategy.host, strategy.name)
    if not isinstance(source, Tensor):
        raise HostMismatchError("Cannot curry %s: source is not a tensor" % strategy.name)
    host = Limp(source.left, Limp(source.right, target))
    return Curried(
        strategy,
        host,
        lambda m: _swap(m, to_tensor=True),
        lambda m: _swap(m, to_tensor=False),
        "Λ(%s)" % strategy.name,
    )


def uncurry(strategy: Strategy) -> Strategy:
    """
    A ⊸ (B ⊸ C) to (A⊗B) ⊸ C, exactly inverse to :func:`curry`.
    """
    if isinstance(strategy, Curried):
        return strategy.inner
    source, target = limp_parts(strategy.host, strategy.name)
    inner_source, inner_target = limp_parts(target, strategy.name)
    host = Limp(Tensor(source, inner_source), inner_target)
    return Uncurried(
        strategy,
        host,
        lambda m: _swap(m, to_tensor=False),
        lambda m: _swap(m, to_tensor=True),
        "uncurry(%s)" % strategy.name,
    )


def name_of(strategy: Strategy) -> Strategy:
    """
    The name Λ(f): I ⊸ (A ⊸ B) of f: A ⊸ B.
    """
    source, _ = limp_parts(strategy.host, strategy.name)
    return curry(Composite(lunit(source).forward, strategy))

