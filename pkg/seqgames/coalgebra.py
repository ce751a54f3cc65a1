"""
The exponential as the final coalgebra of A⊘_: the copy-shifting map α, anamorphisms,
the Lambek inverse, catamorphisms out of the bifree algebra and the fixed point
operator built from them.

Anamorphisms and catamorphisms are unrolled on demand. Each unrolling level is its
own strategy instance, and level k lazily builds level k+1 the first time a copy
beyond its own is touched. A play that needs more levels than the unfold limit raises
LivelockError instead of exhausting the interpreter stack.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Optional, Tuple

from .composition import compose, name_of, uncurry
from .connectives import copycat, map_seq
from .constants import DEFAULT_BUDGET, DEFAULT_UNFOLD_LIMIT, LEFT, QUESTION, RIGHT
from .exceptions import HostMismatchError, LivelockError
from .expr import Bang, Flat, GameExpr, Limp, Seq, limp_parts
from .moves import Move, Position, copy_tag, tag_number
from .strategies import Copycat, FunctionStrategy, Strategy, rehost

_LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class SequoidCoalgebra:
    """
    A state game B with a step B ⊸ A⊘B.
    """

    state_game: GameExpr
    payload_game: GameExpr
    step: Strategy

    def __post_init__(self) -> None:
        expected = Limp(self.state_game, Seq(self.payload_game, self.state_game))
        if self.step.host != expected:
            raise HostMismatchError(
                "Coalgebra step %s lives on %s, not %s"
                % (self.step.name, self.step.host.to_text(), expected.to_text())
            )


@dataclass(frozen=True)
class SequoidAlgebra:
    """
    A carrier C with a step A⊘C ⊸ C.
    """

    carrier: GameExpr
    payload_game: GameExpr
    step: Strategy

    def __post_init__(self) -> None:
        expected = Limp(Seq(self.payload_game, self.carrier), self.carrier)
        if self.step.host != expected:
            raise HostMismatchError(
                "Algebra step %s lives on %s, not %s"
                % (self.step.name, self.step.host.to_text(), expected.to_text())
            )


def bang_to_seq(move: Move) -> Move:
    """
    Re-address a move of !A as a move of A⊘!A: copy 0 becomes the left component and
    copy n+1 becomes copy n on the right.
    """
    copy = tag_number(move.head)
    if copy == 0:
        return move.tail.under(LEFT)
    return Move((RIGHT, copy_tag(copy - 1)) + move.path[1:], move.base)


def seq_to_bang(move: Move) -> Move:
    """
    Inverse of :func:`bang_to_seq`.
    """
    if move.head == LEFT:
        return move.tail.under(copy_tag(0))
    return Move((copy_tag(tag_number(move.path[1]) + 1),) + move.path[2:], move.base)


def alpha(game: GameExpr) -> Strategy:
    """
    α_A: !A ⊸ A⊘!A.
    """
    return Copycat(
        Limp(Bang(game), Seq(game, Bang(game))),
        lambda _, move: seq_to_bang(move),
        lambda _, move: bang_to_seq(move),
        "alpha[%s]" % game.to_text(),
    )


class _Unrolled(Strategy):
    """
    Shared machinery for one level of a lazily unrolled recursion.
    """

    def __init__(self, host: GameExpr, name: str, level: int, unfold_limit: int):
        super().__init__(host, "%s@%d" % (name, level) if level else name)
        self.level = level
        self.unfold_limit = unfold_limit
        self._body: Optional[Strategy] = None
        self._body_lock = threading.Lock()

    def _build_body(self) -> Strategy:
        raise NotImplementedError

    @property
    def body(self) -> Strategy:
        """
        This level's one-step unfolding, with the next level plugged in.
        """
        if self._body is None:
            if self.level >= self.unfold_limit:
                raise LivelockError(
                    "%s needed more than %d unfoldings" % (self.name, self.unfold_limit)
                )
            with self._body_lock:
                if self._body is None:
                    self._body = self._build_body()
        return self._body


class Anamorphism(_Unrolled):
    """
    ⌊σ⌋: B ⊸ !A for a coalgebra σ: B ⊸ A⊘B.

    Copy n of !A is served by the n-th unfolding of the step.
    """

    def __init__(
        self,
        coalgebra: SequoidCoalgebra,
        unfold_limit: int = DEFAULT_UNFOLD_LIMIT,
        level: int = 0,
        name: Optional[str] = None,
    ):
        host = Limp(coalgebra.state_game, Bang(coalgebra.payload_game))
        super().__init__(host, name or "ana(%s)" % coalgebra.step.name, level, unfold_limit)
        self.coalgebra = coalgebra
        self._base_name = name or "ana(%s)" % coalgebra.step.name

    def _build_body(self) -> Strategy:
        deeper = Anamorphism(self.coalgebra, self.unfold_limit, self.level + 1, self._base_name)
        return compose(
            self.coalgebra.step, map_seq(copycat(self.coalgebra.payload_game), deeper)
        )

    def _respond(self, position: Position) -> Optional[Move]:
        inner = tuple(
            m if m.head == LEFT else bang_to_seq(m.tail).under(RIGHT) for m in position
        )
        response = self.body.respond(inner)
        if response is None or response.head == LEFT:
            return response
        return seq_to_bang(response.tail).under(RIGHT)


class Catamorphism(_Unrolled):
    """
    The algebra map !A ⊸ C out of the initial algebra α⁻¹: A⊘!A ⊸ !A.
    """

    def __init__(
        self,
        algebra: SequoidAlgebra,
        unfold_limit: int = DEFAULT_UNFOLD_LIMIT,
        level: int = 0,
        name: Optional[str] = None,
    ):
        host = Limp(Bang(algebra.payload_game), algebra.carrier)
        super().__init__(host, name or "cata(%s)" % algebra.step.name, level, unfold_limit)
        self.algebra = algebra
        self._base_name = name or "cata(%s)" % algebra.step.name

    def _build_body(self) -> Strategy:
        deeper = Catamorphism(self.algebra, self.unfold_limit, self.level + 1, self._base_name)
        payload = self.algebra.payload_game
        return compose(
            alpha(payload), compose(map_seq(copycat(payload), deeper), self.algebra.step)
        )

    def _respond(self, position: Position) -> Optional[Move]:
        return self.body.respond(position)


def ana(coalgebra: SequoidCoalgebra, unfold_limit: int = DEFAULT_UNFOLD_LIMIT) -> Strategy:
    """
    The anamorphism of ``coalgebra``.
    """
    return Anamorphism(coalgebra, unfold_limit)


def cata(algebra: SequoidAlgebra, unfold_limit: int = DEFAULT_UNFOLD_LIMIT) -> Strategy:
    """
    The catamorphism of ``algebra``.
    """
    return Catamorphism(algebra, unfold_limit)


def lambek_inv(game: GameExpr) -> Strategy:
    """
    α⁻¹: A⊘!A ⊸ !A, the anamorphism of id⊘α.
    """
    state = Seq(game, Bang(game))
    step = map_seq(copycat(game), alpha(game))
    return ana(SequoidCoalgebra(state, game, step))


def alpha_coalgebra(game: GameExpr) -> SequoidCoalgebra:
    """
    (!A, α_A) as a coalgebra.
    """
    return SequoidCoalgebra(Bang(game), game, alpha(game))


def lambek_algebra(game: GameExpr) -> SequoidAlgebra:
    """
    (!A, α⁻¹) as an algebra.
    """
    return SequoidAlgebra(Bang(game), game, lambek_inv(game))


def ana_square(coalgebra: SequoidCoalgebra, candidate: Strategy) -> Tuple[Strategy, Strategy]:
    """
    The two legs of the anamorphism square for ``candidate``: candidate;α against
    step;(id⊘candidate).
    """
    payload = coalgebra.payload_game
    return (
        compose(candidate, alpha(payload)),
        compose(coalgebra.step, map_seq(copycat(payload), candidate)),
    )


def cata_square(algebra: SequoidAlgebra, candidate: Strategy) -> Tuple[Strategy, Strategy]:
    """
    The two legs of the catamorphism square: α;(id⊘candidate);step against candidate,
    both precomposed so they share the host !A ⊸ C.
    """
    payload = algebra.payload_game
    return (
        compose(alpha(payload), compose(map_seq(copycat(payload), candidate), algebra.step)),
        candidate,
    )


def evaluation(game: GameExpr) -> Strategy:
    """
    ε_{A,A}: (A⊸A)⊘A ⊸ A, the counit of currying restricted to the sequoid.
    """
    function_space = Limp(game, game)
    ev = uncurry(copycat(function_space))
    return rehost(ev, Limp(Seq(function_space, game), game), "ev[%s]" % game.to_text())


def fixpoint_combinator(game: GameExpr, unfold_limit: int = DEFAULT_UNFOLD_LIMIT) -> Strategy:
    """
    Φ_A: !(A⊸A) ⊸ A, the catamorphism of the evaluation counit.
    """
    return cata(SequoidAlgebra(game, Limp(game, game), evaluation(game)), unfold_limit)


def fix(
    strategy: Strategy,
    budget: int = DEFAULT_BUDGET,
    unfold_limit: int = DEFAULT_UNFOLD_LIMIT,
) -> Strategy:
    """
    fix(f) = ε;!Λ(f);Φ_A: I ⊸ A. A play that chatters past the budget is read as
    divergence, so unproductive fixed points respond with nothing.
    """
    # pylint: disable=import-outside-toplevel,cyclic-import
    from .comonoid import bang_map, eps

    source, target = limp_parts(strategy.host, strategy.name)
    if source != target:
        raise HostMismatchError("fix needs an endomorphism, got %s" % strategy.host.to_text())
    named = compose(eps(), bang_map(name_of(strategy)))
    result = compose(
        named, fixpoint_combinator(source, unfold_limit), budget, on_budget="diverge"
    )
    result.name = "fix(%s)" % strategy.name
    return result


def successor(game: Flat) -> Strategy:
    """
    A strict endomorphism of ⟨X⟩ that asks its argument and answers the next value.
    """
    values = game.values

    def respond(position: Position) -> Optional[Move]:
        if len(position) == 1:
            return Move((LEFT,), QUESTION)
        if len(position) == 3:
            index = values.index(position[2].base)
            return Move((RIGHT,), values[(index + 1) % len(values)])
        return None

    return FunctionStrategy(Limp(game, game), respond, "succ")
