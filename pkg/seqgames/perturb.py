"""
Near misses of the identity on !A for a flat A. The uniqueness half of a universal
property is exercised by checking that each of these fails a square the real map closes.
"""

from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from .constants import LEFT, RIGHT
from .expr import Bang, Flat, Limp
from .moves import Move, Position, copy_tag, tag_number
from .strategies import Copycat, FunctionStrategy, Strategy, Undefined


class Perturbation(NamedTuple):
    """
    A way to break the identity on !A, and the flat games it changes anything on.
    """

    build: Callable[[Flat], Strategy]
    applies: Callable[[Flat], bool]


def _host(game: Flat) -> Limp:
    return Limp(Bang(game), Bang(game))


def _same_copy(_: Position, move: Move) -> Optional[Move]:
    return move


def _swap_values(game: Flat) -> Strategy:
    values = game.values
    swapped = {v: values[(i + 1) % len(values)] for i, v in enumerate(values)}

    def answer(_: Position, move: Move) -> Optional[Move]:
        return Move(move.path, swapped.get(move.base, move.base))

    return Copycat(_host(game), _same_copy, answer, "value-swap")


def _first_copy_only(game: Flat) -> Strategy:
    def only_first(_: Position, move: Move) -> Optional[Move]:
        return move if tag_number(move.head) == 0 else None

    return Copycat(_host(game), only_first, only_first, "copy-0-only")


def _constant_after_first(game: Flat) -> Strategy:
    def respond(position: Position) -> Optional[Move]:
        last = position[-1]
        if last.head == RIGHT and tag_number(last.path[1]) > 0:
            return Move(last.path, game.values[0])
        side = LEFT if last.head == RIGHT else RIGHT
        return Move((side,) + last.path[1:], last.base)

    return FunctionStrategy(_host(game), respond, "constant-after-first")


def _index_shift(game: Flat) -> Strategy:
    def up(_: Position, move: Move) -> Optional[Move]:
        return Move((copy_tag(tag_number(move.head) + 1),) + move.path[1:], move.base)

    def down(_: Position, move: Move) -> Optional[Move]:
        copy = tag_number(move.head)
        if copy == 0:
            return None
        return Move((copy_tag(copy - 1),) + move.path[1:], move.base)

    return Copycat(_host(game), up, down, "index-shift")


def _always(_: Flat) -> bool:
    return True


PERTURBATIONS: Dict[str, Perturbation] = {
    "undefined": Perturbation(lambda game: Undefined(_host(game)), _always),
    # A single value has nothing to swap with, so this is the identity on Σ.
    "value-swap": Perturbation(_swap_values, lambda game: len(game.values) > 1),
    "copy-0-only": Perturbation(_first_copy_only, _always),
    "constant-after-first": Perturbation(_constant_after_first, _always),
    "index-shift": Perturbation(_index_shift, _always),
}


def perturbations(game: Flat) -> List[Tuple[str, Strategy]]:
    """
    Every perturbation that differs from the identity on !``game``, by name.
    """
    return [
        (name, perturbation.build(game))
        for name, perturbation in PERTURBATIONS.items()
        if perturbation.applies(game)
    ]
