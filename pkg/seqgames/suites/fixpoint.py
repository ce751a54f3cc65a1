"""
The fixed point operator: fix(f) is a fixed point of f, constant maps fix at their
value, and strict maps with nothing to start from diverge.
"""

from typing import Iterator, List

from ..coalgebra import fix, successor
from ..composition import compose
from ..connectives import constant, copycat, element
from ..expr import UNIT, Flat, GameExpr, Limp
from ..strategies import Strategy, Undefined
from . import Diagram, GenericSuite


def endomorphisms(game: Flat) -> List[Strategy]:
    """
    Constants, the successor and the identity on ``game``.
    """
    found = [constant(game, game, value) for value in game.values]
    return found + [successor(game), copycat(game)]


class Suite(GenericSuite):
    """
    fix(f);f = fix(f), with the expected value for each endomorphism.
    """

    NAME = "fixpoint"

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        assert isinstance(game, Flat)
        for strategy in endomorphisms(game):
            point = fix(strategy)
            yield Diagram(
                "fix(%s);%s" % (strategy.name, strategy.name), point, compose(point, strategy)
            )
        for value in game.values:
            yield Diagram(
                "fix(<%s>)" % value, element(game, value), fix(constant(game, game, value))
            )
        diverges = Undefined(Limp(UNIT, game))
        yield Diagram("fix(succ) diverges", diverges, fix(successor(game)))
        yield Diagram("fix(id) diverges", diverges, fix(copycat(game)))
