"""
Identity and associativity of composition on a handful of endomorphisms per game.
"""

from itertools import product
from typing import Iterator

from ..composition import compose
from ..connectives import copycat, strategies_of_corpus
from ..expr import GameExpr
from . import Diagram, GenericSuite

CONFIG_SCHEMA = dict(
    associativity=dict(type="boolean", default=True),
)


class Suite(GenericSuite):
    """
    id;f = f = f;id and (f;g);h = f;(g;h).
    """

    NAME = "category"

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        strategies = strategies_of_corpus(game)
        identity = copycat(game)
        for strategy in strategies:
            yield Diagram(
                "left identity %s" % strategy.name, strategy, compose(identity, strategy)
            )
            yield Diagram(
                "right identity %s" % strategy.name, strategy, compose(strategy, identity)
            )
        if not self.config["associativity"]:
            return
        for first, second, third in product(strategies, repeat=3):
            yield Diagram(
                "associativity %s;%s;%s" % (first.name, second.name, third.name),
                compose(compose(first, second), third),
                compose(first, compose(second, third)),
            )
