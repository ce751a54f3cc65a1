"""
Comonoid equations for (!A, μ, η).
"""

from typing import Iterator

from ..comonoid import bang_comonoid, comonoid_laws
from ..expr import Flat, GameExpr
from . import Diagram, GenericSuite


class Suite(GenericSuite):
    """
    Coassociativity, commutativity and both counit laws.
    """

    NAME = "comonoid"

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        for name, expected, actual in comonoid_laws(bang_comonoid(game)):
            yield Diagram(name, expected, actual)
