"""
! as a functor: it preserves identities and composition, commutes with α on strict
maps, and der and μ are natural.
"""

from typing import Iterator

from ..coalgebra import alpha, successor
from ..composition import compose
from ..comonoid import bang_map, der, mu
from ..connectives import copycat, map_seq, map_tensor
from ..expr import Bang, Flat, GameExpr
from . import Diagram, GenericSuite


class Suite(GenericSuite):
    """
    Functor laws for ! with the successor map as the strict witness.
    """

    NAME = "functoriality"

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        assert isinstance(game, Flat)
        step = successor(game)
        bang_step = bang_map(step)
        yield Diagram("!id", copycat(Bang(game)), bang_map(copycat(game)))
        yield Diagram(
            "!(f;f)", compose(bang_step, bang_map(step)), bang_map(compose(step, step))
        )
        yield Diagram(
            "!f;alpha",
            compose(alpha(game), map_seq(step, bang_step)),
            compose(bang_step, alpha(game)),
        )
        yield Diagram("der natural", compose(der(game), step), compose(bang_step, der(game)))
        yield Diagram(
            "mu natural",
            compose(mu(game), map_tensor(bang_step, bang_step)),
            compose(bang_step, mu(game)),
        )
