"""
The isomorphism !Σ⊗!A ≅ !(Σ×A) and the κ stage it is built from.
"""

from typing import Iterator

from ..composition import compose
from ..comonoid import int_fwd, int_inv, int_oracle, kappa, kappa_inverse
from ..connectives import copycat
from ..expr import SIGMA, Bang, Flat, GameExpr, Prod, Tensor
from . import Diagram, GenericSuite


class Suite(GenericSuite):
    """
    ∫ and ∫⁻¹ are mutually inverse, ∫ agrees with the direct routing copycat and κ is
    invertible.
    """

    NAME = "strong-monoidal"
    MAX_DEPTH = 6

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def label(self, game: GameExpr) -> str:
        return "%s,%s" % (SIGMA.to_text(), game.to_text())

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        a, b = SIGMA, game
        both = Tensor(Bang(a), Bang(b))
        yield Diagram("int;int^-1", copycat(both), compose(int_fwd(a, b), int_inv(a, b)))
        yield Diagram(
            "int^-1;int", copycat(Bang(Prod((a, b)))), compose(int_inv(a, b), int_fwd(a, b))
        )
        yield Diagram("int is the routing copycat", int_oracle(a, b), int_fwd(a, b))
        yield Diagram("kappa;kappa^-1", copycat(both), compose(kappa(a, b), kappa_inverse(a, b)))
