"""
The copy-shifting map and the identity recovered from contraction.
"""

from typing import Iterator

from ..coalgebra import alpha
from ..composition import compose_all
from ..comonoid import der, eta, mu, mu_via_cata
from ..connectives import copycat, lunit, map_tensor, wk
from ..expr import Bang, Flat, GameExpr
from . import Diagram, GenericSuite


class Suite(GenericSuite):
    """
    α = μ;(der⊗id);wk, μ;(η⊗id);λ = id and μ agrees with its direct catamorphism.
    """

    NAME = "alpha-formula"

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        bang = Bang(game)
        yield Diagram(
            "mu;(der⊗id);wk",
            alpha(game),
            compose_all(mu(game), map_tensor(der(game), copycat(bang)), wk(game, bang).forward),
        )
        yield Diagram(
            "mu;(eta⊗id);lunit",
            copycat(bang),
            compose_all(mu(game), map_tensor(eta(game), copycat(bang)), lunit(bang).forward),
        )
        yield Diagram("mu by cata", mu(game), mu_via_cata(game))
