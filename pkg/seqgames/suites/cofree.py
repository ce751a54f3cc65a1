"""
The universal property of promotion: f† closes both squares that characterise maps
into the cofree comonoid, and perturbing it breaks at least one of them.
"""

from typing import Iterator, List, Tuple

from ..coalgebra import successor
from ..composition import compose
from ..comonoid import (
    ComonoidPresentation,
    bang_comonoid,
    cofree_squares,
    der,
    promote,
    unit_comonoid,
)
from ..connectives import copycat, element
from ..expr import UNIT, Bang, Flat, GameExpr, Limp
from ..report import CheckResult
from ..strategies import Strategy, Undefined
from . import Diagram, GenericSuite

CONFIG_SCHEMA = dict(
    # Depth the comonoid equations are checked to before promoting.
    comonoid_depth=dict(type="integer", min=1, default=4),
    perturbed_depth=dict(type="integer", min=5, default=6),
)



def promotion_cases(game: Flat) -> List[Tuple[str, Strategy, ComonoidPresentation]]:
    """
    Maps into ``game`` from a commutative comonoid, to be promoted.
    """
    return [
        ("der", der(game), bang_comonoid(game)),
        ("der;succ", compose(der(game), successor(game)), bang_comonoid(game)),
        ("undefined point", Undefined(Limp(UNIT, game)), unit_comonoid()),
        ("point %s" % game.values[0], element(game, game.values[0]), unit_comonoid()),
    ]


class Suite(GenericSuite):
    """
    f† is the map the squares single out.
    """

    NAME = "cofree"

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        assert isinstance(game, Flat)
        comonoid_depth = self.config["comonoid_depth"]
        for name, strategy, comonoid in promotion_cases(game):
            candidate = promote(strategy, comonoid, comonoid_depth)
            for square, expected, actual in cofree_squares(strategy, comonoid, candidate):
                yield Diagram("%s %s" % (name, square), expected, actual)
        yield Diagram(
            "der† is id",
            copycat(Bang(game)),
            promote(der(game), bang_comonoid(game), comonoid_depth),
        )

    def check_game(self, game: GameExpr, depth: int) -> List[CheckResult]:
        results = super().check_game(game, depth)
        assert isinstance(game, Flat)
        results.extend(self.check_perturbations(game))
        return results

    def check_perturbations(self, game: Flat) -> List[CheckResult]:
        """
        Each perturbed copy of der† must fail at least one square.
        """
        strategy, comonoid = der(game), bang_comonoid(game)
        return self.check_perturbed(
            game,
            lambda candidate: cofree_squares(strategy, comonoid, candidate),
            self.config["perturbed_depth"],
        )
