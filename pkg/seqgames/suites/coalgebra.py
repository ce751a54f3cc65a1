"""
Final coalgebra laws for the exponential of a flat game: both the identity and the
Lambek inverse close their anamorphism squares, α is invertible and the bifree algebra
catamorphism is the identity. Near misses of the identity must break the square, which
is the uniqueness half of finality.
"""

from typing import Iterator, List

from ..coalgebra import (
    SequoidCoalgebra,
    alpha,
    alpha_coalgebra,
    ana,
    ana_square,
    cata,
    cata_square,
    lambek_algebra,
    lambek_inv,
)
from ..composition import compose
from ..connectives import copycat, map_seq
from ..expr import Bang, Flat, GameExpr, Seq
from ..report import CheckResult
from ..strategies import Strategy
from . import Diagram, GenericSuite, Square

CONFIG_SCHEMA = dict(
    perturbed_depth=dict(type="integer", min=5, default=6),
)


class Suite(GenericSuite):
    """
    (!A, α) is final and α⁻¹ makes it a bifree algebra.
    """

    NAME = "coalgebra"
    MAX_DEPTH = 6

    def applies_to(self, game: GameExpr) -> bool:
        return isinstance(game, Flat)

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        bang = Bang(game)
        final = alpha_coalgebra(game)
        yield Diagram("square of id", *ana_square(final, copycat(bang)))
        yield Diagram("square of ana(alpha)", *ana_square(final, ana(final)))
        yield Diagram("ana(alpha) is id", copycat(bang), ana(final))

        unfolded = SequoidCoalgebra(
            Seq(game, bang), game, map_seq(copycat(game), alpha(game))
        )
        yield Diagram("square of alpha^-1", *ana_square(unfolded, lambek_inv(game)))
        yield Diagram("alpha;alpha^-1", copycat(bang), compose(alpha(game), lambek_inv(game)))
        yield Diagram(
            "alpha^-1;alpha",
            copycat(Seq(game, bang)),
            compose(lambek_inv(game), alpha(game)),
        )

        bifree = lambek_algebra(game)
        yield Diagram("cata(alpha^-1) is id", copycat(bang), cata(bifree))
        yield Diagram("square of cata(alpha^-1)", *cata_square(bifree, cata(bifree)))

    def check_game(self, game: GameExpr, depth: int) -> List[CheckResult]:
        results = super().check_game(game, depth)
        assert isinstance(game, Flat)
        results.extend(self.check_perturbations(game))
        return results

    def check_perturbations(self, game: Flat) -> List[CheckResult]:
        """
        Only the identity closes the square of α, so every perturbation must break it.
        """
        final = alpha_coalgebra(game)

        def squares(candidate: Strategy) -> List[Square]:
            expected, actual = ana_square(final, candidate)
            return [("square", expected, actual)]

        return self.check_perturbed(game, squares, self.config["perturbed_depth"])
