"""
∫ is a strong monoidal functor from products to tensors: it commutes with the
associators, unitors and symmetries up to the action of ! on the product structure.
"""

from typing import Iterator

from ..composition import compose, compose_all
from ..comonoid import bang_map, eps, int_fwd
from ..connectives import (
    Pairing,
    assoc,
    copycat,
    lunit,
    map_tensor,
    projection,
    runit,
    sym,
)
from ..expr import SIGMA, UNIT, Bang, GameExpr, Limp, Prod
from ..moves import index_tag
from ..strategies import Strategy, rule_copycat
from . import Diagram, GenericSuite


def product_assoc(a: GameExpr, b: GameExpr, c: GameExpr) -> Strategy:
    """
    (A×B)×C ⊸ A×(B×C).
    """
    first, second = index_tag(0), index_tag(1)
    rules = [
        ((first, first), (first,)),
        ((first, second), (second, first)),
        ((second,), (second, second)),
    ]
    source = Prod((Prod((a, b)), c))
    target = Prod((a, Prod((b, c))))
    return rule_copycat(Limp(source, target), rules, "assoc×")


class Suite(GenericSuite):
    """
    The associativity, unit and symmetry squares for ∫ at Σ.
    """

    NAME = "monoidal-coherence"
    MAX_DEPTH = 4

    def applies_to(self, game: GameExpr) -> bool:
        return game == SIGMA

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        a = b = c = game
        bang_a, bang_b, bang_c = Bang(a), Bang(b), Bang(c)
        yield Diagram(
            "associativity",
            compose_all(
                map_tensor(int_fwd(a, b), copycat(bang_c)),
                int_fwd(Prod((a, b)), c),
                bang_map(product_assoc(a, b, c)),
            ),
            compose_all(
                assoc(bang_a, bang_b, bang_c).forward,
                map_tensor(copycat(bang_a), int_fwd(b, c)),
                int_fwd(a, Prod((b, c))),
            ),
        )
        yield Diagram(
            "right unit",
            runit(bang_a).forward,
            compose_all(
                map_tensor(copycat(bang_a), eps()),
                int_fwd(a, UNIT),
                bang_map(projection([a, UNIT], 0)),
            ),
        )
        yield Diagram(
            "left unit",
            lunit(bang_a).forward,
            compose_all(
                map_tensor(eps(), copycat(bang_a)),
                int_fwd(UNIT, a),
                bang_map(projection([UNIT, a], 1)),
            ),
        )
        swap = Pairing([projection([a, b], 1), projection([a, b], 0)], "<pr1,pr0>")
        yield Diagram(
            "symmetry",
            compose(sym(bang_a, bang_b).forward, int_fwd(b, a)),
            compose(int_fwd(a, b), bang_map(swap)),
        )
