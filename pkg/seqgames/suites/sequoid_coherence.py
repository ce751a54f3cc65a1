"""
Coherence of the sequoid with the tensor: decomposition, the sequoid associator
and the right unit, each against its description through the inclusion wk.
"""

from typing import Iterator

from ..composition import compose, compose_all
from ..connectives import (
    Pairing,
    assoc,
    copycat,
    dec,
    map_seq,
    passoc,
    runit,
    sym,
    unit_seq,
    wk,
)
from ..expr import SIGMA, UNIT, GameExpr, Tensor
from . import Diagram, GenericSuite


class Suite(GenericSuite):
    """
    The diagrams relating wk to dec, passoc and r, with B = C = Σ.
    """

    NAME = "sequoid-coherence"

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        a, b, c = game, SIGMA, SIGMA
        decomposed = Pairing(
            [wk(a, b).forward, compose(sym(a, b).forward, wk(b, a).forward)], "<wk,sym;wk>"
        )
        yield Diagram("dec is <wk,sym;wk>", dec(a, b).forward, decomposed)
        yield Diagram(
            "<wk,sym;wk>;dec^-1", copycat(Tensor(a, b)), compose(decomposed, dec(a, b).inverse)
        )
        yield Diagram(
            "wk;(wk⊘id);passoc",
            compose(assoc(a, b, c).forward, wk(a, Tensor(b, c)).forward),
            compose_all(
                wk(Tensor(a, b), c).forward,
                map_seq(wk(a, b).forward, copycat(c)),
                passoc(a, b, c).forward,
            ),
        )
        yield Diagram(
            "wk;r", runit(a).forward, compose(wk(a, UNIT).forward, unit_seq(a).forward)
        )
