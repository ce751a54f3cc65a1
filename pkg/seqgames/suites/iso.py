"""
Every structural isomorphism composed with its inverse, both ways round.
"""

from typing import Iterator, List

from ..composition import compose
from ..connectives import (
    Iso,
    assoc,
    copycat,
    dec,
    dec0,
    dist,
    dist0,
    lunit,
    passoc,
    runit,
    sym,
    unit_seq,
)
from ..expr import SIGMA, UNIT, GameExpr, limp_parts
from . import Diagram, GenericSuite


def isos_for(game: GameExpr) -> List[Iso]:
    """
    The structural isomorphisms instantiated at ``game``, with Σ filling the other slots.
    """
    isos = [
        sym(game, SIGMA),
        assoc(game, SIGMA, SIGMA),
        lunit(game),
        runit(game),
        unit_seq(game),
        passoc(game, SIGMA, SIGMA),
        dec(game, SIGMA),
        dist([game, SIGMA], SIGMA),
        dist0(game),
    ]
    if game == UNIT:
        isos.append(dec0())
    return isos


class Suite(GenericSuite):
    """
    f;f⁻¹ = id and f⁻¹;f = id.
    """

    NAME = "iso"

    def diagrams(self, game: GameExpr) -> Iterator[Diagram]:
        for iso in isos_for(game):
            if iso.inverse is None:
                continue
            source, target = limp_parts(iso.forward.host, iso.name)
            yield Diagram(
                "%s;%s^-1" % (iso.name, iso.name),
                copycat(source),
                compose(iso.forward, iso.inverse),
            )
            yield Diagram(
                "%s^-1;%s" % (iso.name, iso.name),
                copycat(target),
                compose(iso.inverse, iso.forward),
            )
