"""
Winning conditions on infinite plays: the supremum of play lengths of a game and the
labelling ζ of positions by the player who is winning there, with T read as P and F as O.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple, Union

from typing_extensions import Literal

from ..exceptions import UnsupportedOrdinalError, ZetaError
from ..expr import Bang, Flat, GameExpr, Limp, Prod, Seq, Tensor, Unit
from .ordinals import OMEGA, ZERO, CnfOrdinal

_LOG = logging.getLogger(__name__)

Label = Literal["O", "P"]

# A question and its answer.
FLAT_BOUND = 2


def length_sup(
    game: GameExpr, bounds: Optional[Mapping[str, int]] = None
) -> CnfOrdinal:
    """
    The supremum of the lengths of plays of ``game``. Base games are bounded by
    ``bounds`` (keyed by their text) or, for flat games, by a question and an answer.
    Side by side games interleave, so their lengths add naturally; a product is as long
    as its longest factor and !A has unboundedly many finite copies.
    """
    bounds = bounds or {}
    text = game.to_text()
    if text in bounds:
        return CnfOrdinal.of(bounds[text])
    if isinstance(game, Unit):
        return ZERO
    if isinstance(game, Flat):
        return CnfOrdinal.of(FLAT_BOUND)
    if isinstance(game, Prod):
        return max(length_sup(factor, bounds) for factor in game.factors)
    if isinstance(game, (Tensor, Seq, Limp)):
        return length_sup(game.left, bounds).natural_sum(length_sup(game.right, bounds))
    if isinstance(game, Bang):
        inner = length_sup(game.inner, bounds)
        if inner.is_zero():
            return ZERO
        if not inner.is_finite():
            raise UnsupportedOrdinalError(
                "No length bound for %s: its copies are already unbounded" % text
            )
        return OMEGA
    raise UnsupportedOrdinalError("No length bound for %s" % text)


def exponential_witness(left: GameExpr, right: GameExpr) -> Tuple[CnfOrdinal, CnfOrdinal]:
    """
    Play lengths of !A⊗!B and of !(A×B). They differ whenever both games have a
    play of length two, so the two games cannot be isomorphic.
    """
    return (
        length_sup(Tensor(Bang(left), Bang(right))),
        length_sup(Bang(Prod((left, right)))),
    )


@dataclass(frozen=True)
class LeafView:
    """
    A finite play of a base game, or an explicit label for it.
    """

    moves: Tuple[str, ...] = ()
    label: Optional[Label] = None


@dataclass(frozen=True)
class PairView:
    """
    The restrictions of a position to the two sides of ⊗, ⊘ or ⊸.
    """

    left: "View" = None
    right: "View" = None


@dataclass(frozen=True)
class ProdView:
    """
    A position of a product: the chosen factor and the play in it.
    """

    index: int
    inner: "View" = None


@dataclass(frozen=True)
class BangView:
    """
    A position of !A: the restrictions to the copies listed in ``copies``, and, when
    infinitely many copies were opened, ``others`` standing for every other one.
    """

    copies: Dict[int, "View"] = field(default_factory=dict)
    infinitely_many: bool = False
    others: "View" = None


View = Union[None, LeafView, PairView, ProdView, BangView]


@dataclass(frozen=True)
class ZetaFormula:
    """
    The shape of a winning condition, following the game expression. ``lollipop`` on
    a Bang node reads it as ¡A, where touching infinitely many copies wins for P.
    """

    kind: str
    children: Tuple["ZetaFormula", ...] = ()
    lollipop: bool = False


def zeta_formula(game: GameExpr, lollipop: bool = False) -> ZetaFormula:
    """
    The ζ formula of ``game``; ``lollipop`` marks every Bang as ¡.
    """
    if isinstance(game, (Unit, Flat)):
        return ZetaFormula("leaf")
    if isinstance(game, Prod):
        return ZetaFormula("prod", tuple(zeta_formula(f, lollipop) for f in game.factors))
    if isinstance(game, (Tensor, Seq)):
        return ZetaFormula(
            "and", (zeta_formula(game.left, lollipop), zeta_formula(game.right, lollipop))
        )
    if isinstance(game, Limp):
        return ZetaFormula(
            "implies", (zeta_formula(game.left, lollipop), zeta_formula(game.right, lollipop))
        )
    if isinstance(game, Bang):
        return ZetaFormula("bang", (zeta_formula(game.inner, lollipop),), lollipop)
    raise ZetaError("No winning condition for %s" % game.to_text())


def _both(left: Label, right: Label) -> Label:
    return "P" if left == "P" and right == "P" else "O"


def _missing(formula: ZetaFormula, wanted: str, view: View) -> ZetaError:
    return ZetaError(
        "A %s node needs %s restriction data, got %r" % (formula.kind, wanted, view)
    )


def zeta_eval(formula: ZetaFormula, view: View = None) -> Label:
    """
    Evaluate ζ on a position. ``None`` stands for the empty restriction, where every
    condition gives P.
    """
    if view is None:
        return "P"
    if formula.kind == "leaf":
        if not isinstance(view, LeafView):
            raise _missing(formula, "LeafView", view)
        if view.label is not None:
            return view.label
        # Whoever moved last is winning.
        return "O" if len(view.moves) % 2 else "P"
    if formula.kind in ("and", "implies"):
        if not isinstance(view, PairView):
            raise _missing(formula, "PairView", view)
        left = zeta_eval(formula.children[0], view.left)
        right = zeta_eval(formula.children[1], view.right)
        if formula.kind == "and":
            return _both(left, right)
        return "P" if left == "O" or right == "P" else "O"
    if formula.kind == "prod":
        if not isinstance(view, ProdView):
            raise _missing(formula, "ProdView", view)
        if not 0 <= view.index < len(formula.children):
            raise ZetaError("Product has no factor %d" % view.index)
        return zeta_eval(formula.children[view.index], view.inner)
    if formula.kind == "bang":
        if not isinstance(view, BangView):
            raise _missing(formula, "BangView", view)
        if view.infinitely_many and formula.lollipop:
            return "P"
        inner = formula.children[0]
        label: Label = "P"
        for copy in view.copies.values():
            label = _both(label, zeta_eval(inner, copy))
        if view.infinitely_many:
            label = _both(label, zeta_eval(inner, view.others))
        return label
    raise ZetaError("Unknown formula node %r" % formula.kind)
