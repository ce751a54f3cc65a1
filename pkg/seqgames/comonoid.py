"""
The cofree commutative comonoid structure on !A, built only from anamorphisms,
catamorphisms and the structural maps: the natural isomorphism κ, the strong monoidal
map !A⊗!B ≅ !(A×B), contraction μ, dereliction, weakening and promotion.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .coalgebra import (
    SequoidAlgebra,
    SequoidCoalgebra,
    alpha,
    ana,
    cata,
    lambek_inv,
)
from .composition import Equivalence, compose, compose_all, equiv_up_to
from .connectives import (
    assoc,
    copycat,
    dec,
    diagonal,
    dist,
    lunit,
    map_seq,
    map_tensor,
    passoc,
    product_map,
    runit,
    sym,
    terminal,
    unit_seq,
    wk,
)
from .constants import DEFAULT_DEPTH, LEFT, RIGHT
from .exceptions import PreconditionFailed
from .expr import UNIT, Bang, GameExpr, Limp, Prod, Seq, Tensor, limp_parts
from .moves import Move, Position, copy_tag, index_tag, tag_number
from .strategies import Copycat, Strategy, Undefined

_LOG = logging.getLogger(__name__)


def der(game: GameExpr) -> Strategy:
    """
    der_A: !A ⊸ A, playing in copy 0 only.
    """
    result = compose_all(
        alpha(game),
        map_seq(copycat(game), terminal(Bang(game))),
        unit_seq(game).forward,
    )
    result.name = "der[%s]" % game.to_text()
    return result


def eta(game: GameExpr) -> Strategy:
    """
    η_A: !A ⊸ I.
    """
    return terminal(Bang(game))


def kappa_stages(a: GameExpr, b: GameExpr) -> List[Strategy]:
    """
    The four stages of κ: !A⊗!B ⊸ (A⊘(!A⊗!B)) × (B⊘(!A⊗!B)).
    """
    bang_a, bang_b = Bang(a), Bang(b)
    return [
        dec(bang_a, bang_b).forward,
        product_map(
            [
                map_seq(alpha(a), copycat(bang_b)),
                map_seq(alpha(b), copycat(bang_a)),
            ]
        ),
        product_map([passoc(a, bang_a, bang_b).forward, passoc(b, bang_b, bang_a).forward]),
        product_map(
            [
                copycat(Seq(a, Tensor(bang_a, bang_b))),
                map_seq(copycat(b), sym(bang_b, bang_a).forward),
            ]
        ),
    ]


def kappa_inverse_stages(a: GameExpr, b: GameExpr) -> List[Strategy]:
    """
    The stages of κ⁻¹, each undoing the matching stage of :func:`kappa_stages`.
    """
    bang_a, bang_b = Bang(a), Bang(b)
    both = Tensor(bang_a, bang_b)
    return [
        product_map([copycat(Seq(a, both)), map_seq(copycat(b), sym(bang_a, bang_b).forward)]),
        product_map([passoc(a, bang_a, bang_b).inverse, passoc(b, bang_b, bang_a).inverse]),
        product_map(
            [
                map_seq(lambek_inv(a), copycat(bang_b)),
                map_seq(lambek_inv(b), copycat(bang_a)),
            ]
        ),
        dec(bang_a, bang_b).inverse,
    ]


def _chain(stages: List[Strategy], name: str) -> Strategy:
    result = compose_all(*stages)
    result.name = name
    return result


def kappa(a: GameExpr, b: GameExpr) -> Strategy:
    """
    κ_{A,B}.
    """
    return _chain(kappa_stages(a, b), "kappa")


def kappa_inverse(a: GameExpr, b: GameExpr) -> Strategy:
    """
    κ⁻¹_{A,B}.
    """
    return _chain(kappa_inverse_stages(a, b), "kappa^-1")


def int_fwd(a: GameExpr, b: GameExpr) -> Strategy:
    """
    ∫_{A,B}: !A⊗!B ⊸ !(A×B), the anamorphism of κ;dist⁻¹.
    """
    state = Tensor(Bang(a), Bang(b))
    step = compose(kappa(a, b), dist([a, b], state).inverse)
    return ana(SequoidCoalgebra(state, Prod((a, b)), step))


def int_inv(a: GameExpr, b: GameExpr) -> Strategy:
    """
    ∫⁻¹_{A,B}: !(A×B) ⊸ !A⊗!B, the catamorphism of dist;κ⁻¹.
    """
    carrier = Tensor(Bang(a), Bang(b))
    step = compose(dist([a, b], carrier).forward, kappa_inverse(a, b))
    return cata(SequoidAlgebra(carrier, Prod((a, b)), step))


def _routing(position: Position) -> List[Tuple[int, int]]:
    """
    For each copy opened on the !(A×B) side, the factor it chose and its rank among
    the copies that chose the same factor.
    """
    seen: List[Tuple[int, int]] = []
    per_factor = [0, 0]
    for move in position:
        if move.head != RIGHT:
            continue
        copy = tag_number(move.path[1])
        if copy == len(seen):
            factor = tag_number(move.path[2])
            seen.append((factor, per_factor[factor]))
            per_factor[factor] += 1
    return seen


def int_oracle(a: GameExpr, b: GameExpr) -> Strategy:
    """
    A direct copycat for ∫: copy n of !(A×B) that picks factor k is the j-th copy of
    that factor's exponential, where j counts earlier copies with the same choice.
    """
    sides = (LEFT, RIGHT)

    def to_left(position: Position, move: Move) -> Optional[Move]:
        copy = tag_number(move.head)
        factor, rank = _routing(position)[copy]
        return Move((sides[factor], copy_tag(rank)) + move.path[2:], move.base)

    def to_right(position: Position, move: Move) -> Optional[Move]:
        factor = sides.index(move.head)
        rank = tag_number(move.path[1])
        for copy, routed in enumerate(_routing(position)):
            if routed == (factor, rank):
                return Move((copy_tag(copy), index_tag(factor)) + move.path[2:], move.base)
        return None

    return Copycat(
        Limp(Tensor(Bang(a), Bang(b)), Bang(Prod((a, b)))), to_left, to_right, "int-oracle"
    )


def sigma(game: GameExpr) -> Strategy:
    """
    !A ⊸ !(A×A), the anamorphism of α;Δ;dist⁻¹.
    """
    state = Bang(game)
    step = compose_all(
        alpha(game), diagonal(Seq(game, state)), dist([game, game], state).inverse
    )
    return ana(SequoidCoalgebra(state, Prod((game, game)), step))


def mu(game: GameExpr) -> Strategy:
    """
    Contraction μ_A: !A ⊸ !A⊗!A.
    """
    result = compose(sigma(game), int_inv(game, game))
    result.name = "mu[%s]" % game.to_text()
    return result


def mu_via_cata(game: GameExpr) -> Strategy:
    """
    μ_A computed as a catamorphism directly, bypassing ∫⁻¹.
    """
    bang = Bang(game)
    carrier = Tensor(bang, bang)
    step = compose_all(
        diagonal(Seq(game, carrier)),
        product_map(
            [
                passoc(game, bang, bang).inverse,
                compose(
                    map_seq(copycat(game), sym(bang, bang).forward),
                    passoc(game, bang, bang).inverse,
                ),
            ]
        ),
        product_map(
            [
                map_seq(lambek_inv(game), copycat(bang)),
                map_seq(lambek_inv(game), copycat(bang)),
            ]
        ),
        dec(bang, bang).inverse,
    )
    return cata(SequoidAlgebra(carrier, game, step))


def eps() -> Strategy:
    """
    I ⊸ !I, the anamorphism of the trivial step on I.
    """
    step = compose_all(
        runit(UNIT).inverse,
        map_tensor(terminal(UNIT), copycat(UNIT)),
        wk(UNIT, UNIT).forward,
    )
    return ana(SequoidCoalgebra(UNIT, UNIT, step))


def bang_map(strategy: Strategy) -> Strategy:
    """
    !f: !A ⊸ !B, the anamorphism of μ;(der⊗id);(f⊗id);wk.
    """
    a, b = limp_parts(strategy.host, strategy.name)
    bang_a = Bang(a)
    step = compose_all(
        mu(a),
        map_tensor(der(a), copycat(bang_a)),
        map_tensor(strategy, copycat(bang_a)),
        wk(b, bang_a).forward,
    )
    result = ana(SequoidCoalgebra(bang_a, b, step))
    result.name = "!%s" % strategy.name
    return result


def bang_element(point: Strategy) -> Strategy:
    """
    I ⊸ !X from a point I ⊸ X, by way of ε and !.
    """
    source, _ = limp_parts(point.host, point.name)
    if source != UNIT:
        raise PreconditionFailed(
            "%s is not a point: it starts from %s" % (point.name, source.to_text())
        )
    result = compose(eps(), bang_map(point))
    result.name = "!%s" % point.name
    return result


@dataclass(frozen=True)
class ComonoidPresentation:
    """
    A carrier with a comultiplication and a counit.
    """

    carrier: GameExpr
    comult: Strategy
    counit: Strategy
    name: str = "comonoid"


def bang_comonoid(game: GameExpr) -> ComonoidPresentation:
    """
    (!A, μ_A, η_A).
    """
    return ComonoidPresentation(Bang(game), mu(game), eta(game), "!%s" % game.to_text())


def unit_comonoid() -> ComonoidPresentation:
    """
    I with its only comonoid structure.
    """
    return ComonoidPresentation(
        UNIT,
        Undefined(Limp(UNIT, Tensor(UNIT, UNIT)), "delta[I]"),
        terminal(UNIT),
        "I",
    )


def comonoid_laws(comonoid: ComonoidPresentation) -> List[Tuple[str, Strategy, Strategy]]:
    """
    The comonoid equations as (name, expected, actual) pairs of strategies.
    """
    carrier, delta, counit = comonoid.carrier, comonoid.comult, comonoid.counit
    same = copycat(carrier)
    return [
        (
            "coassociativity",
            compose(delta, map_tensor(same, delta)),
            compose_all(delta, map_tensor(delta, same), assoc(carrier, carrier, carrier).forward),
        ),
        ("commutativity", delta, compose(delta, sym(carrier, carrier).forward)),
        (
            "left counit",
            same,
            compose_all(delta, map_tensor(counit, same), lunit(carrier).forward),
        ),
        (
            "right counit",
            same,
            compose_all(delta, map_tensor(same, counit), runit(carrier).forward),
        ),
    ]


def check_comonoid(
    comonoid: ComonoidPresentation, depth: int = DEFAULT_DEPTH
) -> List[Tuple[str, Equivalence]]:
    """
    Compare both sides of every comonoid equation up to ``depth``.
    """
    results = []
    for name, expected, actual in comonoid_laws(comonoid):
        outcome = equiv_up_to(expected, actual, depth)
        if not outcome:
            _LOG.info("%s fails %s: %s", comonoid.name, name, outcome.describe())
        results.append((name, outcome))
    return results


def promote(
    strategy: Strategy, comonoid: ComonoidPresentation, depth: int = DEFAULT_DEPTH
) -> Strategy:
    """
    f†: B ⊸ !A for f: B ⊸ A, when B carries the commutative comonoid ``comonoid``.
    The comonoid equations are checked up to ``depth`` first.
    """
    source, target = limp_parts(strategy.host, strategy.name)
    if source != comonoid.carrier:
        raise PreconditionFailed(
            "%s starts from %s, not the comonoid carrier %s"
            % (strategy.name, source.to_text(), comonoid.carrier.to_text())
        )
    failed = [name for name, outcome in check_comonoid(comonoid, depth) if not outcome]
    if failed:
        raise PreconditionFailed(
            "%s is not a commutative comonoid up to depth %d: %s fails"
            % (comonoid.name, depth, ", ".join(failed))
        )
    step = compose_all(
        comonoid.comult,
        map_tensor(strategy, copycat(source)),
        wk(target, source).forward,
    )
    result = ana(SequoidCoalgebra(source, target, step))
    result.name = "%s†" % strategy.name
    return result


def cofree_squares(
    strategy: Strategy, comonoid: ComonoidPresentation, candidate: Strategy
) -> List[Tuple[str, Strategy, Strategy]]:
    """
    The two squares that characterise f† among maps B ⊸ !A, for ``candidate``.
    """
    _, target = limp_parts(strategy.host, strategy.name)
    return [
        ("dereliction", strategy, compose(candidate, der(target))),
        (
            "contraction",
            compose(comonoid.comult, map_tensor(candidate, candidate)),
            compose(candidate, mu(target)),
        ),
    ]
