"""
Strategies built directly from the connective structure: identities, the structural
isomorphisms of the sequoidal category, and the functorial action of the connectives
on strategies.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence

from .constants import LEFT, QUESTION, RIGHT, SIGMA_VALUE, STRICTNESS_DEPTH
from .exceptions import ConstructionError, HostMismatchError, NotStrictError
from .expr import (
    SIGMA,
    UNIT,
    Flat,
    GameExpr,
    Limp,
    Prod,
    Seq,
    Tensor,
    limp_parts,
)
from .moves import Move, Position, index_tag, tag_number
from .strategies import (
    FunctionStrategy,
    Rules,
    Strategy,
    Undefined,
    chosen_rule_copycat,
    is_strict,
    rule_copycat,
)

_LOG = logging.getLogger(__name__)

L = (LEFT,)
R = (RIGHT,)


def copycat(game: GameExpr) -> Strategy:
    """
    The identity on ``game``.
    """
    return rule_copycat(Limp(game, game), [((), ())], "id[%s]" % game.to_text())


@dataclass(frozen=True)
class Iso:
    """
    A structural map together with its inverse, when it has one.
    """

    name: str
    forward: Strategy
    inverse: Optional[Strategy]


def _rule_iso(name: str, source: GameExpr, target: GameExpr, rules: Rules) -> Iso:
    inverse_rules = [(right, left) for left, right in rules]
    return Iso(
        name,
        rule_copycat(Limp(source, target), rules, name),
        rule_copycat(Limp(target, source), inverse_rules, name + "^-1"),
    )


def sym(left: GameExpr, right: GameExpr) -> Iso:
    """
    A⊗B ≅ B⊗A.
    """
    return _rule_iso("sym", Tensor(left, right), Tensor(right, left), [(L, R), (R, L)])


def assoc(a: GameExpr, b: GameExpr, c: GameExpr) -> Iso:
    """
    (A⊗B)⊗C ≅ A⊗(B⊗C).
    """
    rules = [((LEFT, LEFT), L), ((LEFT, RIGHT), (RIGHT, LEFT)), (R, (RIGHT, RIGHT))]
    return _rule_iso("assoc", Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)), rules)


def lunit(a: GameExpr) -> Iso:
    """
    I⊗A ≅ A.
    """
    return _rule_iso("lunit", Tensor(UNIT, a), a, [(R, ())])


def runit(a: GameExpr) -> Iso:
    """
    A⊗I ≅ A.
    """
    return _rule_iso("runit", Tensor(a, UNIT), a, [(L, ())])


def unit_seq(a: GameExpr) -> Iso:
    """
    A⊘I ≅ A.
    """
    return _rule_iso("r", Seq(a, UNIT), a, [(L, ())])


def passoc(a: GameExpr, b: GameExpr, c: GameExpr) -> Iso:
    """
    (A⊘B)⊘C ≅ A⊘(B⊗C).
    """
    rules = [((LEFT, LEFT), L), ((LEFT, RIGHT), (RIGHT, LEFT)), (R, (RIGHT, RIGHT))]
    return _rule_iso("passoc", Seq(Seq(a, b), c), Seq(a, Tensor(b, c)), rules)


def dec(a: GameExpr, b: GameExpr) -> Iso:
    """
    A⊗B ≅ (A⊘B)×(B⊘A): the factor is whichever side O opened first.
    """
    first, second = index_tag(0), index_tag(1)
    forward_table = [
        [(L, (first, LEFT)), (R, (first, RIGHT))],
        [(L, (second, RIGHT)), (R, (second, LEFT))],
    ]
    inverse_table = [[(right, left) for left, right in rules] for rules in forward_table]
    product = Prod((Seq(a, b), Seq(b, a)))
    return Iso(
        "dec",
        chosen_rule_copycat(
            Limp(Tensor(a, b), product),
            lambda opening: tag_number(opening.path[1]),
            forward_table,
            "dec",
        ),
        chosen_rule_copycat(
            Limp(product, Tensor(a, b)),
            lambda opening: 0 if opening.path[1] == LEFT else 1,
            inverse_table,
            "dec^-1",
        ),
    )


def dist(factors: Sequence[GameExpr], c: GameExpr) -> Iso:
    """
    (∏A_i)⊘C ≅ ∏(A_i⊘C).
    """
    if not factors:
        raise ConstructionError("dist needs at least one factor")
    tags = [index_tag(i) for i in range(len(factors))]
    forward_table = [[((LEFT, tag), (tag, LEFT)), (R, (tag, RIGHT))] for tag in tags]
    inverse_table = [[(right, left) for left, right in rules] for rules in forward_table]
    source = Seq(Prod(tuple(factors)), c)
    target = Prod(tuple(Seq(f, c) for f in factors))
    return Iso(
        "dist",
        chosen_rule_copycat(
            Limp(source, target),
            lambda opening: tag_number(opening.path[1]),
            forward_table,
            "dist",
        ),
        chosen_rule_copycat(
            Limp(target, source),
            lambda opening: tag_number(opening.path[2]),
            inverse_table,
            "dist^-1",
        ),
    )


def dist0(c: GameExpr) -> Iso:
    """
    I⊘C ≅ I; both sides are empty.
    """
    return Iso(
        "dist0",
        Undefined(Limp(Seq(UNIT, c), UNIT), "dist0"),
        Undefined(Limp(UNIT, Seq(UNIT, c)), "dist0^-1"),
    )


def dec0() -> Iso:
    """
    I ≅ 1, which are the same empty game here.
    """
    return Iso(
        "dec0", Undefined(Limp(UNIT, UNIT), "dec0"), Undefined(Limp(UNIT, UNIT), "dec0^-1")
    )


def wk(a: GameExpr, b: GameExpr) -> Iso:
    """
    The inclusion A⊗B ⊸ A⊘B; it has no inverse.
    """
    return Iso("wk", rule_copycat(Limp(Tensor(a, b), Seq(a, b)), [(L, L), (R, R)], "wk"), None)


_ISO_BUILDERS: Dict[str, Callable[..., Iso]] = dict(
    sym=sym,
    assoc=assoc,
    lunit=lunit,
    runit=runit,
    r=unit_seq,
    passoc=passoc,
    dec=dec,
    dist0=dist0,
    dec0=dec0,
    wk=wk,
)
_ISO_ARITY = dict(sym=2, assoc=3, lunit=1, runit=1, r=1, passoc=3, dec=2, dist0=1, dec0=0, wk=2)
ISO_NAMES = tuple(sorted(list(_ISO_BUILDERS) + ["dist"]))


def structural_iso(name: str, *args: GameExpr) -> Iso:
    """
    Build a structural map by name. ``dist`` takes the product factors followed by the
    game they are sequenced with.
    """
    if name == "dist":
        if len(args) < 2:
            raise ConstructionError(
                "dist takes at least one factor and a game, got %d" % len(args)
            )
        return dist(args[:-1], args[-1])
    try:
        builder = _ISO_BUILDERS[name]
    except KeyError as exc:
        raise ConstructionError("Unknown structural map %r" % name) from exc
    if len(args) != _ISO_ARITY[name]:
        raise ConstructionError(
            "%s takes %d game(s), got %d" % (name, _ISO_ARITY[name], len(args))
        )
    return builder(*args)


def terminal(game: GameExpr) -> Strategy:
    """
    The unique map A ⊸ I.
    """
    return Undefined(Limp(game, UNIT), "weak")


def constant(source: GameExpr, target: Flat, value: str, name: Optional[str] = None) -> Strategy:
    """
    Answer the question of ``target`` with ``value`` without consulting ``source``.
    """
    if value not in target.values:
        raise ConstructionError("%r is not a value of %s" % (value, target.to_text()))
    answer = Move(R, value)

    def respond(position: Position) -> Optional[Move]:
        return answer if len(position) == 1 else None

    return FunctionStrategy(Limp(source, target), respond, name or "<%s>" % value)


def element(target: Flat, value: str) -> Strategy:
    """
    The point ⟨x⟩: I ⊸ ⟨X⟩.
    """
    return constant(UNIT, target, value)


def ok() -> Strategy:
    """
    The point I ⊸ Σ.
    """
    return constant(UNIT, SIGMA, SIGMA_VALUE, "OK")


def _split(move: Move) -> Move:
    return Move(move.path[:1] + move.path[2:], move.base)


class Parallel(Strategy):
    """
    Two strategies played side by side over a tensor or a sequoid.
    """

    def __init__(self, first: Strategy, second: Strategy, host: GameExpr, name: str):
        super().__init__(host, name)
        self.first = first
        self.second = second

    def _respond(self, position: Position) -> Optional[Move]:
        component = position[-1].path[1]
        player = self.first if component == LEFT else self.second
        view = tuple(_split(m) for m in position if m.path[1] == component)
        response = player.respond(view)
        if response is None:
            return None
        return Move(response.path[:1] + (component,) + response.path[1:], response.base)


def map_tensor(first: Strategy, second: Strategy) -> Strategy:
    """
    σ⊗τ: (A⊗C) ⊸ (B⊗D).
    """
    a, b = limp_parts(first.host)
    c, d = limp_parts(second.host)
    return Parallel(
        first, second, Limp(Tensor(a, c), Tensor(b, d)), "(%s⊗%s)" % (first.name, second.name)
    )


def map_seq(first: Strategy, second: Strategy, check: bool = True) -> Strategy:
    """
    σ⊘τ: (A⊘C) ⊸ (B⊘D), defined when σ is strict.
    """
    a, b = limp_parts(first.host)
    c, d = limp_parts(second.host)
    if check and not is_strict(first, STRICTNESS_DEPTH):
        raise NotStrictError(
            "%s is not strict, so %s⊘%s is not a strategy"
            % (first.name, first.name, second.name)
        )
    return Parallel(
        first, second, Limp(Seq(a, c), Seq(b, d)), "(%s⊘%s)" % (first.name, second.name)
    )


class Pairing(Strategy):
    """
    ⟨σ_i⟩: B ⊸ ∏A_i; O's opening picks the factor whose strategy is played.
    """

    def __init__(self, strategies: Sequence[Strategy], name: Optional[str] = None):
        if not strategies:
            raise ConstructionError("Cannot pair an empty list of strategies")
        sources = [limp_parts(s.host)[0] for s in strategies]
        if any(source != sources[0] for source in sources):
            raise HostMismatchError(
                "Paired strategies need a common source, got %s"
                % ", ".join(s.to_text() for s in sources)
            )
        targets = tuple(limp_parts(s.host)[1] for s in strategies)
        super().__init__(
            Limp(sources[0], Prod(targets)),
            name or "<%s>" % ",".join(s.name for s in strategies),
        )
        self.strategies = list(strategies)

    def _respond(self, position: Position) -> Optional[Move]:
        tag = position[0].path[1]
        player = self.strategies[tag_number(tag)]
        view = tuple(m if m.head == LEFT else _split(m) for m in position)
        response = player.respond(view)
        if response is None or response.head == LEFT:
            return response
        return Move((RIGHT, tag) + response.path[1:], response.base)


def map_product(strategies: Sequence[Strategy]) -> Strategy:
    """
    Pairing of strategies with a common source.
    """
    return Pairing(strategies)


def projection(factors: Sequence[GameExpr], index: int) -> Strategy:
    """
    pr_i: ∏A_j ⊸ A_i.
    """
    if not 0 <= index < len(factors):
        raise ConstructionError("No factor %d among %d" % (index, len(factors)))
    return rule_copycat(
        Limp(Prod(tuple(factors)), factors[index]),
        [((index_tag(index),), ())],
        "pr%d" % index,
    )


class ProductMap(Strategy):
    """
    ∏σ_i: ∏A_i ⊸ ∏B_i, playing σ_i inside factor i on both sides.
    """

    def __init__(self, strategies: Sequence[Strategy]):
        if not strategies:
            raise ConstructionError("Cannot take the product of no strategies")
        sides = [limp_parts(s.host) for s in strategies]
        super().__init__(
            Limp(Prod(tuple(a for a, _ in sides)), Prod(tuple(b for _, b in sides))),
            "(%s)" % "×".join(s.name for s in strategies),
        )
        self.strategies = list(strategies)

    def _respond(self, position: Position) -> Optional[Move]:
        tag = position[0].path[1]
        view = tuple(_split(m) for m in position)
        response = self.strategies[tag_number(tag)].respond(view)
        if response is None:
            return None
        return Move(response.path[:1] + (tag,) + response.path[1:], response.base)


def product_map(strategies: Sequence[Strategy]) -> Strategy:
    """
    The product of strategies, factor by factor.
    """
    return ProductMap(strategies)


def diagonal(game: GameExpr) -> Strategy:
    """
    Δ = ⟨id, id⟩: A ⊸ A×A.
    """
    return Pairing([copycat(game), copycat(game)], "diag")


class Case(Strategy):
    """
    ⟨X⟩ ⊸ C: ask the argument, then play the branch chosen by its answer.

    Each branch is a strategy on I ⊸ C and only ever sees the right-hand moves.
    """

    def __init__(self, argument: Flat, branches: Mapping[str, Strategy], name: str = "case"):
        targets = {limp_parts(b.host)[1] for b in branches.values()}
        if set(branches) != set(argument.values) or len(targets) != 1:
            raise ConstructionError(
                "case over %s needs one branch per value into a common game"
                % argument.to_text()
            )
        super().__init__(Limp(argument, targets.pop()), name)
        self.branches = dict(branches)

    def _respond(self, position: Position) -> Optional[Move]:
        if len(position) == 1:
            return Move(L, QUESTION)
        branch = self.branches[position[2].base]
        return branch.respond(tuple(m for m in position if m.head == RIGHT))


def strictness_witness(target: Flat, value: str) -> Strategy:
    """
    A non-strict map ⟨X⟩ ⊸ ⟨X⟩ that answers without asking its argument.
    """
    return constant(target, target, value, "const<%s>" % value)


def strategies_of_corpus(game: GameExpr) -> List[Strategy]:
    """
    A handful of strategies on game ⊸ game used to exercise the category laws.
    """
    found: List[Strategy] = [copycat(game), Undefined(Limp(game, game))]
    if isinstance(game, Flat):
        found.extend(constant(game, game, value) for value in game.values)
    if isinstance(game, Tensor) and game.left == game.right:
        found.append(sym(game.left, game.right).forward)
    return found
