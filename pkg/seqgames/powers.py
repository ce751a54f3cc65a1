"""
Symmetric tensor powers: the n-fold sequoid A^{⊘n} as the equaliser of the symmetries
of the n-fold tensor A^{⊗n}.

Both powers nest to the right, so component j of either lives at the same address:
``r`` repeated j times followed by ``l``, except the last component which is ``r``
repeated n-1 times. Read left nested, A^{⊘n} would be (…(A⊘A)⊘…)⊘A; the two
readings agree up to the associativity isomorphisms, and right nesting is the one that
matches how !A unfolds as A⊘!A and how ``tensor_all`` groups its factors.
"""

import logging
from itertools import permutations
from typing import Dict, List, NamedTuple, Optional, Sequence

from .comonoid import der, mu
from .composition import compose, compose_all, equiv_up_to
from .connectives import copycat, map_seq, map_tensor, ok, runit, wk
from .constants import LEFT, MAX_POWER, RIGHT
from .exceptions import ResourceError
from .expr import SIGMA, UNIT, GameExpr, Limp, seq_all, tensor_all
from .moves import Move, Position
from .strategies import Copycat, Strategy, rule_copycat
from .types import Path

_LOG = logging.getLogger(__name__)


def _check_power(n: int) -> None:
    if n < 1:
        raise ValueError("Powers start at 1, got %d" % n)
    if n > MAX_POWER:
        raise ResourceError(
            "Symmetric powers above %d need %d! permutation checks" % (MAX_POWER, n)
        )


def tensor_power(game: GameExpr, n: int) -> GameExpr:
    """
    A⊗(A⊗(…⊗A)), n factors.
    """
    _check_power(n)
    return tensor_all([game] * n)


def seq_power(game: GameExpr, n: int) -> GameExpr:
    """
    A⊘(A⊘(…⊘A)), n factors.
    """
    _check_power(n)
    return seq_all([game] * n)


def component_path(index: int, n: int) -> Path:
    """
    The address prefix of component ``index`` of an n-fold power.
    """
    if index == n - 1:
        return (RIGHT,) * index
    return (RIGHT,) * index + (LEFT,)


def component_of(move: Move, n: int) -> int:
    """
    Which component of an n-fold power ``move`` belongs to.
    """
    for index in range(n):
        if move.starts_with(component_path(index, n)):
            return index
    raise ValueError("Move %s is not in any of %d components" % (move, n))


def wk_power(game: GameExpr, n: int) -> Strategy:
    """
    wk^n: A^{⊗n} ⊸ A^{⊘n}, with wk^{n+1} = wk_{A,A^{⊗n}};(id⊘wk^n).
    """
    _check_power(n)
    if n == 1:
        return copycat(game)
    rest = tensor_power(game, n - 1)
    result = compose(wk(game, rest).forward, map_seq(copycat(game), wk_power(game, n - 1)))
    result.name = "wk^%d" % n
    return result


def _opening_order(position: Position, n: int) -> List[int]:
    """
    Tensor components in the order O first played in them.
    """
    order: List[int] = []
    for move in position:
        if move.head != RIGHT:
            continue
        component = component_of(move.tail, n)
        if component not in order:
            order.append(component)
    return order


def eq_power(game: GameExpr, n: int) -> Strategy:
    """
    eq_n: A^{⊘n} ⊸ A^{⊗n}: the k-th tensor component O opens is played as level k
    of the sequoid power.
    """
    _check_power(n)

    def to_left(position: Position, move: Move) -> Optional[Move]:
        component = component_of(move, n)
        level = _opening_order(position, n).index(component)
        return move.replace_prefix(component_path(component, n), component_path(level, n))

    def to_right(position: Position, move: Move) -> Optional[Move]:
        level = component_of(move, n)
        component = _opening_order(position, n)[level]
        return move.replace_prefix(component_path(level, n), component_path(component, n))

    host = Limp(seq_power(game, n), tensor_power(game, n))
    return Copycat(host, to_left, to_right, "eq_%d" % n)


def sym_permutation(game: GameExpr, permutation: Sequence[int]) -> Strategy:
    """
    sym^π on A^{⊗n}: component j on the right copies component π(j) on the left.
    """
    n = len(permutation)
    if sorted(permutation) != list(range(n)):
        raise ValueError("%r is not a permutation" % (permutation,))
    power = tensor_power(game, n)
    rules = [
        (component_path(source, n), component_path(target, n))
        for target, source in enumerate(permutation)
    ]
    return rule_copycat(
        Limp(power, power), rules, "sym%s" % "".join(str(i) for i in permutation)
    )


class PowerCheck(NamedTuple):
    """
    One diagram checked for a symmetric power.
    """

    name: str
    passed: bool
    detail: str


class SymmetricPower(NamedTuple):
    """
    wk^n and eq_n with the report of their equaliser checks.
    """

    wk: Strategy
    eq: Strategy
    checks: List[PowerCheck]

    @property
    def passed(self) -> bool:
        """
        Whether every check passed.
        """
        return all(check.passed for check in self.checks)


def ok_power(n: int) -> Strategy:
    """
    I ⊸ Σ^{⊗n}, answering every component at once.
    """
    _check_power(n)
    if n == 1:
        return ok()
    return compose(runit(UNIT).inverse, map_tensor(ok(), ok_power(n - 1)))


def contraction_power(game: GameExpr, n: int) -> Strategy:
    """
    !A ⊸ A^{⊗n}, splitting with μ and derelicting each part.
    """
    _check_power(n)
    if n == 1:
        return der(game)
    return compose(mu(game), map_tensor(der(game), contraction_power(game, n - 1)))


def symmetric_families(game: GameExpr, n: int) -> Dict[str, Strategy]:
    """
    Maps into A^{⊗n} that every symmetry fixes, used to test the equaliser.
    """
    families = {"contraction": contraction_power(game, n)}
    if game == SIGMA:
        families["points"] = ok_power(n)
    return families


def sym_power(game: GameExpr, n: int, depth: int) -> SymmetricPower:
    """
    Build wk^n and eq_n and check, up to ``depth``, that eq_n;sym^π;wk^n is the identity
    for every π, that eq_n equalises every symmetry, that wk^n;eq_n is not the
    identity once n > 1, and that symmetric maps factor through eq_n even after
    tensoring with A.
    """
    wk_n, eq_n = wk_power(game, n), eq_power(game, n)
    identity = copycat(seq_power(game, n))
    checks: List[PowerCheck] = []

    def record(name: str, expected: Strategy, actual: Strategy, want_equal: bool = True) -> None:
        outcome = equiv_up_to(expected, actual, depth)
        passed = bool(outcome) == want_equal
        checks.append(PowerCheck(name, passed, outcome.describe()))
        if not passed:
            _LOG.info("Symmetric power %d of %s: %s failed", n, game.to_text(), name)

    for permutation in permutations(range(n)):
        sym_pi = sym_permutation(game, permutation)
        label = "".join(str(i) for i in permutation)
        record("eq;sym%s;wk" % label, identity, compose_all(eq_n, sym_pi, wk_n))
        record("eq;sym%s" % label, eq_n, compose(eq_n, sym_pi))
    if n > 1:
        record("wk;eq", copycat(tensor_power(game, n)), compose(wk_n, eq_n), want_equal=False)

    for name, family in symmetric_families(game, n).items():
        record("factor %s" % name, family, compose_all(family, wk_n, eq_n))
        tensored = map_tensor(family, copycat(game))
        through = compose_all(
            tensored,
            map_tensor(wk_n, copycat(game)),
            map_tensor(eq_n, copycat(game)),
        )
        record("factor %s⊗A" % name, tensored, through)
    return SymmetricPower(wk_n, eq_n, checks)
