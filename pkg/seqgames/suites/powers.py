"""
Symmetric powers of Σ as equalisers of the permutation actions on A^{⊘n}.
"""

from typing import List

from ..constants import MAX_POWER
from ..exceptions import SeqGamesError
from ..expr import SIGMA, GameExpr
from ..powers import sym_power
from ..report import CheckResult
from . import GenericSuite

CONFIG_SCHEMA = dict(
    powers=dict(
        type="list",
        default=[2, 3],
        schema=dict(type="integer", min=1, max=MAX_POWER),
    ),
)


class Suite(GenericSuite):
    """
    eq_n;sym;wk^n = id, eq_n equalises every symmetry and symmetric maps factor
    through it.
    """

    NAME = "powers"
    MAX_DEPTH = 4

    def applies_to(self, game: GameExpr) -> bool:
        return game == SIGMA

    def check_game(self, game: GameExpr, depth: int) -> List[CheckResult]:
        results = []
        for n in self.config["powers"]:
            label = "%s^%d" % (game.to_text(), n)
            try:
                power = sym_power(game, n, depth)
            except SeqGamesError as exc:
                results.append(self.result("construction", depth, label, False, str(exc)))
                continue
            results.extend(
                self.result(check.name, depth, label, check.passed, check.detail)
                for check in power.checks
            )
        return results
