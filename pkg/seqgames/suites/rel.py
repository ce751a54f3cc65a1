"""
The finite relational model: finality of A* by exhaustive search, the word comonoid,
the encapsulated cell and the cofree universal property.
"""

from typing import List, Sequence

from ..constants import UNIT_ATOM
from ..exceptions import PreconditionFailed, SeqGamesError
from ..expr import GameExpr
from ..rel import (
    READ,
    UNIT_SET,
    WRITE,
    FinSet,
    RelComonoid,
    Relation,
    alpha_star,
    ana_rel,
    cell_rel,
    check_finality,
    check_universal_property,
    comonoid_failures,
    comonoid_parts,
    encapsulate,
    identity,
    is_commutative,
    tensor,
    word_comonoid,
)
from ..report import CheckResult
from . import GenericSuite

CONFIG_SCHEMA = dict(
    finality_bound=dict(type="integer", min=1, max=3, default=2),
    word_bound=dict(type="integer", min=1, max=4, default=3),
)

ONE_LETTER = FinSet(("a",))
TWO_LETTERS = FinSet(("a", "b"))
CELL_VALUES = FinSet(("0", "1", "2"))
FINALITY_CASES = (
    (ONE_LETTER, FinSet(("s",))),
    (ONE_LETTER, FinSet(("s", "t"))),
    (TWO_LETTERS, FinSet(("s",))),
)


def unit_comonoid() -> RelComonoid:
    """
    The one point set with its diagonal.
    """
    delta = Relation(
        UNIT_SET, tensor(UNIT_SET, UNIT_SET), frozenset({(UNIT_ATOM, (UNIT_ATOM, UNIT_ATOM))})
    )
    return RelComonoid(UNIT_SET, delta, identity(UNIT_SET))


def broken_comonoid() -> RelComonoid:
    """
    The one point set with an empty comultiplication, which has no counit.
    """
    return RelComonoid(UNIT_SET, Relation(UNIT_SET, tensor(UNIT_SET, UNIT_SET)), identity(UNIT_SET))


def _letters(atoms: FinSet) -> str:
    return "{%s}" % ",".join(str(atom) for atom in atoms)


class Suite(GenericSuite):
    """
    Checks in Rel that need no game corpus.
    """

    NAME = "rel"

    def run(
        self, corpus: Sequence[GameExpr], depth: int, workers: int = 1
    ) -> List[CheckResult]:
        results: List[CheckResult] = []
        for check in (self.finality, self.word_comonoid, self.cell, self.universal):
            try:
                results.extend(check())
            except SeqGamesError as exc:
                results.append(self.result(check.__name__, 0, "rel", False, str(exc)))
        return results

    def finality(self) -> List[CheckResult]:
        """
        Every coalgebra on a small state set has exactly one map into A*.
        """
        bound = self.config["finality_bound"]
        results = []
        for alphabet, states in FINALITY_CASES:
            label = "A=%s S=%s" % (_letters(alphabet), _letters(states))
            failing = check_finality(alphabet, states, bound)
            detail = "" if failing is None else "fails for %d pairs" % len(failing.pairs)
            results.append(self.result("finality", bound, label, failing is None, detail))
        return results

    def word_comonoid(self) -> List[CheckResult]:
        """
        (A*, δ, ε) is a comonoid, commutative only over one letter.
        """
        bound = self.config["word_bound"]
        results = []
        for alphabet in (ONE_LETTER, TWO_LETTERS):
            label = "A=%s" % _letters(alphabet)
            comonoid = word_comonoid(alphabet, bound)
            failures = comonoid_failures(comonoid)
            results.append(
                self.result("comonoid laws", bound, label, not failures, ", ".join(failures))
            )
            commutes = is_commutative(comonoid)
            want = len(alphabet) == 1
            results.append(
                self.result(
                    "commutative" if want else "not commutative",
                    bound,
                    label,
                    commutes == want,
                    "delta;sym %s delta" % ("=" if commutes else "!="),
                )
            )
        pairs = len(alpha_star(TWO_LETTERS, bound).pairs)
        results.append(
            self.result(
                "alpha size",
                bound,
                "A=%s" % _letters(TWO_LETTERS),
                pairs == 2 ** (bound + 1) - 1,
                "%d pairs" % pairs,
            )
        )
        return results

    def cell(self) -> List[CheckResult]:
        """
        The cell relation and a trace of its encapsulation.
        """
        bound = self.config["word_bound"]
        label = "V=%s" % _letters(CELL_VALUES)
        transformer = cell_rel(CELL_VALUES)
        size = len(transformer.pairs)
        results = [self.result("cell size", 0, label, size == 12, "%d pairs" % size)]
        coalgebra = encapsulate(transformer)
        actions = FinSet(
            tuple((READ, v) for v in CELL_VALUES) + tuple((WRITE, v) for v in CELL_VALUES)
        )
        traces = ana_rel(coalgebra, actions, bound).pairs
        good = ("0", ((READ, "0"), (WRITE, "1"), (READ, "1"))[:bound])
        bad = ("0", ((READ, "0"), (WRITE, "1"), (READ, "0"))[:bound])
        results.append(
            self.result(
                "cell traces",
                bound,
                label,
                good in traces and (bound < 3 or bad not in traces),
                "%d traces" % len(traces),
            )
        )
        return results

    def universal(self) -> List[CheckResult]:
        """
        Maps out of a comonoid lift uniquely to A*; a non-comonoid is rejected.
        """
        results = []
        target = FinSet(("0", "1"))
        unit = unit_comonoid()
        for name, pairs in (("point 0", {(UNIT_ATOM, "0")}), ("empty point", set())):
            report = check_universal_property(
                unit, Relation(UNIT_SET, target, frozenset(pairs)), 2
            )
            detail = "%s solution(s)" % report.solutions
            results.append(self.result("lift %s" % name, 2, "B=I A={0,1}", report.passed, detail))

        bound = self.config["word_bound"]
        words_comonoid = word_comonoid(ONE_LETTER, bound)
        _, _, eta = comonoid_parts(ONE_LETTER, bound)
        report = check_universal_property(words_comonoid, eta, bound)
        lifts_to_identity = report.lifting.pairs == identity(words_comonoid.carrier).pairs
        results.append(
            self.result(
                "lift eta",
                bound,
                "B=A* A=%s" % _letters(ONE_LETTER),
                report.passed and lifts_to_identity,
                "; ".join(report.notes),
            )
        )

        try:
            check_universal_property(broken_comonoid(), Relation(UNIT_SET, target), 2)
        except PreconditionFailed as exc:
            results.append(self.result("non-comonoid rejected", 2, "B=I", True, str(exc)))
        else:
            results.append(self.result("non-comonoid rejected", 2, "B=I", False, "accepted"))
        return results
