"""
The rank calculus on transfinite copy-index sequences and the winning conditions of
infinite plays.
"""

from typing import List, Sequence, Tuple

from ..exceptions import SeqGamesError
from ..expr import SIGMA, Bang, GameExpr, Limp, Tensor
from ..report import CheckResult
from ..transfinite.ordinals import parse_ordinal
from ..transfinite.sequences import (
    check_against_brute_force,
    check_rank_props,
    classify_play,
    parse_seq,
    rank_leq,
)
from ..transfinite.win import (
    BangView,
    Label,
    LeafView,
    PairView,
    View,
    ZetaFormula,
    exponential_witness,
    zeta_eval,
    zeta_formula,
)
from . import GenericSuite

CONFIG_SCHEMA = dict(
    trials=dict(type="integer", min=1, default=1000),
    seed=dict(type="integer", nullable=True, default=None),
    brute_length=dict(type="integer", min=0, default=6),
    brute_value=dict(type="integer", min=0, default=6),
)

# (sequence, ordinal, whether the sequence is below it)
RANK_EXAMPLES = (
    ("[]", "0", True),
    ("[0]", "0", False),
    ("[0,1,2]", "3", True),
    ("[0,1,2]", "2", False),
    ("asc", "w", True),
    ("asc", "5", False),
    ("asc;[0,1,2]", "w+2", False),
    ("asc;[0,1,2]", "w+3", True),
    ("asc;[0,1,2]", "w*2", True),
    ("[3];asc;[5,0]", "w*2", True),
    ("asc;asc", "w", False),
    ("asc;asc", "w+5", False),
    ("asc;asc", "w*2", True),
)

ASKED = LeafView(("q",))


class Suite(GenericSuite):
    """
    Rank properties on generated sequences, fixed examples, agreement with the literal
    definition and the ζ labelling.
    """

    NAME = "rank"

    def run(
        self, corpus: Sequence[GameExpr], depth: int, workers: int = 1
    ) -> List[CheckResult]:
        results: List[CheckResult] = []
        for check in (self.properties, self.examples, self.lengths, self.winning):
            try:
                results.extend(check())
            except SeqGamesError as exc:
                results.append(self.result(check.__name__, 0, "rank", False, str(exc)))
        return results

    def properties(self) -> List[CheckResult]:
        """
        Closure under subsequences and Δ, monotonicity, and agreement with brute force.
        """
        trials, seed = self.config["trials"], self.config["seed"]
        report = check_rank_props(trials, seed)
        label = "%d trials seed %s" % (trials, seed)
        detail = "; ".join(report.failures[:3]) or "%d checks" % report.checks
        results = [self.result("rank properties", 0, label, report.passed, detail)]

        length, value = self.config["brute_length"], self.config["brute_value"]
        disagreements = check_against_brute_force(length, value)
        results.append(
            self.result(
                "literal definition",
                0,
                "length<=%d values<=%d" % (length, value),
                not disagreements,
                ", ".join(str(d) for d in disagreements[:3]),
            )
        )
        return results

    def examples(self) -> List[CheckResult]:
        results = []
        for text, ordinal, expected in RANK_EXAMPLES:
            seq, gamma = parse_seq(text), parse_ordinal(ordinal)
            decided = rank_leq(seq, gamma)
            results.append(
                self.result(
                    "rank example",
                    0,
                    "%s <= %s" % (seq, gamma),
                    decided == expected,
                    "decided %s" % decided,
                )
            )
        play = parse_seq("asc;[0]")
        results.append(
            self.result(
                "classify play",
                0,
                "%s in w+1-fold sequoid" % play,
                classify_play(play, parse_ordinal("w+1")),
            )
        )
        return results

    def lengths(self) -> List[CheckResult]:
        """
        !Σ⊗!Σ and !(Σ×Σ) have different play lengths.
        """
        tensored, product = exponential_witness(SIGMA, SIGMA)
        return [
            self.result(
                "exponential lengths",
                0,
                "!sigma⊗!sigma vs !(sigma×sigma)",
                tensored != product,
                "%s vs %s" % (tensored, product),
            )
        ]

    def winning(self) -> List[CheckResult]:
        """
        ζ on a few positions where each side is winning.
        """
        bang, lollipop = zeta_formula(Bang(SIGMA)), zeta_formula(Bang(SIGMA), lollipop=True)
        cases: Tuple[Tuple[str, ZetaFormula, View, Label], ...] = (
            ("lollipop, infinitely many copies", lollipop, BangView({}, True, ASKED), "P"),
            ("bang, infinitely many copies", bang, BangView({}, True, ASKED), "O"),
            ("bang, finished copies", bang, BangView({0: LeafView(("q", "*"))}), "P"),
            ("tensor, open question", zeta_formula(Tensor(SIGMA, SIGMA)), PairView(ASKED), "O"),
            (
                "implication, open argument",
                zeta_formula(Limp(SIGMA, SIGMA)),
                PairView(ASKED, ASKED),
                "P",
            ),
        )
        results = []
        for name, formula, view, expected in cases:
            label = zeta_eval(formula, view)
            results.append(
                self.result(
                    "zeta %s" % name, 0, "zeta", label == expected, "labelled %s" % label
                )
            )
        return results
