"""
Check results and their text, JSON and trace file renderings.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from os import makedirs
from os.path import join
from typing import Any, Dict, List, Optional

from .composition import Equivalence
from .moves import Position, dump_trace, format_position

_LOG = logging.getLogger(__name__)

_UNSAFE_RE = re.compile(r"[^A-Za-z0-9_.-]+")


@dataclass
class CheckResult:
    """
    One diagram checked for one game.
    """

    suite: str
    diagram: str
    depth: int
    game: str
    passed: bool
    detail: str = ""
    position: Optional[Position] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    trace_file: Optional[str] = None

    def line(self) -> str:
        """
        ``PASS|FAIL <suite>/<diagram> depth=<d> game=<expr>``
        """
        return "%s %s/%s depth=%d game=%s" % (
            "PASS" if self.passed else "FAIL",
            self.suite,
            self.diagram,
            self.depth,
            self.game,
        )

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            result="PASS" if self.passed else "FAIL",
            suite=self.suite,
            diagram=self.diagram,
            depth=self.depth,
            game=self.game,
            detail=self.detail,
            position=None if self.position is None else format_position(self.position),
            expected=self.expected,
            actual=self.actual,
            trace_file=self.trace_file,
        )


def from_equivalence(
    suite: str,
    diagram: str,
    depth: int,
    game: str,
    outcome: Equivalence,
    want_equal: bool = True,
) -> CheckResult:
    """
    Turn a strategy comparison into a result. With ``want_equal`` false the diagram
    passes when the strategies differ.
    """
    passed = outcome.equal == want_equal
    result = CheckResult(suite, diagram, depth, game, passed, outcome.describe())
    if not passed and not outcome.equal:
        result.position = outcome.position
        result.expected = str(outcome.expected or "no response")
        result.actual = str(outcome.actual or "no response")
    return result


@dataclass
class Report:
    """
    Results in the order the suites ran them.
    """

    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def extend(self, results: List[CheckResult]) -> None:
        self.results.extend(results)

    def render(self, as_json: bool = False) -> str:
        """
        The report as text lines or as a JSON document with the same fields.
        """
        if as_json:
            return json.dumps(
                dict(passed=self.passed, results=[r.as_dict() for r in self.results]),
                indent=2,
                sort_keys=True,
            )
        lines = [result.line() for result in self.results]
        lines.append(
            "%d passed, %d failed" % (len(self.results) - len(self.failures), len(self.failures))
        )
        return "\n".join(lines)

    def write_traces(self, directory: str) -> List[str]:
        """
        Write a trace file for every failure that has a counterexample and return
        the paths written.
        """
        written = []
        for number, result in enumerate(self.failures):
            if result.position is None:
                continue
            makedirs(directory, exist_ok=True)
            name = _UNSAFE_RE.sub("_", "%s-%s-%s" % (result.suite, result.diagram, result.game))
            path = join(directory, "%03d-%s.trace" % (number, name))
            with open(path, "w", encoding="utf8") as trace:
                trace.write(dump_trace(result.position))
            result.trace_file = path
            written.append(path)
            _LOG.debug("Wrote counterexample for %s to %s", result.line(), path)
        return written
