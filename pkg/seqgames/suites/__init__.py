"""
Law suites: named collections of diagrams checked against a corpus of games.

Each suite lives in a module of this package named after it (``sequoid-coherence`` is
``sequoid_coherence``) and exposes a ``Suite`` class derived from :class:`GenericSuite`.
"""

import abc
import logging
from concurrent.futures import ThreadPoolExecutor
from importlib import import_module
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Type,
)

from ..composition import equiv_up_to, hidden_budget
from ..config import validate_and_normalise_config
from ..constants import DEFAULT_NODE_BUDGET, SUITE_CLASS_NAME, SUITE_IMPORT_PATH, SUITE_ORDER
from ..exceptions import SeqGamesError, UnknownSuiteError
from ..expr import Flat, GameExpr
from ..perturb import perturbations
from ..report import CheckResult, from_equivalence
from ..strategies import Strategy
from ..types import ConfigType

_LOG = logging.getLogger(__name__)

# A named square: its name and the two strategies that should agree.
Square = Tuple[str, Strategy, Strategy]


class Diagram(NamedTuple):
    """
    Two ways round a diagram, expected to agree (or, with ``want_equal`` false, to differ).
    """

    name: str
    expected: Strategy
    actual: Strategy
    want_equal: bool = True


class GenericSuite(abc.ABC):
    """
    Abstracts a law suite to be implemented by the modules in this directory.
    """

    NAME = "generic"
    # Diagrams on large hosts are explored to at most this depth.
    MAX_DEPTH: Optional[int] = None

    def __init__(self, config: ConfigType):
        self.config = config
        self.setup_suite()

    def setup_suite(self) -> None:
        """
        Called once when the suite is loaded. The suite's config section is in
        ``self.config``.
        """

    def depth_for(self, depth: int) -> int:
        """
        The depth this suite actually explores when asked for ``depth``.
        """
        if self.config.get("depth") is not None:
            return int(self.config["depth"])
        if self.MAX_DEPTH is not None:
            return min(depth, self.MAX_DEPTH)
        return depth

    def applies_to(self, game: GameExpr) -> bool:
        """
        Whether the suite has anything to say about ``game``.
        """
        return True

    def diagrams(self, game: GameExpr) -> Iterable[Diagram]:
        """
        The diagrams to check for ``game``.
        """
        return ()

    def label(self, game: GameExpr) -> str:
        return game.to_text()

    def check_game(self, game: GameExpr, depth: int) -> List[CheckResult]:
        """
        Check every diagram for one game.
        """
        label = self.label(game)
        try:
            diagrams = list(self.diagrams(game))
        except SeqGamesError as exc:
            _LOG.warning("%s could not build its diagrams for %s: %s", self.NAME, label, exc)
            return [self.result("construction", depth, label, False, str(exc))]
        return self.check_diagrams(label, diagrams, depth)

    def result(
        self, diagram: str, depth: int, label: str, passed: bool, detail: str = ""
    ) -> CheckResult:
        """
        A result for a check that is not a comparison of two strategies.
        """
        if not passed:
            _LOG.info("%s/%s failed on %s: %s", self.NAME, diagram, label, detail)
        return CheckResult(self.NAME, diagram, depth, label, passed, detail)

    def check_diagrams(
        self, label: str, diagrams: Iterable[Diagram], depth: int
    ) -> List[CheckResult]:
        """
        Compare both ways round each diagram up to ``depth``. A diagram whose
        strategies cannot be built or compared fails with the reason.
        """
        results = []
        node_budget = self.config.get("node_budget") or DEFAULT_NODE_BUDGET
        for diagram in diagrams:
            try:
                outcome = equiv_up_to(diagram.expected, diagram.actual, depth, node_budget)
            except SeqGamesError as exc:
                _LOG.warning("%s/%s raised %s", self.NAME, diagram.name, exc)
                results.append(self.result(diagram.name, depth, label, False, str(exc)))
                continue
            results.append(
                from_equivalence(
                    self.NAME,
                    diagram.name,
                    depth,
                    label,
                    outcome,
                    diagram.want_equal,
                )
            )
        return results

    def check_budgeted(self, game: GameExpr, depth: int) -> List[CheckResult]:
        """
        ``check_game`` with composites limited to the configured hidden move budget.
        """
        with hidden_budget(self.config.get("budget")):
            return self.check_game(game, depth)

    def check_perturbed(
        self, game: Flat, squares: Callable[[Strategy], Iterable[Square]], depth: int
    ) -> List[CheckResult]:
        """
        Each perturbation of the identity on !``game`` must break at least one of the
        squares ``squares`` draws for it.
        """
        node_budget = self.config.get("node_budget") or DEFAULT_NODE_BUDGET
        label = self.label(game)
        results = []
        for name, candidate in perturbations(game):
            diagram = "perturbed %s" % name
            try:
                broken = [
                    square
                    for square, expected, actual in squares(candidate)
                    if not equiv_up_to(expected, actual, depth, node_budget)
                ]
            except SeqGamesError as exc:
                results.append(self.result(diagram, depth, label, False, str(exc)))
                continue
            detail = "breaks %s" % ", ".join(broken) if broken else "closes every square"
            results.append(self.result(diagram, depth, label, bool(broken), detail))
        return results

    def games(self, corpus: Sequence[GameExpr]) -> List[GameExpr]:
        """
        The games of ``corpus`` this suite runs on.
        """
        return [game for game in corpus if self.applies_to(game)]

    def run(
        self, corpus: Sequence[GameExpr], depth: int, workers: int = 1
    ) -> List[CheckResult]:
        """
        Check the suite on every applicable corpus game. Games are checked concurrently
        when ``workers`` > 1; results come back in corpus order either way.
        """
        depth = self.depth_for(depth)
        games = self.games(corpus)
        if workers <= 1 or len(games) <= 1:
            per_game = [self.check_budgeted(game, depth) for game in games]
        else:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                per_game = list(executor.map(lambda g: self.check_budgeted(g, depth), games))
        return [result for results in per_game for result in results]


def suite_names(name: str) -> List[str]:
    """
    Expand ``all`` to every suite in run order.
    """
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITE_ORDER:
        raise UnknownSuiteError(
            "No suite called %r; expected one of: all, %s" % (name, ", ".join(SUITE_ORDER))
        )
    return [name]


def load_suite(name: str, config: Optional[ConfigType] = None) -> GenericSuite:
    """
    Import a suite module, validate its config section against the module's
    ``CONFIG_SCHEMA`` and instantiate its ``Suite`` class.
    """
    suite_names(name)
    module = import_module("%s.%s" % (SUITE_IMPORT_PATH, name.replace("-", "_")))
    schema: Dict[str, Any] = dict(
        depth=dict(type="integer", min=1, nullable=True, default=None),
        node_budget=dict(type="integer", min=1, nullable=True, default=None),
        budget=dict(type="integer", min=1, nullable=True, default=None),
    )
    schema.update(getattr(module, "CONFIG_SCHEMA", {}))
    suite_config = validate_and_normalise_config(config or {}, schema)
    suite_class: Type[GenericSuite] = getattr(module, SUITE_CLASS_NAME)
    return suite_class(suite_config)


def run_law_suite(
    name: str,
    corpus: Sequence[GameExpr],
    depth: int,
    suite_configs: Optional[Dict[str, ConfigType]] = None,
    workers: int = 1,
) -> List[CheckResult]:
    """
    Run the named suite, or every suite for ``all``, and return the results in suite
    order.
    """
    suite_configs = suite_configs or {}
    results: List[CheckResult] = []
    for suite_name in suite_names(name):
        suite = load_suite(suite_name, suite_configs.get(suite_name))
        _LOG.info("Running suite %s", suite_name)
        results.extend(suite.run(corpus, depth, workers))
    return results
