"""
The commands behind ``python -m seqgames``. Each takes the parsed arguments and the
validated config, writes to ``out`` and returns the exit code.
"""

import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from .constants import CORPUS_ENV_VAR, DEFAULT_CORPUS
from .explore import EXPLORABLE, Explorer, explorable_strategy, run_explorer
from .expr import SIGMA, GameExpr, parse_corpus, parse_dsl
from .moves import dump_trace
from .rel import (
    READ,
    WRITE,
    FinSet,
    alpha_star,
    ana_rel,
    cell_rel,
    check_finality,
    comonoid_failures,
    dump_relation,
    encapsulate,
    is_commutative,
    word_comonoid,
)
from .report import Report
from .stateful import (
    VarSpec,
    cell,
    parse_script,
    run_script,
    stack,
    stack_interface,
    var_interface,
)
from .suites import run_law_suite, suite_names
from .transfinite import length_sup, ord_add, ord_cmp, parse_ordinal, parse_seq, rank_leq
from .transfinite.sequences import check_rank_props
from .transfinite.win import exponential_witness
from .types import ConfigType

_LOG = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, ConfigType, TextIO], int]


def read_game_argument(text: str) -> List[GameExpr]:
    """
    ``EXPR`` is one game; ``@file`` is a corpus file with one game per line.
    """
    if text.startswith("@"):
        with open(text[1:], encoding="utf8") as corpus_file:
            return parse_corpus(corpus_file.read())
    return [parse_dsl(text)]


def resolve_corpus(game: Optional[str], configured: Optional[Sequence[str]]) -> List[GameExpr]:
    """
    The games to check: the --game argument, else the corpus file named by the
    environment, else the config's corpus, else the built-in corpus.
    """
    if game:
        return read_game_argument(game)
    corpus_path = os.environ.get(CORPUS_ENV_VAR)
    if corpus_path:
        _LOG.info("Reading the corpus from %s", corpus_path)
        return read_game_argument("@" + corpus_path)
    return [parse_dsl(text) for text in (configured or DEFAULT_CORPUS)]


def _letters(text: str) -> FinSet:
    return FinSet.of(part.strip() for part in text.split(",") if part.strip())


def _pick(value: Optional[int], default: int) -> int:
    return default if value is None else value


def check(args: argparse.Namespace, config: ConfigType, out: TextIO) -> int:
    """
    Run law suites and print the report. Exit 0 iff every check passed.
    """
    settings = config["check"]
    depth = _pick(args.depth, settings["depth"])
    seed = _pick(args.seed, settings["seed"])
    suite_configs: Dict[str, ConfigType] = {
        name: dict(section) for name, section in config["suites"].items()
    }
    budget = _pick(args.budget, settings["budget"])
    for name in suite_names(args.suite):
        section = suite_configs.setdefault(name, {})
        if name == "rank":
            section.setdefault("seed", seed)
        section.setdefault("node_budget", settings["node_budget"])
        section.setdefault("budget", budget)

    corpus = resolve_corpus(args.game, settings["corpus"])
    report = Report(
        run_law_suite(
            args.suite,
            corpus,
            depth,
            suite_configs,
            _pick(args.workers, settings["workers"]),
        )
    )
    trace_dir = args.traces or settings["trace_dir"]
    if trace_dir:
        report.write_traces(trace_dir)
    out.write(report.render(args.json) + "\n")
    return 0 if report.passed else 1


def explore(args: argparse.Namespace, config: ConfigType, out: TextIO) -> int:
    """
    Play O against a named strategy from standard input.
    """
    game = read_game_argument(args.game)[0] if args.game else SIGMA
    strategy = explorable_strategy(args.strategy, game)
    out.write("Exploring %s on %s\n" % (strategy.name, strategy.host.to_text()))
    explorer = Explorer(strategy, _pick(args.depth, config["check"]["depth"]))
    run_explorer(explorer, sys.stdin, out.write)
    return 0


def rel(args: argparse.Namespace, config: ConfigType, out: TextIO) -> int:
    """
    Demonstrations in the relational model.
    """
    bound = args.bound
    if args.demo == "alpha":
        out.write(dump_relation(alpha_star(_letters(args.letters), bound)))
        return 0
    if args.demo == "finality":
        alphabet, states = _letters(args.letters), _letters(args.states)
        failing = check_finality(alphabet, states, bound)
        if failing is None:
            out.write("final: every coalgebra has exactly one map into A*\n")
            return 0
        out.write("not final for the coalgebra\n%s" % dump_relation(failing))
        return 1
    if args.demo == "comonoid":
        comonoid = word_comonoid(_letters(args.letters), bound)
        failures = comonoid_failures(comonoid)
        out.write("laws: %s\n" % (", ".join(failures) + " fail" if failures else "hold"))
        out.write("commutative: %s\n" % ("yes" if is_commutative(comonoid) else "no"))
        return 1 if failures else 0
    values = _letters(args.letters)
    transformer = cell_rel(values)
    out.write(dump_relation(transformer))
    actions = FinSet(tuple((READ, v) for v in values) + tuple((WRITE, v) for v in values))
    out.write("traces:\n")
    out.write(dump_relation(ana_rel(encapsulate(transformer), actions, bound)))
    return 0


def ordinal(args: argparse.Namespace, config: ConfigType, out: TextIO) -> int:
    """
    Rank, length and arithmetic queries on ordinals below ω^ω.
    """
    if args.query == "rank":
        out.write("%s\n" % str(rank_leq(parse_seq(args.seq), parse_ordinal(args.ord))).lower())
    elif args.query == "length":
        out.write("%s\n" % length_sup(parse_dsl(args.expr)))
    elif args.query == "witness":
        tensored, product = exponential_witness(SIGMA, SIGMA)
        out.write("!sigma⊗!sigma: %s\n!(sigma×sigma): %s\n" % (tensored, product))
    elif args.query == "add":
        out.write("%s\n" % ord_add(parse_ordinal(args.left), parse_ordinal(args.right)))
    elif args.query == "cmp":
        out.write("%d\n" % ord_cmp(parse_ordinal(args.left), parse_ordinal(args.right)))
    else:
        report = check_rank_props(args.trials, _pick(args.seed, config["check"]["seed"]))
        out.write("%d trials, %d checks\n" % (report.trials, report.checks))
        for failure in report.failures:
            out.write("FAIL %s\n" % failure)
        return 0 if report.passed else 1
    return 0


def demo(args: argparse.Namespace, config: ConfigType, out: TextIO) -> int:
    """
    Invoke the methods of a cell or stack in fresh copies and print each answer.
    """
    spec = VarSpec.parse(args.values, args.default)
    if args.object == "cell":
        strategy, interface = cell(spec), var_interface(spec)
    else:
        bound = _pick(args.bound, config["demo"]["stack_bound"])
        strategy, interface = stack(spec, bound), stack_interface(spec)
    position, answers = run_script(strategy, interface, parse_script(args.script))
    for method, answer in answers:
        out.write("%s -> %s\n" % (method, "no answer" if answer is None else answer))
    if args.trace:
        out.write(dump_trace(position))
    return 0 if all(answer is not None for _, answer in answers) else 1


COMMANDS: Dict[str, Command] = dict(
    check=check, explore=explore, rel=rel, ordinal=ordinal, demo=demo
)


def build_parser() -> argparse.ArgumentParser:
    """
    The argument parser for every command.
    """
    parser = argparse.ArgumentParser(
        prog="seqgames", description="Executable sequoidal game semantics."
    )
    parser.add_argument("--config", help="YAML config file.")
    parser.add_argument(
        "--render",
        help="""
    A config file for confp for preprocessing the config file.
    Doesn't need to contain a template section.
    """,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=_positive, help="Visible moves to explore.")
    common.add_argument("--seed", type=int, help="Seed for randomised checks.")
    common.add_argument("--budget", type=_positive, help="Hidden moves per visible move.")

    check_parser = commands.add_parser("check", parents=[common], help="Run law suites.")
    check_parser.add_argument("--suite", default="all", help="Suite name, or all.")
    check_parser.add_argument("--game", help="A game expression, or @file for a corpus.")
    check_parser.add_argument("--json", action="store_true", help="Emit a JSON report.")
    check_parser.add_argument("--workers", type=_positive, help="Threads per suite.")
    check_parser.add_argument("--traces", help="Directory for counterexample traces.")

    explore_parser = commands.add_parser(
        "explore", parents=[common], help="Play O against a strategy."
    )
    explore_parser.add_argument("strategy", choices=sorted(EXPLORABLE))
    explore_parser.add_argument("--game", help="The game to instantiate it at (sigma).")

    rel_parser = commands.add_parser("rel", help="Relational model demonstrations.")
    rel_parser.add_argument("demo", choices=["alpha", "finality", "comonoid", "cell"])
    rel_parser.add_argument("--letters", default="a", help="Comma separated atoms.")
    rel_parser.add_argument("--states", default="s", help="Comma separated states.")
    rel_parser.add_argument("--bound", type=_positive, default=2, help="Word length bound.")

    ordinal_parser = commands.add_parser("ordinal", parents=[common], help="Ordinal queries.")
    queries = ordinal_parser.add_subparsers(dest="query", required=True)
    rank_parser = queries.add_parser("rank", help="Decide seq <= ordinal.")
    rank_parser.add_argument("seq")
    rank_parser.add_argument("ord")
    queries.add_parser("length", help="Supremum of play lengths.").add_argument("expr")
    queries.add_parser("witness", help="Play lengths of !A⊗!B and !(A×B).")
    for name in ("add", "cmp"):
        arithmetic = queries.add_parser(name, help="Ordinal %s." % name)
        arithmetic.add_argument("left")
        arithmetic.add_argument("right")
    props = queries.add_parser("props", help="Random rank property checks.")
    props.add_argument("--trials", type=_positive, default=1000)

    demo_parser = commands.add_parser("demo", help="Stateful object demonstrations.")
    demo_parser.add_argument("object", choices=["cell", "stack"])
    demo_parser.add_argument("--values", default="0,1")
    demo_parser.add_argument("--default")
    demo_parser.add_argument("--bound", type=int, help="Stack capacity.")
    demo_parser.add_argument("--script", required=True, help='e.g. "write 1; read"')
    demo_parser.add_argument("--trace", action="store_true", help="Print the play too.")
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1, got %d" % value)
    return value
