from typing import Any, List

from behave import given, then, when  # type: ignore

from seqgames.composition import (
    Composite,
    compose,
    curry,
    default_budget,
    equiv_up_to,
    hidden_budget,
    uncurry,
)
from seqgames.connectives import constant, copycat, map_seq, strictness_witness, structural_iso
from seqgames.constants import DEFAULT_BUDGET
from seqgames.exceptions import HostMismatchError, NotStrictError, UnknownStrategyError
from seqgames.explore import Explorer, explorable_strategy, run_explorer
from seqgames.expr import Flat, GameExpr, Limp, parse_dsl
from seqgames.moves import format_position, parse_position
from seqgames.strategies import (
    is_strategy_set,
    is_strict,
    response_set,
    strategy_from_set,
    validate_strategy,
)

# pylint: disable=function-redefined


def _games(text: str) -> List[GameExpr]:
    if text == "none":
        return []
    return [parse_dsl(part) for part in text.split(";")]


def _run(context: Any, lines: List[str]) -> None:
    if "explorer" not in context.data:
        strategy = context.data["strategies"]["explored"]
        context.data["explorer"] = Explorer(strategy, 8)
        context.data["output"] = []
    run_explorer(context.data["explorer"], lines, context.data["output"].append)


@given("the explorable strategy {name} on {game}")
def step(context: Any, name: str, game: str) -> None:
    strategy = explorable_strategy(name, parse_dsl(game))
    context.data["strategies"][name] = strategy
    context.data["strategies"]["explored"] = strategy


@given("the constant map to {value} on {game}")  # type: ignore[no-redef]
def step(context: Any, value: str, game: str) -> None:
    flat = parse_dsl(game)
    assert isinstance(flat, Flat), game
    context.data["strategies"]["const"] = constant(flat, flat, value)


@when("we play {moves}")  # type: ignore[no-redef]
def step(context: Any, moves: str) -> None:
    _run(context, [moves])


@when("we send the explorer")  # type: ignore[no-redef]
def step(context: Any) -> None:
    _run(context, context.text.splitlines())


@then("the play is")  # type: ignore[no-redef]
def step(context: Any) -> None:
    trace = context.data["explorer"].trace()
    assert trace == context.text.strip() + "\n", "Play was:\n%s" % trace


@then("the play is empty")  # type: ignore[no-redef]
def step(context: Any) -> None:
    position = context.data["explorer"].position
    assert position == (), format_position(position)


@then('the explorer output contains "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    output = "".join(context.data["output"])
    wanted = text.replace("\\n", "\n")
    assert wanted in output, "%r not in:\n%s" % (wanted, output)


@then("the explorer has no legal moves")  # type: ignore[no-redef]
def step(context: Any) -> None:
    moves = context.data["explorer"].legal_moves()
    assert moves == (), moves


@then("the explorable strategy {name} cannot be built on {game}")  # type: ignore[no-redef]
def step(context: Any, name: str, game: str) -> None:
    try:
        explorable_strategy(name, parse_dsl(game))
    except UnknownStrategyError:
        return
    raise AssertionError("%s should not be explorable" % name)


@then("{first};{second} is equivalent to {third} up to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str, third: str, depth: int) -> None:
    strategies = context.data["strategies"]
    composite = compose(strategies[first], strategies[second])
    outcome = equiv_up_to(strategies[third], composite, depth)
    assert outcome.equal, outcome.describe()


@then("{first};{second} answers {position} with {move}")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str, position: str, move: str) -> None:
    strategies = context.data["strategies"]
    composite = compose(strategies[first], strategies[second])
    response = composite.respond(parse_position(position))
    assert str(response) == move, "%s answered %s" % (composite.name, response)


@then("{first} and {second} differ at {position}")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str, position: str) -> None:
    strategies = context.data["strategies"]
    outcome = equiv_up_to(strategies[first], strategies[second], 6)
    assert not outcome.equal, "%s and %s should differ" % (first, second)
    assert format_position(outcome.position or ()) == position, outcome.describe()
    context.data["outcome"] = outcome


@then('the difference says "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    described = context.data["outcome"].describe()
    assert text in described, described


@then("comparing {first} with {second} is a host mismatch")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str) -> None:
    strategies = context.data["strategies"]
    try:
        equiv_up_to(strategies[first], strategies[second], 4)
    except HostMismatchError:
        return
    raise AssertionError("Strategies on different games should not compare")


@then("composing {first} with {second} is a host mismatch")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str) -> None:
    strategies = context.data["strategies"]
    try:
        compose(strategies[first], strategies[second])
    except HostMismatchError:
        return
    raise AssertionError("Strategies with different middle games should not compose")


@then("the iso {name} on {games} is invertible up to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, name: str, games: str, depth: int) -> None:
    iso = structural_iso(name, *_games(games))
    assert iso.inverse is not None, "%s has no inverse" % name
    source, target = iso.forward.host.left, iso.forward.host.right  # type: ignore[attr-defined]
    there_and_back = equiv_up_to(copycat(source), compose(iso.forward, iso.inverse), depth)
    assert there_and_back.equal, there_and_back.describe()
    back_and_there = equiv_up_to(copycat(target), compose(iso.inverse, iso.forward), depth)
    assert back_and_there.equal, back_and_there.describe()


@then("the iso {name} on {games} has no inverse")  # type: ignore[no-redef]
def step(context: Any, name: str, games: str) -> None:
    iso = structural_iso(name, *_games(games))
    assert iso.inverse is None, iso.inverse
    assert isinstance(iso.forward.host, Limp)


@when("we curry {name}")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    context.data["strategies"]["curried"] = curry(context.data["strategies"][name])


@then("the curried strategy answers {position} with {move}")  # type: ignore[no-redef]
def step(context: Any, position: str, move: str) -> None:
    curried = context.data["strategies"]["curried"]
    response = curried.respond(parse_position(position))
    assert str(response) == move, "%s answered %s" % (curried.name, response)


@then(  # type: ignore[no-redef]
    "uncurrying the curried strategy gives {name} back up to depth {depth:d}"
)
def step(context: Any, name: str, depth: int) -> None:
    strategies = context.data["strategies"]
    outcome = equiv_up_to(strategies[name], uncurry(strategies["curried"]), depth)
    assert outcome.equal, outcome.describe()


@given("the non-strict witness answering {value} on {game}")  # type: ignore[no-redef]
def step(context: Any, value: str, game: str) -> None:
    flat = parse_dsl(game)
    assert isinstance(flat, Flat), game
    context.data["strategies"]["witness"] = strictness_witness(flat, value)


@then("the strategy {name} is strict")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    assert is_strict(context.data["strategies"][name], 2), name


@then("the strategy {name} is not strict")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    assert not is_strict(context.data["strategies"][name], 2), name


@then("sequencing {first} before {second} is refused as not strict")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str) -> None:
    strategies = context.data["strategies"]
    try:
        map_seq(strategies[first], strategies[second])
    except NotStrictError as exc:
        assert strategies[first].name in str(exc), str(exc)
        return
    raise AssertionError("%s⊘%s should have been refused" % (first, second))


@then("sequencing {first} before {second} is allowed")  # type: ignore[no-redef]
def step(context: Any, first: str, second: str) -> None:
    strategies = context.data["strategies"]
    combined = map_seq(strategies[first], strategies[second])
    assert validate_strategy(combined, 4), combined.name


@then("the strategy {name} is valid up to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, name: str, depth: int) -> None:
    report = validate_strategy(context.data["strategies"][name], depth)
    assert report, report.message
    assert report.checked > 0, report


@then(  # type: ignore[no-redef]
    "rebuilding {name} from its positions up to depth {depth:d} gives it back"
)
def step(context: Any, name: str, depth: int) -> None:
    strategy = context.data["strategies"][name]
    positions = response_set(strategy, depth)
    assert is_strategy_set(strategy.game, positions, depth), sorted(positions)
    rebuilt = strategy_from_set(strategy.host, positions)
    # Replies to O-positions of the full length are not in the set.
    result = equiv_up_to(strategy, rebuilt, depth - 1)
    assert result, result


@then(  # type: ignore[no-redef]
    "the positions of {name} up to depth {depth:d} without their openings are not a strategy"
)
def step(context: Any, name: str, depth: int) -> None:
    strategy = context.data["strategies"][name]
    positions = response_set(strategy, depth)
    pruned = frozenset(p for p in positions if len(p) != 1)
    assert not is_strategy_set(strategy.game, pruned, depth), sorted(pruned)


@then("composites built under a hidden budget of {budget:d} use it")  # type: ignore[no-redef]
def step(context: Any, budget: int) -> None:
    sigma = parse_dsl("sigma")
    with hidden_budget(budget):
        assert default_budget() == budget
        inside = Composite(copycat(sigma), copycat(sigma))
    assert inside.budget == budget, inside.budget
    assert default_budget() == DEFAULT_BUDGET


@then("composites built outside any hidden budget use the default")  # type: ignore[no-redef]
def step(context: Any) -> None:
    sigma = parse_dsl("sigma")
    with hidden_budget(None):
        outside = Composite(copycat(sigma), copycat(sigma))
    assert outside.budget == DEFAULT_BUDGET, outside.budget


@then("a hidden budget of {budget:d} is refused")  # type: ignore[no-redef]
def step(context: Any, budget: int) -> None:
    try:
        with hidden_budget(budget):
            pass
    except ValueError:
        return
    raise AssertionError("A hidden budget of %d should be refused" % budget)
