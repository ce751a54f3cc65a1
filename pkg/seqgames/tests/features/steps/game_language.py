from typing import Any, List

from behave import given, then, when  # type: ignore

from seqgames.exceptions import GameSyntaxError, IllegalMoveError
from seqgames.expr import parse_corpus, parse_dsl
from seqgames.games import (
    GameIntension,
    build_game,
    flat_game,
    move_polarity,
    positions_up_to,
    unit_game,
)
from seqgames.moves import (
    Move,
    Position,
    dump_trace,
    format_position,
    load_trace,
    parse_position,
)

# pylint: disable=function-redefined


@when("we parse the game {text}")
def step(context: Any, text: str) -> None:
    try:
        context.data["game"] = parse_dsl(text)
    except GameSyntaxError as exc:
        context.data["syntax_error"] = exc


@when("we parse the corpus")  # type: ignore[no-redef]
def step(context: Any) -> None:
    try:
        context.data["corpus"] = parse_corpus(context.text)
    except GameSyntaxError as exc:
        context.data["syntax_error"] = exc


@then("the game renders as {text}")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert "syntax_error" not in context.data, context.data.get("syntax_error")
    rendered = context.data["game"].to_text()
    assert rendered == text, "%s rendered as %s" % (text, rendered)


@then("parsing fails at column {column:d}")  # type: ignore[no-redef]
def step(context: Any, column: int) -> None:
    error = context.data.get("syntax_error")
    assert error is not None, "Parsing should have failed"
    assert error.column == column, str(error)
    assert ("column %d" % column) in str(error), str(error)


@then("parsing fails on line {line:d}")  # type: ignore[no-redef]
def step(context: Any, line: int) -> None:
    error = context.data.get("syntax_error")
    assert error is not None, "Parsing should have failed"
    assert error.line == line, str(error)


@then("the corpus holds {count:d} games")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    assert len(context.data["corpus"]) == count, context.data["corpus"]


@then("corpus game {number:d} renders as {text}")  # type: ignore[no-redef]
def step(context: Any, number: int, text: str) -> None:
    assert context.data["corpus"][number - 1].to_text() == text


@given("the game {text}")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    context.data["game"] = parse_dsl(text)


@when("we list the legal moves after {position}")  # type: ignore[no-redef]
def step(context: Any, position: str) -> None:
    game = build_game(context.data["game"])
    context.data["moves"] = game.next_moves(parse_position(position))


@then("the legal moves are {moves}")  # type: ignore[no-redef]
def step(context: Any, moves: str) -> None:
    listed = " ".join(str(move) for move in context.data["moves"]) or "<none>"
    assert listed == moves, "Expected %s, got %s" % (moves, listed)


@then("the move {text} is illegal in the game")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    try:
        move_polarity(context.data["game"], Move.parse(text))
    except IllegalMoveError:
        return
    raise AssertionError("%s should not be a move of the game" % text)


@when("we dump the position {position}")  # type: ignore[no-redef]
def step(context: Any, position: str) -> None:
    context.data["position"] = parse_position(position)
    context.data["trace"] = dump_trace(context.data["position"])


@then("the trace is")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert context.data["trace"] == context.text.strip() + "\n", context.data["trace"]


@then("the trace loads back to the same position")  # type: ignore[no-redef]
def step(context: Any) -> None:
    loaded = load_trace(context.data["trace"])
    assert loaded == context.data["position"], format_position(loaded)


@when("we load the trace")  # type: ignore[no-redef]
def step(context: Any) -> None:
    try:
        context.data["position"] = load_trace(context.text)
    except GameSyntaxError as exc:
        context.data["syntax_error"] = exc


@then("parsing the move {text} fails")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    try:
        Move.parse(text)
    except GameSyntaxError:
        return
    raise AssertionError("%s should not parse as a move" % text)


def _enumerate(context: Any, game: GameIntension, depth: int) -> None:
    context.data["intension"] = game
    context.data["depth"] = depth
    context.data["positions"] = sorted(
        positions_up_to(game, depth), key=lambda p: (len(p), format_position(p))
    )


@when("we enumerate the positions up to length {depth:d}")  # type: ignore[no-redef]
def step(context: Any, depth: int) -> None:
    _enumerate(context, build_game(context.data["game"]), depth)


@when(  # type: ignore[no-redef]
    "we enumerate the positions of the flat game on {values} up to length {depth:d}"
)
def step(context: Any, values: str, depth: int) -> None:
    _enumerate(context, flat_game(values.split(",")), depth)


@when(  # type: ignore[no-redef]
    "we enumerate the positions of the unit game up to length {depth:d}"
)
def step(context: Any, depth: int) -> None:
    _enumerate(context, unit_game(), depth)


@then("the enumerated positions are {positions}")  # type: ignore[no-redef]
def step(context: Any, positions: str) -> None:
    listed = ", ".join(format_position(p) for p in context.data["positions"])
    assert listed == positions, "Expected %s, got %s" % (positions, listed)


@then("the enumeration holds {count:d} positions")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    assert len(context.data["positions"]) == count, context.data["positions"]


@then("every enumerated position is legal and its moves extend it")  # type: ignore[no-redef]
def step(context: Any) -> None:
    game: GameIntension = context.data["intension"]
    found = set(context.data["positions"])
    for position in found:
        assert game.is_position(position), format_position(position)
        if len(position) < context.data["depth"]:
            extended: List[Position] = [position + (move,) for move in game.next_moves(position)]
            missing = [p for p in extended if p not in found]
            assert not missing, [format_position(p) for p in missing]
