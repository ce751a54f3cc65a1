from typing import Any

from behave import given, then, when  # type: ignore

from seqgames.composition import equiv_up_to
from seqgames.exceptions import ConstructionError, IllegalMoveError
from seqgames.moves import format_position
from seqgames.stateful import (
    VarSpec,
    cell,
    check_write_read,
    combinatorial_cell,
    combinatorial_stack,
    parse_script,
    run_script,
    stack,
    stack_interface,
    var_interface,
)

# pylint: disable=function-redefined


@given("a cell over {values} defaulting to {default}")
def step(context: Any, values: str, default: str) -> None:
    spec = VarSpec.parse(values, default)
    context.data["object"] = cell(spec)
    context.data["combinatorial"] = combinatorial_cell(spec)
    context.data["interface"] = var_interface(spec)
    context.data["spec"] = spec


@given("a stack over {values} holding at most {bound:d} values")  # type: ignore[no-redef]
def step(context: Any, values: str, bound: int) -> None:
    spec = VarSpec.parse(values)
    context.data["object"] = stack(spec, bound)
    context.data["combinatorial"] = combinatorial_stack(spec, bound)
    context.data["interface"] = stack_interface(spec)


@when("we run the script {script}")  # type: ignore[no-redef]
def step(context: Any, script: str) -> None:
    context.data["position"], context.data["answers"] = run_script(
        context.data["object"], context.data["interface"], parse_script(script)
    )


@then("the answers are {answers}")  # type: ignore[no-redef]
def step(context: Any, answers: str) -> None:
    got = ", ".join(str(answer) for _, answer in context.data["answers"])
    assert got == answers, "Expected %s, got %s" % (answers, got)


@then("the play of the script is")  # type: ignore[no-redef]
def step(context: Any) -> None:
    played = format_position(context.data["position"])
    assert played == context.text.strip(), played


@then(  # type: ignore[no-redef]
    "the object agrees with its combinatorial version up to depth {depth:d}"
)
def step(context: Any, depth: int) -> None:
    outcome = equiv_up_to(context.data["combinatorial"], context.data["object"], depth)
    assert outcome.equal, outcome.describe()


@then("every read returns the last write up to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, depth: int) -> None:
    broken = check_write_read(context.data["spec"], context.data["object"], depth)
    assert broken is None, format_position(broken or ())


@then("running the script {script} fails")  # type: ignore[no-redef]
def step(context: Any, script: str) -> None:
    try:
        run_script(context.data["object"], context.data["interface"], parse_script(script))
    except IllegalMoveError:
        return
    raise AssertionError("%s should not be a method of the object" % script)


@then("a cell over {values} defaulting to {default} cannot be built")  # type: ignore[no-redef]
def step(context: Any, values: str, default: str) -> None:
    try:
        VarSpec.parse(values, default)
    except ConstructionError:
        return
    raise AssertionError("%s is not one of %s" % (default, values))
