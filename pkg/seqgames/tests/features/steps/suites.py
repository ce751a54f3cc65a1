import json
import os
import tempfile
from typing import Any

import yaml
from behave import given, then, when  # type: ignore

from seqgames.composition import equiv_up_to
from seqgames.exceptions import UnknownSuiteError
from seqgames.explore import explorable_strategy
from seqgames.expr import Flat, parse_dsl
from seqgames.perturb import perturbations
from seqgames.report import Report, from_equivalence
from seqgames.suites import run_law_suite, suite_names

# pylint: disable=function-redefined


def _failures(context: Any) -> str:
    return "\n".join(
        "%s: %s" % (result.line(), result.detail)
        for result in context.data["results"]
        if not result.passed
    )


@given("the {name} suite is configured with")
def step(context: Any, name: str) -> None:
    context.data.setdefault("suite_configs", {})[name] = yaml.safe_load(context.text)


@when("we run the {name} suite on {game} to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, name: str, game: str, depth: int) -> None:
    context.data["results"] = run_law_suite(name, [parse_dsl(game)], depth)


@when(  # type: ignore[no-redef]
    "we run the {name} suite with its configuration on {game} to depth {depth:d}"
)
def step(context: Any, name: str, game: str, depth: int) -> None:
    context.data["results"] = run_law_suite(
        name, [parse_dsl(game)], depth, context.data["suite_configs"]
    )


@then("the suite produced results")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert context.data["results"], "The suite should have checked something"


@then("the suite produced no results")  # type: ignore[no-redef]
def step(context: Any) -> None:
    results = context.data["results"]
    assert not results, [result.line() for result in results]


@then("every check passed")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert all(result.passed for result in context.data["results"]), _failures(context)


@then("a check named {diagram} was run")  # type: ignore[no-redef]
def step(context: Any, diagram: str) -> None:
    names = [result.diagram for result in context.data["results"]]
    assert any(name.startswith(diagram) for name in names), names


@then("running the suite {name} fails")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    try:
        run_law_suite(name, [parse_dsl("sigma")], 2)
    except UnknownSuiteError:
        return
    raise AssertionError("%s should not be a suite" % name)


@then(  # type: ignore[no-redef]
    "the suite {name} expands to {count:d} suites starting with {first}"
)
def step(context: Any, name: str, count: int, first: str) -> None:
    names = suite_names(name)
    assert len(names) == count, names
    assert names[0] == first, names


@given(  # type: ignore[no-redef]
    "a report with a {outcome} check of {actual} against {expected} on {game}"
)
def step(context: Any, outcome: str, actual: str, expected: str, game: str) -> None:
    host = parse_dsl(game)
    compared = equiv_up_to(
        explorable_strategy(expected, host), explorable_strategy(actual, host), 4
    )
    assert compared.equal == (outcome == "passing"), compared.describe()
    context.data["report"] = Report(
        [from_equivalence("demo", "identity", 4, host.to_text(), compared)]
    )


@then('the text report ends with "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    rendered = context.data["report"].render()
    assert rendered.splitlines()[-1] == text, rendered


@then('the text report contains "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    rendered = context.data["report"].render()
    assert text in rendered, rendered


@then("the JSON report says passed is {value}")  # type: ignore[no-redef]
def step(context: Any, value: str) -> None:
    document = json.loads(context.data["report"].render(as_json=True))
    assert document["passed"] is (value == "true"), document
    assert len(document["results"]) == len(context.data["report"].results)


@then("writing traces produces {count:d} file holding")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    directory = tempfile.mkdtemp(prefix="seqgames-traces-")
    context.data["temp_dirs"].append(directory)
    written = context.data["report"].write_traces(directory)
    assert len(written) == count, written
    with open(written[0], encoding="utf8") as trace:
        assert trace.read() == context.text.strip() + "\n"
    assert context.data["report"].results[0].trace_file == written[0]


@then("writing traces produces {count:d} files")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    directory = tempfile.mkdtemp(prefix="seqgames-traces-")
    context.data["temp_dirs"].append(directory)
    written = context.data["report"].write_traces(directory)
    assert len(written) == count, written
    assert len(os.listdir(directory)) == count


@then("no check named {diagram} was run")  # type: ignore[no-redef]
def step(context: Any, diagram: str) -> None:
    names = [result.diagram for result in context.data["results"]]
    assert not any(name.startswith(diagram) for name in names), names


@then("the perturbations of {game} are {names}")  # type: ignore[no-redef]
def step(context: Any, game: str, names: str) -> None:
    host = parse_dsl(game)
    assert isinstance(host, Flat)
    found = [name for name, _ in perturbations(host)]
    assert found == [name.strip() for name in names.split(",")], found


@then("every check ran to depth {depth:d}")  # type: ignore[no-redef]
def step(context: Any, depth: int) -> None:
    depths = {result.depth for result in context.data["results"]}
    assert depths == {depth}, depths
