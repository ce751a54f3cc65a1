from typing import Any

import yaml
from behave import given, then, when  # type: ignore

from seqgames.config import validate_and_normalise_main_config
from seqgames.exceptions import ConfigValidationFailed
from seqgames.suites import load_suite

# pylint: disable=function-redefined


@given("the {section} config section contains")
def step(context: Any, section: str) -> None:
    data = yaml.safe_load(context.text)
    config = context.data["raw_config"]
    config.setdefault(section, {}).update(data)


@when("we validate the main config")  # type: ignore[no-redef]
def step(context: Any) -> None:
    try:
        context.data["config"] = validate_and_normalise_main_config(
            context.data["raw_config"]
        )
    except ConfigValidationFailed as exc:
        context.data["validation_error"] = exc


@then("config validation fails")  # type: ignore[no-redef]
def step(context: Any) -> None:
    print("--- Config file ---")
    print(yaml.dump(context.data["raw_config"]))
    assert "validation_error" in context.data, "Config validation should have failed"


@then("the config validates")  # type: ignore[no-redef]
def step(context: Any) -> None:
    print("--- Config file ---")
    print(yaml.dump(context.data["raw_config"]))
    try:
        print("--- Validation Errors ---")
        print(context.data["validation_error"])
    except KeyError:
        pass
    assert "validation_error" not in context.data, "Config should validate"
    assert (
        "config" in context.data
    ), 'Validated config should be in context.data["config"] (test error)'


@then("the validation error mentions {text}")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    message = str(context.data["validation_error"])
    assert text.strip('"') in message, message


@then("the {section} setting {key} is {value:d}")  # type: ignore[no-redef]
def step(context: Any, section: str, key: str, value: int) -> None:
    actual = context.data["config"][section][key]
    assert actual == value, "%s.%s is %r, not %r" % (section, key, actual, value)


@then('the corpus setting is "{first}" and "{second}"')  # type: ignore[no-redef]
def step(context: Any, first: str, second: str) -> None:
    corpus = context.data["config"]["check"]["corpus"]
    assert corpus == [first, second], corpus


@given("the suite {name} is configured with")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    context.data["suite_config"] = yaml.safe_load(context.text)


@when("we load the suite {name}")  # type: ignore[no-redef]
def step(context: Any, name: str) -> None:
    try:
        context.data["suite"] = load_suite(name, context.data.get("suite_config"))
    except ConfigValidationFailed as exc:
        context.data["validation_error"] = exc


@then("loading the suite fails with a validation error")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert "validation_error" in context.data, "Suite config should have failed"


@then("the loaded suite has {key} set to {value:d}")  # type: ignore[no-redef]
def step(context: Any, key: str, value: int) -> None:
    actual = context.data["suite"].config[key]
    assert actual == value, "%s is %r, not %r" % (key, actual, value)
