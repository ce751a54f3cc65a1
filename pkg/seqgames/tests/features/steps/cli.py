import io
import json
import os
import shlex
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from typing import Any, List

from behave import given, then, when  # type: ignore

from seqgames.__main__ import main
from seqgames.constants import CORPUS_ENV_VAR

# pylint: disable=function-redefined


def _temp_file(context: Any, name: str, text: str) -> str:
    directory = tempfile.mkdtemp(prefix="seqgames-cli-")
    context.data["temp_dirs"].append(directory)
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf8") as stream:
        stream.write(text + "\n")
    return path


def _run(context: Any, argv: List[str]) -> None:
    out, err = io.StringIO(), io.StringIO()
    stdin = sys.stdin
    if "stdin" in context.data:
        sys.stdin = io.StringIO(context.data["stdin"])
    try:
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:
                code = exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stdin = stdin
    context.data["exit_code"] = code
    context.data["out"] = out.getvalue()
    context.data["err"] = err.getvalue()


def _unescape(text: str) -> str:
    return text.replace("\\n", "\n")


@given("a corpus file holding")
def step(context: Any) -> None:
    context.data["corpus_file"] = _temp_file(context, "corpus.txt", context.text)


@given("the corpus environment variable names the corpus file")  # type: ignore[no-redef]
def step(context: Any) -> None:
    os.environ[CORPUS_ENV_VAR] = context.data["corpus_file"]


@given("a config file holding")  # type: ignore[no-redef]
def step(context: Any) -> None:
    context.data["config_file"] = _temp_file(context, "config.yml", context.text)


@given("a directory for traces")  # type: ignore[no-redef]
def step(context: Any) -> None:
    directory = tempfile.mkdtemp(prefix="seqgames-traces-")
    context.data["temp_dirs"].append(directory)
    context.data["trace_dir"] = directory


@given("the standard input holds")  # type: ignore[no-redef]
def step(context: Any) -> None:
    context.data["stdin"] = context.text + "\n"


@when("we run seqgames with {args}")  # type: ignore[no-redef]
def step(context: Any, args: str) -> None:
    _run(context, shlex.split(args))


@when("we run seqgames on the corpus file with {args}")  # type: ignore[no-redef]
def step(context: Any, args: str) -> None:
    _run(context, shlex.split(args) + ["--game", "@" + context.data["corpus_file"]])


@when("we run seqgames using the config file with {args}")  # type: ignore[no-redef]
def step(context: Any, args: str) -> None:
    _run(context, ["--config", context.data["config_file"]] + shlex.split(args))


@when("we run seqgames writing traces with {args}")  # type: ignore[no-redef]
def step(context: Any, args: str) -> None:
    _run(context, shlex.split(args) + ["--traces", context.data["trace_dir"]])


@then("the exit code is {code:d}")  # type: ignore[no-redef]
def step(context: Any, code: int) -> None:
    assert context.data["exit_code"] == code, (
        context.data["exit_code"],
        context.data["out"],
        context.data["err"],
    )


@then('the output contains "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert _unescape(text) in context.data["out"], context.data["out"]


@then('the output does not contain "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert _unescape(text) not in context.data["out"], context.data["out"]


@then('the output ends with "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert context.data["out"].rstrip("\n").endswith(text), context.data["out"]


@then('the output is "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert context.data["out"].strip() == text, context.data["out"]


@then("the output is")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert context.data["out"].strip() == context.text.strip(), context.data["out"]


@then("the JSON output reports a pass")  # type: ignore[no-redef]
def step(context: Any) -> None:
    document = json.loads(context.data["out"])
    assert document["passed"] is True, document
    assert document["results"], document


@then('the error output contains "{text}"')  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    assert text in context.data["err"], context.data["err"]


@then("no traces were written")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert not os.listdir(context.data["trace_dir"]), os.listdir(context.data["trace_dir"])
