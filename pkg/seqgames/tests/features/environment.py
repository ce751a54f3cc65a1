import os
import shutil
from typing import Any

from seqgames.constants import CORPUS_ENV_VAR


def before_scenario(context: Any, scenario: Any) -> None:
    """
    Initialise data.
    """
    context.data = dict(
        raw_config={},
        strategies={},
        temp_dirs=[],
        saved_env=os.environ.get(CORPUS_ENV_VAR),
    )
    os.environ.pop(CORPUS_ENV_VAR, None)


def after_scenario(context: Any, scenario: Any) -> None:
    """
    Put back anything a scenario changed outside of context.data.
    """
    saved = context.data["saved_env"]
    if saved is None:
        os.environ.pop(CORPUS_ENV_VAR, None)
    else:
        os.environ[CORPUS_ENV_VAR] = saved
    for path in context.data["temp_dirs"]:
        shutil.rmtree(path, ignore_errors=True)
