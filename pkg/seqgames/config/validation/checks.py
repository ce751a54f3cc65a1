"""
Validation functions for the check and suites sections.
"""

from ...constants import SUITE_ORDER
from ...exceptions import GameSyntaxError
from ...expr import parse_dsl
from ...types import ConfigType
from . import BadConfigsType, add_error


def validate_corpus_games(bad_configs: BadConfigsType, config: ConfigType) -> None:
    """
    Ensure every game listed in check.corpus parses.
    """
    for index, text in enumerate(config["check"].get("corpus") or []):
        try:
            parse_dsl(text)
        except GameSyntaxError as exc:
            add_error(bad_configs, "check", "corpus[%d]" % index, str(exc))


def validate_suite_names(bad_configs: BadConfigsType, config: ConfigType) -> None:
    """
    Ensure the suites section only configures suites that exist.
    """
    for name in config.get("suites", {}):
        if name not in SUITE_ORDER:
            add_error(
                bad_configs,
                "suites",
                name,
                "No suite called '%s'; expected one of: %s" % (name, ", ".join(SUITE_ORDER)),
            )
