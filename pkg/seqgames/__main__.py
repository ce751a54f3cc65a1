"""
Main entrypoint when seqgames is invoked as `python -m seqgames`.
"""
import logging.config
import sys
from typing import Any, List, Optional

import yaml

from confp import render  # type: ignore

from .cli import COMMANDS, build_parser
from .config import validate_and_normalise_main_config
from .exceptions import ConfigValidationFailed, SeqGamesError

_LOG = logging.getLogger("seqgames.__main__")


def load_config(config: Optional[str], render_config: Optional[str]) -> Any:
    """
    Loads the config, and uses confp to render it if necessary. No config file means
    every default.
    """
    if not config:
        return {}
    with open(config, "r", encoding="utf8") as stream:
        if render_config:
            rendered = render(render_config, stream.read())
            raw_config = yaml.safe_load(rendered)
        else:
            raw_config = yaml.safe_load(stream)
    return raw_config


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entrypoint function. Returns the exit code.
    """
    args = build_parser().parse_args(argv)

    # Load, validate and normalise config, or quit.
    try:
        raw_config = load_config(args.config, args.render)
        config = validate_and_normalise_main_config(raw_config)
    except ConfigValidationFailed as exc:
        print(str(exc), file=sys.stderr)
        return 1

    if config["logging"]:
        logging.config.dictConfig(config["logging"])

    try:
        return COMMANDS[args.command](args, config, sys.stdout)
    except (SeqGamesError, ValueError, OSError) as exc:
        _LOG.debug("%s failed", args.command, exc_info=True)
        print("error: %s" % exc, file=sys.stderr)
        return 2


def cli() -> None:
    """
    Console script entrypoint.
    """
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("")


if __name__ == "__main__":
    cli()
