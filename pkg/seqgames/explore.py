"""
The textual play explorer: O-moves are read one line at a time and played against a
named strategy, and the play so far is echoed in trace format.
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .coalgebra import alpha, lambek_inv, successor
from .comonoid import der, int_fwd, mu
from .connectives import copycat
from .exceptions import IllegalMoveError, SeqGamesError, UnknownStrategyError
from .expr import Flat, GameExpr, Limp
from .moves import Move, Position, dump_trace, parse_position
from .strategies import Strategy, Undefined

_LOG = logging.getLogger(__name__)


def _successor(game: GameExpr) -> Strategy:
    if not isinstance(game, Flat):
        raise UnknownStrategyError(
            "succ is only defined on flat games, not %s" % game.to_text()
        )
    return successor(game)


EXPLORABLE: Dict[str, Callable[[GameExpr], Strategy]] = {
    "id": copycat,
    "undefined": lambda game: Undefined(Limp(game, game)),
    "alpha": alpha,
    "alpha^-1": lambek_inv,
    "der": der,
    "mu": mu,
    "int": lambda game: int_fwd(game, game),
    "succ": _successor,
}

HELP = """\
Enter O-moves such as r.q, or one of:
  moves   list the legal O-moves
  trace   print the play so far
  undo    take back the last O-move and its reply
  reset   start again from the empty position
  quit    leave the explorer
"""


def explorable_strategy(name: str, game: GameExpr) -> Strategy:
    """
    The strategy called ``name`` instantiated at ``game``.
    """
    try:
        builder = EXPLORABLE[name]
    except KeyError as exc:
        raise UnknownStrategyError(
            "No strategy called %r; expected one of: %s" % (name, ", ".join(EXPLORABLE))
        ) from exc
    return builder(game)


class Explorer:
    """
    A play in progress against one strategy.
    """

    def __init__(self, strategy: Strategy, depth: int):
        self.strategy = strategy
        self.depth = depth
        self.position: Position = ()
        self._replies: List[Optional[Move]] = []

    def legal_moves(self) -> Tuple[Move, ...]:
        if self.finished or len(self.position) >= self.depth:
            return ()
        return self.strategy.game.next_moves(self.position)

    @property
    def finished(self) -> bool:
        """
        The strategy stopped answering, so O has nothing left to reply to.
        """
        return bool(self._replies) and self._replies[-1] is None

    def play(self, move: Move) -> Optional[Move]:
        """
        Play an O-move and return the strategy's reply, if any.
        """
        if move not in self.legal_moves():
            raise IllegalMoveError(
                "%s is not a legal O-move here; try one of: %s"
                % (move, " ".join(str(m) for m in self.legal_moves()) or "nothing")
            )
        position = self.position + (move,)
        reply = self.strategy.respond(position)
        self.position = position if reply is None else position + (reply,)
        self._replies.append(reply)
        return reply

    def undo(self) -> None:
        if not self._replies:
            return
        reply = self._replies.pop()
        self.position = self.position[: -2 if reply is not None else -1]

    def reset(self) -> None:
        self.position = ()
        self._replies = []

    def trace(self) -> str:
        return dump_trace(self.position)


def run_explorer(
    explorer: Explorer, lines: Iterable[str], write: Callable[[str], None]
) -> Position:
    """
    Drive ``explorer`` from ``lines`` until they run out or ``quit``; return the final
    position.
    """
    write(HELP)
    for line in lines:
        command = line.strip()
        if not command or command.startswith("#"):
            continue
        if command in ("quit", "exit"):
            break
        if command == "help":
            write(HELP)
        elif command == "moves":
            write("".join("%s\n" % move for move in explorer.legal_moves()) or "no moves\n")
        elif command == "trace":
            write(explorer.trace())
        elif command == "undo":
            explorer.undo()
        elif command == "reset":
            explorer.reset()
        else:
            _play_line(explorer, command, write)
    return explorer.position


def _play_line(explorer: Explorer, command: str, write: Callable[[str], None]) -> None:
    try:
        moves = parse_position(command)
        for move in moves:
            reply = explorer.play(move)
            write("O %s\n" % move)
            if reply is None:
                write("# %s does not respond\n" % explorer.strategy.name)
                break
            write("P %s\n" % reply)
    except SeqGamesError as exc:
        _LOG.debug("Explorer rejected %r: %s", command, exc)
        write("error: %s\n" % exc)
