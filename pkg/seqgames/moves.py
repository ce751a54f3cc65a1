"""
Moves, polarities and positions, plus the textual trace format.

A move is addressed by the path of connective tags that leads from the root of a
game expression to one of its flat leaves, followed by the base move played there,
for example ``r.c:3.q`` or ``l.i:1.x``.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

from .constants import COPY_PREFIX, INDEX_PREFIX, LEFT, RIGHT
from .exceptions import GameSyntaxError
from .types import Path

_TAG_RE = re.compile(r"^(l|r|i:\d+|c:\d+)$")
_BASE_RE = re.compile(r"^([A-Za-z0-9_]+|\*)$")


class Polarity(Enum):
    """
    Which player a move belongs to.
    """

    O = "O"
    P = "P"

    def flip(self) -> "Polarity":
        """
        The other player.
        """
        return Polarity.P if self is Polarity.O else Polarity.O


@dataclass(frozen=True, order=True)
class Move:
    """
    A base move played at the leaf addressed by ``path``.
    """

    path: Path
    base: str

    def __str__(self) -> str:
        return ".".join(self.path + (self.base,))

    def __repr__(self) -> str:
        return "Move(%s)" % self

    @classmethod
    def parse(cls, text: str) -> "Move":
        """
        Parse the dotted textual form of a move.
        """
        parts = text.strip().split(".")
        if not parts or not parts[-1]:
            raise GameSyntaxError("Empty move %r" % text)
        *tags, base = parts
        for tag in tags:
            if not _TAG_RE.match(tag):
                raise GameSyntaxError("Bad address tag %r in move %r" % (tag, text))
        if not _BASE_RE.match(base):
            raise GameSyntaxError("Bad base move %r in move %r" % (base, text))
        return cls(tuple(tags), base)

    @property
    def head(self) -> str:
        """
        The outermost address tag.
        """
        if not self.path:
            raise ValueError("Move %s has no address tags" % self)
        return self.path[0]

    @property
    def tail(self) -> "Move":
        """
        This move as seen from inside the component named by its head tag.
        """
        return Move(self.path[1:], self.base)

    def under(self, *tags: str) -> "Move":
        """
        This move placed inside the component(s) addressed by ``tags``.
        """
        return Move(tuple(tags) + self.path, self.base)

    def starts_with(self, prefix: Path) -> bool:
        """
        Whether the address begins with ``prefix``.
        """
        return self.path[: len(prefix)] == prefix

    def replace_prefix(self, old: Path, new: Path) -> "Move":
        """
        Swap the leading ``old`` tags of the address for ``new``.
        """
        return Move(new + self.path[len(old) :], self.base)


Position = Tuple[Move, ...]


def index_tag(index: int) -> str:
    """
    The address tag for factor ``index`` of a product.
    """
    return "%s%d" % (INDEX_PREFIX, index)


def copy_tag(index: int) -> str:
    """
    The address tag for copy ``index`` of an exponential.
    """
    return "%s%d" % (COPY_PREFIX, index)


def tag_number(tag: str) -> int:
    """
    The number carried by an ``i:<n>`` or ``c:<n>`` tag.
    """
    try:
        return int(tag.split(":", 1)[1])
    except (IndexError, ValueError) as exc:
        raise ValueError("Tag %r carries no number" % tag) from exc


def restrict(position: Iterable[Move], tag: str) -> Position:
    """
    The moves of ``position`` addressed under ``tag``, with that tag removed.
    """
    return tuple(move.tail for move in position if move.path[:1] == (tag,))


def side_of(move: Move) -> str:
    """
    Whether the move is in the left or the right component of a binary connective.
    """
    head = move.head
    if head not in (LEFT, RIGHT):
        raise ValueError("Move %s is not in a binary component" % move)
    return head


def polarity_at(index: int) -> Polarity:
    """
    Polarity of the move at ``index`` of an alternating position.
    """
    return Polarity.O if index % 2 == 0 else Polarity.P


def format_position(position: Iterable[Move]) -> str:
    """
    A compact one-line rendering, used in reports and errors.
    """
    rendered = " ".join(str(move) for move in position)
    return rendered or "<empty>"


def dump_trace(position: Iterable[Move]) -> str:
    """
    Serialise a position as a trace: one ``O <move>`` or ``P <move>`` line per move.
    """
    lines = [
        "%s %s\n" % (polarity_at(i).value, move) for i, move in enumerate(position)
    ]
    return "".join(lines)


def load_trace(text: str) -> Position:
    """
    Parse a trace produced by :func:`dump_trace`.
    """
    moves: List[Move] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        label, _, rest = line.strip().partition(" ")
        expected = polarity_at(len(moves))
        if label != expected.value:
            raise GameSyntaxError(
                "Expected an %s move, got %r" % (expected.value, label), lineno, 1
            )
        try:
            moves.append(Move.parse(rest))
        except GameSyntaxError as exc:
            raise GameSyntaxError(exc.message, lineno, 3) from exc
    return tuple(moves)


def parse_position(text: str) -> Position:
    """
    Parse a whitespace separated list of moves; ``<empty>`` gives the empty position.
    """
    text = text.strip()
    if text in ("", "<empty>"):
        return ()
    return tuple(Move.parse(part) for part in text.split())
