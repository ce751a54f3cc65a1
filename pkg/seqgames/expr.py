"""
Syntax of game expressions and the textual game language used by the CLI and
corpus files.

    expr := "I" | "sigma" | "flat{" name ("," name)* "}"
          | "prod(" expr ("," expr)+ ")" | "tensor(" expr "," expr ")"
          | "seq(" expr "," expr ")" | "limp(" expr "," expr ")" | "bang(" expr ")"
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .constants import QUESTION, SIGMA_VALUE
from .exceptions import ConstructionError, GameSyntaxError, HostMismatchError

_NAME_RE = re.compile(r"[A-Za-z0-9_]+")


class GameExpr:
    """
    Base class for nodes of a game expression tree.
    """

    def to_text(self) -> str:
        """
        Render in the textual game language.
        """
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Unit(GameExpr):
    """
    The empty game, serving both as tensor unit and terminal object.
    """

    def to_text(self) -> str:
        return "I"


@dataclass(frozen=True)
class Flat(GameExpr):
    """
    One question answered by one of ``values``.
    """

    values: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ConstructionError("A flat game needs at least one value")
        if len(set(self.values)) != len(self.values):
            raise ConstructionError("Flat game values must be distinct: %r" % (self.values,))
        for value in self.values:
            if value == QUESTION:
                raise ConstructionError("%r is reserved for the question move" % QUESTION)
            if value != SIGMA_VALUE and not _NAME_RE.fullmatch(value):
                raise ConstructionError("Bad flat game value %r" % value)

    def to_text(self) -> str:
        if self.values == (SIGMA_VALUE,):
            return "sigma"
        return "flat{%s}" % ",".join(self.values)


@dataclass(frozen=True)
class Prod(GameExpr):
    """
    Product: O's first move picks one factor for the rest of the play.
    """

    factors: Tuple[GameExpr, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ConstructionError("A product needs at least one factor")

    def to_text(self) -> str:
        return "prod(%s)" % ",".join(f.to_text() for f in self.factors)


@dataclass(frozen=True)
class Tensor(GameExpr):
    """
    Both games side by side; only O may switch between them.
    """

    left: GameExpr
    right: GameExpr

    def to_text(self) -> str:
        return "tensor(%s,%s)" % (self.left.to_text(), self.right.to_text())


@dataclass(frozen=True)
class Seq(GameExpr):
    """
    The sequoid: tensor positions that are empty or start on the left.
    """

    left: GameExpr
    right: GameExpr

    def to_text(self) -> str:
        return "seq(%s,%s)" % (self.left.to_text(), self.right.to_text())


@dataclass(frozen=True)
class Limp(GameExpr):
    """
    Linear implication; polarity flips on the left and O opens on the right.
    """

    left: GameExpr
    right: GameExpr

    def to_text(self) -> str:
        return "limp(%s,%s)" % (self.left.to_text(), self.right.to_text())


@dataclass(frozen=True)
class Bang(GameExpr):
    """
    Countably many copies of ``inner``, opened in order.
    """

    inner: GameExpr

    def to_text(self) -> str:
        return "bang(%s)" % self.inner.to_text()


UNIT = Unit()
SIGMA = Flat((SIGMA_VALUE,))


def flat(*values: object) -> Flat:
    """
    Shorthand for a flat game over the string forms of ``values``.
    """
    return Flat(tuple(str(v) for v in values))


def limp_parts(expr: GameExpr, what: str = "strategy") -> Tuple[GameExpr, GameExpr]:
    """
    Split a linear implication host into its two sides.
    """
    if not isinstance(expr, Limp):
        raise HostMismatchError(
            "The %s host %s is not a linear implication" % (what, expr.to_text())
        )
    return expr.left, expr.right


class _Parser:
    """
    Recursive descent parser over a pre-tokenised game expression.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, int, int]] = []
        self.pos = 0
        self._end = (1, 1)
        self._tokenise()

    def _tokenise(self) -> None:
        line, col, i = 1, 1, 0
        while i < len(self.text):
            char = self.text[i]
            if char == "\n":
                line, col, i = line + 1, 1, i + 1
                continue
            if char.isspace():
                col, i = col + 1, i + 1
                continue
            if char in "(){},":
                self.tokens.append((char, line, col))
                col, i = col + 1, i + 1
                continue
            match = _NAME_RE.match(self.text, i)
            if not match:
                raise GameSyntaxError("Unexpected character %r" % char, line, col)
            self.tokens.append((match.group(0), line, col))
            col += len(match.group(0))
            i = match.end()
        self._end = (line, col)

    def _peek(self) -> Optional[str]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def _where(self) -> Tuple[int, int]:
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
            return line, col
        return self._end

    def _fail(self, message: str) -> GameSyntaxError:
        line, col = self._where()
        found = self._peek()
        return GameSyntaxError(
            "%s, found %s" % (message, "end of input" if found is None else repr(found)),
            line,
            col,
        )

    def _take(self, expected: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise self._fail("Expected %r" % expected if expected else "Expected a token")
        self.pos += 1
        return token

    def _name(self) -> str:
        token = self._peek()
        if token is None or not _NAME_RE.fullmatch(token):
            raise self._fail("Expected a value name")
        self.pos += 1
        return token

    def parse(self) -> GameExpr:
        expr = self._expr()
        if self._peek() is not None:
            raise self._fail("Unexpected trailing input")
        return expr

    def _binary(self) -> Tuple[GameExpr, GameExpr]:
        self._take("(")
        left = self._expr()
        self._take(",")
        right = self._expr()
        self._take(")")
        return left, right

    def _expr(self) -> GameExpr:
        # pylint: disable=too-many-return-statements
        word = self._peek()
        if word is None:
            raise self._fail("Expected a game expression")
        if word == "I":
            self.pos += 1
            return UNIT
        if word == "sigma":
            self.pos += 1
            return SIGMA
        if word == "flat":
            self.pos += 1
            self._take("{")
            values = [self._name()]
            while self._peek() == ",":
                self.pos += 1
                values.append(self._name())
            self._take("}")
            try:
                return Flat(tuple(values))
            except ConstructionError as exc:
                line, col = self._where()
                raise GameSyntaxError(str(exc), line, col) from exc
        if word == "prod":
            self.pos += 1
            self._take("(")
            factors = [self._expr()]
            while self._peek() == ",":
                self.pos += 1
                factors.append(self._expr())
            if len(factors) < 2:
                raise self._fail("Expected ','")
            self._take(")")
            return Prod(tuple(factors))
        if word == "bang":
            self.pos += 1
            self._take("(")
            inner = self._expr()
            self._take(")")
            return Bang(inner)
        binaries: Dict[str, Callable[[GameExpr, GameExpr], GameExpr]] = dict(
            tensor=Tensor, seq=Seq, limp=Limp
        )
        if word in binaries:
            self.pos += 1
            left, right = self._binary()
            return binaries[word](left, right)
        raise self._fail("Expected a game expression")


def parse_dsl(text: str) -> GameExpr:
    """
    Parse a game expression, raising GameSyntaxError with the line and column of the
    first offending token.
    """
    return _Parser(text).parse()


def parse_corpus(text: str) -> List[GameExpr]:
    """
    Parse a corpus file: one game expression per line, blank lines and ``#`` comments
    ignored.
    """
    games = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            games.append(parse_dsl(stripped))
        except GameSyntaxError as exc:
            raise GameSyntaxError(exc.message, lineno, exc.column) from exc
    return games


def tensor_all(games: Sequence[GameExpr]) -> GameExpr:
    """
    Right-nested tensor of a non-empty list of games.
    """
    if not games:
        raise ConstructionError("Cannot tensor an empty list of games")
    if len(games) == 1:
        return games[0]
    return Tensor(games[0], tensor_all(games[1:]))


def seq_all(games: Sequence[GameExpr]) -> GameExpr:
    """
    Right-nested sequoid of a non-empty list of games.
    """
    if not games:
        raise ConstructionError("Cannot take the sequoid of an empty list of games")
    if len(games) == 1:
        return games[0]
    return Seq(games[0], seq_all(games[1:]))
