"""
Ordinals below ω^ω in Cantor normal form.
"""

import re
from functools import total_ordering
from typing import Dict, Iterable, List, Tuple, Union

from ..exceptions import GameSyntaxError, NegativeOrdinalError

Term = Tuple[int, int]

_TERM_RE = re.compile(
    r"^(?:(?P<omega>[wω])(?:\^(?P<exp>\d+))?(?:\*(?P<coef>\d+))?|(?P<nat>\d+))$"
)


@total_ordering
class CnfOrdinal:
    """
    ω^e₁·c₁ + … + ω^e_k·c_k with e₁ > … > e_k ≥ 0 and every c ≥ 1.
    The empty sum is 0.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Term] = ()):
        terms = tuple(terms)
        for exponent, coefficient in terms:
            if exponent < 0:
                raise NegativeOrdinalError("Exponent %d is negative" % exponent)
            if coefficient < 1:
                raise ValueError("Coefficient %d is not positive" % coefficient)
        for (higher, _), (lower, _) in zip(terms, terms[1:]):
            if higher <= lower:
                raise ValueError("Exponents must strictly decrease: %r" % (terms,))
        self.terms: Tuple[Term, ...] = terms

    @classmethod
    def of(cls, value: Union[int, "CnfOrdinal"]) -> "CnfOrdinal":
        """
        Lift a natural number; ordinals pass through.
        """
        if isinstance(value, CnfOrdinal):
            return value
        if value < 0:
            raise NegativeOrdinalError("%d is not an ordinal" % value)
        return cls(((0, value),) if value else ())

    @classmethod
    def omega_power(cls, exponent: int, coefficient: int = 1) -> "CnfOrdinal":
        """
        ω^exponent·coefficient.
        """
        return cls(((exponent, coefficient),))

    @property
    def degree(self) -> int:
        """
        The leading exponent, -1 for zero.
        """
        return self.terms[0][0] if self.terms else -1

    @property
    def finite_part(self) -> int:
        """
        The coefficient of ω^0.
        """
        if self.terms and self.terms[-1][0] == 0:
            return self.terms[-1][1]
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return self.degree <= 0

    def is_successor(self) -> bool:
        return self.finite_part > 0

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.is_successor()

    def is_indecomposable(self) -> bool:
        """
        Additively indecomposable: a single term ω^e with coefficient 1, including 1 = ω^0.
        """
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def predecessor(self) -> "CnfOrdinal":
        if not self.is_successor():
            raise NegativeOrdinalError("%s has no predecessor" % self)
        head, (_, units) = self.terms[:-1], self.terms[-1]
        return CnfOrdinal(head + (((0, units - 1),) if units > 1 else ()))

    def successor(self) -> "CnfOrdinal":
        return self + 1

    def __add__(self, other: Union[int, "CnfOrdinal"]) -> "CnfOrdinal":
        other = CnfOrdinal.of(other)
        if not other.terms:
            return self
        lead, coefficient = other.terms[0]
        kept = [term for term in self.terms if term[0] > lead]
        same = [c for e, c in self.terms if e == lead]
        if same:
            coefficient += same[0]
        return CnfOrdinal(kept + [(lead, coefficient)] + list(other.terms[1:]))

    def __radd__(self, other: int) -> "CnfOrdinal":
        return CnfOrdinal.of(other) + self

    def natural_sum(self, other: Union[int, "CnfOrdinal"]) -> "CnfOrdinal":
        """
        The Hessenberg sum: add coefficients exponent by exponent.
        """
        merged: Dict[int, int] = {}
        for exponent, coefficient in self.terms + CnfOrdinal.of(other).terms:
            merged[exponent] = merged.get(exponent, 0) + coefficient
        return CnfOrdinal(sorted(merged.items(), reverse=True))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return other >= 0 and self == CnfOrdinal.of(other)
        if isinstance(other, CnfOrdinal):
            return self.terms == other.terms
        return NotImplemented

    def __lt__(self, other: Union[int, "CnfOrdinal"]) -> bool:
        return ord_cmp(self, CnfOrdinal.of(other)) < 0

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return "CnfOrdinal(%s)" % self

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for exponent, coefficient in self.terms:
            if exponent == 0:
                parts.append(str(coefficient))
                continue
            text = "w" if exponent == 1 else "w^%d" % exponent
            parts.append(text if coefficient == 1 else "%s*%d" % (text, coefficient))
        return "+".join(parts)


ZERO = CnfOrdinal()
ONE = CnfOrdinal.of(1)
OMEGA = CnfOrdinal.omega_power(1)


def ord_add(left: Union[int, CnfOrdinal], right: Union[int, CnfOrdinal]) -> CnfOrdinal:
    """
    Ordinal sum, absorbing on the left: 1 + ω = ω.
    """
    return CnfOrdinal.of(left) + right


def ord_cmp(left: Union[int, CnfOrdinal], right: Union[int, CnfOrdinal]) -> int:
    """
    -1, 0 or 1 as ``left`` is below, equal to or above ``right``.
    """
    # Terms compare lexicographically, exponent first.
    mine, theirs = CnfOrdinal.of(left).terms, CnfOrdinal.of(right).terms
    return (mine > theirs) - (mine < theirs)


def ord_is_indecomposable(value: Union[int, CnfOrdinal]) -> bool:
    return CnfOrdinal.of(value).is_indecomposable()


def parse_ordinal(text: str) -> CnfOrdinal:
    """
    Parse a sum of ``w^k*c`` terms, e.g. ``w^2*3+w+5``. ``ω`` may stand for ``w``.
    """
    result = ZERO
    stripped = "".join(text.split())
    if not stripped:
        raise GameSyntaxError("Empty ordinal", 1, 1)
    column = 1
    for part in stripped.split("+"):
        match = _TERM_RE.match(part)
        if match is None:
            raise GameSyntaxError("Bad ordinal term %r" % part, 1, column)
        if match.group("nat") is not None:
            result = result + int(match.group("nat"))
        else:
            exponent = int(match.group("exp") or 1)
            coefficient = int(match.group("coef") or 1)
            if coefficient:
                result = result + CnfOrdinal.omega_power(exponent, coefficient)
        column += len(part) + 1
    return result
