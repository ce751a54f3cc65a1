"""
Transfinite sequences of natural numbers and the rank calculus on them.

A sequence is a finite concatenation of finite blocks and ``asc`` blocks, where
``asc`` stands for the enumeration 0,1,2,… of order type ω. The rank relation
s ≤ γ is the least relation with

* ε ≤ 0,
* s ≤ γ+1 whenever Δs ≤ γ, where Δ drops every 0 and decrements the rest,
* s ≤ μ for a limit μ whenever every successor-length prefix of s is ≤ some γ < μ.

It is decided here for γ < ω², which covers every schedule of length below ω².
"""

import logging
import random
import re
from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..exceptions import GameSyntaxError, UnsupportedOrdinalError
from .ordinals import OMEGA, CnfOrdinal

_LOG = logging.getLogger(__name__)

_FIN_RE = re.compile(r"^\[(\d+(,\d+)*)?\]$")


@dataclass(frozen=True)
class Fin:
    """
    A finite run of naturals.
    """

    values: Tuple[int, ...]

    def __str__(self) -> str:
        return "[%s]" % ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class Asc:
    """
    0,1,2,… in order, of length ω.
    """

    def __str__(self) -> str:
        return "asc"


Block = Union[Fin, Asc]


@dataclass(frozen=True)
class SymbolicSeq:
    """
    Blocks played one after another. Adjacent finite blocks are merged and empty ones
    dropped, so equal sequences have equal block lists.
    """

    blocks: Tuple[Block, ...] = field(default=())

    def __post_init__(self) -> None:
        normal: List[Block] = []
        for block in self.blocks:
            if isinstance(block, Fin):
                if any(v < 0 for v in block.values):
                    raise ValueError("Sequences hold naturals only: %s" % block)
                if not block.values:
                    continue
                if normal and isinstance(normal[-1], Fin):
                    block = Fin(normal.pop().values + block.values)  # type: ignore[union-attr]
            normal.append(block)
        object.__setattr__(self, "blocks", tuple(normal))

    @classmethod
    def finite(cls, values: Sequence[int]) -> "SymbolicSeq":
        return cls((Fin(tuple(values)),))

    @property
    def ascending_blocks(self) -> int:
        return sum(1 for block in self.blocks if isinstance(block, Asc))

    @property
    def tail(self) -> Tuple[int, ...]:
        """
        The finite run after the last ``asc`` block.
        """
        if self.blocks and isinstance(self.blocks[-1], Fin):
            return self.blocks[-1].values
        return ()

    def is_empty(self) -> bool:
        return not self.blocks

    def is_finite(self) -> bool:
        return self.ascending_blocks == 0

    def length(self) -> CnfOrdinal:
        """
        ω·k + n for k ``asc`` blocks and a trailing run of n.
        """
        if self.is_finite():
            return CnfOrdinal.of(len(self.tail))
        return CnfOrdinal.omega_power(1, self.ascending_blocks) + len(self.tail)

    def values(self) -> Tuple[int, ...]:
        """
        The entries of a finite sequence.
        """
        if not self.is_finite():
            raise ValueError("%s is infinite" % self)
        return self.tail

    def __str__(self) -> str:
        return ";".join(str(block) for block in self.blocks) or "[]"


EMPTY = SymbolicSeq()


def parse_seq(text: str) -> SymbolicSeq:
    """
    Parse ``block (";" block)*`` with blocks ``asc``, ``[n,…]`` or ``[]``.
    """
    blocks: List[Block] = []
    column = 1
    for part in text.split(";"):
        compact = "".join(part.split())
        if compact == "asc":
            blocks.append(Asc())
        elif _FIN_RE.match(compact):
            inner = compact[1:-1]
            blocks.append(Fin(tuple(int(v) for v in inner.split(",")) if inner else ()))
        else:
            raise GameSyntaxError("Bad sequence block %r" % part.strip(), 1, column)
        column += len(part) + 1
    return SymbolicSeq(tuple(blocks))


def delta_values(values: Sequence[int]) -> Tuple[int, ...]:
    return tuple(v - 1 for v in values if v)


def delta_sym(seq: SymbolicSeq) -> SymbolicSeq:
    """
    Δ blockwise; an ``asc`` block loses its 0 and shifts down onto itself.
    """
    return SymbolicSeq(
        tuple(
            block if isinstance(block, Asc) else Fin(delta_values(block.values))
            for block in seq.blocks
        )
    )


def _check_bound(gamma: CnfOrdinal) -> None:
    if gamma.degree >= 2:
        raise UnsupportedOrdinalError("Ranks are decided below w^2, not at %s" % gamma)


def rank_of(seq: SymbolicSeq) -> CnfOrdinal:
    """
    The least γ with seq ≤ γ: ω per ``asc`` block plus one more than the largest entry
    of the trailing finite run.
    """
    tail = seq.tail
    finite = max(tail) + 1 if tail else 0
    if seq.is_finite():
        return CnfOrdinal.of(finite)
    return CnfOrdinal.omega_power(1, seq.ascending_blocks) + finite


class PrefixFamily(NamedTuple):
    """
    A family of successor-length prefixes and the supremum of their ranks.
    ``attained`` says whether some prefix has exactly that rank.
    """

    description: str
    rank: CnfOrdinal
    attained: bool


def successor_prefixes(seq: SymbolicSeq) -> Iterator[PrefixFamily]:
    """
    Cover the successor-length prefixes of ``seq`` by finitely many families. Prefixes
    ending inside an ``asc`` block are ``before;[0..m]`` for every m and their ranks
    climb to the next multiple of ω; the whole sequence is its own family when its
    length is a successor.
    """
    before: List[Block] = []
    for block in seq.blocks:
        if isinstance(block, Asc):
            level = SymbolicSeq(tuple(before)).ascending_blocks + 1
            yield PrefixFamily(
                "%s;[0..m]" % SymbolicSeq(tuple(before)),
                CnfOrdinal.omega_power(1, level),
                False,
            )
        else:
            for end in range(1, len(block.values) + 1):
                prefix = SymbolicSeq(tuple(before) + (Fin(block.values[:end]),))
                yield PrefixFamily(str(prefix), rank_of(prefix), True)
        before.append(block)


def rank_leq(seq: SymbolicSeq, gamma: Union[int, CnfOrdinal]) -> bool:
    """
    Decide seq ≤ γ by the defining rules.
    """
    gamma = CnfOrdinal.of(gamma)
    _check_bound(gamma)
    while gamma.is_successor():
        if seq.is_empty():
            return True
        seq, gamma = delta_sym(seq), gamma.predecessor()
    if gamma.is_zero():
        return seq.is_empty()
    for family in successor_prefixes(seq):
        if family.attained and not family.rank < gamma:
            return False
        if not family.attained and gamma < family.rank:
            return False
    return True


def brute_rank_leq(values: Sequence[int], bound: int) -> bool:
    """
    The definition applied literally to a finite sequence and a finite bound.
    """
    if bound == 0:
        return not values
    return brute_rank_leq(delta_values(values), bound - 1)


def classify_play(copy_indices: SymbolicSeq, gamma: Union[int, CnfOrdinal]) -> bool:
    """
    Whether a play of !A visiting copies in this order is a play of the γ-fold sequoid.
    """
    return rank_leq(copy_indices, gamma)


@dataclass
class RankPropsReport:
    """
    Counts of property checks on generated sequences and the counterexamples found.
    """

    trials: int = 0
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _subsequences(
    values: Tuple[int, ...], limit: int, rng: random.Random
) -> Iterator[Tuple[int, ...]]:
    yield ()
    for _ in range(limit):
        size = rng.randint(0, len(values))
        picks = sorted(rng.sample(range(len(values)), size))
        yield tuple(values[i] for i in picks)


SYMBOLIC_WITNESSES = (
    ("asc", OMEGA),
    ("asc;[0,1,2]", CnfOrdinal.omega_power(1, 2)),
    ("[3];asc;[5,0]", CnfOrdinal.omega_power(1, 2)),
    ("asc;asc", CnfOrdinal.omega_power(1, 2)),
)


def check_rank_props(
    trials: int = 1000, seed: Optional[int] = None, max_length: int = 8, max_value: int = 6
) -> RankPropsReport:
    """
    Check on random finite sequences that ranks are closed under subsequences and Δ
    and grow upwards in γ, then check that sequences of length μ+n are ≤ μ+ω.
    """
    rng = random.Random(seed)
    report = RankPropsReport()
    bounds = [CnfOrdinal.of(n) for n in range(max_value + 3)] + [OMEGA, OMEGA + 1]

    def fail(text: str) -> None:
        _LOG.info("Rank property failed: %s", text)
        report.failures.append(text)

    for _ in range(trials):
        report.trials += 1
        values = tuple(rng.randint(0, max_value) for _ in range(rng.randint(0, max_length)))
        seq = SymbolicSeq.finite(values)
        for gamma in bounds:
            if not rank_leq(seq, gamma):
                continue
            report.checks += 3
            for sub in _subsequences(values, 3, rng):
                if not rank_leq(SymbolicSeq.finite(sub), gamma):
                    fail("subsequence %r of %s escapes %s" % (sub, seq, gamma))
            if not rank_leq(delta_sym(seq), gamma):
                fail("delta of %s escapes %s" % (seq, gamma))
            if not all(rank_leq(seq, above) for above in bounds if gamma < above):
                fail("%s is not below everything above %s" % (seq, gamma))
    for text, gamma in SYMBOLIC_WITNESSES:
        report.checks += 1
        seq = parse_seq(text)
        if not rank_leq(seq, gamma):
            fail("%s of length %s is not <= %s" % (text, seq.length(), gamma))
    return report


def check_against_brute_force(max_length: int, max_value: int) -> List[Tuple[int, ...]]:
    """
    Every finite sequence up to the given length and entry size on which the symbolic
    decision disagrees with the literal one for some finite bound.
    """
    disagreements = []
    for length in range(max_length + 1):
        for values in _all_sequences(length, max_value):
            seq = SymbolicSeq.finite(values)
            for bound in range(max_value + 3):
                if rank_leq(seq, bound) != brute_rank_leq(values, bound):
                    disagreements.append(values)
                    break
    return disagreements


def _all_sequences(length: int, max_value: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for head in range(max_value + 1):
        for rest in _all_sequences(length - 1, max_value):
            yield (head,) + rest

