"""
Stateful objects as anamorphisms: the reference cell Var[X] and a bounded stack,
each obtained by encapsulating a state transformer on !⟨state⟩.
"""

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .coalgebra import SequoidCoalgebra, alpha, ana
from .comonoid import bang_element, der
from .composition import compose, compose_all
from .connectives import (
    Case,
    dist,
    element,
    map_product,
    map_tensor,
    ok,
    runit,
    terminal,
    wk,
)
from .constants import DEFAULT_STACK_BOUND, QUESTION, RIGHT, SIGMA_VALUE
from .exceptions import ConstructionError, IllegalMoveError
from .expr import SIGMA, UNIT, Bang, Flat, GameExpr, Limp, Prod
from .moves import Move, Position, copy_tag, index_tag, tag_number
from .strategies import FunctionStrategy, Strategy

_LOG = logging.getLogger(__name__)

EMPTY = "empty"
EMPTY_STACK = "s"

Outcome = Callable[[List[str]], Tuple[str, List[str]]]


@dataclass(frozen=True)
class VarSpec:
    """
    A finite set of storable values with a default.
    """

    values: Tuple[str, ...]
    default: str

    def __post_init__(self) -> None:
        if not self.values:
            raise ConstructionError("A variable needs at least one value")
        if len(set(self.values)) != len(self.values):
            raise ConstructionError("Variable values must be distinct: %r" % (self.values,))
        if self.default not in self.values:
            raise ConstructionError(
                "Default %r is not one of %s" % (self.default, ",".join(self.values))
            )

    @classmethod
    def parse(cls, values: str, default: Optional[str] = None) -> "VarSpec":
        """
        Build from a comma separated value list; the default defaults to the first value.
        """
        parsed = tuple(v.strip() for v in values.split(",") if v.strip())
        return cls(parsed, default if default is not None else (parsed[0] if parsed else ""))

    @property
    def flat(self) -> Flat:
        """
        ⟨X⟩.
        """
        return Flat(self.values)


@dataclass(frozen=True)
class ObjectInterface:
    """
    The method names of an object and the product factor each one is played in.
    """

    game: Prod
    methods: Dict[str, int]

    def opening(self, copy: int, method: str) -> Move:
        """
        The O-move that invokes ``method`` in copy ``copy`` of !game.
        """
        try:
            factor = self.methods[method]
        except KeyError as exc:
            raise IllegalMoveError(
                "Unknown method %r; expected one of %s" % (method, ", ".join(self.methods))
            ) from exc
        return Move((RIGHT, copy_tag(copy), index_tag(factor)), QUESTION)


def var_game(spec: VarSpec) -> Prod:
    """
    Var[X] = Σ^X × ⟨X⟩: one write command per value, then the read.
    """
    return Prod(tuple(SIGMA for _ in spec.values) + (spec.flat,))


def var_interface(spec: VarSpec) -> ObjectInterface:
    """
    ``write <x>`` for each value and ``read``.
    """
    methods = {"write %s" % value: i for i, value in enumerate(spec.values)}
    methods["read"] = len(spec.values)
    return ObjectInterface(var_game(spec), methods)


def overwrite(state: Flat, payload: GameExpr, answer: Strategy, new_state: str) -> Strategy:
    """
    !S ⊸ P⊘!S that ignores the current state, answers with ``answer`` and leaves
    !⟨new_state⟩ behind.
    """
    return compose(terminal(Bang(state)), refill(state, payload, answer, new_state))


def refill(state: Flat, payload: GameExpr, answer: Strategy, new_state: str) -> Strategy:
    """
    I ⊸ P⊘!S: runit⁻¹;(answer⊗!⟨new_state⟩);wk.
    """
    return compose_all(
        runit(UNIT).inverse,
        map_tensor(answer, bang_element(element(state, new_state))),
        wk(payload, Bang(state)).forward,
    )


def write(spec: VarSpec, value: str) -> Strategy:
    """
    write_x: !⟨X⟩ ⊸ Σ⊘!⟨X⟩, throwing the old state away.
    """
    result = overwrite(spec.flat, SIGMA, ok(), value)
    result.name = "write_%s" % value
    return result


def read(spec: VarSpec) -> Strategy:
    """
    read = α_⟨X⟩.
    """
    return alpha(spec.flat)


def _transformer(
    state: Flat, interface_game: Prod, branches: Sequence[Strategy]
) -> SequoidCoalgebra:
    factors = list(interface_game.factors)
    step = compose(map_product(branches), dist(factors, Bang(state)).inverse)
    return SequoidCoalgebra(Bang(state), interface_game, step)


def cell_transformer(spec: VarSpec) -> SequoidCoalgebra:
    """
    cell_ST: !⟨X⟩ ⊸ Var[X]⊘!⟨X⟩, pairing the writes with the read.
    """
    branches = [write(spec, value) for value in spec.values] + [read(spec)]
    return _transformer(spec.flat, var_game(spec), branches)


def cell_init(spec: VarSpec) -> Strategy:
    """
    !⟨X⟩ ⊸ !Var[X], the anamorphism of cell_ST.
    """
    return ana(cell_transformer(spec))


def cell(spec: VarSpec) -> Strategy:
    """
    I ⊸ !Var[X]: the cell initialised with the default value.
    """
    result = compose(bang_element(element(spec.flat, spec.default)), cell_init(spec))
    result.name = "cell"
    return result


def _invocations(position: Position) -> Iterator[Tuple[int, int]]:
    """
    (copy, factor) for each O-move of a play on I ⊸ !P.
    """
    for move in position[::2]:
        yield tag_number(move.path[1]), tag_number(move.path[2])


def combinatorial_cell(spec: VarSpec) -> Strategy:
    """
    The cell written out directly: a write is acknowledged at once and a read answers
    the most recently written value, or the default.
    """
    read_factor = len(spec.values)

    def respond(position: Position) -> Optional[Move]:
        current, answer = spec.default, spec.default
        for _, factor in _invocations(position):
            if factor == read_factor:
                answer = current
            else:
                current, answer = spec.values[factor], SIGMA_VALUE
        return Move(position[-1].path, answer)

    return FunctionStrategy(Limp(UNIT, Bang(var_game(spec))), respond, "combinatorial-cell")


def stack_states(spec: VarSpec, bound: int) -> Flat:
    """
    ⟨X^{≤K}⟩, naming each stack by its contents from the top: ``s``, ``s_1``, ``s_1_0``.
    """
    if bound < 0:
        raise ValueError("Stack bound must not be negative, got %d" % bound)
    if any("_" in value for value in spec.values):
        raise ConstructionError("Stack values may not contain '_': %r" % (spec.values,))
    names = [EMPTY_STACK]
    for size in range(1, bound + 1):
        for contents in cartesian(spec.values, repeat=size):
            names.append("_".join((EMPTY_STACK,) + contents))
    return Flat(tuple(names))


def _stack_contents(state: str) -> List[str]:
    return state.split("_")[1:]


def _stack_state(contents: Sequence[str]) -> str:
    return "_".join([EMPTY_STACK] + list(contents))


def stack_game(spec: VarSpec) -> Prod:
    """
    Σ^X × ⟨X + empty⟩: one push command per value, then pop.
    """
    if EMPTY in spec.values:
        raise ConstructionError("%r is reserved for popping an empty stack" % EMPTY)
    return Prod(tuple(SIGMA for _ in spec.values) + (Flat(spec.values + (EMPTY,)),))


def stack_interface(spec: VarSpec) -> ObjectInterface:
    """
    ``push <x>`` for each value and ``pop``.
    """
    methods = {"push %s" % value: i for i, value in enumerate(spec.values)}
    methods["pop"] = len(spec.values)
    return ObjectInterface(stack_game(spec), methods)


def _by_state(states: Flat, payload: Flat, outcome: Outcome, name: str) -> Strategy:
    """
    der;case: read the current stack, then answer and store the successor.
    """
    branches = {}
    for state in states.values:
        answer, successor = outcome(_stack_contents(state))
        branches[state] = refill(
            states, payload, element(payload, answer), _stack_state(successor)
        )
    result = compose(der(states), Case(states, branches, name))
    result.name = name
    return result


def stack_transformer(spec: VarSpec, bound: int = DEFAULT_STACK_BOUND) -> SequoidCoalgebra:
    """
    The state transformer of a stack holding at most ``bound`` values. Pushing onto a
    full stack leaves it unchanged and popping an empty one answers ``empty``.
    """
    states = stack_states(spec, bound)
    game = stack_game(spec)
    pop_game = Flat(spec.values + (EMPTY,))

    def pusher(value: str) -> Outcome:
        def outcome(contents: List[str]) -> Tuple[str, List[str]]:
            if len(contents) >= bound:
                return SIGMA_VALUE, contents
            return SIGMA_VALUE, [value] + contents

        return outcome

    def pop(contents: List[str]) -> Tuple[str, List[str]]:
        if not contents:
            return EMPTY, contents
        return contents[0], contents[1:]

    branches = [
        _by_state(states, SIGMA, pusher(value), "push_%s" % value) for value in spec.values
    ]
    branches.append(_by_state(states, pop_game, pop, "pop"))
    return _transformer(states, game, branches)


def stack(spec: VarSpec, bound: int = DEFAULT_STACK_BOUND) -> Strategy:
    """
    I ⊸ !Stack: the stack object started empty.
    """
    states = stack_states(spec, bound)
    start = bang_element(element(states, EMPTY_STACK))
    result = compose(start, ana(stack_transformer(spec, bound)))
    result.name = "stack"
    return result


def combinatorial_stack(spec: VarSpec, bound: int = DEFAULT_STACK_BOUND) -> Strategy:
    """
    The bounded stack written out directly by replaying the history.
    """
    pop_factor = len(spec.values)

    def respond(position: Position) -> Optional[Move]:
        contents: List[str] = []
        answer = EMPTY
        for _, factor in _invocations(position):
            if factor == pop_factor:
                answer = contents.pop(0) if contents else EMPTY
            else:
                if len(contents) < bound:
                    contents.insert(0, spec.values[factor])
                answer = SIGMA_VALUE
        return Move(position[-1].path, answer)

    return FunctionStrategy(Limp(UNIT, Bang(stack_game(spec))), respond, "combinatorial-stack")


def parse_script(script: str) -> List[str]:
    """
    Split ``"write 1; read"`` into method invocations.
    """
    return [" ".join(part.split()) for part in script.split(";") if part.strip()]


def run_script(
    strategy: Strategy, interface: ObjectInterface, script: Sequence[str]
) -> Tuple[Position, List[Tuple[str, Optional[str]]]]:
    """
    Invoke each method in a fresh copy of the object and collect the answers. A method
    that gets no answer ends the run.
    """
    position: Position = ()
    answers: List[Tuple[str, Optional[str]]] = []
    for copy, method in enumerate(script):
        position += (interface.opening(copy, method),)
        response = strategy.respond(position)
        answers.append((method, None if response is None else response.base))
        if response is None:
            _LOG.warning("%s gave no answer to %s", strategy.name, method)
            break
        position += (response,)
    return position, answers


def check_write_read(spec: VarSpec, strategy: Strategy, depth: int) -> Optional[Position]:
    """
    Play every read/write schedule of at most ``depth`` moves and return the first
    position where a read does not answer the last written value (or the default).
    """
    interface = var_interface(spec)
    methods = sorted(interface.methods)
    for length in range(1, depth // 2 + 1):
        for schedule in cartesian(methods, repeat=length):
            position, answers = run_script(strategy, interface, schedule)
            current = spec.default
            for method, answer in answers:
                if method == "read":
                    if answer != current:
                        return position
                else:
                    current = method.split(" ", 1)[1]
                    if answer != SIGMA_VALUE:
                        return position
    return None
