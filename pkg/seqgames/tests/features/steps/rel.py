from typing import Any, Tuple

from behave import given, then, when  # type: ignore

from seqgames.exceptions import PreconditionFailed
from seqgames.rel import (
    INL,
    READ,
    TERMINATE,
    UNIT_SET,
    WRITE,
    FinSet,
    Relation,
    alpha_star,
    ana_rel,
    cell_rel,
    check_finality,
    check_universal_property,
    comonoid_failures,
    comonoid_parts,
    dump_relation,
    encapsulate,
    f_on_object,
    format_atom,
    identity,
    is_commutative,
    word_comonoid,
)
from seqgames.suites.rel import broken_comonoid, unit_comonoid

# pylint: disable=function-redefined

ACTIONS = dict(read=READ, write=WRITE)


def _atoms(text: str) -> FinSet:
    return FinSet.of(part.strip() for part in text.strip("{}").split(",") if part.strip())


def _trace(text: str) -> Tuple[Any, ...]:
    steps = []
    for part in text.split(","):
        action, value = part.split()
        steps.append((ACTIONS[action], value))
    return tuple(steps)


@given("the alphabet {letters}")
def step(context: Any, letters: str) -> None:
    context.data["alphabet"] = _atoms(letters)


@given("the coalgebra on {state} that may emit {letter} and stay or stop")  # type: ignore[no-redef]
def step(context: Any, state: str, letter: str) -> None:
    states = FinSet((state,))
    target = f_on_object(context.data["alphabet"], states)
    pairs = frozenset({(state, (INL, letter, state)), (state, TERMINATE)})
    context.data["coalgebra"] = Relation(states, target, pairs)


@given("the cell values {values}")  # type: ignore[no-redef]
def step(context: Any, values: str) -> None:
    context.data["values"] = _atoms(values)
    context.data["cell"] = cell_rel(context.data["values"])


@when("we build alpha with words up to length {bound:d}")  # type: ignore[no-redef]
def step(context: Any, bound: int) -> None:
    context.data["relation"] = alpha_star(context.data["alphabet"], bound)


@when("we take its anamorphism up to length {bound:d}")  # type: ignore[no-redef]
def step(context: Any, bound: int) -> None:
    context.data["relation"] = ana_rel(
        context.data["coalgebra"], context.data["alphabet"], bound
    )


@when("we build the word comonoid up to length {bound:d}")  # type: ignore[no-redef]
def step(context: Any, bound: int) -> None:
    context.data["comonoid"] = word_comonoid(context.data["alphabet"], bound)
    context.data["bound"] = bound


@when(  # type: ignore[no-redef]
    "we encapsulate the cell and unfold it up to length {bound:d}"
)
def step(context: Any, bound: int) -> None:
    values = context.data["values"]
    actions = FinSet(tuple((READ, v) for v in values) + tuple((WRITE, v) for v in values))
    context.data["relation"] = ana_rel(encapsulate(context.data["cell"]), actions, bound)


@then("the relation is")  # type: ignore[no-redef]
def step(context: Any) -> None:
    dumped = dump_relation(context.data["relation"])
    assert dumped == context.text.strip() + "\n", dumped


@then("the relation has {count:d} pairs")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    pairs = context.data["relation"].pairs
    assert len(pairs) == count, "%d pairs" % len(pairs)


@then(  # type: ignore[no-redef]
    "every coalgebra on the states {states} has exactly one map into words of length {bound:d}"
)
def step(context: Any, states: str, bound: int) -> None:
    failing = check_finality(context.data["alphabet"], _atoms(states), bound)
    assert failing is None, dump_relation(failing) if failing else ""


@then("the comonoid laws hold")  # type: ignore[no-redef]
def step(context: Any) -> None:
    failures = comonoid_failures(context.data["comonoid"])
    assert not failures, failures


@then("the comultiplication is commutative")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert is_commutative(context.data["comonoid"])


@then("the comultiplication is not commutative")  # type: ignore[no-redef]
def step(context: Any) -> None:
    assert not is_commutative(context.data["comonoid"])


@then("the cell relation has {count:d} pairs")  # type: ignore[no-redef]
def step(context: Any, count: int) -> None:
    assert len(context.data["cell"].pairs) == count, dump_relation(context.data["cell"])


def _relates(relation: Relation, source: str, target: str) -> bool:
    return any(
        format_atom(left) == source and format_atom(right) == target
        for left, right in relation.pairs
    )


@then("the cell relates {source} to {target}")  # type: ignore[no-redef]
def step(context: Any, source: str, target: str) -> None:
    assert _relates(context.data["cell"], source, target), dump_relation(context.data["cell"])


@then("the cell does not relate {source} to {target}")  # type: ignore[no-redef]
def step(context: Any, source: str, target: str) -> None:
    assert not _relates(context.data["cell"], source, target)


@then("the state {state} has the trace {trace}")  # type: ignore[no-redef]
def step(context: Any, state: str, trace: str) -> None:
    assert (state, _trace(trace)) in context.data["relation"].pairs


@then("the state {state} does not have the trace {trace}")  # type: ignore[no-redef]
def step(context: Any, state: str, trace: str) -> None:
    assert (state, _trace(trace)) not in context.data["relation"].pairs


@then(  # type: ignore[no-redef]
    "the point {value} of {target} lifts uniquely to words of length {bound:d}"
)
def step(context: Any, value: str, target: str, bound: int) -> None:
    point = Relation(UNIT_SET, _atoms(target), frozenset({(UNIT_SET.elements[0], value)}))
    report = check_universal_property(unit_comonoid(), point, bound)
    assert report.passed and report.solutions == 1, report


@then(  # type: ignore[no-redef]
    "the empty map into {target} lifts uniquely to words of length {bound:d}"
)
def step(context: Any, target: str, bound: int) -> None:
    report = check_universal_property(unit_comonoid(), Relation(UNIT_SET, _atoms(target)), bound)
    assert report.passed and report.solutions == 1, report


@then("the one-letter words lift to the identity")  # type: ignore[no-redef]
def step(context: Any) -> None:
    comonoid = context.data["comonoid"]
    _, _, eta = comonoid_parts(context.data["alphabet"], context.data["bound"])
    report = check_universal_property(comonoid, eta, context.data["bound"])
    assert report.passed, report
    assert report.lifting.pairs == identity(comonoid.carrier).pairs, dump_relation(report.lifting)


@then(  # type: ignore[no-redef]
    "the universal property is refused for a comultiplication with no counit"
)
def step(context: Any) -> None:
    try:
        check_universal_property(broken_comonoid(), Relation(UNIT_SET, _atoms("0,1")), 2)
    except PreconditionFailed:
        return
    raise AssertionError("A structure without a counit should be refused")
