from typing import Any, Dict, List, Tuple

from behave import given, then  # type: ignore
from hypothesis import given as for_all
from hypothesis import settings
from hypothesis import strategies as st

from seqgames.exceptions import GameSyntaxError, UnsupportedOrdinalError, ZetaError
from seqgames.expr import SIGMA, parse_dsl
from seqgames.transfinite import (
    CnfOrdinal,
    length_sup,
    ord_add,
    ord_cmp,
    parse_ordinal,
    parse_seq,
    rank_leq,
    zeta_eval,
    zeta_formula,
)
from seqgames.transfinite.sequences import (
    Asc,
    Block,
    Fin,
    SymbolicSeq,
    brute_rank_leq,
    check_rank_props,
)
from seqgames.transfinite.win import BangView, LeafView, PairView, View, exponential_witness

# pylint: disable=function-redefined

ORDINALS = st.dictionaries(st.integers(0, 3), st.integers(1, 4), max_size=3).map(
    lambda terms: CnfOrdinal(sorted(terms.items(), reverse=True))
)
BELOW_OMEGA_SQUARED = st.tuples(st.integers(0, 3), st.integers(0, 6)).map(
    lambda pair: CnfOrdinal.omega_power(1, pair[0]) + pair[1] if pair[0] else CnfOrdinal.of(pair[1])
)
FINITE_VALUES = st.lists(st.integers(0, 5), max_size=6)
BLOCKS: st.SearchStrategy[Block] = st.one_of(
    st.just(Asc()), FINITE_VALUES.map(lambda values: Fin(tuple(values)))
)
SEQUENCES = st.lists(BLOCKS, max_size=4).map(lambda blocks: SymbolicSeq(tuple(blocks)))
PROPERTY_SETTINGS = settings(max_examples=200, deadline=None)


def parse_view(text: str) -> View:
    """
    ``empty``, ``leaf <moves>``, ``pair of <view> and <view>``,
    ``copies <view> and <view>`` or ``infinitely many copies of <view>``.
    """
    text = text.strip()
    if text == "empty":
        return None
    if text.startswith("leaf"):
        return LeafView(tuple(text.split()[1:]))
    if text.startswith("pair of "):
        left, right = text[len("pair of ") :].split(" and ", 1)
        return PairView(parse_view(left), parse_view(right))
    if text.startswith("infinitely many copies of "):
        return BangView({}, True, parse_view(text[len("infinitely many copies of ") :]))
    if text.startswith("copies "):
        parts = text[len("copies ") :].split(" and ")
        copies: Dict[int, View] = {i: parse_view(part) for i, part in enumerate(parts)}
        return BangView(copies)
    raise ValueError("Cannot read a position from %r" % text)


@then("{left} plus {right} is {total}")
def step(context: Any, left: str, right: str, total: str) -> None:
    added = ord_add(parse_ordinal(left), parse_ordinal(right))
    assert str(added) == total, "%s + %s = %s" % (left, right, added)


@then("comparing {left} with {right} gives {sign}")  # type: ignore[no-redef]
def step(context: Any, left: str, right: str, sign: str) -> None:
    compared = ord_cmp(parse_ordinal(left), parse_ordinal(right))
    assert compared == int(sign), compared


@then("the ordinal {text} does not parse")  # type: ignore[no-redef]
def step(context: Any, text: str) -> None:
    try:
        parse_ordinal(text)
    except GameSyntaxError:
        return
    raise AssertionError("%s should not parse" % text)


@then("ordinal addition is associative on generated ordinals")  # type: ignore[no-redef]
def step(context: Any) -> None:
    @PROPERTY_SETTINGS
    @for_all(ORDINALS, ORDINALS, ORDINALS)
    def associative(a: CnfOrdinal, b: CnfOrdinal, c: CnfOrdinal) -> None:
        assert (a + b) + c == a + (b + c), (a, b, c)

    associative()


@then("every generated sum is at least each summand")  # type: ignore[no-redef]
def step(context: Any) -> None:
    @PROPERTY_SETTINGS
    @for_all(ORDINALS, ORDINALS)
    def bounded(a: CnfOrdinal, b: CnfOrdinal) -> None:
        total = a + b
        assert a <= total and b <= total, (a, b, total)

    bounded()


@then("deciding {sequence} below {ordinal} gives {decided}")  # type: ignore[no-redef]
def step(context: Any, sequence: str, ordinal: str, decided: str) -> None:
    result = rank_leq(parse_seq(sequence), parse_ordinal(ordinal))
    assert str(result).lower() == decided, "%s <= %s decided %s" % (sequence, ordinal, result)


@then(  # type: ignore[no-redef]
    "deciding {sequence} below {ordinal} raises an unsupported ordinal error"
)
def step(context: Any, sequence: str, ordinal: str) -> None:
    try:
        rank_leq(parse_seq(sequence), parse_ordinal(ordinal))
    except UnsupportedOrdinalError:
        return
    raise AssertionError("Ranks at %s should be unsupported" % ordinal)


@then(  # type: ignore[no-redef]
    "the rank of generated finite sequences agrees with the definition"
)
def step(context: Any) -> None:
    @PROPERTY_SETTINGS
    @for_all(FINITE_VALUES, st.integers(0, 8))
    def agrees(values: List[int], bound: int) -> None:
        symbolic = rank_leq(SymbolicSeq.finite(values), bound)
        assert symbolic == brute_rank_leq(values, bound), (values, bound)

    agrees()


@then(  # type: ignore[no-redef]
    "a generated sequence below a rank is below every larger rank"
)
def step(context: Any) -> None:
    @PROPERTY_SETTINGS
    @for_all(SEQUENCES, BELOW_OMEGA_SQUARED, BELOW_OMEGA_SQUARED)
    def monotone(seq: SymbolicSeq, first: CnfOrdinal, second: CnfOrdinal) -> None:
        low, high = sorted((first, second))
        if rank_leq(seq, low):
            assert rank_leq(seq, high), (str(seq), str(low), str(high))

    monotone()


@then(  # type: ignore[no-redef]
    "the rank properties hold for {trials:d} trials with seed {seed:d}"
)
def step(context: Any, trials: int, seed: int) -> None:
    report = check_rank_props(trials, seed)
    assert report.passed, report.failures[:3]
    assert report.trials == trials


@then("plays of {game} are at most {length} long")  # type: ignore[no-redef]
def step(context: Any, game: str, length: str) -> None:
    bound = length_sup(parse_dsl(game))
    assert str(bound) == length, "%s has plays up to %s" % (game, bound)


@then("the length of {game} is unsupported")  # type: ignore[no-redef]
def step(context: Any, game: str) -> None:
    try:
        length_sup(parse_dsl(game))
    except UnsupportedOrdinalError:
        return
    raise AssertionError("%s should have no length bound" % game)


@then(  # type: ignore[no-redef]
    "the exponential witness on sigma and sigma is {tensored} against {product}"
)
def step(context: Any, tensored: str, product: str) -> None:
    lengths: Tuple[CnfOrdinal, CnfOrdinal] = exponential_witness(SIGMA, SIGMA)
    assert (str(lengths[0]), str(lengths[1])) == (tensored, product), lengths


@given("the win formula of {game}")  # type: ignore[no-redef]
def step(context: Any, game: str) -> None:
    context.data["formula"] = zeta_formula(parse_dsl(game))


@given("the lollipop win formula of {game}")  # type: ignore[no-redef]
def step(context: Any, game: str) -> None:
    context.data["formula"] = zeta_formula(parse_dsl(game), lollipop=True)


@then("the position {view} is won by {player}")  # type: ignore[no-redef]
def step(context: Any, view: str, player: str) -> None:
    label = zeta_eval(context.data["formula"], parse_view(view))
    assert label == player, "%s is won by %s" % (view, label)


@then("the position {view} cannot be labelled")  # type: ignore[no-redef]
def step(context: Any, view: str) -> None:
    try:
        zeta_eval(context.data["formula"], parse_view(view))
    except ZetaError:
        return
    raise AssertionError("%s should not fit the formula" % view)
