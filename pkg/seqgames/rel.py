"""
The category of finite sets and relations, graded by word length: the functor
F(A,S) = (A⊗S)⊕I, its final coalgebra on words, anamorphic encapsulation of state and
the cofree comonoid on words.

Words are tuples of atoms and every word set is cut off at a length bound, so all
constructions here are finite and can be checked exhaustively.
"""

import logging
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Iterator,
    List,
    Optional,
    Set,
    Tuple,
)

from .constants import UNIT_ATOM
from .exceptions import ConstructionError, HostMismatchError, PreconditionFailed, ResourceError

_LOG = logging.getLogger(__name__)

Atom = Hashable
Pair = Tuple[Atom, Atom]
Word = Tuple[Atom, ...]

INL = "inl"
INR = "inr"
READ = "read"
WRITE = "write"
TERMINATE = (INR, UNIT_ATOM)

# Brute force uniqueness searches stay below this many candidate pairs.
MAX_SEARCH_PAIRS = 16


@dataclass(frozen=True)
class FinSet:
    """
    A finite set of distinct atoms, kept in a fixed order.
    """

    elements: Tuple[Atom, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ConstructionError("Duplicate atoms in %r" % (self.elements,))

    def __contains__(self, atom: object) -> bool:
        return atom in self.elements

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def of(cls, atoms: Iterable[Atom]) -> "FinSet":
        """
        A set from any iterable, dropping repeats.
        """
        return cls(tuple(dict.fromkeys(atoms)))


UNIT_SET = FinSet((UNIT_ATOM,))


@dataclass(frozen=True)
class Relation:
    """
    A set of pairs between two finite sets.
    """

    source: FinSet
    target: FinSet
    pairs: FrozenSet[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for left, right in self.pairs:
            if left not in self.source or right not in self.target:
                raise ConstructionError(
                    "Pair %s -> %s lies outside the relation's source or target"
                    % (format_atom(left), format_atom(right))
                )

    def image(self, atom: Atom) -> List[Atom]:
        """
        Everything ``atom`` is related to, in target order.
        """
        return [b for b in self.target if (atom, b) in self.pairs]

    def restrict(self, keep: Callable[[Pair], bool]) -> "Relation":
        """
        The pairs satisfying ``keep``.
        """
        return Relation(self.source, self.target, frozenset(p for p in self.pairs if keep(p)))


def identity(obj: FinSet) -> Relation:
    """
    The diagonal on ``obj``.
    """
    return Relation(obj, obj, frozenset((a, a) for a in obj))


def rel_compose(first: Relation, second: Relation) -> Relation:
    """
    Diagrammatic composite: a relates to c when some b has (a,b) in ``first`` and
    (b,c) in ``second``.
    """
    if first.target != second.source:
        raise HostMismatchError(
            "Cannot compose relations: target of size %d differs from source of size %d"
            % (len(first.target), len(second.source))
        )
    forward: Dict[Atom, Set[Atom]] = {}
    for middle, right in second.pairs:
        forward.setdefault(middle, set()).add(right)
    pairs = frozenset(
        (left, right) for left, middle in first.pairs for right in forward.get(middle, ())
    )
    return Relation(first.source, second.target, pairs)


def tensor(left: FinSet, right: FinSet) -> FinSet:
    """
    The cartesian product, as pairs.
    """
    return FinSet(tuple(product(left, right)))


def rel_tensor(first: Relation, second: Relation) -> Relation:
    """
    r⊗s relates (a,c) to (b,d) when r relates a to b and s relates c to d.
    """
    pairs = frozenset(
        ((a, c), (b, d)) for a, b in first.pairs for c, d in second.pairs
    )
    return Relation(
        tensor(first.source, second.source), tensor(first.target, second.target), pairs
    )


def symmetry(left: FinSet, right: FinSet) -> Relation:
    """
    A⊗B ≅ B⊗A.
    """
    return Relation(
        tensor(left, right),
        tensor(right, left),
        frozenset(((a, b), (b, a)) for a, b in product(left, right)),
    )


def associator(a: FinSet, b: FinSet, c: FinSet) -> Relation:
    """
    (A⊗B)⊗C ≅ A⊗(B⊗C).
    """
    return Relation(
        tensor(tensor(a, b), c),
        tensor(a, tensor(b, c)),
        frozenset((((x, y), z), (x, (y, z))) for x, y, z in product(a, b, c)),
    )


def left_unitor(obj: FinSet) -> Relation:
    """
    I⊗A ≅ A.
    """
    return Relation(
        tensor(UNIT_SET, obj), obj, frozenset(((UNIT_ATOM, a), a) for a in obj)
    )


def right_unitor(obj: FinSet) -> Relation:
    """
    A⊗I ≅ A.
    """
    return Relation(
        tensor(obj, UNIT_SET), obj, frozenset(((a, UNIT_ATOM), a) for a in obj)
    )


def f_on_object(alphabet: FinSet, states: FinSet) -> FinSet:
    """
    F(A,S) = (A⊗S)⊕I with atoms ``(inl, a, s)`` and ``(inr, *)``.
    """
    return FinSet(tuple((INL, a, s) for a, s in product(alphabet, states)) + (TERMINATE,))


def words(alphabet: FinSet, bound: int) -> FinSet:
    """
    Every word over ``alphabet`` of length at most ``bound``, shortest first.
    """
    if bound < 0:
        raise ValueError("Word length bound must not be negative, got %d" % bound)
    return FinSet(
        tuple(chain.from_iterable(product(alphabet, repeat=n) for n in range(bound + 1)))
    )


def alpha_star(alphabet: FinSet, bound: int) -> Relation:
    """
    α: A* ⊸ F(A,A*): the empty word terminates and ``a·w`` unfolds to ``inl(a, w)``.
    """
    if bound < 1:
        raise ValueError("alpha_star needs a bound of at least 1, got %d" % bound)
    source = words(alphabet, bound)
    target = f_on_object(alphabet, words(alphabet, bound - 1))
    pairs = {((), TERMINATE)}
    pairs.update((w, (INL, w[0], w[1:])) for w in source if w)
    return Relation(source, target, frozenset(pairs))


def _check_coalgebra(coalgebra: Relation, alphabet: FinSet) -> None:
    expected = f_on_object(alphabet, coalgebra.source)
    if set(coalgebra.target) != set(expected):
        raise HostMismatchError("Coalgebra target is not F(A, S) for its state set S")


def ana_rel(coalgebra: Relation, alphabet: FinSet, bound: int) -> Relation:
    """
    The anamorphism S ⊸ A* of a coalgebra S ⊸ F(A,S), up to words of length ``bound``:
    s is related to a₁…a_k when some unfolding emits a₁…a_k and then terminates.
    """
    _check_coalgebra(coalgebra, alphabet)
    target = words(alphabet, bound)
    pairs: Set[Pair] = set()
    frontier = {(s, s, ()) for s in coalgebra.source}
    while frontier:
        grown = set()
        for start, state, word in frontier:
            for image in coalgebra.image(state):
                if image == TERMINATE:
                    pairs.add((start, word))
                elif len(word) < bound:
                    _, letter, following = image  # type: ignore[misc]
                    grown.add((start, following, word + (letter,)))
        frontier = grown
    return Relation(coalgebra.source, target, frozenset(pairs))


def f_on_relation(alphabet: FinSet, relation: Relation) -> Relation:
    """
    F(A, r): (A⊗S)⊕I ⊸ (A⊗T)⊕I acting as r on the state and as the identity elsewhere.
    """
    pairs = {(TERMINATE, TERMINATE)}
    pairs.update(((INL, a, s), (INL, a, t)) for a in alphabet for s, t in relation.pairs)
    return Relation(
        f_on_object(alphabet, relation.source),
        f_on_object(alphabet, relation.target),
        frozenset(pairs),
    )


def _shorter(bound: int) -> Callable[[Pair], bool]:
    def keep(pair: Pair) -> bool:
        return len(pair[1]) <= bound  # type: ignore[arg-type]

    return keep


def ana_square(
    coalgebra: Relation, alphabet: FinSet, candidate: Relation, bound: int
) -> Tuple[Relation, Relation]:
    """
    Both legs of the anamorphism square for a candidate S ⊸ A*: candidate;α against
    f;F(A, candidate), each landing in F(A, words of length below ``bound``).
    """
    via_alpha = rel_compose(candidate, alpha_star(alphabet, bound))
    shortened = Relation(
        candidate.source,
        words(alphabet, bound - 1),
        candidate.restrict(_shorter(bound - 1)).pairs,
    )
    via_step = rel_compose(coalgebra, f_on_relation(alphabet, shortened))
    return via_alpha, via_step


def _subsets(pairs: List[Pair]) -> Iterator[FrozenSet[Pair]]:
    if len(pairs) > MAX_SEARCH_PAIRS:
        raise ResourceError(
            "Searching all relations over %d pairs is out of reach" % len(pairs)
        )
    return (
        frozenset(chosen)
        for size in range(len(pairs) + 1)
        for chosen in combinations(pairs, size)
    )


def square_solutions(coalgebra: Relation, alphabet: FinSet, bound: int) -> List[Relation]:
    """
    Every relation S ⊸ A* (words up to ``bound``) that makes the anamorphism square
    commute, found by exhaustive search.
    """
    target = words(alphabet, bound)
    space = list(product(coalgebra.source, target))
    found = []
    for chosen in _subsets(space):
        candidate = Relation(coalgebra.source, target, chosen)
        left, right = ana_square(coalgebra, alphabet, candidate, bound)
        if left.pairs == right.pairs:
            found.append(candidate)
    return found


def all_coalgebras(alphabet: FinSet, states: FinSet) -> Iterator[Relation]:
    """
    Every relation S ⊸ F(A,S).
    """
    target = f_on_object(alphabet, states)
    for chosen in _subsets(list(product(states, target))):
        yield Relation(states, target, chosen)


def check_finality(alphabet: FinSet, states: FinSet, bound: int) -> Optional[Relation]:
    """
    For every coalgebra on ``states``, check that exactly one relation closes the square
    and that it is the anamorphism. Returns the first coalgebra that fails.
    """
    for coalgebra in all_coalgebras(alphabet, states):
        solutions = square_solutions(coalgebra, alphabet, bound)
        if solutions != [ana_rel(coalgebra, alphabet, bound)]:
            _LOG.info("Finality fails for a coalgebra with %d pairs", len(coalgebra.pairs))
            return coalgebra
    return None


@dataclass(frozen=True)
class RelComonoid:
    """
    A comonoid in the category of relations.
    """

    carrier: FinSet
    delta: Relation
    counit: Relation


def comonoid_parts(alphabet: FinSet, bound: int) -> Tuple[Relation, Relation, Relation]:
    """
    δ (all splittings of a word), ε (the empty word) and η (one-letter words) on A*.
    """
    carrier = words(alphabet, bound)
    delta = Relation(
        carrier,
        tensor(carrier, carrier),
        frozenset(
            (w, (w[:i], w[i:]))  # type: ignore[index]
            for w in carrier
            for i in range(len(w) + 1)  # type: ignore[arg-type]
        ),
    )
    counit = Relation(carrier, UNIT_SET, frozenset({((), UNIT_ATOM)}))
    eta = Relation(carrier, alphabet, frozenset(((a,), a) for a in alphabet))
    return delta, counit, eta


def word_comonoid(alphabet: FinSet, bound: int) -> RelComonoid:
    """
    (A*, δ, ε) cut off at ``bound``.
    """
    delta, counit, _ = comonoid_parts(alphabet, bound)
    return RelComonoid(delta.source, delta, counit)


def comonoid_failures(comonoid: RelComonoid) -> List[str]:
    """
    The names of the comonoid equations that do not hold exactly.
    """
    carrier, delta, counit = comonoid.carrier, comonoid.delta, comonoid.counit
    same = identity(carrier)
    failures = []
    left = rel_compose(
        rel_compose(delta, rel_tensor(delta, same)), associator(carrier, carrier, carrier)
    )
    right = rel_compose(delta, rel_tensor(same, delta))
    if left.pairs != right.pairs:
        failures.append("coassociativity")
    left_unit = rel_compose(rel_compose(delta, rel_tensor(counit, same)), left_unitor(carrier))
    if left_unit.pairs != same.pairs:
        failures.append("left counit")
    right_unit = rel_compose(rel_compose(delta, rel_tensor(same, counit)), right_unitor(carrier))
    if right_unit.pairs != same.pairs:
        failures.append("right counit")
    return failures


def is_commutative(comonoid: RelComonoid) -> bool:
    """
    Whether δ;sym = δ.
    """
    swapped = rel_compose(comonoid.delta, symmetry(comonoid.carrier, comonoid.carrier))
    return swapped.pairs == comonoid.delta.pairs


def cell_rel(values: FinSet) -> Relation:
    """
    The cell as a state transformer V ⊸ (V⊕V)⊗V: reads return the state unchanged and
    writes replace it.
    """
    if not values.elements:
        raise ConstructionError("A cell needs at least one value")
    actions = FinSet(tuple((READ, v) for v in values) + tuple((WRITE, v) for v in values))
    pairs = {(i, ((READ, i), i)) for i in values}
    pairs.update((i, ((WRITE, j), j)) for i in values for j in values)
    return Relation(values, tensor(actions, values), frozenset(pairs))


def encapsulate(transformer: Relation) -> Relation:
    """
    f~ = f;inl ∪ {(s, inr *)}: a state transformer S ⊸ A⊗S as a coalgebra that may
    also stop at any point.
    """
    alphabet = FinSet.of(a for a, _ in transformer.target)  # type: ignore[misc]
    target = f_on_object(alphabet, transformer.source)
    pairs = {(s, (INL, a, t)) for s, (a, t) in transformer.pairs}  # type: ignore[misc]
    pairs.update((s, TERMINATE) for s in transformer.source)
    return Relation(transformer.source, target, frozenset(pairs))


def _splits(comonoid: RelComonoid, atom: Atom, count: int) -> Set[Tuple[Atom, ...]]:
    """
    δ^(count): the ways ``atom`` splits into ``count`` parts.
    """
    if count == 0:
        return {()} if comonoid.counit.image(atom) else set()
    if count == 1:
        return {(atom,)}
    found = set()
    for first, rest in comonoid.delta.image(atom):  # type: ignore[misc]
        for tail in _splits(comonoid, rest, count - 1):
            found.add((first,) + tail)
    return found


def lift(comonoid: RelComonoid, function: Relation, bound: int) -> Relation:
    """
    f‡: B ⊸ A* as the union over n of δ^(n);f^{⊗n}, up to words of length ``bound``.
    """
    alphabet = function.target
    pairs: Set[Pair] = set()
    for atom in comonoid.carrier:
        for count in range(bound + 1):
            for parts in _splits(comonoid, atom, count):
                images = [function.image(part) for part in parts]
                pairs.update((atom, word) for word in product(*images))
    return Relation(comonoid.carrier, words(alphabet, bound), frozenset(pairs))


def _is_lifting(
    comonoid: RelComonoid, function: Relation, candidate: Relation, bound: int
) -> bool:
    """
    Whether ``candidate`` is a comonoid morphism into A* that derelicts to ``function``.
    """
    delta, counit, eta = comonoid_parts(function.target, bound)
    if rel_compose(candidate, eta).pairs != function.pairs:
        return False
    if rel_compose(candidate, counit).pairs != comonoid.counit.pairs:
        return False
    via_words = rel_compose(candidate, delta)
    via_carrier = rel_compose(comonoid.delta, rel_tensor(candidate, candidate))
    fits = {
        p for p in via_carrier.pairs if len(p[1][0]) + len(p[1][1]) <= bound  # type: ignore[index]
    }
    return via_words.pairs == fits


@dataclass
class UniversalReport:
    """
    Outcome of checking the cofree comonoid property for one map.
    """

    lifting: Relation
    is_morphism: bool
    solutions: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """
        The lifting works and, when searched, is the only one.
        """
        return self.is_morphism and self.solutions in (None, 1)


def check_universal_property(
    comonoid: RelComonoid, function: Relation, bound: int
) -> UniversalReport:
    """
    Check that ``function``: B ⊸ A lifts to a comonoid morphism B ⊸ A* and, for small
    enough sets, that no other relation does.
    """
    failures = comonoid_failures(comonoid)
    if failures:
        raise PreconditionFailed("Not a comonoid: %s fails" % ", ".join(failures))
    if function.source != comonoid.carrier:
        raise HostMismatchError("The map does not start from the comonoid carrier")
    lifting = lift(comonoid, function, bound)
    report = UniversalReport(lifting, _is_lifting(comonoid, function, lifting, bound))
    if len(comonoid.carrier) <= 2 and len(function.target) <= 2 and bound <= 2:
        target = words(function.target, bound)
        space = list(product(comonoid.carrier, target))
        report.solutions = sum(
            1
            for chosen in _subsets(space)
            if _is_lifting(comonoid, function, Relation(comonoid.carrier, target, chosen), bound)
        )
    else:
        report.notes.append("uniqueness checked against the constructed lifting only")
    return report


def format_atom(atom: Atom) -> str:
    """
    Text form of an atom: tuples in parentheses, everything else as a string.
    """
    if isinstance(atom, tuple):
        return "(%s)" % ",".join(format_atom(part) for part in atom)
    return str(atom)


def dump_finset(obj: FinSet) -> str:
    """
    One atom per line, sorted.
    """
    return "".join("%s\n" % line for line in sorted(format_atom(a) for a in obj))


def dump_relation(relation: Relation) -> str:
    """
    One ``atom -> atom`` pair per line, sorted.
    """
    lines = sorted("%s -> %s" % (format_atom(a), format_atom(b)) for a, b in relation.pairs)
    return "".join("%s\n" % line for line in lines)
