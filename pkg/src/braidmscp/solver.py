"""Simultaneous conjugacy search in braid groups via minimal conjugator sets.

The problem: given tuples alpha = (a_1, ..., a_r) and beta = (b_1, ..., b_r)
with beta = x^-1 alpha x entrywise for some unknown braid x, recover such an
x.  The search space is the set of tuples conjugate to alpha whose entries
all keep infimum at least a fixed floor J; chains of conjugations by simple
elements connect any two members of that set, so a breadth-first search that
conjugates by simple elements and deduplicates on canonical normal forms is
complete and reconstructs a conjugator from its parent edges.

The crucial economy: instead of conjugating every visited tuple by all n!
simple elements, for each generator index i we compute the minimal simple
element divisible by letter i whose conjugation respects the floor.  Those
minimal elements (at most n-1 of them, since the floor-respecting property is
closed under meet) suffice to keep the search complete, and each is found by
a short ascent: starting from the bare generator, repeatedly absorb the
complement forced by an entry that rejects the candidate, until every entry
passes.  The candidate grows strictly while staying below the true minimum,
so the ascent ends within half-twist length many steps.
"""

from __future__ import annotations

import dataclasses
import enum
from collections import deque

from .braid import (
    BraidWord,
    Perm,
    SimpleElement,
    _gen_perm,
    _id_perm,
    _inv_count,
    _inversions,
    _left_complement_perm,
    _tau_pow_perm,
    check_same_strands,
    simple_to_word,
    word_concat,
)
from .errors import (
    InvalidParams,
    LengthMismatch,
    NotInFloor,
    NotSimple,
    StrandMismatch,
    VerificationFailed,
)
from .normal_form import (
    NormalForm,
    _positive_times_simple,
    _simple,
    conjugate,
    invert,
    multiply,
    nf_key,
    normalize,
)

InfFloor = tuple[int, ...]

DEFAULT_NODE_CAP = 10**6


@dataclasses.dataclass(frozen=True)
class BraidTuple:
    """An r-tuple of braids in normal form, all on the same strand count."""

    n: int
    entries: tuple[NormalForm, ...]

    def __post_init__(self):
        if not self.entries:
            raise InvalidParams("a braid tuple needs at least one entry")
        for e in self.entries:
            if e.n != self.n:
                raise StrandMismatch(f"entry on {e.n} strands in a tuple on {self.n}")

    @property
    def r(self) -> int:
        return len(self.entries)


def tuple_from_words(n: int, words) -> BraidTuple:
    return BraidTuple(n, tuple(normalize(w) for w in words))


def inf_vector(t: BraidTuple) -> InfFloor:
    return tuple(e.inf for e in t.entries)


def tuple_key(t: BraidTuple) -> str:
    """Canonical serialization; sound dedup key by uniqueness of normal forms."""
    return " ; ".join(nf_key(e) for e in t.entries)


def meets_floor(t: BraidTuple, floor: InfFloor) -> bool:
    """Whether every entry has infimum at least the floor value."""
    if len(floor) != t.r:
        raise LengthMismatch(f"floor of length {len(floor)} against a {t.r}-tuple")
    return all(e.inf >= j for e, j in zip(t.entries, floor))


def conjugate_tuple(t: BraidTuple, s: SimpleElement) -> BraidTuple:
    check_same_strands(t, s)
    return BraidTuple(t.n, tuple(conjugate(e, s) for e in t.entries))


def _active_entries(t: BraidTuple, floor: InfFloor) -> list[tuple[int, tuple[Perm, ...]]]:
    """Floor parity and positive-part factors of the entries sitting on the floor.

    Conjugating by a simple element lowers an infimum by at most one, so
    entries strictly above the floor can never fall below it and are skipped.
    For an entry D^j p with j on the floor, the conjugate keeps the floor
    exactly when tau^j(s) divides p*s, so only the positive part p matters.
    """
    if not meets_floor(t, floor):
        raise NotInFloor("tuple does not satisfy the required infimum floor")
    return [
        (j % 2, tuple(f.perm for f in e.factors))
        for e, j in zip(t.entries, floor)
        if e.inf == j
    ]


def _passes(n: int, parity: int, pfactors: tuple[Perm, ...], s: Perm) -> bool:
    """Whether tau^parity(s) left-divides (positive part) * s."""
    ts = _tau_pow_perm(s, parity)
    power, factors = _positive_times_simple(n, pfactors, s)
    if power >= 1:
        return True
    if not factors:
        return ts == _id_perm(n)
    return _inversions(ts) <= _inversions(factors[0])


def _ascend(n: int, parity: int, pfactors: tuple[Perm, ...], s: Perm) -> Perm:
    """Grow s by the complement the rejecting entry forces: s * s' where
    (p s) s' is the lcm of tau^parity(s) and p s."""
    ts = _tau_pow_perm(s, parity)
    power, factors = _positive_times_simple(n, pfactors, s)
    assert power == 0  # a rejecting entry cannot have the half twist as prefix
    c = ts
    for f in factors:
        c = _left_complement_perm(c, f)
    grown = tuple(c[x] for x in s)
    if _inv_count(grown) != _inv_count(s) + _inv_count(c):
        raise NotSimple("conjugator ascent left the simple elements")
    return grown


def conjugation_keeps_floor(s: SimpleElement, t: BraidTuple, floor: InfFloor) -> bool:
    """Whether conjugating every entry by s keeps all infima at the floor or above."""
    check_same_strands(t, s)
    return all(
        _passes(t.n, parity, pfactors, s.perm)
        for parity, pfactors in _active_entries(t, floor)
    )


def _minimal_conjugator_perm(n: int, active, i: int) -> Perm:
    s = _gen_perm(n, i)
    for _ in range(n * (n - 1) // 2 + 1):
        rejection = next(
            ((parity, pf) for parity, pf in active if not _passes(n, parity, pf, s)),
            None,
        )
        if rejection is None:
            return s
        s = _ascend(n, rejection[0], rejection[1], s)
    raise AssertionError("unreachable: the half twist keeps every floor")


def minimal_conjugator(i: int, t: BraidTuple, floor: InfFloor) -> SimpleElement:
    """Minimal simple element divisible by letter i whose conjugation keeps the floor.

    Ascends from the bare generator: while some on-floor entry D^j p rejects
    the candidate s (tau^j(s) does not divide p*s), absorb the complement
    that makes the rejecting entry's lcm go through.  Every absorbed factor
    also divides the true minimum, so the ascent converges to it from below;
    the half twist always passes, so it converges within its word length.
    """
    if not 1 <= i <= t.n - 1:
        raise InvalidParams(f"generator index {i} out of range for {t.n} strands")
    active = _active_entries(t, floor)
    return _simple(t.n, _minimal_conjugator_perm(t.n, active, i))


def minimal_conjugator_set(t: BraidTuple, floor: InfFloor) -> list[SimpleElement]:
    """The distinct minimal floor-keeping conjugators, at most n-1 of them.

    Deduplicates the per-generator minima and defensively drops any element
    strictly divisible by another, preserving ascending generator order.
    """
    active = _active_entries(t, floor)
    found: list[Perm] = []
    for i in range(1, t.n):
        r_i = _minimal_conjugator_perm(t.n, active, i)
        if r_i not in found:
            found.append(r_i)
    return [
        _simple(t.n, s)
        for s in found
        if not any(o != s and _inversions(o) <= _inversions(s) for o in found)
    ]


# ---------------------------------------------------------------------------
# Search over the floor-respecting conjugates.
# ---------------------------------------------------------------------------


@dataclasses.dataclass
class SearchCounters:
    nodes_expanded: int = 0
    conjugations: int = 0
    minimal_set_sizes: list[int] = dataclasses.field(default_factory=list)


@dataclasses.dataclass(frozen=True)
class SummitNode:
    tuple: BraidTuple
    parent: str | None
    edge: SimpleElement | None


@dataclasses.dataclass
class SummitGraph:
    """Explored search tree: nodes keyed by canonical serialization."""

    root: str
    nodes: dict[str, SummitNode]
    counters: SearchCounters


class Outcome(enum.Enum):
    FOUND = "found"
    NOT_CONJUGATE = "not-conjugate"
    ABORTED = "aborted"


@dataclasses.dataclass
class ConjugatorResult:
    outcome: Outcome
    conjugator: BraidWord | None
    reason: str | None
    graph: SummitGraph

    @property
    def counters(self) -> SearchCounters:
        return self.graph.counters


def _reconstruct(graph: SummitGraph, key: str) -> BraidWord:
    """Product of the edge labels along the root-to-node path."""
    edges: list[SimpleElement] = []
    node = graph.nodes[key]
    while node.parent is not None:
        edges.append(node.edge)
        node = graph.nodes[node.parent]
    edges.reverse()
    n = graph.nodes[graph.root].tuple.n
    return word_concat(BraidWord(n, ()), *(simple_to_word(s) for s in edges))


def _check_pair(alpha: BraidTuple, beta: BraidTuple) -> None:
    if alpha.r != beta.r:
        raise LengthMismatch(f"tuples of length {alpha.r} and {beta.r}")
    check_same_strands(alpha, beta)


def summit_search(
    alpha: BraidTuple,
    beta: BraidTuple,
    floor: InfFloor,
    node_cap: int = DEFAULT_NODE_CAP,
) -> ConjugatorResult:
    """Breadth-first search from alpha for beta among floor-respecting conjugates.

    Expands each tuple by its minimal conjugator set in ascending generator
    order, so sequential runs are deterministic.  Exhausting the frontier
    without meeting beta proves the tuples are not conjugate within the
    floor; exceeding node_cap aborts without a verdict.
    """
    _check_pair(alpha, beta)
    if node_cap < 1:
        raise InvalidParams("node_cap must be at least 1")
    for t in (alpha, beta):
        if not meets_floor(t, floor):
            raise NotInFloor("both tuples must satisfy the infimum floor")

    counters = SearchCounters()
    root = tuple_key(alpha)
    target = tuple_key(beta)
    graph = SummitGraph(root=root, nodes={root: SummitNode(alpha, None, None)}, counters=counters)

    def result(outcome, conjugator=None, reason=None):
        return ConjugatorResult(outcome, conjugator, reason, graph)

    if root == target:
        return result(Outcome.FOUND, BraidWord(alpha.n, ()))

    queue = deque([root])
    while queue:
        key = queue.popleft()
        current = graph.nodes[key].tuple
        moves = minimal_conjugator_set(current, floor)
        counters.nodes_expanded += 1
        counters.minimal_set_sizes.append(len(moves))
        for s in moves:
            counters.conjugations += 1
            neighbour = conjugate_tuple(current, s)
            nkey = tuple_key(neighbour)
            if nkey in graph.nodes:
                continue
            if len(graph.nodes) >= node_cap:
                return result(Outcome.ABORTED, reason=f"node cap {node_cap} exceeded")
            graph.nodes[nkey] = SummitNode(neighbour, key, s)
            if nkey == target:
                return result(Outcome.FOUND, _reconstruct(graph, nkey))
            queue.append(nkey)
    return result(Outcome.NOT_CONJUGATE)


def solve_mscp(
    alpha: BraidTuple,
    beta: BraidTuple,
    node_cap: int = DEFAULT_NODE_CAP,
) -> ConjugatorResult:
    """Find x with x^-1 alpha x = beta, or decide there is none.

    Uses the componentwise minimum of the two infimum vectors as the floor,
    which both tuples satisfy by construction, and re-verifies any found
    conjugator before returning it.
    """
    _check_pair(alpha, beta)
    floor = tuple(min(a.inf, b.inf) for a, b in zip(alpha.entries, beta.entries))
    outcome = summit_search(alpha, beta, floor, node_cap)
    if outcome.outcome is Outcome.FOUND and not verify_conjugator(alpha, beta, outcome.conjugator):
        raise VerificationFailed("search returned a conjugator that fails verification")
    return outcome


def verify_conjugator(alpha: BraidTuple, beta: BraidTuple, x: BraidWord) -> bool:
    """Whether x^-1 a_i x = b_i holds for every entry, by normal forms."""
    _check_pair(alpha, beta)
    if x.n != alpha.n:
        raise StrandMismatch(f"conjugator on {x.n} strands against tuples on {alpha.n}")
    xf = normalize(x)
    xinv = invert(xf)
    return all(
        multiply(multiply(xinv, a), xf) == b
        for a, b in zip(alpha.entries, beta.entries)
    )
