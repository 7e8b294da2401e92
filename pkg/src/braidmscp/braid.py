"""Braid words, permutation braids, and the lattice of divisors of the half twist.

A braid on n strands is written as a word in the Artin generators: a sequence
of signed integers e with 1 <= |e| <= n-1, where e = i encodes the positive
crossing of the strands at positions i and i+1, and e = -i its inverse.

A permutation braid (a positive braid in which any two strands cross at most
once, equivalently a left divisor of the half twist D) is stored as the
permutation it induces on strand positions: perm[i] is the final position of
the strand starting at position i, 0-indexed.  Under this encoding:

  * the product a*b (a first, then b) has permutation p_b o p_a;
  * the positive word length of a permutation braid equals the inversion
    count of its permutation;
  * left divisibility a < b (meaning b = a*c with c positive) is inclusion
    of inversion sets, inv(a) inside inv(b).

The divisors of D form a lattice under left divisibility.  Meet is computed
by greedily peeling common initial crossings, join through the complement
anti-isomorphism; both are cross-checked in the test suite against a
brute-force divisor enumeration built from reduced-word prefixes.

The flip tau is conjugation by the half twist, tau(x) = D^-1 x D.  Since D^2
is central, tau is an involution, so for any exponent k only its parity
matters; on generators tau maps letter i to n-i.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .errors import (
    BoundExceeded,
    InvalidParams,
    NegativeLetter,
    NotSimple,
    StrandMismatch,
)

Perm = tuple[int, ...]

# Ceiling for exhaustive enumeration of all n! simple elements.
SIMPLE_ENUM_BOUND = 6


def check_strand_count(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidParams(f"strand count must be an integer >= 2, got {n!r}")


def check_same_strands(a, b) -> None:
    if a.n != b.n:
        raise StrandMismatch(f"cannot mix objects on {a.n} and {b.n} strands")


# ---------------------------------------------------------------------------
# Permutation-level helpers.  All take and return plain tuples so results can
# be memoised; the hot lattice operations below are called millions of times
# during a search, almost always on a small working set of permutations.
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _id_perm(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def _w0_perm(n: int) -> Perm:
    """The order-reversing permutation, i.e. the half twist."""
    return tuple(range(n - 1, -1, -1))


def _perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _braid_mul(a: Perm, b: Perm) -> Perm:
    """Permutation of the product braid "a then b"."""
    return tuple(b[x] for x in a)


@functools.lru_cache(maxsize=None)
def _inversions(p: Perm) -> frozenset[tuple[int, int]]:
    """Pairs of strand start positions i < j whose endpoints are reversed."""
    n = len(p)
    return frozenset((i, j) for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def _inv_count(p: Perm) -> int:
    return len(_inversions(p))


def _tau_perm(p: Perm) -> Perm:
    """Conjugate by the half twist: w0 o p o w0."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _tau_pow_perm(p: Perm, k: int) -> Perm:
    return _tau_perm(p) if k % 2 else p


@functools.lru_cache(maxsize=None)
def _meet_perm(a: Perm, b: Perm) -> Perm:
    """Greatest common left divisor.

    Greedily peels crossings that start both a and b: letter i starts x
    exactly when x[i] > x[i+1], and any common initial crossing divides the
    gcd, so peeling until no common initial crossing remains is exact.
    """
    n = len(a)
    pa, pb = list(a), list(b)
    word = []
    while True:
        i = next(
            (i for i in range(n - 1) if pa[i] > pa[i + 1] and pb[i] > pb[i + 1]),
            None,
        )
        if i is None:
            break
        pa[i], pa[i + 1] = pa[i + 1], pa[i]
        pb[i], pb[i + 1] = pb[i + 1], pb[i]
        word.append(i)
    # Rebuild the peeled word as a permutation, tracking value positions so
    # each crossing is O(1).
    m = list(range(n))
    pos = list(range(n))
    for i in word:
        pi, pj = pos[i], pos[i + 1]
        m[pi], m[pj] = i + 1, i
        pos[i], pos[i + 1] = pj, pi
    return tuple(m)


def _rgcd_perm(a: Perm, b: Perm) -> Perm:
    """Greatest common right divisor, via d right-divides x iff d^-1 left-divides x^-1."""
    return _perm_inverse(_meet_perm(_perm_inverse(a), _perm_inverse(b)))


@functools.lru_cache(maxsize=None)
def _rcomp_perm(a: Perm) -> Perm:
    """Right complement a^-1 D, the simple element with a * rcomp(a) = D."""
    n = len(a)
    ainv = _perm_inverse(a)
    return tuple(n - 1 - ainv[i] for i in range(n))


def _lcomp_perm(a: Perm) -> Perm:
    """Left complement D a^-1, the simple element with lcomp(a) * a = D."""
    n = len(a)
    ainv = _perm_inverse(a)
    return tuple(ainv[n - 1 - i] for i in range(n))


@functools.lru_cache(maxsize=None)
def _join_perm(a: Perm, b: Perm) -> Perm:
    """Least common multiple among simple elements.

    x < y iff rcomp(y) right-divides rcomp(x), so the join is the preimage of
    the right gcd of the complements.
    """
    n = len(a)
    g = _rgcd_perm(_rcomp_perm(a), _rcomp_perm(b))
    ginv = _perm_inverse(g)
    return tuple(ginv[n - 1 - i] for i in range(n))


def _left_complement_perm(a: Perm, b: Perm) -> Perm:
    """The simple c with b * c = join(a, b)."""
    j = _join_perm(a, b)
    binv = _perm_inverse(b)
    return tuple(j[binv[i]] for i in range(len(a)))


def _gen_perm(n: int, i: int) -> Perm:
    """Permutation of the generator letter i (1-based)."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


# ---------------------------------------------------------------------------
# Public value types.
# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators: signed 1-based letters."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        check_strand_count(self.n)
        object.__setattr__(self, "letters", tuple(self.letters))
        for e in self.letters:
            if not isinstance(e, int) or e == 0 or abs(e) > self.n - 1:
                raise InvalidParams(f"letter {e!r} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)


@dataclasses.dataclass(frozen=True)
class SimpleElement:
    """A permutation braid, stored as its strand permutation (0-indexed images)."""

    n: int
    perm: Perm

    def __post_init__(self):
        check_strand_count(self.n)
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(self.n)):
            raise InvalidParams(f"{self.perm!r} is not a permutation of 0..{self.n - 1}")

    def length(self) -> int:
        """Positive word length, i.e. the inversion count of the permutation."""
        return _inv_count(self.perm)

    def is_identity(self) -> bool:
        return self.perm == _id_perm(self.n)

    def is_delta(self) -> bool:
        return self.perm == _w0_perm(self.n)


def identity_simple(n: int) -> SimpleElement:
    return SimpleElement(n, _id_perm(n))


def delta(n: int) -> SimpleElement:
    """The half twist, maximum of the lattice of simple elements."""
    return SimpleElement(n, _w0_perm(n))


def generator_simple(n: int, i: int) -> SimpleElement:
    """The simple element of the single letter i."""
    if not 1 <= i <= n - 1:
        raise InvalidParams(f"generator index {i} out of range for {n} strands")
    return SimpleElement(n, _gen_perm(n, i))


# ---------------------------------------------------------------------------
# Word operations.
# ---------------------------------------------------------------------------


def word_inverse(w: BraidWord) -> BraidWord:
    """Reverse the word and flip every crossing sign."""
    return BraidWord(w.n, tuple(-e for e in reversed(w.letters)))


def word_concat(*words: BraidWord) -> BraidWord:
    for w in words[1:]:
        check_same_strands(words[0], w)
    return BraidWord(words[0].n, tuple(e for w in words for e in w.letters))


def exponent_sum(w: BraidWord) -> int:
    """Sum of crossing signs; a conjugacy invariant."""
    return sum(1 if e > 0 else -1 for e in w.letters)


def word_to_text(w: BraidWord) -> str:
    """Serialize as space-separated signed integers; the empty word is "e"."""
    return " ".join(str(e) for e in w.letters) if w.letters else "e"


def word_from_text(text: str, n: int) -> BraidWord:
    check_strand_count(n)
    tokens = text.split()
    if tokens == ["e"]:
        return BraidWord(n, ())
    if not tokens:
        raise InvalidParams("empty word text; the identity is written 'e'")
    letters = []
    for tok in tokens:
        try:
            letters.append(int(tok))
        except ValueError:
            raise InvalidParams(f"bad letter token {tok!r}") from None
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# Simple-element operations.
# ---------------------------------------------------------------------------


def simple_from_positive_word(w: BraidWord) -> SimpleElement:
    """Interpret a positive word as a permutation braid.

    Raises NotSimple when some pair of strands crosses twice, i.e. when the
    word is longer than the inversion count of its permutation.
    """
    p = _id_perm(w.n)
    for e in w.letters:
        if e < 0:
            raise NegativeLetter(f"letter {e} in a positive word")
        p = _braid_mul(p, _gen_perm(w.n, e))
    if _inv_count(p) != len(w.letters):
        raise NotSimple(f"{w.letters!r} crosses some strand pair more than once")
    return SimpleElement(w.n, p)


def simple_to_word(s: SimpleElement) -> BraidWord:
    """Canonical reduced positive word for a permutation braid.

    Walks the target positions from rightmost to leftmost and slides the
    strand destined for each into place; deterministic, and of length equal
    to the inversion count.
    """
    n = s.n
    dest = s.perm
    arrangement = list(range(n))  # strand occupying each position
    pos = list(range(n))  # position of each strand
    source = _perm_inverse(dest)
    letters = []
    for target in range(n - 1, 0, -1):
        strand = source[target]
        for q in range(pos[strand], target):
            other = arrangement[q + 1]
            arrangement[q], arrangement[q + 1] = other, strand
            pos[strand], pos[other] = q + 1, q
            letters.append(q + 1)
    return BraidWord(n, tuple(letters))


def tau(x: BraidWord | SimpleElement, k: int = 1):
    """Apply the flip (conjugation by the half twist) k times; involutive."""
    if k % 2 == 0:
        return x
    if isinstance(x, BraidWord):
        return BraidWord(x.n, tuple((1 if e > 0 else -1) * (x.n - abs(e)) for e in x.letters))
    return SimpleElement(x.n, _tau_perm(x.perm))


def simple_divides(a: SimpleElement, b: SimpleElement) -> bool:
    """Left divisibility a < b, as inclusion of inversion sets."""
    check_same_strands(a, b)
    return _inversions(a.perm) <= _inversions(b.perm)


def meet(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Greatest common left divisor of two simple elements."""
    check_same_strands(a, b)
    return SimpleElement(a.n, _meet_perm(a.perm, b.perm))


def join(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Least common multiple of two simple elements."""
    check_same_strands(a, b)
    return SimpleElement(a.n, _join_perm(a.perm, b.perm))


def right_complement(a: SimpleElement) -> SimpleElement:
    """The simple element c with a * c equal to the half twist."""
    return SimpleElement(a.n, _rcomp_perm(a.perm))


def left_complement_simple(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """The simple c with b * c = join(a, b); trivial exactly when a divides b."""
    check_same_strands(a, b)
    c = _left_complement_perm(a.perm, b.perm)
    assert _inv_count(c) == _inv_count(_join_perm(a.perm, b.perm)) - _inv_count(b.perm)
    return SimpleElement(a.n, c)


def simple_product(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Product of two simple elements, required to be simple again."""
    check_same_strands(a, b)
    p = _braid_mul(a.perm, b.perm)
    if _inv_count(p) != _inv_count(a.perm) + _inv_count(b.perm):
        raise NotSimple("product of the given simple elements is not simple")
    return SimpleElement(a.n, p)


def enumerate_simples(n: int, bound: int = SIMPLE_ENUM_BOUND) -> list[SimpleElement]:
    """All n! simple elements, for brute-force oracles at small n."""
    check_strand_count(n)
    if n > bound:
        raise BoundExceeded(f"enumeration of {n}! simple elements exceeds bound {bound}")
    return [SimpleElement(n, p) for p in itertools.permutations(range(n))]
