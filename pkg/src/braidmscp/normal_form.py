"""Left normal forms of braids: D^k A_1 ... A_l with left-weighted factors.

Every braid has a unique expression D^k A_1 ... A_l where D is the half
twist, no factor A_i is trivial or D, and each adjacent pair is left-weighted,
meaning meet(rcomp(A_i), A_(i+1)) is trivial: A_i already absorbs every
crossing that could be pulled out of the head of A_(i+1).  The exponent k is
the infimum of the braid and k + l its supremum.

Normalization rewrites each inverse letter as D^-1 times a left complement,
pushes the D powers to the front through the flip tau, then restores
left-weightedness with the local move "transfer meet(rcomp(A), B) from B to
A".  The move sends (A, D) to (D, tau(A)) and (trivial, B) to (B, trivial),
so half twists bubble to the front and trivial factors to the back, where
they are stripped.  Products of two already-weighted sequences only need the
move combed outward from the junction, which keeps multiplication cheap; the
conjugation of a normal form by a simple element is memoised because searches
repeat it heavily.
"""

from __future__ import annotations

import dataclasses
import functools

from .braid import (
    BraidWord,
    Perm,
    SimpleElement,
    _braid_mul,
    _gen_perm,
    _id_perm,
    _lcomp_perm,
    _left_complement_perm,
    _meet_perm,
    _perm_inverse,
    _rcomp_perm,
    _tau_pow_perm,
    _w0_perm,
    check_same_strands,
    check_strand_count,
    delta,
    simple_divides,
    simple_to_word,
    word_inverse,
    word_to_text,
)
from .errors import InvalidParams, NotPositive, StrandMismatch


@functools.lru_cache(maxsize=None)
def _simple(n: int, perm: Perm) -> SimpleElement:
    """Interned simple elements; hot paths share one object per permutation."""
    return SimpleElement(n, perm)


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """A braid in left normal form: power of the half twist plus factors."""

    n: int
    power: int
    factors: tuple[SimpleElement, ...] = ()

    def __post_init__(self):
        check_strand_count(self.n)
        for f in self.factors:
            if f.n != self.n:
                raise StrandMismatch(f"factor on {f.n} strands in a normal form on {self.n}")
            if f.is_identity() or f.is_delta():
                raise InvalidParams("normal form factors must be proper divisors of the half twist")

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors


def inf_sup(f: NormalForm) -> tuple[int, int]:
    return f.inf, f.sup


# ---------------------------------------------------------------------------
# Normalization machinery on raw permutation sequences.
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _fix_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Left-weight one adjacent pair by moving the head of b into a."""
    h = _meet_perm(_rcomp_perm(a), b)
    if h == _id_perm(len(a)):
        return a, b
    hinv = _perm_inverse(h)
    return _braid_mul(a, h), tuple(b[hinv[i]] for i in range(len(b)))


def _comb_back(factors: list[Perm], i: int) -> None:
    """Restore left-weightedness of pairs below i after factor i changed."""
    for k in range(i - 1, -1, -1):
        a, b = _fix_pair(factors[k], factors[k + 1])
        if a == factors[k]:
            break
        factors[k], factors[k + 1] = a, b


def _strip(n: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Absorb leading half twists into the power and drop trailing trivials."""
    ident = _id_perm(n)
    w0 = _w0_perm(n)
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == w0:
        lo += 1
    while lo < hi and factors[hi - 1] == ident:
        hi -= 1
    return lo, tuple(factors[lo:hi])


def _prod_normal(n: int, left, right) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight the concatenation of two already left-weighted sequences.

    Violations can only start at the junction, so the local move is applied
    there and combed outward until a pair is already weighted.
    """
    if not left or not right:
        return _strip(n, list(left) + list(right))
    if _fix_pair(left[-1], right[0]) == (left[-1], right[0]):
        # Already weighted across the junction; weighted sequences carry no
        # half twists or trivial factors, so there is nothing to strip.
        return 0, (*left, *right)
    factors = list(left) + list(right)
    for i in range(len(left) - 1, len(factors) - 1):
        a, b = _fix_pair(factors[i], factors[i + 1])
        if a == factors[i]:
            break
        factors[i], factors[i + 1] = a, b
        _comb_back(factors, i)
    return _strip(n, factors)


def _weight_seq(n: int, seq) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight an arbitrary sequence of simple factors by insertion."""
    ident = _id_perm(n)
    power = 0
    acc: tuple[Perm, ...] = ()
    for p in seq:
        if p == ident:
            continue
        d, acc = _prod_normal(n, acc, (p,))
        power += d
    return power, acc


def _push_half_twists(items: list[tuple[int, Perm]]) -> tuple[int, list[Perm]]:
    """Move the D^d prefixes of a factor sequence to the front.

    Each item (d, p) denotes D^d * p; commuting D^d leftwards applies tau^d
    to every factor it passes, i.e. factor j picks up the total d of the
    items to its right.
    """
    total = 0
    out = []
    for d, p in reversed(items):
        out.append(_tau_pow_perm(p, total))
        total += d
    out.reverse()
    return total, out


@functools.lru_cache(maxsize=1 << 18)
def _nf_from_raw(n: int, power: int, factors: tuple[Perm, ...]) -> NormalForm:
    """Interned normal forms: validation runs once per distinct value."""
    return NormalForm(n, power, tuple(_simple(n, p) for p in factors))


def _wrap(n: int, power: int, factors) -> NormalForm:
    return _nf_from_raw(n, power, tuple(factors))


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def normalize(w: BraidWord) -> NormalForm:
    """Left normal form of the braid represented by a word.

    A positive letter contributes its own permutation; an inverse letter
    contributes D^-1 times the left complement of the generator.
    """
    items: list[tuple[int, Perm]] = []
    for e in w.letters:
        gen = _gen_perm(w.n, abs(e))
        if e > 0:
            items.append((0, gen))
        else:
            items.append((-1, _lcomp_perm(gen)))
    power, seq = _push_half_twists(items)
    extra, factors = _weight_seq(w.n, seq)
    return _wrap(w.n, power + extra, factors)


def nf_of_simple(s: SimpleElement) -> NormalForm:
    if s.is_identity():
        return NormalForm(s.n, 0, ())
    if s.is_delta():
        return NormalForm(s.n, 1, ())
    return NormalForm(s.n, 0, (s,))


def nf_to_word(f: NormalForm) -> BraidWord:
    """A word representing the normal form: half-twist letters, then factors."""
    dword = simple_to_word(delta(f.n))
    if f.power < 0:
        dword = word_inverse(dword)
    letters = list(dword.letters) * abs(f.power)
    for factor in f.factors:
        letters.extend(simple_to_word(factor).letters)
    return BraidWord(f.n, tuple(letters))


def multiply(f: NormalForm, g: NormalForm) -> NormalForm:
    """Normal form of the product fg."""
    check_same_strands(f, g)
    left = tuple(_tau_pow_perm(a.perm, g.power) for a in f.factors)
    right = tuple(b.perm for b in g.factors)
    extra, factors = _prod_normal(f.n, left, right)
    return _wrap(f.n, f.power + g.power + extra, factors)


def invert(f: NormalForm) -> NormalForm:
    """Normal form of the inverse: reversed left complements and negated power."""
    items = [(-1, _lcomp_perm(a.perm)) for a in reversed(f.factors)]
    items.append((-f.power, _id_perm(f.n)))
    power, seq = _push_half_twists(items)
    extra, factors = _weight_seq(f.n, seq)
    return _wrap(f.n, power + extra, factors)


@functools.lru_cache(maxsize=1 << 18)
def _conj_raw(n: int, power: int, factors: tuple[Perm, ...], s: Perm) -> tuple[int, tuple[Perm, ...]]:
    """Conjugate D^power A_1..A_l by the simple s, as raw data.

    s^-1 D^k A.. s = D^(k-1) tau^k(lcomp(s)) A_1 .. A_l s, so the result is
    two junction products around the existing weighted sequence.
    """
    if s == _id_perm(n):
        return power, factors
    if s == _w0_perm(n):
        return power, tuple(_tau_pow_perm(p, 1) for p in factors)
    head = _tau_pow_perm(_lcomp_perm(s), power)
    d1, seq = _prod_normal(n, (head,), factors)
    d2, seq = _prod_normal(n, seq, (s,))
    return power - 1 + d1 + d2, seq


@functools.lru_cache(maxsize=1 << 18)
def _conjugate_cached(f: NormalForm, s_perm: Perm) -> NormalForm:
    power, factors = _conj_raw(f.n, f.power, tuple(a.perm for a in f.factors), s_perm)
    return _wrap(f.n, power, factors)


def conjugate(f: NormalForm, s: SimpleElement) -> NormalForm:
    """Normal form of s^-1 f s."""
    check_same_strands(f, s)
    return _conjugate_cached(f, s.perm)


@functools.lru_cache(maxsize=1 << 18)
def _positive_times_simple(n: int, factors: tuple[Perm, ...], s: Perm) -> tuple[int, tuple[Perm, ...]]:
    """Weighted factors of (A_1..A_l) * s; memoised for the conjugator ascent."""
    if s == _id_perm(n):
        return 0, factors
    return _prod_normal(n, factors, (s,))


def simple_prefix_of_positive(s: SimpleElement, p: NormalForm) -> bool:
    """Whether the simple s left-divides the positive braid p.

    For a positive braid in normal form the maximal simple prefix is the
    first factor, so the test reduces to one divisibility check.
    """
    check_same_strands(s, p)
    if p.power < 0:
        raise NotPositive(f"braid has infimum {p.power} < 0")
    if p.power >= 1:
        return True
    if not p.factors:
        return s.is_identity()
    return simple_divides(s, p.factors[0])


def lcm_complement(s: SimpleElement, p: NormalForm) -> SimpleElement:
    """The simple s' with p * s' = join(s, p), the lcm of s and a positive braid.

    Sweeps the complement of s through the factors: past each factor A the
    pending simple c becomes the c' with A c' = join(c, A).  Trivial exactly
    when s already divides p.
    """
    check_same_strands(s, p)
    if p.power < 0:
        raise NotPositive(f"braid has infimum {p.power} < 0")
    if p.power >= 1:
        return _simple(s.n, _id_perm(s.n))
    c = s.perm
    for factor in p.factors:
        c = _left_complement_perm(c, factor.perm)
    return _simple(s.n, c)


def strand_permutation(f: NormalForm) -> Perm:
    """Underlying permutation of the braid (image in the symmetric group)."""
    p = _w0_perm(f.n) if f.power % 2 else _id_perm(f.n)
    for factor in f.factors:
        p = _braid_mul(p, factor.perm)
    return p


@functools.lru_cache(maxsize=None)
def _canonical_word_text(n: int, perm: Perm) -> str:
    return word_to_text(simple_to_word(_simple(n, perm)))


@functools.lru_cache(maxsize=1 << 18)
def nf_key(f: NormalForm) -> str:
    """Canonical serialization "D^k | w1 | w2 | ..." used as a hash key."""
    parts = [f"D^{f.power}"]
    parts.extend(_canonical_word_text(f.n, factor.perm) for factor in f.factors)
    return " | ".join(parts)


def validate_normal_form(f: NormalForm) -> None:
    """Assert the left-weightedness invariant; test and debugging aid."""
    ident = _id_perm(f.n)
    for a, b in zip(f.factors, f.factors[1:]):
        if _meet_perm(_rcomp_perm(a.perm), b.perm) != ident:
            raise AssertionError(f"factors {a.perm} | {b.perm} are not left-weighted")
