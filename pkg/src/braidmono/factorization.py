"""
Positive factorizations of the full twist and the Hurwitz rewriting system.

A factorization is an ordered tuple of factors in B_m whose left-to-right
product is meant to be Delta^2 (checked, never assumed).  Factors are stored
structurally as conjugator * core^exponent * conjugator^-1 so positivity is
guaranteed by construction:

* `StructuredFactor` has a band half-twist core; exponent 1/2/3/4 marks a
  branch point / node / cusp / tangency when the factorization describes a
  plane curve.
* `BlockFactor` has the half-twist of a whole strand block as core; the
  line-arrangement sweep emits these (exponent 2, a full twist of the block)
  for points where more than two lines meet.

The Hurwitz move at position k rewrites (..., a, b, ...) into
(..., a b a^-1, a, ...); its inverse sends (a, b) to (b, b^-1 a b).  Both
preserve the product and the multiset of factor conjugacy data, which gives
the computable obstructions in `hm_invariants`.  Deciding Hurwitz
equivalence in general is open, so `hurwitz_equivalent` is an explicitly
budgeted bidirectional search whose INCONCLUSIVE verdict is first-class.
"""

from __future__ import annotations

import dataclasses
import enum
from collections import deque
from functools import lru_cache
from typing import Iterable, Union

from .braid import (
    BraidError,
    BraidWord,
    HalfTwist,
    compose,
    delta_word,
    free_reduce,
    full_twist,
    half_twist_word,
    invert,
    permutation_of,
    power,
)
from .garside import (
    RAW_IDENTITY,
    NormalForm,
    nf_from_raw,
    raw_inverse,
    raw_multiply,
    raw_of_word,
    raw_to_letters,
)

SINGULARITY_NAMES = {1: "branch", 2: "node", 3: "cusp", 4: "tangency"}


@dataclasses.dataclass(frozen=True)
class StructuredFactor:
    """conjugator * (band half-twist)^exponent * conjugator^-1."""

    conjugator: BraidWord
    base: HalfTwist
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.conjugator.strands != self.base.strands:
            raise BraidError("conjugator and base strand counts differ")
        if self.exponent < 1:
            raise BraidError(f"exponent must be positive, got {self.exponent}")

    @property
    def strands(self) -> int:
        return self.base.strands

    def singularity_class(self) -> str:
        return SINGULARITY_NAMES.get(self.exponent, f"power-{self.exponent}")

    def core_word(self) -> BraidWord:
        return power(half_twist_word(self.base), self.exponent)

    def degree(self) -> int:
        """Exponent sum of the denoted word (conjugation-invariant)."""
        return self.exponent

    def with_conjugator(self, conjugator: BraidWord) -> StructuredFactor:
        return StructuredFactor(conjugator, self.base, self.exponent)

    def class_label(self) -> tuple:
        """(kind, exponent, cycle type); cycle type taken from the core,
        which conjugation cannot change."""
        cyc = _core_cycle_type(_core_key(self))
        return ("halftwist", self.exponent, cyc)


@dataclasses.dataclass(frozen=True)
class BlockFactor:
    """conjugator * Delta<low..high>^exponent * conjugator^-1.

    exponent 2 is the full twist of the block, the local monodromy of a
    point where high-low+1 lines meet.
    """

    conjugator: BraidWord
    low: int
    high: int
    exponent: int = 2

    def __post_init__(self) -> None:
        if not (1 <= self.low < self.high <= self.conjugator.strands):
            raise BraidError(
                f"block [{self.low}, {self.high}] invalid for "
                f"{self.conjugator.strands} strands"
            )
        if self.exponent < 1:
            raise BraidError(f"exponent must be positive, got {self.exponent}")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    @property
    def width(self) -> int:
        return self.high - self.low + 1

    def singularity_class(self) -> str:
        return f"full-twist-on-{self.width}" if self.exponent == 2 else (
            f"block-{self.width}-power-{self.exponent}"
        )

    def core_word(self) -> BraidWord:
        return power(delta_word(self.strands, self.low, self.high), self.exponent)

    def degree(self) -> int:
        return self.exponent * self.width * (self.width - 1) // 2

    def with_conjugator(self, conjugator: BraidWord) -> BlockFactor:
        return BlockFactor(conjugator, self.low, self.high, self.exponent)

    def class_label(self) -> tuple:
        cyc = _core_cycle_type(_core_key(self))
        return ("blocktwist", self.width, self.exponent, cyc)


Factor = Union[StructuredFactor, BlockFactor]


@lru_cache(maxsize=200_000)
def _expand_cached(factor: Factor) -> BraidWord:
    return compose(factor.conjugator, factor.core_word(), invert(factor.conjugator))


def expand(factor: Factor) -> BraidWord:
    """The braid word a factor denotes, freely reduced."""
    return _expand_cached(factor)


# Move engines construct conjugators as canonical forms and write down their
# canonical words; priming these tables lets later lookups skip renormalizing
# those words from their letters.  Inverse forms are carried along so that a
# move never has to invert anything long from scratch: every inverse in the
# hot path is a product of already inverted cached pieces.  Raw forms are
# garside's (delta_power, factor_ids) pairs.  Plain dicts with a size cap:
# entries are repopulated on demand, so clearing is always safe.
_Raw = tuple[int, tuple[int, ...]]
_NF_TABLE_CAP = 400_000
_word_nf: dict[BraidWord, tuple[_Raw, _Raw]] = {}
_factor_nf_table: dict[Factor, tuple[_Raw, _Raw]] = {}


def _remember(table: dict, key, value) -> None:
    if len(table) >= _NF_TABLE_CAP:
        table.clear()
    table[key] = value


def _conjugator_raws(word: BraidWord) -> tuple[_Raw, _Raw]:
    """(canonical form, inverse canonical form) of a conjugator word."""
    pair = _word_nf.get(word)
    if pair is None:
        raw = raw_of_word(word.strands, free_reduce(word.letters))
        pair = (raw, raw_inverse(word.strands, raw))
        _remember(_word_nf, word, pair)
    return pair


@lru_cache(maxsize=4096)
def _core_raws(factor_core: tuple) -> tuple[_Raw, _Raw]:
    kind, strands, low, high, exponent = factor_core
    if kind == "halftwist":
        base_word = half_twist_word(HalfTwist(strands, low, high))
    else:
        base_word = delta_word(strands, low, high)
    base = raw_of_word(strands, base_word.letters)
    raw = RAW_IDENTITY
    for _ in range(exponent):
        raw = raw_multiply(strands, raw, base)
    return raw, raw_inverse(strands, raw)


def _core_key(factor: Factor) -> tuple:
    if isinstance(factor, StructuredFactor):
        return ("halftwist", factor.strands, factor.base.low, factor.base.high, factor.exponent)
    return ("block", factor.strands, factor.low, factor.high, factor.exponent)


@lru_cache(maxsize=4096)
def _core_cycle_type(factor_core: tuple) -> tuple[int, ...]:
    kind, strands, low, high, exponent = factor_core
    if kind == "halftwist":
        core = half_twist_word(HalfTwist(strands, low, high))
    else:
        core = delta_word(strands, low, high)
    return permutation_of(power(core, exponent)).cycle_type()


def _factor_raws(factor: Factor) -> tuple[_Raw, _Raw]:
    pair = _factor_nf_table.get(factor)
    if pair is None:
        m = factor.strands
        conj, conj_inv = _conjugator_raws(factor.conjugator)
        core, _ = _core_raws(_core_key(factor))
        element = raw_multiply(m, raw_multiply(m, conj, core), conj_inv)
        pair = (element, raw_inverse(m, element))
        _remember(_factor_nf_table, factor, pair)
    return pair


def _factor_nf(factor: Factor) -> NormalForm:
    return nf_from_raw(factor.strands, _factor_raws(factor)[0])


@dataclasses.dataclass(frozen=True)
class Factorization:
    """Ordered factor tuple in B_strands; composes left to right."""

    strands: int
    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        for f in self.factors:
            if f.strands != self.strands:
                raise BraidError("factor strand count differs from factorization")

    def __len__(self) -> int:
        return len(self.factors)

    def degree(self) -> int:
        return sum(f.degree() for f in self.factors)


def product(fact: Factorization) -> BraidWord:
    """Left-to-right composition of the expanded factors."""
    words = [expand(f) for f in fact.factors]
    if not words:
        return BraidWord.identity(fact.strands)
    return compose(BraidWord.identity(fact.strands), *words)


def _product_raw(fact: Factorization) -> _Raw:
    out = RAW_IDENTITY
    for f in fact.factors:
        out = raw_multiply(fact.strands, out, _factor_raws(f)[0])
    return out


def product_nf(fact: Factorization) -> NormalForm:
    """Canonical form of the product, computed factor by factor."""
    return nf_from_raw(fact.strands, _product_raw(fact))


@lru_cache(maxsize=64)
def _full_twist_raw(m: int) -> _Raw:
    return raw_of_word(m, full_twist(m).letters)


def is_delta2_factorization(fact: Factorization) -> bool:
    """Does the product equal the full twist?  Necessary for the
    factorization to arise as a braid monodromy factorization."""
    if fact.strands < 2:
        return False
    return _product_raw(fact) == _full_twist_raw(fact.strands)


def canonical_key(fact: Factorization) -> tuple:
    """Hashable key equal exactly when the factor tuples agree as sequences
    of group elements (conjugator spelling is irrelevant)."""
    return tuple(_factor_raws(f)[0] for f in fact.factors)


def _reconjugated(factor: Factor, conj: _Raw, conj_inv: _Raw) -> Factor:
    """Rebuild `factor` with the given conjugator (as its canonical word),
    memoizing the canonical forms along the way."""
    m = factor.strands
    word = BraidWord(m, raw_to_letters(m, conj))
    _remember(_word_nf, word, (conj, conj_inv))
    return factor.with_conjugator(word)


def hurwitz_move(fact: Factorization, k: int) -> Factorization:
    """Replace (a_k, a_{k+1}) by (a_k a_{k+1} a_k^-1, a_k); 1-based k."""
    if not (1 <= k < len(fact.factors)):
        raise BraidError(f"move position {k} out of range 1..{len(fact.factors) - 1}")
    m = fact.strands
    a, b = fact.factors[k - 1], fact.factors[k]
    nf_a, _ = _factor_raws(a)
    cb, _ = _conjugator_raws(b.conjugator)
    conj = raw_multiply(m, nf_a, cb)
    moved = _reconjugated(b, conj, raw_inverse(m, conj))
    new_factors = fact.factors[: k - 1] + (moved, a) + fact.factors[k + 1 :]
    return Factorization(fact.strands, new_factors)


def hurwitz_move_inverse(fact: Factorization, k: int) -> Factorization:
    """Replace (a_k, a_{k+1}) by (a_{k+1}, a_{k+1}^-1 a_k a_{k+1}); 1-based k."""
    if not (1 <= k < len(fact.factors)):
        raise BraidError(f"move position {k} out of range 1..{len(fact.factors) - 1}")
    m = fact.strands
    a, b = fact.factors[k - 1], fact.factors[k]
    _, nf_b_inv = _factor_raws(b)
    ca, _ = _conjugator_raws(a.conjugator)
    conj = raw_multiply(m, nf_b_inv, ca)
    moved = _reconjugated(a, conj, raw_inverse(m, conj))
    new_factors = fact.factors[: k - 1] + (b, moved) + fact.factors[k + 1 :]
    return Factorization(fact.strands, new_factors)


@dataclasses.dataclass(frozen=True)
class HMInvariants:
    """Computable obstructions to Hurwitz equivalence: exact product, plus
    the multiset of (kind, exponent, cycle type) factor labels."""

    product_nf: NormalForm
    class_multiset: tuple[tuple, ...]


def hm_invariants(fact: Factorization) -> HMInvariants:
    labels = tuple(sorted(f.class_label() for f in fact.factors))
    return HMInvariants(product_nf(fact), labels)


class Verdict(enum.Enum):
    EQUIVALENT = "EQUIVALENT"
    NOT_EQUIVALENT = "NOT_EQUIVALENT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclasses.dataclass(frozen=True)
class EquivalenceResult:
    verdict: Verdict
    moves: tuple[tuple[int, int], ...] | None = None  # (position, +1/-1)
    witness: str | None = None
    explored: int = 0


def apply_moves(fact: Factorization, moves: Iterable[tuple[int, int]]) -> Factorization:
    """Replay a move certificate: (k, +1) forward move, (k, -1) inverse."""
    for k, direction in moves:
        fact = hurwitz_move(fact, k) if direction > 0 else hurwitz_move_inverse(fact, k)
    return fact


def _neighbors(fact: Factorization) -> Iterable[tuple[tuple[int, int], Factorization]]:
    for k in range(1, len(fact.factors)):
        yield (k, 1), hurwitz_move(fact, k)
        yield (k, -1), hurwitz_move_inverse(fact, k)


def hurwitz_equivalent(
    f1: Factorization, f2: Factorization, budget: int = 1_000_000
) -> EquivalenceResult:
    """Bounded bidirectional search for a Hurwitz move certificate.

    Returns EQUIVALENT with a replayable move sequence from f1 to f2,
    NOT_EQUIVALENT with the separating invariant (or orbit exhaustion), or
    INCONCLUSIVE when `budget` stored states were reached first.  Expansion
    order is deterministic: lower positions first, forward before inverse,
    smaller frontier expanded first.
    """
    if f1.strands != f2.strands:
        return EquivalenceResult(
            Verdict.NOT_EQUIVALENT, witness="strand counts differ"
        )
    if len(f1.factors) != len(f2.factors):
        return EquivalenceResult(
            Verdict.NOT_EQUIVALENT,
            witness="factor counts differ (length is a Hurwitz invariant)",
        )
    inv1, inv2 = hm_invariants(f1), hm_invariants(f2)
    if inv1.product_nf != inv2.product_nf:
        return EquivalenceResult(
            Verdict.NOT_EQUIVALENT, witness="products differ as braids"
        )
    if inv1.class_multiset != inv2.class_multiset:
        return EquivalenceResult(
            Verdict.NOT_EQUIVALENT,
            witness="factor class multisets differ",
        )

    k1, k2 = canonical_key(f1), canonical_key(f2)
    if k1 == k2:
        return EquivalenceResult(Verdict.EQUIVALENT, moves=(), explored=0)

    # parent maps: key -> (parent_key, move) with move the step applied at
    # the parent, in that side's own forward orientation.
    sides = (
        {"seen": {k1: (None, None)}, "frontier": deque([(k1, f1)])},
        {"seen": {k2: (None, None)}, "frontier": deque([(k2, f2)])},
    )
    stored = 2

    def path_to_root(side: int, key: tuple) -> list[tuple[int, int]]:
        moves = []
        while True:
            parent, move = sides[side]["seen"][key]
            if parent is None:
                return moves
            moves.append(move)
            key = parent

    def certificate(meet: tuple) -> tuple[tuple[int, int], ...]:
        fwd = list(reversed(path_to_root(0, meet)))
        back = [(k, -d) for (k, d) in path_to_root(1, meet)]
        return tuple(fwd + back)

    while sides[0]["frontier"] and sides[1]["frontier"]:
        side = 0 if len(sides[0]["frontier"]) <= len(sides[1]["frontier"]) else 1
        other = 1 - side
        frontier = sides[side]["frontier"]
        for _ in range(len(frontier)):
            key, fact = frontier.popleft()
            for move, nxt in _neighbors(fact):
                nkey = canonical_key(nxt)
                if nkey in sides[side]["seen"]:
                    continue
                sides[side]["seen"][nkey] = (key, move)
                stored += 1
                if nkey in sides[other]["seen"]:
                    return EquivalenceResult(
                        Verdict.EQUIVALENT,
                        moves=certificate(nkey),
                        explored=stored,
                    )
                frontier.append((nkey, nxt))
                if stored >= budget:
                    return EquivalenceResult(
                        Verdict.INCONCLUSIVE, explored=stored
                    )
    # One side's orbit closed without meeting the other: disjoint orbits.
    return EquivalenceResult(
        Verdict.NOT_EQUIVALENT,
        witness="orbit enumerated without reaching the other factorization",
        explored=stored,
    )


@dataclasses.dataclass(frozen=True)
class OrbitResult:
    keys: frozenset
    exhausted: bool
    explored: int


def orbit_enumerate(fact: Factorization, budget: int = 1_000_000) -> OrbitResult:
    """All canonical keys reachable by Hurwitz moves within the budget;
    `exhausted` is True when the orbit is closed under both move directions."""
    start = canonical_key(fact)
    seen = {start}
    frontier = deque([fact])
    while frontier:
        cur = frontier.popleft()
        for _move, nxt in _neighbors(cur):
            nkey = canonical_key(nxt)
            if nkey in seen:
                continue
            if len(seen) >= budget:
                return OrbitResult(frozenset(seen), False, len(seen))
            seen.add(nkey)
            frontier.append(nxt)
    return OrbitResult(frozenset(seen), True, len(seen))
