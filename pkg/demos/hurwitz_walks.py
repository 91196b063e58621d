#!/usr/bin/env python3
"""Hurwitz moves: rewriting a factorization without changing what it factors.

The move at position k replaces (a, b) by (a b a^-1, a).  The product and
the multiset of factor classes never change, so they obstruct equivalence;
when they agree, a bidirectional search can look for an explicit chain of
moves.  The search is budgeted: Hurwitz equivalence has no known decision
procedure, and INCONCLUSIVE is an honest answer.
"""

import random
import time

from braidmono import (
    BraidWord,
    Factorization,
    HalfTwist,
    StructuredFactor,
    Verdict,
    apply_moves,
    canonical_key,
    hm_invariants,
    hurwitz_equivalent,
    hurwitz_move,
    hurwitz_move_inverse,
    is_delta2_factorization,
    orbit_enumerate,
)

e = BraidWord.identity(3)
X1, X2 = HalfTwist(3, 1, 2), HalfTwist(3, 2, 3)
F = Factorization(3, tuple(StructuredFactor(e, (X1, X2)[i % 2], 1) for i in range(6)))
print("start: six alternating half-twists in B_3")
print("is a Delta^2 factorization:", is_delta2_factorization(F))
inv = hm_invariants(F)
print("factor class multiset:", inv.class_multiset[0], "x", len(inv.class_multiset))
print()

# A long random walk: invariants ride along untouched.
rng = random.Random(7)
cur = F
t0 = time.time()
steps = 2000
for _ in range(steps):
    k = rng.randint(1, 5)
    cur = hurwitz_move(cur, k) if rng.random() < 0.5 else hurwitz_move_inverse(cur, k)
print(f"{steps} random moves in {time.time() - t0:.1f}s")
print("longest conjugator now:", max(len(f.conjugator) for f in cur.factors), "letters")
print("invariants preserved:", hm_invariants(cur) == inv)
print("still factors Delta^2:", is_delta2_factorization(cur))
print()

# Scramble mildly and search back: the verdict comes with a replayable
# certificate of moves.
scrambled = F
for _ in range(20):
    k = rng.randint(1, 5)
    scrambled = hurwitz_move(scrambled, k) if rng.random() < 0.5 else hurwitz_move_inverse(scrambled, k)
res = hurwitz_equivalent(F, scrambled, budget=1_000_000)
print("search verdict:", res.verdict.value)
print("states stored:", res.explored)
if res.verdict is Verdict.EQUIVALENT:
    print("certificate length:", len(res.moves))
    replay = apply_moves(F, res.moves)
    print("certificate replays:", canonical_key(replay) == canonical_key(scrambled))
print()

# Invariants disprove equivalence without any search: swapping a branch
# factor for a node changes the product (and the class multiset with it).
other = Factorization(
    3, F.factors[:4] + (StructuredFactor(e, X1, 2), StructuredFactor(e, X2, 1))
)
res = hurwitz_equivalent(F, other)
print("against a node-bearing tuple:", res.verdict.value, "-", res.witness)
print()

# Orbits can be tiny...
pair = Factorization(2, (StructuredFactor(BraidWord.identity(2), HalfTwist(2, 1, 2), 1),) * 2)
r = orbit_enumerate(pair)
print("orbit of (s1, s1) in B_2: size", len(r.keys), "exhausted:", r.exhausted)
# ... or far larger than any budget; the flag says which happened.
r = orbit_enumerate(F, budget=2000)
print("orbit of the B_3 tuple at budget 2000: size", len(r.keys), "exhausted:", r.exhausted)
