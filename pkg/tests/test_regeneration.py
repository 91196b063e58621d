import pytest

from braidmono import (
    BlockFactor,
    BraidWord,
    Factorization,
    HalfTwist,
    IndexDoubling,
    RegenerationError,
    Rule,
    StructuredFactor,
    braid_monodromy,
    complete_deficit,
    degree_audit,
    double_halftwist,
    expand,
    is_delta2_factorization,
    normal_form,
    permutation_of,
    regenerate,
    rule_I_branch,
    rule_II_node,
    rule_III_tangency,
    words_equal,
)
from conftest import random_generic_arrangement, standard_b3_factorization


def sf(m, a, b, exp, conj=()):
    return StructuredFactor(BraidWord(m, conj), HalfTwist(m, a, b), exp)


class TestIndexDoubling:
    def test_pairs_partition(self):
        d = IndexDoubling(3)
        pairs = [d.pair(j) for j in (1, 2, 3)]
        assert pairs == [(1, 2), (3, 4), (5, 6)]

    def test_cabling_is_a_homomorphism(self):
        d = IndexDoubling(3)
        assert words_equal(d.word(BraidWord(3, (1, 2, 1))), d.word(BraidWord(3, (2, 1, 2))))
        d4 = IndexDoubling(4)
        assert words_equal(d4.word(BraidWord(4, (1, 3))), d4.word(BraidWord(4, (3, 1))))
        assert normal_form(d.word(BraidWord(3, (2, -2)))).is_identity()

    def test_cabled_generator_permutation(self):
        d = IndexDoubling(2)
        p = permutation_of(d.word(BraidWord(2, (1,))))
        assert (p(1), p(2), p(3), p(4)) == (3, 4, 1, 2)

    def test_strand_mismatch(self):
        with pytest.raises(RegenerationError):
            IndexDoubling(3).word(BraidWord(4, (1,)))


class TestDoubleHalfTwist:
    def test_four_variants(self):
        h = HalfTwist(2, 1, 2)
        assert double_halftwist(h) == HalfTwist(4, 1, 3)
        assert double_halftwist(h, low_prime=True) == HalfTwist(4, 2, 3)
        assert double_halftwist(h, high_prime=True) == HalfTwist(4, 1, 4)
        assert double_halftwist(h, True, True) == HalfTwist(4, 2, 4)

    def test_exponent_sum_one(self):
        from braidmono import exponent_sum, half_twist_word

        h = HalfTwist(3, 1, 3)
        for lp in (False, True):
            for hp in (False, True):
                assert exponent_sum(half_twist_word(double_halftwist(h, lp, hp))) == 1

    def test_support_order_preserved(self):
        # nested supports stay nested, disjoint stay disjoint
        inner = double_halftwist(HalfTwist(4, 2, 3))
        outer = double_halftwist(HalfTwist(4, 1, 4))
        assert outer.low < inner.low < inner.high < outer.high
        left = double_halftwist(HalfTwist(4, 1, 2), high_prime=True)
        right = double_halftwist(HalfTwist(4, 3, 4))
        assert left.high < right.low


class TestRules:
    def test_rule_I_budget(self):
        out = rule_I_branch(sf(3, 1, 2, 1))
        assert len(out) == 2
        assert sum(f.degree() for f in out) == 2
        assert all(f.exponent == 1 for f in out)

    def test_rule_I_endpoints(self):
        out = rule_I_branch(sf(2, 1, 2, 1))
        assert out[0].base == HalfTwist(4, 1, 4)  # Z_{i j'}
        assert out[1].base == HalfTwist(4, 2, 3)  # Z_{i' j}

    def test_rule_I_permutations(self):
        out = rule_I_branch(sf(2, 1, 2, 1))
        prod_perm = permutation_of(expand(out[0])) * permutation_of(expand(out[1]))
        # (1 4)(2 3): the two transpositions have disjoint doubled endpoints
        assert prod_perm.cycle_type() == (2, 2)

    def test_rule_II_budget_and_order(self):
        out = rule_II_node(sf(3, 1, 3, 2))
        assert len(out) == 4
        assert sum(f.degree() for f in out) == 8
        lows = [(f.base.low, f.base.high) for f in out]
        assert lows == [(2, 6), (1, 6), (2, 5), (1, 5)]  # i'j', ij', i'j, ij

    def test_rule_II_pure(self):
        for f in rule_II_node(sf(3, 1, 2, 2)):
            assert permutation_of(expand(f)).is_identity()

    def test_rule_II_one_sided(self):
        out = rule_II_node(sf(3, 1, 2, 2), one_sided=True)
        assert len(out) == 2 and sum(f.degree() for f in out) == 4

    def test_rule_III_budget(self):
        out = rule_III_tangency(sf(3, 2, 3, 4))
        assert len(out) == 3
        assert sum(f.degree() for f in out) == 9
        assert all(f.exponent == 3 for f in out)

    def test_rule_III_conjugate_outputs(self):
        out = rule_III_tangency(sf(2, 1, 2, 4))
        assert len({f.base for f in out}) == 1
        # permutation of each output: transposition of the doubled endpoints
        for f in out:
            assert permutation_of(expand(f)).cycle_type() == (2, 1, 1)

    def test_wrong_exponent_rejected(self):
        with pytest.raises(RegenerationError):
            rule_I_branch(sf(3, 1, 2, 2))
        with pytest.raises(RegenerationError):
            rule_II_node(sf(3, 1, 2, 1))
        with pytest.raises(RegenerationError):
            rule_III_tangency(sf(3, 1, 2, 2))

    def test_conjugator_inherited(self):
        f = sf(3, 1, 2, 2, conj=(2,))
        d = IndexDoubling(3)
        want = d.word(BraidWord(3, (2,)))
        for out in rule_II_node(f):
            assert out.conjugator == want


class TestRegenerate:
    def test_default_assignment_by_exponent(self):
        F = Factorization(3, (sf(3, 1, 2, 1), sf(3, 1, 3, 2), sf(3, 2, 3, 4)))
        R = regenerate(F)
        assert R.strands == 6
        assert len(R.factors) == 2 + 4 + 3
        assert R.degree() == 2 + 8 + 9

    def test_empty(self):
        assert regenerate(Factorization(3)).factors == ()

    def test_pass_through(self):
        F = Factorization(3, (sf(3, 1, 2, 3),))
        R = regenerate(F, {0: Rule.PASS})
        assert len(R.factors) == 1
        assert R.factors[0].exponent == 3
        assert R.factors[0].base == HalfTwist(6, 1, 3)

    def test_exponent_without_rule_rejected(self):
        F = Factorization(3, (sf(3, 1, 2, 3),))
        with pytest.raises(RegenerationError):
            regenerate(F)

    def test_block_factor_rejected(self):
        F = Factorization(
            3, (BlockFactor(BraidWord.identity(3), 1, 3, 2),)
        )
        with pytest.raises(RegenerationError):
            regenerate(F, {0: Rule.PASS})

    def test_generic_lines_all_nodes(self, rng):
        for n in (2, 3, 4):
            arr = random_generic_arrangement(rng, n)
            F = braid_monodromy(arr, expand_blocks=True)
            R = regenerate(F)
            assert len(R.factors) == 4 * (n * (n - 1) // 2)
            assert R.degree() == 4 * n * (n - 1)


class TestAudit:
    def test_deficit_identity_n2_to_6(self, rng):
        for n in range(2, 7):
            arr = random_generic_arrangement(rng, n)
            R = regenerate(braid_monodromy(arr, expand_blocks=True))
            rep = degree_audit(R)
            assert rep.achieved_degree == 4 * n * (n - 1)
            assert rep.target_degree == 2 * n * (2 * n - 1)
            assert rep.deficit == 2 * n

    def test_zero_deficit(self, b3_factorization):
        rep = degree_audit(b3_factorization)
        assert rep.deficit == 0

    def test_overfull_rejected(self):
        F = Factorization(2, tuple(sf(2, 1, 2, 1) for _ in range(3)))
        with pytest.raises(RegenerationError):
            degree_audit(F)


class TestCompletion:
    def test_recovers_dropped_branch_factors(self):
        full = standard_b3_factorization()
        partial = Factorization(3, full.factors[:4])
        res = complete_deficit(partial, budget=5000)
        assert res.completed is not None
        assert is_delta2_factorization(res.completed)
        assert len(res.completed.factors) == 6

    def test_already_complete(self, b3_factorization):
        res = complete_deficit(b3_factorization)
        assert res.completed is b3_factorization

    def test_budget_exhaustion_reported(self):
        full = standard_b3_factorization()
        partial = Factorization(3, full.factors[:2])
        res = complete_deficit(partial, budget=1)
        if res.completed is None:
            assert not res.exhausted
