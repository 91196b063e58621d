from fractions import Fraction

import pytest

from braidmono import (
    ArrangementError,
    BlockFactor,
    Factorization,
    LineArrangement,
    StructuredFactor,
    braid_monodromy,
    canonical_key,
    degree_check,
    exponent_sum,
    expand,
    is_delta2_factorization,
    permutation_of,
    product,
    singular_points,
    to_wiring_diagram,
)
from conftest import random_generic_arrangement


def arrangement(*pairs):
    return LineArrangement.from_pairs(pairs)


class TestSingularPoints:
    def test_two_crossing_lines(self):
        pts = singular_points(arrangement((1, 0), (-1, 0)))
        assert len(pts) == 1
        p = pts[0]
        assert (p.x, p.y) == (0, 0)
        assert p.multiplicity == 2 and p.block == (1, 2)

    def test_three_concurrent(self):
        pts = singular_points(arrangement((0, 0), (1, 0), (-1, 0)))
        assert len(pts) == 1
        assert pts[0].multiplicity == 3 and pts[0].block == (1, 3)

    def test_three_generic_exact_coordinates(self):
        # oracle: solve the three 2x2 systems by hand
        #  y=0, y=x        -> (0, 0)
        #  y=0, y=2x-1     -> (1/2, 0)
        #  y=x, y=2x-1     -> (1, 1)
        pts = singular_points(arrangement((0, 0), (1, 0), (2, -1)))
        assert [(p.x, p.y) for p in pts] == [
            (0, 0),
            (Fraction(1, 2), 0),
            (1, 1),
        ]
        assert [p.line_indices for p in pts] == [(0, 1), (0, 2), (1, 2)]

    def test_duplicate_lines_rejected(self):
        with pytest.raises(ArrangementError):
            arrangement((1, 0), (1, 0))

    def test_single_line_rejected(self):
        with pytest.raises(ArrangementError):
            singular_points(arrangement((1, 0)))


class TestWiringDiagram:
    def test_two_lines(self):
        wd = to_wiring_diagram(arrangement((1, 0), (-1, 0)))
        assert wd.initial_order == (0, 1)  # steepest first
        assert wd.events == ((1, 2),)

    def test_three_generic(self):
        wd = to_wiring_diagram(arrangement((0, 0), (1, 0), (2, -1)))
        assert wd.initial_order == (2, 1, 0)
        assert wd.events == ((2, 3), (1, 2), (2, 3))

    def test_concurrent_triple(self):
        wd = to_wiring_diagram(arrangement((0, 0), (1, 0), (-1, 0)))
        assert wd.events == ((1, 3),)

    def test_sweep_reverses_order(self, rng):
        # with distinct slopes every pair crosses once: the final fiber
        # order is the initial order reversed
        for _ in range(20):
            arr = random_generic_arrangement(rng, rng.randint(2, 6))
            wd = to_wiring_diagram(arr)
            order = list(wd.initial_order)
            for low, high in wd.events:
                order[low - 1 : high] = reversed(order[low - 1 : high])
            assert order == list(reversed(wd.initial_order))


class TestBraidMonodromy:
    def test_two_lines_single_node(self):
        F = braid_monodromy(arrangement((1, 0), (-1, 0)))
        assert len(F.factors) == 1
        assert words_equal_product_is_delta2(F)

    def test_three_concurrent_full_twist(self):
        F = braid_monodromy(arrangement((0, 0), (1, 0), (-1, 0)))
        assert len(F.factors) == 1
        assert isinstance(F.factors[0], BlockFactor)
        assert is_delta2_factorization(F)

    def test_three_generic(self):
        F = braid_monodromy(arrangement((0, 0), (1, 0), (2, -1)))
        assert len(F.factors) == 3
        assert all(f.degree() == 2 for f in F.factors)
        assert F.degree() == 6
        assert is_delta2_factorization(F)

    def test_master_oracle_random(self, rng):
        for _ in range(30):
            m = rng.randint(2, 6)
            arr = random_generic_arrangement(rng, m)
            F = braid_monodromy(arr)
            assert is_delta2_factorization(F)
            assert F.degree() == m * (m - 1)
            assert permutation_of(product(F)).is_identity()

    def test_factor_shape(self, rng):
        arr = random_generic_arrangement(rng, 5)
        for f in braid_monodromy(arr).factors:
            assert exponent_sum(expand(f)) == 2

    def test_block_factor_exponent_sums(self):
        # k concurrent lines plus extras: block factor degree k(k-1)
        for k in (3, 4, 5):
            pairs = [(Fraction(s), Fraction(0)) for s in range(1, k + 1)]
            pairs += [(Fraction(-1), Fraction(7)), (Fraction(-2), Fraction(-5, 2))]
            F = braid_monodromy(LineArrangement.from_pairs(pairs))
            blocks = [f for f in F.factors if isinstance(f, BlockFactor)]
            assert len(blocks) == 1
            assert blocks[0].degree() == k * (k - 1)
            assert is_delta2_factorization(F)

    def test_expand_blocks(self):
        arr = arrangement((0, 0), (1, 0), (-1, 0))
        F = braid_monodromy(arr, expand_blocks=True)
        assert len(F.factors) == 3
        assert all(isinstance(f, StructuredFactor) for f in F.factors)
        assert all(f.exponent == 2 for f in F.factors)
        assert is_delta2_factorization(F)

    def test_expansion_preserves_keys_elsewhere(self, rng):
        # expansion happens in place: products agree exactly
        pairs = [(Fraction(s), Fraction(0)) for s in (1, 2, 3)] + [
            (Fraction(-1), Fraction(5))
        ]
        arr = LineArrangement.from_pairs(pairs)
        from braidmono import product_nf

        assert product_nf(braid_monodromy(arr)) == product_nf(
            braid_monodromy(arr, expand_blocks=True)
        )

    def test_affine_invariance(self, rng):
        for _ in range(10):
            arr = random_generic_arrangement(rng, rng.randint(2, 5))
            base = canonical_key(braid_monodromy(arr))
            # translate x by c: y = a(x - c) + b
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            shifted = LineArrangement.from_pairs(
                [(a, b - a * c) for a, b in arr.lines]
            )
            assert canonical_key(braid_monodromy(shifted)) == base
            # scale x by positive lambda: slope a/lam
            lam = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            scaled = LineArrangement.from_pairs(
                [(a / lam, b) for a, b in arr.lines]
            )
            assert canonical_key(braid_monodromy(scaled)) == base


def words_equal_product_is_delta2(F: Factorization) -> bool:
    from braidmono import full_twist, words_equal

    return words_equal(product(F), full_twist(F.strands))


class TestDegreeCheck:
    def test_generic_no_deficit(self, rng):
        for m in range(2, 7):
            arr = random_generic_arrangement(rng, m)
            rep = degree_check(arr)
            assert rep.achieved == rep.target == m * (m - 1)
            assert rep.deficit == 0 and not rep.parallel_pairs

    def test_concurrent_triple_counts(self):
        rep = degree_check(arrangement((0, 0), (1, 0), (-1, 0)))
        assert rep.achieved == 6 == rep.target

    def test_parallel_deficit(self):
        rep = degree_check(arrangement((0, 0), (0, 1), (1, 0)))
        assert (rep.achieved, rep.target, rep.deficit) == (4, 6, 2)
        assert rep.parallel_pairs == ((0, 1),)
        F = braid_monodromy(arrangement((0, 0), (0, 1), (1, 0)))
        assert not is_delta2_factorization(F)


class TestSameXPoints:
    def test_disjoint_blocks_accepted(self):
        # crossings (0,0) and (0,12) share x = 0 with disjoint fiber blocks
        arr = arrangement((1, 0), (-1, 0), (2, 12), (-2, 12))
        pts = singular_points(arr)
        same_x = [p for p in pts if p.x == 0]
        assert len(same_x) == 2
        assert {p.block for p in same_x} == {(1, 2), (3, 4)}
        assert is_delta2_factorization(braid_monodromy(arr))
