"""
Unit tests for the Fl(1,2; C^{2n+2}) example: Chern classes, the Leray-Hirsch
ring and Schubert calculus on Gr(2, 2n+2).

Run tests with: python -m pytest tests/
"""

from fractions import Fraction

import pytest

from flag_cohomology.core.borel import betti_numbers
from flag_cohomology.core.grassmann import (
    LHElement,
    Partition2,
    SchubertSum,
    alternating_schubert_sum,
    alternating_sum_annihilated,
    chern_classes_twisted_cotangent,
    example_report,
    factor_relation,
    flag_parabolic_nodes,
    giambelli_pullback,
    giambelli_pullback_sum,
    identify_fiber_class,
    leray_hirsch_relation,
    lh_graded_dimensions,
    lh_variable,
    pieri_multiply,
    ring_reduce,
    schubert_signs,
)
from flag_cohomology.core.root_system import ParabolicSubset, root_system
from flag_cohomology.utils.errors import InvalidParameter, NotDivisible, PartitionOutOfBox, RankMismatch

D = lh_variable('D')
H = lh_variable('H')


def box_partitions(n):
    return [Partition2(a, b) for a in range(2 * n + 1) for b in range(a + 1)]


class TestChernClasses:
    """Test Chern classes of Omega(2) on P^m."""

    @pytest.mark.parametrize('m,expected', [
        (1, [1, 0]),
        (3, [1, 2, 2, 0]),
        (5, [1, 4, 7, 6, 3, 0]),
    ])
    def test_values(self, m, expected):
        """Test truncations of (1+h)^{m+1} / (1+2h)."""
        assert chern_classes_twisted_cotangent(m) == expected

    @pytest.mark.parametrize('m', [1, 3, 5, 7])
    def test_odd_top_class_vanishes(self, m):
        """Test the nowhere vanishing section in odd dimension."""
        assert chern_classes_twisted_cotangent(m)[-1] == 0

    @pytest.mark.parametrize('m', [2, 4])
    def test_even_top_class_nonzero(self, m):
        """Test the negative control in even dimension."""
        assert chern_classes_twisted_cotangent(m)[-1] != 0


class TestLerayHirschRelation:
    """Test f and its factorization f = f0 . D."""

    def test_n1(self):
        """Test f for n = 1."""
        assert leray_hirsch_relation(1) == D ** 3 - H * D * D * 2 + H * H * D * 2

    def test_n2(self):
        """Test f for n = 2."""
        expected = D ** 5 - H * D ** 4 * 4 + H ** 2 * D ** 3 * 7 - H ** 3 * D ** 2 * 6 + H ** 4 * D * 3
        assert leray_hirsch_relation(2) == expected

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_monic_in_d(self, n):
        """Test that f is homogeneous, monic in D and free of a pure H term."""
        f = leray_hirsch_relation(n)
        assert f.is_homogeneous(2 * n + 1)
        assert f.coefficient((2 * n + 1, 0)) == 1
        assert f.coefficient((0, 2 * n + 1)) == 0

    def test_f0(self):
        """Test f0 for n = 1 and n = 2."""
        assert factor_relation(1) == D * D - H * D * 2 + H * H * 2
        assert factor_relation(2) == D ** 4 - H * D ** 3 * 4 + H ** 2 * D ** 2 * 7 - H ** 3 * D * 6 + H ** 4 * 3

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_reconstruction(self, n):
        """Test f0 . D = f."""
        f0 = factor_relation(n)
        assert f0.is_homogeneous(2 * n)
        assert f0 * D == leray_hirsch_relation(n)

    def test_not_divisible(self):
        """Test exact division failure on a pure H term."""
        with pytest.raises(NotDivisible):
            (D * D + H * H).divide_by_monomial((1, 0))


class TestRingReduce:
    """Test normal forms in Q[H, D] / (H^{2n+2}, f)."""

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_h_power_vanishes(self, n):
        """Test H^{2n+2} = 0."""
        assert ring_reduce(n, H ** (2 * n + 2)).is_zero()

    def test_d_cubed(self):
        """Test D^3 = 2 H D^2 - 2 H^2 D for n = 1."""
        assert ring_reduce(1, D ** 3) == LHElement.from_mapping(1, {(1, 2): 2, (2, 1): -2})

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_relation_vanishes(self, n):
        """Test f0 . D = 0 in the ring."""
        assert ring_reduce(n, factor_relation(n) * D).is_zero()

    @pytest.mark.parametrize('n', [1, 2])
    def test_idempotent_and_graded(self, n):
        """Test that reduction is idempotent and keeps degrees."""
        p = D ** (2 * n + 3) + H * D ** (2 * n + 2) * 3 - H ** 2 * D ** (2 * n + 1)
        reduced = ring_reduce(n, p)
        assert ring_reduce(n, reduced.to_polynomial()) == reduced
        assert reduced.is_homogeneous()
        assert reduced.is_zero() or reduced.degree == 2 * n + 3

    def test_multiplicative(self):
        """Test reduce(p q) = reduce(p) reduce(q)."""
        p = D ** 2 + H * D
        q = D ** 3 - H ** 2 * D * Fraction(1, 2)
        assert ring_reduce(1, p * q) == ring_reduce(1, p) * ring_reduce(1, q)

    def test_normal_form_bounds(self):
        """Test that normal forms stay inside the monomial box."""
        reduced = ring_reduce(2, (D + H) ** 9)
        for (i, j), _ in reduced.coeffs:
            assert i <= 5 and j <= 4

    def test_to_json(self):
        """Test the JSON schema of ring elements."""
        element = ring_reduce(1, D * H * 2 - H * H * Fraction(1, 3))
        assert element.to_json() == {
            'n': 1,
            'terms': [{'h': 2, 'd': 0, 'c': '-1/3'}, {'h': 1, 'd': 1, 'c': '2'}],
        }

    def test_mismatched_n(self):
        """Test that elements for different n do not mix."""
        with pytest.raises(RankMismatch):
            ring_reduce(1, D) + ring_reduce(2, D)


class TestPartitionAndPieri:
    """Test two-row partitions and the Pieri rule."""

    def test_box(self):
        """Test the 2 x 2n box constraint."""
        assert Partition2.in_box(2, 1, 1) == Partition2(2, 1)
        with pytest.raises(PartitionOutOfBox):
            Partition2.in_box(3, 0, 1)
        with pytest.raises(PartitionOutOfBox):
            Partition2(1, 2)

    def test_n1_examples(self):
        """Test S[1,1] . sigma_1 and S[2,0] . sigma_1 for n = 1."""
        assert pieri_multiply(1, SchubertSum.single(1, 1)) == SchubertSum.single(2, 1)
        assert pieri_multiply(1, SchubertSum.single(2, 0)) == SchubertSum.single(2, 1)

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_top_class(self, n):
        """Test that the top class is killed by sigma_1."""
        assert pieri_multiply(n, SchubertSum.single(2 * n, 2 * n)).is_zero()

    def test_out_of_box_input(self):
        """Test rejection of partitions outside the box."""
        with pytest.raises(PartitionOutOfBox):
            pieri_multiply(1, SchubertSum.single(3, 0))

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_against_adding_one_box(self, n):
        """Test Pieri against every in-box partition containing lambda with one more box."""
        partitions = box_partitions(n)
        for lam in partitions:
            expected = SchubertSum({mu: 1 for mu in partitions
                                    if mu.size == lam.size + 1 and mu.a >= lam.a and mu.b >= lam.b})
            assert pieri_multiply(n, SchubertSum({lam: 1})) == expected


class TestAlternatingSum:
    """Test the alternating Schubert sum."""

    def test_n1(self):
        """Test S[1,1] - S[2,0]."""
        s = alternating_schubert_sum(1)
        assert s == SchubertSum.single(1, 1) - SchubertSum.single(2, 0)
        assert s.pretty() == "S[1,1] - S[2,0]"

    def test_n2_by_hand(self):
        """Test S[3,2] - (S[4,1] + S[3,2]) + S[4,1] = 0."""
        s = SchubertSum.single(2, 2) - SchubertSum.single(3, 1) + SchubertSum.single(4, 0)
        assert s == alternating_schubert_sum(2)
        assert pieri_multiply(2, s).is_zero()

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_annihilated(self, n):
        """Test that sigma_1 kills the alternating sum."""
        assert alternating_sum_annihilated(n)

    def test_signs(self):
        """Test the mixed signs of the alternating sum."""
        assert schubert_signs(2) == {'positive': 2, 'negative': 1}
        assert not alternating_schubert_sum(1).is_effective()

    def test_to_json(self):
        """Test the JSON schema of Schubert sums."""
        assert alternating_schubert_sum(1).to_json() == {
            'terms': [{'a': 1, 'b': 1, 'coef': 1}, {'a': 2, 'b': 0, 'coef': -1}],
        }


class TestGiambelli:
    """Test pullbacks of Schubert classes to the flag variety."""

    def test_sigma1(self):
        """Test sigma_1 -> D."""
        assert giambelli_pullback(1, Partition2(1, 0)).to_polynomial() == D

    def test_sigma11(self):
        """Test sigma_{1,1} -> D H - H^2."""
        assert giambelli_pullback(1, Partition2(1, 1)).to_polynomial() == D * H - H * H

    def test_sigma2(self):
        """Test S[2,0] -> D^2 - D H + H^2 for n = 1."""
        assert giambelli_pullback(1, Partition2(2, 0)).to_polynomial() == D * D - D * H + H * H

    def test_out_of_box(self):
        """Test rejection of partitions outside the box."""
        with pytest.raises(PartitionOutOfBox):
            giambelli_pullback(1, Partition2(3, 1))

    @pytest.mark.parametrize('n', [1, 2])
    def test_pullback_respects_pieri(self, n):
        """Test pullback(S . sigma_1) = pullback(S) . D."""
        d = ring_reduce(n, D)
        for lam in box_partitions(n):
            s = SchubertSum({lam: 1})
            assert giambelli_pullback_sum(n, pieri_multiply(n, s)) == giambelli_pullback(n, lam) * d

    @pytest.mark.parametrize('n', [1, 2])
    def test_image_closed_under_sigma11(self, n):
        """Test that multiplying by D H - H^2 stays in the pullback image."""
        sigma11 = ring_reduce(n, D * H - H * H)
        partitions = box_partitions(n)
        for lam in partitions:
            product = giambelli_pullback(n, lam) * sigma11
            if lam.a + 1 <= 2 * n and lam.b + 1 <= 2 * n:
                assert product == giambelli_pullback(n, Partition2(lam.a + 1, lam.b + 1))
            else:
                assert product.is_zero()


class TestFiberClass:
    """Test the identification of the fiber class with f0."""

    def test_n1(self):
        """Test epsilon = -1 for n = 1."""
        assert identify_fiber_class(1) == -1

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_sign_alternates(self, n):
        """Test epsilon = (-1)^n, read off the D^{2n} coefficient."""
        assert identify_fiber_class(n) == (-1) ** n

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_fiber_class_nonzero(self, n):
        """Test that f0 survives in the ring."""
        assert not ring_reduce(n, factor_relation(n)).is_zero()


class TestGradedDimensions:
    """Test the graded dimensions of the Leray-Hirsch ring."""

    def test_n1(self):
        """Test the monomial count for n = 1."""
        assert lh_graded_dimensions(1) == [1, 2, 3, 3, 2, 1]

    def test_matches_borel_presentation(self):
        """Test against H*(A3 / P) with P = {3}."""
        assert flag_parabolic_nodes(1) == (3,)
        table = betti_numbers(root_system('A3'), ParabolicSubset.of(3))
        assert table.to_list() == lh_graded_dimensions(1)

    def test_total(self):
        """Test that the total rank is (2n+2)(2n+1)."""
        for n in (1, 2, 3):
            assert sum(lh_graded_dimensions(n)) == (2 * n + 2) * (2 * n + 1)


class TestExampleReport:
    """Test the assembled example report."""

    def test_n1(self):
        """Test every entry for n = 1."""
        report = example_report(1)
        assert report['chern'] == [1, 2, 2, 0]
        assert report['f0_text'] == "D^2 - 2*D*H + 2*H^2"
        assert report['f0'] == ring_reduce(1, factor_relation(1)).to_json()
        assert report['alternating_sum'] == alternating_schubert_sum(1).to_json()
        assert {(t['h'], t['d']) for t in report['f']['terms']} == \
            {(i, j) for (j, i) in leray_hirsch_relation(1).terms}
        assert report['epsilon'] == -1
        for key in ('top_chern_vanishes', 'f_equals_f0_D', 'f0_D_vanishes',
                    'f0_nonzero_in_ring', 'alternating_sum_annihilated'):
            assert report[key] is True

    @pytest.mark.parametrize('n', [0, -1])
    def test_invalid_n(self, n):
        """Test that n < 1 raises InvalidParameter."""
        with pytest.raises(InvalidParameter):
            example_report(n)
        with pytest.raises(InvalidParameter):
            chern_classes_twisted_cotangent(n)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
