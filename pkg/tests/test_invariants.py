"""
Unit tests for invariant subspaces and the ideal generated by W-invariants.

Run tests with: python -m pytest tests/
"""

import os

import pytest

from flag_cohomology.core import invariants
from flag_cohomology.core.invariants import (
    fundamental_invariants,
    ideal_graded_dimension,
    indecomposable_invariants,
    invariant_dimension,
    invariant_subspace,
    minimal_parabolic_hilbert_dimension,
    reynolds_average,
)
from flag_cohomology.core.polynomial import Polynomial, poly_weyl_action, span_dimension
from flag_cohomology.core.root_system import ParabolicSubset, all_parabolic_subsets, root_system
from flag_cohomology.core.weyl_group import enumerate_weyl
from flag_cohomology.utils.cache import InvariantCache, configure_cache


def a(k, nvars=2):
    return Polynomial.variable(k - 1, nvars)


@pytest.fixture
def no_disk_cache():
    configure_cache(None)
    yield
    configure_cache(None)


@pytest.mark.usefixtures('no_disk_cache')
class TestInvariantSubspace:
    """Test invariant subspaces of parabolic subgroups."""

    def test_no_linear_invariants(self):
        """Test that A2 has no linear W-invariants."""
        rs = root_system('A2')
        assert invariant_dimension(rs, rs.all_nodes(), 1) == 0

    def test_a2_quadric(self):
        """Test that S^W_2 of A2 is spanned by alpha_1^2 + alpha_1 alpha_2 + alpha_2^2."""
        rs = root_system('A2')
        basis = invariant_subspace(rs, rs.all_nodes(), 2)
        q = a(1) * a(1) + a(1) * a(2) + a(2) * a(2)
        assert len(basis) == 1
        assert span_dimension(list(basis) + [q], 2) == 1

    def test_a2_minimal_parabolic_linear(self):
        """Test that the s_1-fixed linear forms are spanned by alpha_1 + 2 alpha_2."""
        rs = root_system('A2')
        basis = invariant_subspace(rs, ParabolicSubset.of(1), 1)
        assert len(basis) == 1
        assert span_dimension(list(basis) + [a(1) + a(2) * 2], 1) == 1
        assert rs.inner_product((1, 0), (1, 2)) == 0

    def test_basis_is_invariant(self):
        """Test that every basis element is fixed by the generators."""
        rs = root_system('B3')
        P = ParabolicSubset.of(2, 3)
        group = enumerate_weyl(rs, P)
        for p in invariant_subspace(rs, P, 3):
            for w in group:
                assert poly_weyl_action(rs, w, p) == p

    @pytest.mark.parametrize('text', ['A2', 'B2', 'G2', 'A3', 'B3', 'C3'])
    def test_every_parabolic_basis_is_fixed(self, text):
        """Test s_i.p == p for each basis element, each generator and every proper P."""
        rs = root_system(text)
        for P in all_parabolic_subsets(rs.rank):
            if len(P) == rs.rank:
                continue
            reflections = [w for w in enumerate_weyl(rs, P) if w.length == 1]
            assert len(reflections) == len(P)
            for d in range(1, 5):
                for p in invariant_subspace(rs, P, d):
                    for s in reflections:
                        assert poly_weyl_action(rs, s, p) == p

    def test_a3_end_node_linear_forms(self):
        """Test that the s_3-fixed linear forms of A3 are orthogonal to alpha_3."""
        rs = root_system('A3')
        basis = invariant_subspace(rs, ParabolicSubset.of(3), 1)
        assert len(basis) == 2
        s3 = [w for w in enumerate_weyl(rs, ParabolicSubset.of(3)) if w.length == 1][0]
        for p in basis:
            assert poly_weyl_action(rs, s3, p) == p

    def test_trivial_subgroup(self):
        """Test that the empty generator set gives all monomials."""
        rs = root_system('A3')
        assert invariant_dimension(rs, ParabolicSubset(), 2) == 6
        assert invariant_dimension(rs, ParabolicSubset(), 3) == 10

    @pytest.mark.parametrize('text', ['A2', 'B2', 'G2', 'A3', 'B3'])
    def test_w_invariants_inside_parabolic_invariants(self, text):
        """Test S^W_d is contained in S^{W_P}_d for every P."""
        rs = root_system(text)
        for d in range(2, 5):
            full = list(invariant_subspace(rs, rs.all_nodes(), d))
            for P in all_parabolic_subsets(rs.rank):
                partial = list(invariant_subspace(rs, P, d))
                assert span_dimension(partial + full, d) == len(partial)

    @pytest.mark.parametrize('text', ['A1', 'A2', 'B2', 'G2', 'A3', 'C3'])
    def test_minimal_parabolic_hilbert_series(self, text):
        """Test dim S^{<s_alpha>}_d against Sym(alpha^perp) (x) Q[alpha^2]."""
        rs = root_system(text)
        for node in range(1, rs.rank + 1):
            for d in range(6):
                assert invariant_dimension(rs, ParabolicSubset.of(node), d) == \
                    minimal_parabolic_hilbert_dimension(rs.rank, d)

    @pytest.mark.parametrize('text', ['A2', 'B2', 'G2'])
    def test_reynolds_average_lands_in_invariants(self, text):
        """Test that group averages are W-invariant."""
        rs = root_system(text)
        elements = enumerate_weyl(rs)
        for d, p in [(2, a(1) * a(1) * 3 + a(1) * a(2)),
                     (4, a(1) ** 4 - a(1) * a(2) ** 3 * 2)]:
            basis = list(invariant_subspace(rs, rs.all_nodes(), d))
            average = reynolds_average(rs, elements, p)
            assert average.is_homogeneous(d)
            assert span_dimension(basis + [average], d) == len(basis)


class TestHilbertFormula:
    """Test the closed-form count for minimal parabolics."""

    def test_values(self):
        """Test a few hand-computed values."""
        assert minimal_parabolic_hilbert_dimension(1, 3) == 0
        assert minimal_parabolic_hilbert_dimension(1, 4) == 1
        assert minimal_parabolic_hilbert_dimension(2, 3) == 2
        assert minimal_parabolic_hilbert_dimension(3, 2) == 4


@pytest.mark.usefixtures('no_disk_cache')
class TestFundamentalInvariants:
    """Test indecomposable invariants."""

    @pytest.mark.parametrize('text,degrees', [
        ('A1', [2]), ('A2', [2, 3]), ('A3', [2, 3, 4]),
        ('B2', [2, 4]), ('G2', [2, 6]), ('B3', [2, 4, 6]),
    ])
    def test_degrees(self, text, degrees):
        """Test the degrees of the basic invariants."""
        rs = root_system(text)
        found = fundamental_invariants(rs, 12)
        assert sorted(d for d, gens in found.items() for _ in gens) == degrees

    def test_indecomposable_in_degree(self):
        """Test lookup by degree."""
        rs = root_system('A2')
        assert len(indecomposable_invariants(rs, 3)) == 1
        assert indecomposable_invariants(rs, 4) == []


@pytest.mark.usefixtures('no_disk_cache')
class TestIdealDimension:
    """Test graded dimensions of the ideal (S^W_+) in S^{W_P}."""

    @pytest.mark.parametrize('degree', [0, 1])
    def test_low_degrees(self, degree):
        """Test that the ideal starts in degree 2."""
        rs = root_system('B3')
        assert ideal_graded_dimension(rs, ParabolicSubset(), degree) == 0

    def test_a1(self):
        """Test the span of alpha^2 for A1."""
        assert ideal_graded_dimension(root_system('A1'), ParabolicSubset(), 2) == 1

    def test_a2(self):
        """Test that only the quadric contributes in degree 2 for A2."""
        assert ideal_graded_dimension(root_system('A2'), ParabolicSubset(), 2) == 1

    @pytest.mark.parametrize('text', ['A2', 'B2', 'G2', 'A3'])
    def test_generator_modes_agree(self, text):
        """Test that indecomposable generators span the same ideal as full bases."""
        rs = root_system(text)
        for P in all_parabolic_subsets(rs.rank):
            for d in range(2, 6):
                assert ideal_graded_dimension(rs, P, d, 'full') == \
                    ideal_graded_dimension(rs, P, d, 'indecomposable')

    def test_invalid_mode(self):
        """Test rejection of an unknown generator mode."""
        with pytest.raises(ValueError):
            invariants.set_ideal_generators('minimal')


class TestInvariantCache:
    """Test the on-disk invariant cache."""

    def test_store_and_reload(self, tmp_path):
        """Test that a computed basis is written and read back."""
        configure_cache(str(tmp_path))
        try:
            invariants.clear_memo()
            rs = root_system('A2')
            computed = invariant_subspace(rs, rs.all_nodes(), 2)
            assert os.path.exists(tmp_path / "A2_1-2_d2.yaml")

            invariants.clear_memo()
            reloaded = invariant_subspace(rs, rs.all_nodes(), 2)
            assert list(reloaded) == list(computed)
        finally:
            configure_cache(None)
            invariants.clear_memo()

    def test_unreadable_file_ignored(self, tmp_path):
        """Test that a corrupt cache file is ignored."""
        cache = InvariantCache(str(tmp_path))
        key = ('A2', (1,), 1)
        with open(cache.path(key), 'w') as f:
            f.write("cartan_type: [unterminated")
        assert cache.load(key) is None

    def test_missing_file(self, tmp_path):
        """Test a cache miss."""
        assert InvariantCache(str(tmp_path)).load(('B2', (), 3)) is None


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
