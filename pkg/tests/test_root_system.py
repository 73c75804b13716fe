"""
Unit tests for root systems, reflections and the invariant form.

Run tests with: python -m pytest tests/
"""

import numpy as np
import pytest
import sympy as sp

from flag_cohomology.core.root_system import (
    CartanType,
    ParabolicSubset,
    all_parabolic_subsets,
    build_root_system,
    dynkin_is_connected,
    invariant_gram,
    parse_cartan_type,
    root_system,
    simple_reflection_matrix,
)
from flag_cohomology.utils.errors import InvalidCartanType, NodeOutOfRange

SMALL_TYPES = ['A1', 'A2', 'A3', 'A4', 'B2', 'B3', 'B4', 'C3', 'C4', 'D4', 'G2', 'F4']


class TestCartanType:
    """Test Cartan type parsing and validation."""

    def test_parse_case_insensitive(self):
        """Test that family letters are case-insensitive."""
        assert parse_cartan_type("f4") == CartanType('F', 4)
        assert str(parse_cartan_type(" a2 ")) == "A2"

    @pytest.mark.parametrize('text', ['Z9', 'C2', 'D3', 'E9', 'G3', 'F5', 'A0', 'A', ''])
    def test_invalid_types(self, text):
        """Test that illegal family/rank combinations are rejected."""
        with pytest.raises(InvalidCartanType, match="invalid Cartan type"):
            parse_cartan_type(text)

    def test_simply_laced(self):
        """Test the simply-laced families."""
        assert CartanType('D', 4).is_simply_laced
        assert not CartanType('G', 2).is_simply_laced


class TestRootSystem:
    """Test root system construction."""

    @pytest.mark.parametrize('text,count', [
        ('A1', 1), ('A2', 3), ('A3', 6), ('A4', 10),
        ('B2', 4), ('B3', 9), ('B4', 16), ('C3', 9), ('C4', 16),
        ('D4', 12), ('G2', 6), ('F4', 24), ('E6', 36),
    ])
    def test_positive_root_counts(self, text, count):
        """Test the classical number of positive roots."""
        assert len(root_system(text).positive_roots) == count

    def test_rank_one(self):
        """Test the A1 root system."""
        rs = root_system('A1')
        assert rs.positive_roots == ((1,),)

    def test_a2_roots(self):
        """Test A2 positive roots and their order."""
        rs = root_system('A2')
        assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
        assert rs.positive_roots == ((0, 1), (1, 0), (1, 1))

    def test_g2_heights(self):
        """Test that G2 roots have heights 1 through 5."""
        rs = root_system('G2')
        assert sorted({sum(r) for r in rs.positive_roots}) == [1, 2, 3, 4, 5]
        assert rs.highest_root == (3, 2)

    @pytest.mark.parametrize('text', SMALL_TYPES)
    def test_cartan_matrix_shape(self, text):
        """Test diagonal entries 2 and non-positive off-diagonal entries."""
        a = root_system(text).cartan_matrix
        for i, row in enumerate(a):
            for j, x in enumerate(row):
                assert x == 2 if i == j else x <= 0
        assert dynkin_is_connected(a)

    def test_disconnected_diagram(self):
        """Test connectivity detection on A1 x A1."""
        assert not dynkin_is_connected(((2, 0), (0, 2)))

    @pytest.mark.parametrize('text', SMALL_TYPES)
    def test_reflections_preserve_roots(self, text):
        """Test that every simple reflection permutes the roots."""
        rs = root_system(text)
        for i in range(1, rs.rank + 1):
            s = simple_reflection_matrix(rs, i)
            for r in rs.positive_roots:
                assert rs.is_root(s @ np.array(r))
                assert rs.is_root(-(s @ np.array(r)))

    def test_highest_root_orthogonality(self):
        """Test <theta, alpha_1 - alpha_2> = 0 for A2."""
        rs = root_system('A2')
        assert rs.highest_root == (1, 1)
        assert rs.inner_product(rs.highest_root, (1, -1)) == 0


class TestSimpleReflection:
    """Test simple reflection matrices."""

    def test_a1(self):
        """Test the rank one reflection."""
        assert simple_reflection_matrix(root_system('A1'), 1).tolist() == [[-1]]

    def test_a2_first_reflection(self):
        """Test s_1(alpha_1) = -alpha_1 and s_1(alpha_2) = alpha_1 + alpha_2."""
        s = simple_reflection_matrix(root_system('A2'), 1)
        assert s[:, 0].tolist() == [-1, 0]
        assert s[:, 1].tolist() == [1, 1]

    @pytest.mark.parametrize('text', SMALL_TYPES)
    def test_involution(self, text):
        """Test S^2 = identity."""
        rs = root_system(text)
        for i in range(1, rs.rank + 1):
            s = simple_reflection_matrix(rs, i)
            assert np.array_equal(s @ s, np.eye(rs.rank, dtype=np.int64))

    @pytest.mark.parametrize('node', [0, 3, -1])
    def test_node_out_of_range(self, node):
        """Test rejection of nodes outside 1..rank."""
        with pytest.raises(NodeOutOfRange):
            simple_reflection_matrix(root_system('A2'), node)


class TestInvariantGram:
    """Test the W-invariant form."""

    def test_a1(self):
        """Test the A1 form."""
        assert invariant_gram(root_system('A1')).tolist() == [[2]]

    def test_a2(self):
        """Test the A2 form."""
        assert invariant_gram(root_system('A2')).tolist() == [[2, -1], [-1, 2]]

    def test_b2(self):
        """Test the B2 form with minimal integer symmetrizers."""
        rs = root_system('B2')
        assert rs.symmetrizers == (2, 1)
        assert invariant_gram(rs).tolist() == [[4, -2], [-2, 2]]

    @pytest.mark.parametrize('text', SMALL_TYPES + ['E6'])
    def test_invariance_and_definiteness(self, text):
        """Test symmetry, positive definiteness and S^T G S = G."""
        rs = root_system(text)
        gram = invariant_gram(rs)
        assert gram == gram.T
        assert gram.is_positive_definite
        for i in range(1, rs.rank + 1):
            s = sp.Matrix(simple_reflection_matrix(rs, i).tolist())
            assert s.T * gram * s == gram

    def test_transposed_convention_breaks_invariance(self):
        """Test that the transposed reflection formula does not preserve the B2 form."""
        rs = root_system('B2')
        gram = invariant_gram(rs)
        s = sp.Matrix(simple_reflection_matrix(rs, 2).tolist())
        assert s * gram * s.T != gram


class TestParabolicSubset:
    """Test parabolic node sets."""

    def test_from_text(self):
        """Test parsing node lists, including the empty Borel case."""
        assert ParabolicSubset.from_text("1,3") == ParabolicSubset.of(1, 3)
        assert ParabolicSubset.from_text("") == ParabolicSubset()
        assert str(ParabolicSubset.of(3, 1)) == "{1,3}"

    def test_validate(self):
        """Test node range validation against the rank."""
        with pytest.raises(NodeOutOfRange):
            ParabolicSubset.of(4).validate(3)
        with pytest.raises(NodeOutOfRange):
            ParabolicSubset.of(0)

    def test_all_subsets(self):
        """Test enumeration of all 2^rank subsets."""
        subsets = all_parabolic_subsets(3)
        assert len(subsets) == 8
        assert subsets[0] == ParabolicSubset()
        assert subsets[-1] == build_root_system(CartanType('A', 3)).all_nodes()


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
