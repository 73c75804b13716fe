"""Core modules for flag-variety cohomology computations."""

from .root_system import (
    CartanType,
    ParabolicSubset,
    RootSystem,
    build_root_system,
    invariant_gram,
    parse_cartan_type,
    root_system,
    simple_reflection_matrix,
)
from .weyl_group import BettiTable, WeylElement, WeylGroup, coset_length_counts, enumerate_weyl, length
from .polynomial import GradedBasis, Polynomial, monomial_basis, poly_weyl_action, span_dimension
from .invariants import ideal_graded_dimension, invariant_subspace
from .borel import (
    GenerationReport,
    ReductionCertificate,
    alpha_square_reduction,
    betti_numbers,
    complex_dimension,
    cross_check_betti,
    degree2_generation_check,
)
from .grassmann import (
    LHElement,
    Partition2,
    SchubertSum,
    alternating_sum_annihilated,
    chern_classes_twisted_cotangent,
    factor_relation,
    giambelli_pullback,
    identify_fiber_class,
    leray_hirsch_relation,
    pieri_multiply,
    ring_reduce,
)

__all__ = [
    'CartanType',
    'ParabolicSubset',
    'RootSystem',
    'build_root_system',
    'invariant_gram',
    'parse_cartan_type',
    'root_system',
    'simple_reflection_matrix',
    'BettiTable',
    'WeylElement',
    'WeylGroup',
    'coset_length_counts',
    'enumerate_weyl',
    'length',
    'GradedBasis',
    'Polynomial',
    'monomial_basis',
    'poly_weyl_action',
    'span_dimension',
    'ideal_graded_dimension',
    'invariant_subspace',
    'GenerationReport',
    'ReductionCertificate',
    'alpha_square_reduction',
    'betti_numbers',
    'complex_dimension',
    'cross_check_betti',
    'degree2_generation_check',
    'LHElement',
    'Partition2',
    'SchubertSum',
    'alternating_sum_annihilated',
    'chern_classes_twisted_cotangent',
    'factor_relation',
    'giambelli_pullback',
    'identify_fiber_class',
    'leray_hirsch_relation',
    'pieri_multiply',
    'ring_reduce',
]
