"""
Flag Cohomology
===============

Exact computations in the rational cohomology of generalized flag varieties
G/P through the Borel presentation H*(G/P) = S^{W_P} / (S^W_+).

This package provides tools for:
- Root systems, Weyl groups and Schubert-cell Betti numbers
- Invariant polynomials of reflection groups over exact rationals
- Degree-2 generation checks and alpha^2 reduction certificates
- The Leray-Hirsch ring of Fl(1, 2; C^{2n+2}) and its Schubert identities
"""

__version__ = "0.1.0"

from .core.root_system import CartanType, ParabolicSubset, RootSystem, build_root_system, root_system
from .core.weyl_group import BettiTable, WeylElement, WeylGroup
from .core.polynomial import GradedBasis, Polynomial
from .core.borel import GenerationReport, ReductionCertificate
from .core.grassmann import LHElement, Partition2, SchubertSum

__all__ = [
    'CartanType',
    'ParabolicSubset',
    'RootSystem',
    'build_root_system',
    'root_system',
    'BettiTable',
    'WeylElement',
    'WeylGroup',
    'GradedBasis',
    'Polynomial',
    'GenerationReport',
    'ReductionCertificate',
    'LHElement',
    'Partition2',
    'SchubertSum',
]
