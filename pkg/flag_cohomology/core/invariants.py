"""Invariants Module

Graded pieces of the invariant rings S^{W_P} and of the ideal generated by the
positive-degree W-invariants inside S^{W_P}. Invariants are found as the joint
kernel of (s_i - 1) over the generating reflections, so the cost depends on
the number of generators and not on the group order.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .linear_algebra import RowEchelon, kernel_basis
from .polynomial import (
    GradedBasis,
    Polynomial,
    coefficient_vector,
    matrix_substitution,
    monomial_basis,
    poly_weyl_action,
)
from .root_system import ParabolicSubset, RootSystem, simple_reflection_matrix
from .weyl_group import WeylElement
from ..utils.cache import get_cache
from ..utils.config import IDEAL_GENERATOR_MODES
from ..utils.errors import InvalidParameter

logger = logging.getLogger(__name__)

_ideal_generators = 'indecomposable'


def set_ideal_generators(mode: str) -> None:
    """Choose how the ideal (S^W_+) is generated: 'indecomposable' or 'full'."""
    global _ideal_generators
    if mode not in IDEAL_GENERATOR_MODES:
        raise InvalidParameter(f"ideal_generators must be one of {IDEAL_GENERATOR_MODES}, got {mode!r}")
    _ideal_generators = mode


def clear_memo() -> None:
    """Drop the in-process memo of invariant bases, generators and ideal echelons."""
    _subspace.cache_clear()
    _fundamental_found.cache_clear()
    _ideal_echelon.cache_clear()


def _key(rs: RootSystem, gens: ParabolicSubset, degree: int) -> Tuple[str, Tuple[int, ...], int]:
    return str(rs.cartan_type), gens.sorted(), degree


def _compute_invariants(rs: RootSystem, gens: ParabolicSubset, degree: int) -> List[Polynomial]:
    basis = monomial_basis(rs.rank, degree)
    monomials = [Polynomial.monomial(exp) for exp in basis]
    if degree == 0 or not gens:
        return monomials

    n = len(basis)
    substitutions = [matrix_substitution(simple_reflection_matrix(rs, i).tolist()) for i in gens]
    columns = []
    for m in monomials:
        column: Dict[int, Fraction] = {}
        for g, sub in enumerate(substitutions):
            moved = sub.apply(m) - m
            for k, c in coefficient_vector(moved, degree).items():
                column[g * n + k] = c
        columns.append(column)

    return [Polynomial({basis[k]: c for k, c in vector.items()}, rs.rank)
            for vector in kernel_basis(columns)]


def invariant_subspace(rs: RootSystem, gens: ParabolicSubset, degree: int) -> GradedBasis:
    """
    Basis of the degree-d polynomials fixed by every s_i with i in ``gens``.

    Args:
        rs: Root system
        gens: Generating nodes of the subgroup (empty: all of S_d)
        degree: Polynomial degree (cohomological degree 2d)

    Returns:
        GradedBasis of the invariant subspace
    """
    gens = gens.validate(rs.rank)
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    return _subspace(rs, gens, degree)


@lru_cache(maxsize=4096)
def _subspace(rs: RootSystem, gens: ParabolicSubset, degree: int) -> GradedBasis:
    key = _key(rs, gens, degree)
    cache = get_cache()
    basis = None
    if cache is not None:
        texts = cache.load(key)
        if texts is not None:
            basis = [Polynomial.from_text(t, rs.rank) for t in texts]
    if basis is None:
        basis = _compute_invariants(rs, gens, degree)
        if cache is not None:
            cache.store(key, [p.to_text() for p in basis])

    result = GradedBasis(degree, tuple(basis))
    logger.debug("dim S^W_%s of %s in degree %d: %d", gens, rs, degree, len(result))
    return result


def invariant_dimension(rs: RootSystem, gens: ParabolicSubset, degree: int) -> int:
    return len(invariant_subspace(rs, gens, degree))


def minimal_parabolic_hilbert_dimension(rank: int, degree: int) -> int:
    """
    dim S^{<s_alpha>}_d from S^{<s_alpha>} = Sym(alpha^perp) (x) Q[alpha^2].

    Args:
        rank: Rank r of the root system
        degree: Polynomial degree d

    Returns:
        sum over 2j <= d of C(d - 2j + r - 2, r - 2); for r = 1, 1 if d is even else 0
    """
    if rank == 1:
        return 1 if degree % 2 == 0 else 0
    return sum(comb(degree - 2 * j + rank - 2, rank - 2) for j in range(degree // 2 + 1))


def reynolds_average(rs: RootSystem, elements: Sequence[WeylElement], p: Polynomial) -> Polynomial:
    """Average of w.p over the given group elements."""
    total = Polynomial.zero(p.nvars, p.var_names)
    for w in elements:
        total = total + poly_weyl_action(rs, w, p)
    return total / len(elements)


@lru_cache(maxsize=64)
def _fundamental_found(rs: RootSystem) -> Dict[int, List[Polynomial]]:
    # grown in place by fundamental_invariants, one table per root system
    return {}


def fundamental_invariants(rs: RootSystem, max_degree: int) -> Dict[int, List[Polynomial]]:
    """
    Indecomposable W-invariants by degree, up to ``max_degree``.

    In each degree the decomposable part S^W_+ . S^W_+ is spanned first and
    the invariants outside it are kept. The search ends once ``rank``
    generators are known, since S^W is a polynomial ring on exactly that many.

    Args:
        rs: Root system
        max_degree: Highest degree to search

    Returns:
        Degree -> new generators in that degree
    """
    found = _fundamental_found(rs)
    searched = max(found, default=1)
    count = sum(len(v) for v in found.values())
    all_nodes = rs.all_nodes()

    for e in range(max(searched + 1, 2), max_degree + 1):
        if count >= rs.rank:
            break
        echelon = RowEchelon()
        for a, generators in found.items():
            if e - a < 2:
                continue
            for f in generators:
                for g in invariant_subspace(rs, all_nodes, e - a):
                    echelon.insert(coefficient_vector(f * g, e))
        new = []
        for p in invariant_subspace(rs, all_nodes, e):
            if echelon.insert(coefficient_vector(p, e)):
                new.append(p)
        found[e] = new
        count += len(new)
        if new:
            logger.info("%s: %d fundamental invariant(s) in degree %d", rs, len(new), e)
    return {d: list(v) for d, v in found.items() if d <= max_degree and v}


def indecomposable_invariants(rs: RootSystem, degree: int) -> List[Polynomial]:
    """Invariants of the given degree spanning a complement of the decomposables."""
    return fundamental_invariants(rs, degree).get(degree, [])


def _ideal_factors(rs: RootSystem, degree: int, mode: str) -> List[Tuple[int, List[Polynomial]]]:
    if mode == 'full':
        all_nodes = rs.all_nodes()
        return [(e, list(invariant_subspace(rs, all_nodes, e))) for e in range(2, degree + 1)]
    return sorted(fundamental_invariants(rs, degree).items())


def ideal_echelon(rs: RootSystem, P: ParabolicSubset, degree: int,
                  mode: Optional[str] = None) -> RowEchelon:
    """
    Echelon form of the degree-d piece of the ideal (S^W_+) in S^{W_P}.

    Rows are the products f . g with f an ideal generator of degree e >= 2
    and g in the basis of S^{W_P}_{d-e}; insertion stops as soon as the span
    fills S^{W_P}_d. The returned object is shared, so callers copy before
    inserting.

    Args:
        rs: Root system
        P: Defining node set of the parabolic
        degree: Polynomial degree
        mode: 'indecomposable' or 'full' (module default when None)

    Returns:
        RowEchelon in monomial coordinates
    """
    mode = mode or _ideal_generators
    if mode not in IDEAL_GENERATOR_MODES:
        raise InvalidParameter(f"ideal_generators must be one of {IDEAL_GENERATOR_MODES}, got {mode!r}")
    return _ideal_echelon(rs, P.validate(rs.rank), degree, mode)


@lru_cache(maxsize=1024)
def _ideal_echelon(rs: RootSystem, P: ParabolicSubset, degree: int, mode: str) -> RowEchelon:
    target = invariant_dimension(rs, P, degree)
    echelon = RowEchelon()
    for e, generators in _ideal_factors(rs, degree, mode):
        if echelon.rank >= target:
            break
        cofactors = invariant_subspace(rs, P, degree - e)
        for f in generators:
            for g in cofactors:
                echelon.insert(coefficient_vector(f * g, degree))
                if echelon.rank >= target:
                    break
            if echelon.rank >= target:
                break

    logger.debug("ideal of %s in S^W_%s, degree %d: %d of %d", rs, P, degree, echelon.rank, target)
    return echelon


def ideal_graded_dimension(rs: RootSystem, P: ParabolicSubset, degree: int,
                           mode: Optional[str] = None) -> int:
    """
    dim of the degree-d piece of (S^W_+) inside S^{W_P}.

    Args:
        rs: Root system
        P: Defining node set of the parabolic
        degree: Polynomial degree

    Returns:
        Exact dimension; 0 in degrees 0 and 1
    """
    if degree < 2:
        return 0
    return ideal_echelon(rs, P, degree, mode).rank
