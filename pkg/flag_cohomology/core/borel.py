"""Borel Presentation Module

Assembles H*(G/P; Q) = S^{W_P} / (S^W_+), with linear forms in cohomological
degree 2, and checks it against the Schubert-cell count. Also decides whether
the quotient is generated by its degree-2 part, and builds the explicit
certificate expressing alpha^2 through squares of forms orthogonal to alpha.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .invariants import (
    ideal_echelon,
    ideal_graded_dimension,
    invariant_dimension,
    invariant_subspace,
)
from .linear_algebra import RowEchelon
from .polynomial import Polynomial, coefficient_vector, matrix_substitution
from .root_system import (
    ParabolicSubset,
    RootSystem,
    adjugate_gram,
    all_parabolic_subsets,
    check_node,
    dynkin_is_connected,
    gram_determinant,
    simple_reflection_matrix,
)
from .weyl_group import (
    DEFAULT_MAX_GROUP_ORDER,
    BettiTable,
    coset_length_counts,
    parabolic_positive_roots,
)
from ..utils.errors import NotSimpleType, PresentationError
from ..utils.helpers import format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenerationReport:
    """
    Outcome of the degree-2 generation check.

    Attributes:
        holds: True iff the quotient is generated by its degree-1 part
        first_failing_degree: Lowest degree where generation falls short
        deficit: Missing dimension at that degree
        betti: Graded dimensions of the quotient
        generated: Dimensions of the subalgebra generated in degree 1
    """

    holds: bool
    first_failing_degree: Optional[int] = None
    deficit: Optional[int] = None
    betti: Optional[BettiTable] = None
    generated: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.holds != (self.first_failing_degree is None) or self.holds != (self.deficit is None):
            raise PresentationError("a report holds iff it names no failing degree and no deficit")

    def to_json(self) -> Dict:
        return {
            'holds': self.holds,
            'first_failing_degree': self.first_failing_degree,
            'deficit': self.deficit,
            'betti': self.betti.to_list() if self.betti is not None else None,
            'generated': list(self.generated),
        }


def _linear_coordinates(p: Polynomial) -> Tuple[Fraction, ...]:
    if not p.is_homogeneous(1):
        raise PresentationError(f"{p.pretty()} is not a linear form")
    return tuple(p.coefficient(tuple(1 if j == k else 0 for j in range(p.nvars)))
                 for k in range(p.nvars))


@dataclass(frozen=True)
class ReductionCertificate:
    """
    q = a alpha^2 + sum_i b_i beta_i^2 with the beta_i orthogonal to alpha and to each other.

    Since q lies in (S^W_+), alpha^2 is congruent to -sum_i (b_i/a) beta_i^2,
    a combination of squares of s_alpha-invariant linear forms.

    Attributes:
        alpha: Node index of the simple root
        a: Coefficient of alpha^2
        pairs: (b_i, beta_i) with beta_i a linear form
        q: The W-invariant quadric
    """

    alpha: int
    a: Fraction
    pairs: Tuple[Tuple[Fraction, Polynomial], ...]
    q: Polynomial

    def reconstruction(self) -> Polynomial:
        """a alpha^2 + sum_i b_i beta_i^2."""
        alpha = Polynomial.variable(self.alpha - 1, self.q.nvars)
        total = alpha * alpha * self.a
        for b, beta in self.pairs:
            total = total + beta * beta * b
        return total

    def reduction(self) -> Polynomial:
        """-sum_i (b_i / a) beta_i^2, congruent to alpha^2 modulo (S^W_+)."""
        total = Polynomial.zero(self.q.nvars)
        for b, beta in self.pairs:
            total = total - beta * beta * (b / self.a)
        return total

    def verify(self, rs: RootSystem) -> bool:
        """
        Check every certificate invariant exactly.

        Raises:
            PresentationError: naming the first invariant that fails
        """
        if not self.a:
            raise PresentationError("coefficient of alpha^2 vanishes")
        alpha = tuple(1 if k == self.alpha - 1 else 0 for k in range(rs.rank))
        betas = [_linear_coordinates(beta) for _, beta in self.pairs]
        for i, u in enumerate(betas):
            if rs.inner_product(u, alpha) != 0:
                raise PresentationError(f"beta_{i + 1} is not orthogonal to alpha_{self.alpha}")
            for j in range(i):
                if rs.inner_product(u, betas[j]) != 0:
                    raise PresentationError(f"beta_{j + 1} and beta_{i + 1} are not orthogonal")
        if self.reconstruction() != self.q:
            raise PresentationError("a alpha^2 + sum b_i beta_i^2 does not reproduce q")
        for i in range(1, rs.rank + 1):
            if matrix_substitution(simple_reflection_matrix(rs, i).tolist()).apply(self.q) != self.q:
                raise PresentationError(f"q is not invariant under s_{i}")
        return True

    def to_json(self) -> Dict:
        return {
            'alpha': self.alpha,
            'a': format_rational(self.a),
            'pairs': [{'b': format_rational(b), 'beta': beta.to_text()} for b, beta in self.pairs],
            'q': self.q.to_text(),
            'reduction': self.reduction().to_text(),
        }


def complex_dimension(rs: RootSystem, P: ParabolicSubset) -> int:
    """Positive roots outside the root subsystem of P."""
    P.validate(rs.rank)
    return len(rs.positive_roots) - len(parabolic_positive_roots(rs, P))


def quotient_dimension(rs: RootSystem, P: ParabolicSubset, degree: int) -> int:
    """dim S^{W_P}_d - dim (S^W_+)_d."""
    return invariant_dimension(rs, P, degree) - ideal_graded_dimension(rs, P, degree)


def betti_numbers(rs: RootSystem, P: ParabolicSubset) -> BettiTable:
    """
    Graded dimensions of S^{W_P} / (S^W_+) in degrees 0..dim_C(G/P).

    Args:
        rs: Root system
        P: Defining node set of the parabolic

    Returns:
        BettiTable with dims[d] = dim H^{2d}(G/P)

    Raises:
        PresentationError: if the quotient is non-zero one degree above the dimension
    """
    dimension = complex_dimension(rs, P)
    dims = []
    for d in range(dimension + 1):
        dims.append(quotient_dimension(rs, P, d))
        logger.debug("%s/P%s: dim H^%d = %d", rs, P, 2 * d, dims[-1])
    excess = quotient_dimension(rs, P, dimension + 1)
    if excess:
        raise PresentationError(f"quotient for {rs} with P = {P} has dimension {excess} "
                                f"in degree {dimension + 1}, above the complex dimension")
    return BettiTable(tuple(dims))


def euler_characteristic(rs: RootSystem, P: ParabolicSubset) -> int:
    return betti_numbers(rs, P).total


def cross_check_betti(rs: RootSystem, P: ParabolicSubset,
                      max_order: int = DEFAULT_MAX_GROUP_ORDER) -> bool:
    """True iff the Borel presentation and the Schubert-cell count agree entrywise."""
    borel = betti_numbers(rs, P)
    cells = coset_length_counts(rs, P, max_order)
    if borel != cells:
        logger.warning("Betti mismatch for %s, P = %s: presentation %s, cells %s",
                       rs, P, borel.to_list(), cells.to_list())
        return False
    return True


def degree2_generation_check(rs: RootSystem, P: ParabolicSubset) -> GenerationReport:
    """
    Decide whether H*(G/P) is generated by H^2.

    G_0 is the constants and G_d is spanned by G_{d-1} times the degree-1
    invariants, taken modulo the ideal. Generation holds iff dim G_d equals
    the Betti number in every degree up to the complex dimension.

    Args:
        rs: Root system
        P: Defining node set of the parabolic

    Returns:
        GenerationReport
    """
    betti = betti_numbers(rs, P)
    linear = list(invariant_subspace(rs, P, 1))
    representatives = [Polynomial.constant(1, rs.rank)]
    generated = [1]

    for d in range(1, betti.top_degree + 1):
        echelon = ideal_echelon(rs, P, d).copy() if d >= 2 else RowEchelon()
        base = echelon.rank
        next_representatives = []
        for r in representatives:
            for ell in linear:
                product = r * ell
                if echelon.insert(coefficient_vector(product, d)):
                    next_representatives.append(product)
        generated.append(echelon.rank - base)
        if generated[-1] != betti[d]:
            deficit = betti[d] - generated[-1]
            logger.info("%s, P = %s: generation by H^2 fails in degree %d (deficit %d)",
                        rs, P, 2 * d, deficit)
            return GenerationReport(False, d, deficit, betti, tuple(generated))
        representatives = next_representatives

    return GenerationReport(True, None, None, betti, tuple(generated))


def generation_survey(rs: RootSystem) -> Dict[ParabolicSubset, GenerationReport]:
    """Generation reports for every parabolic subset, smallest first."""
    return {P: degree2_generation_check(rs, P) for P in all_parabolic_subsets(rs.rank)}


def invariant_quadric(rs: RootSystem) -> Polynomial:
    """
    q = 1/2 sum_ij adj(gram)_ij alpha_i alpha_j, the W-invariant element of S_2.

    For A2 this is alpha_1^2 + alpha_1 alpha_2 + alpha_2^2.
    """
    adj = adjugate_gram(rs)
    n = rs.rank
    terms = {}
    for i in range(n):
        for j in range(i, n):
            exp = tuple((k == i) + (k == j) for k in range(n))
            terms[exp] = adj[i][j] / 2 if i == j else adj[i][j]
    return Polynomial(terms, n)


def _primitive_vector(v: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = reduce(lcm, (Fraction(c).denominator for c in v), 1)
    ints = [int(Fraction(c) * scale) for c in v]
    content = reduce(gcd, ints, 0) or 1
    ints = [c // content for c in ints]
    lead = next((c for c in ints if c), 1)
    return tuple(-c for c in ints) if lead < 0 else tuple(ints)


def orthogonal_complement_basis(rs: RootSystem, node: int) -> List[Tuple[int, ...]]:
    """
    Pairwise orthogonal integer basis of alpha^perp, without square roots.

    Starts from v_j = e_j - (gram_jk / gram_kk) e_k for j != k and runs
    Gram-Schmidt, dividing only by squared norms.
    """
    k = check_node(rs, node) - 1
    n = rs.rank
    g = rs.gram
    spanning = []
    for j in range(n):
        if j == k:
            continue
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        v[k] = -g[j][k] / g[k][k]
        spanning.append(v)

    orthogonal: List[Tuple[int, ...]] = []
    for v in spanning:
        w = list(v)
        for u in orthogonal:
            coef = rs.inner_product(v, u) / rs.inner_product(u, u)
            w = [x - coef * y for x, y in zip(w, u)]
        orthogonal.append(_primitive_vector(w))
    return orthogonal


def alpha_square_reduction(rs: RootSystem, alpha_node: int) -> ReductionCertificate:
    """
    Write the invariant quadric as a alpha^2 + sum_i b_i beta_i^2.

    With beta_i an orthogonal basis of alpha^perp, the dual form splits as
    q = sum over {alpha, beta_i} of det(gram) / (2 (u, u)) u^2.

    Args:
        rs: A simple root system
        alpha_node: Node of the simple root alpha

    Returns:
        A verified ReductionCertificate

    Raises:
        NotSimpleType: if the Dynkin diagram is disconnected
        NodeOutOfRange: if alpha_node is not a node
    """
    if not dynkin_is_connected(rs.cartan_matrix):
        raise NotSimpleType(f"{rs} is not simple; certificates are built per simple factor")
    node = check_node(rs, alpha_node)
    # q is the dual of the gram form scaled by det(gram)/2, so A1 gives q = alpha^2 / 2
    # and a = 1/2; another scaling of q multiplies a and every b_i alike
    det = gram_determinant(rs)
    alpha = tuple(1 if k == node - 1 else 0 for k in range(rs.rank))
    a = det / (2 * rs.inner_product(alpha, alpha))
    pairs = tuple((det / (2 * rs.inner_product(u, u)), Polynomial.linear_form(u))
                  for u in orthogonal_complement_basis(rs, node))
    certificate = ReductionCertificate(node, a, pairs, invariant_quadric(rs))
    certificate.verify(rs)
    return certificate
