"""Weyl Group Module

Enumerates Weyl groups and their parabolic subgroups as integer matrices
acting on t*_Q, computes lengths, and counts minimal coset representatives
by length. The coset counts are the Schubert-cell oracle for the Betti
numbers of G/P.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .root_system import (
    CartanType,
    ParabolicSubset,
    RootSystem,
    check_node,
    simple_reflection_matrix,
)
from ..utils.errors import GroupTooLarge, NotAWeylElement

logger = logging.getLogger(__name__)

DEFAULT_MAX_GROUP_ORDER = 51840  # |W(E6)|

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    """
    A Weyl group element with one reduced word.

    Attributes:
        matrix: Action on t*_Q in simple-root coordinates (column j is w(alpha_j))
        word: Lexicographically minimal reduced word, 1-based node indices
    """

    matrix: IntMatrix
    word: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def image(self, i: int) -> Tuple[int, ...]:
        """w(alpha_i) for a 1-based node index."""
        return tuple(row[i - 1] for row in self.matrix)

    def is_identity(self) -> bool:
        return not self.word


@dataclass(frozen=True)
class BettiTable:
    """
    Graded dimensions dim H^{2d}(G/P), indexed by d.

    Attributes:
        dims: Non-negative integers, dims[0] = 1 for a genuine G/P
    """

    dims: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'dims', tuple(int(x) for x in self.dims))

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, d: int) -> int:
        return self.dims[d]

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def is_palindromic(self) -> bool:
        return self.dims == self.dims[::-1]

    def to_list(self) -> List[int]:
        return list(self.dims)

    def poincare_polynomial(self, var: str = 't') -> str:
        """Render as ``1 + 2t + 2t^2 + t^3``."""
        terms = []
        for d, c in enumerate(self.dims):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                coef = '' if c == 1 else str(c)
                power = var if d == 1 else f"{var}^{d}"
                terms.append(coef + power)
        return ' + '.join(terms) if terms else '0'


def _matrix_key(m: np.ndarray) -> bytes:
    return m.tobytes()


class WeylGroup:
    """
    A (parabolic sub)group of the Weyl group, fully enumerated.

    Elements are found by breadth-first closure on matrices, deduplicated by
    exact matrix equality, and ordered by length then by reduced word.
    """

    def __init__(self, rs: RootSystem, gens: Optional[ParabolicSubset] = None,
                 max_order: int = DEFAULT_MAX_GROUP_ORDER,
                 iteration_budget: Optional[int] = None):
        """
        Enumerate the subgroup generated by the simple reflections in ``gens``.

        Args:
            rs: Root system
            gens: Generating nodes (all nodes when None)
            max_order: Cap on the number of elements
            iteration_budget: Cap on matrix multiplications (derived when None)

        Raises:
            GroupTooLarge: if either cap is exceeded
        """
        self.root_system = rs
        self.gens = (gens if gens is not None else rs.all_nodes()).validate(rs.rank)
        self.max_order = max_order
        self.iteration_budget = iteration_budget or max_order * max(len(self.gens), 1) + 1
        self.elements: List[WeylElement] = []
        self._index: Dict[bytes, int] = {}
        self._enumerate()

    def _enumerate(self) -> None:
        rs = self.root_system
        reflections = {i: simple_reflection_matrix(rs, i) for i in self.gens}
        identity = np.eye(rs.rank, dtype=np.int64)
        self._add(identity, ())
        layer: List[Tuple[Tuple[int, ...], np.ndarray]] = [((), identity)]
        iterations = 0
        while layer:
            next_layer = []
            # layer is in lexicographic word order, so first discovery is lex-minimal
            for word, m in layer:
                for i in self.gens:
                    iterations += 1
                    if iterations > self.iteration_budget:
                        raise GroupTooLarge(
                            f"W_{self.gens} of {rs} exceeds the iteration budget {self.iteration_budget}")
                    product = m @ reflections[i]
                    if _matrix_key(product) in self._index:
                        continue
                    if len(self.elements) >= self.max_order:
                        raise GroupTooLarge(
                            f"W_{self.gens} of {rs} has more than {self.max_order} elements")
                    self._add(product, word + (i,))
                    next_layer.append((word + (i,), product))
            layer = next_layer
        logger.debug("enumerated W_%s of %s: %d elements", self.gens, rs, len(self.elements))

    def _add(self, m: np.ndarray, word: Tuple[int, ...]) -> None:
        self._index[_matrix_key(m)] = len(self.elements)
        self.elements.append(WeylElement(tuple(tuple(row) for row in m.tolist()), word))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest_element(self) -> WeylElement:
        return self.elements[-1]

    def find(self, matrix) -> Optional[WeylElement]:
        """Look up the element with the given matrix, or None."""
        idx = self._index.get(_matrix_key(np.asarray(matrix, dtype=np.int64)))
        return None if idx is None else self.elements[idx]

    def multiply(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        """The product w1 w2 (acting as w2 first)."""
        product = self.find(w1.as_array() @ w2.as_array())
        if product is None:
            raise NotAWeylElement("product left the enumerated group")
        return product

    def length_histogram(self) -> List[int]:
        counts = [0] * (self.longest_element.length + 1)
        for w in self.elements:
            counts[w.length] += 1
        return counts

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)


def enumerate_weyl(rs: RootSystem, gens: Optional[ParabolicSubset] = None,
                   max_order: int = DEFAULT_MAX_GROUP_ORDER,
                   iteration_budget: Optional[int] = None) -> List[WeylElement]:
    """
    Enumerate W_gens; identity first, then by length and reduced word.

    Args:
        rs: Root system
        gens: Generating nodes (all nodes when None)
        max_order: Cap on the group order
        iteration_budget: Hard cap on multiplications

    Returns:
        List of WeylElement
    """
    return WeylGroup(rs, gens, max_order, iteration_budget).elements


def weyl_group_order(rs: RootSystem, gens: Optional[ParabolicSubset] = None,
                     max_order: int = DEFAULT_MAX_GROUP_ORDER) -> int:
    return len(enumerate_weyl(rs, gens, max_order))


def classical_weyl_order(ct: CartanType) -> int:
    """|W| from the closed formulas of each family, without enumerating."""
    n = ct.rank
    if ct.family == 'A':
        return factorial(n + 1)
    if ct.family in ('B', 'C'):
        return 2 ** n * factorial(n)
    if ct.family == 'D':
        return 2 ** (n - 1) * factorial(n)
    return {'G2': 12, 'F4': 1152, 'E6': 51840, 'E7': 2903040, 'E8': 696729600}[str(ct)]


def require_group_size(rs: RootSystem, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> int:
    """
    Raise GroupTooLarge before any work when |W| exceeds ``max_order``.

    Returns:
        The order of W
    """
    order = classical_weyl_order(rs.cartan_type)
    if order > max_order:
        raise GroupTooLarge(f"W({rs}) has {order} elements, more than the cap {max_order}")
    return order


def longest_element(rs: RootSystem, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> WeylElement:
    return WeylGroup(rs, None, max_order).longest_element


def length_histogram(rs: RootSystem, gens: Optional[ParabolicSubset] = None,
                     max_order: int = DEFAULT_MAX_GROUP_ORDER) -> List[int]:
    return WeylGroup(rs, gens, max_order).length_histogram()


def element_from_word(rs: RootSystem, word: Sequence[int]) -> np.ndarray:
    """Product of simple reflection matrices along a word."""
    m = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        m = m @ simple_reflection_matrix(rs, check_node(rs, i))
    return m


def length(rs: RootSystem, w: WeylElement) -> int:
    """
    Number of positive roots sent to negative roots.

    Args:
        rs: Root system
        w: Element whose matrix is checked to permute the roots

    Returns:
        The length of w

    Raises:
        NotAWeylElement: if some positive root is not mapped to a root
    """
    m = np.asarray(w.matrix, dtype=np.int64)
    if m.shape != (rs.rank, rs.rank):
        raise NotAWeylElement(f"expected a {rs.rank}x{rs.rank} matrix, got shape {m.shape}")
    images = m @ rs.positive_root_array
    count = 0
    for column in images.T:
        image = tuple(column.tolist())
        if image not in rs.roots:
            raise NotAWeylElement(f"matrix sends a root to {image}, which is not a root of {rs}")
        if all(c <= 0 for c in image):
            count += 1
    return count


def is_minimal_coset_representative(w: WeylElement, P: ParabolicSubset) -> bool:
    """w is shortest in w W_P iff w(alpha_i) is positive for all i in P."""
    return all(all(c >= 0 for c in w.image(i)) for i in P)


def parabolic_positive_roots(rs: RootSystem, P: ParabolicSubset) -> List[Tuple[int, ...]]:
    """Positive roots in the integer span of the simple roots of P."""
    support = {i - 1 for i in P}
    return [r for r in rs.positive_roots if all(c == 0 or k in support for k, c in enumerate(r))]


def coset_length_counts(rs: RootSystem, P: ParabolicSubset,
                        max_order: int = DEFAULT_MAX_GROUP_ORDER) -> BettiTable:
    """
    Schubert-cell count of G/P: minimal coset representatives by length.

    Args:
        rs: Root system
        P: Defining node set of the parabolic
        max_order: Cap on |W|

    Returns:
        BettiTable of length dim_C(G/P) + 1
    """
    P.validate(rs.rank)
    dimension = len(rs.positive_roots) - len(parabolic_positive_roots(rs, P))
    counts = [0] * (dimension + 1)
    for w in enumerate_weyl(rs, None, max_order):
        if is_minimal_coset_representative(w, P):
            counts[w.length] += 1
    return BettiTable(tuple(counts))
