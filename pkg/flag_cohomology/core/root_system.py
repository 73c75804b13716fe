"""Root System Module

Builds root systems of simple types from Cartan data: simple reflections,
positive roots and the W-invariant bilinear form on t*_Q. Every vector is
written in the simple-root basis, so the simple root alpha_i is the i-th
unit vector and all root coordinates are integers.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np
import sympy as sp

from ..utils.errors import InvalidCartanType, NodeOutOfRange
from ..utils.helpers import format_nodes, parse_node_list

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]

MIN_RANK = {'A': 1, 'B': 2, 'C': 3, 'D': 4, 'E': 6, 'F': 4, 'G': 2}
MAX_RANK = {'E': 8, 'F': 4, 'G': 2}

_CARTAN_TYPE_RE = re.compile(r'^\s*([A-Ga-g])\s*(\d+)\s*$')


@dataclass(frozen=True)
class CartanType:
    """Family letter and rank of a simple root system."""

    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, 'family', family)
        if family not in MIN_RANK:
            raise InvalidCartanType(f"invalid Cartan type: unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[family] \
                or self.rank > MAX_RANK.get(family, self.rank):
            raise InvalidCartanType(f"invalid Cartan type: {family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_simply_laced(self) -> bool:
        return self.family in ('A', 'D', 'E')


def parse_cartan_type(text: str) -> CartanType:
    """
    Parse strings such as ``"A2"`` or ``"f4"``.

    Args:
        text: Family letter followed by a decimal rank

    Returns:
        CartanType

    Raises:
        InvalidCartanType: if the text is malformed or the rank is illegal
    """
    match = _CARTAN_TYPE_RE.match(text or '')
    if not match:
        raise InvalidCartanType(f"invalid Cartan type: {text}")
    return CartanType(match.group(1).upper(), int(match.group(2)))


@dataclass(frozen=True)
class ParabolicSubset:
    """
    The defining node set of a parabolic subgroup.

    ``nodes`` lists the simple roots whose reflections generate W_P. The empty
    set is the Borel subgroup, a single node is a minimal parabolic, and
    A3 with nodes {1, 3} is the Grassmannian Gr(2, 4).
    """

    nodes: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        nodes = frozenset(int(i) for i in self.nodes)
        if any(i < 1 for i in nodes):
            raise NodeOutOfRange(f"node indices start at 1, got {format_nodes(nodes)}")
        object.__setattr__(self, 'nodes', nodes)

    @classmethod
    def of(cls, *nodes: int) -> 'ParabolicSubset':
        return cls(frozenset(nodes))

    @classmethod
    def from_text(cls, text: str) -> 'ParabolicSubset':
        """Parse ``"1,3"``; the empty string gives the Borel case."""
        return cls(parse_node_list(text))

    def validate(self, rank: int) -> 'ParabolicSubset':
        """Raise NodeOutOfRange unless every node lies in 1..rank."""
        bad = [i for i in self.nodes if i > rank]
        if bad:
            raise NodeOutOfRange(f"nodes {format_nodes(bad)} out of range 1..{rank}")
        return self

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.nodes))

    def complement(self, rank: int) -> 'ParabolicSubset':
        return ParabolicSubset(frozenset(range(1, rank + 1)) - self.nodes)

    @property
    def is_minimal(self) -> bool:
        return len(self.nodes) == 1

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.sorted())

    def __str__(self) -> str:
        return format_nodes(self.nodes)


def all_parabolic_subsets(rank: int) -> List[ParabolicSubset]:
    """Every subset of 1..rank, ordered by size then lexicographically."""
    subsets = []
    for mask in range(1 << rank):
        subsets.append(ParabolicSubset(frozenset(i + 1 for i in range(rank) if mask >> i & 1)))
    subsets.sort(key=lambda p: (len(p), p.sorted()))
    return subsets


def _edges(ct: CartanType) -> List[Tuple[int, int]]:
    """Dynkin diagram edges (0-based, Bourbaki numbering)."""
    n = ct.rank
    if ct.family in ('A', 'B', 'C', 'F', 'G'):
        return [(k, k + 1) for k in range(n - 1)]
    if ct.family == 'D':
        return [(k, k + 1) for k in range(n - 2)] + [(n - 3, n - 1)]
    # E: 1-3-4-5-6-7-8 with 2 attached to 4
    chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    return [(i, j) for i, j in chain if i < n and j < n]


def cartan_matrix(ct: CartanType) -> IntMatrix:
    """
    Cartan matrix with a_ij = <alpha_j, alpha_i^vee>.

    Under this convention s_i(alpha_j) = alpha_j - a_ij alpha_i, and the
    row of a short simple root carries the -2 (or -3) entry.
    """
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(ct):
        a[i][j] = a[j][i] = -1
    if ct.family == 'B':
        a[n - 1][n - 2] = -2
    elif ct.family == 'C':
        a[n - 2][n - 1] = -2
    elif ct.family == 'F':
        a[2][1] = -2
    elif ct.family == 'G':
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def dynkin_is_connected(matrix: Sequence[Sequence[int]]) -> bool:
    """True iff the Dynkin diagram of a Cartan matrix is connected."""
    n = len(matrix)
    if n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j not in seen and matrix[i][j] != 0:
                seen.add(j)
                queue.append(j)
    return len(seen) == n


def symmetrizers(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """
    Minimal positive integers d with d_i a_ij = d_j a_ji.

    Args:
        matrix: A connected (symmetrizable) Cartan matrix

    Returns:
        Tuple of symmetrizers, gcd 1
    """
    n = len(matrix)
    d: Dict[int, Fraction] = {0: Fraction(1)}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and matrix[i][j] != 0 and j not in d:
                d[j] = d[i] * matrix[i][j] / matrix[j][i]
                queue.append(j)
    scale = reduce(lcm, (d[i].denominator for i in range(n)), 1)
    ints = [int(d[i] * scale) for i in range(n)]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


def _reflect(matrix: IntMatrix, i: int, v: Sequence[int]) -> Vector:
    """s_i(v) = v - <v, alpha_i^vee> alpha_i with i 0-based."""
    pairing = sum(v[j] * matrix[i][j] for j in range(len(v)))
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def _positive_roots(matrix: IntMatrix) -> Tuple[Vector, ...]:
    """Reflection closure of the simple roots, kept on the positive side."""
    n = len(matrix)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            image = _reflect(matrix, i, beta)
            if image not in found and all(c >= 0 for c in image) and any(image):
                found.add(image)
                queue.append(image)
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystem:
    """
    A simple root system in simple-root coordinates.

    Attributes:
        cartan_type: Family and rank
        cartan_matrix: a_ij = <alpha_j, alpha_i^vee>
        symmetrizers: minimal positive integers d_i
        gram: invariant form, gram_ij = d_i a_ij
        positive_roots: sorted by (height, coordinates)
    """

    cartan_type: CartanType
    cartan_matrix: IntMatrix
    symmetrizers: Tuple[int, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @cached_property
    def roots(self) -> FrozenSet[Vector]:
        """All roots, positive and negative."""
        return frozenset(self.positive_roots) | frozenset(tuple(-c for c in r) for r in self.positive_roots)

    @cached_property
    def positive_root_array(self) -> np.ndarray:
        """Positive roots as the columns of an integer array."""
        return np.array(self.positive_roots, dtype=np.int64).T

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[-1]

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(int(c) for c in v) in self.roots

    @cached_property
    def positive_root_set(self) -> FrozenSet[Vector]:
        return frozenset(self.positive_roots)

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(int(c) for c in v) in self.positive_root_set

    def inner_product(self, u: Sequence, v: Sequence) -> Fraction:
        """Gram inner product of two vectors in simple-root coordinates."""
        n = self.rank
        return sum((Fraction(u[i]) * self.gram[i][j] * Fraction(v[j])
                    for i in range(n) for j in range(n) if u[i] and v[j]), Fraction(0))

    def reflect(self, i: int, v: Sequence[int]) -> Vector:
        """Apply the simple reflection s_i (1-based) to an integer vector."""
        check_node(self, i)
        return _reflect(self.cartan_matrix, i - 1, v)

    def all_nodes(self) -> ParabolicSubset:
        return ParabolicSubset(frozenset(range(1, self.rank + 1)))

    def __str__(self) -> str:
        return str(self.cartan_type)


def check_node(rs: RootSystem, i: int) -> int:
    """Raise NodeOutOfRange unless 1 <= i <= rank."""
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= rs.rank:
        raise NodeOutOfRange(f"node {i} out of range 1..{rs.rank}")
    return int(i)


def build_root_system(ct: CartanType) -> RootSystem:
    """
    Construct the root system of a simple Cartan type.

    Args:
        ct: Cartan type (validated on construction)

    Returns:
        RootSystem with gram, symmetrizers and sorted positive roots
    """
    if not isinstance(ct, CartanType):
        ct = parse_cartan_type(str(ct))
    matrix = cartan_matrix(ct)
    d = symmetrizers(matrix)
    n = ct.rank
    gram = tuple(tuple(Fraction(d[i] * matrix[i][j]) for j in range(n)) for i in range(n))
    roots = _positive_roots(matrix)
    logger.debug("built %s: %d positive roots, symmetrizers %s", ct, len(roots), d)
    return RootSystem(ct, matrix, d, gram, roots)


def root_system(text: str) -> RootSystem:
    """Shorthand: ``root_system("B3")``."""
    return build_root_system(parse_cartan_type(text))


def simple_reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    """
    Matrix of s_i on t*_Q in simple-root coordinates.

    Column j is s_i(alpha_j) = alpha_j - a_ij alpha_i, so only row i differs
    from the identity. Entries are integers.

    Args:
        rs: Root system
        i: Node index, 1-based

    Returns:
        rank x rank integer array
    """
    i = check_node(rs, i)
    m = np.eye(rs.rank, dtype=np.int64)
    for j in range(rs.rank):
        m[i - 1, j] -= rs.cartan_matrix[i - 1][j]
    return m


def invariant_gram(rs: RootSystem) -> sp.ImmutableMatrix:
    """
    The W-invariant form gram_ij = d_i a_ij as an exact sympy matrix.

    Symmetric, positive definite, and S_i^T gram S_i = gram for every i.
    """
    return sp.ImmutableMatrix(rs.rank, rs.rank, lambda i, j: sp.Rational(rs.gram[i][j].numerator,
                                                                          rs.gram[i][j].denominator))


def _to_fraction(x) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


def adjugate_gram(rs: RootSystem) -> Tuple[Tuple[Fraction, ...], ...]:
    """Adjugate of the gram matrix (the dual form scaled by det gram)."""
    adj = invariant_gram(rs).adjugate() if rs.rank > 1 else sp.ImmutableMatrix([[1]])
    return tuple(tuple(_to_fraction(adj[i, j]) for j in range(rs.rank)) for i in range(rs.rank))


def gram_determinant(rs: RootSystem) -> Fraction:
    return _to_fraction(invariant_gram(rs).det())
