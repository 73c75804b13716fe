"""Grassmann Example Module

The flag variety Fl(1, 2; V) of lines in planes in V = C^{2n+2}, viewed as a
projective bundle over P(V) = P^{2n+1}:

    H*(Fl; Q) = Q[H, D] / (H^{2n+2}, f(H, D)),
    f = sum_i (-1)^i c_i H^i D^{2n+1-i},

with c_i the Chern classes of the twisted cotangent bundle Omega(2). Since
c_{2n+1} = 0, f = f0 . D, and f0 is the class of the special fiber. Schubert
classes of Gr(2, 2n+2) are two-row partitions in the 2 x 2n box; they pull
back to Fl through sigma_1 = D and sigma_{1,1} = D H - H^2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Tuple, Union

import sympy as sp

from .polynomial import Polynomial
from ..utils.errors import (
    InvalidParameter,
    NotDivisible,
    PartitionOutOfBox,
    PresentationError,
    ProportionalityFailure,
    RankMismatch,
)
from ..utils.helpers import format_rational

logger = logging.getLogger(__name__)

LH_VARIABLES = ('D', 'H')

Scalar = Union[int, Fraction]


def _check_n(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"n must be a positive integer, got {n!r}")
    return n


def lh_variable(name: str) -> Polynomial:
    """The generator ``'H'`` or ``'D'`` as a polynomial in Q[D, H]."""
    return Polynomial.variable(LH_VARIABLES.index(name), 2, LH_VARIABLES)


@lru_cache(maxsize=None)
def _chern_classes(m: int) -> Tuple[int, ...]:
    h = sp.Symbol('h')
    series = sp.series((1 + h) ** (m + 1) / (1 + 2 * h), h, 0, m + 1).removeO()
    return tuple(int(series.coeff(h, k)) for k in range(m + 1))


def chern_classes_twisted_cotangent(m: int) -> List[int]:
    """
    Chern classes [c_0, ..., c_m] of Omega^1(2) on P^m.

    From 0 -> Omega(2) -> O(1)^{m+1} -> O(2) -> 0 the total Chern class is
    (1 + h)^{m+1} / (1 + 2h), truncated in degree m.

    Args:
        m: Dimension of the projective space (>= 1)

    Returns:
        Integer Chern classes; c_m = 0 exactly when m is odd
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m!r}")
    return list(_chern_classes(m))


def leray_hirsch_relation(n: int) -> Polynomial:
    """
    f(H, D) = sum_{i=0}^{2n+1} (-1)^i c_i H^i D^{2n+1-i}, monic in D.

    Args:
        n: Half of dim V minus one (V = C^{2n+2})

    Returns:
        Homogeneous polynomial of degree 2n+1 in D, H
    """
    top = 2 * _check_n(n) + 1
    c = chern_classes_twisted_cotangent(top)
    return Polynomial({(top - i, i): (-1) ** i * c[i] for i in range(top + 1)}, 2, LH_VARIABLES)


def factor_relation(n: int) -> Polynomial:
    """
    f0 with f = f0 . D.

    Raises:
        NotDivisible: if f has a pure H^{2n+1} term
    """
    return leray_hirsch_relation(n).divide_by_monomial((1, 0))


@dataclass(frozen=True)
class LHElement:
    """
    Normal form sum c_ij H^i D^j in Q[H, D] / (H^{2n+2}, f).

    Attributes:
        n: Size parameter, V = C^{2n+2}
        coeffs: ((i, j), c) pairs with i <= 2n+1, j <= 2n, c non-zero, sorted
    """

    n: int
    coeffs: Tuple[Tuple[Tuple[int, int], Fraction], ...]

    @classmethod
    def from_mapping(cls, n: int, coeffs: Mapping[Tuple[int, int], Scalar]) -> 'LHElement':
        items = sorted(((tuple(k), Fraction(v)) for k, v in coeffs.items() if v), reverse=True)
        for (i, j), _ in items:
            if i > 2 * n + 1 or j > 2 * n:
                raise PresentationError(f"H^{i} D^{j} is not a normal-form monomial for n = {n}")
        return cls(n, tuple(items))

    def as_dict(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self.coeffs)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.as_dict().get((i, j), Fraction(0))

    def to_polynomial(self) -> Polynomial:
        return Polynomial({(j, i): c for (i, j), c in self.coeffs}, 2, LH_VARIABLES)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return max((i + j for (i, j), _ in self.coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return len({i + j for (i, j), _ in self.coeffs}) <= 1

    def _check(self, other: 'LHElement') -> None:
        if other.n != self.n:
            raise RankMismatch(f"cannot combine elements for n = {self.n} and n = {other.n}")

    def __add__(self, other: 'LHElement') -> 'LHElement':
        self._check(other)
        out = self.as_dict()
        for k, c in other.coeffs:
            out[k] = out.get(k, 0) + c
        return LHElement.from_mapping(self.n, out)

    def __neg__(self) -> 'LHElement':
        return LHElement(self.n, tuple((k, -c) for k, c in self.coeffs))

    def __sub__(self, other: 'LHElement') -> 'LHElement':
        return self + (-other)

    def __mul__(self, other) -> 'LHElement':
        if isinstance(other, (int, Fraction)):
            return LHElement.from_mapping(self.n, {k: c * other for k, c in self.coeffs})
        self._check(other)
        return ring_reduce(self.n, self.to_polynomial() * other.to_polynomial())

    __rmul__ = __mul__

    def to_json(self) -> Dict:
        return {
            'n': self.n,
            'terms': [{'h': i, 'd': j, 'c': format_rational(c)} for (i, j), c in self.coeffs],
        }

    def pretty(self) -> str:
        return self.to_polynomial().pretty()

    __str__ = pretty


def ring_reduce(n: int, p: Polynomial) -> LHElement:
    """
    Normal form of p in Q[H, D] / (H^{2n+2}, f).

    D^{2n+1} is rewritten as -sum_{k>=1} (-1)^k c_k H^k D^{2n+1-k} (f is monic
    in D) and H^{2n+2} is dropped, until every monomial H^i D^j has
    i <= 2n+1 and j <= 2n.

    Args:
        n: Size parameter
        p: Polynomial in D, H (variable order D, H)

    Returns:
        LHElement
    """
    top = 2 * _check_n(n) + 1
    if p.nvars != 2:
        raise RankMismatch(f"expected a polynomial in D, H; got {p.nvars} variables")
    c = chern_classes_twisted_cotangent(top)
    tail = {k: -((-1) ** k) * c[k] for k in range(1, top + 1) if c[k]}

    terms: Dict[Tuple[int, int], Fraction] = {(i, j): coef for (j, i), coef in p.terms.items()}
    while True:
        pending = [k for k in terms if k[0] > top or k[1] >= top]
        if not pending:
            break
        i, j = max(pending, key=lambda k: (k[1], k[0]))
        coef = terms.pop((i, j))
        if i > top:
            continue
        for k, t in tail.items():
            key = (i + k, j - k)
            value = terms.get(key, 0) + coef * t
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
    return LHElement.from_mapping(n, terms)


@dataclass(frozen=True, order=True)
class Partition2:
    """A two-row partition [a, b] with a >= b >= 0."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)) or not self.a >= self.b >= 0:
            raise PartitionOutOfBox(f"[{self.a},{self.b}] is not a partition with a >= b >= 0")

    @classmethod
    def in_box(cls, a: int, b: int, n: int) -> 'Partition2':
        """Build [a, b] and check it fits the 2 x 2n box of Gr(2, 2n+2)."""
        lam = cls(a, b)
        lam.check_box(n)
        return lam

    def fits(self, n: int) -> bool:
        return self.a <= 2 * n

    def check_box(self, n: int) -> 'Partition2':
        if not self.fits(n):
            raise PartitionOutOfBox(f"[{self.a},{self.b}] does not fit the 2 x {2 * n} box")
        return self

    @property
    def size(self) -> int:
        return self.a + self.b

    def __str__(self) -> str:
        return f"S[{self.a},{self.b}]"


class SchubertSum:
    """Integer combination of Schubert classes; zero coefficients are never stored."""

    __slots__ = ('terms',)

    def __init__(self, terms: Mapping[Partition2, int] = None):
        self.terms: Dict[Partition2, int] = {lam: int(c) for lam, c in (terms or {}).items() if c}

    @classmethod
    def single(cls, a: int, b: int, coefficient: int = 1) -> 'SchubertSum':
        return cls({Partition2(a, b): coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Partition2, int]]:
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[Tuple[Partition2, int]]:
        return iter(self.items())

    def __add__(self, other: 'SchubertSum') -> 'SchubertSum':
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchubertSum(out)

    def __neg__(self) -> 'SchubertSum':
        return SchubertSum({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: 'SchubertSum') -> 'SchubertSum':
        return self + (-other)

    def __mul__(self, scalar: int) -> 'SchubertSum':
        return SchubertSum({lam: c * scalar for lam, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_effective(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_json(self) -> Dict:
        return {'terms': [{'a': lam.a, 'b': lam.b, 'coef': c} for lam, c in self.items()]}

    def pretty(self) -> str:
        if not self.terms:
            return '0'
        out = ''
        for lam, c in sorted(self.terms.items(), key=lambda item: (-item[0].b, item[0].a)):
            sign = '-' if c < 0 else '+'
            body = str(lam) if abs(c) == 1 else f"{abs(c)}*{lam}"
            out += (f" {sign} " if out else ('-' if c < 0 else '')) + body
        return out

    def __repr__(self) -> str:
        return f"SchubertSum({self.pretty()!r})"


def pieri_multiply(n: int, s: SchubertSum) -> SchubertSum:
    """
    Multiply by sigma_1 in H*(Gr(2, 2n+2)).

    S[a, b] . sigma_1 = S[a+1, b] (if a+1 <= 2n) + S[a, b+1] (if b+1 <= a).

    Raises:
        PartitionOutOfBox: if a partition of s does not fit the box
    """
    _check_n(n)
    out: Dict[Partition2, int] = {}
    for lam, c in s.terms.items():
        lam.check_box(n)
        if lam.a + 1 <= 2 * n:
            key = Partition2(lam.a + 1, lam.b)
            out[key] = out.get(key, 0) + c
        if lam.b + 1 <= lam.a:
            key = Partition2(lam.a, lam.b + 1)
            out[key] = out.get(key, 0) + c
    return SchubertSum(out)


def alternating_schubert_sum(n: int) -> SchubertSum:
    """sum_{i=0}^{n} (-1)^i S[n+i, n-i]."""
    _check_n(n)
    return SchubertSum({Partition2(n + i, n - i): (-1) ** i for i in range(n + 1)})


def alternating_sum_annihilated(n: int) -> bool:
    """True iff the alternating sum times sigma_1 vanishes."""
    return pieri_multiply(n, alternating_schubert_sum(n)).is_zero()


def schubert_signs(n: int) -> Dict[str, int]:
    """Counts of positive and negative coefficients in the alternating sum."""
    terms = alternating_schubert_sum(n).terms.values()
    return {'positive': sum(1 for c in terms if c > 0), 'negative': sum(1 for c in terms if c < 0)}


def _lh_one(n: int) -> LHElement:
    return LHElement.from_mapping(n, {(0, 0): 1})


@lru_cache(maxsize=None)
def special_class(n: int, k: int) -> LHElement:
    """
    Pullback of sigma_k: sigma_k = sigma_1 sigma_{k-1} - sigma_{1,1} sigma_{k-2}.

    Args:
        n: Size parameter
        k: Index; negative k gives 0

    Returns:
        LHElement of degree k (zero for k < 0)
    """
    if k < 0:
        return LHElement(n, ())
    if k == 0:
        return _lh_one(n)
    D = lh_variable('D')
    if k == 1:
        return ring_reduce(n, D)
    H = lh_variable('H')
    sigma11 = ring_reduce(n, D * H - H * H)
    return ring_reduce(n, D) * special_class(n, k - 1) - sigma11 * special_class(n, k - 2)


def giambelli_pullback(n: int, lam: Partition2) -> LHElement:
    """
    Pullback of S[a, b] to Fl(1, 2; V) via S[a, b] = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.

    Raises:
        PartitionOutOfBox: if lam does not fit the 2 x 2n box
    """
    _check_n(n)
    lam.check_box(n)
    a, b = lam.a, lam.b
    return special_class(n, a) * special_class(n, b) - special_class(n, a + 1) * special_class(n, b - 1)


def giambelli_pullback_sum(n: int, s: SchubertSum) -> LHElement:
    """Linear extension of giambelli_pullback."""
    total = LHElement(n, ())
    for lam, c in s.terms.items():
        total = total + giambelli_pullback(n, lam) * c
    return total


def identify_fiber_class(n: int) -> int:
    """
    Find epsilon with f0 = epsilon . pullback(sum_i (-1)^i S[n+i, n-i]).

    Also checks f0 . D = 0 and f0 != 0 in the ring.

    Returns:
        +1 or -1

    Raises:
        PresentationError: if f0 . D does not vanish or f0 does
        ProportionalityFailure: if neither sign matches
    """
    f0 = factor_relation(n)
    fiber = ring_reduce(n, f0)
    if not ring_reduce(n, f0 * lh_variable('D')).is_zero():
        raise PresentationError(f"f0 . D is not zero for n = {n}")
    if fiber.is_zero():
        raise PresentationError(f"f0 vanishes in the ring for n = {n}")

    schubert = giambelli_pullback_sum(n, alternating_schubert_sum(n))
    if fiber == schubert:
        epsilon = 1
    elif fiber == -schubert:
        epsilon = -1
    else:
        raise ProportionalityFailure(
            f"f0 = {fiber.pretty()} is not +/- the Schubert pullback {schubert.pretty()} for n = {n}")
    logger.info("n = %d: fiber class = %+d . alternating Schubert sum", n, epsilon)
    return epsilon


def lh_graded_dimensions(n: int) -> List[int]:
    """Number of normal-form monomials H^i D^j in each total degree."""
    top = 2 * _check_n(n) + 1
    dims = [0] * (2 * top)
    for i in range(top + 1):
        for j in range(top):
            dims[i + j] += 1
    return dims


def flag_parabolic_nodes(n: int) -> Tuple[int, ...]:
    """Defining nodes {3, ..., 2n+1} of Fl(1, 2; C^{2n+2}) as A_{2n+1} / P."""
    return tuple(range(3, 2 * _check_n(n) + 2))


def lh_terms_json(n: int, p: Polynomial) -> Dict:
    """A polynomial in (D, H) laid out like LHElement.to_json, without reducing it."""
    terms = sorted(((exp[1], exp[0]), c) for exp, c in p.terms.items())
    return {
        'n': n,
        'terms': [{'h': i, 'd': j, 'c': format_rational(c)} for (i, j), c in reversed(terms)],
    }


def example_report(n: int) -> Dict:
    """
    Every quantity of the example for one n, in JSON-ready form.

    f is emitted unreduced since it vanishes in the ring; f0 is already a
    normal form. The ``*_text`` entries carry the human-readable renderings.
    """
    chern = chern_classes_twisted_cotangent(2 * _check_n(n) + 1)
    f = leray_hirsch_relation(n)
    f0 = factor_relation(n)
    alternating = alternating_schubert_sum(n)
    return {
        'n': n,
        'chern': chern,
        'top_chern_vanishes': chern[-1] == 0,
        'f': lh_terms_json(n, f),
        'f0': ring_reduce(n, f0).to_json(),
        'f_text': f.pretty(),
        'f0_text': f0.pretty(),
        'f_equals_f0_D': f0 * lh_variable('D') == f,
        'f0_nonzero_in_ring': not ring_reduce(n, f0).is_zero(),
        'f0_D_vanishes': ring_reduce(n, f).is_zero(),
        'alternating_sum': alternating.to_json(),
        'alternating_sum_text': alternating.pretty(),
        'alternating_sum_annihilated': alternating_sum_annihilated(n),
        'schubert_signs': schubert_signs(n),
        'epsilon': identify_fiber_class(n),
        'graded_dimensions': lh_graded_dimensions(n),
    }
