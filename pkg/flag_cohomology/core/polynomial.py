"""Polynomial Module

Sparse multivariate polynomials over exact rationals, graded pieces and
spans. This is the algebra S = Sym(t*_Q): variable k is the simple root
alpha_{k+1}, and polynomial degree d corresponds to cohomological degree 2d.

Text format (CLI, JSON, cache files): terms ``c * a1^e1 ... ar^er`` joined by
`` + ``, coefficients printed as ``p/q``, variables with exponent 0 omitted,
``0`` for the zero polynomial.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .linear_algebra import RowEchelon
from .root_system import RootSystem
from .weyl_group import WeylElement
from ..utils.errors import InhomogeneousInput, NotDivisible, RankMismatch
from ..utils.helpers import format_rational, parse_rational

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Terms = Dict[Exponent, Fraction]
Scalar = Union[int, Fraction]


def root_variable_names(nvars: int) -> Tuple[str, ...]:
    return tuple(f"a{k + 1}" for k in range(nvars))


def _add_into(out: Terms, terms: Mapping[Exponent, Fraction], scale: Fraction = Fraction(1)) -> None:
    for exp, c in terms.items():
        value = out.get(exp, 0) + scale * c
        if value:
            out[exp] = value
        else:
            out.pop(exp, None)


def _mul_terms(left: Mapping[Exponent, Fraction], right: Mapping[Exponent, Fraction]) -> Terms:
    out: Terms = {}
    for ea, ca in left.items():
        for eb, cb in right.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            value = out.get(exp, 0) + ca * cb
            if value:
                out[exp] = value
            else:
                out.pop(exp, None)
    return out


class Polynomial:
    """
    Immutable sparse polynomial with exact rational coefficients.

    Attributes:
        nvars: Number of variables
        terms: Exponent vector -> non-zero Fraction
        var_names: Names used by the text format
    """

    __slots__ = ('nvars', 'terms', 'var_names', '_hash')

    def __init__(self, terms: Mapping[Exponent, Scalar], nvars: int,
                 var_names: Optional[Sequence[str]] = None):
        """
        Args:
            terms: Exponent tuples of length ``nvars`` mapped to coefficients
            nvars: Number of variables
            var_names: Optional variable names (``a1..ar`` by default)
        """
        clean: Terms = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise RankMismatch(f"exponent {exp} does not fit {nvars} variables")
            c = Fraction(c)
            if c:
                clean[exp] = c
        self.nvars = nvars
        self.terms = clean
        self.var_names = tuple(var_names) if var_names else root_variable_names(nvars)
        self._hash = None

    # construction

    @classmethod
    def zero(cls, nvars: int, var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        return cls({}, nvars, var_names)

    @classmethod
    def constant(cls, value: Scalar, nvars: int, var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        return cls({(0,) * nvars: value}, nvars, var_names)

    @classmethod
    def variable(cls, index: int, nvars: int, var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        """The variable with 0-based ``index``."""
        if not 0 <= index < nvars:
            raise RankMismatch(f"variable index {index} out of range for {nvars} variables")
        return cls({tuple(1 if k == index else 0 for k in range(nvars)): 1}, nvars, var_names)

    @classmethod
    def monomial(cls, exp: Exponent, coefficient: Scalar = 1,
                 var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        return cls({tuple(exp): coefficient}, len(exp), var_names)

    @classmethod
    def linear_form(cls, coeffs: Sequence[Scalar], var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        """sum_k coeffs[k] x_k; a vector of t*_Q read as an element of S_1."""
        n = len(coeffs)
        return cls({tuple(1 if j == k else 0 for j in range(n)): c for k, c in enumerate(coeffs)}, n, var_names)

    def _new(self, terms: Terms) -> 'Polynomial':
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = terms
        p.var_names = self.var_names
        p._hash = None
        return p

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """True iff every term has the same total degree (``degree`` if given); zero qualifies."""
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees.pop() == degree

    def homogeneous_part(self, degree: int) -> 'Polynomial':
        return self._new({e: c for e, c in self.terms.items() if sum(e) == degree})

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for e, v in zip(exp, values):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    # arithmetic

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise RankMismatch(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars, self.var_names)
        return NotImplemented

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _add_into(out, other.terms)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _add_into(out, other.terms, Fraction(-1))
        return self._new(out)

    def __rsub__(self, other) -> 'Polynomial':
        return (-self) + other

    def __mul__(self, other) -> 'Polynomial':
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> 'Polynomial':
        return self * (1 / Fraction(other))

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.nvars, self.var_names)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def divide_by_monomial(self, exp: Exponent) -> 'Polynomial':
        """
        Exact division by a monomial.

        Raises:
            NotDivisible: if some term is not a multiple of the monomial
        """
        out: Terms = {}
        for e, c in self.terms.items():
            q = tuple(x - y for x, y in zip(e, exp))
            if any(x < 0 for x in q):
                raise NotDivisible(f"term {self._term_text(e, c)} is not divisible by "
                                   f"{self._term_text(tuple(exp), Fraction(1))}")
            out[q] = c
        return self._new(out)

    def substitute(self, images: Sequence['Polynomial']) -> 'Polynomial':
        """Replace variable k by ``images[k]`` (a ring homomorphism)."""
        return LinearSubstitution(images).apply(self)

    # text

    def _monomial_text(self, exp: Exponent, sep: str = ' ') -> str:
        return sep.join(f"{self.var_names[k]}^{e}" for k, e in enumerate(exp) if e)

    def _term_text(self, exp: Exponent, c: Fraction) -> str:
        mono = self._monomial_text(exp)
        return f"{format_rational(c)} * {mono}" if mono else format_rational(c)

    def to_text(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(self._term_text(e, c) for e, c in self.sorted_terms())

    @classmethod
    def from_text(cls, text: str, nvars: int, var_names: Optional[Sequence[str]] = None) -> 'Polynomial':
        """Parse the text format written by ``to_text``."""
        names = tuple(var_names) if var_names else root_variable_names(nvars)
        index = {name: k for k, name in enumerate(names)}
        terms: Terms = {}
        text = text.strip()
        if text == '0' or not text:
            return cls({}, nvars, names)
        for chunk in text.split(' + '):
            coef_text, _, mono_text = chunk.partition(' * ')
            exp = [0] * nvars
            for factor in mono_text.split():
                name, _, power = factor.partition('^')
                if name not in index:
                    raise RankMismatch(f"unknown variable {name!r} in {chunk!r}")
                exp[index[name]] += int(power or 1)
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + parse_rational(coef_text)
        return cls(terms, nvars, names)

    def pretty(self) -> str:
        """Human-readable form such as ``D^2 - 2*D*H + 2*H^2``."""
        if not self.terms:
            return '0'
        parts = []
        for exp, c in self.sorted_terms():
            mono = '*'.join(self.var_names[k] + (f"^{e}" if e > 1 else '')
                            for k, e in enumerate(exp) if e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            sign = '-' if c < 0 else '+'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> List[Dict]:
        return [{'exp': list(e), 'c': format_rational(c)} for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        return f"Polynomial({self.pretty()!r}, nvars={self.nvars})"

    __str__ = pretty


class LinearSubstitution:
    """
    Substitution of each variable by a polynomial, with cached powers.

    Reusing one instance across many monomials makes the action of a fixed
    matrix on a whole monomial basis cheap.
    """

    def __init__(self, images: Sequence[Polynomial]):
        self.images = list(images)
        self.nvars = len(self.images)
        self._powers: List[Dict[int, Terms]] = [{} for _ in self.images]

    def _power(self, k: int, e: int) -> Terms:
        cache = self._powers[k]
        if e not in cache:
            if e == 1:
                cache[e] = dict(self.images[k].terms)
            else:
                half = self._power(k, e // 2)
                sq = _mul_terms(half, half)
                cache[e] = _mul_terms(sq, self.images[k].terms) if e % 2 else sq
        return cache[e]

    def apply_terms(self, terms: Mapping[Exponent, Fraction], target_nvars: int) -> Terms:
        out: Terms = {}
        one = {(0,) * target_nvars: Fraction(1)}
        for exp, c in terms.items():
            if len(exp) != self.nvars:
                raise RankMismatch(f"substitution for {self.nvars} variables applied to {len(exp)}")
            product = one
            for k, e in enumerate(exp):
                if e:
                    product = _mul_terms(product, self._power(k, e))
            _add_into(out, product, c)
        return out

    def apply(self, p: Polynomial) -> Polynomial:
        target = self.images[0] if self.images else p
        return Polynomial(self.apply_terms(p.terms, target.nvars), target.nvars, target.var_names)


def matrix_substitution(matrix: Sequence[Sequence[int]], var_names: Optional[Sequence[str]] = None) -> LinearSubstitution:
    """
    Substitution x_k -> sum_j matrix[j][k] x_j (column k is the image of x_k).
    """
    n = len(matrix)
    images = [Polynomial.linear_form([matrix[j][k] for j in range(n)], var_names) for k in range(n)]
    return LinearSubstitution(images)


def poly_weyl_action(rs: RootSystem, w: WeylElement, p: Polynomial) -> Polynomial:
    """
    Act by w on S: every simple root is replaced by its image under w.matrix.

    Args:
        rs: Root system
        w: Weyl element
        p: Polynomial in rank(rs) variables

    Returns:
        w . p, of the same degree

    Raises:
        RankMismatch: if p or w does not match the rank
    """
    if p.nvars != rs.rank or w.rank != rs.rank:
        raise RankMismatch(f"{rs} has rank {rs.rank}; polynomial has {p.nvars} variables, "
                           f"element acts on {w.rank}")
    return matrix_substitution(w.matrix, p.var_names).apply(p)


@lru_cache(maxsize=None)
def monomial_basis(rank: int, degree: int) -> Tuple[Exponent, ...]:
    """
    All exponent vectors of a given degree, graded-lexicographic (highest first).

    Args:
        rank: Number of variables (>= 1)
        degree: Total degree (>= 0)

    Returns:
        C(degree + rank - 1, degree) exponent tuples
    """
    if rank == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(rank - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(rank: int, degree: int) -> Dict[Exponent, int]:
    return {exp: k for k, exp in enumerate(monomial_basis(rank, degree))}


def coefficient_vector(p: Polynomial, degree: int) -> Dict[int, Fraction]:
    """
    Sparse coordinates of a homogeneous polynomial in the monomial basis.

    Raises:
        InhomogeneousInput: if p is not homogeneous of ``degree``
    """
    if not p.is_homogeneous(degree):
        raise InhomogeneousInput(f"{p.pretty()} is not homogeneous of degree {degree}")
    index = monomial_index(p.nvars, degree)
    return {index[e]: c for e, c in p.terms.items()}


def from_coefficient_vector(vector: Mapping[int, Scalar], rank: int, degree: int,
                            var_names: Optional[Sequence[str]] = None) -> Polynomial:
    basis = monomial_basis(rank, degree)
    return Polynomial({basis[k]: c for k, c in vector.items()}, rank, var_names)


def span_dimension(polys: Iterable[Polynomial], degree: int) -> int:
    """
    Exact dimension over Q of the span of homogeneous polynomials.

    Args:
        polys: Polynomials, all homogeneous of ``degree``
        degree: Common degree

    Returns:
        Rank of the coefficient matrix in the monomial basis

    Raises:
        InhomogeneousInput: on a polynomial of another degree
    """
    echelon = RowEchelon()
    for p in polys:
        echelon.insert(coefficient_vector(p, degree))
    return echelon.rank


@dataclass(frozen=True)
class GradedBasis:
    """
    Linearly independent homogeneous polynomials of one degree.

    Attributes:
        degree: Common degree
        basis: The polynomials
    """

    degree: int
    basis: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, 'basis', tuple(self.basis))
        for p in self.basis:
            if not p.is_homogeneous(self.degree) or p.is_zero():
                raise InhomogeneousInput(f"basis element {p.pretty()} is not a non-zero form of degree {self.degree}")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def is_independent(self) -> bool:
        return span_dimension(self.basis, self.degree) == len(self.basis)

    def to_text(self) -> List[str]:
        return [p.to_text() for p in self.basis]
