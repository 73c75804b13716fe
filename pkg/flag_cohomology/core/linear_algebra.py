"""Exact Linear Algebra Module

Fraction-free row reduction on sparse integer rows. Rational input rows are
scaled to primitive integer rows; an elimination step replaces
``row`` by ``p * row - c * pivot_row`` (p, c divided by their gcd) and the
result is divided by its content, so entries stay small and no division
ever leaves the integers.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

SparseRow = Dict[int, int]
Tag = Dict[Hashable, int]


def _cleared_row(row: Mapping[int, Fraction]) -> Tuple[SparseRow, int]:
    """Multiply a rational sparse row by the lcm of its denominators; returns (row, lcm)."""
    entries = {k: Fraction(v) for k, v in row.items() if v}
    scale = reduce(lcm, (v.denominator for v in entries.values()), 1)
    return {k: int(v * scale) for k, v in entries.items()}, scale


def integral_row(row: Mapping[int, Fraction]) -> SparseRow:
    """
    Scale a rational sparse row to a primitive integer row.

    Args:
        row: Column index -> rational entry (zeros allowed)

    Returns:
        Integer row with content 1 (empty for the zero row)
    """
    ints, _ = _cleared_row(row)
    if not ints:
        return {}
    content = reduce(gcd, ints.values())
    return {k: v // content for k, v in ints.items()}


def _primitive(row: SparseRow, tag: Optional[Tag]) -> Tuple[SparseRow, Optional[Tag]]:
    values = list(row.values()) + (list(tag.values()) if tag else [])
    if not values:
        return row, tag
    content = reduce(gcd, values)
    if content in (0, 1):
        return row, tag
    row = {k: v // content for k, v in row.items()}
    if tag is not None:
        tag = {k: v // content for k, v in tag.items()}
    return row, tag


def _combine(left: Dict, right: Dict, mp: int, mc: int) -> Dict:
    """mp * left - mc * right, zeros dropped."""
    out = {k: mp * v for k, v in left.items()}
    for k, v in right.items():
        value = out.get(k, 0) - mc * v
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


class RowEchelon:
    """
    Incremental echelon form over the integers.

    Each stored row has a distinct leading (smallest) column. A candidate row
    lies in the span iff repeated leading-term elimination reduces it to zero.
    Rows may carry a tag (a sparse combination of inserted row ids) that
    undergoes the same operations; tags of rows reducing to zero are kernel
    vectors.
    """

    def __init__(self):
        self._pivots: Dict[int, Tuple[SparseRow, Optional[Tag]]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return len(self._pivots)

    def copy(self) -> 'RowEchelon':
        clone = RowEchelon()
        clone._pivots = dict(self._pivots)
        return clone

    def reduce(self, row: SparseRow, tag: Optional[Tag] = None) -> Tuple[SparseRow, Optional[Tag]]:
        """
        Eliminate leading terms of ``row`` against the stored pivots.

        Args:
            row: Integer sparse row
            tag: Optional tag transformed alongside

        Returns:
            (reduced row, transformed tag); the row is empty iff it was in the span
        """
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                break
            prow, ptag = pivot
            g = gcd(prow[lead], row[lead])
            mp, mc = prow[lead] // g, row[lead] // g
            row = _combine(row, prow, mp, mc)
            if tag is not None:
                tag = _combine(tag, ptag or {}, mp, mc)
            row, tag = _primitive(row, tag)
        return row, tag

    def insert(self, row: Mapping[int, Fraction], tag: Optional[Tag] = None) -> bool:
        """
        Add a row; returns True iff the rank increased.

        Args:
            row: Rational or integer sparse row
            tag: Optional tag stored with the row
        """
        ints, scale = _cleared_row(row)
        if tag is not None:
            tag = {k: v * scale for k, v in tag.items()}
        reduced, tag = self.reduce(*_primitive(ints, tag))
        if not reduced:
            return False
        lead = min(reduced)
        if reduced[lead] < 0:
            reduced = {k: -v for k, v in reduced.items()}
            if tag is not None:
                tag = {k: -v for k, v in tag.items()}
        self._pivots[lead] = (reduced, tag)
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        reduced, _ = self.reduce(integral_row(row))
        return not reduced

    def pivot_columns(self) -> List[int]:
        return sorted(self._pivots)


def matrix_rank(rows: Sequence[Mapping[int, Fraction]]) -> int:
    """Exact rank of a list of sparse rational rows."""
    echelon = RowEchelon()
    for row in rows:
        echelon.insert(row)
    return echelon.rank


def kernel_basis(columns: Sequence[Mapping[int, Fraction]]) -> List[Dict[int, int]]:
    """
    Basis of {c : sum_k c_k columns[k] = 0}.

    Column k enters as a row tagged with {k: s}, s being the factor that clears
    its denominators, so a tag always records the combination of the original
    columns that its row equals. Every column that reduces to zero contributes
    its tag. Tags found this way are independent because each
    involves its own index with a non-zero coefficient.

    Args:
        columns: Sparse rational vectors

    Returns:
        Integer kernel vectors as sparse maps index -> coefficient
    """
    echelon = RowEchelon()
    kernel: List[Dict[int, int]] = []
    for k, column in enumerate(columns):
        row, scale = _cleared_row(column)
        row, tag = _primitive(row, {k: scale})
        reduced, tag = echelon.reduce(row, tag)
        if reduced:
            lead = min(reduced)
            echelon._pivots[lead] = (reduced, tag)
        else:
            kernel.append(dict(tag))
    return kernel
