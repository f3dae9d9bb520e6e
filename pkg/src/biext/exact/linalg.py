# Copyright 2026 The biext Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
""" Exact linear algebra over Q and over Q(w) on dense row-major matrices.

Matrices are tuples of row tuples. Subspaces are given by a spanning set of row vectors; the canonical basis of a
subspace is its reduced row echelon form, so two subspaces are equal iff their `row_space` bases are equal.
"""
from typing import Iterable, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import FieldMismatchError, ShapeMismatchError
from .scalars import KScalar, Rational, as_rational, conj, is_rational_scalar, to_kscalar


Scalar = Union[int, Rational, KScalar]
Row = Tuple[Scalar, ...]
Matrix = Tuple[Row, ...]
MatrixQ = Matrix
MatrixK = Matrix


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(QQ(1) if i == j else QQ(0) for j in range(n)) for i in range(n))


def zero_row(n: int) -> Row:
    return tuple(QQ(0) for _ in range(n))


def _check_width(rows: Sequence[Sequence[Scalar]], ncols: int) -> None:
    for row in rows:
        if len(row) != ncols:
            raise ShapeMismatchError(f"Row of length {len(row)} in a matrix with {ncols} columns")


def _field_of(rows: Sequence[Sequence[Scalar]]) -> Optional[int]:
    d = None
    for row in rows:
        for x in row:
            if isinstance(x, KScalar) and x.im != 0:
                if d is not None and x.d != d:
                    raise FieldMismatchError(f"Matrix mixes Q(sqrt(-{d})) and Q(sqrt(-{x.d})) entries")
                d = x.d
    return d


def _rref_rational(rows: Sequence[Sequence[Scalar]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    dm = DomainMatrix([[as_rational(x) for x in row] for row in rows], (len(rows), ncols), QQ)
    reduced, pivots = dm.rref()
    pivots = tuple(pivots)
    return tuple(tuple(row) for row in reduced.to_list()[: len(pivots)]), pivots


def _rref_generic(rows: Sequence[Sequence[Scalar]], ncols: int, d: int) -> Tuple[Matrix, Tuple[int, ...]]:
    work = [[to_kscalar(x, d) for x in row] for row in rows]
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = next((i for i in range(top, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        inv = work[top][col].inverse()
        work[top] = [x * inv for x in work[top]]
        for i in range(len(work)):
            if i != top and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[top])]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return tuple(tuple(row) for row in work[:top]), tuple(pivots)


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form with the zero rows dropped.

    Rational input is reduced with sympy's `DomainMatrix` over `QQ`; input with entries outside Q is reduced by
    Gauss-Jordan elimination over Q(w).

    Args:
        rows (`Sequence[Sequence[Scalar]]`):
            The matrix rows.
        ncols (`int`):
            The number of columns (needed when there are no rows).

    Returns:
        reduced (`Matrix`): the nonzero rows of the RREF.
        pivots (`Tuple[int, ...]`): the pivot column of each returned row.
    """
    _check_width(rows, ncols)
    if not rows or ncols == 0:
        return (), ()
    d = _field_of(rows)
    if d is None:
        return _rref_rational(rows, ncols)
    return _rref_generic(rows, ncols, d)


def rank(rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def row_space(rows: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Canonical basis (RREF rows) of the span of `rows`."""
    return rref(rows, ncols)[0]


def kernel(rows: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Basis of `{v : M v = 0}`, one vector per free column of the RREF of `M`."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [QQ(0)] * ncols
        vector[free] = QQ(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[free]
        basis.append(tuple(vector))
    return tuple(basis)


def rational_kernel(rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> MatrixQ:
    """
    Q-basis of the right kernel of a rational matrix.

    Args:
        rows (`Sequence[Sequence[Scalar]]`):
            A matrix with rational entries.
        ncols (`int`, *optional*):
            The number of columns; required when `rows` is empty.
    """
    if ncols is None:
        if not rows:
            raise ShapeMismatchError("Cannot infer the column count of an empty matrix")
        ncols = len(rows[0])
    for row in rows:
        for x in row:
            if not is_rational_scalar(x):
                raise ValueError("rational_kernel needs a rational matrix")
    return kernel(rows, ncols)


def annihilator(rows: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Functionals `u` with `u . v = 0` for every `v` in the span of `rows` (no conjugation)."""
    return kernel(rows, ncols)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum((a * b for a, b in zip(u, v) if a and b), QQ(0))


def mat_vec(matrix: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> Row:
    return tuple(dot(row, vector) for row in matrix)


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Product `a b` where `b` has `ncols` columns."""
    columns = transpose(b, ncols)
    return tuple(tuple(dot(row, col) for col in columns) for row in a)


def transpose(rows: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    return tuple(tuple(row[j] for row in rows) for j in range(ncols))


def contains(basis: Sequence[Sequence[Scalar]], ncols: int, vector: Sequence[Scalar]) -> bool:
    return rank(tuple(basis) + (tuple(vector),), ncols) == rank(basis, ncols)


def is_subspace(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int) -> bool:
    """Whether span(a) is contained in span(b)."""
    return rank(tuple(a) + tuple(b), ncols) == rank(b, ncols)


def span_sum(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    return row_space(tuple(a) + tuple(b), ncols)


def intersect(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Canonical basis of span(a) ∩ span(b), the common zero set of both annihilators."""
    return row_space(kernel(annihilator(a, ncols) + annihilator(b, ncols), ncols), ncols)


def image(basis: Sequence[Sequence[Scalar]], matrix: Sequence[Sequence[Scalar]], ncols: int) -> Matrix:
    """Canonical basis of the image of span(basis) under `v ↦ matrix v`; `ncols` is the target dimension."""
    return row_space(tuple(mat_vec(matrix, v) for v in basis), ncols)


def kron(u: Sequence[Scalar], v: Sequence[Scalar]) -> Row:
    """Tensor product of two vectors, index `i * len(v) + j`."""
    return tuple(a * b for a in u for b in v)


def kron_rows(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(kron(u, v) for u in a for v in b)


def conj_rows(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(conj(x) for x in row) for row in rows)


def block_embed(rows: Sequence[Sequence[Scalar]], offset: int, ncols: int) -> Matrix:
    """Place vectors into coordinates `[offset, offset + width)` of a `ncols`-dimensional space."""
    out = []
    for row in rows:
        padded = [QQ(0)] * ncols
        padded[offset : offset + len(row)] = list(row)
        out.append(tuple(padded))
    return tuple(out)


def is_zero_matrix(rows: Sequence[Sequence[Scalar]]) -> bool:
    return all(x == 0 for row in rows for x in row)


def is_rational_matrix(rows: Sequence[Sequence[Scalar]]) -> bool:
    return all(is_rational_scalar(x) for row in rows for x in row)
