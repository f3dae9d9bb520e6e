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
""" Integer lattices in row Hermite normal form, integer kernels and saturation."""
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, ZZ
from sympy.core.intfunc import igcdex
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from ..exceptions import NotInLatticeError, ShapeMismatchError
from ..utils import logging
from .linalg import Scalar, rational_kernel, row_space
from .scalars import KScalar, as_rational


logger = logging.get_logger(__name__)

IntRow = Tuple[int, ...]
IntMatrix = Tuple[IntRow, ...]


def as_int(value) -> int:
    """Convert an integral int, numpy integer, rational or rational K-scalar to a Python int."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not integers")
    if isinstance(value, (int, np.integer)):
        return int(value)
    q = as_rational(value)
    if q.denominator != 1:
        raise ValueError(f"Expected an integer, got {q}")
    return int(q.numerator)


def _as_int_rows(rows: Sequence[Sequence], ncols: int) -> List[List[int]]:
    out = []
    for row in rows:
        if len(row) != ncols:
            raise ShapeMismatchError(f"Row of length {len(row)} in a matrix with {ncols} columns")
        out.append([as_int(x) for x in row])
    return out


def _row_echelon_with_transform(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[List[int]], int]:
    """
    Integer row reduction `U A = H` with `U` unimodular and `H` in Hermite normal form.

    Returns:
        h (`List[List[int]]`): all rows of `H`; rows from `rank` on are zero.
        u (`List[List[int]]`): the unimodular transform.
        rank (`int`): number of nonzero rows of `H`.
    """
    m = len(rows)
    h = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    top = 0
    for col in range(ncols):
        if top == m:
            break
        for i in range(top + 1, m):
            b = h[i][col]
            if b == 0:
                continue
            a = h[top][col]
            x, y, g = (int(t) for t in igcdex(a, b))
            p, q = -b // g, a // g
            h[top], h[i] = (
                [x * s + y * t for s, t in zip(h[top], h[i])],
                [p * s + q * t for s, t in zip(h[top], h[i])],
            )
            u[top], u[i] = (
                [x * s + y * t for s, t in zip(u[top], u[i])],
                [p * s + q * t for s, t in zip(u[top], u[i])],
            )
        pivot = h[top][col]
        if pivot == 0:
            continue
        if pivot < 0:
            h[top] = [-s for s in h[top]]
            u[top] = [-s for s in u[top]]
            pivot = -pivot
        for k in range(top):
            factor = h[k][col] // pivot
            if factor:
                h[k] = [s - factor * t for s, t in zip(h[k], h[top])]
                u[k] = [s - factor * t for s, t in zip(u[k], u[top])]
        top += 1
    return h, u, top


def _pivot_columns(basis: IntMatrix) -> Tuple[int, ...]:
    return tuple(next(j for j, x in enumerate(row) if x != 0) for row in basis)


@dataclass(frozen=True)
class IntLattice:
    """
    A sublattice of Z^N given by its row Hermite normal form basis.

    Two lattices are equal iff their stored bases are identical. Build instances with `hnf` rather than directly.

    Args:
        ambient_dim (`int`):
            The dimension N of the ambient Z^N.
        basis (`Tuple[Tuple[int, ...], ...]`):
            The HNF rows: upper echelon, positive pivots, entries above each pivot reduced into [0, pivot).
    """

    ambient_dim: int
    basis: IntMatrix

    @classmethod
    def full(cls, n: int) -> "IntLattice":
        return cls(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "IntLattice":
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return _pivot_columns(self.basis)

    def coordinates(self, vector: Sequence) -> Optional[Tuple[int, ...]]:
        """Integer coordinates of `vector` in the HNF basis, or `None` if it is not a lattice point."""
        rest = [as_int(x) for x in vector]
        if len(rest) != self.ambient_dim:
            raise ShapeMismatchError(f"Vector of length {len(rest)} in Z^{self.ambient_dim}")
        coords = []
        for row, p in zip(self.basis, self.pivots):
            factor, remainder = divmod(rest[p], row[p])
            if remainder:
                return None
            if factor:
                rest = [s - factor * t for s, t in zip(rest, row)]
            coords.append(factor)
        if any(rest):
            return None
        return tuple(coords)

    def contains(self, vector: Sequence) -> bool:
        return self.coordinates(vector) is not None

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        """
        Vectorised membership test.

        Args:
            points (`np.ndarray` of shape `(k, N)`):
                Integer points, one per row.

        Returns:
            mask (`np.ndarray` of `bool`, shape `(k,)`).
        """
        points = np.asarray(points)
        if points.ndim != 2 or points.shape[1] != self.ambient_dim:
            raise ShapeMismatchError(f"Expected points of shape (k, {self.ambient_dim}), got {points.shape}")
        # Entries grow by at most a factor (1 + max|basis|) per reduction step.
        bound = int(np.abs(points).max()) if points.size else 0
        largest = max((abs(x) for row in self.basis for x in row), default=0)
        for _ in self.basis:
            bound = bound + (bound + 1) * largest
        dtype = np.int64 if bound < 2**62 else object
        rest = points.astype(dtype)
        mask = np.ones(points.shape[0], dtype=bool)
        for row, p in zip(self.basis, self.pivots):
            factor, remainder = np.divmod(rest[:, p], row[p])
            mask &= remainder == 0
            rest = rest - factor[:, None] * np.asarray(row, dtype=dtype)[None, :]
        mask &= np.all(rest == 0, axis=1)
        return mask

    def sum(self, other: "IntLattice") -> "IntLattice":
        self._check_ambient(other)
        return hnf(self.basis + other.basis, self.ambient_dim)

    def intersect(self, other: "IntLattice") -> "IntLattice":
        """Lattice of points in both lattices, from integer relations `a A = b B`."""
        self._check_ambient(other)
        stacked = list(self.basis) + [tuple(-x for x in row) for row in other.basis]
        relations = integer_kernel(tuple(zip(*stacked)), len(stacked)) if stacked else IntLattice.zero(0)
        points = [
            tuple(sum(c * row[j] for c, row in zip(rel[: self.rank], self.basis)) for j in range(self.ambient_dim))
            for rel in relations.basis
        ]
        return hnf(points, self.ambient_dim)

    def is_sublattice_of(self, other: "IntLattice") -> bool:
        self._check_ambient(other)
        return all(other.contains(row) for row in self.basis)

    def index_in(self, other: "IntLattice") -> int:
        """
        The index [other : self] of a full-rank sublattice.

        Raises:
            NotInLatticeError: if `self` is not contained in `other`.
            ValueError: if the ranks differ (infinite index).
        """
        self._check_ambient(other)
        if self.rank != other.rank:
            raise ValueError(f"Index of a rank {self.rank} sublattice in a rank {other.rank} lattice is infinite")
        coords = []
        for row in self.basis:
            c = other.coordinates(row)
            if c is None:
                raise NotInLatticeError(f"{row} is not a point of the enclosing lattice")
            coords.append(c)
        return reduce(lambda a, b: a * b, smith_invariants(coords, self.rank), 1)

    def is_saturated(self) -> bool:
        return saturate(self) == self

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.basis]

    def _check_ambient(self, other: "IntLattice") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ShapeMismatchError(f"Lattices in Z^{self.ambient_dim} and Z^{other.ambient_dim}")


def hnf(rows: Sequence[Sequence], ncols: Optional[int] = None) -> IntLattice:
    """
    Canonical Hermite normal form basis of the Z-row span of an integer matrix.

    Args:
        rows (`Sequence[Sequence[int]]`):
            The matrix rows.
        ncols (`int`, *optional*):
            The number of columns; required when `rows` is empty.

    Returns:
        lattice (`IntLattice`): the row span with its HNF basis.
    """
    if ncols is None:
        if not rows:
            raise ShapeMismatchError("Cannot infer the column count of an empty matrix")
        ncols = len(rows[0])
    h, _, top = _row_echelon_with_transform(_as_int_rows(rows, ncols), ncols)
    return IntLattice(ncols, tuple(tuple(row) for row in h[:top]))


def smith_invariants(rows: Sequence[Sequence], ncols: int) -> Tuple[int, ...]:
    """Nonzero invariant factors (Smith normal form diagonal) of an integer matrix."""
    int_rows = _as_int_rows(rows, ncols)
    if not int_rows or ncols == 0:
        return ()
    dm = DomainMatrix([[ZZ(x) for x in row] for row in int_rows], (len(int_rows), ncols), ZZ)
    return tuple(int(f) for f in invariant_factors(dm) if f != 0)


def _clear_denominators(rows: Sequence[Sequence[Scalar]], ncols: int) -> List[List[int]]:
    out = []
    for row in rows:
        if len(row) != ncols:
            raise ShapeMismatchError(f"Row of length {len(row)} in a matrix with {ncols} columns")
        values = [as_rational(x) for x in row]
        scale = reduce(lcm, (int(v.denominator) for v in values), 1)
        out.append([int(v.numerator) * (scale // int(v.denominator)) for v in values])
    return out


def integer_kernel(rows: Sequence[Sequence[Scalar]], ncols: int) -> IntLattice:
    """
    The lattice `{v in Z^N : M v = 0}` for a rational matrix `M` with `N` columns.

    The kernel is read off the unimodular transform of the echelon form of `M^T`, so the result is saturated.
    """
    int_rows = _clear_denominators(rows, ncols)
    if not int_rows:
        return IntLattice.full(ncols)
    transposed = [list(col) for col in zip(*int_rows)]
    _, u, top = _row_echelon_with_transform(transposed, len(int_rows))
    return hnf(u[top:], ncols)


def saturate(lattice: IntLattice) -> IntLattice:
    """(L ⊗ Q) ∩ Z^N: the integer points of the rational span of `lattice`."""
    n = lattice.ambient_dim
    if lattice.rank == n:
        return IntLattice.full(n)
    return integer_kernel(rational_kernel(lattice.basis, n), n)


def index_in_saturation(lattice: IntLattice) -> int:
    return lattice.index_in(saturate(lattice))


def solve_integer_constraints(constraints: Sequence[Sequence[Scalar]], ncols: int) -> IntLattice:
    """
    Saturated lattice of integer vectors killed by every constraint.

    Each constraint is a row of rational or Q(w) coefficients; a Q(w) constraint `u` vanishes on an integer vector
    iff both its 1-component and its w-component do, so every row is split into those two rational rows.

    Args:
        constraints (`Sequence[Sequence[Scalar]]`):
            Linear functionals on Z^N, one row each.
        ncols (`int`):
            The number of integer unknowns N.

    Returns:
        lattice (`IntLattice`): all integer solutions.
    """
    split = []
    for row in constraints:
        if len(row) != ncols:
            raise ShapeMismatchError(f"Constraint of length {len(row)} on {ncols} unknowns")
        real = tuple(x.re if isinstance(x, KScalar) else as_rational(x) for x in row)
        imag = tuple(x.im if isinstance(x, KScalar) else QQ(0) for x in row)
        if any(real):
            split.append(real)
        if any(imag):
            split.append(imag)
    # Independent rows only.
    split = row_space(split, ncols) if split else split
    solutions = integer_kernel(split, ncols)
    logger.debug(f"{len(constraints)} constraints ({len(split)} rational) on {ncols} unknowns: rank {solutions.rank}")
    return solutions


def unimodular_inverse(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    n = len(matrix)
    if n == 0:
        return ()
    dm = DomainMatrix([[QQ(as_int(x)) for x in row] for row in matrix], (n, n), QQ)
    inverse = dm.inv().to_list()
    return tuple(tuple(as_int(x) for x in row) for row in inverse)


@dataclass(frozen=True)
class Complement:
    """
    A presentation of Z^N / S as a standard Z^m for a saturated sublattice S.

    Args:
        projection (`Tuple[Tuple[int, ...], ...]`):
            m x N integer matrix; `x ↦ projection x` is onto Z^m with kernel exactly S.
        lifts (`Tuple[Tuple[int, ...], ...]`):
            m vectors of Z^N with `projection lifts[j] = e_j`.
    """

    projection: IntMatrix
    lifts: IntMatrix


def complement_projection(sublattice: IntLattice) -> Complement:
    """
    Quotient coordinates for Z^N / S, from the unimodular transform `U` with `U S^T` in echelon form.

    The rows of `U` beyond rank(S) vanish on S and, since `U` is invertible over Z, they map Z^N onto Z^m; their
    kernel is a saturated lattice of the rank of S containing S, hence S itself when S is saturated.
    """
    n = sublattice.ambient_dim
    s = sublattice.rank
    if s == 0:
        identity = IntLattice.full(n).basis
        return Complement(identity, identity)
    transposed = [list(col) for col in zip(*sublattice.basis)]
    _, u, top = _row_echelon_with_transform(transposed, s)
    u_inv = unimodular_inverse(u)
    projection = tuple(tuple(row) for row in u[top:])
    lifts = tuple(tuple(u_inv[i][j] for i in range(n)) for j in range(top, n))
    return Complement(projection, lifts)
