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
""" Integral multilinear maps Z^{r_1} x ... x Z^{r_l} -> Z^r.

A map is stored as its r x (r_1 ... r_l) coefficient matrix acting on the lexicographic tensor basis; flattened, the
entry `[t][s]` sits at index `t * (r_1 ... r_l) + s`. For l = 1 this is the coordinate system of `internal_hom`.
"""
from dataclasses import dataclass
from functools import reduce
from math import prod
from typing import List, Sequence, Tuple

import numpy as np

from ..exact.lattice import IntMatrix, as_int
from ..exact.linalg import MatrixK, Row, kron, mat_vec
from ..exact.scalars import FieldContext
from ..exceptions import ShapeMismatchError, SourceMismatchError


@dataclass(frozen=True)
class MultilinearMap:
    """
    An integral multilinear map.

    Args:
        source_ranks (`Tuple[int, ...]`):
            Ranks (r_1, ..., r_l) of the source lattices.
        target_rank (`int`):
            Rank r of the target lattice.
        coefficients (`Tuple[Tuple[int, ...], ...]`):
            The r x (r_1 ... r_l) integer matrix; column `s` is the image of the s-th tensor basis vector.
    """

    source_ranks: Tuple[int, ...]
    target_rank: int
    coefficients: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "source_ranks", tuple(int(r) for r in self.source_ranks))
        width = self.width
        try:
            rows = tuple(tuple(as_int(x) for x in row) for row in self.coefficients)
        except (TypeError, ValueError) as error:
            raise ShapeMismatchError(f"Coefficients of a multilinear map must be integers: {error}") from error
        if len(rows) != self.target_rank or any(len(row) != width for row in rows):
            raise ShapeMismatchError(
                f"Coefficients must have shape {self.target_rank}x{width} for sources {self.source_ranks}"
            )
        object.__setattr__(self, "coefficients", rows)

    @property
    def width(self) -> int:
        return prod(self.source_ranks)

    @property
    def arity(self) -> int:
        return len(self.source_ranks)

    @classmethod
    def from_flat(cls, source_ranks: Sequence[int], target_rank: int, vector: Sequence[int]) -> "MultilinearMap":
        width = prod(source_ranks)
        if len(vector) != width * target_rank:
            raise ShapeMismatchError(f"Expected {width * target_rank} coefficients, got {len(vector)}")
        rows = tuple(tuple(vector[t * width : (t + 1) * width]) for t in range(target_rank))
        return cls(tuple(source_ranks), target_rank, rows)

    @classmethod
    def zero(cls, source_ranks: Sequence[int], target_rank: int) -> "MultilinearMap":
        width = prod(source_ranks)
        return cls(tuple(source_ranks), target_rank, tuple((0,) * width for _ in range(target_rank)))

    @classmethod
    def from_array(cls, source_ranks: Sequence[int], array: np.ndarray) -> "MultilinearMap":
        array = np.asarray(array, dtype=object)
        return cls(tuple(source_ranks), array.shape[0], tuple(tuple(row) for row in array.tolist()))

    def flat(self) -> Tuple[int, ...]:
        return tuple(x for row in self.coefficients for x in row)

    def to_array(self) -> np.ndarray:
        """The coefficient matrix as an exact `dtype=object` array."""
        array = np.zeros((self.target_rank, self.width), dtype=object)
        for t, row in enumerate(self.coefficients):
            array[t, :] = row
        return array

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.coefficients]

    def over_field(self, context: FieldContext) -> MatrixK:
        """Φ_K: the same matrix with entries in Q(w)."""
        return tuple(tuple(context.scalar(x) for x in row) for row in self.coefficients)

    def __call__(self, *vectors: Sequence) -> Row:
        """Evaluate on one vector per source, in any coefficient field."""
        if len(vectors) != self.arity:
            raise ShapeMismatchError(f"Map of arity {self.arity} evaluated on {len(vectors)} vectors")
        for vector, r in zip(vectors, self.source_ranks):
            if len(vector) != r:
                raise ShapeMismatchError(f"Vector of length {len(vector)} in a source of rank {r}")
        tensor = reduce(kron, vectors, (1,))
        return mat_vec(self.coefficients, tensor)

    def _check_same_shape(self, other: "MultilinearMap") -> None:
        if self.source_ranks != other.source_ranks or self.target_rank != other.target_rank:
            raise ShapeMismatchError(
                f"Maps of shapes {self.source_ranks}->{self.target_rank} and {other.source_ranks}->{other.target_rank}"
            )

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._check_same_shape(other)
        return MultilinearMap.from_array(self.source_ranks, self.to_array() + other.to_array())

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._check_same_shape(other)
        return MultilinearMap.from_array(self.source_ranks, self.to_array() - other.to_array())

    def __neg__(self) -> "MultilinearMap":
        return self.scaled(-1)

    def scaled(self, k: int) -> "MultilinearMap":
        return MultilinearMap.from_array(self.source_ranks, self.to_array() * k)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.coefficients for x in row)


def identity_map(r: int) -> MultilinearMap:
    return MultilinearMap((r,), r, tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r)))


def unit_map(r: int) -> MultilinearMap:
    """The unit Z(0) (x) H -> H, 1 (x) h ↦ h, for H of rank r."""
    return MultilinearMap((1, r), r, identity_map(r).coefficients)


def linear_as_bilinear(f: MultilinearMap) -> MultilinearMap:
    """A linear map M_1 -> M_2 read as a bilinear map M_1 x Z(0) -> M_2."""
    if f.arity != 1:
        raise SourceMismatchError(f"Expected a linear map, got arity {f.arity}")
    return MultilinearMap((f.source_ranks[0], 1), f.target_rank, f.coefficients)


def swap_permutation(r: int) -> Tuple[int, ...]:
    """The factor swap a (x) b -> b (x) a on Z^r (x) Z^r as an index permutation."""
    return tuple(b * r + a for a in range(r) for b in range(r))


def swap(phi: MultilinearMap) -> MultilinearMap:
    """Precomposition with the factor swap: (Φ∘σ)(a, b) = Φ(b, a)."""
    if phi.arity != 2 or phi.source_ranks[0] != phi.source_ranks[1]:
        raise SourceMismatchError(f"Factor swap needs two sources of equal rank, got {phi.source_ranks}")
    permutation = swap_permutation(phi.source_ranks[0])
    rows = tuple(tuple(row[permutation[s]] for s in range(phi.width)) for row in phi.coefficients)
    return MultilinearMap(phi.source_ranks, phi.target_rank, rows)


def symmetrize(phi: MultilinearMap) -> MultilinearMap:
    """Φ + Φ∘σ."""
    return phi + swap(phi)
