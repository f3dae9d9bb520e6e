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
""" Finite-level realizations T_Z / n T_Z and the reduction of morphisms modulo n."""
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..exact.linalg import kron
from ..exceptions import InvalidModulusError, ShapeMismatchError
from ..hodge.mhs import MHS
from ..homspace.hom import HomLattice
from ..homspace.maps import MultilinearMap
from ..utils import logging


logger = logging.get_logger(__name__)

# Above this many source tuples the commutation is checked on basis tensors only.
MAX_EXHAUSTIVE_TUPLES = 4096


def _check_modulus(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidModulusError(f"The modulus must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class FiniteRealization:
    """
    The free Z/n-module Z^r / n Z^r.

    Args:
        modulus (`int`):
            n >= 2.
        rank (`int`):
            The rank r of the lattice.
    """

    modulus: int
    rank: int

    def __post_init__(self):
        _check_modulus(self.modulus)

    @property
    def size(self) -> int:
        return self.modulus**self.rank

    def reduce(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != self.rank:
            raise ShapeMismatchError(f"Vector of length {len(vector)} in a rank {self.rank} realization")
        return tuple(int(x) % self.modulus for x in vector)

    def elements(self) -> Iterator[Tuple[int, ...]]:
        """All elements, as representatives in [0, n)."""
        return product(range(self.modulus), repeat=self.rank)


def reduce_mod_n(structure: MHS, n: int) -> FiniteRealization:
    """
    Raises:
        InvalidModulusError: if n < 2.
    """
    return FiniteRealization(n, structure.rank)


@dataclass(frozen=True)
class FiniteMap:
    """A multilinear map with coefficients in Z/n."""

    modulus: int
    source_ranks: Tuple[int, ...]
    target_rank: int
    coefficients: Tuple[Tuple[int, ...], ...]

    def __call__(self, *vectors: Sequence[int]) -> Tuple[int, ...]:
        tensor = reduce(kron, vectors, (1,))
        return tuple(sum(c * x for c, x in zip(row, tensor)) % self.modulus for row in self.coefficients)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.coefficients for x in row)

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.coefficients]


def reduce_map_mod_n(phi: MultilinearMap, lattice: HomLattice, n: int) -> FiniteMap:
    """
    The map induced on finite realizations.

    Raises:
        NotInLatticeError: if `phi` is not a morphism of `lattice`.
        InvalidModulusError: if n < 2.
    """
    _check_modulus(n)
    lattice.require(phi, "reduce_map_mod_n")
    coefficients = tuple(tuple(x % n for x in row) for row in phi.coefficients)
    return FiniteMap(int(n), phi.source_ranks, phi.target_rank, coefficients)


def commute_check(phi: MultilinearMap, lattice: HomLattice, n: int) -> bool:
    """
    Whether reducing after Φ equals Φ mod n after reducing, on every tuple of source elements when there are few, and
    on the basis tensors otherwise.
    """
    reduced = reduce_map_mod_n(phi, lattice, n)
    realizations = [FiniteRealization(n, r) for r in phi.source_ranks]
    target = FiniteRealization(n, phi.target_rank)
    total = 1
    for realization in realizations:
        total *= realization.size
    if total <= MAX_EXHAUSTIVE_TUPLES:
        tuples = product(*(realization.elements() for realization in realizations))
    else:
        bases = [[tuple(1 if i == j else 0 for i in range(r)) for j in range(r)] for r in phi.source_ranks]
        tuples = product(*bases)
    for vectors in tuples:
        lifted = target.reduce(tuple(int(x) for x in phi(*vectors)))
        if lifted != reduced(*(realization.reduce(v) for realization, v in zip(realizations, vectors))):
            logger.warning(f"Reduction mod {n} does not commute with {phi.to_list()} at {vectors}")
            return False
    return True


def reductions_compatible(phi: MultilinearMap, lattice: HomLattice, n: int, m: int) -> bool:
    """Whether Φ mod nm followed by Z/nm -> Z/n is Φ mod n."""
    fine = reduce_map_mod_n(phi, lattice, n * m)
    coarse = reduce_map_mod_n(phi, lattice, n)
    return tuple(tuple(x % n for x in row) for row in fine.coefficients) == coarse.coefficients
