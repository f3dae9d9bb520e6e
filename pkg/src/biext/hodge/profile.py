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
""" Graded pieces of the weight filtration."""
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.lattice import IntLattice, IntMatrix, complement_projection, hnf
from ..exceptions import NotInLatticeError
from .mhs import MHS


@dataclass
class GrProfile(DataClassJsonMixin):
    """
    Ranks of the graded pieces Gr_w = W_w / W_{w-1}, nonzero ranks only.

    Args:
        ranks (`Dict[int, int]`):
            Map from weight to rank.
    """

    ranks: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.ranks = {int(w): int(r) for w, r in self.ranks.items() if r}

    def __getitem__(self, w: int) -> int:
        return self.ranks.get(w, 0)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def scaled(self, z: int) -> "GrProfile":
        return GrProfile({w: z * r for w, r in self.ranks.items()})

    def __add__(self, other: "GrProfile") -> "GrProfile":
        return GrProfile({w: self[w] + other[w] for w in set(self.ranks) | set(other.ranks)})

    def as_json(self) -> Dict[str, int]:
        return {str(w): r for w, r in sorted(self.ranks.items(), reverse=True)}


def gr_profile(structure: MHS) -> GrProfile:
    return GrProfile({w: structure.gr_rank(w) for w in structure.weights})


@dataclass(frozen=True)
class GradedLattice:
    """
    The lattice Gr_w = (Z^r ∩ W_w) / (Z^r ∩ W_{w-1}) presented as a standard Z^m.

    Args:
        weight (`int`):
            The weight w.
        lifts (`Tuple[Tuple[int, ...], ...]`):
            Integral vectors of Z^r ∩ W_w whose classes form a basis of Gr_w.
        ambient (`IntLattice`):
            The saturated lattice Z^r ∩ W_w.
        projection (`Tuple[Tuple[int, ...], ...]`):
            Map from coordinates in `ambient` to coordinates in the basis of classes of `lifts`.
    """

    weight: int
    lifts: IntMatrix
    ambient: IntLattice
    projection: IntMatrix

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of the class of a vector of Z^r ∩ W_w in the basis of Gr_w."""
        coords = self.ambient.coordinates(vector)
        if coords is None:
            raise NotInLatticeError(f"{tuple(vector)} does not lie in W_{self.weight}")
        return tuple(sum(p * c for p, c in zip(row, coords)) for row in self.projection)


def graded_lattice(structure: MHS, w: int) -> GradedLattice:
    top = structure.weight_lattice(w)
    bottom = structure.weight_lattice(w - 1)
    if top.rank == 0:
        return GradedLattice(w, (), top, ())
    inner = hnf([top.coordinates(row) for row in bottom.basis], top.rank)
    complement = complement_projection(inner)
    lifts = tuple(
        tuple(sum(c * row[j] for c, row in zip(lift, top.basis)) for j in range(structure.rank))
        for lift in complement.lifts
    )
    return GradedLattice(w, lifts, top, complement.projection)


def graded_lattice_basis(structure: MHS, w: int) -> IntMatrix:
    """Integral lifts of a Z-basis of Gr_w of the lattice."""
    return graded_lattice(structure, w).lifts