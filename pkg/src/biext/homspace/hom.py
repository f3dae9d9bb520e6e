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
""" Groups of multilinear morphisms Hom(M_1, ..., M_l; M) as saturated integer lattices.

A multilinear morphism is an integral map on the tensor product of the lattices whose extension of scalars respects
both filtrations. The filtrations only change at their jumps, so one inclusion per jump of the tensor product is
required.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exact.lattice import IntLattice, solve_integer_constraints
from ..exact.linalg import image, is_subspace
from ..exceptions import NotInLatticeError, ShapeMismatchError, SourceMismatchError
from ..hodge.mhs import MHS, check_contexts
from ..hodge.operations import hom_constraints, tensor_many
from ..utils import logging
from .maps import MultilinearMap


logger = logging.get_logger(__name__)


@dataclass(frozen=True)
class HomLattice:
    """
    The lattice of multilinear morphisms from the sources to the target.

    Args:
        sources (`Tuple[MHS, ...]`):
            The source structures M_1, ..., M_l.
        target (`MHS`):
            The target structure M.
        lattice (`IntLattice`):
            Flattened coefficient matrices of the morphisms, see `MultilinearMap`.
        tensor (`MHS`, *optional*):
            The tensor product of the sources.
    """

    sources: Tuple[MHS, ...]
    target: MHS
    lattice: IntLattice
    tensor: Optional[MHS] = field(default=None, compare=False, repr=False)

    @property
    def source_ranks(self) -> Tuple[int, ...]:
        return tuple(source.rank for source in self.sources)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def arity(self) -> int:
        return len(self.sources)

    def tensor_product(self) -> MHS:
        return self.tensor if self.tensor is not None else tensor_many(self.sources, self.target.context)

    def basis_maps(self) -> List[MultilinearMap]:
        return [MultilinearMap.from_flat(self.source_ranks, self.target.rank, row) for row in self.lattice.basis]

    def _check_shape(self, phi: MultilinearMap) -> None:
        if phi.source_ranks != self.source_ranks or phi.target_rank != self.target.rank:
            raise ShapeMismatchError(
                f"Map of shape {phi.source_ranks}->{phi.target_rank} against a lattice of shape "
                f"{self.source_ranks}->{self.target.rank}"
            )

    def contains(self, phi: MultilinearMap) -> bool:
        self._check_shape(phi)
        return self.lattice.contains(phi.flat())

    def require(self, phi: MultilinearMap, operation: str = "this operation") -> None:
        """
        Raises:
            NotInLatticeError: if `phi` is not a morphism of this lattice.
        """
        if not self.contains(phi):
            raise NotInLatticeError(f"{operation} needs a morphism of the lattice, got {phi.to_list()}")

    def coordinates(self, phi: MultilinearMap) -> Tuple[int, ...]:
        self._check_shape(phi)
        coords = self.lattice.coordinates(phi.flat())
        if coords is None:
            raise NotInLatticeError(f"{phi.to_list()} is not a morphism of the lattice")
        return coords

    def from_coordinates(self, coords: Sequence[int]) -> MultilinearMap:
        if len(coords) != self.rank:
            raise ShapeMismatchError(f"Expected {self.rank} coordinates, got {len(coords)}")
        flat = [sum(c * row[j] for c, row in zip(coords, self.lattice.basis)) for j in range(self.lattice.ambient_dim)]
        return MultilinearMap.from_flat(self.source_ranks, self.target.rank, flat)

    def with_lattice(self, lattice: IntLattice) -> "HomLattice":
        """A sublattice with the same sources and target."""
        if lattice.ambient_dim != self.lattice.ambient_dim:
            raise ShapeMismatchError(f"Sublattice of Z^{lattice.ambient_dim} in Z^{self.lattice.ambient_dim}")
        return HomLattice(self.sources, self.target, lattice, tensor=self.tensor)

    def to_report(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "source_ranks": list(self.source_ranks),
            "target_rank": self.target.rank,
            "basis": [phi.to_list() for phi in self.basis_maps()],
        }


def hom_multilinear(sources: Sequence[MHS], target: MHS) -> HomLattice:
    """
    Hom(M_1, ..., M_l; M): integral maps on M_1 (x) ... (x) M_l with Φ(W_n) ⊆ W_n(M) and Φ(F^p) ⊆ F^p(M).

    Args:
        sources (`Sequence[MHS]`):
            At least one source structure.
        target (`MHS`):
            The target structure.

    Raises:
        SourceMismatchError: if no source is given.
        FieldMismatchError: if the structures live over different fields.
    """
    if not sources:
        raise SourceMismatchError("A multilinear morphism needs at least one source")
    context = check_contexts(list(sources) + [target])
    tensor = tensor_many(list(sources), context)
    rs, rt = tensor.rank, target.rank
    constraints = []
    for w in tensor.weight_jumps:
        constraints.extend(hom_constraints(tensor.W(w), target.W(w), rs, rt))
    for p in tensor.hodge_jumps:
        constraints.extend(hom_constraints(tensor.F(p), target.F(p), rs, rt))
    lattice = solve_integer_constraints(constraints, rs * rt)
    logger.debug(f"Hom(sources of ranks {[s.rank for s in sources]}; rank {rt}): rank {lattice.rank}")
    return HomLattice(tuple(sources), target, lattice, tensor=tensor)


def hom_lattice(a: MHS, b: MHS) -> HomLattice:
    """
    Hom(A, B): integral maps f with f(W_i A) ⊆ W_i B and f(F^p A) ⊆ F^p B.

    Examples:

    ```python
    >>> from biext.hodge import tate
    >>> hom_lattice(tate(0), tate(1)).rank
    0
    ```
    """
    return hom_multilinear([a], b)


def filtration_violations(lattice: HomLattice, phi: MultilinearMap) -> List[str]:
    """
    Re-check a map against both filtrations by computing images, independently of the solver.

    Returns:
        violations (`List[str]`): the failing steps, e.g. `"W_-2"` or `"F^0"`; empty when `phi` is a morphism.
    """
    lattice._check_shape(phi)
    tensor = lattice.tensor_product()
    target = lattice.target
    matrix = phi.coefficients
    violations = []
    for w in tensor.weight_jumps:
        if not is_subspace(image(tensor.W(w), matrix, target.rank), target.W(w), target.rank):
            violations.append(f"W_{w}")
    for p in tensor.hodge_jumps:
        if not is_subspace(image(tensor.F(p), matrix, target.rank), target.F(p), target.rank):
            violations.append(f"F^{p}")
    return violations
