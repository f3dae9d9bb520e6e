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
""" Currying, Weil pairings and transposes.

The Cartier dual Hom(H, Z(1)) has the dual basis as coordinates, so the Weil pairing H (x) H* -> Z(1) is the
evaluation `e(e_a, e*_k) = δ_ak` and the transpose of an integral map is its matrix transpose.
"""
from dataclasses import dataclass

import numpy as np
from dataclasses_json import DataClassJsonMixin

from ..exact.lattice import IntMatrix, hnf, smith_invariants
from ..exceptions import CheckFailedError, SourceMismatchError
from ..hodge.mhs import MHS, tate
from ..hodge.operations import internal_hom
from ..motives.builders import cartier_dual, require_one_motive
from ..utils import logging
from .hom import HomLattice, hom_lattice, hom_multilinear
from .maps import MultilinearMap, identity_map


logger = logging.get_logger(__name__)


def _require_bilinear(lattice: HomLattice, operation: str) -> None:
    if lattice.arity != 2:
        raise SourceMismatchError(f"{operation} needs a lattice of bilinear maps, got {lattice.arity} sources")


def curry(phi: MultilinearMap) -> MultilinearMap:
    """Φ: A (x) B -> C as A -> Hom(B, C), with f[c * rB + b][a] = Φ[c][a * rB + b]."""
    if phi.arity != 2:
        raise SourceMismatchError(f"Currying needs a bilinear map, got arity {phi.arity}")
    ra, rb = phi.source_ranks
    rc = phi.target_rank
    array = phi.to_array().reshape(rc, ra, rb).transpose(0, 2, 1).reshape(rc * rb, ra)
    return MultilinearMap.from_array((ra,), array)


def uncurry(f: MultilinearMap, rb: int) -> MultilinearMap:
    """Inverse of `curry` for a map into Hom(B, C) with B of rank `rb`."""
    if f.arity != 1 or rb <= 0 or f.target_rank % rb:
        raise SourceMismatchError(f"Cannot uncurry a map of shape {f.source_ranks}->{f.target_rank} over rank {rb}")
    (ra,) = f.source_ranks
    rc = f.target_rank // rb
    array = f.to_array().reshape(rc, rb, ra).transpose(0, 2, 1).reshape(rc, ra * rb)
    return MultilinearMap.from_array((ra, rb), array)


def curry_adjunction(phi: MultilinearMap, lattice: HomLattice) -> MultilinearMap:
    """
    The image of Φ ∈ Hom(A, B; C) in Hom(A, Hom(B, C)).

    Raises:
        NotInLatticeError: if `phi` is not a morphism of `lattice`.
    """
    _require_bilinear(lattice, "curry_adjunction")
    lattice.require(phi, "curry_adjunction")
    return curry(phi)


@dataclass
class AdjunctionReport(DataClassJsonMixin):
    """
    Comparison of Hom(A, B; C) with Hom(A, Hom(B, C)) under currying.

    Args:
        bilinear_rank (`int`): rank of Hom(A, B; C).
        linear_rank (`int`): rank of Hom(A, Hom(B, C)).
        bijective (`bool`): whether currying maps the first lattice onto the second.
        inverse_exact (`bool`): whether uncurrying recovers every basis element.
    """

    bilinear_rank: int
    linear_rank: int
    bijective: bool
    inverse_exact: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.inverse_exact


def adjunction_report(lattice: HomLattice) -> AdjunctionReport:
    _require_bilinear(lattice, "adjunction_report")
    a, b = lattice.sources
    linear = hom_lattice(a, internal_hom(b, lattice.target))
    curried = [curry(phi) for phi in lattice.basis_maps()]
    image = hnf([f.flat() for f in curried], linear.lattice.ambient_dim)
    bijective = image == linear.lattice
    inverse_exact = all(uncurry(f, b.rank) == phi for f, phi in zip(curried, lattice.basis_maps()))
    if not bijective:
        logger.warning(f"Currying maps a rank {lattice.rank} lattice onto rank {image.rank} of {linear.rank}")
    return AdjunctionReport(lattice.rank, linear.rank, bijective, inverse_exact)


def evaluation_map(r: int) -> MultilinearMap:
    """The evaluation Z^r (x) (Z^r)^∨ -> Z, e[0][a * r + k] = δ_ak."""
    return MultilinearMap((r, r), 1, (tuple(1 if a == k else 0 for a in range(r) for k in range(r)),))


def pairing_matrix(phi: MultilinearMap) -> IntMatrix:
    """The Gram matrix B[a][b] = Φ(e_a, e_b) of a bilinear form with values in a rank-1 lattice."""
    if phi.arity != 2 or phi.target_rank != 1:
        raise SourceMismatchError(f"Expected a bilinear form, got shape {phi.source_ranks}->{phi.target_rank}")
    r1, r2 = phi.source_ranks
    (row,) = phi.coefficients
    return tuple(tuple(row[a * r2 + b] for b in range(r2)) for a in range(r1))


def is_unimodular(matrix: IntMatrix) -> bool:
    """Whether a square integer matrix is invertible over Z."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    invariants = smith_invariants(matrix, n) if n else ()
    return len(invariants) == n and all(abs(x) == 1 for x in invariants)


def weil_pairing(structure: MHS) -> MultilinearMap:
    """
    The Weil pairing H (x) H* -> Z(1), checked to be a morphism and non-degenerate.

    Raises:
        NotOneMotiveError: if `structure` is not of 1-motive type.
        CheckFailedError: if the evaluation is not a unimodular morphism.
    """
    require_one_motive(structure, "weil_pairing")
    dual = cartier_dual(structure)
    pairing = evaluation_map(structure.rank)
    lattice = hom_multilinear([structure, dual], tate(1, structure.context))
    if not lattice.contains(pairing):
        raise CheckFailedError("The evaluation pairing is not a morphism into Z(1)")
    if not is_unimodular(pairing_matrix(pairing)):
        raise CheckFailedError("The evaluation pairing is degenerate")
    return pairing


def pullback_pairing(s: MultilinearMap) -> MultilinearMap:
    """
    The form (h, h') ↦ <s(h), h'> = e(h', s(h)) of a map s: H -> H*.

    Its Gram matrix is the transpose of the matrix of `s`.
    """
    if s.arity != 1 or s.source_ranks[0] != s.target_rank:
        raise SourceMismatchError(f"Expected a map H -> H*, got shape {s.source_ranks}->{s.target_rank}")
    r = s.target_rank
    return MultilinearMap((r, r), 1, (tuple(s.coefficients[b][a] for a in range(r) for b in range(r)),))


def transpose(f: MultilinearMap, lattice: HomLattice, check: bool = True) -> MultilinearMap:
    """
    The dual map f^t: B* -> A* of f ∈ Hom(A, B).

    Args:
        f (`MultilinearMap`):
            A morphism of `lattice`.
        lattice (`HomLattice`):
            Hom(A, B) for structures of 1-motive type.
        check (`bool`, *optional*, defaults to `True`):
            Also verify that f^t is a morphism of the Cartier duals.

    Raises:
        NotInLatticeError: if `f` is not a morphism of `lattice`.
        CheckFailedError: if `check` is set and f^t is not a morphism.
    """
    if lattice.arity != 1:
        raise SourceMismatchError(f"transpose needs a lattice of linear maps, got {lattice.arity} sources")
    (a,) = lattice.sources
    b = lattice.target
    require_one_motive(a, "transpose")
    require_one_motive(b, "transpose")
    lattice.require(f, "transpose")
    ft = MultilinearMap.from_array((b.rank,), f.to_array().T)
    if check and not hom_lattice(cartier_dual(b), cartier_dual(a)).contains(ft):
        raise CheckFailedError("The transpose is not a morphism of the Cartier duals")
    return ft


def adjoint_check(f: MultilinearMap, lattice: HomLattice) -> bool:
    """
    Whether e_B ∘ (f (x) id) = e_A ∘ (id (x) f^t) on A (x) B*, both sides being morphisms into Z(1).
    """
    ft = transpose(f, lattice)
    (a,) = lattice.sources
    b = lattice.target
    ra, rb = a.rank, b.rank
    if ra * rb == 0:
        return True
    left = evaluation_map(rb).to_array() @ np.kron(f.to_array(), identity_map(rb).to_array())
    right = evaluation_map(ra).to_array() @ np.kron(identity_map(ra).to_array(), ft.to_array())
    left_map = MultilinearMap.from_array((ra, rb), left)
    right_map = MultilinearMap.from_array((ra, rb), right)
    if left_map != right_map:
        logger.warning(f"Adjointness fails for {f.to_list()}")
        return False
    return hom_multilinear([a, cartier_dual(b)], tate(1, a.context)).contains(left_map)
