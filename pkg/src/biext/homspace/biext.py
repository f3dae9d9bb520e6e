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
""" Hodge-side biextensions of (M_1, M_2) by M_3.

A biextension of [T_Z(M_i) (+) F^0 -> T_C(M_i)] is the trivial biextension of the complex spaces with two bilinear
maps φ_1, φ_2. The trivializations are

    Ψ_1(v_Z (+) f_1, w) = φ_1(v_Z, w) + φ_2(f_1, w)
    Ψ_2(v, w_Z (+) f_2) = φ_2(v, w_Z) + φ_1(v, f_2)

and the class of the biextension is λ = φ_1 - φ_2, an integral morphism. Two biextensions are isomorphic iff their
classes agree.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from ..exact.linalg import MatrixK, Row, contains, is_rational_matrix, is_subspace, kron, kron_rows, mat_vec
from ..exact.scalars import as_rational, format_scalar
from ..exceptions import InvalidBiextensionError, NotInLatticeError, ShapeMismatchError, SourceMismatchError
from ..hodge.mhs import MHS
from ..utils import logging
from .hom import HomLattice
from .maps import MultilinearMap


logger = logging.get_logger(__name__)


def _sub(a: MatrixK, b: MatrixK) -> MatrixK:
    return tuple(tuple(x - y for x, y in zip(row_a, row_b)) for row_a, row_b in zip(a, b))


def _format(matrix: MatrixK) -> List[List[str]]:
    return [[format_scalar(x) for x in row] for row in matrix]


@dataclass(frozen=True)
class BiextData:
    """
    A biextension with its trivializations.

    Args:
        lattice (`HomLattice`):
            Hom(M_1, M_2; M_3), carrying the three structures.
        phi1 (`MatrixK`):
            φ_1 as an r_3 x (r_1 r_2) matrix over Q(w).
        phi2 (`MatrixK`):
            φ_2, same shape.
        lam (`MultilinearMap`):
            The class λ = φ_1 - φ_2 on the lattices.
    """

    lattice: HomLattice
    phi1: MatrixK
    phi2: MatrixK
    lam: MultilinearMap

    @property
    def sources(self) -> Sequence[MHS]:
        return self.lattice.sources

    @property
    def target(self) -> MHS:
        return self.lattice.target

    def difference(self) -> MatrixK:
        return _sub(self.phi1, self.phi2)

    def _check_point(self, vector: Sequence, structure: MHS, name: str, hodge: bool) -> None:
        if len(vector) != structure.rank:
            raise ShapeMismatchError(f"{name} has length {len(vector)}, expected {structure.rank}")
        if hodge and not contains(structure.F(0), structure.rank, vector):
            raise NotInLatticeError(f"{name} does not lie in F^0")
        if not hodge and any(not isinstance(x, int) for x in vector):
            raise NotInLatticeError(f"{name} must be an integral vector")

    def psi1(self, v_int: Sequence[int], f1: Sequence, w: Sequence) -> Row:
        """Ψ_1(v_Z (+) f_1, w) = φ_1(v_Z, w) + φ_2(f_1, w)."""
        m1, _ = self.sources
        self._check_point(v_int, m1, "v_int", hodge=False)
        self._check_point(f1, m1, "f1", hodge=True)
        first = mat_vec(self.phi1, kron(v_int, w))
        second = mat_vec(self.phi2, kron(f1, w))
        return tuple(x + y for x, y in zip(first, second))

    def psi2(self, v: Sequence, w_int: Sequence[int], f2: Sequence) -> Row:
        """Ψ_2(v, w_Z (+) f_2) = φ_2(v, w_Z) + φ_1(v, f_2)."""
        _, m2 = self.sources
        self._check_point(w_int, m2, "w_int", hodge=False)
        self._check_point(f2, m2, "f2", hodge=True)
        first = mat_vec(self.phi2, kron(v, w_int))
        second = mat_vec(self.phi1, kron(v, f2))
        return tuple(x + y for x, y in zip(first, second))

    def trivializations_agree(self) -> bool:
        """
        Compatibility of Ψ_1 and Ψ_2: on integral pairs they differ by λ, and on F^0 x F^0 they differ by a value in
        F^0(M_3).
        """
        m1, m2 = self.sources
        zero1 = (0,) * m1.rank
        zero2 = (0,) * m2.rank
        for a in range(m1.rank):
            e_a = tuple(1 if i == a else 0 for i in range(m1.rank))
            for b in range(m2.rank):
                e_b = tuple(1 if j == b else 0 for j in range(m2.rank))
                gap = tuple(x - y for x, y in zip(self.psi1(e_a, zero1, e_b), self.psi2(e_a, e_b, zero2)))
                if gap != tuple(self.lam(e_a, e_b)):
                    return False
        target = self.target
        for f1 in m1.F(0):
            for f2 in m2.F(0):
                gap = tuple(x - y for x, y in zip(self.psi2(f1, zero2, f2), self.psi1(zero1, f1, f2)))
                if not contains(target.F(0), target.rank, gap):
                    return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {"phi1": _format(self.phi1), "phi2": _format(self.phi2), "lambda": self.lam.to_list()}


def biext_violations(lattice: HomLattice, phi1: MatrixK, phi2: MatrixK) -> List[str]:
    """Names of the failing conditions on a pair (φ_1, φ_2): shape, class_integral, class_morphism, class_hodge."""
    m1, m2 = lattice.sources
    target = lattice.target
    width = m1.rank * m2.rank
    for matrix in (phi1, phi2):
        if len(matrix) != target.rank or any(len(row) != width for row in matrix):
            return ["shape"]
    difference = _sub(phi1, phi2)
    if not is_rational_matrix(difference) or any(as_rational(x).denominator != 1 for row in difference for x in row):
        return ["class_integral"]
    violations = []
    lam = _class_of(difference, m1.rank, m2.rank)
    if not lattice.contains(lam):
        violations.append("class_morphism")
    images = tuple(mat_vec(difference, u) for u in kron_rows(m1.F(0), m2.F(0)))
    if not is_subspace(images, target.F(0), target.rank):
        violations.append("class_hodge")
    return violations


def _class_of(difference: MatrixK, r1: int, r2: int) -> MultilinearMap:
    return MultilinearMap((r1, r2), len(difference), tuple(tuple(as_rational(x) for x in row) for row in difference))


def make_biext(lattice: HomLattice, phi1: MatrixK, phi2: MatrixK) -> BiextData:
    """
    Biextension data from two bilinear maps, with class φ_1 - φ_2.

    Raises:
        InvalidBiextensionError: if φ_1 - φ_2 is not an integral morphism respecting F^0.
    """
    if lattice.arity != 2:
        raise SourceMismatchError(f"A biextension needs two sources, got {lattice.arity}")
    context = lattice.target.context
    try:
        phi1 = tuple(tuple(context.scalar(x) for x in row) for row in phi1)
        phi2 = tuple(tuple(context.scalar(x) for x in row) for row in phi2)
    except (TypeError, ValueError) as error:
        raise InvalidBiextensionError(f"Entries of φ_1 and φ_2 must be scalars of Q(w): {error}") from error
    violations = biext_violations(lattice, phi1, phi2)
    if violations:
        raise InvalidBiextensionError(f"Not a biextension: {violations}")
    m1, m2 = lattice.sources
    lam = _class_of(_sub(phi1, phi2), m1.rank, m2.rank)
    logger.debug(f"Biextension of ranks ({m1.rank}, {m2.rank}) with class {lam.to_list()}")
    return BiextData(lattice, phi1, phi2, lam)


def biext_from_map(phi: MultilinearMap, lattice: HomLattice, phi1: Optional[MatrixK] = None) -> BiextData:
    """
    The biextension attached to a bilinear morphism Φ.

    Args:
        phi (`MultilinearMap`):
            A morphism of `lattice`.
        lattice (`HomLattice`):
            Hom(M_1, M_2; M_3).
        phi1 (`MatrixK`, *optional*):
            A choice of φ_1; φ_2 is then φ_1 - Φ_K. Defaults to Φ_K, so that φ_2 = 0.

    Raises:
        NotInLatticeError: if `phi` is not a morphism of `lattice`.
        InvalidBiextensionError: if `phi1` does not give a biextension.
    """
    lattice.require(phi, "biext_from_map")
    context = lattice.target.context
    phi_k = phi.over_field(context)
    if phi1 is None:
        zero = context.scalar(0)
        return make_biext(lattice, phi_k, tuple(tuple(zero for _ in row) for row in phi_k))
    if len(phi1) != len(phi_k) or any(len(row) != phi.width for row in phi1):
        raise InvalidBiextensionError(f"φ_1 must have shape {phi.target_rank}x{phi.width}")
    phi1 = tuple(tuple(context.scalar(x) for x in row) for row in phi1)
    return make_biext(lattice, phi1, _sub(phi1, phi_k))


def biext_class(b: BiextData) -> MultilinearMap:
    """λ = φ_1 - φ_2 on the lattices."""
    return b.lam


def biext_iso(b: BiextData, other: BiextData) -> bool:
    """
    Whether two biextensions of the same structures are isomorphic, i.e. have the same class.

    Raises:
        ShapeMismatchError: if the sources or targets differ.
    """
    if b.lattice.sources != other.lattice.sources or b.lattice.target != other.lattice.target:
        raise ShapeMismatchError("Biextensions of different structures cannot be compared")
    return biext_class(b) == biext_class(other)
