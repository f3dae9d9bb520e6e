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
""" De Rham realizations as extension of scalars, and the curvature of a biextension.

The connection on the biextension of Hodge realizations has components γ_i = -φ_i. Its curvature is

    R((t'_1, t'_2), (t''_1, t''_2)) = γ_1(t'_1, t''_2) + γ_2(t''_1, t'_2) - γ_1(t''_1, t'_2) - γ_2(t'_1, t''_2)

and R(g_1 + g_2, g'_1 + g'_2) = Υ(g_1, g'_2) - Υ(g'_1, g_2) for the pairing Υ, which must equal -(φ_1 - φ_2).
"""
from dataclasses import dataclass, field
from itertools import product
from typing import List, Sequence, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.linalg import Matrix, MatrixK, Row, kron, mat_vec
from ..exact.scalars import FieldContext, format_scalar
from ..exceptions import CheckFailedError, InvalidBiextensionError
from ..hodge.mhs import MHS
from ..homspace.biext import BiextData, biext_violations
from ..homspace.hom import HomLattice, filtration_violations
from ..homspace.maps import MultilinearMap
from ..utils import logging


logger = logging.get_logger(__name__)


@dataclass(frozen=True)
class DeRhamSpace:
    """
    T_Z (x) Q(w) with the Hodge filtration of the structure.

    Args:
        context (`FieldContext`):
            The coefficient field.
        rank (`int`):
            The dimension.
        hodge_steps (`Tuple[Tuple[int, Matrix], ...]`):
            `(p, basis of F^p)` at the jumps, increasing in p.
    """

    context: FieldContext
    rank: int
    hodge_steps: Tuple[Tuple[int, Matrix], ...] = field(default_factory=tuple)

    def F(self, p: int) -> Matrix:
        for index, basis in self.hodge_steps:
            if index >= p:
                return basis
        return ()

    def hodge_dims(self):
        return {p: len(basis) for p, basis in self.hodge_steps}


def de_rham(structure: MHS) -> DeRhamSpace:
    return DeRhamSpace(structure.context, structure.rank, structure.hodge_steps)


def de_rham_map(phi: MultilinearMap, lattice: HomLattice) -> MatrixK:
    """
    Φ with entries read in Q(w), after re-checking that it respects the Hodge filtrations.

    Raises:
        NotInLatticeError: if `phi` is not a morphism of `lattice`.
        CheckFailedError: if the complexified map does not respect F.
    """
    lattice.require(phi, "de_rham_map")
    failing = [name for name in filtration_violations(lattice, phi) if name.startswith("F")]
    if failing:
        raise CheckFailedError(f"The complexified map does not respect {failing}")
    return phi.over_field(lattice.target.context)


def _bilinear(matrix: MatrixK, v: Sequence, w: Sequence) -> Row:
    return mat_vec(matrix, kron(v, w))


def curvature_form(
    gamma1: MatrixK, gamma2: MatrixK, first: Tuple[Sequence, Sequence], second: Tuple[Sequence, Sequence]
) -> Row:
    """R((t'_1, t'_2), (t''_1, t''_2)) for the connection with components γ_1, γ_2."""
    (t1p, t2p), (t1pp, t2pp) = first, second
    terms = (
        _bilinear(gamma1, t1p, t2pp),
        _bilinear(gamma2, t1pp, t2p),
        _bilinear(gamma1, t1pp, t2p),
        _bilinear(gamma2, t1p, t2pp),
    )
    return tuple(a + b - c - d for a, b, c, d in zip(*terms))


def _negate(matrix: MatrixK) -> MatrixK:
    return tuple(tuple(-x for x in row) for row in matrix)


def _unit(i: int, n: int) -> Tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def curvature_components(b: BiextData) -> Tuple[MatrixK, MatrixK, MatrixK]:
    """
    (γ_1, γ_2, Υ), with Υ(e_i, f_j) = R((e_i, 0), (0, f_j)) read off the curvature form.

    Raises:
        InvalidBiextensionError: if `b` violates the biextension conditions.
    """
    violations = biext_violations(b.lattice, b.phi1, b.phi2)
    if violations:
        raise InvalidBiextensionError(f"Not a biextension: {violations}")
    gamma1, gamma2 = _negate(b.phi1), _negate(b.phi2)
    m1, m2 = b.sources
    r1, r2, r3 = m1.rank, m2.rank, b.target.rank
    zero1, zero2 = (0,) * r1, (0,) * r2
    columns = [
        curvature_form(gamma1, gamma2, (_unit(i, r1), zero2), (zero1, _unit(j, r2)))
        for i in range(r1)
        for j in range(r2)
    ]
    upsilon = tuple(tuple(column[k] for column in columns) for k in range(r3))
    return gamma1, gamma2, upsilon


@dataclass
class CurvatureReport(DataClassJsonMixin):
    """
    The connection of a biextension and its curvature pairing, scalars rendered as literals.

    Args:
        gamma1, gamma2 (`List[List[str]]`): the connection components.
        upsilon (`List[List[str]]`): the pairing Υ.
        identity_holds (`bool`): whether Υ = -(φ_1 - φ_2) exactly.
        decomposition_holds (`bool`): whether R(g_1 + g_2, g'_1 + g'_2) = Υ(g_1, g'_2) - Υ(g'_1, g_2) on basis
            vectors.
    """

    gamma1: List[List[str]]
    gamma2: List[List[str]]
    upsilon: List[List[str]]
    identity_holds: bool
    decomposition_holds: bool

    @property
    def ok(self) -> bool:
        return self.identity_holds and self.decomposition_holds


def _format(matrix: MatrixK) -> List[List[str]]:
    return [[format_scalar(x) for x in row] for row in matrix]


def curvature(b: BiextData) -> CurvatureReport:
    """
    Raises:
        InvalidBiextensionError: if `b` violates the biextension conditions.
    """
    gamma1, gamma2, upsilon = curvature_components(b)
    m1, m2 = b.sources
    r1, r2 = m1.rank, m2.rank
    identity_holds = upsilon == _negate(b.difference())
    decomposition_holds = True
    for i, j, k, l_ in product(range(r1), range(r2), range(r1), range(r2)):
        g1, g2, g1p, g2p = _unit(i, r1), _unit(j, r2), _unit(k, r1), _unit(l_, r2)
        value = curvature_form(gamma1, gamma2, (g1, g2), (g1p, g2p))
        expected = tuple(x - y for x, y in zip(_bilinear(upsilon, g1, g2p), _bilinear(upsilon, g1p, g2)))
        if value != expected:
            decomposition_holds = False
            break
    if not identity_holds:
        logger.warning("The curvature pairing differs from -(φ_1 - φ_2)")
    return CurvatureReport(_format(gamma1), _format(gamma2), _format(upsilon), identity_holds, decomposition_holds)
