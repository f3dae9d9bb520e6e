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
""" Tensor products, internal Hom and weight quotients of mixed Hodge structures.

Tensor coordinates are lexicographic: `a (x) b` has index `a * rank(B) + b`. A map `f: Z^{rA} -> Z^{rB}` is a
point of Z^{rB * rA} with index `b * rA + a` for its matrix entry `f[b][a]`.
"""
from typing import List, Optional, Sequence, Tuple

from ..exact.lattice import complement_projection
from ..exact.linalg import Matrix, annihilator, kernel, kron, kron_rows, mat_vec
from ..exact.scalars import FieldContext
from ..utils import logging
from .mhs import MHS, make_mhs, tate, zero_mhs


logger = logging.get_logger(__name__)


def tensor_mhs(a: MHS, b: MHS) -> MHS:
    """
    The tensor product, with W_n = Σ_{i+j=n} W_i(A) (x) W_j(B) and F^p = Σ_{i+j=p} F^i(A) (x) F^j(B).

    Raises:
        FieldMismatchError: if the structures live over different fields.
    """
    a.context.check(b.context)
    n = a.rank * b.rank
    weights = sorted({i + j for i in a.weight_jumps for j in b.weight_jumps})
    weight_steps = [(w, sum((kron_rows(a.W(i), b.W(w - i)) for i in a.weight_jumps), ())) for w in weights]
    hodge = sorted({i + j for i in a.hodge_jumps for j in b.hodge_jumps})
    hodge_steps = [(p, sum((kron_rows(a.F(i), b.F(p - i)) for i in a.hodge_jumps), ())) for p in hodge]
    return make_mhs(a.context, n, weight_steps, hodge_steps)


def tensor_many(structures: Sequence[MHS], context: Optional[FieldContext] = None) -> MHS:
    """Tensor product of a list of structures, left to right; the empty product is Z(0)."""
    if not structures:
        return tate(0, context)
    result = structures[0]
    for structure in structures[1:]:
        result = tensor_mhs(result, structure)
    return result


def hom_constraints(
    sources: Sequence[Sequence], targets: Sequence[Sequence], source_rank: int, target_rank: int
) -> Matrix:
    """
    Linear conditions on a map `f` (index `b * source_rank + a`) for `f(span(sources)) ⊆ span(targets)`.

    Each condition is `eta . f u = 0` for a basis vector `u` of the source space and a functional `eta` killing the
    target space, i.e. the row `eta (x) u`.
    """
    if not sources:
        return ()
    etas = annihilator(targets, target_rank)
    return tuple(kron(eta, u) for eta in etas for u in sources)


def internal_hom(a: MHS, b: MHS) -> MHS:
    """
    Hom(A, B) on the lattice of integer maps, with W_n = {f : f(W_i A) ⊆ W_{i+n} B} and
    F^p = {f : f(F^q A) ⊆ F^{q+p} B}.
    """
    a.context.check(b.context)
    ra, rb = a.rank, b.rank
    n = ra * rb
    if n == 0:
        return zero_mhs(a.context)

    aw, bw = a.weight_jumps, b.weight_jumps
    weight_steps = []
    for shift in range(min(bw) - max(aw), max(bw) - min(aw) + 1):
        rows: List = []
        for i in aw:
            rows.extend(hom_constraints(a.W(i), b.W(i + shift), ra, rb))
        weight_steps.append((shift, kernel(rows, n)))

    af, bf = a.hodge_jumps, b.hodge_jumps
    hodge_steps = []
    for shift in range(min(bf) - max(af), max(bf) - min(af) + 2):
        rows = []
        for q in af:
            rows.extend(hom_constraints(a.F(q), b.F(q + shift), ra, rb))
        hodge_steps.append((shift, kernel(rows, n)))
    return make_mhs(a.context, n, weight_steps, hodge_steps)


def quotient_by_weight(structure: MHS, k: int) -> MHS:
    """
    The structure on Z^r / (Z^r ∩ W_{-k}), presented on a standard lattice Z^m.

    The sublattice Z^r ∩ W_{-k} is saturated, so the quotient is torsion-free; W and F are the images under the
    quotient map. A quotient of a structure of 1-motive type is again of 1-motive type.
    """
    sub = structure.weight_lattice(-k)
    if sub.rank == 0:
        return structure
    complement = complement_projection(sub)
    projection = complement.projection
    m = len(projection)

    def _image(rows: Matrix) -> Tuple:
        return tuple(mat_vec(projection, v) for v in rows)

    logger.debug(f"Quotient of a rank {structure.rank} structure by W_{-k} of rank {sub.rank}")
    return make_mhs(
        structure.context,
        m,
        [(w, _image(basis)) for w, basis in structure.weight_steps],
        [(p, _image(basis)) for p, basis in structure.hodge_steps],
        motive_type=structure.motive_type,
    )