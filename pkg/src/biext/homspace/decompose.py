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
""" Decompositions of multilinear morphism groups: factor swap, weights, and the pairwise sum formula."""
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.lattice import solve_integer_constraints
from ..exact.linalg import image, is_subspace, is_zero_matrix, kron_rows, rational_kernel
from ..exceptions import SourceMismatchError
from ..hodge.mhs import MHS, check_contexts
from ..hodge.operations import quotient_by_weight, tensor_many
from ..hodge.profile import GrProfile, gr_profile, graded_lattice
from ..hodge.validation import is_one_motive_type
from ..motives.builders import tensor_weight0
from ..utils import logging
from .hom import HomLattice, hom_multilinear
from .maps import MultilinearMap, swap_permutation


logger = logging.get_logger(__name__)

SYMMETRIC_LABEL = "symmetric maps: classes of skew-symmetric biextensions"
ANTISYMMETRIC_LABEL = "antisymmetric maps: classes of symmetric biextensions"


@dataclass
class SymmetricSplit(DataClassJsonMixin):
    """
    Ranks of the maps fixed and negated by the factor swap.

    Args:
        rank (`int`): rank of the whole lattice.
        symmetric_rank (`int`): rank of {Φ : Φ∘σ = Φ}.
        antisymmetric_rank (`int`): rank of {Φ : Φ∘σ = -Φ}.
        sum_rank (`int`): rank of their sum.
        index (`int`, *optional*): index of the sum in the lattice, a power of 2; `None` when ranks differ.
        symmetric_basis, antisymmetric_basis (`List[List[List[int]]]`): coefficient matrices.
        labels (`Dict[str, str]`): how the two parts read as biextension classes.
    """

    rank: int
    symmetric_rank: int
    antisymmetric_rank: int
    sum_rank: int
    index: Optional[int] = None
    symmetric_basis: List[List[List[int]]] = field(default_factory=list)
    antisymmetric_basis: List[List[List[int]]] = field(default_factory=list)
    labels: Dict[str, str] = field(
        default_factory=lambda: {"symmetric": SYMMETRIC_LABEL, "antisymmetric": ANTISYMMETRIC_LABEL}
    )


def _swap_rows(r: int, target_rank: int, sign: int) -> List[Tuple[int, ...]]:
    """Rows of σ - sign·I on flattened maps: Φ[t][σ(s)] - sign Φ[t][s] = 0."""
    permutation = swap_permutation(r)
    width = r * r
    n = width * target_rank
    rows = []
    for t in range(target_rank):
        for s in range(width):
            if permutation[s] == s and sign == 1:
                continue
            row = [0] * n
            row[t * width + permutation[s]] += 1
            row[t * width + s] -= sign
            rows.append(tuple(row))
    return rows


def sym_antisym_split(lattice: HomLattice) -> Tuple[HomLattice, HomLattice]:
    """
    The sublattices of maps fixed, resp. negated, by precomposition with the swap of two equal sources.

    Raises:
        SourceMismatchError: unless the lattice has two equal sources.
    """
    if lattice.arity != 2 or lattice.sources[0] != lattice.sources[1]:
        raise SourceMismatchError("The factor swap needs two equal sources")
    r = lattice.sources[0].rank
    n = lattice.lattice.ambient_dim
    outside = rational_kernel(lattice.lattice.basis, n)
    parts = []
    for sign in (1, -1):
        constraints = list(outside) + _swap_rows(r, lattice.target.rank, sign)
        parts.append(lattice.with_lattice(solve_integer_constraints(constraints, n)))
    return parts[0], parts[1]


def symmetric_split_report(lattice: HomLattice) -> SymmetricSplit:
    symmetric, antisymmetric = sym_antisym_split(lattice)
    total = symmetric.lattice.sum(antisymmetric.lattice)
    index = total.index_in(lattice.lattice) if total.rank == lattice.rank else None
    return SymmetricSplit(
        rank=lattice.rank,
        symmetric_rank=symmetric.rank,
        antisymmetric_rank=antisymmetric.rank,
        sum_rank=total.rank,
        index=index,
        symmetric_basis=[phi.to_list() for phi in symmetric.basis_maps()],
        antisymmetric_basis=[phi.to_list() for phi in antisymmetric.basis_maps()],
    )


@dataclass
class WeightRespectReport(DataClassJsonMixin):
    """
    How a bilinear morphism meets the weight filtrations.

    Args:
        top_to_w2 (`bool`): Φ(W_-1 (x) W_-1) ⊆ W_-2 of the target.
        kills_lower (`bool`): Φ vanishes on W_-2 (x) W_-1 and on W_-1 (x) W_-2.
        gr_map (`List[List[int]]`, *optional*): the induced Gr_-1 (x) Gr_-1 -> Gr_-2 matrix.
        gr_shape (`List[int]`, *optional*): ranks of Gr_-1 of both sources and Gr_-2 of the target.
    """

    top_to_w2: bool
    kills_lower: bool
    gr_map: Optional[List[List[int]]] = None
    gr_shape: Optional[List[int]] = None

    @property
    def ok(self) -> bool:
        return self.top_to_w2 and self.kills_lower


def weight_respect_check(phi: MultilinearMap, lattice: HomLattice) -> WeightRespectReport:
    """
    Check Φ(W_-1 (x) W_-1) ⊆ W_-2, Φ(W_-2 (x) W_-1) = Φ(W_-1 (x) W_-2) = 0 and compute the graded map.

    Raises:
        NotInLatticeError: if `phi` is not a morphism of `lattice`.
    """
    if lattice.arity != 2:
        raise SourceMismatchError(f"weight_respect_check needs two sources, got {lattice.arity}")
    lattice.require(phi, "weight_respect_check")
    a, b = lattice.sources
    target = lattice.target
    matrix = phi.coefficients
    rt = target.rank

    top = image(kron_rows(a.W(-1), b.W(-1)), matrix, rt)
    top_to_w2 = is_subspace(top, target.W(-2), rt)
    lower = kron_rows(a.W(-2), b.W(-1)) + kron_rows(a.W(-1), b.W(-2))
    kills_lower = is_zero_matrix(image(lower, matrix, rt))
    if not (top_to_w2 and kills_lower):
        logger.warning(f"{phi.to_list()} does not respect the weight filtration")
        return WeightRespectReport(top_to_w2, kills_lower)

    lifts_a = graded_lattice(a, -1).lifts
    lifts_b = graded_lattice(b, -1).lifts
    graded_target = graded_lattice(target, -2)
    width = len(lifts_a) * len(lifts_b)
    columns = [graded_target.coordinates(phi(u, v)) for u in lifts_a for v in lifts_b]
    rank_gr = len(graded_target.lifts)
    gr_map = [[columns[s][k] for s in range(width)] for k in range(rank_gr)]
    return WeightRespectReport(True, True, gr_map, [len(lifts_a), len(lifts_b), rank_gr])


@dataclass
class DecompositionTerm(DataClassJsonMixin):
    """One summand Hom(M_i, M_j; X^∨ (x) M) of the pairwise sum formula."""

    pair: List[int]
    copies: int
    rank: int


@dataclass
class DecompositionReport(DataClassJsonMixin):
    """
    Rank of Hom(M_1, ..., M_l; M) against the sum over pairs i < j of rank Hom(M_i, M_j; X_rest^∨ (x) M).

    Args:
        lhs_rank (`int`): rank of the l-fold morphism group.
        rhs_rank (`int`): sum of the pairwise ranks.
        terms (`List[DecompositionTerm]`): the pairwise summands; `copies` is the rank of the weight-0 lattice of the
            other sources.
    """

    lhs_rank: int
    rhs_rank: int
    terms: List[DecompositionTerm] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.lhs_rank == self.rhs_rank


def _require_motive_sources(sources: Sequence[MHS], operation: str) -> None:
    for index, source in enumerate(sources):
        if not is_one_motive_type(source):
            raise SourceMismatchError(f"{operation}: source {index} is not the realization of a 1-motive")


def thmotimes_rank_report(sources: Sequence[MHS], target: MHS) -> DecompositionReport:
    """
    Compare the l-fold morphism group with the pairwise sum formula, where the weight-0 lattice X_ν of each source
    has the rank of its Gr_0.

    Raises:
        SourceMismatchError: if l < 2 or a source is not of 1-motive type.
    """
    if len(sources) < 2:
        raise SourceMismatchError(f"The pairwise decomposition needs at least two sources, got {len(sources)}")
    _require_motive_sources(sources, "thmotimes_rank_report")
    check_contexts(list(sources) + [target])
    lattice_ranks = [source.gr_rank(0) for source in sources]
    lhs = hom_multilinear(sources, target).rank
    terms = []
    for i, j in combinations(range(len(sources)), 2):
        copies = prod(r for k, r in enumerate(lattice_ranks) if k not in (i, j))
        rank_ij = 0
        if copies:
            rank_ij = hom_multilinear([sources[i], sources[j]], tensor_weight0(target, copies)).rank
        terms.append(DecompositionTerm([i, j], copies, rank_ij))
    rhs = sum(term.rank for term in terms)
    if lhs != rhs:
        logger.info(f"Pairwise decomposition: lhs rank {lhs}, rhs rank {rhs}")
    return DecompositionReport(lhs, rhs, terms)


@dataclass
class MultiplicityReport(DataClassJsonMixin):
    """
    Graded ranks of (x) M_j / W_-i against the sum over (i-1)-subsets I of
    (x)_{k ∉ I} X_k (x) ((x)_{j ∈ I} M_j / W_-i).

    Args:
        i (`int`): the weight cut.
        quotient (`Dict[str, int]`): Gr-profile of the quotient.
        sum_formula (`Dict[str, int]`): Gr-profile of the sum.
        predicted (`Dict[str, int]`): multiplicities of Gr_0 and Gr_-1 in the sum, C(l, i-1) and C(l-1, i-2).
        observed_match (`bool`): whether the sum has exactly those multiplicities on Gr_0 and Gr_-1.
    """

    i: int
    quotient: Dict[str, int]
    sum_formula: Dict[str, int]
    predicted: Dict[str, int]
    observed_match: bool


def otimes_multiplicity_report(sources: Sequence[MHS], i: int) -> MultiplicityReport:
    """
    Raises:
        SourceMismatchError: unless 1 <= i <= l + 1 and every source is of 1-motive type.
    """
    l_ = len(sources)
    if l_ < 1 or not 1 <= i <= l_ + 1:
        raise SourceMismatchError(f"Expected 1 <= i <= l + 1 for l = {l_}, got i = {i}")
    _require_motive_sources(sources, "otimes_multiplicity_report")
    context = check_contexts(sources)
    quotient = gr_profile(quotient_by_weight(tensor_many(sources, context), i))
    lattice_ranks = [source.gr_rank(0) for source in sources]
    total = GrProfile()
    for subset in combinations(range(l_), i - 1):
        copies = prod(r for k, r in enumerate(lattice_ranks) if k not in subset)
        if not copies:
            continue
        part = quotient_by_weight(tensor_many([sources[k] for k in subset], context), i)
        total = total + gr_profile(tensor_weight0(part, copies))
    predicted = {0: comb(l_, i - 1), -1: comb(l_ - 1, i - 2) if i >= 2 else 0}
    observed_match = all(total[w] == factor * quotient[w] for w, factor in predicted.items())
    return MultiplicityReport(
        i=i,
        quotient=quotient.as_json(),
        sum_formula=total.as_json(),
        predicted={str(w): factor for w, factor in predicted.items()},
        observed_match=observed_match,
    )

