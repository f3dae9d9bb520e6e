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
""" Mixed Hodge structures with an integral lattice Z^r."""
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exact.lattice import IntLattice, integer_kernel
from ..exact.linalg import Matrix, annihilator, block_embed, identity, row_space
from ..exact.scalars import FieldContext
from ..exceptions import InvalidMHSError


Steps = Tuple[Tuple[int, Matrix], ...]


def canonical_weight_steps(rank_: int, steps: Iterable[Tuple[int, Sequence]]) -> Steps:
    """
    Keep the increasing filtration only where it jumps.

    `steps` gives W_w for some indices w; between given indices W is constant and below the smallest it is zero.
    """
    kept = []
    previous: Matrix = ()
    for w, rows in sorted(steps, key=lambda item: item[0]):
        basis = row_space(rows, rank_)
        if basis != previous:
            kept.append((w, basis))
            previous = basis
    return tuple(kept)


def canonical_hodge_steps(rank_: int, steps: Iterable[Tuple[int, Sequence]]) -> Steps:
    """
    Keep the decreasing filtration only where it jumps.

    `steps` gives F^p for some indices p; between given indices F takes the value of the next index above and
    above the largest it is zero.
    """
    kept = []
    previous: Matrix = ()
    for p, rows in sorted(steps, key=lambda item: -item[0]):
        basis = row_space(rows, rank_)
        if basis != previous:
            kept.append((p, basis))
            previous = basis
    return tuple(reversed(kept))


@dataclass(frozen=True)
class MHS:
    """
    A mixed Hodge structure on the lattice Z^r.

    Filtrations are stored at their jumps only, as canonical (RREF) bases. Use `make_mhs` to build one from
    arbitrary step data.

    Args:
        context (`FieldContext`):
            The field Q(w) carrying the Hodge filtration.
        rank (`int`):
            Rank r of the lattice.
        weight_steps (`Tuple[Tuple[int, Matrix], ...]`):
            `(w, basis of W_w)` in increasing w, rational bases.
        hodge_steps (`Tuple[Tuple[int, Matrix], ...]`):
            `(p, basis of F^p)` in increasing p, bases over Q(w).
        motive_type (`bool`, *optional*, defaults to `False`):
            Whether the structure is declared to be the realization of a 1-motive. Not part of equality.
    """

    context: FieldContext
    rank: int
    weight_steps: Steps
    hodge_steps: Steps
    motive_type: bool = field(default=False, compare=False)

    def W(self, w: int) -> Matrix:
        """Basis of W_w."""
        current: Matrix = ()
        for index, basis in self.weight_steps:
            if index > w:
                break
            current = basis
        return current

    def F(self, p: int) -> Matrix:
        """Basis of F^p."""
        for index, basis in self.hodge_steps:
            if index >= p:
                return basis
        return ()

    @property
    def weight_jumps(self) -> Tuple[int, ...]:
        return tuple(w for w, _ in self.weight_steps)

    @property
    def hodge_jumps(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.hodge_steps)

    @property
    def weights(self) -> Tuple[int, ...]:
        """Weights w with Gr_w nonzero."""
        return self.weight_jumps

    def gr_rank(self, w: int) -> int:
        return len(self.W(w)) - len(self.W(w - 1))

    def weight_dims(self) -> Dict[int, int]:
        return {w: len(basis) for w, basis in self.weight_steps}

    def hodge_dims(self) -> Dict[int, int]:
        return {p: len(basis) for p, basis in self.hodge_steps}

    def weight_lattice(self, w: int) -> IntLattice:
        """The saturated lattice Z^r ∩ W_w."""
        basis = self.W(w)
        if not basis:
            return IntLattice.zero(self.rank)
        if len(basis) == self.rank:
            return IntLattice.full(self.rank)
        return integer_kernel(annihilator(basis, self.rank), self.rank)

    def with_motive_type(self, flag: bool = True) -> "MHS":
        return replace(self, motive_type=flag)

    def describe(self) -> dict:
        """JSON-safe summary: rank, graded ranks and filtration dimensions."""
        return {
            "rank": self.rank,
            "gr_profile": {str(w): self.gr_rank(w) for w in self.weights},
            "weight_dims": {str(w): d for w, d in self.weight_dims().items()},
            "hodge_dims": {str(p): d for p, d in self.hodge_dims().items()},
            "motive_type": self.motive_type,
        }


def make_mhs(
    context: FieldContext,
    rank_: int,
    weight_steps: Iterable[Tuple[int, Sequence]],
    hodge_steps: Iterable[Tuple[int, Sequence]],
    motive_type: bool = False,
) -> MHS:
    """Build an `MHS` from step data, dropping steps where the filtration does not change."""
    return MHS(
        context=context,
        rank=rank_,
        weight_steps=canonical_weight_steps(rank_, weight_steps),
        hodge_steps=canonical_hodge_steps(rank_, hodge_steps),
        motive_type=motive_type,
    )


def zero_mhs(context: Optional[FieldContext] = None) -> MHS:
    return MHS(context or FieldContext(), 0, (), (), motive_type=True)


def tate(n: int, context: Optional[FieldContext] = None) -> MHS:
    """
    The Tate structure Z(n): rank 1, pure of weight -2n, F^{-n} full and F^{-n+1} zero.

    Args:
        n (`int`):
            A non-negative twist.
        context (`FieldContext`, *optional*):
            Defaults to Q(sqrt(-1)).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidMHSError(f"Tate twists are defined here for integers n >= 0, got {n!r}")
    context = context or FieldContext()
    line = identity(1)
    return MHS(context, 1, ((-2 * n, line),), ((-n, line),), motive_type=n in (0, 1))


def check_contexts(structures: Sequence[MHS]) -> Optional[FieldContext]:
    context = None
    for structure in structures:
        if context is None:
            context = structure.context
        else:
            context.check(structure.context)
    return context


def direct_sum(structures: Sequence[MHS], context: Optional[FieldContext] = None) -> MHS:
    """
    Block-diagonal sum of structures, in the given order.

    Args:
        structures (`Sequence[MHS]`):
            The summands; an empty list gives the rank-0 structure.
        context (`FieldContext`, *optional*):
            The field of the result when `structures` is empty.
    """
    found = check_contexts(structures)
    if found is not None and context is not None:
        found.check(context)
    context = found or context or FieldContext()
    total = sum(s.rank for s in structures)
    offsets = []
    offset = 0
    for s in structures:
        offsets.append(offset)
        offset += s.rank

    def _summed(indices: Iterable[int], lookup) -> List[Tuple[int, Matrix]]:
        steps = []
        for index in sorted(set(indices)):
            rows: List = []
            for s, start in zip(structures, offsets):
                rows.extend(block_embed(lookup(s, index), start, total))
            steps.append((index, tuple(rows)))
        return steps

    weight_steps = _summed((w for s in structures for w in s.weight_jumps), lambda s, w: s.W(w))
    hodge_steps = _summed((p for s in structures for p in s.hodge_jumps), lambda s, p: s.F(p))
    return make_mhs(
        context,
        total,
        weight_steps,
        hodge_steps,
        motive_type=all(s.motive_type for s in structures),
    )


def permute_mhs(structure: MHS, permutation: Sequence[int]) -> MHS:
    """
    Re-index the lattice: new coordinate i is old coordinate `permutation[i]`.
    """
    if sorted(permutation) != list(range(structure.rank)):
        raise InvalidMHSError(f"{list(permutation)} is not a permutation of {structure.rank} coordinates")

    def _move(rows: Matrix) -> Matrix:
        return tuple(tuple(row[permutation[i]] for i in range(structure.rank)) for row in rows)

    return make_mhs(
        structure.context,
        structure.rank,
        [(w, _move(b)) for w, b in structure.weight_steps],
        [(p, _move(b)) for p, b in structure.hodge_steps],
        motive_type=structure.motive_type,
    )