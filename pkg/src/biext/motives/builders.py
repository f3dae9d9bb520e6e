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
""" Hodge realizations of 1-motives from their periods.

The lattice of a 1-motive [X -> G] with G an extension of a product of elliptic curves A by a torus Y(1) has the
ordered basis (x_1..x_r, a_1..a_2g, y_1..y_t). The period matrix P sends this lattice to Lie(G) and F^0 is its
kernel.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..exact.linalg import Matrix, identity, kernel, rank
from ..exact.scalars import FieldContext, KScalar, ScalarLike
from ..exceptions import (
    DegenerateModulusError,
    InvalidMHSError,
    NotOneMotiveError,
    RankDeficientPeriodsError,
    ShapeMismatchError,
)
from ..hodge.mhs import MHS, direct_sum, make_mhs, tate
from ..hodge.operations import internal_hom
from ..hodge.validation import is_one_motive_type, validate_mhs
from ..utils import logging


logger = logging.get_logger(__name__)


def _scalar_matrix(context: FieldContext, rows: Sequence[Sequence[ScalarLike]], shape: Tuple[int, int], name: str):
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ShapeMismatchError(f"{name} must have shape {shape[0]}x{shape[1]}")
    return tuple(tuple(context.scalar(x) for x in row) for row in rows)


@dataclass(frozen=True)
class PeriodPresentation:
    """
    Generators-and-periods description of a 1-motive.

    Args:
        context (`FieldContext`):
            The field holding every period.
        lattice_rank (`int`):
            Rank r of X.
        moduli (`Tuple[KScalar, ...]`):
            The moduli τ_j of the elliptic factors of A, g of them.
        torus_rank (`int`):
            Rank t of Y.
        abelian_lifts (`Matrix`, *optional*):
            g x r Lie coordinates of u(x_i) on the abelian part, in units where E_τ has periods (τ, 1).
        torus_lifts (`Matrix`, *optional*):
            t x r Lie coordinates of u(x_i) on the torus, in units of 2πi.
        extension_periods (`Matrix`, *optional*):
            t x 2g torus coordinates of the homology basis of A, encoding G as an extension of A by Y(1).
    """

    context: FieldContext
    lattice_rank: int = 0
    moduli: Tuple[KScalar, ...] = ()
    torus_rank: int = 0
    abelian_lifts: Optional[Matrix] = None
    torus_lifts: Optional[Matrix] = None
    extension_periods: Optional[Matrix] = None

    def __post_init__(self):
        if self.lattice_rank < 0 or self.torus_rank < 0:
            raise ShapeMismatchError("Lattice and torus ranks must be non-negative")
        ctx = self.context
        r, g, t = self.lattice_rank, len(self.moduli), self.torus_rank
        object.__setattr__(self, "moduli", tuple(ctx.scalar(tau) for tau in self.moduli))

        def _matrix(name: str, shape: Tuple[int, int]) -> Matrix:
            value = getattr(self, name)
            if value is None:
                return tuple(tuple(ctx.scalar(0) for _ in range(shape[1])) for _ in range(shape[0]))
            return _scalar_matrix(ctx, value, shape, name)

        object.__setattr__(self, "abelian_lifts", _matrix("abelian_lifts", (g, r)))
        object.__setattr__(self, "torus_lifts", _matrix("torus_lifts", (t, r)))
        object.__setattr__(self, "extension_periods", _matrix("extension_periods", (t, 2 * g)))

    @property
    def genus(self) -> int:
        return len(self.moduli)

    @property
    def rank(self) -> int:
        return self.lattice_rank + 2 * self.genus + self.torus_rank

    def period_matrix(self) -> Matrix:
        """P of shape (g+t) x (r+2g+t): abelian rows [lifts | (τ_j, 1) | 0], torus rows [lifts | ext | 1]."""
        r, g, t = self.lattice_rank, self.genus, self.torus_rank
        zero, one = self.context.scalar(0), self.context.scalar(1)
        rows = []
        for j, tau in enumerate(self.moduli):
            block = [zero] * (2 * g)
            block[2 * j], block[2 * j + 1] = tau, one
            rows.append(tuple(self.abelian_lifts[j]) + tuple(block) + (zero,) * t)
        for k in range(t):
            torus = [zero] * t
            torus[k] = one
            rows.append(tuple(self.torus_lifts[k]) + tuple(self.extension_periods[k]) + tuple(torus))
        return tuple(rows)


def period_mhs(presentation: PeriodPresentation) -> MHS:
    """Assemble the flagged structure of a presentation without checking it."""
    r, g, t = presentation.lattice_rank, presentation.genus, presentation.torus_rank
    n = presentation.rank
    full = identity(n)
    return make_mhs(
        presentation.context,
        n,
        [(-2, full[r + 2 * g :]), (-1, full[r:]), (0, full)],
        [(-1, full), (0, kernel(presentation.period_matrix(), n))],
        motive_type=True,
    )


def build_from_periods(presentation: PeriodPresentation) -> MHS:
    """
    The Hodge realization of a 1-motive: W_-2 = span(y), W_-1 = span(a, y), F^0 = ker P, F^-1 everything.

    Raises:
        DegenerateModulusError: if some τ_j is rational.
        RankDeficientPeriodsError: if P does not have rank g + t.
    """
    structure = period_mhs(presentation)
    for j, tau in enumerate(presentation.moduli):
        if tau.im == 0:
            raise DegenerateModulusError(
                f"Elliptic modulus τ_{j + 1} = {tau.re} has no w-part", report=validate_mhs(structure)
            )
    rows = presentation.genus + presentation.torus_rank
    if rank(presentation.period_matrix(), presentation.rank) != rows:
        raise RankDeficientPeriodsError(
            f"Period matrix has rank below {rows}", report=validate_mhs(structure)
        )
    report = validate_mhs(structure)
    if not report.ok:
        raise InvalidMHSError(f"Presentation does not define a 1-motive: {report.names()}", report=report)
    logger.debug(
        f"Built 1-motive realization (r, g, t) = ({presentation.lattice_rank}, {presentation.genus}, "
        f"{presentation.torus_rank})"
    )
    return structure


def elliptic(tau: ScalarLike, context: Optional[FieldContext] = None) -> MHS:
    """The elliptic curve with periods (τ, 1): rank 2, pure of weight -1, F^0 = span(1, -τ)."""
    context = context or _context_of(tau)
    return build_from_periods(PeriodPresentation(context, moduli=(tau,)))


def kummer(pi: ScalarLike, context: Optional[FieldContext] = None) -> MHS:
    """The Kummer motive [Z -> G_m] with extension parameter π: F^0 = span(1, -π) in the basis (x, y)."""
    context = context or _context_of(pi)
    return build_from_periods(PeriodPresentation(context, lattice_rank=1, torus_rank=1, torus_lifts=((pi,),)))


def lattice(r: int, context: Optional[FieldContext] = None) -> MHS:
    """Z(0)^r."""
    return build_from_periods(PeriodPresentation(context or FieldContext(), lattice_rank=r))


def torus(t: int, context: Optional[FieldContext] = None) -> MHS:
    """Z(1)^t."""
    return build_from_periods(PeriodPresentation(context or FieldContext(), torus_rank=t))


def _context_of(value: ScalarLike) -> FieldContext:
    if isinstance(value, KScalar):
        return FieldContext(value.d)
    return FieldContext()


def require_one_motive(structure: MHS, operation: str) -> None:
    if not is_one_motive_type(structure):
        raise NotOneMotiveError(f"{operation} needs a structure of 1-motive type")


def cartier_dual(structure: MHS) -> MHS:
    """
    The Cartier dual Hom(H, Z(1)), coordinates being the dual basis.

    Raises:
        NotOneMotiveError: if the input is not of 1-motive type.
    """
    require_one_motive(structure, "cartier_dual")
    return internal_hom(structure, tate(1, structure.context)).with_motive_type(True)


def tensor_weight0(structure: MHS, z: int) -> MHS:
    """Tensor with a weight-0 lattice of rank z: z copies of the structure."""
    if isinstance(z, bool) or not isinstance(z, int) or z < 0:
        raise ShapeMismatchError(f"Number of copies must be a non-negative integer, got {z!r}")
    return direct_sum([structure] * z, context=structure.context).with_motive_type(structure.motive_type or z == 0)
