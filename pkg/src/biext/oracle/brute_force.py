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
""" Exhaustive enumeration of small morphism groups.

Every integer matrix with entries in [-bound, bound] is tested against the filtration inclusions f(W_w) ⊆ W_w and
f(F^p) ⊆ F^p directly, as integer linear conditions on the entries. No kernel or normal form is computed, so the
result is an independent check of the lattice solver.
"""
from dataclasses import dataclass, field
from itertools import product
from math import lcm
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np
from dataclasses_json import DataClassJsonMixin

from ..config import Config
from ..exact.linalg import Matrix, annihilator
from ..exact.scalars import KScalar, as_rational
from ..exceptions import OracleSizeError
from ..hodge.mhs import MHS
from ..homspace.hom import HomLattice
from ..homspace.maps import MultilinearMap
from ..utils import logging


logger = logging.get_logger(__name__)

# Coordinates enumerated at once; the remaining ones are looped over.
VECTORISED_COORDINATES = 6
# Entries of a report listing mismatching points.
MAX_LISTED_POINTS = 10


def _check_size(unknowns: int, bound: int, config: Config) -> None:
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise OracleSizeError(f"The coefficient bound must be a non-negative integer, got {bound!r}")
    if unknowns > config.max_oracle_unknowns:
        raise OracleSizeError(f"{unknowns} unknowns exceed the oracle limit of {config.max_oracle_unknowns}")
    if bound > config.max_oracle_bound:
        raise OracleSizeError(f"Coefficient bound {bound} exceeds the oracle limit of {config.max_oracle_bound}")


def box_chunks(n: int, bound: int) -> Iterator[np.ndarray]:
    """
    All points of [-bound, bound]^n in lexicographic order, as `int64` arrays of at most (2 bound + 1)^6 rows.
    """
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    tail_dim = min(n, VECTORISED_COORDINATES)
    if tail_dim == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    grids = np.meshgrid(*([values] * tail_dim), indexing="ij")
    tail = np.stack(grids, axis=-1).reshape(-1, tail_dim)
    for prefix in product(values.tolist(), repeat=n - tail_dim):
        head = np.tile(np.asarray(prefix, dtype=np.int64), (tail.shape[0], 1))
        yield np.hstack([head, tail])


def _integer_row(row: Tuple) -> Tuple[int, ...]:
    scale = lcm(*(int(x.denominator) for x in row)) if row else 1
    return tuple(int(x.numerator) * (scale // int(x.denominator)) for x in row)


def _inclusion_rows(sources: Matrix, targets: Matrix, rs: int, rt: int) -> List[Tuple[int, ...]]:
    """Integer rows c with c . f = 0 iff f(span(sources)) ⊆ span(targets), f flattened target-major."""
    rows = []
    for eta in annihilator(targets, rt):
        for u in sources:
            entries = [eta[t] * u[s] for t in range(rt) for s in range(rs)]
            real = tuple(x.re if isinstance(x, KScalar) else as_rational(x) for x in entries)
            imag = tuple(x.im if isinstance(x, KScalar) else as_rational(0) for x in entries)
            for part in (real, imag):
                if any(part):
                    rows.append(_integer_row(part))
    return rows


def morphism_conditions(a: MHS, b: MHS) -> np.ndarray:
    """The integer conditions on the entries of a map A -> B, one row per condition."""
    rs, rt = a.rank, b.rank
    rows = []
    for w in a.weight_jumps:
        rows.extend(_inclusion_rows(a.W(w), b.W(w), rs, rt))
    for p in a.hodge_jumps:
        rows.extend(_inclusion_rows(a.F(p), b.F(p), rs, rt))
    if not rows:
        return np.zeros((0, rs * rt), dtype=np.int64)
    largest = max(abs(x) for row in rows for x in row)
    dtype = np.int64 if largest * rs * rt * 3 < 2**62 else object
    return np.asarray(rows, dtype=dtype)


def _satisfying(points: np.ndarray, conditions: np.ndarray) -> np.ndarray:
    if conditions.shape[0] == 0:
        return np.ones(points.shape[0], dtype=bool)
    values = points.astype(conditions.dtype) @ conditions.T
    return ~np.any(values != 0, axis=1)


def brute_force_hom(a: MHS, b: MHS, bound: int, config: Optional[Config] = None) -> List[MultilinearMap]:
    """
    Every morphism A -> B with coefficients in [-bound, bound], by exhaustive enumeration.

    Args:
        a (`MHS`):
            The source structure.
        b (`MHS`):
            The target structure.
        bound (`int`):
            The coefficient bound.
        config (`Config`, *optional*):
            Supplies the size limits.

    Raises:
        OracleSizeError: if rank A · rank B or the bound exceeds the configured limits.

    Examples:

    ```python
    >>> from biext.hodge import tate
    >>> [phi.to_list() for phi in brute_force_hom(tate(1), tate(1), 1)]
    [[[-1]], [[0]], [[1]]]
    ```
    """
    found = _oracle_points(a, b, bound, config or Config())
    return [MultilinearMap.from_flat((a.rank,), b.rank, point) for point in sorted(found)]


def _oracle_points(a: MHS, b: MHS, bound: int, config: Config) -> Set[Tuple[int, ...]]:
    a.context.check(b.context)
    n = a.rank * b.rank
    _check_size(n, bound, config)
    conditions = morphism_conditions(a, b)
    found = set()
    for chunk in box_chunks(n, bound):
        found.update(map(tuple, chunk[_satisfying(chunk, conditions)].tolist()))
    logger.debug(f"Brute force over [-{bound}, {bound}]^{n} with {conditions.shape[0]} conditions: {len(found)} maps")
    return found


def lattice_box_points(lattice: HomLattice, bound: int, config: Optional[Config] = None) -> Set[Tuple[int, ...]]:
    """Flattened points of a Hom lattice with coefficients in [-bound, bound]."""
    config = config or Config()
    n = lattice.lattice.ambient_dim
    _check_size(n, bound, config)
    points = set()
    for chunk in box_chunks(n, bound):
        points.update(map(tuple, chunk[lattice.lattice.contains_many(chunk)].tolist()))
    return points


@dataclass
class OracleReport(DataClassJsonMixin):
    """
    Comparison of a solver lattice with exhaustive enumeration on a box.

    Args:
        bound (`int`): the coefficient bound.
        unknowns (`int`): the number of integer unknowns.
        lattice_rank (`int`): rank of the solver lattice.
        oracle_points (`int`): number of morphisms found by enumeration.
        lattice_points (`int`): number of lattice points in the box.
        equal (`bool`): whether both sets agree.
        only_oracle (`List[List[int]]`): some morphisms missing from the lattice.
        only_lattice (`List[List[int]]`): some lattice points that are not morphisms.
    """

    bound: int
    unknowns: int
    lattice_rank: int
    oracle_points: int
    lattice_points: int
    equal: bool
    only_oracle: List[List[int]] = field(default_factory=list)
    only_lattice: List[List[int]] = field(default_factory=list)


def compare_with_oracle(lattice: HomLattice, bound: int, config: Optional[Config] = None) -> OracleReport:
    """
    Check that the box points of `lattice` are exactly the morphisms found by `brute_force_hom` on the tensor
    product of its sources.

    Raises:
        OracleSizeError: if the instance is too large for enumeration.
    """
    config = config or Config()
    oracle = _oracle_points(lattice.tensor_product(), lattice.target, bound, config)
    points = lattice_box_points(lattice, bound, config)
    only_oracle = sorted(oracle - points)
    only_lattice = sorted(points - oracle)
    equal = not only_oracle and not only_lattice
    if not equal:
        logger.warning(
            f"Oracle mismatch at bound {bound}: {len(only_oracle)} morphisms outside the lattice, "
            f"{len(only_lattice)} lattice points that are not morphisms"
        )
    return OracleReport(
        bound=bound,
        unknowns=lattice.lattice.ambient_dim,
        lattice_rank=lattice.rank,
        oracle_points=len(oracle),
        lattice_points=len(points),
        equal=equal,
        only_oracle=[list(p) for p in only_oracle[:MAX_LISTED_POINTS]],
        only_lattice=[list(p) for p in only_lattice[:MAX_LISTED_POINTS]],
    )
