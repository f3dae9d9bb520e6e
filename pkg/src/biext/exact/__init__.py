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
# flake8: noqa
from .lattice import (
    Complement,
    IntLattice,
    complement_projection,
    hnf,
    index_in_saturation,
    integer_kernel,
    saturate,
    smith_invariants,
    solve_integer_constraints,
    unimodular_inverse,
)
from .linalg import (
    Matrix,
    MatrixK,
    MatrixQ,
    Scalar,
    annihilator,
    contains,
    intersect,
    is_subspace,
    kernel,
    rank,
    rational_kernel,
    row_space,
    rref,
    span_sum,
)
from .scalars import (
    FieldContext,
    KScalar,
    Rational,
    as_rational,
    format_scalar,
    parse_kscalar,
    parse_rational,
    to_kscalar,
)
