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
from .biext import BiextData, biext_class, biext_from_map, biext_iso, biext_violations, make_biext
from .decompose import (
    ANTISYMMETRIC_LABEL,
    SYMMETRIC_LABEL,
    DecompositionReport,
    DecompositionTerm,
    MultiplicityReport,
    SymmetricSplit,
    WeightRespectReport,
    otimes_multiplicity_report,
    sym_antisym_split,
    symmetric_split_report,
    thmotimes_rank_report,
    weight_respect_check,
)
from .hom import HomLattice, filtration_violations, hom_lattice, hom_multilinear
from .maps import MultilinearMap, identity_map, linear_as_bilinear, swap, symmetrize, unit_map
from .pairing import (
    AdjunctionReport,
    adjoint_check,
    adjunction_report,
    curry,
    curry_adjunction,
    evaluation_map,
    is_unimodular,
    pairing_matrix,
    pullback_pairing,
    transpose,
    uncurry,
    weil_pairing,
)
