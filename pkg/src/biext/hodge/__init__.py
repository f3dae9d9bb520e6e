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
from .mhs import MHS, check_contexts, direct_sum, make_mhs, permute_mhs, tate, zero_mhs
from .operations import hom_constraints, internal_hom, quotient_by_weight, tensor_many, tensor_mhs
from .profile import GradedLattice, GrProfile, gr_profile, graded_lattice, graded_lattice_basis
from .validation import ValidationReport, Violation, hodge_numbers, is_one_motive_type, validate_mhs
