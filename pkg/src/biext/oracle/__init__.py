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
from .brute_force import (
    OracleReport,
    box_chunks,
    brute_force_hom,
    compare_with_oracle,
    lattice_box_points,
    morphism_conditions,
)
from .random_instances import (
    HomInstance,
    InstanceProfile,
    fixed_instances,
    oracle_instances,
    random_motive,
    random_structure,
    suite_motives,
    thmotimes_instances,
)
from .seeding import create_seed, hash_seed, np_random
