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
from .de_rham import (
    CurvatureReport,
    DeRhamSpace,
    curvature,
    curvature_components,
    curvature_form,
    de_rham,
    de_rham_map,
)
from .modn import (
    FiniteMap,
    FiniteRealization,
    commute_check,
    reduce_map_mod_n,
    reduce_mod_n,
    reductions_compatible,
)
