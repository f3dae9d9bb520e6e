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
from .builders import (
    PeriodPresentation,
    build_from_periods,
    cartier_dual,
    elliptic,
    kummer,
    lattice,
    period_mhs,
    require_one_motive,
    tensor_weight0,
    torus,
)
from .spec import (
    DualSpec,
    EllipticSpec,
    KummerSpec,
    LatticeSpec,
    MotiveSpec,
    PeriodsSpec,
    RefSpec,
    SumSpec,
    TateSpec,
    TorusSpec,
    build_motive,
    motive_spec_from_json,
)
