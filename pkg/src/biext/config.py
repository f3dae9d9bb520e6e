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
from dataclasses import dataclass
from typing import List, Optional

from dataclasses_json import DataClassJsonMixin


@dataclass
class Config(DataClassJsonMixin):
    """
    Limits and instance counts used by the oracle and the acceptance suites.

    Args:
        oracle_bound (`int`, *optional*, defaults to `2`):
            Coefficient bound of the brute-force enumeration box.
        max_oracle_bound (`int`, *optional*, defaults to `3`):
            Largest coefficient bound the oracle accepts.
        max_oracle_unknowns (`int`, *optional*, defaults to `9`):
            Largest number of integer unknowns the oracle accepts.
        moduli (`List[int]`, *optional*, defaults to `[2, 3, 4, 5, 12]`):
            Moduli checked by the mod-n comparison suite.
        seed (`int`, *optional*, defaults to `0`):
            Seed of the random instance families.
        oracle_instances (`int`, *optional*, defaults to `20`):
            Number of oracle-sized instances compared against the solver.
        adjunction_instances (`int`, *optional*, defaults to `10`):
            Number of random instances of the adjunction suite.
        thmotimes_instances (`int`, *optional*, defaults to `5`):
            Number of random three-factor decomposition instances.
        copies (`List[int]`, *optional*, defaults to `[0, 1, 3]`):
            Copy counts checked when tensoring with weight-0 motives.
    """

    oracle_bound: Optional[int] = None
    max_oracle_bound: Optional[int] = None
    max_oracle_unknowns: Optional[int] = None
    moduli: Optional[List[int]] = None
    seed: Optional[int] = None
    oracle_instances: Optional[int] = None
    adjunction_instances: Optional[int] = None
    thmotimes_instances: Optional[int] = None
    copies: Optional[List[int]] = None

    def __post_init__(self):
        if self.oracle_bound is None:
            self.oracle_bound = 2
        if self.max_oracle_bound is None:
            self.max_oracle_bound = 3
        if self.max_oracle_unknowns is None:
            self.max_oracle_unknowns = 9
        if self.moduli is None:
            self.moduli = [2, 3, 4, 5, 12]
        if self.seed is None:
            self.seed = 0
        if self.oracle_instances is None:
            self.oracle_instances = 20
        if self.adjunction_instances is None:
            self.adjunction_instances = 10
        if self.thmotimes_instances is None:
            self.thmotimes_instances = 5
        if self.copies is None:
            self.copies = [0, 1, 3]
        if self.oracle_bound > self.max_oracle_bound:
            raise ValueError(f"oracle_bound {self.oracle_bound} exceeds max_oracle_bound {self.max_oracle_bound}")
        if any(n < 2 for n in self.moduli):
            raise ValueError(f"Moduli must be at least 2, got {self.moduli}")
        if self.max_oracle_unknowns < 1:
            raise ValueError(f"max_oracle_unknowns must be positive, got {self.max_oracle_unknowns}")
        counts = {
            "oracle_instances": self.oracle_instances,
            "adjunction_instances": self.adjunction_instances,
            "thmotimes_instances": self.thmotimes_instances,
        }
        for name, count in counts.items():
            if count < 0:
                raise ValueError(f"{name} must be non-negative, got {count}")
