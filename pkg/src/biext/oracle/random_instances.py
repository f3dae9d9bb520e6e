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
""" Deterministic random 1-motives and the instance families of the property suites."""
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from dataclasses_json import DataClassJsonMixin
from sympy import QQ

from ..config import Config
from ..exact.scalars import FieldContext, KScalar
from ..hodge.mhs import MHS, direct_sum, tate
from ..motives.builders import PeriodPresentation, cartier_dual, elliptic, kummer, lattice, torus
from ..motives.spec import MotiveSpec, PeriodsSpec, build_motive
from ..utils import logging
from .seeding import np_random


logger = logging.get_logger(__name__)

# (lattice rank, elliptic factors, torus rank) of motives of rank at most 3.
SMALL_SHAPES = (
    (1, 0, 0),
    (0, 0, 1),
    (1, 0, 1),
    (0, 1, 0),
    (1, 1, 0),
    (0, 1, 1),
    (2, 0, 1),
    (1, 0, 2),
)


@dataclass
class InstanceProfile(DataClassJsonMixin):
    """
    Shape and randomness of a generated 1-motive.

    Args:
        lattice_rank (`int`, *optional*, defaults to `1`):
            Rank r of the lattice part.
        elliptic (`int`, *optional*, defaults to `0`):
            Number g of elliptic factors.
        torus_rank (`int`, *optional*, defaults to `0`):
            Rank t of the torus part.
        height (`int`, *optional*, defaults to `2`):
            Bound on numerators and denominators of every generated scalar.
        seed (`int`, *optional*, defaults to `0`):
            Seed of the generator.
        d (`int`, *optional*, defaults to `1`):
            The field Q(w), w^2 = -d.
    """

    lattice_rank: int = 1
    elliptic: int = 0
    torus_rank: int = 0
    height: int = 2
    seed: int = 0
    d: int = 1

    @property
    def rank(self) -> int:
        return self.lattice_rank + 2 * self.elliptic + self.torus_rank


def _rational(rng: np.random.RandomState, height: int, nonzero: bool = False):
    numerator = 0
    while numerator == 0:
        numerator = int(rng.randint(-height, height + 1))
        if not nonzero:
            break
    return QQ(numerator, int(rng.randint(1, height + 1)))


def _scalar(rng: np.random.RandomState, height: int, d: int) -> KScalar:
    """A scalar of Q(w), rational about half of the time."""
    real = _rational(rng, height)
    imag = _rational(rng, height) if rng.randint(2) else QQ(0)
    return KScalar(real, imag, d)


def _matrix(rng: np.random.RandomState, rows: int, cols: int, height: int, d: int):
    return tuple(tuple(_scalar(rng, height, d) for _ in range(cols)) for _ in range(rows))


def random_motive(profile: InstanceProfile) -> MotiveSpec:
    """
    A period presentation with the ranks of `profile` and random periods.

    Moduli have a nonzero w-part, so the result always builds to a valid 1-motive. Identical profiles give identical
    descriptions.
    """
    height = max(int(profile.height), 1)
    context = FieldContext(profile.d)
    rng, _ = np_random(profile.seed, f"motive:{profile.lattice_rank}:{profile.elliptic}:{profile.torus_rank}")
    r, g, t = profile.lattice_rank, profile.elliptic, profile.torus_rank
    moduli = tuple(KScalar(_rational(rng, height), _rational(rng, height, nonzero=True), profile.d) for _ in range(g))
    presentation = PeriodPresentation(
        context,
        lattice_rank=r,
        moduli=moduli,
        torus_rank=t,
        abelian_lifts=_matrix(rng, g, r, height, profile.d),
        torus_lifts=_matrix(rng, t, r, height, profile.d),
        extension_periods=_matrix(rng, t, 2 * g, height, profile.d),
    )
    return PeriodsSpec(presentation)


def random_structure(profile: InstanceProfile) -> MHS:
    return build_motive(random_motive(profile), FieldContext(profile.d))


@dataclass(frozen=True)
class HomInstance:
    """A named choice of sources and target."""

    name: str
    sources: Tuple[MHS, ...]
    target: MHS

    @property
    def unknowns(self) -> int:
        total = self.target.rank
        for source in self.sources:
            total *= source.rank
        return total


def fixed_instances(context: Optional[FieldContext] = None) -> List[HomInstance]:
    """Small instances with known morphism groups, all with at most 9 unknowns."""
    context = context or FieldContext()
    w = context.w
    e = elliptic(w, context)
    k = kummer(QQ(1, 2), context)
    z0, z1 = tate(0, context), tate(1, context)
    return [
        HomInstance("Z(1) -> Z(1)", (z1,), z1),
        HomInstance("E -> E", (e,), e),
        HomInstance("Z(0) -> Z(1)", (z0,), z1),
        HomInstance("K -> K", (k,), k),
        HomInstance("Z -> K", (lattice(1, context),), k),
        HomInstance("K -> Z", (k,), lattice(1, context)),
        HomInstance("Z(1) -> K", (torus(1, context),), k),
        HomInstance("Z^2 -> Z^2", (lattice(2, context),), lattice(2, context)),
        HomInstance("Z^3 -> K", (lattice(3, context),), k),
        HomInstance("E -> E + Z(1)", (e,), direct_sum([e, z1], context=context)),
        HomInstance("E -> E(2w)", (e,), elliptic(2 * w, context)),
        HomInstance("K* -> K", (cartier_dual(k),), k),
        HomInstance("E, E; Z(1)", (e, e), z1),
        HomInstance("Z(0), E; E", (z0, e), e),
        HomInstance("K, Z; K", (k, lattice(1, context)), k),
    ]


def _draw(rng: np.random.RandomState, max_rank: int) -> MHS:
    shapes = [shape for shape in SMALL_SHAPES if shape[0] + 2 * shape[1] + shape[2] <= max_rank]
    shape = shapes[rng.randint(len(shapes))]
    return random_structure(InstanceProfile(*shape, seed=int(rng.randint(2**31))))


def oracle_instances(config: Optional[Config] = None) -> List[HomInstance]:
    """
    The fixed instances followed by random instances of small motives, `config.oracle_instances` in all and never
    fewer than the fixed ones. The random instances cycle through endomorphisms, morphisms between two motives and
    bilinear morphisms, each with at most `config.max_oracle_unknowns` unknowns.
    """
    config = config or Config()
    limit = config.max_oracle_unknowns
    instances = fixed_instances()
    rng, _ = np_random(config.seed, "oracle")
    index = 0
    while len(instances) < config.oracle_instances:
        kind = index % 3
        if kind == 0:
            source = _draw(rng, math.isqrt(limit))
            instances.append(HomInstance(f"random End #{index}", (source,), source))
        elif kind == 1:
            source = _draw(rng, limit)
            target = _draw(rng, limit // source.rank)
            instances.append(HomInstance(f"random Hom #{index}", (source,), target))
        else:
            first = _draw(rng, limit)
            second = _draw(rng, limit // first.rank)
            if rng.randint(2):
                target = tate(1, first.context)
            else:
                target = _draw(rng, limit // (first.rank * second.rank))
            instances.append(HomInstance(f"random Bilinear #{index}", (first, second), target))
        index += 1
    logger.debug(f"{len(instances)} oracle instances for seed {config.seed}")
    return instances


def suite_motives(config: Optional[Config] = None, count: Optional[int] = None, label: str = "suite") -> List[MHS]:
    """`count` random small motives, by default `config.adjunction_instances` of them."""
    config = config or Config()
    count = config.adjunction_instances if count is None else count
    rng, _ = np_random(config.seed, label)
    motives = []
    for _ in range(count):
        shape = SMALL_SHAPES[rng.randint(len(SMALL_SHAPES))]
        motives.append(random_structure(InstanceProfile(*shape, seed=int(rng.randint(2**31)))))
    return motives


def thmotimes_instances(config: Optional[Config] = None) -> List[Tuple[List[MHS], MHS]]:
    """
    Random triples of 1-motives with values in Z(1), with a lattice part in the first motive only.
    """
    config = config or Config()
    rng, _ = np_random(config.seed, "thmotimes")
    context = FieldContext()
    instances = []
    for _ in range(config.thmotimes_instances):
        first = (int(rng.randint(1, 3)), int(rng.randint(2)), int(rng.randint(2)))
        sources = [random_structure(InstanceProfile(*first, seed=int(rng.randint(2**31))))]
        for _ in range(2):
            g = int(rng.randint(2))
            t = 1 - g if rng.randint(2) else 1
            sources.append(random_structure(InstanceProfile(0, g, t, seed=int(rng.randint(2**31)))))
        instances.append((sources, tate(1, context)))
    return instances
