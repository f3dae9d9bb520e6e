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
""" Property suites run by `biext check`.

Each suite combines generated instances with the motives and maps of the input file and records one entry per
exact check.
"""
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Tuple

from dataclasses_json import DataClassJsonMixin
from sympy import QQ

from ..config import Config
from ..exact.lattice import hnf
from ..exact.scalars import FieldContext
from ..exceptions import BiextError
from ..hodge.mhs import MHS, tate
from ..hodge.profile import gr_profile
from ..hodge.validation import is_one_motive_type
from ..homspace.biext import biext_from_map
from ..homspace.decompose import otimes_multiplicity_report, thmotimes_rank_report, weight_respect_check
from ..homspace.hom import HomLattice, hom_lattice, hom_multilinear
from ..homspace.pairing import adjunction_report, is_unimodular, pairing_matrix, pullback_pairing, weil_pairing
from ..motives.builders import cartier_dual, elliptic, kummer, lattice, tensor_weight0
from ..motives.spec import EllipticSpec
from ..oracle.brute_force import compare_with_oracle
from ..oracle.random_instances import (
    InstanceProfile,
    fixed_instances,
    oracle_instances,
    random_structure,
    suite_motives,
    thmotimes_instances,
)
from ..realize.de_rham import curvature
from ..realize.modn import commute_check, reductions_compatible
from ..utils import logging
from .motive_file import MotiveFile


logger = logging.get_logger(__name__)


@dataclass
class SuiteResult(DataClassJsonMixin):
    """
    Outcome of one property suite.

    Args:
        name (`str`): the suite.
        passed (`bool`): whether every check held.
        checks (`int`): the number of exact checks run.
        failures (`List[str]`): labels of the failing checks.
        details (`Dict[str, Any]`): suite specific figures.
        seconds (`float`): wall time, not part of the deterministic report.
    """

    name: str
    passed: bool = True
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0

    def check(self, condition: bool, label: str) -> bool:
        self.checks += 1
        if not condition:
            self.passed = False
            self.failures.append(label)
            logger.warning(f"[{self.name}] check failed: {label}")
        return bool(condition)

    def report(self) -> Dict[str, Any]:
        document = self.to_dict()
        document.pop("seconds")
        return document


def _file_maps(motive_file: MotiveFile, arity: Optional[int] = None) -> List[Tuple[str, Any, HomLattice]]:
    """Named maps of the file that are morphisms, with their lattices."""
    found = []
    for name in motive_file.maps:
        phi, sources, target = motive_file.map(name)
        if arity is not None and len(sources) != arity:
            continue
        lattice_ = hom_multilinear(sources, target)
        if lattice_.contains(phi):
            found.append((name, phi, lattice_))
    return found


def _file_motives(motive_file: MotiveFile, max_rank: Optional[int] = None) -> List[Tuple[str, MHS]]:
    found = []
    for name in motive_file.motives:
        structure = motive_file.motive(name)
        if max_rank is None or structure.rank <= max_rank:
            found.append((name, structure))
    return found


def oracle_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    instances = [(instance.name, instance.sources, instance.target) for instance in oracle_instances(config)]
    small = _file_motives(motive_file, max_rank=config.max_oracle_unknowns)
    for name_a, a in small:
        for name_b, b in small:
            if a.context == b.context and a.rank * b.rank <= config.max_oracle_unknowns:
                instances.append((f"{name_a} -> {name_b}", (a,), b))
    for name, sources, target in instances:
        report = compare_with_oracle(hom_multilinear(list(sources), target), config.oracle_bound, config)
        result.check(report.equal, f"oracle agrees on {name}")
    # A lattice missing half of End(E) must be caught.
    context = FieldContext()
    full = hom_lattice(elliptic(context.w, context), elliptic(context.w, context))
    rows = [list(row) for row in full.lattice.basis]
    rows[0] = [2 * x for x in rows[0]]
    corrupted = full.with_lattice(hnf(rows, full.lattice.ambient_dim))
    control = compare_with_oracle(corrupted, 1, config)
    result.check(not control.equal, "oracle detects a corrupted lattice")
    result.details = {"instances": len(instances), "bound": config.oracle_bound}


def cm_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    context = FieldContext(1)
    e = elliptic(context.w, context)
    ends = hom_lattice(e, e)
    expected = hnf([[1, 0, 0, 1], [0, 1, -1, 0]], 4)
    result.check(ends.rank == 2, "End(E) has rank 2")
    result.check(ends.lattice == expected, "End(E) is spanned by 1 and J")
    ranks = {"E": ends.rank}
    for name, spec in motive_file.motives.items():
        if isinstance(spec, EllipticSpec):
            structure = motive_file.motive(name)
            rank = hom_lattice(structure, structure).rank
            ranks[name] = rank
            result.check(rank == 2, f"End({name}) has rank 2")
    result.details = {"ranks": ranks}


def _is_skew(gram) -> bool:
    n = len(gram)
    return all(gram[a][b] == -gram[b][a] for a in range(n) for b in range(n))


def weil_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    context = FieldContext(1)
    e = elliptic(context.w, context)
    for name, structure in [("E", e), ("K", kummer(QQ(1, 2), context))] + _file_motives(motive_file):
        if not is_one_motive_type(structure):
            continue
        pairing = weil_pairing(structure)
        result.check(is_unimodular(pairing_matrix(pairing)), f"Weil pairing of {name} is unimodular")
    polarization = hom_lattice(e, cartier_dual(e))
    result.check(polarization.rank == 2, "Hom(E, E*) has rank 2")
    principal = []
    for coords in product((-1, 0, 1), repeat=polarization.rank):
        gram = pairing_matrix(pullback_pairing(polarization.from_coordinates(coords)))
        if is_unimodular(gram) and _is_skew(gram):
            principal.append(list(coords))
    result.check(
        bool(principal), "the pairing pulled back along a self-duality of E is skew-symmetric and non-degenerate"
    )
    for name, phi, lattice_ in _file_maps(motive_file, arity=1):
        (source,) = lattice_.sources
        if is_one_motive_type(source) and lattice_.target == cartier_dual(source):
            form = pullback_pairing(phi)
            result.check(
                hom_multilinear([source, source], tate(1, source.context)).contains(form),
                f"the pairing pulled back along {name} is a morphism",
            )


def adjunction_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    motives = suite_motives(config, config.adjunction_instances, "adjunction")
    count = len(motives)
    for index, a in enumerate(motives):
        b = motives[(index + 1) % count]
        c = motives[(index + 2) % count]
        report = adjunction_report(hom_multilinear([a, b], c))
        result.check(report.ok, f"currying is a bijection on instance {index}")
    for name, h in [(f"#{i}", m) for i, m in enumerate(motives)] + _file_motives(motive_file, max_rank=4):
        unit = hom_multilinear([tate(0, h.context), h], h)
        result.check(unit.rank == hom_lattice(h, h).rank, f"Hom(Z(0), {name}; {name}) = End({name})")
    result.details = {"instances": count}


def _endomorphism_instances(config: Config) -> List[Tuple[str, HomLattice]]:
    lattices = [
        (instance.name, hom_multilinear(list(instance.sources), instance.target)) for instance in fixed_instances()
    ]
    for index, m in enumerate(suite_motives(config, config.adjunction_instances, "adjunction")):
        lattices.append((f"End #{index}", hom_lattice(m, m)))
    return lattices


def modn_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    lattices = _endomorphism_instances(config)
    maps = [(f"{name} basis {i}", phi, lat) for name, lat in lattices for i, phi in enumerate(lat.basis_maps())]
    maps += [(name, phi, lat) for name, phi, lat in _file_maps(motive_file)]
    for label, phi, lat in maps:
        for n in config.moduli:
            result.check(commute_check(phi, lat, n), f"reduction mod {n} commutes for {label}")
        for n in config.moduli:
            for m in (2, 3):
                result.check(reductions_compatible(phi, lat, n, m), f"mod {n * m} -> mod {n} for {label}")
    result.details = {"maps": len(maps), "moduli": list(config.moduli)}


def _bilinear_instances(motive_file: MotiveFile, config: Config) -> List[Tuple[str, HomLattice]]:
    context = FieldContext(1)
    lattices = [
        (instance.name, hom_multilinear(list(instance.sources), instance.target))
        for instance in fixed_instances(context)
        if len(instance.sources) == 2
    ]
    for index, m in enumerate(suite_motives(config, config.adjunction_instances, "bilinear")):
        lattices.append((f"#{index}, #{index}*; Z(1)", hom_multilinear([m, cartier_dual(m)], tate(1, m.context))))
    for name, _, lat in _file_maps(motive_file, arity=2):
        lattices.append((f"lattice of {name}", lat))
    return lattices


def curvature_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    instances = _bilinear_instances(motive_file, config)
    for name, lat in instances:
        context = lat.target.context
        for i, phi in enumerate(lat.basis_maps()):
            report = curvature(biext_from_map(phi, lat))
            result.check(report.ok, f"curvature is minus the class for {name} basis {i}")
            shifted = tuple(
                tuple(x + (j + k + 1) * context.w for k, x in enumerate(row))
                for j, row in enumerate(phi.over_field(context))
            )
            other = curvature(biext_from_map(phi, lat, phi1=shifted))
            result.check(other.upsilon == report.upsilon, f"curvature does not depend on the split for {name} {i}")
    result.details = {"instances": len(instances)}


def weight_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    instances = [
        (name, lat)
        for name, lat in _bilinear_instances(motive_file, config)
        if all(is_one_motive_type(m) for m in list(lat.sources) + [lat.target])
    ]
    for name, lat in instances:
        for i, phi in enumerate(lat.basis_maps()):
            result.check(weight_respect_check(phi, lat).ok, f"weights respected by {name} basis {i}")
    result.details = {"instances": len(instances)}


def thmotimes_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    context = FieldContext(1)
    e = elliptic(context.w, context)
    fixed = thmotimes_rank_report([lattice(1, context), e, e], tate(1, context))
    result.check(fixed.lhs_rank == 2 and fixed.rhs_rank == 2, "Z, E, E; Z(1) has rank 2 on both sides")
    ranks = [[fixed.lhs_rank, fixed.rhs_rank]]
    for index, (sources, target) in enumerate(thmotimes_instances(config)):
        report = thmotimes_rank_report(sources, target)
        ranks.append([report.lhs_rank, report.rhs_rank])
        result.check(report.equal, f"pairwise decomposition holds on instance {index}")
    result.details = {"ranks": ranks}


def otimes_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    context = FieldContext(1)
    kummers = [kummer(QQ(p, 3), context) for p in (1, 2, 4)]
    kummer_report = otimes_multiplicity_report(kummers, 3)
    result.check(kummer_report.observed_match, "Kummer triple: Gr_0 of the sum formula has multiplicity 3")
    result.check(kummer_report.predicted["0"] == 3, "Kummer triple: predicted Gr_0 factor is 3")
    profiles = [InstanceProfile(1, 1, 0, seed=config.seed + i) for i in range(3)]
    mixed = [random_structure(profile) for profile in profiles]
    mixed_report = otimes_multiplicity_report(mixed, 3)
    result.check(mixed_report.observed_match, "elliptic triple: Gr_0 and Gr_-1 multiplicities match")
    result.check(mixed_report.predicted["-1"] == 2, "elliptic triple: predicted Gr_-1 factor is 2")
    result.details = {"kummer": kummer_report.to_dict(), "elliptic": mixed_report.to_dict()}


def copies_suite(motive_file: MotiveFile, config: Config, result: SuiteResult) -> None:
    motives = [(f"#{i}", m) for i, m in enumerate(suite_motives(config, config.adjunction_instances, "copies"))]
    for name, h in motives + _file_motives(motive_file):
        for z in config.copies:
            result.check(
                gr_profile(tensor_weight0(h, z)) == gr_profile(h).scaled(z), f"{z} copies of {name} scale Gr ranks"
            )


SUITES: Dict[str, Callable[[MotiveFile, Config, SuiteResult], None]] = {
    "oracle": oracle_suite,
    "cm": cm_suite,
    "weil": weil_suite,
    "adjunction": adjunction_suite,
    "modn": modn_suite,
    "curvature": curvature_suite,
    "weight": weight_suite,
    "thmotimes": thmotimes_suite,
    "otimes": otimes_suite,
    "copies": copies_suite,
}


def run_suite(name: str, motive_file: MotiveFile, config: Config) -> SuiteResult:
    """Run one suite; an error raised inside it is recorded as a failure."""
    result = SuiteResult(name)
    start = time.perf_counter()
    try:
        SUITES[name](motive_file, config, result)
    except BiextError as error:
        result.check(False, f"{type(error).__name__}: {error}")
    result.seconds = time.perf_counter() - start
    logger.info(f"Suite {name}: {'passed' if result.passed else 'FAILED'} ({result.checks} checks)")
    return result


def run_suites(names: List[str], motive_file: MotiveFile, config: Config) -> List[SuiteResult]:
    return [run_suite(name, motive_file, config) for name in names]
