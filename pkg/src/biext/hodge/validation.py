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
""" Checking the axioms of a mixed Hodge structure."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.linalg import conj_rows, intersect, is_subspace, is_rational_matrix, rank, span_sum
from ..utils import logging
from .mhs import MHS


logger = logging.get_logger(__name__)

ONE_MOTIVE_WEIGHTS = (0, -1, -2)


@dataclass
class Violation(DataClassJsonMixin):
    """
    A failed axiom.

    Args:
        invariant (`str`):
            Name of the failed axiom, e.g. `"hodge_symmetry"`.
        index (`int`, *optional*):
            The weight or Hodge index witnessing the failure.
        detail (`str`, *optional*):
            Human readable explanation.
    """

    invariant: str
    index: Optional[int] = None
    detail: Optional[str] = None


@dataclass
class ValidationReport(DataClassJsonMixin):
    ok: bool = True
    violations: List[Violation] = field(default_factory=list)

    def add(self, invariant: str, index: Optional[int] = None, detail: Optional[str] = None) -> None:
        self.ok = False
        self.violations.append(Violation(invariant, index, detail))

    def names(self) -> List[str]:
        return [v.invariant for v in self.violations]


def graded_hodge_dim(structure: MHS, w: int, p: int) -> int:
    """Dimension of the image of F^p ∩ W_w in Gr_w."""
    n = structure.rank
    below = structure.W(w - 1)
    meet = intersect(structure.F(p), structure.W(w), n)
    return rank(meet + below, n) - len(below)


def _hodge_indices(structure: MHS, w: int) -> range:
    jumps = structure.hodge_jumps
    if not jumps:
        return range(0)
    candidates = list(jumps) + [w + 1 - p for p in jumps]
    return range(min(candidates) - 1, max(candidates) + 2)


def _check_symmetry(structure: MHS, w: int, report: ValidationReport) -> None:
    n = structure.rank
    top = structure.W(w)
    below = structure.W(w - 1)
    graded = len(top) - len(below)
    for p in _hodge_indices(structure, w):
        ours = intersect(structure.F(p), top, n)
        theirs = conj_rows(intersect(structure.F(w + 1 - p), top, n))
        spanned = rank(span_sum(ours, theirs, n) + below, n) - len(below)
        dim_ours = rank(ours + below, n) - len(below)
        dim_theirs = rank(theirs + below, n) - len(below)
        if spanned != graded or dim_ours + dim_theirs != graded:
            report.add(
                "hodge_symmetry",
                w,
                f"on Gr_{w} (rank {graded}): F^{p} has image of dimension {dim_ours}, "
                f"conj(F^{w + 1 - p}) of dimension {dim_theirs}, together spanning {spanned}",
            )
            return


def _check_motive_type(structure: MHS, report: ValidationReport) -> None:
    n = structure.rank
    for w in structure.weights:
        if w not in ONE_MOTIVE_WEIGHTS:
            report.add("motive_weights", w, f"weight {w} outside {{0, -1, -2}}")
    f0 = structure.F(0)
    if rank(f0 + structure.W(-1), n) != n:
        report.add("motive_f0_surjects_gr0", 0, "F^0 does not project onto Gr_0")
    if intersect(f0, structure.W(-2), n):
        report.add("motive_f0_meets_torus", -2, "F^0 meets W_-2")
    expected = structure.gr_rank(0) + structure.gr_rank(-1) / 2
    if len(f0) != expected:
        report.add("motive_f0_dimension", 0, f"dim F^0 = {len(f0)}, expected {expected:g}")
    if len(structure.F(-1)) != n:
        report.add("motive_hodge_range", -1, "F^-1 is not everything")
    if structure.F(1):
        report.add("motive_hodge_range", 1, "F^1 is not zero")


def validate_mhs(structure: MHS, motive_type: Optional[bool] = None) -> ValidationReport:
    """
    Check the axioms of a mixed Hodge structure, and the 1-motive conditions when the structure is flagged.

    Args:
        structure (`MHS`):
            The structure to check.
        motive_type (`bool`, *optional*):
            Overrides the `motive_type` flag of the structure.

    Returns:
        report (`ValidationReport`): `ok` with no violations, or every failed axiom with its witnessing index.
    """
    report = ValidationReport()
    n = structure.rank
    for w, basis in structure.weight_steps:
        if any(len(row) != n for row in basis):
            report.add("shape", w, "weight step of the wrong width")
        elif not is_rational_matrix(basis):
            report.add("weight_rational", w, "W is not defined over Q")
    for p, basis in structure.hodge_steps:
        if any(len(row) != n for row in basis):
            report.add("shape", p, "Hodge step of the wrong width")
    if not report.ok:
        return report

    steps = structure.weight_steps
    for (w0, lower), (w1, upper) in zip(steps, steps[1:]):
        if not is_subspace(lower, upper, n):
            report.add("weight_nested", w1, f"W_{w0} is not contained in W_{w1}")
    if n and (not steps or len(steps[-1][1]) != n):
        report.add("weight_exhaustive", steps[-1][0] if steps else None, "W does not exhaust the lattice")

    steps = structure.hodge_steps
    for (p0, lower), (p1, upper) in zip(steps, steps[1:]):
        if not is_subspace(upper, lower, n):
            report.add("hodge_nested", p1, f"F^{p1} is not contained in F^{p0}")
    if n and (not steps or len(steps[0][1]) != n):
        report.add("hodge_exhaustive", steps[0][0] if steps else None, "F does not exhaust the lattice")

    if report.ok:
        for w in structure.weights:
            _check_symmetry(structure, w, report)

    if structure.motive_type if motive_type is None else motive_type:
        _check_motive_type(structure, report)

    if not report.ok:
        logger.debug(f"MHS of rank {n} fails {report.names()}")
    return report


def is_one_motive_type(structure: MHS) -> bool:
    return structure.motive_type or validate_mhs(structure, motive_type=True).ok


def hodge_numbers(structure: MHS) -> Dict[Tuple[int, int], int]:
    """
    Hodge numbers h^{p,q}, q = w - p, of every graded piece: dim F^p Gr_w - dim F^{p+1} Gr_w.
    """
    numbers = {}
    for w in structure.weights:
        indices = list(_hodge_indices(structure, w))
        for p in indices:
            h = graded_hodge_dim(structure, w, p) - graded_hodge_dim(structure, w, p + 1)
            if h:
                numbers[(p, w - p)] = h
    return numbers
