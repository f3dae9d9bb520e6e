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
""" Symbolic descriptions of 1-motives and their JSON form.

Every node is a one-key JSON object, e.g. `{"elliptic": "w"}`, `{"kummer": "1/2"}`, `{"lattice": 2}`,
`{"sum": [{"tate": 1}, {"ref": "E"}]}`.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar, Dict, List, Optional, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.linalg import Matrix
from ..exact.scalars import FieldContext, KScalar, format_scalar, parse_kscalar
from ..exceptions import BiextError, MotiveFileError, UnknownNameError
from ..hodge.mhs import MHS, direct_sum, tate
from .builders import PeriodPresentation, build_from_periods, cartier_dual, elliptic, kummer, lattice, torus


class MotiveSpec:
    """Base class of the nodes of a motive description."""

    kind: ClassVar[str] = ""

    def to_json_dict(self) -> Dict[str, Any]:
        raise NotImplementedError

    def build(self, context: FieldContext, resolve: Callable[[str], MHS]) -> MHS:
        raise NotImplementedError

    def references(self) -> List[str]:
        return []


@dataclass(frozen=True)
class LatticeSpec(MotiveSpec):
    kind: ClassVar[str] = "lattice"
    rank: int = 1

    def to_json_dict(self):
        return {self.kind: self.rank}

    def build(self, context, resolve):
        return lattice(self.rank, context)


@dataclass(frozen=True)
class TorusSpec(MotiveSpec):
    kind: ClassVar[str] = "torus"
    rank: int = 1

    def to_json_dict(self):
        return {self.kind: self.rank}

    def build(self, context, resolve):
        return torus(self.rank, context)


@dataclass(frozen=True)
class TateSpec(MotiveSpec):
    kind: ClassVar[str] = "tate"
    n: int = 1

    def to_json_dict(self):
        return {self.kind: self.n}

    def build(self, context, resolve):
        return tate(self.n, context)


@dataclass(frozen=True)
class EllipticSpec(MotiveSpec):
    kind: ClassVar[str] = "elliptic"
    tau: Optional[KScalar] = None

    def to_json_dict(self):
        return {self.kind: format_scalar(self.tau)}

    def build(self, context, resolve):
        return elliptic(context.scalar(self.tau), context)


@dataclass(frozen=True)
class KummerSpec(MotiveSpec):
    kind: ClassVar[str] = "kummer"
    pi: Optional[KScalar] = None

    def to_json_dict(self):
        return {self.kind: format_scalar(self.pi)}

    def build(self, context, resolve):
        return kummer(context.scalar(self.pi), context)


@dataclass
class PeriodsDocument(DataClassJsonMixin):
    """JSON layout of a period presentation; scalars are literals."""

    lattice_rank: int = 0
    moduli: List[str] = field(default_factory=list)
    torus_rank: int = 0
    abelian_lifts: Optional[List[List[str]]] = None
    torus_lifts: Optional[List[List[str]]] = None
    extension_periods: Optional[List[List[str]]] = None


def _format_matrix(rows: Matrix) -> List[List[str]]:
    return [[format_scalar(x) for x in row] for row in rows]


@dataclass(frozen=True)
class PeriodsSpec(MotiveSpec):
    kind: ClassVar[str] = "periods"
    presentation: Optional[PeriodPresentation] = None

    def to_json_dict(self):
        p = self.presentation
        document = PeriodsDocument(
            lattice_rank=p.lattice_rank,
            moduli=[format_scalar(tau) for tau in p.moduli],
            torus_rank=p.torus_rank,
            abelian_lifts=_format_matrix(p.abelian_lifts),
            torus_lifts=_format_matrix(p.torus_lifts),
            extension_periods=_format_matrix(p.extension_periods),
        )
        return {self.kind: document.to_dict()}

    def build(self, context, resolve):
        context.check(self.presentation.context)
        return build_from_periods(self.presentation)


@dataclass(frozen=True)
class SumSpec(MotiveSpec):
    kind: ClassVar[str] = "sum"
    parts: Tuple[MotiveSpec, ...] = ()

    def to_json_dict(self):
        return {self.kind: [part.to_json_dict() for part in self.parts]}

    def build(self, context, resolve):
        return direct_sum([part.build(context, resolve) for part in self.parts], context=context)

    def references(self):
        return [name for part in self.parts for name in part.references()]


@dataclass(frozen=True)
class DualSpec(MotiveSpec):
    kind: ClassVar[str] = "dual"
    of: Optional[MotiveSpec] = None

    def to_json_dict(self):
        return {self.kind: self.of.to_json_dict()}

    def build(self, context, resolve):
        return cartier_dual(self.of.build(context, resolve))

    def references(self):
        return self.of.references()


@dataclass(frozen=True)
class RefSpec(MotiveSpec):
    kind: ClassVar[str] = "ref"
    name: str = ""

    def to_json_dict(self):
        return {self.kind: self.name}

    def build(self, context, resolve):
        return resolve(self.name)

    def references(self):
        return [self.name]


def _rank_value(node: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise MotiveFileError(f"'{node}' expects a non-negative integer, got {value!r}")
    return value


def _literal_matrix(value: Optional[List[List[Any]]], context: FieldContext) -> Optional[Matrix]:
    if value is None:
        return None
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise MotiveFileError(f"Expected a list of rows of scalar literals, got {value!r}")
    return tuple(tuple(parse_kscalar(x, context) for x in row) for row in value)


def motive_spec_from_json(node: Any, context: FieldContext) -> MotiveSpec:
    """
    Decode a motive description.

    Args:
        node (`Any`):
            A decoded JSON value: a one-key object naming the kind of node.
        context (`FieldContext`):
            The field every scalar literal is parsed in.

    Raises:
        MotiveFileError: on a malformed node.
        ScalarParseError: on a malformed scalar literal.
    """
    if not isinstance(node, dict) or len(node) != 1:
        raise MotiveFileError(f"A motive is a one-key object, got {node!r}")
    kind, value = next(iter(node.items()))
    if kind == "lattice":
        return LatticeSpec(_rank_value(kind, value))
    if kind == "torus":
        return TorusSpec(_rank_value(kind, value))
    if kind == "tate":
        return TateSpec(_rank_value(kind, value))
    if kind == "elliptic":
        return EllipticSpec(parse_kscalar(value, context))
    if kind == "kummer":
        return KummerSpec(parse_kscalar(value, context))
    if kind == "periods":
        if not isinstance(value, dict):
            raise MotiveFileError(f"'periods' expects an object, got {value!r}")
        unknown = set(value) - set(PeriodsDocument.__dataclass_fields__)
        if unknown:
            raise MotiveFileError(f"Unknown period presentation fields {sorted(unknown)}")
        document = PeriodsDocument.from_dict(value)
        try:
            presentation = PeriodPresentation(
                context,
                lattice_rank=_rank_value("lattice_rank", document.lattice_rank),
                moduli=tuple(parse_kscalar(tau, context) for tau in document.moduli),
                torus_rank=_rank_value("torus_rank", document.torus_rank),
                abelian_lifts=_literal_matrix(document.abelian_lifts, context),
                torus_lifts=_literal_matrix(document.torus_lifts, context),
                extension_periods=_literal_matrix(document.extension_periods, context),
            )
        except (TypeError, ValueError) as error:
            if isinstance(error, BiextError):
                raise
            raise MotiveFileError(f"Malformed period presentation: {error}") from error
        return PeriodsSpec(presentation)
    if kind == "sum":
        if not isinstance(value, list):
            raise MotiveFileError(f"'sum' expects a list, got {value!r}")
        return SumSpec(tuple(motive_spec_from_json(part, context) for part in value))
    if kind == "dual":
        return DualSpec(motive_spec_from_json(value, context))
    if kind == "ref":
        if not isinstance(value, str):
            raise MotiveFileError(f"'ref' expects a name, got {value!r}")
        return RefSpec(value)
    raise MotiveFileError(f"Unknown motive kind '{kind}'")


def build_motive(spec: MotiveSpec, context: FieldContext, resolve: Optional[Callable[[str], MHS]] = None) -> MHS:
    """
    Build the Hodge realization described by `spec`.

    Args:
        spec (`MotiveSpec`):
            The description.
        context (`FieldContext`):
            The field of the computation.
        resolve (`Callable[[str], MHS]`, *optional*):
            Builds named motives referenced by `ref` nodes.
    """

    def _no_names(name: str) -> MHS:
        raise UnknownNameError(f"Unknown motive '{name}'")

    return spec.build(context, resolve or _no_names)