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
""" Motive files: a field, named motive descriptions and named integer maps, as one JSON document.

```json
{
  "field": {"d": 1},
  "motives": {"E": {"elliptic": "w"}, "Z1": {"tate": 1}},
  "maps": {"form": {"sources": ["E", "E"], "target": "Z1", "coefficients": [[0, 1, -1, 0]]}}
}
```
"""
import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from dataclasses_json import DataClassJsonMixin

from ..exact.scalars import FieldContext
from ..exceptions import BiextError, MotiveFileError, ShapeMismatchError, UnknownNameError
from ..hodge.mhs import MHS
from ..homspace.maps import MultilinearMap
from ..motives.spec import MotiveSpec, build_motive, motive_spec_from_json
from ..utils import logging


logger = logging.get_logger(__name__)

TOP_LEVEL_KEYS = ("field", "motives", "maps")


@dataclass
class MapFixture(DataClassJsonMixin):
    """
    A named integer map between motives of the file.

    Args:
        sources (`List[str]`): names of the source motives.
        target (`str`): name of the target motive.
        coefficients (`List[List[int]]`): the target-major coefficient matrix.
    """

    sources: List[str]
    target: str
    coefficients: List[List[int]]


def canonical_json(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def _unique_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result = {}
    for key, value in pairs:
        if key in result:
            raise MotiveFileError(f"Duplicate key '{key}'")
        result[key] = value
    return result


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MotiveFileError(f"{where}: expected an integer, got {value!r}")
    return value


def _map_fixture(name: str, value: Any) -> MapFixture:
    if not isinstance(value, dict) or set(value) != {"sources", "target", "coefficients"}:
        raise MotiveFileError(f"Map '{name}' needs exactly the keys 'sources', 'target' and 'coefficients'")
    sources, target, coefficients = value["sources"], value["target"], value["coefficients"]
    if not isinstance(sources, list) or not sources or not all(isinstance(s, str) for s in sources):
        raise MotiveFileError(f"Map '{name}': 'sources' must be a non-empty list of names")
    if not isinstance(target, str):
        raise MotiveFileError(f"Map '{name}': 'target' must be a name")
    if not isinstance(coefficients, list) or not all(isinstance(row, list) for row in coefficients):
        raise MotiveFileError(f"Map '{name}': 'coefficients' must be a list of rows")
    rows = [[_integer(x, f"map '{name}'") for x in row] for row in coefficients]
    return MapFixture(list(sources), target, rows)


@dataclass
class MotiveFile:
    """
    A parsed motive file.

    Args:
        context (`FieldContext`):
            The field every scalar of the file lives in.
        motives (`Dict[str, MotiveSpec]`):
            Named motive descriptions, in file order.
        maps (`Dict[str, MapFixture]`, *optional*):
            Named integer maps.
        digest (`str`, *optional*):
            SHA-256 of the bytes the file was read from.
    """

    context: FieldContext
    motives: Dict[str, MotiveSpec]
    maps: Dict[str, MapFixture] = field(default_factory=dict)
    digest: Optional[str] = None
    _built: Dict[str, MHS] = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_text(cls, text: str) -> "MotiveFile":
        """
        Raises:
            MotiveFileError: on malformed JSON or a malformed document.
            ScalarParseError: on a malformed scalar literal.
        """
        try:
            document = json.loads(text, object_pairs_hook=_unique_keys)
        except json.JSONDecodeError as error:
            raise MotiveFileError(f"Not a JSON document: {error}") from error
        motive_file = cls.from_dict(document)
        motive_file.digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        return motive_file

    @classmethod
    def from_path(cls, path: str) -> "MotiveFile":
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except (OSError, UnicodeDecodeError) as error:
            raise MotiveFileError(f"Cannot read {path}: {error}") from error
        return cls.from_text(text)

    @classmethod
    def from_dict(cls, document: Any) -> "MotiveFile":
        if not isinstance(document, dict):
            raise MotiveFileError("A motive file is a JSON object")
        unknown = set(document) - set(TOP_LEVEL_KEYS)
        if unknown:
            raise MotiveFileError(f"Unknown top-level keys {sorted(unknown)}")
        field_doc = document.get("field", {"d": 1})
        if not isinstance(field_doc, dict) or set(field_doc) - {"d"}:
            raise MotiveFileError(f"'field' must be an object {{\"d\": <int>}}, got {field_doc!r}")
        context = FieldContext(_integer(field_doc.get("d", 1), "field"))
        motives_doc = document.get("motives", {})
        maps_doc = document.get("maps", {})
        if not isinstance(motives_doc, dict) or not isinstance(maps_doc, dict):
            raise MotiveFileError("'motives' and 'maps' must be objects")
        shared = set(motives_doc) & set(maps_doc)
        if shared:
            raise MotiveFileError(f"Names used for both a motive and a map: {sorted(shared)}")
        motives = {name: motive_spec_from_json(node, context) for name, node in motives_doc.items()}
        maps = {name: _map_fixture(name, value) for name, value in maps_doc.items()}
        for name, spec in motives.items():
            for ref in spec.references():
                if ref not in motives:
                    raise UnknownNameError(f"Motive '{name}' refers to unknown motive '{ref}'")
        for name, fixture in maps.items():
            for ref in list(fixture.sources) + [fixture.target]:
                if ref not in motives:
                    raise UnknownNameError(f"Map '{name}' refers to unknown motive '{ref}'")
        return cls(context, motives, maps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.context.to_dict(),
            "motives": {name: spec.to_json_dict() for name, spec in self.motives.items()},
            "maps": {name: fixture.to_dict() for name, fixture in self.maps.items()},
        }

    def to_text(self) -> str:
        return canonical_json(self.to_dict()) + "\n"

    def input_digest(self) -> str:
        """The digest of the bytes read, or of the canonical serialization for files built in memory."""
        return self.digest or hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()

    def motive(self, name: str, _stack: Tuple[str, ...] = ()) -> MHS:
        """
        Build a named motive, resolving references.

        Raises:
            UnknownNameError: if `name` is not defined.
            MotiveFileError: on cyclic references.
        """
        if name in self._built:
            return self._built[name]
        if name not in self.motives:
            raise UnknownNameError(f"Unknown motive '{name}'")
        if name in _stack:
            raise MotiveFileError(f"Cyclic motive references: {' -> '.join(_stack + (name,))}")
        structure = build_motive(self.motives[name], self.context, lambda ref: self.motive(ref, _stack + (name,)))
        self._built[name] = structure
        logger.debug(f"Built motive '{name}' of rank {structure.rank}")
        return structure

    def motives_named(self, names: List[str]) -> List[MHS]:
        return [self.motive(name) for name in names]

    def map(self, name: str) -> Tuple[MultilinearMap, List[MHS], MHS]:
        """
        A named map with its built sources and target.

        Raises:
            UnknownNameError: if `name` is not defined.
            ShapeMismatchError: if the coefficients do not fit the motives.
        """
        if name not in self.maps:
            raise UnknownNameError(f"Unknown map '{name}'")
        fixture = self.maps[name]
        sources = self.motives_named(fixture.sources)
        target = self.motive(fixture.target)
        try:
            phi = MultilinearMap(
                tuple(s.rank for s in sources),
                target.rank,
                tuple(tuple(row) for row in fixture.coefficients),
            )
        except BiextError as error:
            raise ShapeMismatchError(f"Map '{name}': {error}") from error
        return phi, sources, target


BUILTIN_DOCUMENT = {
    "field": {"d": 1},
    "motives": {
        "E": {"elliptic": "w"},
        "Edual": {"dual": {"ref": "E"}},
        "K": {"kummer": "1/2"},
        "L1": {"lattice": 1},
        "Z0": {"tate": 0},
        "Z1": {"tate": 1},
    },
    "maps": {
        "J": {"sources": ["E"], "target": "E", "coefficients": [[0, 1], [-1, 0]]},
        "form": {"sources": ["E", "E"], "target": "Z1", "coefficients": [[0, 1, -1, 0]]},
        "polarization": {"sources": ["E"], "target": "Edual", "coefficients": [[0, -1], [1, 0]]},
    },
}


def builtin_motive_file() -> MotiveFile:
    """The CM elliptic curve E = C / (Z w + Z) over Q(i) and friends."""
    return MotiveFile.from_dict(BUILTIN_DOCUMENT)
