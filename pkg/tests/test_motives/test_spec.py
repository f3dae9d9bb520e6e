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
import unittest

from biext.exact import FieldContext
from biext.exceptions import MotiveFileError, ScalarParseError, ShapeMismatchError, UnknownNameError
from biext.hodge import gr_profile, tate
from biext.motives import (
    DualSpec,
    EllipticSpec,
    LatticeSpec,
    PeriodsSpec,
    RefSpec,
    SumSpec,
    build_motive,
    elliptic,
    motive_spec_from_json,
)


class MotiveSpecTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)

    def decode(self, node):
        return motive_spec_from_json(node, self.context)

    def test_simple_nodes(self):
        self.assertEqual(self.decode({"lattice": 2}), LatticeSpec(2))
        self.assertEqual(build_motive(self.decode({"tate": 1}), self.context), tate(1))
        spec = self.decode({"elliptic": "w"})
        self.assertIsInstance(spec, EllipticSpec)
        self.assertEqual(build_motive(spec, self.context), elliptic(self.context.w))
        self.assertEqual(spec.to_json_dict(), {"elliptic": "w"})

    def test_periods(self):
        node = {"periods": {"lattice_rank": 1, "moduli": ["w"], "torus_rank": 1, "torus_lifts": [["1/2"]]}}
        spec = self.decode(node)
        self.assertIsInstance(spec, PeriodsSpec)
        structure = build_motive(spec, self.context)
        self.assertEqual(gr_profile(structure).ranks, {0: 1, -1: 2, -2: 1})
        self.assertEqual(spec.to_json_dict()["periods"]["torus_lifts"], [["1/2"]])
        self.assertEqual(self.decode(spec.to_json_dict()), spec)

    def test_composite_nodes(self):
        spec = self.decode({"sum": [{"tate": 1}, {"dual": {"ref": "E"}}]})
        self.assertIsInstance(spec, SumSpec)
        self.assertEqual(spec.references(), ["E"])
        self.assertEqual(spec.parts[1], DualSpec(RefSpec("E")))
        structure = build_motive(spec, self.context, lambda name: elliptic(self.context.w))
        self.assertEqual(gr_profile(structure).ranks, {-1: 2, -2: 1})

    def test_references_need_a_resolver(self):
        with self.assertRaises(UnknownNameError):
            build_motive(self.decode({"ref": "E"}), self.context)

    def test_malformed_nodes(self):
        for node in (
            {"lattice": -1},
            {"lattice": True},
            {"lattice": 1, "torus": 1},
            {"klein": 1},
            {"sum": {"tate": 1}},
            {"periods": {"genus": 1}},
            {"ref": 3},
            [],
        ):
            with self.assertRaises(MotiveFileError, msg=str(node)):
                self.decode(node)
        with self.assertRaises(ScalarParseError):
            self.decode({"elliptic": "x"})
        with self.assertRaises(ShapeMismatchError):
            self.decode({"periods": {"lattice_rank": 1, "torus_rank": 1, "torus_lifts": [["1", "2"]]}})
