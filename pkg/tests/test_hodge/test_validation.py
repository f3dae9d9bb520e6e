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
from biext.exact.linalg import identity
from biext.hodge import hodge_numbers, is_one_motive_type, make_mhs, tate, tensor_mhs, validate_mhs
from biext.motives import elliptic, kummer, lattice, torus


class ValidationTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)

    def test_building_blocks_are_valid(self):
        w = self.context.w
        for structure in (tate(0), tate(1), tate(2), elliptic(w), kummer(1), lattice(2), torus(3)):
            report = validate_mhs(structure)
            self.assertTrue(report.ok, report.names())

    def test_hodge_numbers(self):
        w = self.context.w
        self.assertEqual(hodge_numbers(elliptic(w)), {(0, -1): 1, (-1, 0): 1})
        self.assertEqual(hodge_numbers(tate(1)), {(-1, -1): 1})
        self.assertEqual(hodge_numbers(kummer(1)), {(0, 0): 1, (-1, -1): 1})

    def test_rational_hodge_line_breaks_symmetry(self):
        structure = make_mhs(self.context, 2, [(-1, identity(2))], [(-1, identity(2)), (0, ((1, 0),))])
        report = validate_mhs(structure)
        self.assertFalse(report.ok)
        self.assertEqual(report.names(), ["hodge_symmetry"])
        self.assertEqual(report.violations[0].index, -1)

    def test_weight_filtration_must_be_nested_and_exhaustive(self):
        structure = make_mhs(self.context, 2, [(-2, ((1, 0),)), (-1, ((0, 1),))], [(-1, identity(2))])
        names = validate_mhs(structure).names()
        self.assertIn("weight_nested", names)
        self.assertIn("weight_exhaustive", names)

    def test_weight_filtration_must_be_rational(self):
        w = self.context.w
        structure = make_mhs(self.context, 2, [(-2, ((1, w),)), (0, identity(2))], [(-1, identity(2))])
        self.assertEqual(validate_mhs(structure).names(), ["weight_rational"])

    def test_one_motive_conditions(self):
        self.assertTrue(is_one_motive_type(elliptic(self.context.w)))
        self.assertFalse(is_one_motive_type(tate(2)))
        names = validate_mhs(tate(2), motive_type=True).names()
        self.assertIn("motive_weights", names)
        square = tensor_mhs(elliptic(self.context.w), elliptic(self.context.w))
        self.assertTrue(validate_mhs(square).ok)
        self.assertFalse(is_one_motive_type(square))

    def test_reports_serialize(self):
        structure = make_mhs(self.context, 2, [(-1, identity(2))], [(-1, identity(2)), (0, ((1, 0),))])
        document = validate_mhs(structure).to_dict()
        self.assertFalse(document["ok"])
        self.assertEqual(document["violations"][0]["invariant"], "hodge_symmetry")
