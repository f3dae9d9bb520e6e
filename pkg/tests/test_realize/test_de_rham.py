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
from biext.exceptions import NotInLatticeError
from biext.hodge import tate
from biext.homspace import MultilinearMap, biext_from_map, hom_multilinear
from biext.motives import elliptic
from biext.realize import curvature, curvature_components, curvature_form, de_rham, de_rham_map


FORM = MultilinearMap((2, 2), 1, ((0, 1, -1, 0),))


class DeRhamTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)
        self.e = elliptic(self.context.w)
        self.forms = hom_multilinear([self.e, self.e], tate(1))

    def test_space(self):
        space = de_rham(self.e)
        self.assertEqual(space.rank, 2)
        self.assertEqual(len(space.F(0)), 1)
        self.assertEqual(space.F(1), ())

    def test_map(self):
        self.assertEqual(de_rham_map(FORM, self.forms), FORM.over_field(self.context))
        with self.assertRaises(NotInLatticeError):
            de_rham_map(MultilinearMap((2, 2), 1, ((1, 0, 0, 0),)), self.forms)


class CurvatureTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)
        self.w = self.context.w
        self.e = elliptic(self.w)
        self.forms = hom_multilinear([self.e, self.e], tate(1))

    def test_form(self):
        report = curvature(biext_from_map(FORM, self.forms))
        self.assertEqual(report.upsilon, [["0", "-1", "1", "0"]])
        self.assertEqual(report.gamma2, [["0", "0", "0", "0"]])
        self.assertTrue(report.identity_holds)
        self.assertTrue(report.decomposition_holds)
        self.assertTrue(report.ok)

    def test_independent_of_splitting(self):
        rows = FORM.over_field(self.context)
        phi1 = tuple(tuple(x + (k + 1) * self.w for k, x in enumerate(row)) for row in rows)
        b = biext_from_map(FORM, self.forms, phi1=phi1)
        _, _, upsilon = curvature_components(b)
        self.assertEqual(upsilon, tuple(tuple(-x for x in row) for row in rows))
        self.assertTrue(curvature(b).ok)

    def test_form_vanishes_on_equal_points(self):
        gamma = tuple(tuple(-x for x in row) for row in FORM.over_field(self.context))
        zero = tuple(tuple(self.context.scalar(0) for _ in row) for row in gamma)
        point = ((1, 2), (3, -1))
        self.assertEqual(curvature_form(gamma, zero, point, point), (self.context.scalar(0),))
