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

from sympy import QQ

from biext.exact import FieldContext, hnf
from biext.exceptions import FieldMismatchError, NotInLatticeError, ShapeMismatchError, SourceMismatchError
from biext.hodge import tate
from biext.homspace import MultilinearMap, filtration_violations, hom_lattice, hom_multilinear
from biext.motives import cartier_dual, elliptic, kummer, lattice, torus


J = MultilinearMap((2,), 2, ((0, 1), (-1, 0)))
FORM = MultilinearMap((2, 2), 1, ((0, 1, -1, 0),))


class HomLatticeTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)
        self.e = elliptic(self.context.w)
        self.k = kummer(QQ(1, 2))

    def test_endomorphisms_of_a_cm_curve(self):
        ends = hom_lattice(self.e, self.e)
        self.assertEqual(ends.rank, 2)
        self.assertEqual(ends.lattice, hnf([[1, 0, 0, 1], [0, 1, -1, 0]], 4))
        self.assertEqual([phi.to_list() for phi in ends.basis_maps()], [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]])

    def test_every_curve_over_the_field_has_complex_multiplication(self):
        e = elliptic(QQ(1, 3) + 2 * self.context.w)
        ends = hom_lattice(e, e)
        self.assertEqual(ends.rank, 2)
        self.assertTrue(ends.contains(MultilinearMap((2,), 2, ((1, 0), (0, 1)))))
        self.assertFalse(ends.contains(J))
        self.assertTrue(ends.contains(MultilinearMap((2,), 2, ((0, 9), (-37, -6)))))

    def test_tate_structures(self):
        self.assertEqual(hom_lattice(tate(0), tate(1)).rank, 0)
        self.assertEqual(hom_lattice(tate(1), tate(0)).rank, 0)
        self.assertEqual(hom_lattice(tate(1), tate(1)).rank, 1)
        self.assertEqual(hom_lattice(tate(0), tate(0)).rank, 1)

    def test_kummer_motive(self):
        self.assertEqual(hom_lattice(self.k, self.k).lattice, hnf([[1, 0, 0, 1], [0, 0, 1, 2]], 4))
        self.assertEqual(hom_lattice(lattice(1), self.k).lattice, hnf([[2, -1]], 2))
        self.assertEqual(hom_lattice(torus(1), self.k).lattice, hnf([[0, 1]], 2))
        self.assertEqual(hom_lattice(self.k, lattice(1)).lattice, hnf([[1, 0]], 2))

    def test_bilinear_forms(self):
        forms = hom_multilinear([self.e, self.e], tate(1))
        self.assertEqual(forms.rank, 2)
        self.assertEqual(forms.lattice, hnf([[1, 0, 0, 1], [0, 1, -1, 0]], 4))
        self.assertTrue(forms.contains(FORM))
        self.assertEqual(hom_multilinear([self.e, cartier_dual(self.e)], tate(1)).rank, 2)
        self.assertEqual(hom_multilinear([tate(0), self.e], self.e).rank, 2)

    def test_source_checks(self):
        with self.assertRaises(SourceMismatchError):
            hom_multilinear([], tate(1))
        with self.assertRaises(FieldMismatchError):
            hom_lattice(tate(0, FieldContext(1)), tate(0, FieldContext(2)))

    def test_membership(self):
        ends = hom_lattice(self.e, self.e)
        self.assertEqual(ends.coordinates(J), (0, 1))
        self.assertEqual(ends.from_coordinates((2, 3)).to_list(), [[2, 3], [-3, 2]])
        skewed = MultilinearMap((2,), 2, ((1, 1), (0, 1)))
        self.assertFalse(ends.contains(skewed))
        with self.assertRaises(NotInLatticeError):
            ends.coordinates(skewed)
        with self.assertRaises(NotInLatticeError):
            ends.require(skewed)
        with self.assertRaises(ShapeMismatchError):
            ends.contains(FORM)
        with self.assertRaises(ShapeMismatchError):
            ends.from_coordinates((1,))

    def test_filtration_violations(self):
        ends = hom_lattice(self.e, self.e)
        self.assertEqual(filtration_violations(ends, J), [])
        self.assertEqual(filtration_violations(ends, MultilinearMap((2,), 2, ((1, 1), (0, 1)))), ["F^0"])
        dual = hom_lattice(self.k, lattice(1))
        self.assertEqual(filtration_violations(dual, MultilinearMap((2,), 1, ((0, 1),))), ["W_-2"])

    def test_report(self):
        report = hom_multilinear([self.e, self.e], tate(1)).to_report()
        self.assertEqual(report["rank"], 2)
        self.assertEqual(report["source_ranks"], [2, 2])
        self.assertEqual(report["basis"], [[[1, 0, 0, 1]], [[0, 1, -1, 0]]])
