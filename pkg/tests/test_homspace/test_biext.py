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

from biext.exact import FieldContext
from biext.exceptions import InvalidBiextensionError, NotInLatticeError, ShapeMismatchError, SourceMismatchError
from biext.hodge import tate
from biext.homspace import (
    MultilinearMap,
    biext_class,
    biext_from_map,
    biext_iso,
    biext_violations,
    hom_lattice,
    hom_multilinear,
    make_biext,
    unit_map,
)
from biext.motives import elliptic


FORM = MultilinearMap((2, 2), 1, ((0, 1, -1, 0),))


class BiextensionTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)
        self.w = self.context.w
        self.e = elliptic(self.w)
        self.forms = hom_multilinear([self.e, self.e], tate(1))

    def shifted(self, phi):
        """φ_1 = Φ_K + a w-multiple, which changes the splitting but not the class."""
        rows = phi.over_field(self.context)
        return tuple(tuple(x + (k + 1) * self.w for k, x in enumerate(row)) for row in rows)

    def test_biextension_of_a_morphism(self):
        b = biext_from_map(FORM, self.forms)
        self.assertEqual(biext_class(b), FORM)
        self.assertTrue(all(x == 0 for row in b.phi2 for x in row))
        self.assertTrue(b.trivializations_agree())
        self.assertEqual(b.to_dict()["lambda"], [[0, 1, -1, 0]])

    def test_class_classifies(self):
        b = biext_from_map(FORM, self.forms)
        other = biext_from_map(FORM, self.forms, phi1=self.shifted(FORM))
        self.assertEqual(biext_class(other), FORM)
        self.assertTrue(other.trivializations_agree())
        self.assertTrue(biext_iso(b, other))
        self.assertFalse(biext_iso(b, biext_from_map(FORM.scaled(2), self.forms)))
        units = hom_multilinear([tate(0), self.e], self.e)
        with self.assertRaises(ShapeMismatchError):
            biext_iso(b, biext_from_map(unit_map(2), units))

    def test_trivializations(self):
        b = biext_from_map(FORM, self.forms)
        self.assertEqual(b.psi1((1, 0), (0, 0), (0, 1)), (1,))
        self.assertEqual(b.psi2((0, 1), (1, 0), (0, 0)), (0,))
        u = (1, -self.w)
        self.assertEqual(b.psi1((0, 0), u, u), (0,))
        with self.assertRaises(NotInLatticeError):
            b.psi1((1, 0), (1, 0), (0, 1))
        with self.assertRaises(NotInLatticeError):
            b.psi1((QQ(1, 2), 0), (0, 0), (0, 1))

    def test_invalid_data(self):
        zero = ((0, 0, 0, 0),)
        half = ((QQ(1, 2), 0, 0, 0),)
        self.assertEqual(biext_violations(self.forms, half, zero), ["class_integral"])
        diagonal = ((1, 0, 0, 0),)
        self.assertEqual(biext_violations(self.forms, diagonal, zero), ["class_morphism", "class_hodge"])
        self.assertEqual(biext_violations(self.forms, ((1, 0),), zero), ["shape"])
        with self.assertRaises(InvalidBiextensionError):
            make_biext(self.forms, diagonal, zero)
        with self.assertRaises(InvalidBiextensionError):
            biext_from_map(FORM, self.forms, phi1=((1, 0),))
        with self.assertRaises(NotInLatticeError):
            biext_from_map(MultilinearMap((2, 2), 1, diagonal), self.forms)
        with self.assertRaises(SourceMismatchError):
            make_biext(hom_lattice(self.e, self.e), diagonal, zero)
