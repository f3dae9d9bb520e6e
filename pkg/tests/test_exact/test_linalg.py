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

from biext.exact import FieldContext, annihilator, contains, intersect, is_subspace, kernel, rank, rref
from biext.exact.linalg import image, is_rational_matrix, kron, mat_vec
from biext.exceptions import FieldMismatchError, ShapeMismatchError


class LinearAlgebraTest(unittest.TestCase):
    def setUp(self):
        self.w = FieldContext(1).w

    def test_rational_rref(self):
        reduced, pivots = rref([[2, 4], [1, 2], [0, 0]], 2)
        self.assertEqual(reduced, ((QQ(1), QQ(2)),))
        self.assertEqual(pivots, (0,))
        self.assertEqual(rref([], 3), ((), ()))

    def test_rank_over_the_field(self):
        w = self.w
        self.assertEqual(rank([[1, w], [w, -1]], 2), 1)
        self.assertEqual(rank([[1, w], [1, -w]], 2), 2)

    def test_kernel_vectors_vanish(self):
        w = self.w
        rows = [[1, w, 0], [0, 1, 1]]
        basis = kernel(rows, 3)
        self.assertEqual(len(basis), 1)
        self.assertEqual(mat_vec(rows, basis[0]), (0, 0))
        self.assertEqual(annihilator([[1, 0, 0]], 3), ((0, 1, 0), (0, 0, 1)))

    def test_subspaces(self):
        w = self.w
        line = [[1, -w]]
        self.assertTrue(contains(line, 2, [w, 1]))
        self.assertFalse(contains(line, 2, [1, w]))
        self.assertTrue(is_subspace(line, [[1, 0], [0, 1]], 2))
        self.assertEqual(intersect([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]], 3), ((0, 1, 0),))
        self.assertEqual(intersect(line, [[1, w]], 2), ())

    def test_image_and_tensors(self):
        self.assertEqual(image([[1, 0], [0, 1]], [[0, 1], [0, 0]], 2), ((1, 0),))
        self.assertEqual(kron((1, 2), (3, 4)), (3, 4, 6, 8))
        self.assertTrue(is_rational_matrix([[QQ(1, 2), 3]]))
        self.assertFalse(is_rational_matrix([[self.w]]))

    def test_shape_and_field_errors(self):
        with self.assertRaises(ShapeMismatchError):
            rank([[1, 2]], 3)
        with self.assertRaises(FieldMismatchError):
            rank([[FieldContext(1).w, FieldContext(2).w]], 2)
