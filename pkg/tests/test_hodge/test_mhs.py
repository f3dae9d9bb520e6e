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

from hypothesis import given, settings
from hypothesis import strategies as st

from biext.config import Config
from biext.exact import FieldContext
from biext.exceptions import FieldMismatchError, InvalidMHSError, NotInLatticeError
from biext.hodge import (
    GrProfile,
    direct_sum,
    gr_profile,
    graded_lattice,
    graded_lattice_basis,
    hodge_numbers,
    internal_hom,
    is_one_motive_type,
    permute_mhs,
    quotient_by_weight,
    tate,
    tensor_many,
    tensor_mhs,
    validate_mhs,
    zero_mhs,
)
from biext.homspace import hom_multilinear
from biext.motives import elliptic, kummer
from biext.oracle import suite_motives


class TateTest(unittest.TestCase):
    def test_tate_structures(self):
        z1 = tate(1)
        self.assertEqual(z1.rank, 1)
        self.assertEqual(z1.weights, (-2,))
        self.assertEqual(z1.hodge_jumps, (-1,))
        self.assertTrue(tate(0).motive_type)
        self.assertFalse(tate(2).motive_type)
        with self.assertRaises(InvalidMHSError):
            tate(-1)

    def test_empty_tensor_is_the_unit(self):
        self.assertEqual(tensor_many([]), tate(0))
        self.assertEqual(tensor_mhs(tate(0), tate(1)), tate(1))


class OperationsTest(unittest.TestCase):
    def setUp(self):
        self.context = FieldContext(1)
        self.e = elliptic(self.context.w, self.context)
        self.k = kummer(1, self.context)

    def test_direct_sum(self):
        total = direct_sum([self.e, tate(1)])
        self.assertEqual(total.rank, 3)
        self.assertEqual(gr_profile(total), GrProfile({-1: 2, -2: 1}))
        self.assertTrue(total.motive_type)
        self.assertEqual(direct_sum([]).rank, 0)
        self.assertEqual(direct_sum([]), zero_mhs())

    def test_direct_sum_needs_one_field(self):
        with self.assertRaises(FieldMismatchError):
            direct_sum([tate(0, FieldContext(1)), tate(0, FieldContext(2))])

    def test_tensor_square_of_an_elliptic_curve(self):
        square = tensor_mhs(self.e, self.e)
        self.assertEqual(square.rank, 4)
        self.assertEqual(gr_profile(square).ranks, {-2: 4})
        self.assertEqual(square.hodge_dims(), {-2: 4, -1: 3, 0: 1})

    def test_internal_hom_shifts_weights(self):
        self.assertEqual(gr_profile(internal_hom(self.e, self.e)).ranks, {0: 4})
        self.assertEqual(gr_profile(internal_hom(self.k, tate(1))).ranks, {0: 1, -2: 1})

    def test_quotient_by_weight(self):
        self.assertEqual(gr_profile(quotient_by_weight(self.k, 2)).ranks, {0: 1})
        self.assertEqual(quotient_by_weight(self.k, 3), self.k)
        self.assertEqual(quotient_by_weight(self.e, 2), self.e)
        self.assertEqual(quotient_by_weight(tensor_mhs(self.e, self.e), 2).rank, 0)
        self.assertEqual(gr_profile(quotient_by_weight(tensor_mhs(self.k, self.e), 2)).ranks, {-1: 2})

    def test_quotient_keeps_the_motive_type(self):
        total = direct_sum([self.k, self.e])
        quotient = quotient_by_weight(total, 2)
        self.assertEqual(gr_profile(quotient).ranks, {0: 1, -1: 2})
        self.assertTrue(quotient.motive_type)
        self.assertTrue(is_one_motive_type(quotient))
        self.assertTrue(validate_mhs(quotient, motive_type=True).ok)
        self.assertFalse(quotient_by_weight(tensor_mhs(self.k, self.e), 2).motive_type)

    def test_permutation(self):
        swapped = permute_mhs(self.k, [1, 0])
        self.assertEqual(swapped.W(-2), ((1, 0),))
        self.assertEqual(gr_profile(swapped), gr_profile(self.k))
        with self.assertRaises(InvalidMHSError):
            permute_mhs(self.k, [0, 0])


class GradedPiecesTest(unittest.TestCase):
    def setUp(self):
        self.k = kummer(1)

    def test_profiles(self):
        profile = GrProfile({0: 1, -1: 0, -2: 3})
        self.assertEqual(profile.ranks, {0: 1, -2: 3})
        self.assertEqual(profile[-1], 0)
        self.assertEqual(profile.total, 4)
        self.assertEqual(profile.scaled(2), GrProfile({0: 2, -2: 6}))
        self.assertEqual(profile + GrProfile({-1: 2}), GrProfile({0: 1, -1: 2, -2: 3}))
        self.assertEqual(list(profile.as_json()), ["0", "-2"])

    def test_graded_lattice(self):
        top = graded_lattice(self.k, 0)
        self.assertEqual(len(top.lifts), 1)
        self.assertEqual(top.coordinates((0, 1)), (0,))
        self.assertIn(top.coordinates((1, 0)), [(1,), (-1,)])
        bottom = graded_lattice(self.k, -2)
        self.assertEqual(bottom.coordinates((0, 3)), (3,))
        with self.assertRaises(NotInLatticeError):
            bottom.coordinates((1, 0))

    def test_graded_lattice_basis(self):
        self.assertIn(graded_lattice_basis(self.k, -2), [((0, 1),), ((0, -1),)])
        self.assertEqual(graded_lattice_basis(self.k, -1), ())
        self.assertEqual(len(graded_lattice_basis(elliptic(FieldContext(d=1).w), -1)), 2)


SMALL_MOTIVES = suite_motives(Config(seed=5), count=6, label="tensor")


class TensorSymmetryTest(unittest.TestCase):
    @settings(max_examples=20)
    @given(st.sampled_from(SMALL_MOTIVES), st.sampled_from(SMALL_MOTIVES))
    def test_tensor_is_commutative(self, a, b):
        ab, ba = tensor_mhs(a, b), tensor_mhs(b, a)
        self.assertEqual(gr_profile(ab), gr_profile(ba))
        self.assertEqual(ab.hodge_dims(), ba.hodge_dims())
        self.assertEqual(hodge_numbers(ab), hodge_numbers(ba))

    @settings(max_examples=20)
    @given(st.sampled_from(SMALL_MOTIVES), st.sampled_from(SMALL_MOTIVES), st.sampled_from(SMALL_MOTIVES))
    def test_tensor_is_associative(self, a, b, c):
        left, right = tensor_mhs(tensor_mhs(a, b), c), tensor_mhs(a, tensor_mhs(b, c))
        self.assertEqual(gr_profile(left), gr_profile(right))
        self.assertEqual(left.hodge_dims(), right.hodge_dims())
        self.assertEqual(gr_profile(left), gr_profile(tensor_many([a, b, c])))

    @settings(max_examples=15)
    @given(
        st.sampled_from(SMALL_MOTIVES),
        st.sampled_from(SMALL_MOTIVES),
        st.sampled_from([tate(1), tate(0)] + SMALL_MOTIVES[:2]),
    )
    def test_bilinear_rank_ignores_the_order_of_sources(self, a, b, target):
        self.assertEqual(hom_multilinear([a, b], target).rank, hom_multilinear([b, a], target).rank)
