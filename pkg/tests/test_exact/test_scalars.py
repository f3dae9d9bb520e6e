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

from hypothesis import assume, given
from hypothesis import strategies as st
from sympy import QQ

from biext.exact import FieldContext, KScalar, format_scalar, parse_kscalar
from biext.exact.scalars import as_rational, parse_rational
from biext.exceptions import FieldMismatchError, ScalarParseError


rationals = st.builds(QQ, st.integers(-20, 20), st.integers(1, 9))
scalars = st.builds(lambda re, im: KScalar(re, im, 1), rationals, rationals)


class FieldContextTest(unittest.TestCase):
    def test_w_squares_to_minus_d(self):
        for d in (1, 2, 3, 7):
            w = FieldContext(d).w
            self.assertEqual(w * w, -d)

    def test_rejects_bad_parameters(self):
        for d in (0, -1, 4, 12):
            with self.assertRaises(ScalarParseError):
                FieldContext(d)
        with self.assertRaises(ScalarParseError):
            FieldContext(True)

    def test_check(self):
        FieldContext(2).check(FieldContext(2))
        with self.assertRaises(FieldMismatchError):
            FieldContext(1).check(FieldContext(2))


class KScalarTest(unittest.TestCase):
    def test_mixed_operands(self):
        x = KScalar(QQ(1, 2), QQ(1), 1)
        self.assertEqual(x + 1, KScalar(QQ(3, 2), QQ(1), 1))
        self.assertEqual(2 * x, KScalar(QQ(1), QQ(2), 1))
        self.assertEqual(1 - x, KScalar(QQ(1, 2), QQ(-1), 1))
        self.assertEqual(x * x.conj(), x.norm())

    def test_rational_scalars_compare_with_numbers(self):
        self.assertEqual(KScalar(QQ(3), QQ(0), 5), 3)
        self.assertEqual(KScalar(QQ(3), QQ(0), 5), KScalar(QQ(3), QQ(0), 1))
        self.assertNotEqual(KScalar(QQ(0), QQ(1), 5), KScalar(QQ(0), QQ(1), 1))

    def test_different_fields_do_not_mix(self):
        with self.assertRaises(FieldMismatchError):
            FieldContext(1).w + FieldContext(2).w
        self.assertEqual(FieldContext(2).w * 3, KScalar(QQ(0), QQ(3), 2))

    def test_division_by_zero(self):
        with self.assertRaises(ZeroDivisionError):
            FieldContext().w / 0

    def test_as_rational(self):
        self.assertEqual(as_rational(KScalar(QQ(1, 3), QQ(0), 1)), QQ(1, 3))
        with self.assertRaises(ValueError):
            as_rational(FieldContext().w)
        with self.assertRaises(TypeError):
            as_rational(True)

    @given(scalars, scalars, scalars)
    def test_ring_axioms(self, x, y, z):
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual(x - y, -(y - x))

    @given(scalars, scalars)
    def test_division_inverts_multiplication(self, x, y):
        assume(y)
        self.assertEqual((x / y) * y, x)

    @given(scalars, scalars)
    def test_conjugation_and_norm_are_multiplicative(self, x, y):
        self.assertEqual((x * y).conj(), x.conj() * y.conj())
        self.assertEqual((x * y).norm(), x.norm() * y.norm())

    @given(rationals)
    def test_rational_scalars_hash_alike_in_every_field(self, q):
        self.assertEqual(hash(KScalar(q, QQ(0), 1)), hash(KScalar(q, QQ(0), 3)))


class LiteralTest(unittest.TestCase):
    def test_parse(self):
        context = FieldContext(1)
        self.assertEqual(parse_kscalar("w", context), context.w)
        self.assertEqual(parse_kscalar("-w", context), -context.w)
        self.assertEqual(parse_kscalar("1/2-3*w", context), KScalar(QQ(1, 2), QQ(-3), 1))
        self.assertEqual(parse_kscalar(" 2 / 4 ", context), QQ(1, 2))
        self.assertEqual(parse_kscalar(7, context), 7)
        self.assertEqual(parse_rational("-6/4"), QQ(-3, 2))

    def test_malformed_literals(self):
        context = FieldContext(1)
        for text in ("1/0", "w*2", "1+", "", "i", "1/2w", "--1"):
            with self.assertRaises(ScalarParseError, msg=text):
                parse_kscalar(text, context)
        with self.assertRaises(ScalarParseError):
            parse_rational("w")
        with self.assertRaises(ScalarParseError):
            parse_kscalar(1.5, context)

    def test_format(self):
        self.assertEqual(format_scalar(KScalar(QQ(0), QQ(-1), 1)), "-w")
        self.assertEqual(format_scalar(KScalar(QQ(1, 2), QQ(-3), 1)), "1/2-3*w")
        self.assertEqual(format_scalar(KScalar(QQ(-2), QQ(2, 3), 1)), "-2+2/3*w")
        self.assertEqual(format_scalar(QQ(4, 2)), "2")

    @given(scalars)
    def test_formatted_literals_parse_back(self, x):
        self.assertEqual(parse_kscalar(format_scalar(x), FieldContext(1)), x)
