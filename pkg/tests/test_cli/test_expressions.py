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

from biext.cli import builtin_motive_file, evaluate_expression
from biext.cli.expressions import tokenize
from biext.exceptions import MotiveFileError, NotOneMotiveError, UnknownNameError
from biext.hodge import gr_profile


class TokenizeTest(unittest.TestCase):
    def test_tokens(self):
        self.assertEqual(
            tokenize("dual( K) + E*E/2"),
            [
                ("dual", "dual("),
                ("name", "K"),
                ("op", ")"),
                ("op", "+"),
                ("name", "E"),
                ("op", "*"),
                ("name", "E"),
                ("op", "/"),
                ("int", "2"),
            ],
        )

    def test_unexpected_character(self):
        with self.assertRaises(MotiveFileError):
            tokenize("E $ K")


class EvaluateTest(unittest.TestCase):
    def setUp(self):
        self.motive_file = builtin_motive_file()

    def evaluate(self, text):
        return gr_profile(evaluate_expression(text, self.motive_file.motive)).as_json()

    def test_operations(self):
        self.assertEqual(self.evaluate("E*E"), {"-2": 4})
        self.assertEqual(self.evaluate("K/2"), {"0": 1})
        self.assertEqual(self.evaluate("dual(K) + E"), {"0": 1, "-1": 2, "-2": 1})
        self.assertEqual(self.evaluate("(K + L1)*Z1"), {"-2": 2, "-4": 1})

    def test_precedence(self):
        self.assertEqual(self.evaluate("L1 + E*E"), self.evaluate("L1 + (E*E)"))
        self.assertEqual(self.evaluate("K*K/1"), {"0": 1, "-2": 1})
        self.assertEqual(self.evaluate("(K*K)/1"), {"0": 1})

    def test_errors(self):
        for text in ("", "E +", "(E", "E E", "E/", "dual(E"):
            with self.subTest(text):
                with self.assertRaises(MotiveFileError):
                    evaluate_expression(text, self.motive_file.motive)
        with self.assertRaises(UnknownNameError):
            evaluate_expression("X", self.motive_file.motive)
        with self.assertRaises(NotOneMotiveError):
            evaluate_expression("dual(Z1*Z1)", self.motive_file.motive)
