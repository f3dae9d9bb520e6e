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
import hashlib
import json
import unittest

from biext.cli import BUILTIN_DOCUMENT, MotiveFile, builtin_motive_file
from biext.exceptions import MotiveFileError, ScalarParseError, ShapeMismatchError, UnknownNameError


class MotiveFileTest(unittest.TestCase):
    def test_builtin(self):
        motive_file = builtin_motive_file()
        self.assertEqual(motive_file.context.d, 1)
        self.assertEqual(motive_file.motive("E").rank, 2)
        self.assertEqual(motive_file.motive("Edual").rank, 2)
        self.assertIs(motive_file.motive("E"), motive_file.motive("E"))
        phi, sources, target = motive_file.map("form")
        self.assertEqual(phi.source_ranks, (2, 2))
        self.assertEqual(target.rank, 1)
        self.assertEqual(len(sources), 2)

    def test_text_round_trip(self):
        motive_file = builtin_motive_file()
        text = motive_file.to_text()
        parsed = MotiveFile.from_text(text)
        self.assertEqual(parsed.to_dict(), motive_file.to_dict())
        self.assertEqual(parsed.input_digest(), hashlib.sha256(text.encode("utf-8")).hexdigest())
        self.assertEqual(parsed.input_digest(), motive_file.input_digest())

    def test_digest_follows_the_bytes(self):
        text = json.dumps(BUILTIN_DOCUMENT)
        self.assertEqual(MotiveFile.from_text(text).input_digest(), hashlib.sha256(text.encode("utf-8")).hexdigest())
        self.assertNotEqual(MotiveFile.from_text(text).input_digest(), MotiveFile.from_text(text + " ").input_digest())

    def test_malformed_documents(self):
        bad = [
            "{",
            "[]",
            '{"motives": {"A": {"tate": 0}, "A": {"tate": 1}}}',
            '{"motives": {}, "extra": 1}',
            '{"field": {"d": "one"}}',
            '{"motives": {"A": {"tate": 0}}, "maps": {"A": {"sources": ["A"], "target": "A", "coefficients": []}}}',
            '{"motives": {"A": {"tate": 0}}, "maps": {"f": {"sources": ["A"], "target": "A"}}}',
            '{"motives": {"A": {"tate": 0}}, "maps": {"f": {"sources": ["A"], "target": "A", "coefficients": 1}}}',
            '{"motives": {"A": {"tate": 0}}, "maps": {"f": {"sources": [], "target": "A", "coefficients": [[1]]}}}',
            '{"motives": {"A": {"tate": 0}}, '
            '"maps": {"f": {"sources": ["A"], "target": "A", "coefficients": [[0.5]]}}}',
        ]
        for text in bad:
            with self.subTest(text):
                with self.assertRaises(MotiveFileError):
                    MotiveFile.from_text(text)

    def test_bad_scalar(self):
        with self.assertRaises(ScalarParseError):
            MotiveFile.from_text('{"motives": {"E": {"elliptic": "w^2"}}}')

    def test_unknown_references(self):
        with self.assertRaises(UnknownNameError):
            MotiveFile.from_dict({"motives": {"D": {"dual": {"ref": "E"}}}})
        fixture = {"sources": ["B"], "target": "A", "coefficients": [[1]]}
        with self.assertRaises(UnknownNameError):
            MotiveFile.from_dict({"motives": {"A": {"tate": 0}}, "maps": {"f": fixture}})
        with self.assertRaises(UnknownNameError):
            builtin_motive_file().motive("X")
        with self.assertRaises(UnknownNameError):
            builtin_motive_file().map("X")

    def test_cyclic_references(self):
        motive_file = MotiveFile.from_dict({"motives": {"A": {"dual": {"ref": "B"}}, "B": {"dual": {"ref": "A"}}}})
        with self.assertRaises(MotiveFileError):
            motive_file.motive("A")

    def test_map_shape(self):
        motive_file = MotiveFile.from_dict(
            {
                "motives": {"E": {"elliptic": "w"}},
                "maps": {"f": {"sources": ["E"], "target": "E", "coefficients": [[1, 0, 0]]}},
            }
        )
        with self.assertRaises(ShapeMismatchError):
            motive_file.map("f")
