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
import json
import os
import tempfile
import unittest

from biext.cli import main, run_command
from biext.utils import logging


def _write(directory, document):
    path = os.path.join(directory, "motives.json")
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f)
    return path


class HomCommandTest(unittest.TestCase):
    def test_forms_on_the_builtin_curve(self):
        result = run_command(["hom", "--builtin", "--sources", "E,E", "--target", "Z1"])
        self.assertEqual(result.code, 0)
        self.assertEqual(result.document["command"], "hom")
        self.assertEqual(result.document["field"], {"d": 1})
        self.assertEqual(result.document["report"]["rank"], 2)
        self.assertEqual(result.document["report"]["sources"], ["E", "E"])
        self.assertNotIn("split", result.document["report"])

    def test_split(self):
        result = run_command(["hom", "--builtin", "--sources", "E,E", "--target", "Z1", "--split-sym"])
        split = result.document["report"]["split"]
        self.assertEqual((split["symmetric_rank"], split["antisymmetric_rank"], split["index"]), (1, 1, 1))

    def test_unknown_motive(self):
        result = run_command(["hom", "--builtin", "--sources", "X", "--target", "Z1"])
        self.assertEqual(result.code, 2)
        self.assertEqual(result.document["error"]["type"], "UnknownNameError")

    def test_usage_errors(self):
        result = run_command(["hom"])
        self.assertEqual(result.code, 2)
        self.assertIsNone(result.document)
        self.assertEqual(run_command(["hom", "--sources", "E", "--target", "E"]).code, 2)

    def test_digest_is_stable(self):
        first = run_command(["dual", "--builtin", "--motive", "K"]).document["input_digest"]
        second = run_command(["dual", "--builtin", "--motive", "E"]).document["input_digest"]
        self.assertEqual(first, second)
        self.assertEqual(len(first), 64)


class StructureCommandsTest(unittest.TestCase):
    def test_dual(self):
        result = run_command(["dual", "--builtin", "--motive", "K"])
        self.assertEqual(result.code, 0)
        self.assertEqual(result.document["report"]["rank"], 2)
        self.assertEqual(result.document["report"]["gr_profile"], {"0": 1, "-2": 1})

    def test_pairing_with_polarization(self):
        result = run_command(["pairing", "--builtin", "--motive", "E", "--self-dual", "polarization"])
        self.assertEqual(result.code, 0)
        report = result.document["report"]
        self.assertTrue(report["unimodular"])
        duality = report["self_duality"]
        self.assertTrue(duality["skew_symmetric"])
        self.assertTrue(duality["unimodular"])
        self.assertTrue(duality["morphism"])
        self.assertFalse(duality["symmetric"])

    def test_pairing_needs_a_self_duality(self):
        result = run_command(["pairing", "--builtin", "--motive", "E", "--self-dual", "form"])
        self.assertEqual(result.code, 2)
        self.assertEqual(result.document["error"]["type"], "SourceMismatchError")

    def test_grprofile(self):
        cases = {"E*E": {"-2": 4}, "K/2": {"0": 1}, "dual(K) + E": {"0": 1, "-1": 2, "-2": 1}}
        for expression, profile in cases.items():
            with self.subTest(expression):
                result = run_command(["grprofile", "--builtin", "--expr", expression])
                self.assertEqual(result.code, 0)
                self.assertEqual(result.document["report"]["gr_profile"], profile)
        bad = run_command(["grprofile", "--builtin", "--expr", "E +"])
        self.assertEqual(bad.code, 2)
        self.assertEqual(bad.document["error"]["type"], "MotiveFileError")

    def test_decompose(self):
        result = run_command(["decompose", "--builtin", "--sources", "L1,E,E", "--target", "Z1"])
        self.assertEqual(result.code, 0)
        self.assertTrue(result.document["report"]["equal"])
        self.assertEqual(result.document["report"]["lhs_rank"], 2)


class MapCommandsTest(unittest.TestCase):
    def test_modn(self):
        result = run_command(["modn", "--builtin", "--map", "J", "--n", "3"])
        self.assertEqual(result.code, 0)
        self.assertEqual(result.document["report"]["reduced"], [[0, 1], [2, 0]])
        self.assertTrue(result.document["report"]["commutes"])
        self.assertEqual(run_command(["modn", "--builtin", "--map", "J", "--n", "1"]).code, 2)
        self.assertEqual(run_command(["modn", "--builtin", "--map", "J", "--n", "x"]).code, 2)

    def test_curvature(self):
        result = run_command(["curvature", "--builtin", "--map", "form"])
        self.assertEqual(result.code, 0)
        self.assertEqual(result.document["report"]["upsilon"], [["0", "-1", "1", "0"]])
        self.assertEqual(run_command(["curvature", "--builtin", "--map", "J"]).code, 2)

    def test_non_morphism_is_a_failed_computation(self):
        document = {
            "motives": {"E": {"elliptic": "w"}},
            "maps": {"skew": {"sources": ["E"], "target": "E", "coefficients": [[1, 0], [0, 0]]}},
        }
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write(tmpdir, document)
            result = run_command(["modn", path, "--map", "skew", "--n", "3"])
            self.assertEqual(result.code, 1)
            self.assertEqual(result.document["error"]["type"], "NotInLatticeError")
            validation = run_command(["validate", path])
            self.assertEqual(validation.code, 0)
            self.assertEqual(validation.document["report"]["maps"]["skew"]["morphism"], False)


class ValidateCommandTest(unittest.TestCase):
    def test_builtin(self):
        result = run_command(["validate", "--builtin"])
        self.assertEqual(result.code, 0)
        self.assertTrue(result.document["report"]["ok"])
        self.assertEqual(set(result.document["report"]["motives"]), {"E", "Edual", "K", "L1", "Z0", "Z1"})
        self.assertTrue(result.document["report"]["maps"]["polarization"]["morphism"])

    def test_rational_modulus(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write(tmpdir, {"motives": {"bad": {"elliptic": "1/2"}}})
            result = run_command(["validate", path])
        self.assertEqual(result.code, 2)
        self.assertFalse(result.document["report"]["ok"])
        self.assertFalse(result.document["report"]["motives"]["bad"]["ok"])
        violations = result.document["report"]["motives"]["bad"]["violations"]
        self.assertIn("hodge_symmetry", [violation["invariant"] for violation in violations])

    def test_unreadable_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            result = run_command(["validate", os.path.join(tmpdir, "missing.json")])
        self.assertEqual(result.code, 2)
        self.assertEqual(result.document["error"]["type"], "MotiveFileError")


class CheckCommandTest(unittest.TestCase):
    def test_list(self):
        result = run_command(["check", "--builtin", "--suite", "list"])
        self.assertEqual(result.code, 0)
        self.assertEqual(len(result.document["report"]["suites"]), 10)

    def test_cm_suite(self):
        result = run_command(["check", "--builtin", "--suite", "cm", "--seed", "3"])
        self.assertEqual(result.code, 0)
        self.assertTrue(result.document["report"]["passed"])
        self.assertEqual(result.document["report"]["config"]["seed"], 3)
        self.assertNotIn("seconds", result.document["report"]["suites"][0])

    def test_negative_seed(self):
        self.assertEqual(run_command(["check", "--builtin", "--seed", "-1"]).code, 2)


class MainTest(unittest.TestCase):
    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "report.json")
            code = main(["hom", "--builtin", "--sources", "E", "--target", "E", "--output", path])
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        self.assertEqual(code, 0)
        self.assertTrue(text.endswith("}\n"))
        document = json.loads(text)
        self.assertEqual(document["report"]["rank"], 2)
        self.assertEqual(list(document), sorted(document))


class VerbosityTest(unittest.TestCase):
    def tearDown(self):
        logging.set_verbosity_warning()
        logging.reset_format()

    def test_debug_switches_to_the_explicit_format(self):
        handlers = logging.get_logger().handlers
        result = run_command(["grprofile", "--builtin", "--expr", "E", "--verbosity", "debug"])
        self.assertEqual(result.code, 0)
        self.assertEqual(logging.get_verbosity(), logging.DEBUG)
        self.assertTrue(all(handler.formatter is not None for handler in handlers))
        run_command(["grprofile", "--builtin", "--expr", "E", "--verbosity", "warning"])
        self.assertEqual(logging.get_verbosity(), logging.WARNING)
        self.assertTrue(all(handler.formatter is None for handler in handlers))
