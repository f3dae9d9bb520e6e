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

from biext.oracle import create_seed, hash_seed, np_random


class SeedingTest(unittest.TestCase):
    def test_np_random_is_deterministic(self):
        rng_a, seed_a = np_random(3, "oracle")
        rng_b, seed_b = np_random(3, "oracle")
        self.assertEqual(seed_a, seed_b)
        self.assertEqual(rng_a.randint(10**6, size=5).tolist(), rng_b.randint(10**6, size=5).tolist())

    def test_labels_separate_families(self):
        self.assertNotEqual(np_random(3, "oracle")[1], np_random(3, "suite")[1])
        self.assertNotEqual(np_random(3)[1], np_random(4)[1])

    def test_invalid_seed(self):
        for seed in (-1, 1.5, True):
            with self.assertRaises(ValueError):
                np_random(seed)

    def test_seed_size(self):
        self.assertLess(create_seed("a seed phrase"), 2**64)
        self.assertLess(hash_seed(12345), 2**64)
        self.assertEqual(hash_seed(12345), hash_seed(12345))
