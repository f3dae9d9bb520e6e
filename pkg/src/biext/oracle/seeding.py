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
""" Deterministic random states for instance generation.

Every family of random instances draws from its own state, derived from the user seed and a label, so that adding
instances to one family never shifts another.
"""
import hashlib
import struct
from typing import List, Tuple, Union

import numpy as np


SEED_BYTES = 8


def np_random(seed: int, label: str = "") -> Tuple[np.random.RandomState, int]:
    """
    Create a numpy random state for a labelled family of instances.

    Args:
        seed (`int`):
            A non-negative user seed.
        label (`str`, *optional*, defaults to `""`):
            Name of the instance family.

    Returns:
        rng (`numpy.random.RandomState`):
            Random state seeded from the hashed seed.
        seed (`int`):
            The derived seed.
    """
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ValueError(f"Seed must be a non-negative integer, not {seed!r}")
    derived = create_seed(f"{seed}:{label}") if label else create_seed(seed)
    rng = np.random.RandomState()
    rng.seed(_int_list_from_bigint(hash_seed(derived)))
    return rng, derived


def hash_seed(seed: int, max_bytes: int = SEED_BYTES) -> int:
    """
    Hash a seed, so that consecutive seeds give uncorrelated states.

    Args:
        seed (`int`):
            The seed to hash.
        max_bytes (`int`, *optional*, defaults to `8`):
            Maximum number of bytes kept from the digest.
    """
    seed_hash = hashlib.sha512(str(seed).encode("utf8")).digest()
    return _bigint_from_bytes(seed_hash[:max_bytes])


def create_seed(a: Union[int, str], max_bytes: int = SEED_BYTES) -> int:
    """
    Reduce an integer or a string to a seed of at most `max_bytes` bytes.

    Args:
        a (`int` or `str`):
            Integer seed or seed phrase.
        max_bytes (`int`, *optional*, defaults to `8`):
            Maximum number of bytes in the seed.
    """
    if isinstance(a, str):
        data = a.encode("utf8")
        data += hashlib.sha512(data).digest()
        return _bigint_from_bytes(data[:max_bytes])
    if isinstance(a, int) and not isinstance(a, bool):
        return a % 2 ** (8 * max_bytes)
    raise ValueError(f"Invalid type for seed: {type(a)} ({a})")


def _bigint_from_bytes(bytes_data: bytes) -> int:
    sizeof_int = 4
    padding = -len(bytes_data) % sizeof_int
    bytes_data += b"\0" * padding
    int_count = len(bytes_data) // sizeof_int
    unpacked = struct.unpack(f"{int_count}I", bytes_data)
    return sum(val << (sizeof_int * 8 * i) for i, val in enumerate(unpacked))


def _int_list_from_bigint(bigint: int) -> List[int]:
    if bigint < 0:
        raise ValueError(f"Seed must be non-negative, not {bigint}")
    if bigint == 0:
        return [0]
    ints = []
    while bigint > 0:
        bigint, mod = divmod(bigint, 2**32)
        ints.append(mod)
    return ints
