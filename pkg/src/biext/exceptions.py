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
""" Errors raised by biext."""


class BiextError(ValueError):
    """Base class of every error raised by biext."""

    pass


class ScalarParseError(BiextError):
    """A scalar literal does not follow the `p/q` / `a+b*w` grammar."""

    pass


class FieldMismatchError(BiextError):
    """Objects built over different imaginary quadratic fields were combined."""

    pass


class InvalidMHSError(BiextError):
    """A builder produced data violating the mixed Hodge structure axioms."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DegenerateModulusError(InvalidMHSError):
    """An elliptic modulus has zero ω-coefficient."""

    pass


class RankDeficientPeriodsError(InvalidMHSError):
    """The period matrix of a presentation does not have full row rank."""

    pass


class NotOneMotiveError(BiextError):
    """An operation restricted to Hodge structures of 1-motive type received another kind."""

    pass


class ShapeMismatchError(BiextError):
    """Maps or biextension data of incompatible shapes were combined."""

    pass


class SourceMismatchError(BiextError):
    """The sources of a Hom lattice are not what the operation requires."""

    pass


class MotiveFileError(BiextError):
    """A motive file is malformed."""

    pass


class UnknownNameError(BiextError):
    """A motive or map name is not defined in the motive file."""

    pass


class InvalidModulusError(BiextError):
    """A finite realization was requested at a modulus below 2."""

    pass


class OracleSizeError(BiextError):
    """An instance is too large for exhaustive enumeration."""

    pass


class NotInLatticeError(BiextError):
    """A map does not belong to the Hom lattice it is claimed to belong to."""

    pass


class InvalidBiextensionError(BiextError):
    """Biextension data violate the compatibility between φ₁, φ₂ and λ."""

    pass


class CheckFailedError(BiextError):
    """An exact identity that must hold was found to fail."""

    pass


# Errors which signal a failed computation rather than bad input (CLI exit code 1).
COMPUTATION_ERRORS = (NotInLatticeError, InvalidBiextensionError, CheckFailedError)
