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

# flake8: noqa
from .commands import CommandResult, build_parser, main, run_command
from .expressions import evaluate_expression
from .motive_file import BUILTIN_DOCUMENT, MapFixture, MotiveFile, builtin_motive_file, canonical_json
from .suites import SUITES, SuiteResult, run_suite, run_suites
