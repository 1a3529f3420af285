# python3
# Copyright 2026 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pytest fixtures and hypothesis profiles."""

import os
import sys

from absl import flags
import hypothesis
import pytest

hypothesis.settings.register_profile('ci', derandomize=True, deadline=None)
hypothesis.settings.register_profile('dev', max_examples=50, deadline=None)
hypothesis.settings.load_profile(
    os.environ.get('COINCIDENCE_LATTICE_HYPOTHESIS_PROFILE', 'ci'))


@pytest.fixture(scope='session', autouse=True)
def parse_flags():
  # Only pass the first item, because pytest flags shouldn't be parsed as absl
  # flags.
  flags.FLAGS(sys.argv[:1])
