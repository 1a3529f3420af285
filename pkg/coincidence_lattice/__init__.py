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
"""Sets up shortcuts for imports from the library."""
import logging
import sys

from coincidence_lattice import census
from coincidence_lattice import codec
from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import integer_lattice
from coincidence_lattice import lattice
from coincidence_lattice import matrix
from coincidence_lattice import planar
from coincidence_lattice import reflection
from coincidence_lattice import scalar

# add NullHandler to root-module logger so that individual modules
# won't have to.
logging.getLogger(__name__).addHandler(logging.NullHandler())

# Numerals of any length parse and print exactly.
if hasattr(sys, 'set_int_max_str_digits'):
  sys.set_int_max_str_digits(0)

# pylint: disable=invalid-name
CoincidenceError = error.CoincidenceError

FieldContext = scalar.FieldContext
FieldElement = scalar.FieldElement
RATIONAL = scalar.RATIONAL
parse_scalar = scalar.parse_scalar
format_scalar = scalar.format_scalar

ExactMatrix = matrix.ExactMatrix
ExactVector = matrix.ExactVector

IntMatrix = integer_lattice.IntMatrix
hnf = integer_lattice.hnf
snf = integer_lattice.snf

Lattice = lattice.Lattice
check_reflectivity = lattice.check_reflectivity
is_reflective = lattice.is_reflective

csg_member = coincidence.csg_member
oc_member = coincidence.oc_member
is_member = coincidence.is_member

decompose = reflection.decompose
verify = reflection.verify

PlanarFamilyParams = planar.PlanarFamilyParams
classify = planar.classify

growth_run = census.growth_run

load_matrix_file = codec.load_matrix_file
