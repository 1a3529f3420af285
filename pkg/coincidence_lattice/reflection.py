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
"""Reflections by lattice vectors, and decomposition of coincidence isometries.

decompose sweeps the basis b_1, ..., b_n of a reflective lattice keeping a
residual map S (initially R). Whenever S moves b_i, the vector a = S·b_i - b_i
is orthogonal to every b_j already fixed, and the reflection by a sends S·b_i
back to b_i, so S <- R_a·S fixes b_1, ..., b_i. After the sweep S = I and R is
the ordered product of the emitted reflections.
"""

import dataclasses
import logging
import math
from typing import Callable, List, Optional, Tuple

from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix

_logger = logging.getLogger(__name__)


def reflection_matrix(v: matrix.ExactVector) -> matrix.ExactMatrix:
  """Returns I - (2 / (v, v))·v·v^T, the reflection in the hyperplane v⊥."""
  if v.is_zero():
    raise error.ZeroVector('The zero vector defines no reflection')
  factor = 2 / v.dot(v)
  return (matrix.ExactMatrix.identity(len(v), v.context) -
          matrix.outer(v, v).scale(factor))


def project_off(b: matrix.ExactVector,
                x: matrix.ExactVector) -> matrix.ExactVector:
  """Returns the component of x orthogonal to b."""
  if b.is_zero():
    raise error.ZeroVector('Cannot project off the zero vector')
  return x - b.scale(x.dot(b) / b.dot(b))


@dataclasses.dataclass(frozen=True)
class ReflectionSequence:
  """Lattice vectors whose reflections, multiplied in order, give `target`."""
  vectors: Tuple[lattice_module.LatticeVector, ...]
  target: matrix.ExactMatrix

  def __len__(self) -> int:
    return len(self.vectors)

  def reflections(self) -> List[matrix.ExactMatrix]:
    return [reflection_matrix(vector.ambient) for vector in self.vectors]

  def product(self) -> matrix.ExactMatrix:
    result = matrix.ExactMatrix.identity(self.target.n_rows,
                                         self.target.context)
    for reflection in self.reflections():
      result = result @ reflection
    return result


def decompose(
    lattice: lattice_module.Lattice,
    r: matrix.ExactMatrix,
    on_step: Optional[Callable[[int, matrix.ExactMatrix], None]] = None
) -> ReflectionSequence:
  """Writes a coincidence isometry as a product of at most n reflections.

  Args:
    lattice: A reflective lattice.
    r: Coincidence isometry of the lattice, in canonical coordinates.
    on_step: Called as on_step(i, residual) after basis vector i is fixed.

  Returns:
    The primitive lattice vectors v_1, ..., v_k with R = R_v1 ··· R_vk.

  Raises:
    NotReflectiveLattice: some basis ratio is irrational.
    NotCoincidenceIsometry: r is not in OC(L).
  """
  report = lattice_module.check_reflectivity(lattice)
  if not report.reflective:
    witness = report.ratio_witness
    raise error.NotReflectiveLattice(
        'Ratio (a_{j}, a_{i}) / (a_{k}, a_{k}) = {ratio} is irrational'.format(
            i=witness.i + 1, j=witness.j + 1, k=witness.k + 1,
            ratio=witness.ratio),
        witness=witness)
  membership = coincidence.oc_member(lattice, r)
  if not coincidence.is_member(membership):
    raise error.NotCoincidenceIsometry(
        'Map is not a coincidence isometry: {}'.format(
            type(membership).__name__))

  residual = r
  vectors = []
  for i, b in enumerate(lattice.basis()):
    image = residual.apply(b)
    if image != b:
      vector = lattice_module.clear_to_lattice(lattice, image - b)
      residual = reflection_matrix(vector.ambient) @ residual
      vectors.append(vector)
      _logger.debug('Basis vector %s fixed by reflecting along %s', i + 1,
                    vector.coordinates)
    if on_step is not None:
      on_step(i, residual)
  if not residual.is_identity():
    raise error.CoincidenceError('Residual map is not the identity')
  return ReflectionSequence(tuple(vectors), r)


def verify(seq: ReflectionSequence, lattice: lattice_module.Lattice) -> bool:
  """Checks a decomposition against the lattice independently of decompose."""
  if len(seq) > lattice.n:
    return False
  for vector in seq.vectors:
    if (len(vector.coordinates) != lattice.n or
        math.gcd(*vector.coordinates) != 1):
      return False
    if lattice.ambient(vector.coordinates) != vector.ambient:
      return False
    reflection = reflection_matrix(vector.ambient)
    if not coincidence.is_member(coincidence.oc_member(lattice, reflection)):
      return False
  if (seq.target.n_rows, seq.target.n_cols) != (lattice.n, lattice.n):
    return False
  return seq.product() == seq.target
