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
"""Coincidence symmetries and coincidence isometries of a lattice.

A linear map T (canonical-basis matrix) is a coincidence symmetry of the
lattice with structure matrix A when M = A^-1·T·A is rational; the lattice
and its image are then commensurate and Sigma = [L : L ∩ TL] is finite. The
coincidence isometries are the orthogonal coincidence symmetries.
"""

import dataclasses
import logging
from typing import Tuple, Union

from coincidence_lattice import error
from coincidence_lattice import integer_lattice
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import scalar

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CoincidenceCertificate:
  """Proof that a map is a coincidence symmetry, with its index.

  Attributes:
    conjugate: The rational matrix M = A^-1·T·A.
    sigma: The coincidence index [L : L ∩ TL].
    intersection_basis: Basis of L ∩ TL in lattice coordinates.
    is_isometry: Whether T is orthogonal.
  """
  conjugate: matrix.ExactMatrix
  sigma: int
  intersection_basis: integer_lattice.SublatticeBasis
  is_isometry: bool

  def __post_init__(self):
    if self.sigma != self.intersection_basis.index:
      raise error.ValidationError('Sigma {} differs from basis index {}'.format(
          self.sigma, self.intersection_basis.index))


@dataclasses.dataclass(frozen=True)
class NotCoincidence:
  """The conjugate A^-1·T·A has an irrational entry at (row, column)."""
  conjugate: matrix.ExactMatrix
  row: int
  column: int
  entry: scalar.FieldElement


@dataclasses.dataclass(frozen=True)
class NotOrthogonal:
  """R^T·R is not the identity."""
  gram: matrix.ExactMatrix


MembershipResult = Union[CoincidenceCertificate, NotCoincidence, NotOrthogonal]


def is_member(result: MembershipResult) -> bool:
  return isinstance(result, CoincidenceCertificate)


def _require_same_shape(a1: matrix.ExactMatrix, a2: matrix.ExactMatrix) -> None:
  if not a1.is_square or (a1.n_rows, a1.n_cols) != (a2.n_rows, a2.n_cols):
    raise error.DimensionMismatch(
        'Expected two n x n matrices, got {}x{} and {}x{}'.format(
            a1.n_rows, a1.n_cols, a2.n_rows, a2.n_cols))


def commensurate(a1: matrix.ExactMatrix, a2: matrix.ExactMatrix) -> bool:
  """Returns whether the lattices with structure matrices a1, a2 commensurate.

  Raises:
    SingularMatrix: a2 is singular.
    FieldMismatch: the matrices live in different quadratic fields.
  """
  _require_same_shape(a1, a2)
  a1.context.join(a2.context)
  if matrix.determinant(a1).is_zero():
    raise error.SingularMatrix('First structure matrix is singular')
  return matrix.is_rational_matrix(matrix.inverse(a2) @ a1)


def commensurability_indices(a1: matrix.ExactMatrix,
                             a2: matrix.ExactMatrix) -> Tuple[int, int]:
  """Returns ([L1 : L1 ∩ L2], [L2 : L1 ∩ L2]) for commensurate lattices.

  Raises:
    IrrationalEntries: the lattices are not commensurate.
  """
  _require_same_shape(a1, a2)
  first = integer_lattice.intersect_with_rational_image(
      matrix.inverse(a1) @ a2)
  second = integer_lattice.intersect_with_rational_image(
      matrix.inverse(a2) @ a1)
  return first.index, second.index


def conjugate(lattice: lattice_module.Lattice,
              t: matrix.ExactMatrix) -> matrix.ExactMatrix:
  """Returns A^-1·T·A, the matrix of T in lattice coordinates."""
  _require_same_shape(lattice.structure, t)
  return lattice.inverse_structure @ t @ lattice.structure


def csg_member(
    lattice: lattice_module.Lattice, t: matrix.ExactMatrix
) -> Union[CoincidenceCertificate, NotCoincidence]:
  """Decides whether T lies in the coincidence symmetry group of the lattice.

  Args:
    lattice: The lattice L.
    t: Nonsingular canonical-basis matrix of the candidate map.

  Returns:
    A certificate carrying M, Sigma and the basis of L ∩ TL, or NotCoincidence
    naming the first irrational entry of M.

  Raises:
    SingularMatrix: t is singular.
  """
  _require_same_shape(lattice.structure, t)
  if matrix.determinant(t).is_zero():
    raise error.SingularMatrix('Candidate map is singular')
  m = conjugate(lattice, t)
  witness = matrix.first_irrational_entry(m)
  if witness is not None:
    row, column, entry = witness
    _logger.debug('Conjugate entry (%s, %s) = %s is irrational', row, column,
                  entry)
    return NotCoincidence(m, row, column, entry)
  basis = integer_lattice.intersect_with_rational_image(m)
  return CoincidenceCertificate(m, basis.index, basis, matrix.is_orthogonal(t))


def oc_member(lattice: lattice_module.Lattice,
              r: matrix.ExactMatrix) -> MembershipResult:
  """Decides whether R lies in the coincidence isometry group OC(L).

  Orthogonality is checked on R itself, in canonical coordinates; the
  conjugate A^-1·R·A is generally not orthogonal.
  """
  _require_same_shape(lattice.structure, r)
  gram = matrix.gram(r)
  if not gram.is_identity():
    return NotOrthogonal(gram)
  return csg_member(lattice, r)
