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
"""Lattices in R^n given by a structure matrix, and their reflectivity.

A lattice is the integer span of the columns a_1, ..., a_n of its structure
matrix A. It is reflective when every ratio (a_j, a_i) / (a_k, a_k) is
rational; exactly then every nonzero lattice vector defines a coincidence
reflection.
"""

import dataclasses
import functools
import itertools
import math
from typing import List, Optional, Sequence, Tuple

from coincidence_lattice import error
from coincidence_lattice import matrix
from coincidence_lattice import scalar


@dataclasses.dataclass(frozen=True)
class Lattice:
  """Full-rank lattice whose basis is given by the columns of `structure`."""
  structure: matrix.ExactMatrix

  def __post_init__(self):
    if not self.structure.is_square:
      raise error.DimensionMismatch(
          'Structure matrix must be square, got {}x{}'.format(
              self.structure.n_rows, self.structure.n_cols))
    if matrix.determinant(self.structure).is_zero():
      raise error.SingularMatrix('Structure matrix is singular')

  @classmethod
  def integer(cls, n: int) -> 'Lattice':
    return cls(matrix.ExactMatrix.identity(n))

  @property
  def context(self) -> scalar.FieldContext:
    return self.structure.context

  @property
  def n(self) -> int:
    return self.structure.n_rows

  @functools.cached_property
  def inverse_structure(self) -> matrix.ExactMatrix:
    return matrix.inverse(self.structure)

  @functools.cached_property
  def gram(self) -> matrix.ExactMatrix:
    return matrix.gram(self.structure)

  def basis(self) -> List[matrix.ExactVector]:
    return self.structure.columns()

  def ambient(self, coordinates: Sequence[int]) -> matrix.ExactVector:
    """Returns the vector with the given lattice coordinates."""
    return self.structure.apply(
        matrix.ExactVector.of(coordinates, self.context))


@dataclasses.dataclass(frozen=True)
class LatticeCoordinates:
  coordinates: matrix.ExactVector
  is_rational: bool
  is_integral: bool


@dataclasses.dataclass(frozen=True)
class LatticeVector:
  """A lattice vector by its integer coordinates and its ambient form."""
  coordinates: Tuple[int, ...]
  ambient: matrix.ExactVector


def lattice_coordinates(lattice: Lattice,
                        x: matrix.ExactVector) -> LatticeCoordinates:
  """Solves x = A·c exactly and reports whether c is rational or integral."""
  if len(x) != lattice.n:
    raise error.DimensionMismatch('Vector of length {} in dimension {}'.format(
        len(x), lattice.n))
  coordinates = lattice.inverse_structure.apply(x)
  rational = coordinates.is_rational()
  integral = rational and all(
      c.as_rational().denominator == 1 for c in coordinates)
  return LatticeCoordinates(coordinates, rational, integral)


def primitive(coordinates: Sequence[int]) -> Tuple[int, ...]:
  divisor = math.gcd(*coordinates)
  if not divisor:
    raise error.ZeroVector('The zero vector has no primitive form')
  return tuple(c // divisor for c in coordinates)


def clear_to_lattice(lattice: Lattice, x: matrix.ExactVector) -> LatticeVector:
  """Returns the primitive lattice vector on the ray of x.

  Args:
    lattice: Lattice to clear into.
    x: Nonzero vector with rational lattice coordinates.

  Raises:
    ZeroVector: x is zero.
    IrrationalCoordinates: x is not a real multiple of a lattice vector.
  """
  if x.is_zero():
    raise error.ZeroVector('Cannot clear the zero vector to a lattice ray')
  solved = lattice_coordinates(lattice, x)
  if not solved.is_rational:
    raise error.IrrationalCoordinates(
        '{} has irrational lattice coordinates {}'.format(
            x, solved.coordinates))
  values = solved.coordinates.as_fractions()
  multiple = math.lcm(*(v.denominator for v in values))
  coordinates = primitive([int(v * multiple) for v in values])
  return LatticeVector(coordinates, lattice.ambient(coordinates))


def vector_defines_coincidence_reflection(lattice: Lattice,
                                          x: matrix.ExactVector) -> bool:
  """Returns whether every (a_i, x) / (x, x) is rational."""
  if x.is_zero():
    raise error.ZeroVector('The zero vector defines no reflection')
  norm = x.dot(x)
  return all((a.dot(x) / norm).is_rational() for a in lattice.basis())


@dataclasses.dataclass(frozen=True)
class RatioWitness:
  """The basis ratio (a_j, a_i) / (a_k, a_k) that is not rational."""
  i: int
  j: int
  k: int
  ratio: scalar.FieldElement


@dataclasses.dataclass(frozen=True)
class ReflectivityReport:
  reflective: bool
  ratio_witness: Optional[RatioWitness] = None
  vector_witness: Optional[LatticeVector] = None


def _failing_basis_vector(lattice: Lattice) -> Optional[LatticeVector]:
  # Some a_i or some a_i - a_k must fail whenever a ratio is irrational.
  n = lattice.n
  candidates = [tuple(int(j == i) for j in range(n)) for i in range(n)]
  candidates.extend(
      tuple(int(j == i) - int(j == k)
            for j in range(n))
      for i, k in itertools.combinations(range(n), 2))
  for coordinates in candidates:
    vector = LatticeVector(coordinates, lattice.ambient(coordinates))
    if not vector_defines_coincidence_reflection(lattice, vector.ambient):
      return vector
  return None


def check_reflectivity(lattice: Lattice) -> ReflectivityReport:
  """Checks the basis ratios, reporting a witness when one is irrational."""
  if matrix.is_rational_matrix(lattice.structure):
    return ReflectivityReport(True)
  gram = lattice.gram
  if matrix.is_rational_matrix(gram):
    return ReflectivityReport(True)
  n = lattice.n
  for i, j, k in itertools.product(range(n), repeat=3):
    ratio = gram[j, i] / gram[k, k]
    if not ratio.is_rational():
      return ReflectivityReport(False, RatioWitness(i, j, k, ratio),
                                _failing_basis_vector(lattice))
  return ReflectivityReport(True)


def is_reflective(lattice: Lattice) -> bool:
  return check_reflectivity(lattice).reflective

