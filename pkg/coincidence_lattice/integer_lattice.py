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
"""Integer normal forms and the sublattice Z^n ∩ M·Z^n.

Hermite normal forms here are column-style: H = M·U with U unimodular, H lower
triangular, positive diagonal, and every entry left of the diagonal reduced
into [0, h_ii). The coincidence index of a rational matrix M is the index of
Z^n ∩ M·Z^n in Z^n, computed through the dual lattice Z^n + M^-T·Z^n.
"""

import dataclasses
import fractions
import itertools
import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from coincidence_lattice import error
from coincidence_lattice import matrix
from coincidence_lattice import scalar

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class IntMatrix:
  """A dense matrix of arbitrary-precision integers."""
  rows: Tuple[Tuple[int, ...], ...]

  def __post_init__(self):
    rows = tuple(tuple(int(x) for x in row) for row in self.rows)
    if not rows or not rows[0]:
      raise error.DimensionMismatch(
          'An integer matrix needs at least one entry')
    if any(len(row) != len(rows[0]) for row in rows):
      raise error.DimensionMismatch('Rows have different lengths')
    object.__setattr__(self, 'rows', rows)

  @classmethod
  def of(cls, rows: Iterable[Iterable[int]]) -> 'IntMatrix':
    return cls(tuple(tuple(row) for row in rows))

  @classmethod
  def identity(cls, n: int) -> 'IntMatrix':
    return cls.of([int(i == j) for j in range(n)] for i in range(n))

  @property
  def n_rows(self) -> int:
    return len(self.rows)

  @property
  def n_cols(self) -> int:
    return len(self.rows[0])

  @property
  def is_square(self) -> bool:
    return self.n_rows == self.n_cols

  def __getitem__(self, index: Tuple[int, int]) -> int:
    i, j = index
    return self.rows[i][j]

  def column(self, j: int) -> Tuple[int, ...]:
    return tuple(row[j] for row in self.rows)

  def columns(self) -> List[Tuple[int, ...]]:
    return [self.column(j) for j in range(self.n_cols)]

  def transpose(self) -> 'IntMatrix':
    return IntMatrix(tuple(zip(*self.rows)))

  def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
    if self.n_cols != other.n_rows:
      raise error.DimensionMismatch('Cannot multiply {}x{} by {}x{}'.format(
          self.n_rows, self.n_cols, other.n_rows, other.n_cols))
    other_columns = other.columns()
    return IntMatrix.of(
        [sum(a * b for a, b in zip(row, column)) for column in other_columns]
        for row in self.rows)

  def determinant(self) -> int:
    if not self.is_square:
      raise error.DimensionMismatch('Determinant of a {}x{} matrix'.format(
          self.n_rows, self.n_cols))
    return int(_to_domain(self).det())

  def to_exact(
      self,
      context: scalar.FieldContext = scalar.RATIONAL) -> matrix.ExactMatrix:
    return matrix.ExactMatrix.from_rows(self.rows, context)


def _to_domain(m: IntMatrix) -> DomainMatrix:
  return DomainMatrix([[ZZ(x) for x in row] for row in m.rows],
                      (m.n_rows, m.n_cols), ZZ)


@dataclasses.dataclass(frozen=True)
class SublatticeBasis:
  """Columns generating a finite-index sublattice of Z^n, with that index."""
  basis: IntMatrix
  index: int

  def __post_init__(self):
    if not self.basis.is_square:
      raise error.DimensionMismatch('A sublattice basis must be square')
    determinant = self.basis.determinant()
    if not determinant:
      raise error.SingularMatrix('Sublattice basis is singular')
    if abs(determinant) != self.index:
      raise error.ValidationError('Index {} differs from |det| = {}'.format(
          self.index, abs(determinant)))

  def contains(self, vector: Sequence[int]) -> bool:
    """Returns whether the integer vector is a combination of the columns."""
    solution = matrix.inverse(self.basis.to_exact()).apply(
        matrix.ExactVector.of(vector))
    return all(x.as_rational().denominator == 1 for x in solution)


def _column_hnf(
    m: IntMatrix, with_transform: bool
) -> Tuple[List[List[int]], Optional[List[List[int]]]]:
  """Returns (H, U) as lists of rows; U is None without with_transform."""
  n, k = m.n_rows, m.n_cols
  if k < n:
    raise error.RankDeficient('{}x{} matrix cannot have full row rank'.format(
        n, k))
  h = [list(row) for row in m.rows]
  u = [[int(i == j) for j in range(k)] for i in range(k)
      ] if with_transform else None
  tracked = (h, u) if with_transform else (h,)

  def combine(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
    for rows in tracked:
      for row in rows:
        x, y = row[i], row[j]
        row[i], row[j] = a * x + b * y, c * x + d * y

  def subtract(target: int, source: int, factor: int) -> None:
    for rows in tracked:
      for row in rows:
        row[target] -= factor * row[source]

  def negate(target: int) -> None:
    for rows in tracked:
      for row in rows:
        row[target] = -row[target]

  for i in range(n):
    for j in range(i + 1, k):
      if h[i][j]:
        a, b = h[i][i], h[i][j]
        x, y, g = (int(v) for v in ZZ.gcdex(ZZ(a), ZZ(b)))
        combine(i, j, x, y, -b // g, a // g)
    if not h[i][i]:
      raise error.RankDeficient('Matrix does not have full row rank')
    if h[i][i] < 0:
      negate(i)
    for j in range(i):
      quotient = h[i][j] // h[i][i]
      if quotient:
        subtract(j, i, quotient)
  return h, u


def hnf(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
  """Returns the column Hermite normal form H = M·U and the unimodular U.

  Args:
    m: Integer matrix of full row rank.

  Raises:
    RankDeficient: m does not have full row rank.
  """
  h, u = _column_hnf(m, with_transform=True)
  return IntMatrix.of(h), IntMatrix.of(u)


def _divisor_chain(values: Sequence[int]) -> Tuple[int, ...]:
  chain = sorted(values)
  for i in range(len(chain)):
    for j in range(i + 1, len(chain)):
      g = math.gcd(chain[i], chain[j])
      chain[i], chain[j] = g, chain[i] * chain[j] // g
  return tuple(chain)


def snf(m: IntMatrix) -> Tuple[int, ...]:
  """Returns the nonzero invariant factors d_1 | d_2 | ... of m."""
  factors = invariant_factors(_to_domain(m))
  return _divisor_chain([abs(int(f)) for f in factors if f])


def _require_rational_square(m: matrix.ExactMatrix) -> None:
  if not m.is_square:
    raise error.DimensionMismatch('Expected a square matrix, got {}x{}'.format(
        m.n_rows, m.n_cols))
  if not matrix.is_rational_matrix(m):
    raise error.IrrationalEntries('Matrix has irrational entries')


def _lcm_of_denominators(values: Iterable[fractions.Fraction]) -> int:
  result = 1
  for value in values:
    result = math.lcm(result, value.denominator)
  return result


def _as_integer(value: fractions.Fraction) -> int:
  if value.denominator != 1:
    raise error.CoincidenceError('{} is not an integer'.format(value))
  return value.numerator


def clearing_multiple(m: matrix.ExactMatrix) -> int:
  """Returns the least m > 0 making both m·M and m·M^-1 integral."""
  _require_rational_square(m)
  inverse = matrix.inverse(m)
  return _lcm_of_denominators(
      x.as_rational()
      for x in itertools.chain(m.entries(), inverse.entries()))


def intersect_with_rational_image(m: matrix.ExactMatrix) -> SublatticeBasis:
  """Computes a basis of Z^n ∩ M·Z^n and its index in Z^n.

  The dual of the intersection is the sum Z^n + M^-T·Z^n. With q clearing the
  denominators of M^-T, the column HNF of [qI | qM^-T] is q times a basis D of
  that sum, and C = D^-T spans the intersection.

  Args:
    m: Nonsingular rational square matrix.

  Returns:
    The intersection basis in column Hermite normal form, and its index.

  Raises:
    IrrationalEntries: m has an irrational entry.
    SingularMatrix: m is singular.
  """
  _require_rational_square(m)
  n = m.n_rows
  dual = matrix.inverse(m).transpose().as_fractions()
  q = _lcm_of_denominators(x for row in dual for x in row)
  block = IntMatrix.of([q * int(i == j)
                        for j in range(n)] + [_as_integer(q * x)
                                              for x in dual[i]]
                       for i in range(n))
  h, _ = _column_hnf(block, with_transform=False)
  dual_basis = matrix.ExactMatrix.from_rows(row[:n] for row in h)
  intersection = matrix.inverse(dual_basis).transpose().scale(q)
  c = IntMatrix.of(
      [_as_integer(x) for x in row] for row in intersection.as_fractions())
  canonical, _ = _column_hnf(c, with_transform=False)
  index = math.prod(canonical[i][i] for i in range(n))
  _logger.debug('Intersection with clearing multiple %s has index %s', q,
                index)
  return SublatticeBasis(IntMatrix.of(canonical), index)


def residue_count_index(m: matrix.ExactMatrix, clearing: int) -> int:
  """Counts residues mod the clearing multiple to get [Z^n : Z^n ∩ M·Z^n].

  With clearing·Z^n inside the intersection, the index is clearing^n divided
  by the number of residues x in {0..clearing-1}^n for which M^-1·x is
  integral.

  Args:
    m: Nonsingular rational square matrix.
    clearing: Positive integer with clearing·M and clearing·M^-1 integral.

  Raises:
    InvalidClearingMultiple: clearing does not clear M or M^-1.
  """
  _require_rational_square(m)
  if clearing < 1:
    raise error.InvalidClearingMultiple(
        'Clearing multiple must be positive, got {}'.format(clearing))
  inverse = matrix.inverse(m)
  for entry in itertools.chain(m.entries(), inverse.entries()):
    if (clearing * entry.as_rational()).denominator != 1:
      raise error.InvalidClearingMultiple('{} does not clear {}'.format(
          clearing, entry))
  scaled_inverse = [[_as_integer(clearing * x)
                     for x in row]
                    for row in inverse.as_fractions()]
  n = m.n_rows
  count = 0
  for residue in itertools.product(range(clearing), repeat=n):
    if all(
        sum(a * x for a, x in zip(row, residue)) % clearing == 0
        for row in scaled_inverse):
      count += 1
  return clearing**n // count
