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
"""Dense exact linear algebra over FieldElements."""

import dataclasses
import fractions
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from coincidence_lattice import error
from coincidence_lattice import scalar

ScalarLike = Union[scalar.FieldElement, int, fractions.Fraction]

_ZERO = fractions.Fraction(0)


def _join_contexts(
    values: Iterable[ScalarLike],
    context: Optional[scalar.FieldContext]) -> scalar.FieldContext:
  context = context or scalar.RATIONAL
  for value in values:
    if isinstance(value, scalar.FieldElement):
      context = context.join(value.context)
  return context


@dataclasses.dataclass(frozen=True, eq=False)
class ExactVector:
  """A column vector whose entries all live in one field context."""
  context: scalar.FieldContext
  entries: Tuple[scalar.FieldElement, ...]

  @classmethod
  def of(cls,
         values: Iterable[ScalarLike],
         context: Optional[scalar.FieldContext] = None) -> 'ExactVector':
    values = list(values)
    if not values:
      raise error.DimensionMismatch('A vector needs at least one entry')
    context = _join_contexts(values, context)
    return cls(context, tuple(scalar.lift(v, context) for v in values))

  @classmethod
  def zeros(cls, n: int,
            context: scalar.FieldContext = scalar.RATIONAL) -> 'ExactVector':
    return cls.of([0] * n, context)

  @classmethod
  def unit(cls, n: int, i: int,
           context: scalar.FieldContext = scalar.RATIONAL) -> 'ExactVector':
    return cls.of([1 if j == i else 0 for j in range(n)], context)

  def __len__(self) -> int:
    return len(self.entries)

  def __iter__(self) -> Iterator[scalar.FieldElement]:
    return iter(self.entries)

  def __getitem__(self, i: int) -> scalar.FieldElement:
    return self.entries[i]

  def _check_length(self, other: 'ExactVector') -> None:
    if len(self) != len(other):
      raise error.DimensionMismatch('Vectors of length {} and {}'.format(
          len(self), len(other)))

  def __add__(self, other: 'ExactVector') -> 'ExactVector':
    self._check_length(other)
    return ExactVector.of((x + y for x, y in zip(self, other)), self.context)

  def __sub__(self, other: 'ExactVector') -> 'ExactVector':
    self._check_length(other)
    return ExactVector.of((x - y for x, y in zip(self, other)), self.context)

  def __neg__(self) -> 'ExactVector':
    return ExactVector(self.context, tuple(-x for x in self))

  def scale(self, factor: ScalarLike) -> 'ExactVector':
    return ExactVector.of((factor * x for x in self), self.context)

  def dot(self, other: 'ExactVector') -> scalar.FieldElement:
    self._check_length(other)
    context = self.context.join(other.context)
    if self.is_rational() and other.is_rational():
      return scalar.FieldElement(
          context, sum((x.r * y.r for x, y in zip(self, other)), _ZERO))
    total = context.zero()
    for x, y in zip(self, other):
      total = total + x * y
    return total

  def is_zero(self) -> bool:
    return all(x.is_zero() for x in self)

  def is_rational(self) -> bool:
    return all(x.is_rational() for x in self)

  def as_fractions(self) -> Tuple[fractions.Fraction, ...]:
    return tuple(x.as_rational() for x in self)

  def __eq__(self, other) -> bool:
    if not isinstance(other, ExactVector):
      return NotImplemented
    return self.entries == other.entries

  def __hash__(self) -> int:
    return hash(self.entries)

  def __repr__(self) -> str:
    return 'ExactVector([{}])'.format(', '.join(str(x) for x in self))


@dataclasses.dataclass(frozen=True, eq=False)
class ExactMatrix:
  """A dense matrix whose entries all live in one field context."""
  context: scalar.FieldContext
  rows: Tuple[Tuple[scalar.FieldElement, ...], ...]

  @classmethod
  def from_rows(
      cls,
      rows: Iterable[Iterable[ScalarLike]],
      context: Optional[scalar.FieldContext] = None) -> 'ExactMatrix':
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
      raise error.DimensionMismatch('A matrix needs at least one entry')
    if any(len(row) != len(rows[0]) for row in rows):
      raise error.DimensionMismatch('Rows have different lengths')
    context = _join_contexts((v for row in rows for v in row), context)
    return cls(
        context,
        tuple(tuple(scalar.lift(v, context) for v in row) for row in rows))

  @classmethod
  def from_columns(cls, columns: Sequence[ExactVector]) -> 'ExactMatrix':
    return cls.from_rows(
        ([column[i] for column in columns] for i in range(len(columns[0]))))

  @classmethod
  def identity(
      cls, n: int,
      context: scalar.FieldContext = scalar.RATIONAL) -> 'ExactMatrix':
    return cls.from_rows(
        ([1 if i == j else 0 for j in range(n)] for i in range(n)), context)

  @classmethod
  def diagonal(
      cls,
      values: Sequence[ScalarLike],
      context: Optional[scalar.FieldContext] = None) -> 'ExactMatrix':
    n = len(values)
    return cls.from_rows(
        ([values[i] if i == j else 0 for j in range(n)] for i in range(n)),
        context)

  @property
  def n_rows(self) -> int:
    return len(self.rows)

  @property
  def n_cols(self) -> int:
    return len(self.rows[0])

  @property
  def is_square(self) -> bool:
    return self.n_rows == self.n_cols

  def __getitem__(self, index: Tuple[int, int]) -> scalar.FieldElement:
    i, j = index
    return self.rows[i][j]

  def entries(self) -> Iterator[scalar.FieldElement]:
    for row in self.rows:
      yield from row

  def column(self, j: int) -> ExactVector:
    return ExactVector(self.context, tuple(row[j] for row in self.rows))

  def columns(self) -> List[ExactVector]:
    return [self.column(j) for j in range(self.n_cols)]

  def transpose(self) -> 'ExactMatrix':
    return ExactMatrix(self.context, tuple(zip(*self.rows)))

  def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
    return mat_mul(self, other)

  def apply(self, vector: ExactVector) -> ExactVector:
    if self.n_cols != len(vector):
      raise error.DimensionMismatch('{}x{} matrix applied to length {}'.format(
          self.n_rows, self.n_cols, len(vector)))
    return ExactVector.of(
        (ExactVector(self.context, row).dot(vector) for row in self.rows),
        self.context.join(vector.context))

  def scale(self, factor: ScalarLike) -> 'ExactMatrix':
    return ExactMatrix.from_rows(
        ((factor * x for x in row) for row in self.rows), self.context)

  def _check_shape(self, other: 'ExactMatrix') -> None:
    if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
      raise error.DimensionMismatch('Shapes {}x{} and {}x{} differ'.format(
          self.n_rows, self.n_cols, other.n_rows, other.n_cols))

  def __add__(self, other: 'ExactMatrix') -> 'ExactMatrix':
    self._check_shape(other)
    return ExactMatrix.from_rows(
        ((x + y for x, y in zip(row, other_row))
         for row, other_row in zip(self.rows, other.rows)), self.context)

  def __sub__(self, other: 'ExactMatrix') -> 'ExactMatrix':
    return self + (-other)

  def __neg__(self) -> 'ExactMatrix':
    return ExactMatrix(self.context,
                       tuple(tuple(-x for x in row) for row in self.rows))

  def is_identity(self) -> bool:
    if not self.is_square:
      return False
    return all(entry == (1 if i == j else 0)
               for i, row in enumerate(self.rows)
               for j, entry in enumerate(row))

  def as_fractions(self) -> Tuple[Tuple[fractions.Fraction, ...], ...]:
    return tuple(tuple(x.as_rational() for x in row) for row in self.rows)

  def __eq__(self, other) -> bool:
    if not isinstance(other, ExactMatrix):
      return NotImplemented
    return self.rows == other.rows

  def __hash__(self) -> int:
    return hash(self.rows)

  def __repr__(self) -> str:
    return 'ExactMatrix([{}])'.format(', '.join(
        '[{}]'.format(', '.join(str(x) for x in row)) for row in self.rows))


def _assemble(context: scalar.FieldContext,
              rows: Iterable[Iterable[scalar.FieldElement]]) -> ExactMatrix:
  # Shapes are already consistent; only the contexts need lifting.
  return ExactMatrix(
      context,
      tuple(tuple(scalar.lift(v, context) for v in row) for row in rows))


def mat_mul(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
  if x.n_cols != y.n_rows:
    raise error.DimensionMismatch('Cannot multiply {}x{} by {}x{}'.format(
        x.n_rows, x.n_cols, y.n_rows, y.n_cols))
  context = x.context.join(y.context)
  y_columns = y.columns()
  return _assemble(
      context, ([ExactVector(context, row).dot(column)
                 for column in y_columns]
                for row in x.rows))


def _require_square(x: ExactMatrix) -> None:
  if not x.is_square:
    raise error.DimensionMismatch('Expected a square matrix, got {}x{}'.format(
        x.n_rows, x.n_cols))


def _cofactor_determinant(rows: Sequence[Sequence[scalar.FieldElement]],
                          context: scalar.FieldContext) -> scalar.FieldElement:
  n = len(rows)
  if n == 1:
    return rows[0][0]
  if n == 2:
    return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
  total = context.zero()
  for j in range(n):
    minor = [row[:j] + row[j + 1:] for row in rows[1:]]
    term = rows[0][j] * _cofactor_determinant(minor, context)
    total = total + term if j % 2 == 0 else total - term
  return total


def _bareiss_determinant(x: ExactMatrix) -> scalar.FieldElement:
  n = x.n_rows
  a = [list(row) for row in x.rows]
  sign = 1
  previous = x.context.one()
  for k in range(n - 1):
    if a[k][k].is_zero():
      swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
      if swap is None:
        return x.context.zero()
      a[k], a[swap] = a[swap], a[k]
      sign = -sign
    for i in range(k + 1, n):
      for j in range(k + 1, n):
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous
    previous = a[k][k]
  return a[n - 1][n - 1] * sign


def determinant(x: ExactMatrix) -> scalar.FieldElement:
  """Exact determinant; cofactor expansion up to 3x3, Bareiss beyond."""
  _require_square(x)
  if x.n_rows <= 3:
    return scalar.lift(_cofactor_determinant(x.rows, x.context), x.context)
  return _bareiss_determinant(x)


def _rational_inverse(x: ExactMatrix) -> ExactMatrix:
  n = x.n_rows
  rows = [[QQ(e.r.numerator, e.r.denominator) for e in row] for row in x.rows]
  try:
    inverted = DomainMatrix(rows, (n, n), QQ).inv()
  except DMNonInvertibleMatrixError:
    raise error.SingularMatrix('Matrix is singular')
  return _assemble(
      x.context,
      ([scalar.FieldElement(x.context, fractions.Fraction(int(e.p), int(e.q)))
        for e in row]
       for row in inverted.to_Matrix().tolist()))


def inverse(x: ExactMatrix) -> ExactMatrix:
  """Inverts x exactly.

  Rational matrices are inverted over QQ by sympy. Otherwise x goes through
  fraction-free Gauss-Jordan elimination: each step replaces row i by
  (pivot * row_i - a_ik * row_k) / previous_pivot, which keeps the left block
  diagonal once its column has been cleared. The inverse is then the right
  block with every row divided by its diagonal entry.

  Args:
    x: Square matrix.

  Returns:
    The exact inverse.

  Raises:
    SingularMatrix: x has determinant zero.
  """
  _require_square(x)
  if is_rational_matrix(x):
    return _rational_inverse(x)
  n = x.n_rows
  context = x.context
  a = [
      list(row) + [context.one() if i == j else context.zero()
                   for j in range(n)] for i, row in enumerate(x.rows)
  ]
  previous = context.one()
  for k in range(n):
    if a[k][k].is_zero():
      swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
      if swap is None:
        raise error.SingularMatrix('Matrix is singular')
      a[k], a[swap] = a[swap], a[k]
    pivot = a[k][k]
    for i in range(n):
      if i == k:
        continue
      factor = a[i][k]
      a[i] = [(pivot * a[i][j] - factor * a[k][j]) / previous
              for j in range(2 * n)]
    previous = pivot
  return _assemble(
      context, ([entry / a[i][i] for entry in a[i][n:]] for i in range(n)))


def transpose(x: ExactMatrix) -> ExactMatrix:
  return x.transpose()


def gram(x: ExactMatrix) -> ExactMatrix:
  """Returns the matrix of inner products of the columns of x."""
  _require_square(x)
  return mat_mul(x.transpose(), x)


def is_orthogonal(x: ExactMatrix) -> bool:
  if not x.is_square:
    return False
  return gram(x).is_identity()


def is_rational_matrix(x: ExactMatrix) -> bool:
  return all(entry.is_rational() for entry in x.entries())


def first_irrational_entry(
    x: ExactMatrix) -> Optional[Tuple[int, int, scalar.FieldElement]]:
  for i, row in enumerate(x.rows):
    for j, entry in enumerate(row):
      if not entry.is_rational():
        return i, j, entry
  return None


def outer(v: ExactVector, w: ExactVector) -> ExactMatrix:
  return ExactMatrix.from_rows(([x * y for y in w] for x in v),
                               v.context.join(w.context))

