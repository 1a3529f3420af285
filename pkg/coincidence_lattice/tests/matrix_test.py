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
"""Tests for coincidence_lattice.matrix."""

import logging
import random
import unittest

from absl.testing import parameterized

from coincidence_lattice import error
from coincidence_lattice import matrix
from coincidence_lattice import reflection
from coincidence_lattice.testlib import samplers
from coincidence_lattice.tests import matrices

F = matrices.F
I2 = matrix.ExactMatrix.identity(2)


class ExactVectorTest(parameterized.TestCase):

  def test_dot(self):
    a2 = matrices.STRUCTURE.column(1)
    self.assertEqual(1, a2.dot(a2))
    self.assertEqual(F(2, 3), matrices.STRUCTURE.column(0).dot(a2))

  def test_arithmetic(self):
    v = matrix.ExactVector.of([1, 2])
    w = matrix.ExactVector.of([F(1, 2), matrices.SQRT5])
    self.assertEqual(matrices.Q5, (v + w).context)
    self.assertEqual(
        matrix.ExactVector.of([F(1, 2), 2 - matrices.SQRT5]), v - w)
    self.assertEqual(matrix.ExactVector.of([3, 6]), v.scale(3))
    self.assertTrue((v - v).is_zero())

  def test_length_mismatch(self):
    with self.assertRaises(error.DimensionMismatch):
      matrix.ExactVector.of([1, 2]).dot(matrix.ExactVector.of([1, 2, 3]))


class ExactMatrixTest(parameterized.TestCase):

  def test_ragged_rows(self):
    with self.assertRaises(error.DimensionMismatch):
      matrix.ExactMatrix.from_rows([[1, 2], [3]])

  def test_from_columns(self):
    self.assertEqual(
        matrices.STRUCTURE,
        matrix.ExactMatrix.from_columns(matrices.STRUCTURE.columns()))

  @parameterized.named_parameters(
      ('identity', I2, matrices.ROTATION, matrices.ROTATION),
      ('example_reflection', matrices.FIRST_REFLECTION, matrices.ROTATION,
       matrices.FLIP),
      ('diagonal', matrix.ExactMatrix.diagonal([2, 3]),
       matrix.ExactMatrix.diagonal([F(1, 2), F(1, 3)]), I2),
  )
  def test_mat_mul(self, x, y, expected):
    self.assertEqual(expected, matrix.mat_mul(x, y))

  def test_mat_mul_dimension_mismatch(self):
    with self.assertRaises(error.DimensionMismatch):
      matrix.mat_mul(I2, matrix.ExactMatrix.identity(3))

  def test_mat_mul_field_mismatch(self):
    with self.assertRaises(error.FieldMismatch):
      matrix.mat_mul(matrices.ROTATION, matrices.ROTATION_45)

  @parameterized.named_parameters(
      ('identity', I2, I2),
      ('structure', matrices.STRUCTURE, matrices.STRUCTURE_INVERSE),
      ('rotation', matrices.ROTATION, matrices.ROTATION.transpose()),
  )
  def test_inverse(self, x, expected):
    self.assertEqual(expected, matrix.inverse(x))

  def test_inverse_singular(self):
    with self.assertRaises(error.SingularMatrix):
      matrix.inverse(matrix.ExactMatrix.from_rows([[1, 1], [1, 1]]))

  def test_inverse_keeps_context(self):
    x = matrix.ExactMatrix.from_rows([[2, 1], [1, 1]], matrices.Q5)
    inverse = matrix.inverse(x)
    self.assertEqual(
        matrix.ExactMatrix.from_rows([[1, -1], [-1, 2]]), inverse)
    self.assertEqual(matrices.Q5, inverse.context)
    for entry in inverse.entries():
      self.assertEqual(matrices.Q5, entry.context)

  def test_inverse_singular_quadratic(self):
    s = matrices.SQRT5
    with self.assertRaises(error.SingularMatrix):
      matrix.inverse(matrix.ExactMatrix.from_rows([[s, s], [1, 1]]))

  def test_inverse_needs_pivoting(self):
    x = matrix.ExactMatrix.from_rows([[0, 1, 0], [0, 0, 2], [3, 0, 0]])
    self.assertTrue((x @ matrix.inverse(x)).is_identity())

  def test_inverse_random(self):
    rng = random.Random(0)
    for trial in range(1000):
      n = rng.randint(1, 5)
      if trial % 2:
        context = samplers.quadratic_context(rng)
        x = samplers.rational_matrix(rng, n) @ reflection.reflection_matrix(
            samplers.quadratic_vector(rng, n, context))
      else:
        x = samplers.rational_matrix(rng, n)
      self.assertTrue((x @ matrix.inverse(x)).is_identity(), x)

  @parameterized.named_parameters(
      ('identity', I2, 1),
      ('structure', matrices.STRUCTURE, matrices.SQRT5 / 3),
      ('triangular', matrix.ExactMatrix.from_rows([[2, 1], [0, 1]]), 2),
      ('bareiss', matrix.ExactMatrix.diagonal([1, 2, 3, 4]), 24),
      ('bareiss_singular',
       matrix.ExactMatrix.from_rows([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1],
                                     [1, 0, 1, 0]]), 0),
      ('bareiss_swap',
       matrix.ExactMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0],
                                     [0, 0, 0, 1]]), -1),
  )
  def test_determinant(self, x, expected):
    self.assertEqual(expected, matrix.determinant(x))

  def test_determinant_multiplicative(self):
    rng = random.Random(1)
    for _ in range(200):
      n = rng.randint(1, 5)
      x = samplers.rational_matrix(rng, n)
      y = samplers.rational_matrix(rng, n)
      self.assertEqual(
          matrix.determinant(x) * matrix.determinant(y),
          matrix.determinant(x @ y))

  @parameterized.named_parameters(
      ('identity', I2, I2),
      ('structure', matrices.STRUCTURE,
       matrix.ExactMatrix.from_rows([[1, F(2, 3)], [F(2, 3), 1]])),
      ('surd', matrix.ExactMatrix.from_rows([[1, 1], [0, matrices.SQRT2]]),
       matrix.ExactMatrix.from_rows([[1, 1], [1, 3]])),
  )
  def test_gram(self, x, expected):
    self.assertEqual(expected, matrix.gram(x))

  @parameterized.named_parameters(
      ('rotation', matrices.ROTATION, True),
      ('identity', I2, True),
      ('stretch', matrix.ExactMatrix.diagonal([2, 1]), False),
      ('rectangular', matrix.ExactMatrix.from_rows([[1, 0]]), False),
  )
  def test_is_orthogonal(self, x, expected):
    self.assertEqual(expected, matrix.is_orthogonal(x))

  def test_orthogonal_inverse_is_transpose(self):
    rng = random.Random(2)
    for _ in range(50):
      n = rng.randint(2, 4)
      x, _ = samplers.reflection_word(rng, n, rng.randint(1, n))
      self.assertTrue(matrix.is_orthogonal(x))
      self.assertEqual(x.transpose(), matrix.inverse(x))
      self.assertEqual(matrix.gram(x), matrix.gram(x).transpose())

  @parameterized.named_parameters(
      ('conjugate', matrices.ROTATION_CONJUGATE, True),
      ('rotation', matrices.ROTATION, False),
      ('identity', I2, True),
  )
  def test_is_rational_matrix(self, x, expected):
    self.assertEqual(expected, matrix.is_rational_matrix(x))

  def test_first_irrational_entry(self):
    self.assertEqual((0, 1, matrices.SQRT5 * F(-4, 21)),
                     matrix.first_irrational_entry(matrices.ROTATION))
    self.assertIsNone(matrix.first_irrational_entry(I2))


if __name__ == '__main__':
  logging.basicConfig()
  unittest.main()
