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
"""Seeded random matrices and lattices for tests."""

import fractions
import random
from typing import List, Tuple

from coincidence_lattice import integer_lattice
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import reflection
from coincidence_lattice import scalar

RADICANDS = (2, 3, 5, 6, 7)


def integer_vector(rng: random.Random, n: int, bound: int) -> Tuple[int, ...]:
  """Returns a nonzero vector with entries in [-bound, bound]."""
  while True:
    v = tuple(rng.randint(-bound, bound) for _ in range(n))
    if any(v):
      return v


def int_matrix(rng: random.Random, n: int,
               bound: int = 20) -> integer_lattice.IntMatrix:
  """Returns a full-rank n x n integer matrix."""
  while True:
    m = integer_lattice.IntMatrix.of(
        [rng.randint(-bound, bound) for _ in range(n)] for _ in range(n))
    if m.determinant():
      return m


def rational_matrix(rng: random.Random, n: int,
                    bound: int = 5) -> matrix.ExactMatrix:
  """Returns a nonsingular n x n matrix of small fractions."""
  while True:
    m = matrix.ExactMatrix.from_rows(
        [fractions.Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
         for _ in range(n)]
        for _ in range(n))
    if not matrix.determinant(m).is_zero():
      return m


def reflection_word(
    rng: random.Random,
    n: int,
    length: int,
    bound: int = 9) -> Tuple[matrix.ExactMatrix, List[Tuple[int, ...]]]:
  """Returns the product of `length` reflections by random integer vectors."""
  vectors = [integer_vector(rng, n, bound) for _ in range(length)]
  product = matrix.ExactMatrix.identity(n)
  for v in vectors:
    product = product @ reflection.reflection_matrix(matrix.ExactVector.of(v))
  return product, vectors


def quadratic_context(rng: random.Random) -> scalar.FieldContext:
  return scalar.FieldContext(rng.choice(RADICANDS))


def quadratic_vector(rng: random.Random, n: int,
                     context: scalar.FieldContext) -> matrix.ExactVector:
  while True:
    v = matrix.ExactVector.of(
        (context.element(rng.randint(-3, 3), rng.randint(-3, 3))
         for _ in range(n)), context)
    if not v.is_zero():
      return v


def reflective_lattice(rng: random.Random, n: int) -> lattice_module.Lattice:
  """Returns A = c·R_v·B with B rational, v over Q(sqrt(d)), c^2 rational.

  The Gram matrix c^2·B^T·B is rational while A generally is not.
  """
  context = quadratic_context(rng)
  b = rational_matrix(rng, n)
  r = reflection.reflection_matrix(quadratic_vector(rng, n, context))
  c = rng.choice([context.one(), context.sqrt_d()])
  return lattice_module.Lattice((r @ b).scale(c))


def non_reflective_lattice(rng: random.Random,
                           n: int) -> lattice_module.Lattice:
  """Returns A = B·diag(1 + sqrt(d), 1, ..., 1) with B rational, n >= 2."""
  context = quadratic_context(rng)
  b = rational_matrix(rng, n)
  stretch = matrix.ExactMatrix.diagonal(
      [context.element(1, 1)] + [context.one()] * (n - 1), context)
  return lattice_module.Lattice(b @ stretch)
