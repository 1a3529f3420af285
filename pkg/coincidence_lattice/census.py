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
"""Prime supports of reflection denominators in OC(Z^n).

Sums and products of rational numbers never introduce a denominator prime
that none of the inputs had, so a finite set of generators would bound the
primes in every denominator of OC(Z^n). The reflection by e1 + y·e2 has first
column ((y^2 - 1) / (y^2 + 1), -2y / (y^2 + 1), 0, ...), and a suitable y
always produces a prime outside any given finite budget.
"""

import dataclasses
import logging
import math
from typing import FrozenSet, Iterable, Iterator, List, Optional

import sympy

from coincidence_lattice import error
from coincidence_lattice import matrix
from coincidence_lattice import reflection
from coincidence_lattice import scalar

_logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 10000


@dataclasses.dataclass(frozen=True)
class PrimeBudget:
  """A finite set of primes allowed in denominators."""
  primes: FrozenSet[int] = frozenset()

  def __post_init__(self):
    primes = frozenset(self.primes)
    for p in primes:
      if not sympy.isprime(p):
        raise error.ValidationError('{} is not a prime'.format(p))
    object.__setattr__(self, 'primes', primes)

  def __len__(self) -> int:
    return len(self.primes)

  def __contains__(self, p: int) -> bool:
    return p in self.primes

  def __iter__(self) -> Iterator[int]:
    return iter(sorted(self.primes))

  def union(self, primes: Iterable[int]) -> 'PrimeBudget':
    return PrimeBudget(self.primes | frozenset(primes))


def matrix_prime_support(m: matrix.ExactMatrix) -> FrozenSet[int]:
  """Returns every prime dividing a reduced denominator of an entry of m.

  Raises:
    IrrationalEntries: m has an irrational entry.
  """
  support = set()
  for entry in m.entries():
    support |= scalar.prime_support(entry.as_rational())
  return frozenset(support)


def reflection_e1_plus_y_e2(y: int, n: int) -> matrix.ExactMatrix:
  if n < 2:
    raise error.DimensionMismatch(
        'e1 + y*e2 needs dimension at least 2, got {}'.format(n))
  return reflection.reflection_matrix(
      matrix.ExactVector.of([1, y] + [0] * (n - 2)))


@dataclasses.dataclass(frozen=True)
class EscapeWitness:
  y: int
  prime: int


def _fresh_prime(y: int, budget: PrimeBudget) -> Optional[int]:
  fresh = matrix_prime_support(reflection_e1_plus_y_e2(y, 2)) - budget.primes
  return min(fresh) if fresh else None


def escape_witness(budget: PrimeBudget,
                   exhaustive: bool = True,
                   search_limit: int = DEFAULT_SEARCH_LIMIT) -> EscapeWitness:
  """Finds y whose reflection has a denominator prime outside the budget.

  Args:
    budget: The primes already available.
    exhaustive: Scan y = 1, 2, ... for the smallest witness. When False, or
      when the scan reaches search_limit, y is the product of all primes up to
      the largest prime of the budget, which makes 1 + y^2 coprime to them.
    search_limit: Largest y the scan tries.

  Returns:
    The witness y and the smallest new prime in its reflection's
    denominators.
  """
  if exhaustive:
    for y in range(1, search_limit + 1):
      prime = _fresh_prime(y, budget)
      if prime is not None:
        _logger.debug('y = %s escapes %s with prime %s', y, sorted(budget),
                      prime)
        return EscapeWitness(y, prime)
    _logger.debug('No witness with y <= %s, using the prime product',
                  search_limit)
  largest = max(budget.primes | {2})
  y = math.prod(sympy.primerange(2, largest + 1))
  return EscapeWitness(y, _fresh_prime(y, budget))


@dataclasses.dataclass(frozen=True)
class CensusRound:
  """One escape: the budget before it, the witness and its reflection."""
  budget: PrimeBudget
  y: int
  prime: int
  reflection: matrix.ExactMatrix


def growth_run(rounds: int) -> List[CensusRound]:
  """Repeatedly escapes the budget and absorbs the witness's primes."""
  if rounds < 1:
    raise error.ValidationError(
        'rounds must be at least 1, got {}'.format(rounds))
  budget = PrimeBudget()
  result = []
  for _ in range(rounds):
    witness = escape_witness(budget)
    witness_reflection = reflection_e1_plus_y_e2(witness.y, 2)
    result.append(
        CensusRound(budget, witness.y, witness.prime, witness_reflection))
    budget = budget.union(matrix_prime_support(witness_reflection))
    _logger.debug('Budget grew to %s', sorted(budget))
  return result
