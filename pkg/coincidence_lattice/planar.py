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
"""Coincidence isometries of the planar lattices with A = [[a, 1], [0, b]].

For a, b > 0 the group OC(L) depends only on whether a, b^2 and a / (1 + b^2)
are rational:

  a, b^2 rational               generated by reflections in lattice vectors
  a rational, b^2 irrational    {±I, ±R_a1}
  a irrational, a/(1+b^2) rational   {±I, ±R_a2}
  a, a/(1+b^2) irrational       {±I}

The classifier works from (a, b^2) so that b itself never has to be
representable; only spot_check builds the lattice.
"""

import dataclasses
import enum
import fractions
import logging
import random
from typing import List, Tuple

import immutabledict

from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import reflection
from coincidence_lattice import scalar

_logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
# Sampled lattice coordinates and rotation parameters lie in [-9, 9].
_SAMPLE_BOUND = 9


class PlanarCase(enum.Enum):
  REFLECTION_GENERATED = 1
  Z2XZ2_FIX_A1 = 2
  Z2XZ2_FIX_A2 = 3
  CENTER_ONLY = 4


_DESCRIPTIONS = immutabledict.immutabledict({
    PlanarCase.REFLECTION_GENERATED:
        'OC(L) is generated by the reflections defined by the nonzero '
        'vectors of L',
    PlanarCase.Z2XZ2_FIX_A1: 'OC(L) = {±I, ±R_a1} ≅ Z2 x Z2',
    PlanarCase.Z2XZ2_FIX_A2: 'OC(L) = {±I, ±R_a2} ≅ Z2 x Z2',
    PlanarCase.CENTER_ONLY: 'OC(L) = {±I} ≅ Z2',
})


@dataclasses.dataclass(frozen=True)
class PlanarFamilyParams:
  """The positive parameters a and b^2 of the structure matrix."""
  a: scalar.FieldElement
  b_squared: scalar.FieldElement

  def __post_init__(self):
    object.__setattr__(self, 'a', scalar.lift(self.a))
    object.__setattr__(self, 'b_squared', scalar.lift(self.b_squared))
    for name, value in (('a', self.a), ('b^2', self.b_squared)):
      if value.sign() <= 0:
        raise error.InvalidParams('{} must be positive, got {}'.format(
            name, value))
    self.a.context.join(self.b_squared.context)

  @property
  def context(self) -> scalar.FieldContext:
    return self.a.context.join(self.b_squared.context)


@dataclasses.dataclass(frozen=True)
class PlanarClassification:
  """The case of the family and OC(L) in lattice coordinates.

  Attributes:
    case: Which of the four cases holds.
    generators: Rational involutions generating OC(L) modulo ±I; empty in the
      reflection-generated and center-only cases.
    elements: Every element of OC(L) when the group is finite, else empty.
    description: The group in words.
  """
  case: PlanarCase
  generators: Tuple[matrix.ExactMatrix, ...]
  elements: Tuple[matrix.ExactMatrix, ...]
  description: str


def _finite_group(
    generators: Tuple[matrix.ExactMatrix, ...]
) -> Tuple[matrix.ExactMatrix, ...]:
  identity = matrix.ExactMatrix.identity(2)
  elements = [identity, -identity]
  for generator in generators:
    elements.extend([generator, -generator])
  return tuple(elements)


def classify(p: PlanarFamilyParams) -> PlanarClassification:
  """Decides which case of the family the parameters fall in."""
  if p.a.is_rational():
    if p.b_squared.is_rational():
      case = PlanarCase.REFLECTION_GENERATED
      generators = ()
    else:
      case = PlanarCase.Z2XZ2_FIX_A1
      generators = (matrix.ExactMatrix.from_rows(
          [[-1, fractions.Fraction(-2) / p.a.as_rational()], [0, 1]]),)
  else:
    ratio = p.a / (1 + p.b_squared)
    if ratio.is_rational():
      case = PlanarCase.Z2XZ2_FIX_A2
      generators = (matrix.ExactMatrix.from_rows(
          [[1, 0], [-2 * ratio.as_rational(), -1]]),)
    else:
      case = PlanarCase.CENTER_ONLY
      generators = ()
  elements = () if case is PlanarCase.REFLECTION_GENERATED else _finite_group(
      generators)
  return PlanarClassification(case, generators, elements, _DESCRIPTIONS[case])


def build_lattice(p: PlanarFamilyParams) -> lattice_module.Lattice:
  """Returns the lattice [[a, 1], [0, b]], which needs b in the field.

  Raises:
    UnrepresentableB: b^2 has no square root in the parameters' field.
  """
  context = p.context
  b = scalar.lift(p.b_squared, context).sqrt()
  if b is None:
    raise error.UnrepresentableB('b^2 = {} has no square root in {}'.format(
        p.b_squared, context))
  return lattice_module.Lattice(
      matrix.ExactMatrix.from_rows([[p.a, 1], [0, b]], context))


@dataclasses.dataclass(frozen=True)
class SpotCheckReport:
  """Counts from sampling the lattice against its classification."""
  classification: PlanarClassification
  vectors_sampled: int
  reflections_found: int
  rotations_sampled: int
  rotations_accepted: int
  inconsistencies: Tuple[str, ...]

  @property
  def consistent(self) -> bool:
    return not self.inconsistencies


def _parallel(v: matrix.ExactVector, w: matrix.ExactVector) -> bool:
  return (v[0] * w[1] - v[1] * w[0]).is_zero()


def _expected_reflection(case: PlanarCase, lattice: lattice_module.Lattice,
                         v: matrix.ExactVector) -> bool:
  """Whether the classification admits the reflection defined by v."""
  if case is PlanarCase.REFLECTION_GENERATED:
    return True
  if case is PlanarCase.CENTER_ONLY:
    return False
  fixed = lattice.basis()[0 if case is PlanarCase.Z2XZ2_FIX_A1 else 1]
  return _parallel(v, fixed) or v.dot(fixed).is_zero()


def _rational_rotation(t: fractions.Fraction) -> matrix.ExactMatrix:
  c = (1 - t * t) / (1 + t * t)
  s = 2 * t / (1 + t * t)
  return matrix.ExactMatrix.from_rows([[c, -s], [s, c]])


def _sample_coordinates(rng: random.Random) -> Tuple[int, int]:
  while True:
    coordinates = (rng.randint(-_SAMPLE_BOUND, _SAMPLE_BOUND),
                   rng.randint(-_SAMPLE_BOUND, _SAMPLE_BOUND))
    if any(coordinates):
      return coordinates


def spot_check(p: PlanarFamilyParams,
               trials: int = DEFAULT_TRIALS,
               seed: int = DEFAULT_SEED) -> SpotCheckReport:
  """Samples lattice vectors and rational rotations against classify(p).

  Each trial draws a nonzero lattice vector, whose reflection must be a
  coincidence isometry exactly when the case allows it, and a rotation from
  t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), which in the finite cases must
  be accepted exactly when its conjugate is an element of OC(L). Accepted
  rotations in the reflection-generated case must decompose into at most two
  coincidence reflections.

  Raises:
    UnrepresentableB: b is not in the parameters' field.
  """
  classification = classify(p)
  lattice = build_lattice(p)
  rng = random.Random(seed)
  inconsistencies = []  # type: List[str]

  for generator in classification.generators:
    canonical = lattice.structure @ generator @ lattice.inverse_structure
    if not coincidence.is_member(coincidence.oc_member(lattice, canonical)):
      inconsistencies.append('generator {} is not in OC(L)'.format(generator))

  reflections_found = 0
  rotations_accepted = 0
  for _ in range(trials):
    coordinates = _sample_coordinates(rng)
    v = lattice.ambient(coordinates)
    found = lattice_module.vector_defines_coincidence_reflection(lattice, v)
    reflections_found += found
    if found != _expected_reflection(classification.case, lattice, v):
      inconsistencies.append('vector {} {} a coincidence reflection'.format(
          coordinates, 'defines' if found else 'does not define'))

    t = fractions.Fraction(
        rng.randint(-_SAMPLE_BOUND, _SAMPLE_BOUND),
        rng.randint(1, _SAMPLE_BOUND))
    rotation = _rational_rotation(t)
    membership = coincidence.oc_member(lattice, rotation)
    accepted = coincidence.is_member(membership)
    rotations_accepted += accepted
    if classification.case is PlanarCase.REFLECTION_GENERATED:
      if accepted and not reflection.verify(
          reflection.decompose(lattice, rotation), lattice):
        inconsistencies.append(
            'rotation t={} does not decompose into reflections'.format(t))
    elif accepted != (coincidence.conjugate(lattice, rotation)
                      in classification.elements):
      inconsistencies.append('rotation t={} is {} by OC(L)'.format(
          t, 'accepted' if accepted else 'rejected'))

  for message in inconsistencies:
    _logger.debug('Spot check inconsistency: %s', message)
  return SpotCheckReport(classification, trials, reflections_found, trials,
                         rotations_accepted, tuple(inconsistencies))
