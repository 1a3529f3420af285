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
"""Errors raised to calling code."""

from typing import Optional


class CoincidenceError(Exception):
  pass


class ValidationError(CoincidenceError):
  pass


class ParseError(ValidationError):
  """Raised when scalar or matrix text does not follow the file grammar."""

  def __init__(self,
               message: str,
               position: Optional[int] = None,
               location: Optional[str] = None):
    self.message = message
    self.position = position
    self.location = location
    super().__init__(self._annotate())

  def _annotate(self) -> str:
    prefix = ''
    if self.location:
      prefix = '{}: '.format(self.location)
    if self.position is None:
      return prefix + self.message
    return '{}{} (at offset {})'.format(prefix, self.message, self.position)

  def at(self, location: str) -> 'ParseError':
    """Returns a copy of this error annotated with an outer location."""
    if self.location:
      location = '{}{}'.format(location, self.location)
    return ParseError(self.message, self.position, location)


class InvalidRadicand(ValidationError):
  pass


class FieldMismatch(CoincidenceError):
  pass


class DivisionByZero(CoincidenceError, ZeroDivisionError):
  pass


class DimensionMismatch(CoincidenceError):
  pass


class SingularMatrix(CoincidenceError):
  pass


class IrrationalEntries(CoincidenceError):
  pass


class RankDeficient(CoincidenceError):
  pass


class InvalidClearingMultiple(CoincidenceError):
  pass


class ZeroVector(CoincidenceError):
  pass


class IrrationalCoordinates(CoincidenceError):
  pass


class NotReflectiveLattice(CoincidenceError):
  """Raised when a lattice fails the basis-ratio rationality condition."""

  def __init__(self, message: str, witness=None):
    super().__init__(message)
    self.witness = witness


class NotCoincidenceIsometry(CoincidenceError):
  pass


class InvalidParams(ValidationError):
  pass


class UnrepresentableB(CoincidenceError):
  pass
