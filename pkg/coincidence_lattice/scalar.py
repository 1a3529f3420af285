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
"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt(d)).

Every element is stored as r + s*sqrt(d) with r and s reduced fractions, so two
elements are equal exactly when their components are. A FieldContext fixes the
radicand; rational-only elements coerce into any quadratic context, while
elements of two different quadratic fields never mix.

Scalars are written and read with the grammar

  RATIONAL := ['-'] DIGITS [ '/' POSDIGITS ]
  SCALAR   := RATIONAL [ ('+'|'-') RATIONAL '*' 'sqrt(' POSDIGITS ')' ]

for example "2/3", "-19/21" or "0+4/21*sqrt(5)".
"""

import dataclasses
import fractions
import functools
import math
import operator
import re
from typing import Callable, FrozenSet, Optional, Union

import immutabledict
import sympy

from coincidence_lattice import error

Rational = fractions.Fraction
RationalLike = Union[int, fractions.Fraction]

_ZERO = fractions.Fraction(0)


def _is_square_free(d: int) -> bool:
  return all(exponent == 1 for exponent in sympy.factorint(d).values())


@dataclasses.dataclass(frozen=True)
class FieldContext:
  """The number field housing a computation: Q when d is 0, else Q(sqrt(d))."""
  d: int = 0

  def __post_init__(self):
    if self.d == 0:
      return
    if self.d < 2 or not _is_square_free(self.d):
      raise error.InvalidRadicand(
          'Radicand must be a square-free integer >= 2, got {}'.format(self.d))

  @property
  def is_rational_only(self) -> bool:
    return self.d == 0

  def element(self, r: RationalLike = 0, s: RationalLike = 0) -> 'FieldElement':
    return FieldElement(self, r, s)

  def zero(self) -> 'FieldElement':
    return FieldElement(self)

  def one(self) -> 'FieldElement':
    return FieldElement(self, 1)

  def sqrt_d(self) -> 'FieldElement':
    if self.is_rational_only:
      raise error.FieldMismatch('The rational field has no surd')
    return FieldElement(self, 0, 1)

  def join(self, other: 'FieldContext') -> 'FieldContext':
    """Returns the smallest context holding elements of both contexts."""
    if other.d == self.d or other.is_rational_only:
      return self
    if self.is_rational_only:
      return other
    raise error.FieldMismatch(
        'Cannot combine Q(sqrt({})) with Q(sqrt({}))'.format(self.d, other.d))

  def __str__(self) -> str:
    if self.is_rational_only:
      return 'Q'
    return 'Q(sqrt({}))'.format(self.d)


RATIONAL = FieldContext()


def _sign_of(value: fractions.Fraction) -> int:
  return (value > 0) - (value < 0)


def _rational_sqrt(value: fractions.Fraction) -> Optional[fractions.Fraction]:
  if value < 0:
    return None
  numerator_root = math.isqrt(value.numerator)
  denominator_root = math.isqrt(value.denominator)
  if (numerator_root * numerator_root != value.numerator or
      denominator_root * denominator_root != value.denominator):
    return None
  return fractions.Fraction(numerator_root, denominator_root)


@functools.total_ordering
@dataclasses.dataclass(frozen=True, eq=False)
class FieldElement:
  """The exact real number r + s*sqrt(d) of a fixed FieldContext."""
  context: FieldContext = RATIONAL
  r: RationalLike = 0
  s: RationalLike = 0

  def __post_init__(self):
    r = fractions.Fraction(self.r)
    s = fractions.Fraction(self.s)
    if s and self.context.is_rational_only:
      raise error.FieldMismatch(
          'A rational-only context cannot hold a surd part ({})'.format(s))
    object.__setattr__(self, 'r', r)
    object.__setattr__(self, 's', s)

  @classmethod
  def _of(cls, context: FieldContext, r: fractions.Fraction,
          s: fractions.Fraction) -> 'FieldElement':
    # Arithmetic results are already Fractions that respect the context.
    element = object.__new__(cls)
    object.__setattr__(element, 'context', context)
    object.__setattr__(element, 'r', r)
    object.__setattr__(element, 's', s)
    return element

  def _coerce(self, other) -> 'FieldElement':
    if isinstance(other, FieldElement):
      return other
    if isinstance(other, (int, fractions.Fraction)):
      return FieldElement(self.context, other)
    return NotImplemented

  def __add__(self, other) -> 'FieldElement':
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    return FieldElement._of(
        self.context.join(other.context), self.r + other.r, self.s + other.s)

  __radd__ = __add__

  def __neg__(self) -> 'FieldElement':
    return FieldElement._of(self.context, -self.r, -self.s)

  def __pos__(self) -> 'FieldElement':
    return self

  def __sub__(self, other) -> 'FieldElement':
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other) -> 'FieldElement':
    return (-self) + other

  def __mul__(self, other) -> 'FieldElement':
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    context = self.context.join(other.context)
    if not self.s and not other.s:
      return FieldElement._of(context, self.r * other.r, _ZERO)
    return FieldElement._of(context,
                            self.r * other.r + self.s * other.s * context.d,
                            self.r * other.s + self.s * other.r)

  __rmul__ = __mul__

  def conjugate(self) -> 'FieldElement':
    return FieldElement(self.context, self.r, -self.s)

  def norm(self) -> fractions.Fraction:
    return self.r * self.r - self.s * self.s * self.context.d

  def inverse(self) -> 'FieldElement':
    if self.is_zero():
      raise error.DivisionByZero('Division by zero in {}'.format(self.context))
    if not self.s:
      return FieldElement._of(self.context, 1 / self.r, _ZERO)
    # The norm of a nonzero element is nonzero because d is not a square.
    norm = self.norm()
    return FieldElement._of(self.context, self.r / norm, -self.s / norm)

  def __truediv__(self, other) -> 'FieldElement':
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    if not self.s and not other.s and other.r:
      return FieldElement._of(
          self.context.join(other.context), self.r / other.r, _ZERO)
    return self * other.inverse()

  def __rtruediv__(self, other) -> 'FieldElement':
    return self.inverse() * other

  def __pow__(self, exponent: int) -> 'FieldElement':
    if exponent < 0:
      return self.inverse()**(-exponent)
    result = self.context.one()
    for _ in range(exponent):
      result = result * self
    return result

  def __eq__(self, other) -> bool:
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    if self.r != other.r or self.s != other.s:
      return False
    return not self.s or self.context.d == other.context.d

  def __lt__(self, other) -> bool:
    other = self._coerce(other)
    if other is NotImplemented:
      return NotImplemented
    return (self - other).sign() < 0

  def __hash__(self) -> int:
    if not self.s:
      return hash(self.r)
    return hash((self.r, self.s, self.context.d))

  def __abs__(self) -> 'FieldElement':
    return -self if self.sign() < 0 else self

  def __bool__(self) -> bool:
    return not self.is_zero()

  def is_zero(self) -> bool:
    return not self.r and not self.s

  def is_rational(self) -> bool:
    return not self.s

  def as_rational(self) -> fractions.Fraction:
    if self.s:
      raise error.IrrationalEntries('{} is not rational'.format(self))
    return self.r

  def sign(self) -> int:
    """Returns the sign of the real value, decided without approximation."""
    r_sign = _sign_of(self.r)
    s_sign = _sign_of(self.s)
    if not s_sign:
      return r_sign
    if not r_sign or r_sign == s_sign:
      return s_sign
    # Opposite signs: the larger of r^2 and s^2*d wins; they never tie.
    if self.r * self.r > self.s * self.s * self.context.d:
      return r_sign
    return s_sign

  def sqrt(self) -> Optional['FieldElement']:
    """Returns the nonnegative square root if it lies in the same field."""
    if self.sign() < 0:
      return None
    context = self.context
    if self.is_rational():
      root = _rational_sqrt(self.r)
      if root is not None:
        return FieldElement(context, root)
      if context.is_rational_only:
        return None
      root = _rational_sqrt(self.r / context.d)
      if root is None:
        return None
      return FieldElement(context, 0, root)
    # (x + y*sqrt(d))^2 = x^2 + d*y^2 + 2*x*y*sqrt(d), so x^2 solves
    # t^2 - r*t + d*s^2/4 = 0.
    discriminant = _rational_sqrt(self.norm())
    if discriminant is None:
      return None
    for x_squared in ((self.r + discriminant) / 2, (self.r - discriminant) / 2):
      x = _rational_sqrt(x_squared)
      if not x:
        continue
      root = FieldElement(context, x, self.s / (2 * x))
      return abs(root)
    return None

  def __str__(self) -> str:
    return format_scalar(self)

  def __repr__(self) -> str:
    return 'FieldElement({!r})'.format(format_scalar(self))


_OPERATIONS = immutabledict.immutabledict({
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
})  # type: immutabledict.immutabledict[str, Callable[..., FieldElement]]


def arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
  """Applies one of 'add', 'sub', 'mul' or 'div' to two field elements."""
  try:
    operation = _OPERATIONS[op]
  except KeyError:
    raise error.ValidationError('Unknown operation {!r}'.format(op))
  return operation(x, y)


def is_rational(x: FieldElement) -> bool:
  return x.is_rational()


def sign(x: FieldElement) -> int:
  return x.sign()


def prime_support(x: RationalLike) -> FrozenSet[int]:
  """Returns the primes dividing the denominator of x in lowest terms."""
  return frozenset(sympy.primefactors(fractions.Fraction(x).denominator))


def lift(value: Union[FieldElement, RationalLike],
         context: FieldContext = RATIONAL) -> FieldElement:
  """Returns value as a FieldElement of (at least) the given context."""
  if isinstance(value, FieldElement):
    joined = value.context.join(context)
    if joined == value.context:
      return value
    return FieldElement._of(joined, value.r, value.s)
  return FieldElement(context, value)


def format_scalar(x: FieldElement) -> str:
  if not x.s:
    return str(x.r)
  return '{}{}{}*sqrt({})'.format(x.r, '+' if x.s > 0 else '-', abs(x.s),
                                  x.context.d)


_RATIONAL_RE = re.compile(r'-?(\d+)(?:/(\d+))?')
_SIGN_RE = re.compile(r'[+-]')
_SURD_RE = re.compile(r'\*sqrt\((\d+)\)')


class _ScalarScanner:
  """Consumes one SCALAR from the front of a string."""

  def __init__(self, text: str):
    self._text = text
    self._pos = 0

  def expect(self, pattern: 're.Pattern[str]', what: str) -> 're.Match[str]':
    match = pattern.match(self._text, self._pos)
    if not match:
      raise error.ParseError('expected {}'.format(what), self._pos)
    self._pos = match.end()
    return match

  def rational(self) -> fractions.Fraction:
    match = self.expect(_RATIONAL_RE, 'a rational number')
    if match.group(2) is not None and not int(match.group(2)):
      raise error.ParseError('zero denominator', match.start(2))
    return fractions.Fraction(match.group(0))

  def done(self) -> bool:
    return self._pos == len(self._text)


def parse_scalar(text: str,
                 context: Optional[FieldContext] = RATIONAL) -> FieldElement:
  """Parses SCALAR text into the given context.

  Args:
    text: Scalar in the file grammar, e.g. "0+4/21*sqrt(5)".
    context: Field the value must belong to. When None, the context is taken
      from the radicand in the text (rational-only if there is none).

  Returns:
    The canonical FieldElement.

  Raises:
    ParseError: the text is malformed or its radicand differs from context.
  """
  text = text.strip()
  scanner = _ScalarScanner(text)
  r = scanner.rational()
  if scanner.done():
    return FieldElement(context or RATIONAL, r)
  sign_text = scanner.expect(_SIGN_RE, "'+' or '-'").group(0)
  s = scanner.rational()
  surd = scanner.expect(_SURD_RE, "'*sqrt(<radicand>)'")
  if not scanner.done():
    raise error.ParseError('unexpected trailing text', surd.end())
  radicand = int(surd.group(1))
  if context is None:
    try:
      context = FieldContext(radicand)
    except error.InvalidRadicand as e:
      raise error.ParseError(str(e), surd.start(1))
  elif radicand != context.d:
    raise error.ParseError(
        'radicand {} does not belong to {}'.format(radicand, context),
        surd.start(1))
  if sign_text == '-':
    s = -s
  return FieldElement(context, r, s)
