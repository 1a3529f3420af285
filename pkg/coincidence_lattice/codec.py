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
"""Documents for matrices, certificates and reflection sequences.

A matrix document is {"d": "<radicand, 0 or absent when rational>",
"rows": [[SCALAR, ...], ...]}. Every numeral is written as a string so that
no consumer loses precision; a radicand given as a JSON integer is also read.
"""

import json
import math
from typing import Any, Dict, List, Mapping, Sequence

from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import integer_lattice
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import reflection
from coincidence_lattice import scalar

Document = Dict[str, Any]


def _require(condition: bool, message: str, location: str) -> None:
  if not condition:
    raise error.ParseError(message, location=location)


def _scalar_rows(m: matrix.ExactMatrix) -> List[List[str]]:
  return [[scalar.format_scalar(x) for x in row] for row in m.rows]


def matrix_to_document(m: matrix.ExactMatrix) -> Document:
  return {'d': str(m.context.d), 'rows': _scalar_rows(m)}


def _parse_rows(rows: Any, context: scalar.FieldContext,
                location: str) -> matrix.ExactMatrix:
  _require(
      isinstance(rows, list) and rows and
      all(isinstance(row, list) and row for row in rows),
      'expected a non-empty array of non-empty arrays', location)
  _require(
      all(len(row) == len(rows[0]) for row in rows),
      'rows have different lengths', location)
  parsed = []
  for i, row in enumerate(rows):
    parsed_row = []
    for j, text in enumerate(row):
      cell = '{}[{}][{}]'.format(location, i, j)
      _require(isinstance(text, str), 'expected a SCALAR string', cell)
      try:
        parsed_row.append(scalar.parse_scalar(text, context))
      except error.ParseError as e:
        raise e.at(cell)
    parsed.append(parsed_row)
  return matrix.ExactMatrix.from_rows(parsed, context)


def matrix_from_document(document: Mapping[str, Any]) -> matrix.ExactMatrix:
  """Parses a matrix document.

  Raises:
    ParseError: the document or one of its scalars is malformed; the message
      names the offending rows[i][j] and the offset inside the scalar.
  """
  _require(isinstance(document, dict), 'expected an object', 'document')
  d = document.get('d', 0)
  if isinstance(d, str):
    d = _parse_integer(d, 'd')
  _require(
      isinstance(d, int) and not isinstance(d, bool),
      'expected an integer radicand', 'd')
  try:
    context = scalar.FieldContext(d)
  except error.InvalidRadicand as e:
    raise error.ParseError(str(e), location='d')
  return _parse_rows(document.get('rows'), context, 'rows')


def loads(text: str) -> Any:
  try:
    return json.loads(text)
  except json.JSONDecodeError as e:
    raise error.ParseError(e.msg, e.pos)


def dumps(document: Any) -> str:
  return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def parse_matrix(text: str) -> matrix.ExactMatrix:
  return matrix_from_document(loads(text))


def print_matrix(m: matrix.ExactMatrix) -> str:
  return dumps(matrix_to_document(m))


def load_matrix_file(path: str) -> matrix.ExactMatrix:
  """Reads a matrix document from a file.

  Raises:
    ValidationError: the file cannot be read.
    ParseError: its contents are malformed; the message is prefixed by path.
  """
  try:
    with open(path, encoding='utf-8') as f:
      text = f.read()
  except UnicodeDecodeError as e:
    raise error.ParseError('not UTF-8 text: {}'.format(e.reason), e.start, path)
  except OSError as e:
    raise error.ValidationError('Cannot read {}: {}'.format(path, e.strerror))
  try:
    return parse_matrix(text)
  except error.ParseError as e:
    if e.location is None:
      raise error.ParseError(e.message, e.position, path)
    raise e.at('{}: '.format(path))


def load_lattice_file(path: str) -> lattice_module.Lattice:
  return lattice_module.Lattice(load_matrix_file(path))


def certificate_to_document(
    certificate: coincidence.CoincidenceCertificate) -> Document:
  basis = certificate.intersection_basis.basis
  return {
      'M': _scalar_rows(certificate.conjugate),
      'sigma': str(certificate.sigma),
      'intersection_basis': [[str(x) for x in row] for row in basis.rows],
      'is_isometry': certificate.is_isometry,
  }


def _parse_integer(text: Any, location: str) -> int:
  _require(isinstance(text, str), 'expected a decimal string', location)
  try:
    return int(text)
  except ValueError:
    raise error.ParseError('{!r} is not an integer'.format(text),
                           location=location)


def _parse_integer_rows(rows: Any, location: str) -> List[List[int]]:
  _require(
      isinstance(rows, list) and all(isinstance(row, list) for row in rows),
      'expected an array of arrays', location)
  return [[
      _parse_integer(text, '{}[{}][{}]'.format(location, i, j))
      for j, text in enumerate(row)
  ]
          for i, row in enumerate(rows)]


def certificate_from_document(
    document: Mapping[str, Any]) -> coincidence.CoincidenceCertificate:
  """Parses a certificate document; M is always rational."""
  _require(isinstance(document, dict), 'expected an object', 'document')
  conjugate = _parse_rows(document.get('M'), scalar.RATIONAL, 'M')
  sigma = _parse_integer(document.get('sigma'), 'sigma')
  basis = integer_lattice.IntMatrix.of(
      _parse_integer_rows(document.get('intersection_basis'),
                          'intersection_basis'))
  is_isometry = document.get('is_isometry')
  _require(isinstance(is_isometry, bool), 'expected a boolean', 'is_isometry')
  return coincidence.CoincidenceCertificate(
      conjugate, sigma, integer_lattice.SublatticeBasis(basis, sigma),
      is_isometry)


def sequence_to_document(seq: reflection.ReflectionSequence) -> Document:
  return {
      'target': matrix_to_document(seq.target),
      'vectors': coordinate_rows(seq.vectors),
  }


def sequence_from_document(
    document: Mapping[str, Any],
    lattice: lattice_module.Lattice) -> reflection.ReflectionSequence:
  """Parses a sequence document, re-deriving ambient vectors from lattice."""
  _require(isinstance(document, dict), 'expected an object', 'document')
  try:
    target = matrix_from_document(document.get('target'))
  except error.ParseError as e:
    raise e.at('target.')
  coordinates = _parse_integer_rows(document.get('vectors'), 'vectors')
  _require(
      len(coordinates) <= lattice.n,
      'expected at most {} vectors'.format(lattice.n), 'vectors')
  vectors = []  # type: List[lattice_module.LatticeVector]
  for i, row in enumerate(coordinates):
    _require(
        len(row) == lattice.n,
        'expected {} coordinates'.format(lattice.n), 'vectors[{}]'.format(i))
    _require(
        math.gcd(*row) == 1, 'expected a primitive vector',
        'vectors[{}]'.format(i))
    vectors.append(
        lattice_module.LatticeVector(tuple(row), lattice.ambient(row)))
  return reflection.ReflectionSequence(tuple(vectors), target)


def coordinate_rows(vectors: Sequence[lattice_module.LatticeVector]
                   ) -> List[List[str]]:
  return [[str(c) for c in v.coordinates] for v in vectors]
