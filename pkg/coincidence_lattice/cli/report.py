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
"""Builds command reports and renders them as JSON or text.

Both renderings come from the same report dict: the structured form is the
dict itself, the human form lists every leaf as `path: value`.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple

from coincidence_lattice import census
from coincidence_lattice import codec
from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import planar
from coincidence_lattice import reflection
from coincidence_lattice import scalar

Report = Dict[str, Any]

STRUCTURED = 'structured'
HUMAN = 'human'
OUTPUT_MODES = (STRUCTURED, HUMAN)


def _rows(m: matrix.ExactMatrix) -> List[List[str]]:
  return codec.matrix_to_document(m)['rows']


def _rejection(result: coincidence.MembershipResult) -> Optional[Report]:
  if isinstance(result, coincidence.NotCoincidence):
    return {
        'kind': 'NotCoincidence',
        'row': str(result.row),
        'column': str(result.column),
        'entry': scalar.format_scalar(result.entry),
    }
  if isinstance(result, coincidence.NotOrthogonal):
    return {'kind': 'NotOrthogonal', 'gram': _rows(result.gram)}
  return None


def check_report(lattice: lattice_module.Lattice, t: matrix.ExactMatrix,
                 result: coincidence.MembershipResult, group: str) -> Report:
  """Membership of T in CSG(L) or OC(L), with M = A^-1·T·A and Sigma."""
  conjugate = coincidence.conjugate(lattice, t)
  member = coincidence.is_member(result)
  return {
      'command': 'check',
      'group': group,
      'member': member,
      'commensurate': matrix.is_rational_matrix(conjugate),
      'orthogonal': matrix.is_orthogonal(t),
      'conjugate': _rows(conjugate),
      'sigma': str(result.sigma) if member else None,
      'certificate': codec.certificate_to_document(result) if member else None,
      'rejection': _rejection(result),
  }


def index_report(result: coincidence.MembershipResult) -> Report:
  member = coincidence.is_member(result)
  return {
      'command': 'index',
      'member': member,
      'sigma': str(result.sigma) if member else None,
  }


def decompose_report(seq: reflection.ReflectionSequence,
                     verified: bool) -> Report:
  return {
      'command': 'decompose',
      'target': _rows(seq.target),
      'vectors': codec.coordinate_rows(seq.vectors),
      'ambient': [[scalar.format_scalar(x)
                   for x in v.ambient]
                  for v in seq.vectors],
      'reflections': [_rows(r) for r in seq.reflections()],
      'verified': verified,
  }


def not_reflective_report(e: error.NotReflectiveLattice) -> Report:
  witness = e.witness  # type: lattice_module.RatioWitness
  return {
      'command': 'decompose',
      'error': 'NotReflectiveLattice',
      'witness': {
          'i': str(witness.i + 1),
          'j': str(witness.j + 1),
          'k': str(witness.k + 1),
          'ratio': scalar.format_scalar(witness.ratio),
      },
  }


def not_isometry_report(e: error.NotCoincidenceIsometry) -> Report:
  return {
      'command': 'decompose',
      'error': 'NotCoincidenceIsometry',
      'message': str(e),
  }


def classify_report(
    classification: planar.PlanarClassification,
    spot_check: Optional[planar.SpotCheckReport] = None) -> Report:
  report = {
      'command': 'classify2d',
      'case': str(classification.case.value),
      'case_name': classification.case.name,
      'description': classification.description,
      'generators': [_rows(g) for g in classification.generators],
      'elements': [_rows(g) for g in classification.elements],
  }
  if spot_check is not None:
    report['spot_check'] = {
        'vectors_sampled': str(spot_check.vectors_sampled),
        'reflections_found': str(spot_check.reflections_found),
        'rotations_sampled': str(spot_check.rotations_sampled),
        'rotations_accepted': str(spot_check.rotations_accepted),
        'consistent': spot_check.consistent,
        'inconsistencies': list(spot_check.inconsistencies),
    }
  return report


def census_report(rounds: Sequence[census.CensusRound]) -> Report:
  return {
      'command': 'census',
      'rounds': [{
          'budget': [str(p) for p in r.budget],
          'y': str(r.y),
          'prime': str(r.prime),
          'reflection': _rows(r.reflection),
      } for r in rounds],
  }


def _is_matrix(value: Any) -> bool:
  return (isinstance(value, list) and bool(value) and
          all(isinstance(row, list) for row in value))


def _text(value: Any) -> str:
  if value is None:
    return '-'
  if isinstance(value, bool):
    return 'true' if value else 'false'
  if isinstance(value, list):
    return '[{}]'.format(', '.join(_text(x) for x in value))
  return str(value)


def flatten(report: Report, prefix: str = '') -> List[Tuple[str, str]]:
  """Lists the leaves of a report as (path, text) in sorted key order."""
  leaves = []
  for key in sorted(report):
    value = report[key]
    path = prefix + key
    if isinstance(value, dict):
      leaves.extend(flatten(value, path + '.'))
    elif isinstance(value, list) and any(
        isinstance(item, dict) or _is_matrix(item) for item in value):
      for i, item in enumerate(value):
        item_path = '{}[{}]'.format(path, i)
        if isinstance(item, dict):
          leaves.extend(flatten(item, item_path + '.'))
        else:
          leaves.append((item_path, _text(item)))
    else:
      leaves.append((path, _text(value)))
  return leaves


def render(report: Report, output: str = STRUCTURED) -> str:
  if output == STRUCTURED:
    return codec.dumps(report)
  return '\n'.join(
      '{}: {}'.format(path, text) for path, text in flatten(report))
