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
"""Tests for coincidence_lattice.cli.scripts."""

import io
import json
import logging
import os
import sys
import tempfile
import unittest
from unittest import mock

from absl.testing import parameterized

from coincidence_lattice.cli import report
from coincidence_lattice.cli import scripts
from coincidence_lattice.tests import matrices

EXAMPLE_LATTICE = matrices.testdata('rotation_lattice.json')
EXAMPLE_MATRIX = matrices.testdata('rotation_matrix.json')
IDENTITY = matrices.testdata('identity.json')
Z2 = matrices.testdata('z2_lattice.json')
ROTATION_45 = matrices.testdata('rotation45.json')
NON_REFLECTIVE = matrices.testdata('nonreflective_lattice.json')
MALFORMED = matrices.testdata('malformed_matrix.json')

SQRT2 = '0+1*sqrt(2)'


def _run(*argv):
  with mock.patch.object(sys, 'stdout', new_callable=io.StringIO) as stdout:
    with mock.patch.object(sys, 'stderr', new_callable=io.StringIO) as stderr:
      code = scripts.main(list(argv))
  return code, stdout.getvalue(), stderr.getvalue()


class ScriptsTestBase(parameterized.TestCase):

  def run_structured(self, *argv):
    code, out, _ = _run(*argv)
    return code, json.loads(out)


class CheckTest(ScriptsTestBase):

  def test_example(self):
    code, result = self.run_structured('check', '--lattice', EXAMPLE_LATTICE,
                                       '--matrix', EXAMPLE_MATRIX)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual('oc', result['group'])
    self.assertTrue(result['member'])
    self.assertTrue(result['commensurate'])
    self.assertTrue(result['orthogonal'])
    self.assertEqual('21', result['sigma'])
    self.assertEqual([['-9/7', '-4/7'], ['4/7', '-11/21']],
                     result['conjugate'])
    self.assertEqual('21', result['certificate']['sigma'])
    self.assertIsNone(result['rejection'])

  def test_identity(self):
    code, result = self.run_structured('check', '--lattice', EXAMPLE_LATTICE,
                                       '--matrix', IDENTITY)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual('1', result['sigma'])

  @parameterized.parameters('oc', 'csg')
  def test_not_coincidence(self, group):
    code, result = self.run_structured('check', '--lattice', Z2, '--matrix',
                                       ROTATION_45, '--group', group)
    self.assertEqual(scripts.EXIT_REJECT, code)
    self.assertFalse(result['member'])
    self.assertFalse(result['commensurate'])
    self.assertIsNone(result['sigma'])
    self.assertEqual(
        {
            'kind': 'NotCoincidence',
            'row': '0',
            'column': '0',
            'entry': '0+1/2*sqrt(2)',
        }, result['rejection'])

  def test_malformed_matrix(self):
    code, out, err = _run('check', '--lattice', EXAMPLE_LATTICE, '--matrix',
                          MALFORMED)
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertEqual('', out)
    self.assertIn('rows[1][1]', err)
    self.assertIn('offset 5', err)

  def test_missing_file(self):
    code, _, err = _run('check', '--lattice', Z2, '--matrix',
                        matrices.testdata('missing.json'))
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertIn('missing.json', err)

  def test_undecodable_file(self):
    with tempfile.TemporaryDirectory() as directory:
      path = os.path.join(directory, 'latin1.json')
      with open(path, 'wb') as f:
        f.write(b'{"rows": [["1\xff", "0"], ["0", "1"]]}')
      code, out, err = _run('check', '--lattice', Z2, '--matrix', path)
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertEqual('', out)
    self.assertIn('offset 13', err)

  def test_long_numerals(self):
    n = 10**5000 + 1
    with tempfile.TemporaryDirectory() as directory:
      path = os.path.join(directory, 'stretch.json')
      with open(path, 'w', encoding='utf-8') as f:
        json.dump({'rows': [[str(n), '0'], ['0', '1/{}'.format(n)]]}, f)
      code, result = self.run_structured('check', '--lattice', Z2, '--matrix',
                                         path, '--group', 'csg')
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertTrue(result['member'])
    self.assertEqual(str(n), result['sigma'])
    self.assertEqual([[str(n), '0'], ['0', '1/{}'.format(n)]],
                     result['conjugate'])

  def test_index(self):
    code, result = self.run_structured('index', '--lattice', EXAMPLE_LATTICE,
                                       '--matrix', EXAMPLE_MATRIX)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual({
        'command': 'index',
        'member': True,
        'sigma': '21'
    }, result)


class DecomposeTest(ScriptsTestBase):

  def test_example(self):
    code, result = self.run_structured('decompose', '--lattice',
                                       EXAMPLE_LATTICE, '--matrix',
                                       EXAMPLE_MATRIX)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual([['-4', '1'], ['2', '-3']], result['vectors'])
    self.assertEqual([['-10/3', '0+1/3*sqrt(5)'], ['0', '0-1*sqrt(5)']],
                     result['ambient'])
    self.assertEqual([['1', '0'], ['0', '-1']], result['reflections'][1])
    self.assertTrue(result['verified'])

  def test_identity(self):
    code, result = self.run_structured('decompose', '--lattice',
                                       EXAMPLE_LATTICE, '--matrix', IDENTITY)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual([], result['vectors'])
    self.assertTrue(result['verified'])

  def test_not_reflective(self):
    code, result = self.run_structured('decompose', '--lattice',
                                       NON_REFLECTIVE, '--matrix', IDENTITY)
    self.assertEqual(scripts.EXIT_REJECT, code)
    self.assertEqual('NotReflectiveLattice', result['error'])
    self.assertEqual({
        'i': '1',
        'j': '2',
        'k': '1',
        'ratio': '0+1/2*sqrt(2)'
    }, result['witness'])

  def test_not_isometry(self):
    code, result = self.run_structured('decompose', '--lattice', Z2,
                                       '--matrix', ROTATION_45)
    self.assertEqual(scripts.EXIT_REJECT, code)
    self.assertEqual('NotCoincidenceIsometry', result['error'])


class Classify2dTest(ScriptsTestBase):

  @parameterized.named_parameters(
      ('square', ['--a', '1', '--b2', '1'], '1', []),
      ('fixes_a1', ['--a', '1', '--b2', SQRT2, '--d', '2'], '2',
       [[['-1', '-2'], ['0', '1']]]),
      ('fixes_a2', ['--a', SQRT2, '--b2', '-1+1*sqrt(2)', '--d', '2'], '3',
       [[['1', '0'], ['-2', '-1']]]),
      ('fixes_a2_attached',
       ['--a=' + SQRT2, '--b2=-1+1*sqrt(2)', '--d', '2'], '3',
       [[['1', '0'], ['-2', '-1']]]),
      ('center', ['--a', SQRT2, '--b2', '1', '--d', '2'], '4', []),
  )
  def test_cases(self, flags, case, generators):
    code, result = self.run_structured('classify2d', *flags)
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual(case, result['case'])
    self.assertEqual(generators, result['generators'])
    self.assertNotIn('spot_check', result)

  def test_center_description(self):
    _, result = self.run_structured('classify2d', '--a', SQRT2, '--b2', '1',
                                    '--d', '2')
    self.assertEqual('CENTER_ONLY', result['case_name'])
    self.assertEqual('OC(L) = {±I} ≅ Z2', result['description'])
    self.assertEqual(
        [[['1', '0'], ['0', '1']], [['-1', '0'], ['0', '-1']]],
        result['elements'])

  def test_spot_check(self):
    code, result = self.run_structured('classify2d', '--a', SQRT2, '--b2', '2',
                                       '--d', '2', '--spot-check', '50')
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    self.assertEqual('50', result['spot_check']['vectors_sampled'])
    self.assertEqual('0', result['spot_check']['reflections_found'])
    self.assertTrue(result['spot_check']['consistent'])

  def test_inconsistent_spot_check(self):
    code, result = self.run_structured('classify2d', '--a', SQRT2, '--b2', '1',
                                       '--d', '2', '--spot-check', '100')
    self.assertEqual(scripts.EXIT_REJECT, code)
    self.assertFalse(result['spot_check']['consistent'])

  @parameterized.named_parameters(
      ('zero_a', ['--a', '0', '--b2', '1']),
      ('square_radicand', ['--a', '1', '--b2', '1', '--d', '4']),
      ('unrepresentable_b', ['--a', '1', '--b2', '2', '--spot-check', '5']),
  )
  def test_input_errors(self, flags):
    code, out, _ = _run('classify2d', *flags)
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertEqual('', out)

  def test_negative_scalar_reaches_classifier(self):
    code, out, err = _run('classify2d', '--a', '-1/2', '--b2', '1')
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertEqual('', out)
    self.assertIn('must be positive', err)

  def test_flag_named_in_parse_error(self):
    code, _, err = _run('classify2d', '--a', '0+1*sqrt(3)', '--b2', '1', '--d',
                        '2')
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertIn('--a', err)

  def test_spot_check_must_be_positive(self):
    with self.assertRaises(SystemExit) as raised:
      _run('classify2d', '--a', '1', '--b2', '1', '--spot-check', '0')
    self.assertEqual(2, raised.exception.code)


class CensusTest(ScriptsTestBase):

  def test_census(self):
    code, result = self.run_structured('census', '--rounds', '3')
    self.assertEqual(scripts.EXIT_ACCEPT, code)
    rounds = result['rounds']
    self.assertEqual(['2', '4', '5'], [r['y'] for r in rounds])
    self.assertEqual(['5', '17', '13'], [r['prime'] for r in rounds])
    self.assertEqual([[], ['5'], ['5', '17']], [r['budget'] for r in rounds])
    self.assertEqual([['3/5', '-4/5'], ['-4/5', '-3/5']],
                     rounds[0]['reflection'])

  @parameterized.parameters('0', '-2', 'x')
  def test_invalid_rounds(self, rounds):
    with self.assertRaises(SystemExit) as raised:
      _run('census', '--rounds', rounds)
    self.assertEqual(2, raised.exception.code)


class OutputTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('check', ['check', '--lattice', EXAMPLE_LATTICE, '--matrix',
                 EXAMPLE_MATRIX]),
      ('rejection', ['check', '--lattice', Z2, '--matrix', ROTATION_45]),
      ('decompose', ['decompose', '--lattice', EXAMPLE_LATTICE, '--matrix',
                     EXAMPLE_MATRIX]),
      ('not_reflective', ['decompose', '--lattice', NON_REFLECTIVE, '--matrix',
                          IDENTITY]),
      ('classify2d', ['classify2d', '--a', SQRT2, '--b2', '2', '--d', '2',
                      '--spot-check', '10']),
      ('census', ['census', '--rounds', '4']),
  )
  def test_human_matches_structured(self, argv):
    structured_code, structured, _ = _run(*argv, '--output', 'structured')
    human_code, human, _ = _run(*argv, '--output', 'human')
    self.assertEqual(structured_code, human_code)
    expected = [
        '{}: {}'.format(path, text)
        for path, text in report.flatten(json.loads(structured))
    ]
    self.assertEqual(expected, human.splitlines())

  def test_human_lines(self):
    _, human, _ = _run('check', '--lattice', EXAMPLE_LATTICE, '--matrix',
                       EXAMPLE_MATRIX, '--output', 'human')
    lines = human.splitlines()
    self.assertIn('sigma: 21', lines)
    self.assertIn('member: true', lines)
    self.assertIn('conjugate: [[-9/7, -4/7], [4/7, -11/21]]', lines)
    self.assertIn('rejection: -', lines)

  def test_no_subcommand(self):
    code, out, _ = _run()
    self.assertEqual(scripts.EXIT_INPUT_ERROR, code)
    self.assertIn('subcommands', out)


if __name__ == '__main__':
  logging.basicConfig()
  unittest.main()
