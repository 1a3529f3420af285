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
"""Entry point for coincidence_lattice scripts.

Exit codes: 0 when the map or lattice is accepted, 1 on a clean mathematical
rejection, 2 on malformed input or usage.
"""

import argparse
import logging
import sys
from typing import Any, List, Optional, Sequence, Tuple

import immutabledict

from coincidence_lattice import census as census_module
from coincidence_lattice import codec
from coincidence_lattice import coincidence
from coincidence_lattice import error
from coincidence_lattice import lattice as lattice_module
from coincidence_lattice import matrix
from coincidence_lattice import planar
from coincidence_lattice import reflection
from coincidence_lattice import scalar
from coincidence_lattice.cli import report

_logger = logging.getLogger(__name__)

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_INPUT_ERROR = 2

# Errors that are verdicts about the input rather than faults in it.
_REJECTION_EXIT_CODES = immutabledict.immutabledict({
    error.NotReflectiveLattice: EXIT_REJECT,
    error.NotCoincidenceIsometry: EXIT_REJECT,
})


def _exit_code(e: error.CoincidenceError) -> int:
  for cls in type(e).__mro__:
    if cls in _REJECTION_EXIT_CODES:
      return _REJECTION_EXIT_CODES[cls]
  return EXIT_INPUT_ERROR


# Flags taking SCALAR text, which may start with a minus sign.
_SCALAR_FLAGS = frozenset(['--a', '--b2'])


def _attach_scalar_values(argv: Sequence[str]) -> List[str]:
  """Rewrites `--b2 -1+1*sqrt(2)` as `--b2=-1+1*sqrt(2)` for argparse."""
  attached = []
  pending = None
  for arg in argv:
    if pending is not None:
      attached.append('{}={}'.format(pending, arg))
      pending = None
    elif arg in _SCALAR_FLAGS:
      pending = arg
    else:
      attached.append(arg)
  if pending is not None:
    attached.append(pending)
  return attached


def _positive_int(text: str) -> int:
  try:
    value = int(text)
  except ValueError:
    raise argparse.ArgumentTypeError('{!r} is not an integer'.format(text))
  if value < 1:
    raise argparse.ArgumentTypeError(
        '{} is not a positive integer'.format(value))
  return value


def _emit(args: Any, content: report.Report) -> None:
  print(report.render(content, args.output))


def _membership(
    args: Any
) -> Tuple[lattice_module.Lattice, matrix.ExactMatrix,
           coincidence.MembershipResult]:
  lattice = codec.load_lattice_file(args.lattice)
  t = codec.load_matrix_file(args.matrix)
  if args.group == 'csg':
    return lattice, t, coincidence.csg_member(lattice, t)
  return lattice, t, coincidence.oc_member(lattice, t)


def check(args: Any) -> int:
  lattice, t, result = _membership(args)
  _emit(args, report.check_report(lattice, t, result, args.group))
  return EXIT_ACCEPT if coincidence.is_member(result) else EXIT_REJECT


def index(args: Any) -> int:
  _, _, result = _membership(args)
  _emit(args, report.index_report(result))
  return EXIT_ACCEPT if coincidence.is_member(result) else EXIT_REJECT


def decompose(args: Any) -> int:
  lattice = codec.load_lattice_file(args.lattice)
  r = codec.load_matrix_file(args.matrix)
  try:
    seq = reflection.decompose(lattice, r)
  except error.NotReflectiveLattice as e:
    _emit(args, report.not_reflective_report(e))
    return EXIT_REJECT
  except error.NotCoincidenceIsometry as e:
    _emit(args, report.not_isometry_report(e))
    return EXIT_REJECT
  verified = reflection.verify(seq, lattice)
  _emit(args, report.decompose_report(seq, verified))
  return EXIT_ACCEPT if verified else EXIT_REJECT


def _parse_flag_scalar(flag: str, text: str,
                       context: scalar.FieldContext) -> scalar.FieldElement:
  try:
    return scalar.parse_scalar(text, context)
  except error.ParseError as e:
    raise e.at(flag)


def classify2d(args: Any) -> int:
  context = scalar.FieldContext(args.d)
  params = planar.PlanarFamilyParams(
      _parse_flag_scalar('--a', args.a, context),
      _parse_flag_scalar('--b2', args.b2, context))
  classification = planar.classify(params)
  spot_check = None
  if args.spot_check is not None:
    spot_check = planar.spot_check(params, args.spot_check, args.seed)
  _emit(args, report.classify_report(classification, spot_check))
  if spot_check is not None and not spot_check.consistent:
    return EXIT_REJECT
  return EXIT_ACCEPT


def census(args: Any) -> int:
  _emit(args, report.census_report(census_module.growth_run(args.rounds)))
  return EXIT_ACCEPT


def _build_parser(as_module: bool) -> argparse.ArgumentParser:
  """Builds the parser; every subcommand sets `execute`."""
  prog = 'coincidence-lattice' if as_module else None
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument(
      '--output', choices=report.OUTPUT_MODES, default=report.STRUCTURED)
  common.add_argument(
      '--log-level',
      choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
      default='WARNING')

  parser = argparse.ArgumentParser(prog=prog)
  subparsers = parser.add_subparsers(
      dest='subcommand', title='subcommands', description='valid subcommands')

  def add_membership_parser(name: str, help_text: str) -> None:
    subparser = subparsers.add_parser(name, parents=[common], help=help_text)
    subparser.add_argument(
        '--lattice', required=True, help='Structure matrix file of L')
    subparser.add_argument(
        '--matrix', required=True, help='Canonical-basis matrix file of T')
    subparser.add_argument(
        '--group',
        choices=['oc', 'csg'],
        default='oc',
        help='Decide membership in OC(L) or in CSG(L)')
    subparser.set_defaults(execute=check if name == 'check' else index)

  add_membership_parser('check', 'Decide coincidence membership of a map')
  add_membership_parser('index', 'Report the coincidence index only')

  decompose_parser = subparsers.add_parser(
      'decompose',
      parents=[common],
      help='Write a coincidence isometry as a product of reflections')
  decompose_parser.add_argument('--lattice', required=True)
  decompose_parser.add_argument('--matrix', required=True)
  decompose_parser.set_defaults(execute=decompose)

  classify_parser = subparsers.add_parser(
      'classify2d',
      parents=[common],
      help='Classify OC(L) for A = [[a, 1], [0, b]]')
  classify_parser.add_argument('--a', required=True, help='SCALAR a > 0')
  classify_parser.add_argument('--b2', required=True, help='SCALAR b^2 > 0')
  classify_parser.add_argument(
      '--d', type=int, default=0, help='Square-free radicand of the field')
  classify_parser.add_argument(
      '--spot-check',
      type=_positive_int,
      help='Sample this many lattice vectors and rotations')
  classify_parser.add_argument('--seed', type=int, default=planar.DEFAULT_SEED)
  classify_parser.set_defaults(execute=classify2d)

  census_parser = subparsers.add_parser(
      'census',
      parents=[common],
      help='Grow the denominator prime budget of OC(Z^2)')
  census_parser.add_argument('--rounds', type=_positive_int, required=True)
  census_parser.set_defaults(execute=census)
  return parser


def main(argv: Optional[List[str]] = None, as_module: bool = False) -> int:
  parser = _build_parser(as_module)
  if argv is None:
    argv = sys.argv[1:]
  args = parser.parse_args(_attach_scalar_values(argv))
  if args.subcommand is None:
    parser.print_help()
    return EXIT_INPUT_ERROR
  logging.basicConfig(level=args.log_level)
  _logger.info('Running %s', args.subcommand)
  try:
    return args.execute(args)
  except error.CoincidenceError as e:
    print('error: {}'.format(e), file=sys.stderr)
    return _exit_code(e)


if __name__ == '__main__':
  sys.exit(main(as_module=True))
