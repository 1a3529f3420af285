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
"""coincidence_lattice setup file."""
from setuptools import setup

setup(
    name='coincidence-lattice',
    version='0.1.0',
    description='Exact coincidence symmetries and reflection decompositions '
    'of lattices',
    maintainer='Coincidence lattice developers',
    packages=[
        'coincidence_lattice', 'coincidence_lattice.cli',
        'coincidence_lattice.testlib', 'coincidence_lattice.tests'
    ],
    package_data={'coincidence_lattice.tests': ['testdata/*.json']},
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=[
        'immutabledict',
        'sympy >= 1.9',
    ],
    tests_require=['absl-py', 'hypothesis', 'pytest'],
    entry_points={
        'console_scripts': [
            'coincidence-lattice = coincidence_lattice.cli.scripts:main'
        ]
    })
