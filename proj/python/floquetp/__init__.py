# Copyright 2026 The floquetp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact spectral computations for convolution operators over finite fields.

Operators are passed in the text file format read by the command line tool.
Results come back as plain Python data decoded from the library's JSON.
"""

import json

from . import _core
from ._core import Error, NotInSubfield, NotSaturated, ParseError, run_cli

__all__ = [
    "Error",
    "NotInSubfield",
    "NotSaturated",
    "ParseError",
    "count_multipliers",
    "cover",
    "descend",
    "det_symbol",
    "finite_support_solution",
    "format_operator",
    "fragment",
    "jordan_basis",
    "multipliers",
    "operator",
    "oracle_nullity",
    "periodic_solutions",
    "run_cli",
    "spectral_decomposition",
]


def operator(text):
    return json.loads(_core.operator_json(text))


def format_operator(op):
    return _core.format_operator(json.dumps(op))


def periodic_solutions(text, period):
    return json.loads(_core.periodic_solutions(text, str(period)))


def count_multipliers(text, period):
    return _core.count_multipliers(text, str(period))


def multipliers(text, period):
    return json.loads(_core.multipliers(text, str(period)))


def spectral_decomposition(text, period):
    return json.loads(_core.spectral_decomposition(text, str(period)))


def jordan_basis(text, period):
    return json.loads(_core.jordan_basis(text, str(period)))


def oracle_nullity(text, period):
    return _core.oracle_nullity(text, str(period))


def descend(text, period, q):
    return json.loads(_core.descend(text, str(period), q))


def finite_support_solution(text):
    out = _core.finite_support_solution(text)
    return None if out is None else json.loads(out)


def det_symbol(text):
    return json.loads(_core.det_symbol(text))


def fragment(text, sub):
    return json.loads(_core.fragment(text, str(sub)))


def cover(text):
    return _core.cover(text)
