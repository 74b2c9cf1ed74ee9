# Copyright 2026 The linset Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python access to the linset library.

Every function returns the report the ``linset`` command line tool prints for the
matching subcommand, minus the ``command`` key, decoded into dicts and lists.
"""

import json

from . import _core
from ._core import SCHEMA_VERSION, TOOL_VERSION, LinsetError

__version__ = TOOL_VERSION
__all__ = [
    "LinsetError",
    "SCHEMA_VERSION",
    "analyze",
    "code",
    "family",
    "search",
    "stabilizer",
    "verify",
]


def _t_list(t):
    if t is None:
        return []
    if isinstance(t, int):
        return [t]
    return list(t)


def analyze(field, poly, q=None, t=None, budget=1 << 22, seed=0):
    """Full report: geometry, stabilizer and code of one q-polynomial."""
    return json.loads(_core.analyze(field, poly, q, _t_list(t), budget, seed))


def stabilizer(field, poly, q=None, brute=False, seed=0):
    """The stabilizer algebra, optionally cross-checked by enumeration."""
    return json.loads(_core.stabilizer(field, poly, q, brute, seed))


def code(field, poly, q=None, t=None, budget=1 << 22, seed=0):
    """The rank-metric code with idealizers and restricted codes."""
    return json.loads(_core.code(field, poly, q, _t_list(t), budget, seed))


def family(field, name, params=None, q=None, analysis=False):
    """Instantiate a named family; parameter values are strings as on the command line."""
    params = {k: str(v) for k, v in (params or {}).items()}
    return json.loads(_core.family(field, name, params, q, analysis))


def search(field, max_qdeg=1, predicate="scattered", t=0, budget=1 << 16, seed=0, workers=1, q=None):
    """Polynomials of bounded q-degree satisfying a predicate, one hit per scaling class."""
    return json.loads(_core.search(field, max_qdeg, predicate, t, budget, seed, workers, q))


def verify(tier="fast", only=None, seed=20240607, workers=1):
    """Run the acceptance criteria at or below a tier."""
    return json.loads(_core.verify(tier, list(only or []), seed, workers))
