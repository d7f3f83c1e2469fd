# Copyright 2026 The polarctx Authors
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
"""Degree of contextuality of Pauli configurations in symplectic polar spaces."""

import json as _json

from ._core import (
    CapabilityError,
    degree_profile_json as _degree_profile_json,
    exact_degree,
    export_xor,
    line_sign,
    lower_bound_full,
    normalize_observable,
    polarity_count_str as _polarity_count_str,
    run_cli,
    solve_json as _solve_json,
    space_counts,
)

__all__ = [
    "CapabilityError",
    "degree_profile",
    "exact_degree",
    "export_xor",
    "line_sign",
    "lower_bound_full",
    "normalize_observable",
    "polarity_count",
    "run_cli",
    "solve",
    "space_counts",
]


def solve(qubits, geometry="full", index=None, *, theta=0.8, gamma=0.9, iterations=1000,
          restarts=1, seed=0, threads=0):
    """Runs the local search and returns the run record as a dict."""
    return _json.loads(_solve_json(qubits, geometry, index, theta, gamma, iterations,
                                   restarts, seed, threads))


def polarity_count(qubits):
    """Number of symplectic polarities of PG(2N-1, 2)."""
    return int(_polarity_count_str(qubits))


def degree_profile(record):
    """Degree and line-type profile of a run record (dict or JSON string)."""
    text = record if isinstance(record, str) else _json.dumps(record)
    return _degree_profile_json(text)
