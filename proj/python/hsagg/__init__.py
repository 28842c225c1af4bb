# Copyright 2026 The hsagg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Hierarchical secure aggregation with groupwise keys."""

import json
from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import full_audit_json, optimal_rates_raw, rate_audit_raw


def _fractions(raw):
    return tuple(Fraction(num, den) for num, den in raw)


def optimal_rates(U, V, G):
    """(R_X, R_Y, R_S) as exact fractions."""
    return _fractions(optimal_rates_raw(U, V, G))


def rate_audit(scheme):
    passed, achieved, optimal = rate_audit_raw(scheme)
    return passed, _fractions(achieved), _fractions(optimal)


def full_audit(scheme, fuzz_rounds=100, cap=1 << 26, seed=0, oracle=True):
    """Audit report as a dict (same layout as `hsagg verify --out`)."""
    return json.loads(full_audit_json(scheme, fuzz_rounds, cap, seed, oracle))
