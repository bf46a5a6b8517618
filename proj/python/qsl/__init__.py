# Copyright 2026 The qsl Authors
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
"""Quantum speed limits tighter than the Mandelstam-Tamm bound."""

from ._core import (
    QslError,
    commutator_bound_mixed,
    cross_term_mixed,
    random_basis,
    random_density_matrix,
    random_pure_state,
    run_gue,
    run_property_suite,
    sample_gue,
    spin_chain_hamiltonian,
    tighter_bound_mixed,
    tighter_bound_pure,
    tqsl_curve_pure,
    tqsl_mixed,
    tqsl_pure,
)

__all__ = [
    "QslError",
    "commutator_bound_mixed",
    "cross_term_mixed",
    "random_basis",
    "random_density_matrix",
    "random_pure_state",
    "run_gue",
    "run_property_suite",
    "sample_gue",
    "spin_chain_hamiltonian",
    "tighter_bound_mixed",
    "tighter_bound_pure",
    "tqsl_curve_pure",
    "tqsl_mixed",
    "tqsl_pure",
]
