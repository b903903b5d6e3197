# Copyright 2026 The reltps Authors
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

"""Relative tensor product structures on a four-dimensional Hilbert space."""

from reltps._core import (
    LABELS,
    __version__,
    analytic_probs,
    basis_ket,
    builtin_state,
    classify,
    compose,
    mixed_product_defect,
    perm_unitary,
    reduced_purity,
    simulate,
    subsystem_projector,
    tensor_ket,
    tensor_op,
    verify,
)

__all__ = [
    "LABELS",
    "__version__",
    "analytic_probs",
    "basis_ket",
    "builtin_state",
    "classify",
    "compose",
    "mixed_product_defect",
    "perm_unitary",
    "reduced_purity",
    "simulate",
    "subsystem_projector",
    "tensor_ket",
    "tensor_op",
    "verify",
]
