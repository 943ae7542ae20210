# Copyright 2026 The schurkit Authors
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
"""Schur transform toolkit."""

from schurkit._schurkit import (
    central_projector,
    cg_block,
    channel_normal_form,
    character,
    compress_rate,
    dephasing_isometry,
    dim_p,
    dim_q,
    enumerate_partitions,
    gpe_marginals,
    invariant_basis,
    kostka,
    kronecker,
    lambda_distribution,
    measure_lambda,
    mn_character,
    run_cli,
    schur_labels,
    schur_poly,
    schur_projector,
    schur_unitary,
    sn_qft,
    spectrum_failure_rate,
    verify_block_diagonal,
)

__all__ = [
    "central_projector",
    "cg_block",
    "channel_normal_form",
    "character",
    "compress_rate",
    "dephasing_isometry",
    "dim_p",
    "dim_q",
    "enumerate_partitions",
    "gpe_marginals",
    "invariant_basis",
    "kostka",
    "kronecker",
    "lambda_distribution",
    "measure_lambda",
    "mn_character",
    "run_cli",
    "schur_labels",
    "schur_poly",
    "schur_projector",
    "schur_unitary",
    "sn_qft",
    "spectrum_failure_rate",
    "verify_block_diagonal",
]
