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
import json

import numpy as np
import pytest

import schurkit as sk


def test_dimensions_sum_to_hilbert_space():
    for d in range(1, 4):
        for n in range(1, 5):
            total = sum(sk.dim_q(lam, d) * sk.dim_p(lam) for lam in sk.enumerate_partitions(d, n))
            assert total == d**n


def test_schur_unitary_is_orthogonal():
    U = sk.schur_unitary(2, 3)
    assert U.shape == (8, 8)
    np.testing.assert_allclose(U @ U.conj().T, np.eye(8), atol=1e-12)
    assert len(sk.schur_labels(2, 3)) == 8


def test_singlet_row():
    U = sk.schur_unitary(2, 2)
    labels = sk.schur_labels(2, 2)
    row = U[[i for i, s in enumerate(labels) if s.startswith("lambda=1,1")][0]]
    np.testing.assert_allclose(np.abs(row), [0, 2**-0.5, 2**-0.5, 0], atol=1e-12)
    assert abs(row[1] + row[2]) < 1e-12


def test_projectors_agree():
    for lam in sk.enumerate_partitions(3, 3):
        np.testing.assert_allclose(sk.schur_projector(lam, 3, 3), sk.central_projector(lam, 3, 3), atol=1e-10)


def test_measurement_matches_gpe():
    rng = np.random.default_rng(1)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    direct = dict((tuple(k), v) for k, v in sk.measure_lambda(psi, 2, 3))
    gpe = dict((tuple(k), v) for k, v in sk.gpe_marginals(psi, 2, 3))
    for lam, p in direct.items():
        assert gpe[lam] == pytest.approx(p, abs=1e-10)


def test_duality_check():
    rng = np.random.default_rng(2)
    Z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    Q, _ = np.linalg.qr(Z)
    rep = sk.verify_block_diagonal(Q, [1, 2, 0, 3], 2, 4)
    assert rep["passed"]
    assert rep["leakage"] < 1e-10


def test_fourier_unitary():
    F = sk.sn_qft(3, from_schur=True)
    np.testing.assert_allclose(F @ F.conj().T, np.eye(6), atol=1e-10)


def test_kronecker_and_channels():
    assert sk.kronecker([2, 1], [2, 1], [2, 1]) == 1
    assert len(sk.invariant_basis([2, 1], [2, 1], [3])) == 1
    rep = sk.channel_normal_form(sk.dephasing_isometry(0.3), 2, 2, 2, 2)
    assert rep["round_trip"] < 1e-9
    assert rep["isometry"] < 1e-9


def test_types():
    dist = sk.lambda_distribution([0.7, 0.3], 10)
    assert sum(dist) == pytest.approx(1.0)
    rep = sk.compress_rate([0.9, 0.1], 40, 0.8)
    assert rep["dimension_ok"]


def test_cli_round_trip():
    code, out, _ = sk.run_cli(["dims", "--d", "2", "--n", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["total"] == 8
    code, _, err = sk.run_cli(["dims", "--nope"])
    assert code == 64
    assert "error" in err


def test_errors_raise():
    with pytest.raises(ValueError):
        sk.dim_q([1, 1, 1], 2)
