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

import json
import os
import subprocess

import numpy as np
import pytest

import reltps

X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def test_perm_unitary_123_is_identity():
    assert np.allclose(reltps.perm_unitary("123"), np.eye(4))


def test_tensor_op_321_matches_pauli_dictionary():
    assert np.allclose(reltps.tensor_op("321", I2, X), np.kron(X, X))
    assert np.allclose(reltps.tensor_op("321", Z, I2), np.kron(Z, Z))


def test_iff_projector():
    p, text = reltps.subsystem_projector("321", "left", 0)
    assert np.allclose(p, np.diag([1, 0, 0, 1]))
    assert text == "Alice IFF Bob"


def test_compose_and_labels():
    assert reltps.compose("213", "321") == "312"
    assert set(reltps.LABELS) == {"123", "132", "213", "231", "312", "321"}


def test_singlet_classification():
    singlet = reltps.builtin_state("singlet")
    doc = reltps.classify(singlet)
    ranks = {entry["label"]: entry["rank"] for entry in doc["labels"]}
    assert ranks == {"123": 2, "132": 1, "213": 2, "231": 1, "312": 1, "321": 1}


def test_reduced_purity_matches_schmidt():
    rng = np.random.default_rng(7)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    doc = reltps.classify(psi)
    for entry in doc["labels"]:
        want = sum(c**4 for c in entry["coefficients"])
        assert reltps.reduced_purity(psi, entry["label"], "left") == pytest.approx(want, abs=1e-10)


def test_unnormalized_input_rejected():
    with pytest.raises(ValueError):
        reltps.classify(np.array([1, 1, 0, 0], dtype=complex))
    doc = reltps.classify(np.array([1, 1, 0, 0], dtype=complex), normalize=True)
    assert doc["labels"][0]["rank"] == 1


def test_bad_label_rejected():
    with pytest.raises(ValueError):
        reltps.perm_unitary("999")


def test_simulate_singlet_321():
    doc = reltps.simulate(reltps.builtin_state("singlet"), "321", shots=10000, seed=3)
    counts = {row["outcome"]: row["count"] for row in doc["joint"]}
    assert counts["00"] == 0 and counts["01"] == 0
    assert counts["10"] + counts["11"] == 10000


def test_verify_all_pass_and_deterministic():
    a = reltps.verify(0)
    b = reltps.verify(0)
    assert a == b
    assert a["summary"]["failed"] == 0
    assert a["summary"]["total"] == len(a["checks"])


@pytest.mark.skipif("RELTPS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json_matches_module():
    out = subprocess.run(
        [os.environ["RELTPS_CLI"], "verify", "--seed", "0"], capture_output=True, text=True, check=True
    ).stdout
    doc = json.loads(out)
    doc.pop("timestamp")
    assert doc == reltps.verify(0)
