"""Dense statevector oracle behavior and the verification suites."""
from __future__ import annotations

import numpy as np
import pytest

from steanesim import verification
from steanesim.builders import build_encoder, build_gadget, build_toffoli_decomposition, GadgetSpec
from steanesim.circuits import Circuit
from steanesim.statevec import (
    LOGICAL_ZERO_WORDS,
    apply_ccx,
    apply_cnot,
    logical_zero_state,
    simulate_statevector,
    states_equal,
    steane_state,
    zero_state,
)


def test_encoder_amplitudes_are_uniform_over_even_codewords():
    out, _ = simulate_statevector(build_encoder())
    nonzero = np.flatnonzero(np.abs(out) > 1e-12)
    assert len(nonzero) == 8
    assert np.allclose(out[nonzero], 1 / np.sqrt(8), atol=1e-12)
    words = {format(i, "07b")[::-1] for i in nonzero}  # bit q-1 holds qubit q
    assert words == set(LOGICAL_ZERO_WORDS)


def test_steane_state_is_uniform_sixteen():
    s = steane_state()
    assert np.count_nonzero(np.abs(s) > 1e-12) == 16
    assert np.allclose(s[np.abs(s) > 1e-12], 0.25, atol=1e-12)


def test_empty_circuit_returns_input():
    psi = np.zeros(4, dtype=complex)
    psi[2] = 1.0
    out, _ = simulate_statevector(Circuit(2), input_state=psi)
    assert np.array_equal(out, psi)


def test_qubit_budget_enforced():
    with pytest.raises(ValueError, match="budget"):
        simulate_statevector(Circuit(21))


def test_unitary_norm_preserved():
    rng = np.random.default_rng(3)
    c = build_gadget(GadgetSpec("csDecomp"))
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    out, _ = simulate_statevector(c, input_state=psi)
    assert abs(np.linalg.norm(out) - 1) < 1e-12


def test_projection_on_impossible_outcome_raises():
    c = Circuit(1)
    c.add("MZ", (0,), "M1:Z")
    with pytest.raises(ValueError, match="zero amplitude"):
        simulate_statevector(c, input_state=zero_state(1), outcomes={"M1:Z": 1})


def test_cz_and_cs_decompositions_match_matrices():
    for name, diag in (("czDecomp", [1, 1, 1, -1]), ("csDecomp", [1, 1, 1, 1j])):
        c = build_gadget(GadgetSpec(name))
        cols = []
        for basis in range(4):
            e = np.zeros(4, dtype=complex)
            e[basis] = 1.0
            out, _ = simulate_statevector(c, input_state=e)
            cols.append(out)
        got = np.column_stack(cols)
        # control = qubit 0 (low bit); the phase sits on the index with both bits set
        want = np.diag(diag).astype(complex)
        assert np.allclose(got, want, atol=1e-12), name


def test_toffoli_decomposition_equals_ccx():
    c = build_toffoli_decomposition()
    rng = np.random.default_rng(11)
    for _ in range(6):
        psi = rng.normal(size=8) + 1j * rng.normal(size=8)
        psi /= np.linalg.norm(psi)
        got, _ = simulate_statevector(c, input_state=psi)
        want = apply_ccx(psi, 0, 1, 2, 3)
        assert states_equal(got, want, 1e-12)


def test_apply_cnot_agrees_with_truth_table():
    for basis in range(4):
        e = np.zeros(4, dtype=complex)
        e[basis] = 1.0
        out = apply_cnot(e, 0, 1, 2)
        c, t = basis & 1, (basis >> 1) & 1
        expected = c | ((t ^ c) << 1)
        assert abs(out[expected] - 1) < 1e-12


def test_verification_suites_pass():
    for name, ok, detail in verification.run_all(n_oracle_faults=40, seed=99):
        assert ok, f"{name}: {detail}"


def test_logical_zero_words_form_a_linear_code():
    words = [int(w[::-1], 2) for w in LOGICAL_ZERO_WORDS]
    for a in words:
        for b in words:
            assert (a ^ b) in words
    assert np.allclose(np.linalg.norm(logical_zero_state()), 1.0)
