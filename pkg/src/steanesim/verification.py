"""Dense-oracle verification suites behind ``steanesim verify``.

Each check pits the bit-vector machinery against exact linear algebra:
encoder output amplitudes, the transversal-H identity on the logical zero
state, decoder inversion, teleportation-gadget algebra on the trivial code,
and frame propagation against dense simulation on encode, decode and
syndrome-round segments (at most 14 qubits per segment).
"""
from __future__ import annotations

import numpy as np

from .builders import (
    build_a_prep_trivial,
    build_decoder,
    build_encoder,
    build_steane_state_circuit,
    build_t_gadget_trivial,
    build_toffoli_gadget_trivial,
    build_theta_prep_trivial,
    build_x_round_segment,
    build_z_round_segment,
)
from .circuits import Circuit
from .faults import enumerable_locations
from .paulis import PauliOperator, conjugate_through
from .statevec import (
    apply_1q,
    apply_pauli,
    expand_macros,
    logical_one_state,
    logical_zero_state,
    random_product_state,
    random_state,
    simulate_statevector,
    states_equal,
    steane_state,
    zero_state,
    _MATRICES,
)

THETA = np.array([1.0, np.exp(1j * np.pi / 4)]) / np.sqrt(2)
A_STATE_WORDS = ((0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 1))


def check_encoder_codewords(tol: float = 1e-12) -> tuple[bool, str]:
    """Encoder output on |0..0> and on the X-flipped data qubit."""
    enc = build_encoder()
    out0, _ = simulate_statevector(enc)
    flipped = apply_1q(zero_state(7), _MATRICES["X"], 0, 7)
    out1, _ = simulate_statevector(enc, input_state=flipped)
    err0 = np.max(np.abs(out0 - logical_zero_state()))
    err1 = np.max(np.abs(out1 - logical_one_state()))
    ok = err0 < tol and err1 < tol
    return ok, f"max amplitude error {max(err0, err1):.2e}"


def check_steane_state(tol: float = 1e-12) -> tuple[bool, str]:
    """Transversal H on the logical zero equals the uniform-codeword state."""
    state = logical_zero_state()
    for q in range(7):
        state = apply_1q(state, _MATRICES["H"], q, 7)
    err = float(np.max(np.abs(state - steane_state())))
    circ_state, _ = simulate_statevector(build_steane_state_circuit())
    err2 = float(np.max(np.abs(circ_state - steane_state())))
    ok = err < tol and err2 < tol
    return ok, f"max amplitude error {max(err, err2):.2e}"


def check_decoder_inverts_encoder(n_states: int = 20, seed: int = 7, tol: float = 1e-10) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    enc, dec = build_encoder(), build_decoder()
    worst = 0.0
    for _ in range(n_states):
        psi = random_product_state(7, rng)
        mid, _ = simulate_statevector(enc, input_state=psi)
        out, _ = simulate_statevector(dec, input_state=mid)
        worst = max(worst, float(np.max(np.abs(out - psi))))
    return worst < tol, f"worst round-trip error {worst:.2e} over {n_states} product states"


def check_t_gadget(tol: float = 1e-10, seed: int = 11) -> tuple[bool, str]:
    """Teleported T on the trivial code, both measurement branches."""
    rng = np.random.default_rng(seed)
    circuit = build_t_gadget_trivial()
    ok = True
    for _ in range(5):
        psi = random_state(1, rng)
        inp = np.kron(np.array([1.0, 0.0], dtype=complex), psi)  # anc |0>, data low bit
        for outcome in (0, 1):
            out, _ = simulate_statevector(circuit, input_state=inp, outcomes={"M1:Z": outcome})
            anc = out.reshape(2, 2)[:, outcome]  # data qubit collapsed to the outcome
            if outcome == 1:  # correction: X then S
                anc = _MATRICES["S"] @ (_MATRICES["X"] @ anc)
            expected = _MATRICES["T"] @ psi
            ok = ok and states_equal(anc, expected, tol)
    return ok, "outcome-0 branch applies T; outcome-1 branch needs the SX correction"


def check_theta_prep(tol: float = 1e-10) -> tuple[bool, str]:
    circuit = build_theta_prep_trivial()
    ok = True
    for outcome in (0, 1):
        out, _ = simulate_statevector(circuit, outcomes={"M1:Z": outcome})
        blk = out.reshape(2, 2)[:, outcome]
        if outcome == 1:
            blk = _MATRICES["Z"] @ blk
        ok = ok and states_equal(blk, THETA, tol)
    return ok, "both cat outcomes land on the T|+> eigenstate after correction"


def check_a_prep(tol: float = 1e-10) -> tuple[bool, str]:
    circuit = build_a_prep_trivial()
    out, _ = simulate_statevector(circuit, outcomes={"M1:Z": 0})
    expected = np.zeros(16, dtype=complex)
    for b1, b2, b3 in A_STATE_WORDS:
        expected[(b1 << 1) | (b2 << 2) | (b3 << 3)] = 0.5
    return states_equal(out, expected, tol), "cat outcome 0 prepares the Toffoli ancilla state"


def check_toffoli_gadget(tol: float = 1e-10, seed: int = 13) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    circuit = build_toffoli_gadget_trivial()
    outcomes = {"M1:Z": 0, "M2:Z": 0, "M3:X": 0}
    ok = True
    for _ in range(5):
        psi = random_state(3, rng)
        inp = np.kron(np.eye(8, dtype=complex)[0], psi)  # anc |000>, psi on low bits
        out, _ = simulate_statevector(circuit, input_state=inp, outcomes=outcomes)
        # data qubits collapsed to |000>; the ancilla block carries Toffoli(psi)
        anc = out.reshape(8, 8)[:, 0]
        expected = psi.copy()
        expected[[3, 7]] = expected[[7, 3]]  # CCX: flip target when both controls set
        ok = ok and states_equal(anc, expected, tol)
    return ok, "all-zero outcome branch applies Toffoli into the ancilla block"


def _strip_measurements(circuit: Circuit) -> Circuit:
    gates = [g for g in circuit.gates if not g.is_measurement]
    return Circuit(circuit.n_qubits, gates, name=circuit.name + "-unitary")


def _frame_after(circuit: Circuit, label: str, side: str, pauli: str) -> PauliOperator:
    """Propagate a fault through the remaining unitary gates of the circuit."""
    gates = expand_macros(circuit)
    start = next(i for i, g in enumerate(gates) if g.label == label)
    g = gates[start]
    qubit = g.qubits[0] if side in ("control", "single") else g.qubits[1]
    frame = PauliOperator.single(circuit.n_qubits, qubit + 1, pauli)
    for gate in gates[start + 1:]:
        if gate.is_measurement:
            continue
        frame = conjugate_through(gate.kind, gate.qubits, frame)
    return frame


def _segment_inputs(name: str, rng: np.random.Generator) -> np.ndarray:
    if name in ("encoder", "decoder"):
        return random_state(7, rng)
    # syndrome segments: random block state on the data wires, ancilla |0...0>
    return np.kron(np.eye(128, dtype=complex)[0], random_state(7, rng))


def check_propagation_oracle(n_faults: int = 200, seed: int = 20240817, tol: float = 1e-10) -> tuple[bool, str]:
    """Frame engine vs dense simulation on <=14-qubit circuit segments."""
    rng = np.random.default_rng(seed)
    segments = {
        "encoder": build_encoder(),
        "decoder": build_decoder(),
        "x-round": _strip_measurements(build_x_round_segment()),
        "z-round": _strip_measurements(build_z_round_segment()),
    }
    pool = []
    for name, circ in segments.items():
        if "data_qubits" not in circ.meta:
            circ.meta["data_qubits"] = tuple(range(7))
        for _, label, side, _ in enumerable_locations(circ):
            for pauli in ("X", "Y", "Z"):
                pool.append((name, label, side, pauli))
    picks = rng.choice(len(pool), size=n_faults, replace=True)
    disagreements = 0
    for idx in picks:
        name, label, side, pauli = pool[int(idx)]
        circ = segments[name]
        inp = _segment_inputs(name, rng)
        gate = circ.gate_by_label(label)
        qubit = gate.qubits[0] if side in ("control", "single") else gate.qubits[1]
        fault = PauliOperator.single(circ.n_qubits, qubit + 1, pauli)
        faulted, _ = simulate_statevector(circ, input_state=inp, inject={label: fault})
        clean, _ = simulate_statevector(circ, input_state=inp)
        frame = _frame_after(circ, label, side, pauli)
        predicted = apply_pauli(clean, frame, circ.n_qubits)
        if not states_equal(faulted, predicted, tol):
            disagreements += 1
    return disagreements == 0, f"{n_faults} random faults, {disagreements} disagreements"


def run_all(n_oracle_faults: int = 200, seed: int = 20240817):
    """Every verification check as (name, passed, detail) rows."""
    return [
        ("encoder-codewords", *check_encoder_codewords()),
        ("steane-state-identity", *check_steane_state()),
        ("decoder-inverts-encoder", *check_decoder_inverts_encoder()),
        ("t-gadget-algebra", *check_t_gadget()),
        ("theta-prep", *check_theta_prep()),
        ("toffoli-ancilla-prep", *check_a_prep()),
        ("toffoli-gadget-algebra", *check_toffoli_gadget()),
        ("propagation-oracle", *check_propagation_oracle(n_oracle_faults, seed)),
    ]
