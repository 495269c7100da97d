"""Effective fault-location counts per block qubit and the period coefficients.

A location-side counts toward a qubit's depth for an error type when a
fault of that type there has any observable effect (it is not result-
neutral) and it is not covered by the perfect-operation ledger. Both copies
of a repeated syndrome round count. Hadamard faults never enter the X-type
depth; each H contributes its one effective fault to the Z-type depth of
its qubit. For the auxiliary block only X-type errors are analyzed: the
Y-type depth equals the X-type depth and the Z-type depth is zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil

from .builders import build_full_ec_circuit
from .circuits import Circuit
from .faults import (
    PerfectOpLedger,
    derive_perfect_assumptions,
    enumerable_locations,
    has_nonflag_effect,
    inject_and_propagate,
    is_neutral,
    view_table,
)

DEFAULT_GAMMA = 4


@dataclass(frozen=True)
class DepthProfile:
    """Per-qubit effective fault-location counts, qubits 1..7."""

    r_x: tuple[int, ...]
    r_y: tuple[int, ...]
    r_z: tuple[int, ...]


@dataclass(frozen=True)
class BlockDepth:
    """Period coefficients R_1..R_7 and the syndrome/recovery depth."""

    R: tuple[int, ...]
    gamma: int = DEFAULT_GAMMA

    def __post_init__(self):
        if len(self.R) != 7:
            raise ValueError("expected seven R coefficients")


def count_fault_locations(
    circuit: Circuit,
    x_ledger: PerfectOpLedger = frozenset(),
    z_ledger: PerfectOpLedger = frozenset(),
) -> DepthProfile:
    """Tally effective locations per block qubit for X, Y and Z faults.

    A labeled-gate (C/H) location counts when its fault leaves a syndrome,
    readout or residual trace; a flag false-positive alone means the block
    is rejected, not corrupted, and is excluded. The flag CNOTs' own wire
    legs are introduced overhead and count on any observable effect. Both
    syndrome-round copies count. Hadamards contribute their one effective
    fault to the Z-type depth only.
    """
    data = list(circuit.meta["data_qubits"])
    index = {q: i for i, q in enumerate(data)}
    y_ledger = frozenset(x_ledger | z_ledger)
    r_x = [0] * len(data)
    r_y = [0] * len(data)
    r_z = [0] * len(data)
    aux = circuit.meta["block"] == "aux"

    for _, label, side, qubit in enumerable_locations(circuit):
        if qubit not in index:
            continue
        i = index[qubit]
        base = label.split(".")[0]
        is_h = side == "single"
        is_flag_cn = base.startswith("CN")
        effects = {}
        for pauli in ("X", "Y", "Z"):
            sig, res = inject_and_propagate(circuit, label, side, pauli)
            if is_flag_cn:
                effects[pauli] = not is_neutral(circuit, sig, res)
            else:
                effects[pauli] = has_nonflag_effect(circuit, sig, res)
        in_y_ledger = (base, side, "X") in y_ledger or (base, side, "Z") in y_ledger
        if not is_h and effects["X"] and (base, side, "X") not in x_ledger:
            r_x[i] += 1
        if not is_h and effects["Y"] and not in_y_ledger:
            r_y[i] += 1
        if not is_h and effects["Z"] and (base, side, "Z") not in z_ledger:
            r_z[i] += 1
        if is_h and (effects["X"] or effects["Z"]):
            r_z[i] += 1
            if effects["Y"]:
                r_y[i] += 1

    if aux:
        return DepthProfile(tuple(r_x), tuple(r_x), (0,) * len(data))
    return DepthProfile(tuple(r_x), tuple(r_y), tuple(r_z))


def effective_R(profile: DepthProfile, gamma: int = DEFAULT_GAMMA) -> BlockDepth:
    """R_q = ceil((r_x + r_y + r_z) / 3) per qubit."""
    R = tuple(ceil((x + y + z) / 3) for x, y, z in zip(profile.r_x, profile.r_y, profile.r_z))
    return BlockDepth(R, gamma)


@lru_cache(maxsize=None)
def block_analysis(block: str, gamma: int = DEFAULT_GAMMA):
    """Circuit, derived ledgers, depth profile and R for one block kind."""
    circuit = build_full_ec_circuit(include_flags=True, block_kind=block)
    x_ledger = derive_perfect_assumptions(view_table(circuit, "X"))
    z_ledger = derive_perfect_assumptions(view_table(circuit, "Z"))
    profile = count_fault_locations(circuit, x_ledger, z_ledger)
    return circuit, x_ledger, z_ledger, profile, effective_R(profile, gamma)


def data_block_depth(gamma: int = DEFAULT_GAMMA) -> BlockDepth:
    return block_analysis("data", gamma)[4]


def aux_block_depth(gamma: int = DEFAULT_GAMMA) -> BlockDepth:
    return block_analysis("aux", gamma)[4]
