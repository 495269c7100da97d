"""CNOT budgets per error-correction period, runtime and depth-limit checks.

The per-period counts at k=1 are cross-checked against the assembled
circuits (labeled CNOTs; a repeated syndrome round reuses its number, and
the flag scheme contributes CN1-CN16). Per extra concatenation level every
CNOT is replaced transversally, so counts grow by a factor of 7 per level
(an estimate; the factor is configurable).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import pinned
from .builders import build_full_ec_circuit, build_t_gadget, build_toffoli_gadget
from .depth import BlockDepth

GATE_CLASS_ALIASES = {
    "transversal": "transversal",
    "t": "t", "tgate": "t", "tGate": "t",
    "toffoli": "toffoli", "toffoli1": "toffoli", "toffoli2": "toffoli", "toffoli3": "toffoli",
}
LEVEL_GROWTH_FACTOR = 7


@dataclass(frozen=True)
class GateCost:
    gate_class: str
    cnots_per_period_k1: int
    growth_factor_per_level: int = LEVEL_GROWTH_FACTOR


@dataclass(frozen=True)
class RuntimeEstimate:
    total_cnots: int
    cnot_time: float
    seconds: float


@lru_cache(maxsize=None)
def derived_cnot_counts() -> dict[str, int]:
    """Counts recomputed from the circuit builders."""
    return {
        "transversal": build_full_ec_circuit(True, "data").count_cnot_labels(),
        "t": build_t_gadget().count_cnot_labels(),
        "toffoli": build_toffoli_gadget().count_cnot_labels(),
    }


def gate_cost(gate_class: str) -> GateCost:
    try:
        canonical = GATE_CLASS_ALIASES[gate_class]
    except KeyError:
        raise ValueError(f"unknown gate class {gate_class!r}") from None
    return GateCost(canonical, pinned.CNOTS_PER_PERIOD[canonical])


def cnot_count(gate_class: str, k: int = 1, growth_factor: int = LEVEL_GROWTH_FACTOR) -> int:
    """Labeled CNOTs for one period of the gate class at concatenation level k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    try:
        base = pinned.CNOTS_PER_PERIOD[GATE_CLASS_ALIASES[gate_class]]
    except KeyError:
        raise ValueError(f"unknown gate class {gate_class!r}") from None
    return base * growth_factor ** (k - 1)


def estimate_runtime(
    gate_counts: dict[str, int],
    k: int = 1,
    cnot_time: float = pinned.CNOT_TIME_SECONDS,
    growth_factor: int = LEVEL_GROWTH_FACTOR,
) -> RuntimeEstimate:
    """Total CNOTs across gate classes times the per-CNOT time bound."""
    total = 0
    for gate_class, count in gate_counts.items():
        if count < 0:
            raise ValueError("gate counts must be nonnegative")
        total += count * cnot_count(gate_class, k, growth_factor)
    return RuntimeEstimate(total, cnot_time, total * cnot_time)


@dataclass(frozen=True)
class DepthCheck:
    k: int
    x: int
    per_qubit_depth: int
    limit: int
    passed: bool
    max_admissible_k: int


def period_depth(block: BlockDepth, k: int, x: int) -> int:
    """Deepest per-qubit effective depth in one period at level k.

    The first-position lineage accumulates R1 per level; the syndrome and
    recovery work adds gamma per algorithm step.
    """
    return k * block.R[0] + block.gamma * x


def check_permitted_depth(block: BlockDepth, k: int, x: int, limit: int = pinned.PERMITTED_DEPTH) -> DepthCheck:
    """Flag any qubit whose per-period operation count exceeds the limit."""
    if limit <= 0:
        raise ValueError("limit must be positive")
    depth = period_depth(block, k, x)
    max_k = 0
    while period_depth(block, max_k + 1, x) <= limit:
        max_k += 1
        if max_k > 10_000:
            break
    return DepthCheck(k, x, depth, limit, depth <= limit, max_k)
