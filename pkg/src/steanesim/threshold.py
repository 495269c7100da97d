"""Concatenation-level expansion, pair-count coefficient and threshold search.

The failure coefficient c counts ordered pairs of fault locations inside one
encoded block over an error-correction period: with per-qubit depths
(A, B, B, D, E, F, F) + gamma*x, where A walks the expanded first-position
lineage and B=R2, D=R4, E=R5, F=R6 stay at their base-level values (the
expansion is deliberately asymmetric; only the first position accumulates
+R1 per level). All sums are exact integers; the single float division and
the 1/(2^k - 1) root reproduce the published sixteen-digit values.

For level k the expanded list has length 7^k; the literal expansion is kept
for modest k, while the default path evaluates the same sum in closed form:
sum over lineage positions s of list_k[s] equals T_{k-1} + 7^(k-1) * R1 with
T_j = (R1+...+R7) * (7^j - 1) / 6.
"""
from __future__ import annotations

from dataclasses import dataclass

from .depth import BlockDepth

R_PRIME = {"t": 20, "toffoli1": 19, "toffoli2": 17, "toffoli3": 8}
GATE_CLASSES = ("transversal",) + tuple(R_PRIME)
DEFAULT_X_MAX = 200
MAX_LITERAL_LEVEL = 8


@dataclass(frozen=True)
class ConcatenationProfile:
    base: BlockDepth
    level: int
    expanded: tuple[int, ...]


@dataclass(frozen=True)
class ThresholdQuery:
    k: int
    r: int | None           # None = transversal limit (r -> infinity)
    gate_class: str
    x: int

    @property
    def r0(self) -> float | None:
        if self.gate_class == "transversal" or self.r is None:
            return self.r
        return self.r - 1 + R_PRIME[self.gate_class]

    def depth_ratio(self) -> float:
        """(r*x/r0): the measured classes divide by r0 = r - 1 + r'."""
        if self.gate_class == "transversal" or self.r is None:
            return float(self.x)
        return self.r * self.x / self.r0


@dataclass(frozen=True)
class ThresholdResult:
    k: int
    r: int | None
    gate_class: str
    x_star: int
    c_at_x_star: float
    max_p_th: float


def expand_levels(base, k: int) -> ConcatenationProfile:
    """Materialized level-k depth list (7x growth per level).

    Each element e of the current list is replaced by [e + R1, R2, ..., R7];
    level 1 is the base list itself.
    """
    block = base if isinstance(base, BlockDepth) else BlockDepth(tuple(base))
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_LITERAL_LEVEL:
        raise ValueError(f"literal expansion capped at k={MAX_LITERAL_LEVEL}; use the closed form")
    lst = list(block.R)
    for _ in range(k - 1):
        nxt = []
        for e in lst:
            nxt.append(e + block.R[0])
            nxt.extend(block.R[1:7])
        lst = nxt
    return ConcatenationProfile(block, k, tuple(lst))


def _pair_sum_terms(A: int, B: int, D: int, E: int, F: int) -> int:
    return (
        2 * A * B + A * D + A * E + 2 * A * F
        + B * B + 2 * B * D + 2 * B * E + D * E
        + 4 * B * F + 2 * D * F + 2 * E * F + F * F
    )


def coefficient_c0_literal(profile: ConcatenationProfile, x: int, gamma: int) -> int:
    """Exact integer c0 by walking the materialized lineage positions."""
    R = profile.base.R
    gx = gamma * x
    B, D, E, F = R[1] + gx, R[3] + gx, R[4] + gx, R[5] + gx
    c0 = 0
    for s in range(0, 7 ** profile.level, 7):
        c0 += _pair_sum_terms(profile.expanded[s] + gx, B, D, E, F)
    return c0


def coefficient_c0(block: BlockDepth, k: int, x: int, gamma: int | None = None) -> int:
    """Exact integer c0 in closed form (no 7^k list)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if x < 1:
        raise ValueError("x must be >= 1")
    R = block.R
    gamma = block.gamma if gamma is None else gamma
    gx = gamma * x
    B, D, E, F = R[1] + gx, R[3] + gx, R[4] + gx, R[5] + gx
    n_lineage = 7 ** (k - 1)
    total = sum(R)
    if k == 1:
        sum_lineage = R[0]
    else:
        t_prev = total * (7 ** (k - 1) - 1) // 6  # full-list sum at level k-1
        sum_lineage = t_prev + n_lineage * R[0]
    sum_A = sum_lineage + n_lineage * gx
    rest = _pair_sum_terms(0, B, D, E, F)  # the A-free terms
    linear = 2 * B + D + E + 2 * F
    return linear * sum_A + n_lineage * rest


def coefficient_c(block: BlockDepth, k: int, x: int, gamma: int | None = None) -> float:
    """c = c0 / 7^(k-1), the per-level pair count."""
    return coefficient_c0(block, k, x, gamma) / 7 ** (k - 1)


def evaluate_p_th(query: ThresholdQuery, c: float) -> float:
    """p_th = (r*x/r0)^(1/(2^k - 1)) / c."""
    if c <= 0:
        raise ZeroDivisionError("coefficient c must be positive")
    return query.depth_ratio() ** (1.0 / (2 ** query.k - 1)) / c


def p_th(block: BlockDepth, k: int, x: int, r: int | None = None, gate_class: str = "transversal") -> float:
    return evaluate_p_th(ThresholdQuery(k, r, gate_class, x), coefficient_c(block, k, x))


def optimize_x(
    block: BlockDepth,
    k: int,
    r: int | None = None,
    gate_class: str = "transversal",
    x_max: int = DEFAULT_X_MAX,
) -> ThresholdResult:
    """Scan x = 1..x_max; ties resolve to the smallest x (first maximum)."""
    if gate_class not in GATE_CLASSES:
        raise ValueError(f"unknown gate class {gate_class!r}")
    if x_max < 1:
        raise ValueError("x_max must be >= 1")
    best_x, best_c, best_p = 1, 0.0, float("-inf")
    for x in range(1, x_max + 1):
        c = coefficient_c(block, k, x)
        val = evaluate_p_th(ThresholdQuery(k, r, gate_class, x), c)
        if val > best_p:
            best_x, best_c, best_p = x, c, val
    return ThresholdResult(k, r, gate_class, best_x, best_c, best_p)


def curve(block: BlockDepth, k: int, x_max: int = DEFAULT_X_MAX, r: int | None = None,
          gate_class: str = "transversal") -> list[tuple[int, int, float]]:
    """(k, x, p_th) rows for a fixed level."""
    rows = []
    for x in range(1, x_max + 1):
        c = coefficient_c(block, k, x)
        rows.append((k, x, evaluate_p_th(ThresholdQuery(k, r, gate_class, x), c)))
    return rows


TABLE2_R_VALUES = (1, 10, 100, 1000, 10000, None)  # None prints as the limit row


def generate_table_1(block: BlockDepth, k_max: int = 10, x_max: int = DEFAULT_X_MAX):
    return [optimize_x(block, k, x_max=x_max) for k in range(1, k_max + 1)]


def generate_table_2(block: BlockDepth, gate_class: str, k_max: int = 6, x_max: int = DEFAULT_X_MAX):
    rows = []
    for k in range(1, k_max + 1):
        for r in TABLE2_R_VALUES:
            rows.append(optimize_x(block, k, r=r, gate_class=gate_class, x_max=x_max))
    return rows
