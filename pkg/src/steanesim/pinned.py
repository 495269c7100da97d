"""Pinned reference outputs used for regression checks.

Sixteen-digit maximum-threshold values per concatenation level, keyed the
way the table generators emit them; ``steanesim tables --check`` and the
acceptance suite compare regenerated tables against these.
"""
from __future__ import annotations

# (x_star, max_p_th) per level k for the transversal gate class.
TABLE_1A_DATA = {
    1: (3, 2.545392838961480e-04),
    2: (1, 1.581849407936365e-04),
    3: (1, 1.541452488659314e-04),
    4: (1, 1.535849320196374e-04),
    5: (1, 1.535052191135160e-04),
    6: (1, 1.534938383096437e-04),
    7: (1, 1.534922126182756e-04),
    8: (1, 1.534919803794627e-04),
    9: (1, 1.534919472025467e-04),
    10: (1, 1.534919424629885e-04),
}

TABLE_1B_AUX = {
    1: (2, 4.235493434985176e-04),
    2: (1, 3.325573661456601e-04),
    3: (1, 3.253090435914119e-04),
    4: (1, 3.242992819087329e-04),
    5: (1, 3.241555417366799e-04),
    6: (1, 3.241350178274260e-04),
    7: (1, 3.241320860525464e-04),
    8: (1, 3.241316672318930e-04),
    9: (1, 3.241316074004594e-04),
    10: (1, 3.241315988531136e-04),
}

# max_p_th per (k, r) on the auxiliary block; r=None is the limit row and
# coincides with the transversal value for that level.
TABLE_2A_T_GATE = {
    (1, 1): 2.117746717492588e-05,
    (1, 10): 1.460514977581095e-04,
    (1, 100): 3.559238180659812e-04,
    (1, 1000): 4.156519563282803e-04,
    (1, 10000): 4.227461258593848e-04,
    (1, None): 4.235493434985176e-04,
    (2, 1): 1.225151811985496e-04,
    (2, 10): 2.332028780560102e-04,
    (2, 100): 3.138226254720990e-04,
    (2, 1000): 3.304774598767125e-04,
    (2, 10000): 3.323470128717182e-04,
    (2, None): 3.325573661456601e-04,
    (3, 1): 2.120482579274038e-04,
    (3, 10): 2.794082852232359e-04,
    (3, 100): 3.173245799080812e-04,
    (3, 1000): 3.244355203675500e-04,
    (3, 10000): 3.252208411591097e-04,
    (3, None): 3.253090435914119e-04,
    (4, 1): 2.655893487303872e-04,
    (4, 10): 3.020782480236627e-04,
    (4, 100): 3.205601428289243e-04,
    (4, 1000): 3.238926116780298e-04,
    (4, 10000): 3.242582455709016e-04,
    (4, None): 3.242992819087329e-04,
    (5, 1): 2.942962587328901e-04,
    (5, 10): 3.132112741262893e-04,
    (5, 100): 3.223416702370663e-04,
    (5, 1000): 3.239587893449915e-04,
    (5, 10000): 3.241356935969836e-04,
    (5, None): 3.241555417366799e-04,
    (6, 1): 3.090826895278016e-04,
    (6, 10): 3.187031101529598e-04,
    (6, 100): 3.232412624832499e-04,
    (6, 1000): 3.240381943606451e-04,
    (6, 10000): 3.241252517489947e-04,
    (6, None): 3.241350178274260e-04,
}

TABLE_2B_TOFFOLI_TARGET = {
    (1, 1): 5.294366793731470e-05,
    (1, 10): 2.491466726461868e-04,
    (1, 100): 3.958405079425398e-04,
    (1, 1000): 4.206051077443075e-04,
    (1, 10000): 4.232530663520711e-04,
    (1, None): 4.235493434985176e-04,
    (2, 1): 1.662786830728301e-04,
    (2, 10): 2.786443649940462e-04,
    (2, 100): 3.251411813479597e-04,
    (2, 1000): 3.317850005371942e-04,
    (2, 10000): 3.324798056189911e-04,
    (2, None): 3.325573661456601e-04,
    (3, 1): 2.417036904907203e-04,
    (3, 10): 3.015607830486628e-04,
    (3, 100): 3.221799088505769e-04,
    (3, 1000): 3.249850293133916e-04,
    (3, 10000): 3.252765256929118e-04,
    (3, None): 3.253090435914119e-04,
    (4, 1): 2.823189225421760e-04,
    (4, 10): 3.130276678412809e-04,
    (4, 100): 3.228397991964612e-04,
    (4, 1000): 3.241485045352345e-04,
    (4, 10000): 3.242841535895349e-04,
    (4, None): 3.242992819087329e-04,
    (5, 1): 3.031248322460440e-04,
    (5, 10): 3.186541761167236e-04,
    (5, 100): 3.234488317485713e-04,
    (5, 1000): 3.240826085281899e-04,
    (5, 10000): 3.241482247386771e-04,
    (5, None): 3.241555417366799e-04,
    (6, 1): 3.136109302804428e-04,
    (6, 10): 3.214164004069907e-04,
    (6, 100): 3.237871009174483e-04,
    (6, 1000): 3.240991302796217e-04,
    (6, 10000): 3.241314176071593e-04,
    (6, None): 3.241350178274260e-04,
}

# Depth profiles and period coefficients per block.
DATA_BLOCK_RX = (9, 11, 11, 12, 14, 12, 12)
DATA_BLOCK_RZ = (5, 14, 14, 16, 12, 8, 8)
DATA_BLOCK_RY = (5, 14, 14, 16, 14, 10, 10)
AUX_BLOCK_RX = (8, 11, 11, 12, 10, 8, 8)
DATA_BLOCK_R = (7, 13, 13, 15, 14, 10, 10)
AUX_BLOCK_R = (6, 8, 8, 8, 7, 6, 6)

# Perfect-operation ledgers (display names).
X_PERFECT = ("X1^C", "X35^C", "X36^C")
Z_PERFECT = (
    "Z1^C", "Z1^T", "Z2^C", "Z2^T", "Z3^T", "Z5^T",
    "Z8^T", "Z31^T", "Z34^T", "Z35^C", "Z36^C",
)

# Coefficient anchors: c(data, k=1, x=3) and c(aux, k=1, x=2) at gamma=4.
C_DATA_K1_X3 = 11786
C_AUX_K1_X2 = 4722

# Resource constants: labeled CNOTs per error-correction period at k=1.
CNOTS_PER_PERIOD = {"transversal": 52, "t": 175, "toffoli": 436}
CNOT_TIME_SECONDS = 2.85e-4
PERMITTED_DEPTH = 200
