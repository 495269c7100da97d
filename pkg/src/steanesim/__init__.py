"""Fault-tolerant Steane-code encode/decode analysis toolkit."""

from .paulis import PauliOperator, StabilizerGenerator, X_GENERATORS, Z_GENERATORS, syndrome_bit
from .circuits import Circuit, Gate, parse, serialize
from .builders import (
    GadgetSpec,
    build_encoder,
    build_decoder,
    build_full_ec_circuit,
    build_gadget,
)
from .faults import (
    DecodingTable,
    FaultLocation,
    MeasurementSignature,
    check_flag_conditions,
    classify_collisions,
    derive_perfect_assumptions,
    enumerate_single_faults,
    inject_and_propagate,
    view_table,
)
from .depth import BlockDepth, DepthProfile, count_fault_locations, effective_R
from .threshold import ThresholdQuery, ThresholdResult, coefficient_c, evaluate_p_th, expand_levels, optimize_x
from .resources import check_permitted_depth, cnot_count, estimate_runtime

__version__ = "0.1.0"
