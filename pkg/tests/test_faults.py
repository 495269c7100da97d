"""Fault enumeration against the reference decoding tables."""
from __future__ import annotations

import pytest

from golden_tables import X_PERFECT, X_TABLE, Z_PERFECT, Z_TABLE
from steanesim.builders import FLAG_GADGETS, build_full_ec_circuit
from steanesim.circuits import Circuit
from steanesim.faults import (
    FaultLocation,
    canonical_residual,
    check_flag_conditions,
    classify_collisions,
    derive_perfect_assumptions,
    enumerate_single_faults,
    inject_and_propagate,
    ledger_from_names,
    ledger_names,
    location_from_name,
    view_table,
)
from steanesim.paulis import PauliOperator


@pytest.fixture(scope="module")
def data_flags_off():
    return build_full_ec_circuit(include_flags=False, block_kind="data")


@pytest.fixture(scope="module")
def data_flags_on():
    return build_full_ec_circuit(include_flags=True, block_kind="data")


@pytest.fixture(scope="module")
def aux_flags_on():
    return build_full_ec_circuit(include_flags=True, block_kind="aux")


def boxed_view(circuit: Circuit, view: str):
    """Classes with agreeing syndrome rounds, keyed the reference way."""
    out = {}
    for cls in classify_collisions(view_table(circuit, view)):
        sig = cls.signature
        if sig.rounds_disagree:
            continue
        syn = sig.agreed_z() if view == "X" else sig.agreed_x()
        meas_idx = (3, 4, 5) if view == "X" else (0, 1, 2)
        key = ("".join(map(str, syn)), "".join(str(sig.meas[i]) for i in meas_idx))
        assert key not in out, f"duplicate boxed key {key}"
        out[key] = cls
    return out


def canonical_name(circuit: Circuit, residual: PauliOperator) -> str:
    x, z = canonical_residual(circuit, residual)
    return str(PauliOperator(7, x, z))


@pytest.mark.parametrize("view,golden", [("X", X_TABLE), ("Z", Z_TABLE)])
def test_flags_off_enumeration_reproduces_reference_table(data_flags_off, view, golden):
    classes = boxed_view(data_flags_off, view)
    seen_keys = set()
    for syn, meas, groups, color, no_error in golden:
        cls = classes[(syn, meas)]
        seen_keys.add((syn, meas))
        expected_members = {name for members, _ in groups for name in members}
        got_members = {loc.display_name() for loc, _ in cls.members}
        assert got_members == expected_members, f"{view} ({syn},{meas})"
        for members, residual in groups:
            for name in members:
                got = {canonical_name(data_flags_off.circuit if False else data_flags_off, r)
                       for loc, r in cls.members if loc.display_name() == name}
                assert got == {residual}, f"{name} residual"
        assert cls.includes_no_error == no_error
        assert (cls.verdict == "ambiguous") == (color is not None), f"{view} ({syn},{meas})"
    # no boxed signatures beyond the reference rows
    assert set(classes) == seen_keys, f"unexpected {view} classes: {set(classes) - seen_keys}"


def test_spec_anchor_propagations(data_flags_off):
    # The boxed locations on syndrome-round gates are the final-copy faults;
    # first-copy faults surface as round disagreement instead.
    sig1, _ = inject_and_propagate(data_flags_off, "C25", "control", "X")
    assert sig1.rounds_disagree
    sig, res = inject_and_propagate(data_flags_off, "C25.2", "control", "X")
    assert sig.agreed_z() == (0, 0, 0) and not sig.rounds_disagree
    assert tuple(sig.meas[i] for i in (3, 4, 5)) == (0, 0, 1)
    assert str(res) == "X7"

    sig, res = inject_and_propagate(data_flags_off, "C9", "target", "Z")
    assert sig.agreed_x() == (1, 0, 1)
    assert tuple(sig.meas[i] for i in (0, 1, 2)) == (1, 1, 1)
    assert canonical_name(data_flags_off, res) == "Z2Z3Z4"

    # a result-neutral location: X after the last fan-in on its wire
    sig, res = inject_and_propagate(data_flags_off, "C28", "control", "X")
    assert sig.is_trivial and canonical_residual(data_flags_off, res) == (0, 0)


def test_x_fault_groups_under_nonzero_syndrome(data_flags_off):
    classes = boxed_view(data_flags_off, "X")
    cls = classes[("100", "011")]
    assert {loc.display_name() for loc, _ in cls.members} == {"X2^C", "X3^T", "X6^T", "X3^C", "X6^C", "X12^T"}
    assert {canonical_name(data_flags_off, r) for _, r in cls.members} == {"X1X6X7"}


def test_enumeration_is_deterministic(data_flags_off):
    def dump(circuit):
        table = enumerate_single_faults(circuit)
        return [
            (str(e.signature), [(l.label, l.side, l.pauli, str(r)) for l, r in e.members])
            for e in table.sorted_entries()
        ]
    assert dump(data_flags_off) == dump(data_flags_off)


def test_y_faults_propagate_as_x_and_z(data_flags_off):
    sig_y, res_y = inject_and_propagate(data_flags_off, "C20", "control", "Y")
    sig_x, res_x = inject_and_propagate(data_flags_off, "C20", "control", "X")
    sig_z, res_z = inject_and_propagate(data_flags_off, "C20", "control", "Z")
    assert res_y == res_x.multiply(res_z)
    assert sig_y.meas == tuple(a ^ b for a, b in zip(sig_x.meas, sig_z.meas))


def test_empty_circuit_enumerates_nothing():
    empty = Circuit(7)
    empty.meta["data_qubits"] = tuple(range(7))
    empty.meta.update({"x_rounds": [], "z_rounds": [], "terminal_meas": [], "gadgets": []})
    assert enumerate_single_faults(empty).entries == {}


def test_unknown_gate_label_raises(data_flags_off):
    with pytest.raises(KeyError):
        inject_and_propagate(data_flags_off, "C99", "control", "X")


def test_flags_split_the_cyan_classes(data_flags_on):
    # X22^C and X26^C fire the CN7/CN8 gadget; their former partners do not.
    for flagged, partner in [("C22.2", "C29"), ("C26", "C21")]:
        sig_f, _ = inject_and_propagate(data_flags_on, flagged, "control", "X")
        sig_p, _ = inject_and_propagate(data_flags_on, partner, "control", "X")
        assert any(sig_f.flags), flagged
        assert sig_f != sig_p


def test_perfect_assumption_ledgers(data_flags_on, aux_flags_on):
    x_ledger = derive_perfect_assumptions(view_table(data_flags_on, "X"))
    assert ledger_names(x_ledger) == sorted(X_PERFECT)
    z_ledger = derive_perfect_assumptions(view_table(data_flags_on, "Z"))
    assert set(ledger_names(z_ledger)) == set(Z_PERFECT)
    assert len(z_ledger) == 11
    assert derive_perfect_assumptions(view_table(aux_flags_on, "X")) == frozenset()


def test_flagged_tables_have_no_ambiguity_under_ledgers(data_flags_on):
    x_ledger = ledger_from_names(X_PERFECT)
    z_ledger = ledger_from_names(Z_PERFECT)
    for view, ledger in (("X", x_ledger), ("Z", z_ledger)):
        classes = classify_collisions(view_table(data_flags_on, view), ledger)
        assert [c for c in classes if c.verdict == "ambiguous"] == []


def test_flags_off_ambiguous_classes_are_the_marked_rows(data_flags_off):
    for view, golden in (("X", X_TABLE), ("Z", Z_TABLE)):
        classes = boxed_view(data_flags_off, view)
        expected = {(syn, meas) for syn, meas, _, color, _ in golden if color is not None}
        got = {key for key, cls in classes.items() if cls.verdict == "ambiguous"}
        assert got == expected


def test_flag_conditions_all_pass(data_flags_on):
    reports = check_flag_conditions(
        data_flags_on, ledger_from_names(X_PERFECT), ledger_from_names(Z_PERFECT)
    )
    assert len(reports) == 8
    assert all(r.all_pass for r in reports)
    kinds = {r.gadget_id: r.kind for r in reports}
    assert all(kinds[g] == "X" for g in (1, 2, 3, 4))
    assert all(kinds[g] == "Z" for g in (5, 6, 7, 8))


def test_misplaced_gadget_fails_condition_two():
    # Ending the third gadget after C10 leaves the wire fault beyond it
    # colliding with the (110,110) class under a different residual.
    bad = build_full_ec_circuit(
        include_flags=True, block_kind="data",
        gadget_overrides={3: ("X", 4, ("CN5", "CN6"), ("C9", "C10"))},
    )
    reports = {r.gadget_id: r for r in check_flag_conditions(
        bad, ledger_from_names(X_PERFECT), ledger_from_names(Z_PERFECT))}
    assert not reports[3].condition2
    assert not reports[3].all_pass


def test_cn11_target_fault_matches_reference_claim(data_flags_on):
    sig, res = inject_and_propagate(data_flags_on, "CN11", "target", "Z")
    assert sig.agreed_x() == (0, 0, 0)
    assert tuple(sig.meas[i] for i in (0, 1, 2)) == (0, 1, 1)
    assert any(sig.flags)


def test_location_name_parsing_round_trips():
    for name in ("X22^C", "Z13^T", "ZH1", "XCN13^T"):
        label, side, pauli = location_from_name(name)
        assert FaultLocation(label, side, pauli).display_name() == name
    with pytest.raises(ValueError):
        location_from_name("X22")


def test_flag_gadget_wire_assignments():
    # Gadget wires recorded in the builder match the guarded fан-out wires.
    wires = {gid: spec[1] for gid, spec in FLAG_GADGETS.items()}
    assert wires == {1: 2, 2: 3, 3: 4, 4: 4, 5: 5, 6: 7, 7: 6, 8: 5}


def test_reconstructed_meta_matches_built_analysis(data_flags_on):
    from steanesim.circuits import parse, serialize
    from steanesim.faults import reconstruct_meta

    reparsed = reconstruct_meta(parse(serialize(data_flags_on)))
    assert reparsed.meta["block"] == "data"
    assert reparsed.meta["syndrome_reps"] == 2
    assert len(reparsed.meta["gadgets"]) == 8
    for view in ("X", "Z"):
        built = derive_perfect_assumptions(view_table(data_flags_on, view))
        again = derive_perfect_assumptions(view_table(reparsed, view))
        assert built == again


def test_reconstruct_meta_rejects_non_ec_circuits():
    from steanesim.builders import build_cat_state
    from steanesim.faults import reconstruct_meta

    with pytest.raises(ValueError, match="encode/decode"):
        reconstruct_meta(build_cat_state())


def test_flag_leg_faults_enumerated_but_not_classified(data_flags_on):
    from steanesim.faults import enumerate_single_faults, is_flag_leg

    table = enumerate_single_faults(data_flags_on, types=("X",))
    legs = [
        loc for e in table.entries.values() for loc, _ in e.members
        if is_flag_leg(loc.label, loc.side)
    ]
    assert len(legs) == 16  # one flag leg per CN gate
    classified = {
        loc.display_name()
        for cls in classify_collisions(table)
        for loc, _ in cls.members
    }
    assert not any(is_flag_leg(*loc.ledger_key()[:2]) for loc in legs if loc.display_name() in classified)
