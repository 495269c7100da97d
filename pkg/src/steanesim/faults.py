"""Exhaustive single-fault injection through the encode/decode cycle.

A fault on a gate acts after the gate executes (a faulty gate is modeled as
the perfect gate followed by a Pauli on one of its output legs). Each fault
is propagated as a Pauli frame to every measurement; the resulting
signature combines both repetitions of each syndrome type, the terminal
redundant-qubit readout, and one parity bit per flag gadget.

Enumerated locations are the data-block legs of the labeled CNOTs C1-C36
(ancilla legs of the syndrome couplings belong to the ancilla block's own
analysis), the Hadamards H1-H6, and both legs of the flag CNOTs CN1-CN16.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .circuits import Circuit, base_label
from .paulis import GENERATOR_SUPPORTS, PauliOperator, conjugate_through, mask_from_qubits, parity

_SUPPORT_MASKS = tuple(mask_from_qubits(s) for s in GENERATOR_SUPPORTS)
_LOC_RE = re.compile(r"^(C|CN|H)(\d+)(?:\.(\d+))?$")


@dataclass(frozen=True)
class FaultLocation:
    """One fault location-side: gate label (with round-copy suffix), leg, Pauli."""

    label: str
    side: str   # "control" | "target" | "single"
    pauli: str  # "X" | "Y" | "Z"

    def display_name(self) -> str:
        """Copy-collapsed display name: X22^C, Z_H1 -> ZH1, XCN7^C."""
        kind, num, _ = _split_label(self.label)
        if kind == "H":
            return f"{self.pauli}H{num}"
        suffix = "^C" if self.side == "control" else "^T"
        prefix = "CN" if kind == "CN" else ""
        return f"{self.pauli}{prefix}{num}{suffix}"

    def ledger_key(self) -> tuple[str, str, str]:
        """Copy-collapsed key used by perfect-operation ledgers."""
        return (base_label(self.label), self.side, self.pauli)

    def sort_key(self):
        kind, num, copy = _split_label(self.label)
        return (kind, num, copy, self.side, self.pauli)


def _split_label(label: str) -> tuple[str, int, int]:
    m = _LOC_RE.match(label)
    if not m:
        raise ValueError(f"not an enumerable gate label: {label!r}")
    return m.group(1), int(m.group(2)), int(m.group(3) or 1)


def location_from_name(name: str) -> tuple[str, str, str]:
    """Parse a display name like ``X22^C``/``ZH1``/``XCN13^T`` to a ledger key."""
    m = re.match(r"^([XYZ])(CN|H)?(\d+)(?:\^([CT]))?$", name)
    if not m:
        raise ValueError(f"bad location name {name!r}")
    pauli, kind, num, side = m.group(1), m.group(2) or "C", m.group(3), m.group(4)
    if kind == "H":
        return (f"H{num}", "single", pauli)
    if side is None:
        raise ValueError(f"CNOT location {name!r} needs ^C or ^T")
    return (f"{kind}{num}", "control" if side == "C" else "target", pauli)


@dataclass(frozen=True)
class MeasurementSignature:
    """Deterministic flip pattern of every readout relative to a clean run."""

    z_syn: tuple[tuple[int, int, int], ...]  # one triple per Z-stabilizer round
    x_syn: tuple[tuple[int, int, int], ...]
    meas: tuple[int, ...]                    # terminal data readout, qubit order
    flags: tuple[int, ...]                   # one parity bit per flag gadget
    flag_raw: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def rounds_disagree(self) -> bool:
        return len(set(self.z_syn)) > 1 or len(set(self.x_syn)) > 1

    @property
    def is_trivial(self) -> bool:
        return (
            all(t == (0, 0, 0) for t in self.z_syn)
            and all(t == (0, 0, 0) for t in self.x_syn)
            and not any(self.meas)
            and not any(self.flags)
        )

    def agreed_z(self) -> tuple[int, int, int] | None:
        return self.z_syn[0] if len(set(self.z_syn)) == 1 else None

    def agreed_x(self) -> tuple[int, int, int] | None:
        return self.x_syn[0] if len(set(self.x_syn)) == 1 else None

    def __str__(self) -> str:
        zs = "/".join("".join(map(str, t)) for t in self.z_syn)
        xs = "/".join("".join(map(str, t)) for t in self.x_syn)
        ms = "".join(map(str, self.meas))
        fs = "".join(map(str, self.flags))
        out = f"zSyn={zs} xSyn={xs} meas={ms}"
        return out + (f" flags={fs}" if self.flags else "")


@dataclass
class TableEntry:
    signature: MeasurementSignature
    members: list[tuple[FaultLocation, PauliOperator]] = field(default_factory=list)


@dataclass
class DecodingTable:
    """Map from measurement signature to the faults that produce it."""

    circuit: Circuit
    entries: dict[MeasurementSignature, TableEntry] = field(default_factory=dict)

    def add(self, sig: MeasurementSignature, loc: FaultLocation, residual: PauliOperator) -> None:
        self.entries.setdefault(sig, TableEntry(sig)).members.append((loc, residual))

    def sorted_entries(self) -> list[TableEntry]:
        out = []
        for entry in self.entries.values():
            entry.members.sort(key=lambda m: m[0].sort_key())
            out.append(entry)
        out.sort(key=lambda e: (e.signature.z_syn, e.signature.x_syn, e.signature.meas, e.signature.flags))
        return out


def enumerable_locations(circuit: Circuit, include_flag_legs: bool = False) -> list[tuple[int, str, str, int]]:
    """(gate index, label, side, qubit) for every data-block fault leg.

    Flag CNOTs contribute their wire leg; the flag-qubit legs are audited
    separately by the gadget condition checks (pass ``include_flag_legs``
    to enumerate them too).
    """
    data = set(circuit.meta["data_qubits"])
    out = []
    for idx, g in enumerate(circuit.gates):
        if g.kind == "CNOT":
            if g.qubits[0] in data:
                out.append((idx, g.label, "control", g.qubits[0]))
            if g.qubits[1] in data:
                out.append((idx, g.label, "target", g.qubits[1]))
            if include_flag_legs and g.label.startswith("CN"):
                side = "target" if g.qubits[0] in data else "control"
                flag = g.qubits[1] if side == "target" else g.qubits[0]
                out.append((idx, g.label, side, flag))
        elif g.kind == "H" and g.label.startswith("H"):
            out.append((idx, g.label, "single", g.qubits[0]))
    return out


def _signature_from_bits(circuit: Circuit, bits: dict[str, int]) -> MeasurementSignature:
    meta = circuit.meta
    z_syn, x_syn = [], []
    for rnd in meta["z_rounds"]:
        word = [bits[lbl] for lbl in rnd["meas_labels"]]
        mask = sum(b << i for i, b in enumerate(word))
        z_syn.append(tuple(parity(mask & s) for s in _SUPPORT_MASKS))
    for rnd in meta["x_rounds"]:
        word = [bits[lbl] for lbl in rnd["meas_labels"]]
        mask = sum(b << i for i, b in enumerate(word))
        x_syn.append(tuple(parity(mask & s) for s in _SUPPORT_MASKS))
    meas = tuple(bits[lbl] for _, _, lbl in meta["terminal_meas"])
    flags, raw = [], []
    for plan in meta["gadgets"]:
        pair = (bits[plan.meas_labels[0]], bits[plan.meas_labels[1]])
        raw.append(pair)
        flags.append(pair[0] ^ pair[1])
    return MeasurementSignature(tuple(z_syn), tuple(x_syn), meas, tuple(flags), tuple(raw))


def inject_and_propagate(
    circuit: Circuit, label: str, side: str, pauli: str
) -> tuple[MeasurementSignature, PauliOperator]:
    """Deterministic frame propagation of one fault to all readouts.

    Returns the measurement signature and the residual Pauli on the block
    qubits at circuit end (before any correction).
    """
    start = None
    qubit = None
    for idx, g in enumerate(circuit.gates):
        if g.label == label:
            if side == "control":
                qubit = g.qubits[0]
            elif side == "target":
                qubit = g.qubits[1]
            else:
                qubit = g.qubits[0]
            start = idx
            break
    if start is None:
        raise KeyError(f"no gate labeled {label!r}")
    frame = PauliOperator.single(circuit.n_qubits, qubit + 1, pauli)
    bits: dict[str, int] = {
        lbl: 0
        for lbl in _all_measurement_labels(circuit)
    }
    for g in circuit.gates[start + 1:]:
        if g.kind in ("PREP0L", "PREPSTEANE", "CAT2", "PREP0", "PREPP"):
            continue
        if g.kind == "MZ":
            bits[g.label] = (frame.x_bits >> g.qubits[0]) & 1
            continue
        if g.kind == "MX":
            bits[g.label] = (frame.z_bits >> g.qubits[0]) & 1
            continue
        frame = conjugate_through(g.kind, g.qubits, frame)
    # Residuals are reported in the pre-decode-Hadamard frame (an X left
    # after a decode-side H is the same observable as a Z before it).
    for q in circuit.meta.get("decode_h_qubits", ()):
        frame = conjugate_through("H", (q,), frame)
    data = circuit.meta["data_qubits"]
    mask = sum(1 << q for q in data)
    residual = PauliOperator(len(data), _compress(frame.x_bits & mask, data), _compress(frame.z_bits & mask, data))
    return _signature_from_bits(circuit, bits), residual


def _compress(bitmask: int, qubits) -> int:
    out = 0
    for i, q in enumerate(qubits):
        if (bitmask >> q) & 1:
            out |= 1 << i
    return out


def _all_measurement_labels(circuit: Circuit) -> list[str]:
    return [g.label for g in circuit.gates if g.is_measurement]


def trivial_signature(circuit: Circuit) -> MeasurementSignature:
    bits = {lbl: 0 for lbl in _all_measurement_labels(circuit)}
    return _signature_from_bits(circuit, bits)


def reconstruct_meta(circuit: Circuit) -> Circuit:
    """Rebuild the analysis metadata of a parsed encode/decode circuit.

    The text format carries only labels, so the round structure, flag
    gadgets and terminal-readout conventions are recovered from the label
    scheme. Returns the same circuit with ``meta`` populated.
    """
    if circuit.meta.get("data_qubits"):
        return circuit
    labels = {g.label: g for g in circuit.gates}
    if "C12" not in labels or "C19" not in labels:
        raise ValueError("not an encode/decode cycle: syndrome couplings C12/C19 missing")
    data = tuple(range(7))
    meas_of = {g.qubits[0]: g.label for g in circuit.gates if g.is_measurement}

    def rounds(first: int, anc_side: int) -> list[dict]:
        reps = sorted(
            {int(lbl.split(".")[1]) if "." in lbl else 1
             for lbl in labels if base_label(lbl) == f"C{first}" and lbl.startswith("C")}
        )
        out = []
        for rep in reps:
            anc, meas_labels = [], []
            for i in range(7):
                lbl = f"C{first + i}" + ("" if rep == 1 else f".{rep}")
                gate = labels[lbl]
                anc.append(gate.qubits[anc_side])
                meas_labels.append(meas_of[gate.qubits[anc_side]])
            out.append({"rep": rep, "anc": tuple(anc), "meas_labels": meas_labels})
        return out

    from .builders import FlagPlan  # deferred: builders imports nothing from here

    gadgets = []
    for gid in range(1, 9):
        cna, cnb = f"CN{2 * gid - 1}", f"CN{2 * gid}"
        if cna not in labels:
            continue
        a, b = labels[cna], labels[cnb]
        kind = "X" if a.qubits[0] in data else "Z"
        wire = a.qubits[0] if kind == "X" else a.qubits[1]
        flags = (a.qubits[1], b.qubits[1]) if kind == "X" else (a.qubits[0], b.qubits[0])
        gadgets.append(FlagPlan(gid, kind, wire, (cna, cnb), flags, (meas_of[flags[0]], meas_of[flags[1]])))

    decode_h = tuple(labels[f"H{i}"].qubits[0] for i in (4, 5, 6) if f"H{i}" in labels)
    terminal = [
        (q, "X" if q in decode_h else "Z", meas_of[q])
        for q in data if q in meas_of
    ]
    circuit.meta.update(
        {
            "block": "aux" if "C1" not in labels else "data",
            "data_qubits": data,
            "decode_h_qubits": decode_h,
            "syndrome_reps": len(rounds(12, 0)),
            "x_rounds": rounds(12, 0),
            "z_rounds": rounds(19, 1),
            "terminal_meas": terminal,
            "gadgets": gadgets,
        }
    )
    return circuit


def canonical_residual(circuit: Circuit, residual: PauliOperator) -> tuple[int, int]:
    """Observable part of a residual: full Pauli on unread qubits, the
    measurement-flipping component on read-out qubits."""
    meta = circuit.meta
    measured = {q: basis for q, basis, _ in meta["terminal_meas"]}
    x_mask = z_mask = 0
    for i, q in enumerate(meta["data_qubits"]):
        bit = 1 << i
        basis = measured.get(q)
        if basis is None:
            x_mask |= bit
            z_mask |= bit
        elif basis == "Z":
            x_mask |= bit
        else:
            z_mask |= bit
    return (residual.x_bits & x_mask, residual.z_bits & z_mask)


def is_neutral(circuit: Circuit, sig: MeasurementSignature, residual: PauliOperator) -> bool:
    """A fault with no observable effect at all."""
    return sig.is_trivial and canonical_residual(circuit, residual) == (0, 0)


def has_nonflag_effect(circuit: Circuit, sig: MeasurementSignature, residual: PauliOperator) -> bool:
    """True when the fault leaves a syndrome, readout or residual trace.

    A fault whose only consequence is a flag false-positive (block rejected,
    no error delivered) does not count as an effect here.
    """
    syndromes_clean = all(t == (0, 0, 0) for t in sig.z_syn) and all(t == (0, 0, 0) for t in sig.x_syn)
    return not (syndromes_clean and not any(sig.meas) and canonical_residual(circuit, residual) == (0, 0))


def is_flag_leg(label: str, side: str) -> bool:
    """True for the flag-qubit leg of a flag CNOT (CN1-8 couple wire->flag,
    CN9-16 couple flag->wire)."""
    if not label.startswith("CN"):
        return False
    number = int(label[2:].split(".")[0])
    return side == ("target" if number <= 8 else "control")


def enumerate_single_faults(circuit: Circuit, types=("X", "Y", "Z")) -> DecodingTable:
    """One table entry per signature over every (location-side, Pauli type)
    on the CNOT legs (flag legs included), Hadamards, and flag CNOTs."""
    table = DecodingTable(circuit)
    for _, label, side, _ in enumerable_locations(circuit, include_flag_legs=True):
        for pauli in types:
            sig, residual = inject_and_propagate(circuit, label, side, pauli)
            table.add(sig, FaultLocation(label, side, pauli), residual)
    return table


def view_table(circuit: Circuit, view: str) -> DecodingTable:
    """Single-error-type table as grouped in the reference analysis.

    The X view holds X faults on CNOT legs. The Z view holds Z faults on
    CNOT legs plus every effective Hadamard fault (Z after an encode-side H,
    X after a decode-side H mimic Z-type residuals). The Y view holds Y
    faults on CNOT legs and Hadamards.
    """
    if view not in ("X", "Y", "Z"):
        raise ValueError(f"unknown view {view!r}")
    table = DecodingTable(circuit)
    for _, label, side, _ in enumerable_locations(circuit, include_flag_legs=True):
        is_h = side == "single"
        paulis: tuple[str, ...]
        if view == "Y":
            paulis = ("Y",)
        elif is_h:
            paulis = ("X", "Z") if view == "Z" else ()
        else:
            paulis = (view,)
        for pauli in paulis:
            sig, residual = inject_and_propagate(circuit, label, side, pauli)
            table.add(sig, FaultLocation(label, side, pauli), residual)
    return table


# ---------------------------------------------------------------------------
# Collision classification and perfect-operation ledgers
# ---------------------------------------------------------------------------

PerfectOpLedger = frozenset  # of (base label, side, pauli) keys


@dataclass
class CollisionClass:
    signature: MeasurementSignature
    verdict: str  # "unique" | "benign" | "ambiguous"
    members: list[tuple[FaultLocation, PauliOperator]]
    includes_no_error: bool
    residual_groups: list[tuple[tuple[int, int], list[FaultLocation]]]


def _counts_as_member(circuit: Circuit, loc: FaultLocation, sig: MeasurementSignature, res: PauliOperator) -> bool:
    """Result-neutral faults are enumerated but excluded from classification.

    For the labeled gates a flag false-positive alone is not a result (the
    block is rejected, no error is delivered); for the flag CNOTs' own wire
    legs any observable effect counts, since those locations are the
    introduced overhead the gadget must account for. Faults on the
    flag-qubit legs are gadget-internal: the condition-1 audit covers them
    and they stay out of the decoding-table classes.
    """
    if is_flag_leg(loc.label, loc.side):
        return False
    if loc.label.startswith("CN"):
        return not is_neutral(circuit, sig, res)
    return has_nonflag_effect(circuit, sig, res)


def classify_collisions(table: DecodingTable, ledger: PerfectOpLedger = frozenset()) -> list[CollisionClass]:
    """Group faults by signature and judge whether one correction fits all.

    Ledger members and result-neutral faults are removed before
    classification. Within one signature class all read-out flips coincide
    by construction, so members can only disagree on the unread data qubit;
    ``benign`` means they do not.
    """
    circuit = table.circuit
    clean = trivial_signature(circuit)
    classes: list[CollisionClass] = []
    seen_clean = False
    for entry in table.sorted_entries():
        members = [
            (loc, res)
            for loc, res in entry.members
            if loc.ledger_key() not in ledger and _counts_as_member(circuit, loc, entry.signature, res)
        ]
        if not members and entry.signature != clean:
            continue
        groups: dict[tuple[int, int], list[FaultLocation]] = {}
        for loc, res in members:
            groups.setdefault(canonical_residual(circuit, res), []).append(loc)
        includes_no_error = entry.signature == clean
        if includes_no_error:
            seen_clean = True
            groups.setdefault((0, 0), [])
        distinct = len(groups)
        if distinct <= 1:
            verdict = "benign" if len(members) + includes_no_error > 1 else "unique"
        else:
            verdict = "ambiguous"
        classes.append(
            CollisionClass(entry.signature, verdict, members, includes_no_error, sorted(groups.items()))
        )
    if not seen_clean:
        classes.append(CollisionClass(clean, "unique", [], True, [((0, 0), [])]))
    return classes


def derive_perfect_assumptions(table: DecodingTable) -> PerfectOpLedger:
    """Minimum set of location-sides whose removal leaves no ambiguity.

    Signature classes are disjoint in members, so a per-class minimum is a
    global minimum: in each ambiguous class keep exactly one residual group
    (forced to the no-effect group when the class contains the clean
    signature) and assume every other member perfect. Ties between groups of
    equal size are broken by discarding the group whose members sit later in
    the circuit.
    """
    removed: set[tuple[str, str, str]] = set()
    for cls in classify_collisions(table):
        if cls.verdict != "ambiguous":
            continue
        groups = cls.residual_groups
        if cls.includes_no_error:
            keep = (0, 0)
        else:
            def group_rank(item):
                canonical, locs = item
                latest = max(loc.sort_key() for loc in locs)
                return (-len(locs), latest, canonical)
            keep = sorted(groups, key=group_rank)[0][0]
        for canonical, locs in groups:
            if canonical != keep:
                removed.update(loc.ledger_key() for loc in locs)
    return frozenset(removed)


def ledger_from_names(names) -> PerfectOpLedger:
    return frozenset(location_from_name(n) for n in names)


def ledger_names(ledger: PerfectOpLedger) -> list[str]:
    return sorted(FaultLocation(lbl, side, pauli).display_name() for lbl, side, pauli in ledger)


# ---------------------------------------------------------------------------
# Flag-gadget usage conditions
# ---------------------------------------------------------------------------

@dataclass
class FlagConditionReport:
    gadget_id: int
    kind: str
    cn_labels: tuple[str, str]
    condition1: bool
    condition2: bool
    condition3: bool
    detail: dict

    @property
    def all_pass(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3


def check_flag_conditions(
    circuit: Circuit,
    x_ledger: PerfectOpLedger = frozenset(),
    z_ledger: PerfectOpLedger = frozenset(),
) -> list[FlagConditionReport]:
    """Mechanical audit of the three usage conditions per flag gadget.

    1. The guarded-type fault on the wire at the first CN is either
       signature-distinct from the gadget's own flag-leg faults or, like
       them, has no observable effect.
    2. The guarded-type fault on the wire after the second CN joins no
       signature class with a conflicting correction.
    3. Opposite-type faults on the gadget's wire legs leave the
       opposite-type table unambiguous (judged under that table's ledger).
    """
    reports = []
    guarded = {"X": "X", "Z": "Z"}
    for plan in circuit.meta["gadgets"]:
        kind = plan.kind
        g_pauli = guarded[kind]
        wire_side = "control" if kind == "X" else "target"
        flag_side = "target" if kind == "X" else "control"
        cn_a, cn_b = plan.cn_labels

        sig_a, res_a = inject_and_propagate(circuit, cn_a, wire_side, g_pauli)
        own = [inject_and_propagate(circuit, lbl, flag_side, g_pauli) for lbl in (cn_a, cn_b)]
        harmless_a = canonical_residual(circuit, res_a) == (0, 0)
        cond1 = all(
            sig_a != sig or (harmless_a and canonical_residual(circuit, res) == (0, 0))
            for sig, res in own
        )

        view = view_table(circuit, g_pauli)
        classes = {cls.signature: cls for cls in classify_collisions(view, x_ledger if kind == "X" else z_ledger)}
        sig_b, _ = inject_and_propagate(circuit, cn_b, wire_side, g_pauli)
        cls_b = classes.get(sig_b)
        cond2 = cls_b is None or cls_b.verdict != "ambiguous"

        other = "Z" if kind == "X" else "X"
        other_view = view_table(circuit, other)
        other_ledger = z_ledger if other == "Z" else x_ledger
        other_classes = {cls.signature: cls for cls in classify_collisions(other_view, other_ledger)}
        cond3 = True
        detail_sigs = {}
        for lbl in (cn_a, cn_b):
            sig, res = inject_and_propagate(circuit, lbl, wire_side, other)
            detail_sigs[f"{other}@{lbl}"] = str(sig)
            cls = other_classes.get(sig)
            if cls is not None and cls.verdict == "ambiguous":
                cond3 = False
        reports.append(
            FlagConditionReport(
                plan.gadget_id, kind, plan.cn_labels, cond1, cond2, cond3,
                {"sig_first_cn_wire": str(sig_a), "sig_second_cn_wire": str(sig_b), **detail_sigs},
            )
        )
    return reports
