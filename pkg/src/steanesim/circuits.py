"""Gate-level circuit IR with stable labels, plus text serialization.

Labels follow the scheme's naming: data-block CNOTs ``C1``..``C36`` (a
repeated syndrome round reuses the number with a ``.2`` copy suffix),
Hadamards ``H1``..``H6``, flag CNOTs ``CN1``..``CN16``, terminal
measurements ``M<q>:Z`` / ``M<q>:X``. Everything else gets a synthetic
``G<n>`` label. Qubits are 0-indexed in memory and 1-indexed in text.
"""
from __future__ import annotations

from dataclasses import dataclass, field

ONE_QUBIT_KINDS = {"H", "S", "SDG", "T", "TDG", "X", "Z", "Y", "PREP0", "PREPP", "MZ", "MX"}
TWO_QUBIT_KINDS = {"CNOT", "CAT2"}
THREE_QUBIT_KINDS = {"CCX"}
MACRO_KINDS = {"PREP0L", "PREPSTEANE"}  # 7-qubit logical-ancilla preparations
MEASURE_KINDS = {"MZ", "MX"}


@dataclass(frozen=True)
class Gate:
    """One labeled gate. ``tag`` carries the builder role and is not serialized."""

    kind: str
    qubits: tuple[int, ...]
    label: str
    tag: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind in ONE_QUBIT_KINDS:
            want = 1
        elif self.kind in TWO_QUBIT_KINDS:
            want = 2
        elif self.kind in THREE_QUBIT_KINDS:
            want = 3
        elif self.kind in MACRO_KINDS:
            want = 7
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != want:
            raise ValueError(f"{self.kind} takes {want} qubit(s), got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.label}: repeated operand in {self.qubits}")

    @property
    def is_measurement(self) -> bool:
        return self.kind in MEASURE_KINDS


@dataclass
class Circuit:
    """Ordered gate list over ``n_qubits`` wires."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def append(self, gate: Gate) -> None:
        self.gates.append(gate)

    def add(self, kind: str, qubits: tuple[int, ...], label: str, tag: str = "") -> Gate:
        g = Gate(kind, qubits, label, tag)
        self.gates.append(g)
        return g

    def validate(self) -> None:
        """Check operand ranges, label uniqueness and no gate after measurement."""
        seen: set[str] = set()
        dead: set[int] = set()
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.n_qubits:
                    raise ValueError(f"{g.label}: qubit {q + 1} out of range (n={self.n_qubits})")
                if q in dead:
                    raise ValueError(f"{g.label}: qubit {q + 1} already measured")
            if g.label in seen:
                raise ValueError(f"duplicate label {g.label}")
            seen.add(g.label)
            if g.is_measurement:
                dead.add(g.qubits[0])

    def count_kind(self, kind: str) -> int:
        return sum(1 for g in self.gates if g.kind == kind)

    def count_cnot_labels(self) -> int:
        """Distinct labeled CNOTs; syndrome-round copies share one number."""
        return len({base_label(g.label) for g in self.gates if g.kind == "CNOT"})

    def gate_by_label(self, label: str) -> Gate:
        for g in self.gates:
            if g.label == label:
                return g
        raise KeyError(label)


def base_label(label: str) -> str:
    """Strip a syndrome-round copy suffix: C12.2 -> C12."""
    return label.split(".")[0]


def serialize(circuit: Circuit) -> str:
    """One gate per line: ``LABEL KIND q1 [q2 ...]``, 1-indexed, ``#`` comments."""
    lines = [f"# circuit {circuit.name or 'unnamed'}", f"# qubits {circuit.n_qubits}"]
    for g in circuit.gates:
        ops = " ".join(str(q + 1) for q in g.qubits)
        lines.append(f"{g.label} {g.kind} {ops}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Circuit:
    """Inverse of :func:`serialize`; raises ValueError with line numbers."""
    n_qubits = 0
    gates: list[Gate] = []
    name = ""
    max_q = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip() if not raw.lstrip().startswith("#") else ""
        header = raw.lstrip()
        if header.startswith("# qubits"):
            try:
                n_qubits = int(header.split()[2])
            except (IndexError, ValueError) as exc:
                raise ValueError(f"line {lineno}: bad qubit header") from exc
            continue
        if header.startswith("# circuit"):
            name = header[len("# circuit"):].strip()
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) < 3:
            raise ValueError(f"line {lineno}: expected 'LABEL KIND q1 [q2 ...]'")
        label, kind, *ops = parts
        try:
            qubits = tuple(int(o) - 1 for o in ops)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer operand") from exc
        for q in qubits:
            if q < 0:
                raise ValueError(f"line {lineno}: qubits are 1-indexed")
            max_q = max(max_q, q)
        try:
            gates.append(Gate(kind, qubits, label))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    circuit = Circuit(n_qubits or max_q + 1, gates, name=name)
    circuit.validate()
    return circuit
