"""State-vector simulation of p-level qudits labelled by G_pi.

Amplitudes live in an array of shape ``(p,) * n`` whose axis-j index is the
label ``project(u_j)`` of the j-th qudit's basis state.  Under that labelling

    X(a)|u> = |reduce(a + u)>     is a cyclic shift by project(a),
    Z(b)|u> = xi**project(b*u)|u> is a diagonal phase,

with ``xi = exp(2j*pi/p)``.  Passing a plain ``int`` instead of a residue
selects the prime-field form of the same operators (shift by the integer,
phase ``xi**(b*u mod p)``); the two agree under ``project``.

The CSS correction protocol decoheres the syndrome as a projective
measurement computed classically on basis labels; no ancilla qudits are
stored, so memory is ``p**n`` complex doubles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    Ambiguous,
    CapacityExceeded,
    NoDecode,
    NotACodeword,
    NotNested,
    OutOfRange,
    ShapeMismatch,
)
from .gaussian_field import GaussInt, PrimeField
from .linear_codes import (
    DEFAULT_CAP,
    LinearCode,
    correction_radius,
    decode_syndrome,
    dual,
    is_subcode,
    min_distance,
    vector_weight,
)

STATE_CAP = 10**7
NORM_TOL = 1e-9


def xi(p: int) -> complex:
    return np.exp(2j * np.pi / p)


def hadamard_matrix(F: PrimeField) -> np.ndarray:
    """``H[s, t] = xi**(s*t mod p) / sqrt(p)`` for labels s, t in 0..p-1."""
    p = F.p
    s = np.arange(p)
    return np.exp(2j * np.pi * (np.outer(s, s) % p) / p) / np.sqrt(p)


class StateVector:
    """Pure state of ``n`` qudits over ``field``."""

    def __init__(self, field: PrimeField, n: int, amps=None):
        if field.p**n > STATE_CAP:
            raise CapacityExceeded(
                f"p**n = {field.p}**{n} exceeds the state-vector cap {STATE_CAP}", field.p**n, STATE_CAP
            )
        self.field = field
        self.n = n
        shape = (field.p,) * n
        if amps is None:
            amps = np.zeros(shape, dtype=complex)
            amps[(0,) * n] = 1.0
        amps = np.asarray(amps, dtype=complex).reshape(shape)
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm} differs from 1")
        self.amps = amps

    @classmethod
    def basis(cls, field: PrimeField, labels) -> StateVector:
        labels = [field.project(u) if not isinstance(u, (int, np.integer)) else int(u) for u in labels]
        amps = np.zeros((field.p,) * len(labels), dtype=complex)
        amps[tuple(labels)] = 1.0
        return cls(field, len(labels), amps)

    def copy(self) -> StateVector:
        return StateVector(self.field, self.n, self.amps.copy())

    def amplitude(self, labels) -> complex:
        return complex(self.amps[tuple(self.field.project(u) for u in labels)])

    def support(self, tol: float = 1e-12) -> np.ndarray:
        """Label vectors (rows) with nonzero amplitude."""
        return np.argwhere(np.abs(self.amps) > tol)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __repr__(self):
        return f"StateVector(n={self.n}, p={self.field.p})"


def _gate_value(F: PrimeField, value) -> int:
    if isinstance(value, (int, np.integer)):
        return int(value) % F.p
    return F.project(GaussInt.coerce(value))


def apply_single(state: StateVector, pos: int, gate: str, value=None) -> StateVector:
    """Apply ``X`` (value a), ``Z`` (value b), ``H`` or ``Hinv`` to qudit ``pos``."""
    F, p = state.field, state.field.p
    if not 0 <= pos < state.n:
        raise OutOfRange(f"qudit index {pos} outside 0..{state.n - 1}")
    amps = state.amps
    if gate == "X":
        out = np.roll(amps, _gate_value(F, value), axis=pos)
    elif gate == "Z":
        b = _gate_value(F, value)
        phase = np.exp(2j * np.pi * (b * np.arange(p) % p) / p)
        shape = [1] * state.n
        shape[pos] = p
        out = amps * phase.reshape(shape)
    elif gate in ("H", "Hinv"):
        H = hadamard_matrix(F)
        if gate == "Hinv":
            H = H.conj().T
        out = np.moveaxis(np.tensordot(H, amps, axes=([1], [pos])), 0, pos)
    else:
        raise ValueError(f"unknown gate {gate!r}")
    return StateVector(F, state.n, out)


def apply_all(state: StateVector, gate: str, values=None) -> StateVector:
    """Apply a gate to every qudit; ``values`` gives a per-qudit X/Z argument."""
    for j in range(state.n):
        v = None if values is None else values[j]
        if gate in ("X", "Z") and not _gate_value(state.field, v):
            continue
        state = apply_single(state, j, gate, v)
    return state


def fidelity(s1: StateVector, s2: StateVector) -> float:
    """``|<s1|s2>|**2``."""
    if s1.field != s2.field or s1.n != s2.n:
        raise ShapeMismatch("states live in different spaces")
    return float(abs(np.vdot(s1.amps, s2.amps)) ** 2)


def _check_pair(C1: LinearCode, C2: LinearCode):
    if not is_subcode(C2, C1):
        raise NotNested("C2 is not contained in C1")


def prepare_coset_state(C1: LinearCode, C2: LinearCode, x) -> StateVector:
    """``|x + C2> = |C2|**-1/2 * sum_{y in C2} |x + y>`` for a codeword x of C1."""
    _check_pair(C1, C2)
    F, p = C1.field, C1.field.p
    xl = C1._vector_labels(x)
    if not C1.contains(xl):
        raise NotACodeword("x is not a codeword of C1")
    if p**C1.n > STATE_CAP:
        raise CapacityExceeded(f"p**n = {p}**{C1.n} exceeds the state-vector cap", p**C1.n, STATE_CAP)
    members = (C2.codeword_labels() + xl) % p
    amps = np.zeros((p,) * C1.n, dtype=complex)
    amps[tuple(members.T)] = 1.0 / np.sqrt(members.shape[0])
    return StateVector(F, C1.n, amps)


def character_sum(C2: LinearCode, z) -> complex:
    """``sum_{y in C2} xi**project(y . z)``; |C2| when z is in dual(C2), else 0."""
    p = C2.field.p
    zl = C2._vector_labels(z)
    dots = C2.codeword_labels() @ zl % p
    return complex(np.exp(2j * np.pi * dots / p).sum())


# correction protocol


@dataclass(frozen=True)
class ProtocolTranscript:
    mode: str
    bit_syndrome: tuple[GaussInt, ...]
    phase_syndrome: tuple[GaussInt, ...]
    recovered_e1: tuple[GaussInt, ...] | None
    recovered_e2: tuple[GaussInt, ...] | None
    within_capacity: bool
    corrected: bool
    fidelity: float | None
    t1: int
    t2: int
    notes: tuple[str, ...] = ()


def _measure_syndrome(state: StateVector, H: np.ndarray, rng: np.random.Generator) -> tuple[StateVector, np.ndarray]:
    """Projective measurement of ``H . label`` over the computational basis."""
    p = state.field.p
    if H.shape[0] == 0:
        return state, np.zeros(0, dtype=np.int64)
    labels = state.support()
    syn = labels @ H.T % p
    outcomes, inverse = np.unique(syn, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    probs = np.array([np.sum(np.abs(state.amps[tuple(labels[inverse == j].T)]) ** 2) for j in range(len(outcomes))])
    j = 0 if len(outcomes) == 1 else int(rng.choice(len(outcomes), p=probs / probs.sum()))
    if len(outcomes) == 1:
        return state, outcomes[0]
    amps = np.zeros_like(state.amps)
    keep = tuple(labels[inverse == j].T)
    amps[keep] = state.amps[keep] / np.sqrt(probs[j])
    return StateVector(state.field, state.n, amps), outcomes[j]


def _decode(C: LinearCode, syndrome: np.ndarray, t: int, notes: list[str], what: str):
    if not syndrome.any():
        return np.zeros(C.n, dtype=np.int64)
    try:
        return decode_syndrome(C, syndrome, "mannheim", t)
    except NoDecode:
        notes.append(f"{what}: no error of Mannheim weight <= {t} matches the syndrome")
    except Ambiguous as exc:
        notes.append(f"{what}: {len(exc.tied)} equally light errors match the syndrome")
    return None


def _radius(C: LinearCode, cap: int) -> int:
    if C.k == 0:
        return C.n
    return correction_radius(min_distance(C, "mannheim", cap=cap))


def run_css_protocol(
    C1: LinearCode,
    C2: LinearCode,
    x,
    e1,
    e2,
    mode: str = "full",
    distance_cap: int = DEFAULT_CAP,
    seed: int = 0,
) -> tuple[StateVector | None, ProtocolTranscript]:
    """Corrupt ``|x + C2>`` by ``X(e1) Z(e2)``, then detect and undo both errors.

    Bit errors are found from the C1 parity-check syndrome and removed with an
    X shift; after a Hadamard on every qudit the phase error appears as a label
    shift of ``-e2`` and is found from the dual(C2) syndrome; a final inverse
    Hadamard restores the coset state.  Both decodings are Mannheim-bounded
    with radius ``(d - 1) // 2`` of C1, resp. dual(C2).

    ``mode="syndrome-only"`` skips the state vector and runs the same classical
    syndrome and decoding steps on the error vectors, for ``p**n`` beyond the
    state cap.  There ``corrected`` means each recovered error differs from the
    injected one by a harmless amount (an element of C2 for bit errors, of
    dual(C1) for phase errors).
    """
    if mode not in ("full", "syndrome-only"):
        raise ValueError(f"unknown mode {mode!r}")
    _check_pair(C1, C2)
    F, p = C1.field, C1.field.p
    xl = C1._vector_labels(x)
    if not C1.contains(xl):
        raise NotACodeword("x is not a codeword of C1")
    e1l, e2l = C1._vector_labels(e1), C1._vector_labels(e2)
    D2 = dual(C2)
    t1, t2 = _radius(C1, distance_cap), _radius(D2, distance_cap)
    within = vector_weight(e1l, F, "mannheim") <= t1 and vector_weight(e2l, F, "mannheim") <= t2
    H1 = C1.check_labels
    H2 = D2.check_labels
    notes: list[str] = []

    if mode == "syndrome-only":
        s1 = H1 @ ((xl + e1l) % p) % p
        # after the Hadamard layer the phase error is a label shift by -e2
        s2 = H2 @ ((-e2l) % p) % p
        f1 = _decode(C1, s1, t1, notes, "bit error")
        shift = _decode(D2, s2, t2, notes, "phase error")
        f2 = None if shift is None else (-shift) % p
        ok = (
            f1 is not None
            and f2 is not None
            and C2.contains((f1 - e1l) % p)
            and dual(C1).contains((f2 - e2l) % p)
        )
        transcript = ProtocolTranscript(
            mode, tuple(F.from_labels(s1)), tuple(F.from_labels(s2)),
            None if f1 is None else tuple(F.from_labels(f1)),
            None if f2 is None else tuple(F.from_labels(f2)),
            within, bool(ok), None, t1, t2, tuple(notes),
        )
        return None, transcript

    rng = np.random.default_rng(seed)
    clean = prepare_coset_state(C1, C2, xl)
    state = apply_all(clean, "Z", e2l)
    state = apply_all(state, "X", e1l)

    state, s1 = _measure_syndrome(state, H1, rng)
    f1 = _decode(C1, s1, t1, notes, "bit error")
    if f1 is not None:
        state = apply_all(state, "X", (-f1) % p)

    state = apply_all(state, "H")
    state, s2 = _measure_syndrome(state, H2, rng)
    shift = _decode(D2, s2, t2, notes, "phase error")
    if shift is not None:
        state = apply_all(state, "X", (-shift) % p)
    state = apply_all(state, "Hinv")

    fid = fidelity(clean, state)
    transcript = ProtocolTranscript(
        mode, tuple(F.from_labels(s1)), tuple(F.from_labels(s2)),
        None if f1 is None else tuple(F.from_labels(f1)),
        None if shift is None else tuple(F.from_labels((-shift) % p)),
        within, fid >= 1 - NORM_TOL, fid, t1, t2, tuple(notes),
    )
    return state, transcript

