"""Dense state vectors: encoding, logical bases and Pauli expectations.

Basis index bit ``i`` holds the state of qubit ``i + 1``; qubit 1 is the
lowest bit, matching the Pauli bitmasks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .code import StabilizerCode
from .errors import (
    MemoryBudgetExceeded,
    MissingLogicalPairs,
    NonOrthogonal,
    QubitCountMismatch,
    ZeroVector,
)
from .pauli import PauliOperator, multiply

DEFAULT_MAX_QUBITS = 16
NORM_TOL = 1e-12
ORTHO_TOL = 1e-10

_I_POWERS = np.array([1, 1j, -1, -1j], dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got {self.amplitudes.shape}")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def support(self, tol: float = NORM_TOL) -> np.ndarray:
        return np.flatnonzero(np.abs(self.amplitudes) > tol)

    def bitstring(self, index: int) -> str:
        """Basis label printed qubit-1-first."""
        return "".join(str((index >> i) & 1) for i in range(self.n))

    def dump_lines(self) -> list[str]:
        rows = sorted((self.bitstring(int(b)), self.amplitudes[b]) for b in self.support())
        return [f"{bits} {a.real:.17g} {a.imag:.17g}" for bits, a in rows]


def check_budget(n: int, max_qubits: int | None = None) -> None:
    limit = DEFAULT_MAX_QUBITS if max_qubits is None else max_qubits
    if n > limit:
        raise MemoryBudgetExceeded(
            f"{n} qubits need 2^{n} amplitudes; budget is {limit} qubits"
        )


@lru_cache(maxsize=8)
def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def pauli_action(p: PauliOperator) -> tuple[np.ndarray, np.ndarray]:
    """``(source, factor)`` with ``(P s)[b] = factor[b] * s[source[b]]``."""
    idx = _indices(p.n)
    source = idx ^ p.x
    signs = np.bitwise_count(source & p.z) & 1
    base = _I_POWERS[(p.phase + (p.x & p.z).bit_count()) % 4]
    factor = base * (1 - 2 * signs.astype(np.float64))
    return source, factor


def apply_to_array(p: PauliOperator, amps: np.ndarray) -> np.ndarray:
    """Apply ``p`` along axis 0 of ``amps`` (a vector or a stack of columns)."""
    source, factor = pauli_action(p)
    if amps.ndim == 1:
        return factor * amps[source]
    return factor[:, None] * amps[source]


def apply_pauli(p: PauliOperator, s: StateVector) -> StateVector:
    if p.n != s.n:
        raise QubitCountMismatch(f"operator on {p.n} qubits, state on {s.n}")
    return StateVector(s.n, apply_to_array(p, s.amplitudes))


def basis_state(n: int, index: int = 0) -> StateVector:
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps)


def encode_zero(code: StabilizerCode, max_qubits: int | None = None) -> StateVector:
    """Normalized ``(I + P_1)(I + P_2)...(I + P_r)|0...0>``.

    The rightmost factor is applied first. Order only matters when the
    generator list contains anticommuting pairs.
    """
    check_budget(code.n, max_qubits)
    amps = basis_state(code.n).amplitudes
    for g in reversed(code.generators):
        amps = amps + apply_to_array(g, amps)
    norm = np.linalg.norm(amps)
    if norm < NORM_TOL:
        raise ZeroVector(f"|0...0> has no overlap with the code space of {code.name}")
    return StateVector(code.n, amps / norm)


def _require_pairs(code: StabilizerCode) -> None:
    if len(code.logical_pairs) != code.k:
        raise MissingLogicalPairs(
            f"{code.name} encodes {code.k} qubits but has {len(code.logical_pairs)} logical pairs"
        )


def logical_basis(code: StabilizerCode, max_qubits: int | None = None) -> list[StateVector]:
    """States ``Xbar_1^b1 ... Xbar_k^bk |0>_L`` for all b in lexicographic order."""
    _require_pairs(code)
    zero = encode_zero(code, max_qubits)
    states = []
    for bits in itertools.product((0, 1), repeat=code.k):
        op = PauliOperator(code.n)
        for b, pair in zip(bits, code.logical_pairs):
            if b:
                op = multiply(op, pair.x_bar)
        states.append(apply_pauli(op, zero))
    mat = np.stack([s.amplitudes for s in states], axis=1)
    gram = mat.conj().T @ mat
    if not np.allclose(gram, np.eye(len(states)), atol=ORTHO_TOL, rtol=0):
        raise NonOrthogonal(f"logical basis of {code.name} is not orthonormal")
    return states


def logical_state(
    code: StabilizerCode,
    pair_index: int,
    theta: float,
    phi: float,
    max_qubits: int | None = None,
) -> StateVector:
    """``cos(theta/2)|0>_L + e^{i phi} sin(theta/2) Xbar|0>_L``."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta={theta} outside [0, pi]")
    if not 0.0 <= phi <= 2 * math.pi:
        raise ValueError(f"phi={phi} outside [0, 2pi]")
    if not 0 <= pair_index < len(code.logical_pairs):
        raise MissingLogicalPairs(f"{code.name} has no logical pair {pair_index}")
    zero = encode_zero(code, max_qubits)
    one = apply_to_array(code.logical_pairs[pair_index].x_bar, zero.amplitudes)
    amps = math.cos(theta / 2) * zero.amplitudes + np.exp(1j * phi) * math.sin(theta / 2) * one
    return StateVector(code.n, amps / np.linalg.norm(amps))


def expectation(p: PauliOperator, s: StateVector) -> complex:
    if p.n != s.n:
        raise QubitCountMismatch(f"operator on {p.n} qubits, state on {s.n}")
    value = complex(np.vdot(s.amplitudes, apply_to_array(p, s.amplitudes)))
    if p.is_hermitian and abs(value.imag) >= NORM_TOL:
        raise ArithmeticError(f"Hermitian expectation has imaginary part {value.imag}")
    return value
