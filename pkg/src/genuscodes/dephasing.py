"""Logical-qubit dynamics under Gaussian dephasing.

The dephasing average is exact per density-matrix element. A random phase
``Phi`` with zero mean and variance ``gamma * t`` (the convention that makes
``<exp(+-i Phi)> = exp(-gamma t / 2)``) multiplies the coherence between basis
states ``b`` and ``b'`` by:

* global field: ``exp(-gamma t (m_b - m_b')**2 / 8)``, ``m`` the magnetization;
* independent fields per qubit: ``exp(-gamma t h(b, b') / 2)``, ``h`` the
  Hamming distance.

Matrices live on the support of the logical state only.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .code import StabilizerCode
from .pauli import PauliOperator, multiply
from .states import encode_zero, expectation, logical_state, pauli_action

MODELS = ("global", "local")
IMAG_TOL = 1e-10


@dataclass(frozen=True)
class DephasingSpec:
    model: str = "global"
    gamma: float = 0.0
    t: float = 0.0
    theta: float = 0.0
    phi: float = 0.0
    pair_index: int = 0

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.gamma < 0 or self.t < 0:
            raise ValueError("gamma and t must be non-negative")
        if not 0 <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta} outside [0, pi]")
        if not 0 <= self.phi <= 2 * math.pi:
            raise ValueError(f"phi={self.phi} outside [0, 2pi]")


@dataclass(frozen=True)
class BlochVector:
    r_x: float
    r_y: float
    r_z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.r_x, self.r_y, self.r_z)

    @property
    def length(self) -> float:
        return math.sqrt(self.r_x**2 + self.r_y**2 + self.r_z**2)


@dataclass(frozen=True, eq=False)
class SupportDensityMatrix:
    n: int
    indices: np.ndarray  # basis indices, ascending
    entries: np.ndarray

    @property
    def support(self) -> list[str]:
        return ["".join(str((int(b) >> i) & 1) for i in range(self.n)) for b in self.indices]

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def expectation(self, p: PauliOperator) -> complex:
        """``Tr[rho P]`` using only entries on the support."""
        source, factor = pauli_action(p)
        # (rho P)_{bb} = rho[b, c] P[c, b] with c = b ^ x and P[c, b] = factor[c]
        pos = {int(b): i for i, b in enumerate(self.indices)}
        total = 0j
        for i, b in enumerate(self.indices):
            c = int(b) ^ p.x
            j = pos.get(c)
            if j is not None:
                total += self.entries[i, j] * factor[c]
        return total


def decoherence_factor(gamma: float, t: float) -> float:
    if gamma < 0 or t < 0:
        raise ValueError("gamma and t must be non-negative")
    return math.exp(-gamma * t / 2)


def magnetization(bitstring: str | int, n: int) -> int:
    """``2 n0 - N`` with ``n0`` the number of qubits in |0>.

    ``bitstring`` is either a '0'/'1' string or a basis index.
    """
    if isinstance(bitstring, str):
        if len(bitstring) != n:
            raise ValueError(f"bitstring of length {len(bitstring)}, expected {n}")
        ones = bitstring.count("1")
    else:
        ones = int(bitstring).bit_count()
    return n - 2 * ones


def _decay(indices: np.ndarray, n: int, model: str, gamma_t: float) -> np.ndarray:
    if model == "global":
        m = n - 2 * np.bitwise_count(indices).astype(np.int64)
        dm = m[:, None] - m[None, :]
        return np.exp(-gamma_t * dm**2 / 8)
    h = np.bitwise_count(indices[:, None] ^ indices[None, :]).astype(np.int64)
    return np.exp(-gamma_t * h / 2)


def dephase(code: StabilizerCode, spec: DephasingSpec) -> SupportDensityMatrix:
    psi = logical_state(code, spec.pair_index, spec.theta, spec.phi)
    indices = psi.support()
    amps = psi.amplitudes[indices]
    rho = np.outer(amps, amps.conj())
    rho = rho * _decay(indices, code.n, spec.model, spec.gamma * spec.t)
    return SupportDensityMatrix(code.n, indices, rho)


def logical_operators(code: StabilizerCode, pair_index: int = 0) -> tuple[PauliOperator, ...]:
    """``(X_L, Y_L, Z_L)`` for one logical qubit.

    ``Z_L`` is the stored Zbar, sign-corrected so that ``|0>_L`` has eigenvalue
    +1; ``Y_L = i X_L Z_L``, which gives the usual Bloch vector when noise is
    absent.
    """
    pair = code.logical_pairs[pair_index]
    z_bar = pair.z_bar
    if expectation(z_bar, encode_zero(code)).real < 0:
        z_bar = z_bar.with_phase(z_bar.phase + 2)
    y_bar = multiply(pair.x_bar, z_bar)
    y_bar = y_bar.with_phase(y_bar.phase + 1)
    return pair.x_bar, y_bar, z_bar


def _real(value: complex, what: str) -> float:
    if abs(value.imag) >= IMAG_TOL:
        raise ArithmeticError(f"{what} has imaginary part {value.imag}")
    return value.real


def bloch_coordinates(code: StabilizerCode, spec: DephasingSpec) -> BlochVector:
    rho = dephase(code, spec)
    ops = logical_operators(code, spec.pair_index)
    return BlochVector(*(_real(rho.expectation(op), f"R_{c}") for op, c in zip(ops, "XYZ")))


def genus5_closed_form(theta: float, phi: float, gamma: float, t: float) -> BlochVector:
    """Reference closed-form global-dephasing Bloch coordinates for the 13-qubit unit, term by term."""
    gt = gamma * t
    common = cmath.exp(-(2 * gt + 1j * phi)) * (1 + math.exp(-gt)) ** 4 * math.sin(theta)
    r_x = common * (1 + cmath.exp(2j * phi)) / 32
    r_y = 1j * common * (-1 + cmath.exp(2j * phi)) / 32
    return BlochVector(r_x.real, r_y.real, math.cos(theta))


DEFAULT_GRID = [
    (gt, th, ph)
    for gt in (0.0, 0.1, 0.5, 1.0)
    for th in (math.pi / 4, math.pi / 2)
    for ph in (0.0, math.pi / 3, math.pi / 2)
]


@dataclass
class ClosedFormReport:
    model: str
    grid: list[tuple[float, float, float]]
    per_point: list[dict[str, Any]] = field(default_factory=list)
    max_dev_per_component: dict[str, dict[str, Any]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "grid": [list(p) for p in self.grid],
            "per_point": self.per_point,
            "max_dev_per_component": self.max_dev_per_component,
        }

    def render(self) -> str:
        head = (
            f"{'gamma*t':>8} {'theta':>8} {'phi':>8} | "
            f"{'oracle R_X':>11} {'closed R_X':>11} {'|dX|':>9} | "
            f"{'oracle R_Y':>11} {'closed R_Y':>11} {'|dY|':>9} | {'|dZ|':>9}"
        )
        lines = [f"closed-form comparison ({self.model} dephasing)", head, "-" * len(head)]
        for row in self.per_point:
            gt, th, ph = row["params"]
            o, c, d = row["oracle"], row["closed_form"], row["abs_dev"]
            lines.append(
                f"{gt:8.4f} {th:8.4f} {ph:8.4f} | "
                f"{o[0]:11.6f} {c[0]:11.6f} {d[0]:9.2e} | "
                f"{o[1]:11.6f} {c[1]:11.6f} {d[1]:9.2e} | {d[2]:9.2e}"
            )
        for comp, info in self.max_dev_per_component.items():
            gt, th, ph = info["params"]
            lines.append(
                f"max |d{comp}| = {info['value']:.3e} at gamma*t={gt:.4g}, "
                f"theta={th:.4g}, phi={ph:.4g}"
            )
        return "\n".join(lines)


def compare_closed_form(
    code: StabilizerCode,
    grid: Iterable[Sequence[float]] = DEFAULT_GRID,
    model: str = "global",
) -> ClosedFormReport:
    """Tabulate oracle Bloch coordinates against the closed form.

    Grid points are ``(gamma*t, theta, phi)``; they are evaluated with
    ``gamma = gamma*t`` and ``t = 1``. Nothing is asserted here.
    """
    points = [tuple(float(v) for v in p) for p in grid]
    report = ClosedFormReport(model, points)
    best = {c: (-1.0, None) for c in ("R_X", "R_Y", "R_Z")}
    for gt, th, ph in points:
        spec = DephasingSpec(model, gamma=gt, t=1.0, theta=th, phi=ph)
        oracle = bloch_coordinates(code, spec).as_tuple()
        closed = genus5_closed_form(th, ph, gt, 1.0).as_tuple()
        dev = tuple(abs(a - b) for a, b in zip(oracle, closed))
        report.per_point.append(
            {"params": [gt, th, ph], "oracle": list(oracle), "closed_form": list(closed),
             "abs_dev": list(dev)}
        )
        for comp, value in zip(best, dev):
            if value > best[comp][0]:
                best[comp] = (value, [gt, th, ph])
    report.max_dev_per_component = {
        comp: {"value": value, "params": params} for comp, (value, params) in best.items()
    }
    return report
