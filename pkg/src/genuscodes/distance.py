"""Code distance by Knill-Laflamme checks and by normalizer search.

Both routes enumerate Hermitian Paulis in the same order: by weight, then
lexicographically over (qubit subset, letters with X < Z < Y). The first
hit is therefore reproducible and the two routes return the same witness.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .code import StabilizerCode, stabilizer_group_contains
from .errors import MethodDisagreement, NoViolationFound
from .pauli import PauliOperator, format_pauli
from .states import apply_to_array, check_budget, logical_basis

KL_TOL = 1e-10

LETTERS = ("X", "Z", "Y")
_LETTER_BITS = ((1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class DistanceResult:
    d: int
    method: str
    witness: PauliOperator
    checked_up_to: int
    error_count_examined: int

    def __post_init__(self) -> None:
        assert self.witness.weight == self.d


def errors_of_weight(n: int, w: int) -> Iterator[PauliOperator]:
    for subset in itertools.combinations(range(n), w):
        for letters in itertools.product(range(3), repeat=w):
            x = z = 0
            for q, letter in zip(subset, letters):
                bx, bz = _LETTER_BITS[letter]
                x |= bx << q
                z |= bz << q
            yield PauliOperator(n, x, z)


def count_of_weight(n: int, w: int) -> int:
    return math.comb(n, w) * 3**w


def _max_weight(code: StabilizerCode, max_weight: int | None) -> int:
    if max_weight is None:
        return code.n
    if not 1 <= max_weight <= code.n:
        raise ValueError(f"max_weight must be in 1..{code.n}, got {max_weight}")
    return max_weight


# -- Knill-Laflamme route ----------------------------------------------------


@dataclass(frozen=True)
class KLCheck:
    violates: bool
    matrix: np.ndarray

    def __bool__(self) -> bool:
        return self.violates


def _basis_matrix(code: StabilizerCode, max_qubits: int | None) -> np.ndarray:
    return np.stack([s.amplitudes for s in logical_basis(code, max_qubits)], axis=1)


def _kl_matrix(error: PauliOperator, basis: np.ndarray) -> np.ndarray:
    return basis.conj().T @ apply_to_array(error, basis)


def _proportional_to_identity(m: np.ndarray, tol: float = KL_TOL) -> bool:
    c = m[0, 0]
    return bool(np.all(np.abs(m - c * np.eye(m.shape[0])) <= tol))


def kl_violates(
    code: StabilizerCode,
    error: PauliOperator,
    basis: np.ndarray | None = None,
    max_qubits: int | None = None,
) -> KLCheck:
    """Whether ``<i_L|E|j_L>`` fails to be a multiple of the identity.

    ``basis`` (columns = logical basis states) may be passed to avoid
    rebuilding it for every error.
    """
    if basis is None:
        basis = _basis_matrix(code, max_qubits)
    m = _kl_matrix(error, basis)
    return KLCheck(not _proportional_to_identity(m), m)


def kl_distance(
    code: StabilizerCode, max_weight: int | None = None, max_qubits: int | None = None
) -> DistanceResult:
    check_budget(code.n, max_qubits)
    top = _max_weight(code, max_weight)
    basis = _basis_matrix(code, max_qubits)
    examined = 0
    for w in range(1, top + 1):
        for error in errors_of_weight(code.n, w):
            examined += 1
            if not _proportional_to_identity(_kl_matrix(error, basis)):
                return DistanceResult(w, "kl", error, w, examined)
    raise NoViolationFound(top, examined)


# -- symplectic route ----------------------------------------------------------


def syndrome_table(code: StabilizerCode) -> np.ndarray:
    """Packed anticommutation bits, shape ``(n, 3, words)``.

    Entry ``[q, letter]`` marks the generators that anticommute with the
    single-qubit Pauli ``letter`` on qubit ``q + 1``.
    """
    r = len(code.generators)
    words = max(1, -(-r // 64))
    table = np.zeros((code.n, 3, words), dtype=np.uint64)
    for j, g in enumerate(code.generators):
        word, bit = divmod(j, 64)
        for q in range(code.n):
            gx, gz = (g.x >> q) & 1, (g.z >> q) & 1
            for letter, (bx, bz) in enumerate(_LETTER_BITS):
                if (bx & gz) ^ (bz & gx):
                    table[q, letter, word] |= np.uint64(1 << bit)
    return table


def _to_pauli(n: int, subset: Sequence[int], letters: Sequence[int]) -> PauliOperator:
    x = z = 0
    for q, letter in zip(subset, letters):
        bx, bz = _LETTER_BITS[letter]
        x |= bx << int(q)
        z |= bz << int(q)
    return PauliOperator(n, x, z)


def _scan_chunk(
    code: StabilizerCode,
    table: np.ndarray,
    subsets: np.ndarray,
    letters: np.ndarray,
) -> tuple[int, PauliOperator] | None:
    """First (flat index, Pauli) in the chunk that is a nontrivial logical."""
    syn = np.zeros((len(subsets), len(letters), table.shape[2]), dtype=np.uint64)
    for j in range(subsets.shape[1]):
        syn ^= table[subsets[:, j][:, None], letters[:, j][None, :]]
    hits = np.flatnonzero(~syn.any(axis=2))
    for flat in hits:
        s, l = divmod(int(flat), len(letters))
        p = _to_pauli(code.n, subsets[s], letters[l])
        if not stabilizer_group_contains(code, p, up_to_sign=True):
            return int(flat), p
    return None


def symplectic_distance(
    code: StabilizerCode,
    max_weight: int | None = None,
    workers: int = 1,
    chunk_elements: int = 1 << 21,
) -> DistanceResult:
    """Smallest-weight Pauli commuting with every generator but outside the group.

    Sign is ignored in the membership test: ``-S`` acts as a constant on the
    code space and is not a logical error.
    """
    top = _max_weight(code, max_weight)
    table = syndrome_table(code)
    examined = 0
    for w in range(1, top + 1):
        subsets = np.array(list(itertools.combinations(range(code.n), w)), dtype=np.intp)
        letters = np.array(list(itertools.product(range(3), repeat=w)), dtype=np.intp)
        per_chunk = max(1, chunk_elements // (len(letters) * table.shape[2]))
        starts = range(0, len(subsets), per_chunk)

        def scan(start: int) -> tuple[int, PauliOperator] | None:
            found = _scan_chunk(code, table, subsets[start : start + per_chunk], letters)
            if found is None:
                return None
            return start * len(letters) + found[0], found[1]

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = [r for r in pool.map(scan, starts) if r is not None]
            best = min(results, key=lambda r: r[0]) if results else None
        else:
            best = None
            for start in starts:
                best = scan(start)
                if best is not None:
                    break
        if best is not None:
            return DistanceResult(w, "symplectic", best[1], w, examined + best[0] + 1)
        examined += len(subsets) * len(letters)
    raise NoViolationFound(top, examined)


def cross_validate_distance(
    code: StabilizerCode,
    max_weight: int | None = None,
    max_qubits: int | None = None,
    workers: int = 1,
) -> DistanceResult:
    kl = kl_distance(code, max_weight, max_qubits)
    sym = symplectic_distance(code, max_weight, workers=workers)
    if kl.d != sym.d:
        raise MethodDisagreement(
            f"{code.name}: KL gives d={kl.d} ({format_pauli(kl.witness)}), "
            f"symplectic gives d={sym.d} ({format_pauli(sym.witness)})"
        )
    return DistanceResult(sym.d, "both", sym.witness, sym.checked_up_to, sym.error_count_examined)
