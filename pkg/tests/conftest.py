from __future__ import annotations

from functools import reduce

import numpy as np
import pytest

from genuscodes import catalog
from genuscodes.pauli import PauliOperator

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def dense(p: PauliOperator) -> np.ndarray:
    """2^n x 2^n matrix; qubit 1 is the least significant tensor factor."""
    factors = []
    for q in range(p.n):
        x, z = (p.x >> q) & 1, (p.z >> q) & 1
        factors.append(_SINGLE["IXZY"[x | (z << 1)]])
    return (1j**p.phase) * reduce(np.kron, reversed(factors))


def gf2_rank_dense(rows: np.ndarray) -> int:
    """Plain elimination on a 0/1 numpy matrix."""
    m = rows.copy() % 2
    rank = 0
    for col in range(m.shape[1]):
        pivot = next((r for r in range(rank, m.shape[0]) if m[r, col]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(m.shape[0]):
            if r != rank and m[r, col]:
                m[r] ^= m[rank]
        rank += 1
    return rank


def symplectic_matrix(ops) -> np.ndarray:
    return np.array([list(op.x_bits) + list(op.z_bits) for op in ops], dtype=np.uint8)


@pytest.fixture
def genus2():
    return catalog.genus2_unit()


@pytest.fixture
def chain2():
    return catalog.genus2_vertical_chain(2)


@pytest.fixture
def genus5():
    return catalog.genus5_unit()


@pytest.fixture
def stacked():
    return catalog.genus5_stacked()


@pytest.fixture
def surface():
    return catalog.surface_512()
