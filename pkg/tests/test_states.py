import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dense
from genuscodes import catalog
from genuscodes.code import build_code, enumerate_stabilizer_group
from genuscodes.errors import (
    MemoryBudgetExceeded,
    MissingLogicalPairs,
    QubitCountMismatch,
    ZeroVector,
)
from genuscodes.pauli import PauliOperator, parse_pauli
from genuscodes.states import (
    StateVector,
    apply_pauli,
    basis_state,
    encode_zero,
    expectation,
    logical_basis,
    logical_state,
)

VALID = ["genus2-unit", "genus2-chain-2", "surface-512"]


def index_of(bits: str) -> int:
    """Qubit-1-first bitstring to basis index."""
    return sum(1 << q for q, b in enumerate(bits) if b == "1")


def projector_oracle(code) -> np.ndarray:
    dim = 1 << code.n
    v = np.zeros(dim, dtype=complex)
    v[0] = 1
    for g in reversed(code.generators):
        v = v + dense(g) @ v
    return v / np.linalg.norm(v)


def x_orbit(code) -> set[int]:
    orbit = {0}
    for g in code.generators:
        if g.x and not g.z:
            orbit |= {b ^ g.x for b in orbit}
    return orbit


class TestApply:
    def test_flip(self):
        out = apply_pauli(parse_pauli("X1", 6), basis_state(6))
        assert out.bitstring(int(out.support()[0])) == "100000"

    def test_z_sign(self):
        out = apply_pauli(parse_pauli("Z1", 6), basis_state(6, index_of("100000")))
        assert out.amplitudes[index_of("100000")] == -1

    def test_x_block(self):
        out = apply_pauli(parse_pauli("X1X2X3X4", 6), basis_state(6, index_of("001111")))
        assert out.amplitudes[index_of("110011")] == 1

    def test_mismatch(self):
        with pytest.raises(QubitCountMismatch):
            apply_pauli(PauliOperator(2), basis_state(3))

    @settings(max_examples=60)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(
        st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1),
        st.integers(0, 3), st.lists(st.floats(-1, 1), min_size=2 << n, max_size=2 << n))))
    def test_matches_dense(self, args):
        n, x, z, phase, raw = args
        amps = np.array(raw[: 1 << n]) + 1j * np.array(raw[1 << n:])
        p = PauliOperator(n, x, z, phase)
        got = apply_pauli(p, StateVector(n, amps)).amplitudes
        np.testing.assert_allclose(got, dense(p) @ amps, atol=1e-12)


class TestEncodeZero:
    def test_genus2_four_term_expansion(self, genus2):
        state = encode_zero(genus2)
        want = np.zeros(64, dtype=complex)
        for bits in ("000000", "001111", "111100", "110011"):
            want[index_of(bits)] = 0.5
        assert np.max(np.abs(state.amplitudes - want)) < 1e-12
        assert state.dump_lines() == [
            "000000 0.5 0", "001111 0.5 0", "110011 0.5 0", "111100 0.5 0",
        ]

    def test_no_generators(self):
        state = encode_zero(build_code("empty", 1, []))
        np.testing.assert_array_equal(state.amplitudes, [1, 0])

    @pytest.mark.parametrize("name", VALID)
    def test_matches_dense_projector_product(self, name):
        code = catalog.get_code(name)
        np.testing.assert_allclose(encode_zero(code).amplitudes, projector_oracle(code), atol=1e-12)

    @pytest.mark.parametrize("name", VALID + ["genus5-unit"])
    def test_support_is_x_orbit(self, name):
        code = catalog.get_code(name)
        state = encode_zero(code)
        orbit = x_orbit(code)
        assert set(state.support().tolist()) == orbit
        np.testing.assert_allclose(np.abs(state.amplitudes[sorted(orbit)]), len(orbit) ** -0.5)

    def test_genus5_sixty_four_terms(self, genus5):
        state = encode_zero(genus5)
        assert len(state.support()) == 64
        np.testing.assert_allclose(state.amplitudes[state.support()], 1 / 8, atol=1e-12)

    @pytest.mark.parametrize("name", VALID)
    def test_stabilized_by_group(self, name):
        code = catalog.get_code(name)
        zero = encode_zero(code)
        for g in code.generators:
            assert abs(expectation(g, zero) - 1) < 1e-12
        for s in enumerate_stabilizer_group(code):
            assert np.linalg.norm(apply_pauli(s, zero).amplitudes - zero.amplitudes) < 1e-12

    def test_genus5_z_generators_not_stabilized(self, genus5):
        # each of these Z checks anticommutes with an X check, so <Z> = 0
        zero = encode_zero(genus5)
        values = [round(expectation(g, zero).real, 12) for g in genus5.generators]
        assert values == [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1]

    def test_zero_vector(self):
        # X1X2 * Z1Z2 = -Y1Y2, so no vector is fixed by all three
        code = build_code("clash", 2, ["X1X2", "Z1Z2", "Y1Y2", "Z1"], allow_anticommuting=True)
        with pytest.raises(ZeroVector):
            encode_zero(code)
        v = np.eye(4, dtype=complex)[0]
        for g in reversed(code.generators):
            v = v + dense(g) @ v
        assert np.allclose(v, 0)

    def test_budget(self):
        with pytest.raises(MemoryBudgetExceeded):
            encode_zero(catalog.genus5_stacked())
        with pytest.raises(MemoryBudgetExceeded):
            encode_zero(catalog.genus2_unit(), max_qubits=5)


class TestLogicalBasis:
    def test_genus2_four_orthonormal(self, genus2):
        basis = logical_basis(genus2)
        mat = np.stack([s.amplitudes for s in basis], axis=1)
        np.testing.assert_allclose(mat.conj().T @ mat, np.eye(4), atol=1e-12)

    def test_genus5_pair(self, genus5):
        zero, one = logical_basis(genus5)
        assert abs(np.vdot(zero.amplitudes, one.amplitudes)) < 1e-12
        assert abs(expectation(genus5.logical_pairs[0].x_bar, zero)) < 1e-12

    def test_k_zero(self):
        code = build_code("bell", 2, ["X1X2", "Z1Z2"])
        assert len(logical_basis(code)) == 1

    def test_missing_pairs(self):
        with pytest.raises(MissingLogicalPairs):
            logical_basis(build_code("g2", 6, catalog.genus2_unit().generators))

    @pytest.mark.parametrize("name", VALID)
    def test_eigenvalues(self, name):
        code = catalog.get_code(name)
        for index, state in enumerate(logical_basis(code)):
            bits = [(index >> (code.k - 1 - i)) & 1 for i in range(code.k)]
            for g in code.generators:
                assert abs(expectation(g, state) - 1) < 1e-12
            for b, pair in zip(bits, code.logical_pairs):
                assert abs(expectation(pair.z_bar, state) - (-1) ** b) < 1e-12


class TestLogicalState:
    def test_theta_zero(self, genus5):
        zero = encode_zero(genus5)
        for phi in (0.0, 1.0, 2 * math.pi):
            np.testing.assert_allclose(logical_state(genus5, 0, 0.0, phi).amplitudes,
                                       zero.amplitudes, atol=1e-12)

    def test_theta_pi(self, genus5):
        one = logical_basis(genus5)[1]
        np.testing.assert_allclose(logical_state(genus5, 0, math.pi, 0.0).amplitudes,
                                   one.amplitudes, atol=1e-12)

    def test_equator(self, genus5):
        zero, one = logical_basis(genus5)
        want = (zero.amplitudes + 1j * one.amplitudes) / math.sqrt(2)
        np.testing.assert_allclose(logical_state(genus5, 0, math.pi / 2, math.pi / 2).amplitudes,
                                   want, atol=1e-12)

    @pytest.mark.parametrize("theta, phi", [(-0.1, 0), (4.0, 0), (1, -1), (1, 7)])
    def test_ranges(self, genus5, theta, phi):
        with pytest.raises(ValueError):
            logical_state(genus5, 0, theta, phi)

    def test_bad_pair(self, genus5):
        with pytest.raises(MissingLogicalPairs):
            logical_state(genus5, 1, 0.0, 0.0)


class TestExpectation:
    def test_single_qubit(self):
        assert expectation(parse_pauli("Z1", 1), basis_state(1)) == 1

    def test_mismatch(self):
        with pytest.raises(QubitCountMismatch):
            expectation(PauliOperator(2), basis_state(1))

    @settings(max_examples=40)
    @given(st.integers(0, 63), st.integers(0, 63))
    def test_hermitian_is_real(self, x, z):
        genus2 = catalog.genus2_unit()
        state = logical_state(genus2, 1, 1.1, 0.7)
        p = PauliOperator(6, x, z)
        value = expectation(p, state)
        assert abs(value.imag) < 1e-12
        assert value.real == pytest.approx(np.vdot(state.amplitudes, dense(p) @ state.amplitudes).real,
                                           abs=1e-12)
