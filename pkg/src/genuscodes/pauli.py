"""n-qubit Pauli operators in binary symplectic form.

A Pauli is stored as two integer bitmasks (bit ``i`` is qubit ``i + 1``) and a
phase exponent ``p`` so that the operator equals ``i**p`` times the tensor
product of the letters I, X, Y, Z read off from the masks. Y is a letter in its
own right, i.e. ``Y = i X Z``, so a Hermitian Pauli always has even ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import PauliParseError, QubitCountMismatch

_SIGNS = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}
_SIGN_TEXT = {0: "", 1: "+i", 2: "-", 3: "-i"}
_SIGN_RE = re.compile(r"\s*([+-]i?)?")
_TERM_RE = re.compile(r"\s*([XYZ])(\d+)")


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full or self.x < 0 or self.z < 0:
            raise ValueError(f"bit masks exceed {self.n} qubits")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def from_letters(cls, n: int, letters: Mapping[int, str], phase: int = 0) -> PauliOperator:
        """Build from a ``{qubit (1-based): letter}`` map."""
        x = z = 0
        for q, letter in letters.items():
            if not 1 <= q <= n:
                raise PauliParseError(f"qubit index {q} out of range 1..{n}")
            bit = 1 << (q - 1)
            if letter in ("X", "Y"):
                x |= bit
            if letter in ("Z", "Y"):
                z |= bit
            if letter not in ("I", "X", "Y", "Z"):
                raise PauliParseError(f"unknown Pauli letter {letter!r}")
        return cls(n, x, z, phase)

    @property
    def x_bits(self) -> tuple[int, ...]:
        return tuple((self.x >> i) & 1 for i in range(self.n))

    @property
    def z_bits(self) -> tuple[int, ...]:
        return tuple((self.z >> i) & 1 for i in range(self.n))

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    def letter(self, qubit: int) -> str:
        """Letter acting on 1-based ``qubit``."""
        i = qubit - 1
        return "IXZY"[((self.x >> i) & 1) | (((self.z >> i) & 1) << 1)]

    def letters(self) -> dict[int, str]:
        return {q: self.letter(q) for q in range(1, self.n + 1) if self.letter(q) != "I"}

    def with_phase(self, phase: int) -> PauliOperator:
        return PauliOperator(self.n, self.x, self.z, phase)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def _check_same_n(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise QubitCountMismatch(f"operands act on {p.n} and {q.n} qubits")


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact product ``p @ q``."""
    _check_same_n(p, q)
    x = p.x ^ q.x
    z = p.z ^ q.z
    # convert letter form to X^x Z^z form, reorder Z_p past X_q, convert back
    phase = (
        p.phase
        + q.phase
        + (p.x & p.z).bit_count()
        + (q.x & q.z).bit_count()
        + 2 * (p.z & q.x).bit_count()
        - (x & z).bit_count()
    )
    return PauliOperator(p.n, x, z, phase)


def symplectic_product(p: PauliOperator, q: PauliOperator) -> int:
    _check_same_n(p, q)
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return symplectic_product(p, q) == 0


def weight(p: PauliOperator) -> int:
    return p.weight


def product(ops: Iterable[PauliOperator], n: int) -> PauliOperator:
    out = PauliOperator(n)
    for op in ops:
        out = multiply(out, op)
    return out


def parse_pauli(text: str, n: int) -> PauliOperator:
    """Parse strings such as ``"X1X2X3X4"``, ``"-i X1 Z2"`` or ``""``.

    Repeated indices are multiplied left to right. A bare ``"I"`` (optionally
    signed) is accepted as the identity.
    """
    if n <= 0:
        raise PauliParseError(f"qubit count must be positive, got {n}")
    m = _SIGN_RE.match(text)
    sign = m.group(1) or ""
    pos = m.end()
    rest = text[pos:].strip()
    result = PauliOperator(n, phase=_SIGNS[sign])
    if rest == "I" or (rest == "" and pos == len(text) and sign == ""):
        return result
    if rest == "":
        raise PauliParseError(f"sign {sign!r} with no Pauli terms")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        t = _TERM_RE.match(text, pos)
        if t is None:
            raise PauliParseError(f"malformed Pauli token at position {pos}: {text[pos:]!r}")
        idx = int(t.group(2))
        if not 1 <= idx <= n:
            raise PauliParseError(f"qubit index {idx} out of range 1..{n}")
        result = multiply(result, PauliOperator.from_letters(n, {idx: t.group(1)}))
        pos = t.end()
    return result


def format_pauli(p: PauliOperator) -> str:
    """Canonical text: sorted factors, Y kept as Y, sign only when needed."""
    body = "".join(f"{p.letter(q)}{q}" for q in range(1, p.n + 1) if p.letter(q) != "I")
    return _SIGN_TEXT[p.phase] + (body or "I")
