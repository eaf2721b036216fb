"""Stabilizer codes and their structural checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    GroupTooLarge,
    InconsistentGenerators,
    NonCommutingGenerators,
    PhasefulGenerator,
    QubitCountMismatch,
)
from .gf2 import RowEchelon, bits_to_indices
from .pauli import PauliOperator, commutes, format_pauli, multiply, parse_pauli, product


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d: int
    m: int | None = None
    p: int | None = None

    def __post_init__(self) -> None:
        if self.n <= 0 or not 0 <= self.k <= self.n or not 1 <= self.d <= self.n:
            raise ValueError(f"invalid code parameters [[{self.n},{self.k},{self.d}]]")

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]"


@dataclass(frozen=True)
class LogicalPair:
    x_bar: PauliOperator
    z_bar: PauliOperator


def _as_pauli(op: PauliOperator | str, n: int) -> PauliOperator:
    if isinstance(op, str):
        return parse_pauli(op, n)
    if op.n != n:
        raise QubitCountMismatch(f"{format_pauli(op)} acts on {op.n} qubits, code has {n}")
    return op


def _symplectic_row(p: PauliOperator) -> int:
    # x part in the low n bits, z part above
    return p.x | (p.z << p.n)


@dataclass(frozen=True)
class StabilizerCode:
    name: str
    n: int
    generators: tuple[PauliOperator, ...]
    logical_pairs: tuple[LogicalPair, ...] = ()
    expected: CodeParameters | None = None
    ancilla_count: int | None = None
    genus: int | None = None
    metadata: Mapping[str, Any] = field(default_factory=dict, hash=False)
    allow_anticommuting: bool = field(default=False, compare=False)
    anticommuting_pairs: tuple[tuple[int, int], ...] = field(
        init=False, compare=False, hash=False
    )
    _echelon: RowEchelon = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        for i, g in enumerate(self.generators):
            if g.n != self.n:
                raise QubitCountMismatch(
                    f"generator {i + 1} acts on {g.n} qubits, code has {self.n}"
                )
            if g.phase != 0:
                raise PhasefulGenerator(f"generator {i + 1} ({format_pauli(g)}) has a phase")
        bad = []
        for i, g in enumerate(self.generators):
            for j in range(i + 1, len(self.generators)):
                h = self.generators[j]
                if not commutes(g, h):
                    if not self.allow_anticommuting:
                        raise NonCommutingGenerators(
                            i + 1, j + 1, format_pauli(g), format_pauli(h)
                        )
                    bad.append((i + 1, j + 1))
        object.__setattr__(self, "anticommuting_pairs", tuple(bad))
        for pair in self.logical_pairs:
            for op in (pair.x_bar, pair.z_bar):
                if op.n != self.n:
                    raise QubitCountMismatch(f"logical operator {format_pauli(op)} has wrong n")
        echelon = RowEchelon(_symplectic_row(g) for g in self.generators)
        for combo in echelon.dependencies if not bad else ():
            if self.product_of(combo).phase != 0:
                raise InconsistentGenerators(
                    "generators "
                    + ", ".join(str(i + 1) for i in bits_to_indices(combo))
                    + " multiply to -I"
                )
        object.__setattr__(self, "_echelon", echelon)

    @property
    def generators_commute(self) -> bool:
        return not self.anticommuting_pairs

    @property
    def rank(self) -> int:
        return self._echelon.rank

    @property
    def k(self) -> int:
        return self.n - self._echelon.rank

    def product_of(self, combo: int) -> PauliOperator:
        """Product of the generators selected by bitmask ``combo``, in list order."""
        return product((self.generators[i] for i in bits_to_indices(combo)), self.n)

    def independent_generators(self) -> list[PauliOperator]:
        """A maximal independent subset, in list order."""
        chosen: list[PauliOperator] = []
        ech = RowEchelon(())
        for g in self.generators:
            row = _symplectic_row(g)
            if not ech.contains(row):
                ech._insert(row, 0)
                chosen.append(g)
        return chosen


def build_code(
    name: str,
    n: int,
    generators: Sequence[PauliOperator | str],
    logical_pairs: Sequence[LogicalPair | tuple[PauliOperator | str, PauliOperator | str]] = (),
    expected: CodeParameters | None = None,
    *,
    ancilla_count: int | None = None,
    genus: int | None = None,
    metadata: Mapping[str, Any] | None = None,
    allow_anticommuting: bool = False,
) -> StabilizerCode:
    """Validate and assemble a code; Pauli strings are parsed on ``n`` qubits.

    Anticommuting generators raise unless ``allow_anticommuting`` is set, in
    which case the offending pairs are recorded on the code so reports can
    flag them. Such a list does not define a stabilizer group.
    """
    if n <= 0:
        raise ValueError(f"qubit count must be positive, got {n}")
    gens = tuple(_as_pauli(g, n) for g in generators)
    pairs = []
    for pair in logical_pairs:
        if isinstance(pair, LogicalPair):
            pairs.append(LogicalPair(_as_pauli(pair.x_bar, n), _as_pauli(pair.z_bar, n)))
        else:
            x_bar, z_bar = pair
            pairs.append(LogicalPair(_as_pauli(x_bar, n), _as_pauli(z_bar, n)))
    return StabilizerCode(
        name=name,
        n=n,
        generators=gens,
        logical_pairs=tuple(pairs),
        expected=expected,
        ancilla_count=ancilla_count,
        genus=genus,
        metadata=dict(metadata or {}),
        allow_anticommuting=allow_anticommuting,
    )


def generator_rank(code: StabilizerCode) -> int:
    return code.rank


def logical_count(code: StabilizerCode) -> int:
    return code.n - code.rank


class Membership(NamedTuple):
    found: bool
    witness: tuple[int, ...] | None  # 0-based generator indices

    def __bool__(self) -> bool:
        return self.found


def stabilizer_group_contains(
    code: StabilizerCode, p: PauliOperator, *, up_to_sign: bool = False
) -> Membership:
    """Whether ``p`` is an element of the stabilizer group.

    With ``up_to_sign`` only the bit pattern is compared, so ``-S`` also
    counts; this is the notion that matters for logical operators.
    """
    if p.n != code.n:
        raise QubitCountMismatch(f"operator acts on {p.n} qubits, code has {code.n}")
    combo = code._echelon.solve(_symplectic_row(p))
    if combo is None:
        return Membership(False, None)
    if not up_to_sign and code.product_of(combo).phase != p.phase:
        return Membership(False, None)
    return Membership(True, tuple(bits_to_indices(combo)))


def enumerate_stabilizer_group(code: StabilizerCode, cap: int = 1 << 16) -> Iterator[PauliOperator]:
    """Yield all 2**rank group elements once each, in Gray-code order."""
    if not code.generators_commute:
        i, j = code.anticommuting_pairs[0]
        raise NonCommutingGenerators(
            i, j, format_pauli(code.generators[i - 1]), format_pauli(code.generators[j - 1])
        )
    basis = code.independent_generators()
    if 1 << len(basis) > cap:
        raise GroupTooLarge(f"group has 2^{len(basis)} elements, cap is {cap}")
    current = PauliOperator(code.n)
    yield current
    for i in range(1, 1 << len(basis)):
        flip = (i & -i).bit_length() - 1
        current = multiply(current, basis[flip])
        yield current


def ground_state_degeneracy(code: StabilizerCode) -> int:
    """Dimension of the joint +1 eigenspace of the generators.

    The trace of the projector product expands into a sum over group
    elements; only the identity term is nonzero, so the result is 2**(n-r).
    Consistency (no -I in the group) is guaranteed at construction.

    If two generators anticommute no nonzero vector is fixed by both, and
    the dimension is 0.
    """
    if not code.generators_commute:
        return 0
    return 1 << (code.n - code.rank)


@dataclass
class PairCheck:
    index: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class LogicalPairReport:
    pairs: list[PairCheck]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.pairs)


def validate_logical_pairs(code: StabilizerCode) -> LogicalPairReport:
    checks = []
    pairs = code.logical_pairs
    for i, pair in enumerate(pairs, start=1):
        failures = []
        ops = (("X", pair.x_bar), ("Z", pair.z_bar))
        for label, op in ops:
            for j, g in enumerate(code.generators, start=1):
                if not commutes(op, g):
                    failures.append(
                        f"{label}_{i} ({format_pauli(op)}) anticommutes with generator {j} "
                        f"({format_pauli(g)})"
                    )
            if stabilizer_group_contains(code, op, up_to_sign=True):
                failures.append(f"{label}_{i} ({format_pauli(op)}) is a stabilizer")
        if commutes(pair.x_bar, pair.z_bar):
            failures.append(f"X_{i} and Z_{i} commute")
        for j, other in enumerate(pairs, start=1):
            if j == i:
                continue
            for label, op in ops:
                for olabel, oop in (("X", other.x_bar), ("Z", other.z_bar)):
                    if not commutes(op, oop):
                        failures.append(f"{label}_{i} anticommutes with {olabel}_{j}")
        checks.append(PairCheck(i, failures))
    return LogicalPairReport(checks)
