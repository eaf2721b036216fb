"""Built-in code instances: genus-2 units and chains, genus-5 codes, [[5,1,2]]."""

from __future__ import annotations

import re
from fractions import Fraction

from .code import CodeParameters, StabilizerCode, build_code
from .pauli import commutes, parse_pauli

GENUS2_UNIT_PAIRS = [("X1X3", "Z1Z4Z6"), ("X4X6", "Z2Z4Z5")]
GENUS2_UNIT_WEIGHT2_PAIRS = [("X1X3", "Z1Z2"), ("X4X6", "Z5Z6")]

GENUS2_CHAIN2_PAIRS = [
    ("X2X6X8", "Z1Z4Z8Z9"),
    ("X2X6X10", "Z5Z7Z10"),
    ("X4X6X8", "Z2Z3Z6"),
]
GENUS2_CHAIN2_WEIGHT2_PAIRS = [("X1X3", "Z1Z2"), ("X3X5X7", "Z5Z6"), ("X7X9", "Z9Z10")]

GENUS5_UNIT_GENERATORS = [
    "X1X2X3X6X7",
    "X3X4X5X12X13",
    "X1X6X8",
    "X2X7X9",
    "X3X10X12",
    "X3X11X13",
    "Z1Z3Z4Z8Z10",
    "Z2Z3Z5Z9Z11",
    "Z3Z6Z8",
    "Z3Z7Z9",
    "Z4Z10Z12",
    "Z5Z11Z13",
]
GENUS5_UNIT_X_PATHS = ["X6X8X10X12", "X6X8X4X12", "X7X9X11X13", "X7X9X5X13"]
GENUS5_UNIT_Z_PATHS = ["Z8Z6Z7Z9", "Z8Z6Z2Z9", "Z8Z1Z7Z9", "Z8Z1Z2Z9", "Z10Z12Z13Z11"]

GENUS5_STACKED_GENERATORS = [
    "X1X2X3X4X7",
    "X1X3X5",
    "X2X4X6",
    "X7X8X10",
    "X7X9X11",
    "X7X10X11X12X13X14X15X18",
    "X12X14X16",
    "X13X15X17",
    "X18X19X21",
    "X18X20X22",
    "X18X21X22X23X24",
    "Z3Z5Z7",
    "Z4Z6Z7",
    "Z1Z5Z7Z8Z12",
    "Z2Z6Z7Z9Z13",
    "Z8Z10Z12",
    "Z9Z11Z13",
    "Z14Z16Z18",
    "Z15Z17Z18",
    "Z12Z16Z18Z19Z23",
    "Z13Z17Z18Z20Z24",
    "Z19Z21Z23",
    "Z20Z22Z24",
]


def genus2_unit() -> StabilizerCode:
    return build_code(
        "genus2-unit",
        6,
        ["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"],
        GENUS2_UNIT_PAIRS,
        CodeParameters(6, 2, 2, m=4),
        ancilla_count=4,
        genus=2,
        metadata={"alternative_pairs": [list(p) for p in GENUS2_UNIT_WEIGHT2_PAIRS]},
    )


def _chain_generators(q: int) -> list[str]:
    def xs(*idx: int) -> str:
        return "".join(f"X{i}" for i in idx)

    gens = [xs(1, 2, 3, 4)]
    for i in range(1, q):
        gens.append(xs(*range(4 * i - 1, 4 * i + 5)))
    gens.append(xs(*range(4 * q - 1, 4 * q + 3)))
    for i in range(1, q + 1):
        b = 4 * (i - 1)
        gens.append(f"Z{b + 1}Z{b + 3}Z{b + 5}")
        gens.append(f"Z{b + 2}Z{b + 4}Z{b + 6}")
    return gens


def genus2_vertical_chain(q: int) -> StabilizerCode:
    """``q`` genus-2 units stacked vertically on ``4q + 2`` data qubits.

    Logical pairs and expected parameters are only attached for q = 1, 2;
    larger chains get neither.
    """
    if q < 1:
        raise ValueError(f"chain length must be at least 1, got {q}")
    n = 4 * q + 2
    pairs: list[tuple[str, str]] = []
    expected = None
    metadata = {}
    ancillas = None
    if q == 1:
        pairs = GENUS2_UNIT_PAIRS
        expected = CodeParameters(6, 2, 2, m=4)
        ancillas = 4
        metadata["alternative_pairs"] = [list(p) for p in GENUS2_UNIT_WEIGHT2_PAIRS]
    elif q == 2:
        pairs = GENUS2_CHAIN2_PAIRS
        expected = CodeParameters(10, 3, 3, m=7)
        ancillas = 7
        metadata["alternative_pairs"] = [list(p) for p in GENUS2_CHAIN2_WEIGHT2_PAIRS]
    return build_code(
        f"genus2-chain-{q}",
        n,
        _chain_generators(q),
        pairs,
        expected,
        ancilla_count=ancillas,
        genus=2,
        metadata=metadata,
    )


def genus2_grid_parameters(p: int) -> CodeParameters:
    """Parameters of the p x p grid of genus-2 units (formula only)."""
    if p < 1:
        raise ValueError(f"grid size must be at least 1, got {p}")
    return CodeParameters(
        n=2 * p * (2 * p + 1),
        k=2 * p * p,
        d=(p + 2) // 2 + 1,
        m=2 * p * (p + 1),
        p=p,
    )


def encoding_rate(params: CodeParameters) -> Fraction:
    return Fraction(params.k, params.n)


def genus5_unit() -> StabilizerCode:
    """The 13-qubit genus-5 unit, generators exactly as transcribed.

    Eight X/Z generator pairs overlap on a single qubit and anticommute; the
    code is built with ``allow_anticommuting`` so it can still be inspected.
    """
    code = build_code(
        "genus5-unit",
        13,
        GENUS5_UNIT_GENERATORS,
        [("X6X8X4X12", "Z8Z1Z7Z9")],
        CodeParameters(13, 1, 3, m=12),
        ancilla_count=12,
        genus=5,
        metadata={"x_paths": list(GENUS5_UNIT_X_PATHS), "z_paths": list(GENUS5_UNIT_Z_PATHS)},
        allow_anticommuting=True,
    )
    _check_paths(code)
    return code


def _check_paths(code: StabilizerCode) -> None:
    for key in ("x_paths", "z_paths"):
        for text in code.metadata.get(key, ()):
            op = parse_pauli(text, code.n)
            bad = [i + 1 for i, g in enumerate(code.generators) if not commutes(op, g)]
            if bad:
                raise ValueError(f"path {text} anticommutes with generators {bad}")


def genus5_stacked() -> StabilizerCode:
    """Two stacked genus-5 units on 24 qubits (20 anticommuting generator pairs)."""
    return build_code(
        "genus5-stacked",
        24,
        GENUS5_STACKED_GENERATORS,
        [("X8X12X16X14", "Z8Z10Z15Z17")],
        CodeParameters(24, 1, 4, m=23),
        ancilla_count=23,
        genus=5,
        allow_anticommuting=True,
    )


def surface_512() -> StabilizerCode:
    return build_code(
        "surface-512",
        5,
        ["X1X2X3", "X3X4X5", "Z1Z3Z4", "Z2Z3Z5"],
        [("X2X3X4", "Z1Z3Z5")],
        CodeParameters(5, 1, 2, m=4),
        ancilla_count=4,
        genus=1,
        metadata={
            "provenance": "standard distance-2 surface-code stabilizers for the "
            "five-data-qubit layout (derived, not transcribed)"
        },
    )


_FIXED = {
    "genus2-unit": genus2_unit,
    "genus2-chain-2": lambda: genus2_vertical_chain(2),
    "genus5-unit": genus5_unit,
    "genus5-stacked": genus5_stacked,
    "surface-512": surface_512,
}

_CHAIN_RE = re.compile(r"genus2-chain-(\d+)$")


def get_code(name: str) -> StabilizerCode:
    """Resolve a canonical name, including any ``genus2-chain-<q>``."""
    if name in _FIXED:
        return _FIXED[name]()
    m = _CHAIN_RE.match(name)
    if m:
        return genus2_vertical_chain(int(m.group(1)))
    raise KeyError(f"unknown code {name!r}; known: {', '.join(catalog_names())}")


def catalog_names() -> list[str]:
    return list(_FIXED)


def catalog_list() -> list[tuple[str, CodeParameters]]:
    out = []
    for name in _FIXED:
        code = get_code(name)
        assert code.expected is not None
        out.append((name, code.expected))
    return out


def catalog_codes() -> list[StabilizerCode]:
    return [get_code(name) for name in _FIXED]
