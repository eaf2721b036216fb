"""GF(2) linear algebra on rows packed into Python ints."""

from __future__ import annotations

from typing import Iterable, Sequence


def gf2_rank(rows: Iterable[int]) -> int:
    return RowEchelon(rows).rank


class RowEchelon:
    """Reduced row-echelon form of a list of bit rows.

    Each echelon row remembers which input rows it is the XOR of (as a bitmask
    over input positions), so membership queries can return a witness.
    Input rows that reduce to zero are kept as dependency combinations.
    """

    def __init__(self, rows: Iterable[int]) -> None:
        self.rows: list[int] = []
        self.combos: list[int] = []
        self.pivots: list[int] = []
        self.dependencies: list[int] = []
        for i, row in enumerate(rows):
            self._insert(row, 1 << i)

    def _insert(self, row: int, combo: int) -> None:
        row, combo = self.reduce(row, combo)
        if row == 0:
            self.dependencies.append(combo)
            return
        pivot = (row & -row).bit_length() - 1
        bit = 1 << pivot
        for k, existing in enumerate(self.rows):
            if existing & bit:
                self.rows[k] ^= row
                self.combos[k] ^= combo
        self.rows.append(row)
        self.combos.append(combo)
        self.pivots.append(pivot)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: int, combo: int = 0) -> tuple[int, int]:
        """Return ``(residual, combo)`` with ``v = residual ^ XOR(rows in combo)``."""
        for row, c, pivot in zip(self.rows, self.combos, self.pivots):
            if (v >> pivot) & 1:
                v ^= row
                combo ^= c
        return v, combo

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    def solve(self, v: int) -> int | None:
        """Bitmask over input rows whose XOR is ``v``, or None."""
        residual, combo = self.reduce(v)
        return combo if residual == 0 else None


def bits_to_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def pack_rows(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Pack a 0/1 matrix; column ``j`` becomes bit ``j``."""
    return [sum(1 << j for j, b in enumerate(row) if b & 1) for row in matrix]
