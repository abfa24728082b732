"""GF(2) linear algebra on int bitmasks.

Vectors are Python ints, bit j = coordinate j. Small dimensions only;
everything is exact.
"""

from __future__ import annotations

__all__ = ["rank", "left_kernel", "solve"]


def _insert(basis: list[list[int]], row: int, tag: int) -> tuple[int, int]:
    """Reduce (row, tag) against basis rows by their pivot (lowest) bits."""
    for r, t in basis:
        if row & (r & -r):
            row ^= r
            tag ^= t
    return row, tag


def rank(rows: list[int]) -> int:
    """Rank of the span of the given vectors."""
    basis: list[list[int]] = []
    for row in rows:
        row, _ = _insert(basis, row, 0)
        if row:
            basis.append([row, 0])
    return len(basis)


def left_kernel(rows: list[int]) -> list[int]:
    """Basis of row combinations (bit i = row i) whose XOR vanishes."""
    basis: list[list[int]] = []
    kernel = []
    for i, row in enumerate(rows):
        row, tag = _insert(basis, row, 1 << i)
        if row:
            basis.append([row, tag])
        else:
            kernel.append(tag)
    return kernel


def solve(rows: list[int], rhs: list[int]) -> int | None:
    """One solution x (column bitmask) of row . x = rhs over GF(2), or None.

    Free coordinates are set to 0, so the answer is deterministic.
    """
    basis: list[list[int]] = []
    for row, b in zip(rows, rhs):
        row, b = _insert(basis, row, b & 1)
        if not row:
            if b:
                return None
            continue
        piv = row & -row
        for ent in basis:
            if ent[0] & piv:
                ent[0] ^= row
                ent[1] ^= b
        basis.append([row, b])
    x = 0
    for row, b in basis:
        if b:
            x |= row & -row
    return x
