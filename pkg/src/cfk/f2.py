"""Dense GF(2) linear algebra on Python-int bitmask rows.

A matrix is a list of ints; bit j of rows[i] is the (i, j) entry.  Vectors
over the column space are single ints.  XOR on bigints keeps this fast well
past the sizes the invariant engines need.
"""
from __future__ import annotations


def rank(rows: list[int]) -> int:
    r = 0
    reduced: list[int] = []
    for row in rows:
        for piv in reduced:
            if row & (piv & -piv):
                row ^= piv
        if row:
            reduced.append(row)
            r += 1
    return r


def solve(rows: list[int], ncols: int, rhs: int) -> int | None:
    """One solution x (bitmask over columns) of A x = b, or None.

    rows[i] is row i of A over the first ncols bits; bit i of rhs is b[i].
    Free variables are set to zero.
    """
    mat_mask = (1 << ncols) - 1
    reduced: list[int] = []  # rows with distinct leading bits, rhs in bit ncols+
    for i, row in enumerate(rows):
        aug = (row & mat_mask) | (((rhs >> i) & 1) << ncols)
        for piv in reduced:
            lead = piv & -piv
            if aug & lead:
                aug ^= piv
        if aug & mat_mask:
            reduced.append(aug)
        elif aug:
            return None  # 0 = 1 row
    # back-substitute: make each pivot column appear in exactly one row
    reduced.sort(key=lambda r: r & -r)
    for idx in range(len(reduced) - 1, -1, -1):
        lead = reduced[idx] & -reduced[idx]
        for j in range(idx):
            if reduced[j] & lead:
                reduced[j] ^= reduced[idx]
    x = 0
    for row in reduced:
        if row >> ncols:
            x |= row & -row
    return x


def kernel_basis(rows: list[int], ncols: int) -> list[int]:
    """Basis of the null space of A, as column bitmasks."""
    cols = [0] * ncols
    for i, row in enumerate(rows):
        r = row
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    reduced: list[tuple[int, int]] = []  # (column vector, combination record)
    kernel: list[int] = []
    for j in range(ncols):
        v = cols[j]
        comb = 1 << j
        for vec, c in reduced:
            if v & (vec & -vec):
                v ^= vec
                comb ^= c
        if v:
            reduced.append((v, comb))
        else:
            kernel.append(comb)
    return kernel


def in_span(rows: list[int], ncols: int, rhs: int) -> bool:
    return solve(rows, ncols, rhs) is not None
