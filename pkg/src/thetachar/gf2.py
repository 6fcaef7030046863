"""Bit-packed linear algebra over GF(2).

Vectors are Python ints; a length-n vector stores coordinate k (k = 0
leftmost) at bit position n-1-k, so ``int(bits, 2)`` and ``format(v,
f"0{n}b")`` convert to and from bit strings directly.  Matrices are lists
of row ints in the same packing.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence

__all__ = [
    "parity",
    "gf2_rank",
    "gf2_inv",
    "gf2_matvec",
    "gf2_mul",
    "gf2_rref",
    "gf2_kernel_masks",
]


def parity(x: int) -> int:
    return x.bit_count() & 1


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank by elimination on the leading bit; rows are consumed as ints."""
    pivots: List[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def gf2_rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis, rows sorted by descending pivot.

    The result is the canonical representative of the row span: two inputs
    span the same subspace iff their rref tuples are equal.
    """
    basis: List[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    basis.sort(reverse=True)
    # back-substitute so each pivot column is zero in every other row
    for i, b in enumerate(basis):
        piv = 1 << (b.bit_length() - 1)
        for j in range(i):
            if basis[j] & piv:
                basis[j] ^= b
    return tuple(basis)


def gf2_matvec(rows: Sequence[int], v: int) -> int:
    n = len(rows)
    out = 0
    for i, row in enumerate(rows):
        if parity(row & v):
            out |= 1 << (n - 1 - i)
    return out


def gf2_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Matrix product a @ b for square bit matrices of equal size n x n."""
    n = len(a)
    bt = _transpose(b, n)
    return [
        sum(
            (parity(arow & bt[j]) << (n - 1 - j))
            for j in range(n)
        )
        for arow in a
    ]


def _transpose(rows: Sequence[int], n: int) -> List[int]:
    out = [0] * n
    for i, row in enumerate(rows):
        for j in range(n):
            if row >> (n - 1 - j) & 1:
                out[j] |= 1 << (n - 1 - i)
    return out


def gf2_inv(rows: Sequence[int]) -> List[int]:
    """Inverse of a square bit matrix via Gauss-Jordan on [A | I].

    Raises ValueError if the matrix is singular.
    """
    n = len(rows)
    aug = [(r << n) | (1 << (n - 1 - i)) for i, r in enumerate(rows)]
    row = 0
    for col in range(n - 1, -1, -1):
        bit = 1 << (col + n)
        piv = next((k for k in range(row, n) if aug[k] & bit), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[row], aug[piv] = aug[piv], aug[row]
        for k in range(n):
            if k != row and aug[k] & bit:
                aug[k] ^= aug[row]
        row += 1
    mask = (1 << n) - 1
    return [a & mask for a in aug]


def gf2_kernel_masks(vecs: Sequence[int]) -> List[int]:
    """Basis of combination masks m with XOR of {vecs[j] : bit j of m} = 0.

    Mask bit j refers to vecs[j] (plain index order, bit 0 = first vector).
    The masks span the kernel of the map F2^len(vecs) -> span(vecs).
    """
    pivots: List[tuple[int, int]] = []  # (reduced vector, combination mask)
    kernel: List[int] = []
    for j, v in enumerate(vecs):
        mask = 1 << j
        for pv, pm in pivots:
            if pv and (v ^ pv) < v:
                v ^= pv
                mask ^= pm
        if v == 0:
            kernel.append(mask)
        else:
            pivots.append((v, mask))
            pivots.sort(key=lambda t: -t[0])
    return kernel
