"""Dense GF(2) linear algebra on Python integers used as bit vectors.

A vector is an int whose bit i is the coefficient of basis element i; a
matrix is a list of row ints.  Addition is xor, so everything here is a few
lines of bit fiddling.  Python's arbitrary-precision ints keep this exact at
any dimension we care about.
"""

from __future__ import annotations

from .errors import NoSolution


def echelon(rows: list[int]) -> list[int]:
    """Row-reduce in place semantics-free: returns reduced rows, zero rows dropped."""
    basis: list[int] = []  # kept in decreasing pivot order
    for row in rows:
        for b in basis:
            if row ^ b < row:  # b's pivot bit is set in row
                row ^= b
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    # back-substitute so each pivot appears in exactly one row
    for i, b in enumerate(basis):
        for j in range(i):
            if basis[j] ^ b < basis[j]:
                basis[j] ^= b
    return basis


def rank(rows: list[int]) -> int:
    return len(echelon(list(rows)))


def in_span(vector: int, basis_rows: list[int]) -> bool:
    reduced = echelon(list(basis_rows))
    for b in reduced:
        if vector ^ b < vector:
            vector ^= b
    return vector == 0


def reduce_against(vector: int, reduced_rows: list[int]) -> int:
    """Remainder of vector modulo an already echelonized list of rows."""
    for b in reduced_rows:
        if vector ^ b < vector:
            vector ^= b
    return vector


def kernel_of_images(images: list[int]) -> list[int]:
    """Kernel basis of the map e_i -> images[i].

    Returns combination vectors c (bit j of c set means input j participates)
    with xor of the selected images zero.  Gaussian elimination tracking the
    combination alongside each image row.
    """
    pairs: list[tuple[int, int]] = []  # (image, combo), image-pivot echelon
    kernel: list[int] = []
    for j, img in enumerate(images):
        combo = 1 << j
        for pimg, pcombo in pairs:
            if img ^ pimg < img:
                img ^= pimg
                combo ^= pcombo
        if img:
            pairs.append((img, combo))
            pairs.sort(key=lambda p: p[0], reverse=True)
        else:
            kernel.append(combo)
    return kernel


def span_intersection(a: list[int], b: list[int]) -> list[int]:
    """Echelon basis of span(a) intersect span(b).

    A kernel vector of the concatenated columns [a | b] picks subsets with
    equal sums, and that common sum is an intersection vector.
    """
    vectors = []
    for combo in kernel_of_images(a + b):
        v = 0
        for i, col in enumerate(a):
            if combo >> i & 1:
                v ^= col
        if v:
            vectors.append(v)
    return echelon(vectors)


def solve_linear(columns: list[int], target: int) -> int:
    """Solve sum over selected columns == target; returns the selection bitmask.

    Raises NoSolution when the target is outside the column span.  When the
    columns are dependent an arbitrary (deterministic) solution is returned;
    callers needing uniqueness should check kernel_of_images first.
    """
    pairs: list[tuple[int, int]] = []
    for j, col in enumerate(columns):
        combo = 1 << j
        for pcol, pcombo in pairs:
            if col ^ pcol < col:
                col ^= pcol
                combo ^= pcombo
        if col:
            pairs.append((col, combo))
            pairs.sort(key=lambda p: p[0], reverse=True)
    residue, combo = target, 0
    for pcol, pcombo in pairs:
        if residue ^ pcol < residue:
            residue ^= pcol
            combo ^= pcombo
    if residue:
        raise NoSolution("target vector is not in the span of the columns")
    return combo
