"""Operation index sequences: admissibility, excess, upper/lower conversion.

Upper indexing writes an iterated operation as Q^{i_1} ... Q^{i_s} applied to a
base class, outermost first.  Lower indexing writes Q_{j} z = Q^{j + dim z} z,
so the same composite carries a lower sequence (j_1, ..., j_s) that depends on
the dimension of the class each operation acts on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NegativeLowerIndex

#: Excess of the empty sequence; compares greater than any integer.
INFINITE = math.inf


def _check_entries(entries: tuple[int, ...]) -> None:
    for e in entries:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"sequence entries must be nonnegative integers, got {entries!r}")


@dataclass(frozen=True, order=True)
class UpperSeq:
    """Upper-indexed sequence (i_1, ..., i_s), outermost operation first."""

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_entries(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)


@dataclass(frozen=True, order=True)
class LowerSeq:
    """Lower-indexed sequence (j_1, ..., j_s), outermost operation first."""

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_entries(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)


def upper(*entries: int) -> UpperSeq:
    return UpperSeq(tuple(entries))


def lower(*entries: int) -> LowerSeq:
    return LowerSeq(tuple(entries))


def is_admissible(seq: UpperSeq) -> bool:
    """True iff i_m <= 2 * i_{m+1} for every consecutive pair (empty: True)."""
    e = seq.entries
    return all(e[m] <= 2 * e[m + 1] for m in range(len(e) - 1))


def excess(seq: UpperSeq) -> int | float:
    """i_1 minus the sum of the remaining entries; INFINITE when empty."""
    e = seq.entries
    if not e:
        return INFINITE
    return e[0] - sum(e[1:])


def upper_dim(seq: UpperSeq, base_dim: int) -> int:
    """Dimension of Q^{seq} applied to a class of dimension base_dim."""
    return base_dim + sum(seq.entries)


def lower_to_upper(seq: LowerSeq, base_dim: int) -> UpperSeq:
    """Convert lower indices to upper, folding dimensions innermost-out."""
    out: list[int] = []
    dim = base_dim
    for j in reversed(seq.entries):
        i = j + dim
        out.append(i)
        dim += i
    return UpperSeq(tuple(reversed(out)))


def upper_to_lower(seq: UpperSeq, base_dim: int) -> LowerSeq:
    """Inverse of lower_to_upper.

    Raises NegativeLowerIndex when some upper entry falls below the dimension
    of the class it acts on (the composite is the zero class).
    """
    e = seq.entries
    out: list[int] = []
    tail = sum(e)
    for m, i in enumerate(e):
        tail -= i
        j = i - tail - base_dim
        if j < 0:
            raise NegativeLowerIndex(
                f"entry {i} at position {m + 1} of {e!r} acts below the "
                f"dimension of its argument (lower index {j})"
            )
        out.append(j)
    return LowerSeq(tuple(out))


def is_strictly_increasing(seq: LowerSeq) -> bool:
    e = seq.entries
    return all(e[m] < e[m + 1] for m in range(len(e) - 1))


def all_entries_odd(seq: UpperSeq) -> bool:
    """True when every entry is odd (vacuously true for the empty sequence)."""
    return all(e % 2 == 1 for e in seq.entries)


def enumerate_admissible(
    degree: int,
    base_dim: int,
    min_excess: int,
    lower_entry_bound: int | None = None,
) -> list[UpperSeq]:
    """All admissible I with upper_dim(I, base_dim) == degree, excess(I) > min_excess.

    The empty sequence appears when degree == base_dim (its excess is infinite).
    When lower_entry_bound is given, every lower index must be < the bound.
    Output is in lexicographic order of the upper entries.  Sequences whose
    composite vanishes (a negative lower index) are not produced.
    """
    if degree < base_dim:
        return []
    # Entries are generated in lower-index form, innermost last.  A composite of
    # dimension d_inner extends to dimension 2*d_inner + j by prepending Q_j.
    # Lower indices run nondecreasing outermost-in, so the excess constraint on
    # the head bounds every entry from below.
    j_min = max(min_excess - base_dim + 1, 0)

    @lru_cache(maxsize=None)
    def pieces(d: int) -> tuple[tuple[int, ...], ...]:
        found: list[tuple[int, ...]] = []
        if d == base_dim:
            found.append(())
        j_hi = d - 2 * base_dim
        if lower_entry_bound is not None:
            j_hi = min(j_hi, lower_entry_bound - 1)
        for j in range(j_min, j_hi + 1):
            if (d - j) % 2:
                continue
            d_inner = (d - j) // 2
            if d_inner >= d:  # guards the d == j == 0 self-call
                continue
            for inner in pieces(d_inner):
                if inner and j > inner[0]:
                    continue  # keep lower indices nondecreasing (admissibility)
                found.append((j,) + inner)
        return tuple(found)

    out = [_raw_lower_to_upper(js, base_dim) for js in pieces(degree)]
    out.sort(key=lambda s: s.entries)
    return out


def _raw_lower_to_upper(js: tuple[int, ...], base_dim: int) -> UpperSeq:
    # Same fold as lower_to_upper but tolerating negative lower indices.
    out: list[int] = []
    dim = base_dim
    for j in reversed(js):
        i = j + dim
        out.append(i)
        dim += i
    return UpperSeq(tuple(reversed(out)))


# ---------------------------------------------------------------------------
# Base classes of the supported space models.

KIND_SPHERE = "sphere"
KIND_UNIT_LOOP = "unit_loop"
KIND_CELL = "cell"


@dataclass(frozen=True, order=True)
class BaseClass:
    """A homology base class an operation sequence is applied to.

    sphere:    the fundamental class x_n of S^n inside QS^n (dimension n >= 1)
    unit_loop: the class [1] of the degree-one component of QS^0 (dimension 0)
    cell:      a cell of a suspension, carrying its ambient dimension
    """

    kind: str
    dimension: int
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind not in (KIND_SPHERE, KIND_UNIT_LOOP, KIND_CELL):
            raise ValueError(f"unknown base class kind {self.kind!r}")
        if self.kind == KIND_SPHERE and self.dimension < 1:
            raise ValueError("sphere base class needs dimension >= 1")
        if self.kind == KIND_UNIT_LOOP and self.dimension != 0:
            raise ValueError("unit loop class lives in dimension 0")
        if self.kind == KIND_CELL and self.dimension < 1:
            raise ValueError("cell base class needs dimension >= 1")


def sphere_class(n: int) -> BaseClass:
    return BaseClass(KIND_SPHERE, n)


def unit_loop_class() -> BaseClass:
    return BaseClass(KIND_UNIT_LOOP, 0)


def cell_class(name: str, dimension: int) -> BaseClass:
    return BaseClass(KIND_CELL, dimension, name)
