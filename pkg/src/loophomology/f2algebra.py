"""Mod-2 polynomial algebra underlying the homology of an infinite loop space.

The homology of each supported space is polynomial over GF(2) on generators
Q^I(b), one for every base class b and admissible sequence I of excess
exceeding dim b.  Over the unit-loop model the component classes [k] enter as
an extra group-like factor; a monomial carries them as an integer
``translation`` exponent, so [j]*[k] = [j+k] and the basepoint [0] is the unit.

Elements are formal GF(2) sums, stored as frozensets of monomials; addition is
symmetric difference.  Everything is immutable and hashable so the operation
layers above can memoize per monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotASquare, SpaceMismatch
from .seqcore import (
    BaseClass,
    UpperSeq,
    enumerate_admissible,
    excess,
    is_admissible,
    upper,
    upper_dim,
)
from .spaces import MODEL_QS0, SpaceDesc


@dataclass(frozen=True, order=True)
class Generator:
    """Polynomial generator Q^I(b), admissible I with excess(I) > dim b.

    The empty sequence stands for the base class itself.  On the unit-loop
    base that role is played by translations, so there the sequence must be
    nonempty.
    """

    base: BaseClass
    seq: UpperSeq

    def __post_init__(self) -> None:
        if not is_admissible(self.seq):
            raise ValueError(f"sequence {self.seq.entries} is not admissible")
        if excess(self.seq) <= self.base.dimension:
            raise ValueError(
                f"excess {excess(self.seq)} does not exceed base dimension "
                f"{self.base.dimension}; not a polynomial generator"
            )
        if self.base.kind == "unit_loop" and not self.seq:
            raise ValueError("the unit-loop base class itself is the translation [1]")

    @property
    def dimension(self) -> int:
        return upper_dim(self.seq, self.base.dimension)

    @property
    def charge(self) -> int:
        """Component index of the underlying class; each Q doubles it."""
        return 2 ** len(self.seq) if self.base.kind == "unit_loop" else 0

    def __str__(self) -> str:
        if self.base.kind == "unit_loop":
            head = "[1]"
        elif self.base.kind == "sphere":
            head = f"x_{self.base.dimension}"
        else:
            head = f"{self.base.name}_{self.base.dimension}"
        if not self.seq:
            return head
        if len(self.seq) == 1:
            return f"Q^{self.seq.entries[0]} {head}" if head[0] != "[" else f"Q^{self.seq.entries[0]}{head}"
        body = ",".join(str(i) for i in self.seq.entries)
        return f"Q^({body}) {head}" if head[0] != "[" else f"Q^({body}){head}"


@dataclass(frozen=True, order=True)
class Monomial:
    """Product of generator powers times a translation [k]."""

    factors: tuple[tuple[Generator, int], ...] = ()
    translation: int = 0

    def __post_init__(self) -> None:
        gens = [g for g, _ in self.factors]
        if gens != sorted(gens):
            raise ValueError("factors must be sorted by generator")
        if len(set(gens)) != len(gens):
            raise ValueError("repeated generator; merge exponents instead")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")

    @property
    def dimension(self) -> int:
        return sum(e * g.dimension for g, e in self.factors)

    @property
    def charge(self) -> int:
        return self.translation + sum(e * g.charge for g, e in self.factors)

    @property
    def gen_length(self) -> int:
        """Number of generator factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def times(self, other: Monomial) -> Monomial:
        merged = dict(self.factors)
        for g, e in other.factors:
            merged[g] = merged.get(g, 0) + e
        return Monomial(tuple(sorted(merged.items())), self.translation + other.translation)

    __mul__ = times

    def with_translation(self, k: int) -> Monomial:
        return Monomial(self.factors, k)

    def is_square(self) -> bool:
        return self.translation % 2 == 0 and all(e % 2 == 0 for _, e in self.factors)

    def sqrt(self) -> Monomial:
        if not self.is_square():
            raise NotASquare(f"{self} is not a square monomial")
        return Monomial(
            tuple((g, e // 2) for g, e in self.factors), self.translation // 2
        )

    def square(self) -> Monomial:
        return Monomial(
            tuple((g, 2 * e) for g, e in self.factors), 2 * self.translation
        )

    def __str__(self) -> str:
        # bare base classes need no parentheses under an exponent
        parts = [
            str(g) if e == 1 else (f"{g}^{e}" if not g.seq else f"({g})^{e}")
            for g, e in sorted(self.factors, reverse=True)
        ]
        if not parts:
            return f"[{self.translation}]" if self.translation else "1"
        if self.translation:
            return " ".join(parts) + f" * [{self.translation}]"
        return " ".join(parts)


UNIT_MONOMIAL = Monomial()


def translation_monomial(k: int) -> Monomial:
    return Monomial((), k)


def generator_monomial(g: Generator, exponent: int = 1, translation: int = 0) -> Monomial:
    return Monomial(((g, exponent),), translation)


def canonical_key(m: Monomial) -> tuple:
    """Sort key for printed bases: fewest generator factors first.

    Single operations come before products and powers, so Q^2 x_1 precedes
    x_1^3 in degree three.  Ties fall back to the structural ordering.
    """
    return (sum(e for _, e in m.factors), m)


@dataclass(frozen=True)
class Element:
    """GF(2) sum of monomials in the homology of one space."""

    space: SpaceDesc
    terms: frozenset[Monomial]

    def __add__(self, other: Element) -> Element:
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space.label} vs {other.space.label}")
        return Element(self.space, self.terms ^ other.terms)

    def __mul__(self, other: Element) -> Element:
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space.label} vs {other.space.label}")
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {a.times(b)}
        return Element(self.space, frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def dimension(self) -> int | None:
        """Common dimension of the terms; None when zero, error when mixed."""
        dims = {m.dimension for m in self.terms}
        if not dims:
            return None
        if len(dims) > 1:
            raise ValueError(f"element is not homogeneous: dimensions {sorted(dims)}")
        return dims.pop()

    @property
    def charge(self) -> int | None:
        charges = {m.charge for m in self.terms}
        if not charges:
            return None
        if len(charges) > 1:
            raise ValueError(f"element spreads over components {sorted(charges)}")
        return charges.pop()

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=canonical_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.sorted_terms())

    def is_square(self) -> bool:
        return bool(self.terms) and all(m.is_square() for m in self.terms)

    def sqrt(self) -> Element:
        if not all(m.is_square() for m in self.terms):
            raise NotASquare(f"{self} is not a square")
        return Element(self.space, frozenset(m.sqrt() for m in self.terms))

    def square(self) -> Element:
        # Frobenius is additive mod 2, so squaring maps term sets bijectively.
        return Element(self.space, frozenset(m.square() for m in self.terms))


def zero(space: SpaceDesc) -> Element:
    return Element(space, frozenset())


def one(space: SpaceDesc) -> Element:
    return Element(space, frozenset({UNIT_MONOMIAL}))


def element_of(space: SpaceDesc, *monomials: Monomial) -> Element:
    acc: set[Monomial] = set()
    for m in monomials:
        _check_monomial(space, m)
        acc ^= {m}
    return Element(space, frozenset(acc))


def _check_monomial(space: SpaceDesc, m: Monomial) -> None:
    if m.translation and space.model != MODEL_QS0:
        raise SpaceMismatch(f"{space.label} has no translation classes")
    bases = set(space.base_classes())
    for g, _ in m.factors:
        if g.base not in bases:
            raise SpaceMismatch(f"generator base {g.base} does not live in {space.label}")


def translation_class(space: SpaceDesc, k: int) -> Element:
    return element_of(space, translation_monomial(k))


def base_element(space: SpaceDesc, base: BaseClass) -> Element:
    """The base class b itself as an element ([1] on the unit-loop model)."""
    if base.kind == "unit_loop":
        return translation_class(space, 1)
    return element_of(space, generator_monomial(Generator(base, upper())))


def split_decomposable(e: Element) -> tuple[Element, Element]:
    """Split into (single-generator part, everything else).

    The second component holds products of two or more generators together
    with any pure-translation terms.
    """
    linear = frozenset(m for m in e.terms if m.gen_length == 1)
    return Element(e.space, linear), Element(e.space, e.terms - linear)


def generators_up_to(space: SpaceDesc, max_dim: int) -> list[Generator]:
    """All polynomial generators of dimension <= max_dim, sorted by dimension."""
    out: list[Generator] = []
    for base in space.base_classes():
        lo = 1 if base.kind == "unit_loop" else base.dimension
        for d in range(lo, max_dim + 1):
            for seq in enumerate_admissible(d, base.dimension, base.dimension):
                if base.kind == "unit_loop" and not seq:
                    continue
                out.append(Generator(base, seq))
    out.sort(key=lambda g: (g.dimension, g))
    return out


def basis_enumerate(space: SpaceDesc, degree: int, charge: int | None = None) -> list[Monomial]:
    """Sorted monomial basis of the given degree (reduced: degree 0 is empty).

    For the unit-loop model the basis of one component is listed; charge
    defaults to 0 there and must be omitted elsewhere.
    """
    if space.has_charge():
        charge = 0 if charge is None else charge
    elif charge is not None:
        raise ValueError(f"{space.label} has a single component; omit charge")
    if degree <= 0:
        return []
    gens = [g for g in generators_up_to(space, degree)]
    out: list[Monomial] = []

    def extend(idx: int, remaining: int, picked: list[tuple[Generator, int]]) -> None:
        if remaining == 0:
            factors = tuple(sorted(picked))
            t = 0
            if space.has_charge():
                t = charge - sum(e * g.charge for g, e in factors)
            out.append(Monomial(factors, t))
            return
        if idx == len(gens) or gens[idx].dimension > remaining:
            return
        extend(idx + 1, remaining, picked)
        d = gens[idx].dimension
        for e in range(1, remaining // d + 1):
            extend(idx + 1, remaining - e * d, picked + [(gens[idx], e)])

    gens.sort(key=lambda g: (g.dimension, g))
    extend(0, degree, [])
    out.sort(key=canonical_key)
    return out


# ---------------------------------------------------------------------------
# Tensor powers, used by the coproduct layer.


@dataclass(frozen=True)
class TensorElement:
    """GF(2) sum of arity-fold tensors of monomials over one space."""

    space: SpaceDesc
    arity: int
    terms: frozenset[tuple[Monomial, ...]]

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.space != other.space or self.arity != other.arity:
            raise SpaceMismatch("tensor shapes differ")
        return TensorElement(self.space, self.arity, self.terms ^ other.terms)

    def __mul__(self, other: TensorElement) -> TensorElement:
        if self.space != other.space or self.arity != other.arity:
            raise SpaceMismatch("tensor shapes differ")
        acc: set[tuple[Monomial, ...]] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x.times(y) for x, y in zip(a, b))}
        return TensorElement(self.space, self.arity, frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            " (x) ".join(str(m) for m in t) for t in sorted(self.terms)
        )


def tensor_zero(space: SpaceDesc, arity: int = 2) -> TensorElement:
    return TensorElement(space, arity, frozenset())


def tensor_of(*elements: Element) -> TensorElement:
    space = elements[0].space
    acc: set[tuple[Monomial, ...]] = set()
    for combo in itertools.product(*(e.sorted_terms() for e in elements)):
        acc ^= {tuple(combo)}
    return TensorElement(space, len(elements), frozenset(acc))


def expand_slot(te: TensorElement, slot: int, fn) -> TensorElement:
    """Replace slot by fn(monomial), an arity-k TensorElement, splicing it in."""
    acc: set[tuple[Monomial, ...]] = set()
    new_arity = None
    for t in te.terms:
        image = fn(t[slot])
        new_arity = te.arity - 1 + image.arity
        for repl in image.terms:
            acc ^= {t[:slot] + repl + t[slot + 1 :]}
    if new_arity is None:
        new_arity = te.arity + 1  # empty sum; arity is conventional
    return TensorElement(te.space, new_arity, frozenset(acc))


def map_slot(te: TensorElement, slot: int, fn) -> TensorElement:
    """Apply fn(monomial) -> Element inside one slot, keeping the arity."""
    acc: set[tuple[Monomial, ...]] = set()
    for t in te.terms:
        for m in fn(t[slot]).terms:
            acc ^= {t[:slot] + (m,) + t[slot + 1 :]}
    return TensorElement(te.space, te.arity, frozenset(acc))


# ---------------------------------------------------------------------------
# Bitmask glue for the GF(2) linear algebra layer.


def masks_for_term_sets(term_sets: list) -> tuple[list[int], list]:
    """Assign bits to the union of the term sets (sorted) and mask each set."""
    universe: set = set()
    for s in term_sets:
        universe |= set(s)
    ordered = sorted(universe)
    index = {t: i for i, t in enumerate(ordered)}
    return [sum(1 << index[t] for t in s) for s in term_sets], ordered


def element_from_mask(space: SpaceDesc, mask: int, ordered_basis: list[Monomial]) -> Element:
    terms = frozenset(m for i, m in enumerate(ordered_basis) if mask >> i & 1)
    return Element(space, terms)
