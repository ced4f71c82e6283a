"""Hopf structure: coproduct, primitives, the halving map, and the primitive
basis in odd degrees of the unit-loop model.

The coproduct is the algebra map determined by

    psi([k])   = [k] (x) [k],
    psi(x)     = x (x) 1 + 1 (x) x          for sphere and cell classes,
    psi(Q^a w) = sum over a' + a'' = a of (Q^a' (x) Q^a'') psi(w),

and the counit sends every dimension-zero monomial to 1.  On the unit-loop
model the diagonal keeps a class inside its own component, so both tensor
slots of psi carry the charge of the input; primitivity is therefore only
meaningful on the charge-zero component.

In odd degree d of that component the primitives have a preferred basis: for
every admissible sequence I with odd head, even tail and positive excess
there is a unique primitive

    p_I = Q^I[1] * [-2^len(I)] + (decomposable correction),

and applying Q-operations to the p_I spans all primitives in odd degrees.
primitive_decomposition expresses an element in that shape and isolates the
residual that the spherical-class screening inspects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dlops import _mul_sets, _q_monomial, apply_Q_iterated
from .errors import (
    ChargeNonzero,
    CounterexampleFound,
    NonUnique,
    NoSolution,
    NotPrimitive,
    UnsupportedOperand,
)
from .f2algebra import (
    Element,
    Generator,
    Monomial,
    TensorElement,
    basis_enumerate,
    element_from_mask,
    generator_monomial,
    masks_for_term_sets,
    split_decomposable,
    translation_monomial,
)
from .linalg_f2 import kernel_of_images, solve_linear
from .seqcore import UpperSeq, excess, is_admissible, upper
from .spaces import MODEL_QS0, SpaceDesc, qs0_space

Pair = tuple[Monomial, Monomial]


def _mul_pairs(a: frozenset[Pair], b: frozenset[Pair]) -> frozenset[Pair]:
    acc: set[Pair] = set()
    for u1, v1 in a:
        for u2, v2 in b:
            acc ^= {(u1.times(u2), v1.times(v2))}
    return frozenset(acc)


@lru_cache(maxsize=None)
def _psi_generator(g: Generator) -> frozenset[Pair]:
    if not g.seq:
        one = Monomial()
        gm = generator_monomial(g)
        return frozenset({(gm, one), (one, gm)})
    a = g.seq.entries[0]
    inner_seq = UpperSeq(g.seq.entries[1:])
    if inner_seq:
        inner = _psi_generator(Generator(g.base, inner_seq))
    elif g.base.kind == "unit_loop":
        inner = _psi_monomial(translation_monomial(1))
    else:
        inner = _psi_generator(Generator(g.base, upper()))
    acc: set[Pair] = set()
    for u, v in inner:
        for ap in range(a + 1):
            left = _q_monomial(ap, u)
            if not left:
                continue
            right = _q_monomial(a - ap, v)
            for x in left:
                for y in right:
                    acc ^= {(x, y)}
    return frozenset(acc)


@lru_cache(maxsize=None)
def _psi_monomial(m: Monomial) -> frozenset[Pair]:
    if not m.factors:
        t = translation_monomial(m.translation)
        return frozenset({(t, t)})
    if m.translation:
        t = translation_monomial(m.translation)
        return _mul_pairs(_psi_monomial(Monomial(m.factors, 0)), frozenset({(t, t)}))
    if len(m.factors) == 1 and m.factors[0][1] == 1:
        return _psi_generator(m.factors[0][0])
    g, e = m.factors[0]
    u = generator_monomial(g)
    v = Monomial(((g, e - 1),) + m.factors[1:], 0) if e > 1 else Monomial(m.factors[1:], 0)
    return _mul_pairs(_psi_monomial(u), _psi_monomial(v))


def coproduct(e: Element) -> TensorElement:
    acc: set[Pair] = set()
    for m in e.terms:
        acc ^= _psi_monomial(m)
    return TensorElement(e.space, 2, frozenset(acc))


def counit(m: Monomial) -> int:
    return 1 if m.dimension == 0 else 0


def _check_primitive_context(e: Element) -> None:
    if e.space.model == MODEL_QS0:
        c = e.charge
        if c not in (0, None):
            raise ChargeNonzero(
                f"primitives live on the charge-zero component, got charge {c}"
            )


def reduced_coproduct(e: Element) -> TensorElement:
    """psi(e) + e (x) 1 + 1 (x) e, for homogeneous e of positive dimension."""
    _check_primitive_context(e)
    d = e.dimension
    if d is not None and d <= 0:
        raise UnsupportedOperand("reduced coproduct needs positive dimension")
    one = Monomial()
    acc: set[Pair] = set()
    for m in e.terms:
        acc ^= _psi_monomial(m)
        acc ^= {(m, one), (one, m)}
    return TensorElement(e.space, 2, frozenset(acc))


def is_primitive(e: Element) -> bool:
    if not e.terms:
        return True
    return not reduced_coproduct(e)


def primitive_space(space: SpaceDesc, degree: int, charge: int | None = None) -> list[Element]:
    """Basis (as elements) of the primitives in one degree."""
    if space.model == MODEL_QS0 and charge not in (0, None):
        raise ChargeNonzero("primitives live on the charge-zero component")
    basis = basis_enumerate(space, degree, charge)
    if not basis:
        return []
    images = [reduced_coproduct(Element(space, frozenset({m}))) for m in basis]
    masks, _ = masks_for_term_sets([t.terms for t in images])
    out = []
    for combo in kernel_of_images(masks):
        terms = frozenset(m for i, m in enumerate(basis) if combo >> i & 1)
        out.append(Element(space, terms))
    return out


# ---------------------------------------------------------------------------
# The halving map r (transpose of the entrywise doubling of sequences).


def square_root_r(e: Element) -> Element:
    """Linear map on the unit-loop model: halve every sequence entry.

    A monomial maps to zero when any entry of any of its sequences is odd;
    otherwise each Q^I becomes Q^(I/2), with exponents and the translation
    left alone.  Group-likes [k] are fixed.
    """
    if e.space.model != MODEL_QS0:
        raise UnsupportedOperand("the halving map is defined on the unit-loop model")
    out: set[Monomial] = set()
    for m in e.terms:
        halved = _halve_monomial(m)
        if halved is not None:
            out ^= {halved}
    return Element(e.space, frozenset(out))


def _halve_monomial(m: Monomial) -> Monomial | None:
    factors = []
    for g, exp in m.factors:
        if any(i % 2 for i in g.seq.entries):
            return None
        factors.append((Generator(g.base, upper(*(i // 2 for i in g.seq.entries))), exp))
    return Monomial(tuple(sorted(factors)), m.translation)


def generator_family(degree: int, max_length: int | None = None) -> list[Monomial]:
    """The classes Q^I[1]*[-2^len(I)] of one degree, optionally capped in length."""
    return [
        m
        for m in basis_enumerate(qs0_space(), degree, 0)
        if m.gen_length == 1
        and m.factors[0][1] == 1
        and (max_length is None or len(m.factors[0][0].seq) <= max_length)
    ]


def kernel_of_r(degree: int, max_length: int | None = None) -> list[Element]:
    """Kernel basis of the halving map on the span of the Q^I[1]*[-2^len(I)].

    Computed by honest linear algebra over the monomial basis.  Each returned
    vector is checked against the predicate "every participating sequence has
    an odd entry"; a violation would disprove the kernel description and is
    raised as a counterexample.
    """
    space = qs0_space()
    family = generator_family(degree, max_length)
    if not family:
        return []
    images = [square_root_r(Element(space, frozenset({m}))) for m in family]
    masks, _ = masks_for_term_sets([e.terms for e in images])
    kernel = []
    for combo in kernel_of_images(masks):
        picked = frozenset(m for i, m in enumerate(family) if combo >> i & 1)
        for m in picked:
            if not any(i % 2 for i in m.factors[0][0].seq.entries):
                raise CounterexampleFound(
                    f"halving-map kernel touches the all-even class {m}"
                )
        kernel.append(Element(space, picked))
    return kernel


# ---------------------------------------------------------------------------
# The primitive basis p_I of odd degrees, unit-loop model, charge zero.


def qualifies_for_primitive(seq: UpperSeq) -> bool:
    """Admissible, nonempty, odd head, even tail, positive excess."""
    if not seq or not is_admissible(seq):
        return False
    if excess(seq) <= 0:
        return False
    head, *tail = seq.entries
    return head % 2 == 1 and all(i % 2 == 0 for i in tail)


@dataclass(frozen=True)
class PrimitiveBasisElement:
    seq: UpperSeq
    value: Element
    correction: Element

    @property
    def dimension(self) -> int:
        return sum(self.seq.entries)

    def __str__(self) -> str:
        return f"p_{self.seq.entries}"


@lru_cache(maxsize=None)
def make_primitive_pI(entries: tuple[int, ...]) -> PrimitiveBasisElement:
    seq = UpperSeq(entries)
    if not qualifies_for_primitive(seq):
        raise ValueError(
            f"{entries} does not qualify: need admissible, odd head, even tail, excess > 0"
        )
    space = qs0_space()
    degree = sum(entries)
    top = generator_monomial(
        Generator(space.base_classes()[0], seq), translation=-(2 ** len(entries))
    )
    lead = Element(space, frozenset({top}))
    decomposables = [m for m in basis_enumerate(space, degree, 0) if m.gen_length >= 2]
    target = reduced_coproduct(lead)
    if not target:
        return PrimitiveBasisElement(seq, lead, Element(space, frozenset()))
    images = [
        reduced_coproduct(Element(space, frozenset({m}))).terms for m in decomposables
    ]
    masks, ordered = masks_for_term_sets(images + [target.terms])
    col_masks, target_mask = masks[:-1], masks[-1]
    if kernel_of_images(col_masks):
        raise NonUnique(f"decomposable correction for p_{entries} is not unique")
    try:
        combo = solve_linear(col_masks, target_mask)
    except NoSolution:
        raise NoSolution(f"no primitive of the shape Q^{entries}[1] + decomposables") from None
    correction = Element(
        space, frozenset(m for i, m in enumerate(decomposables) if combo >> i & 1)
    )
    value = lead + correction
    if reduced_coproduct(value):
        raise NoSolution(f"correction for p_{entries} failed the primitivity check")
    return PrimitiveBasisElement(seq, value, correction)


def primitive_pI(seq: UpperSeq) -> PrimitiveBasisElement:
    return make_primitive_pI(seq.entries)


# ---------------------------------------------------------------------------
# Decomposition of charge-zero classes over the p_I family.


def is_diff_of_powers_of_two(k: int) -> bool:
    """k == 2^b - 2^a for some a, b >= 0 (0 counts: a == b)."""
    if k == 0:
        return True
    v = abs(k)
    # v = 2^hi - 2^lo with hi > lo iff stripping low zeros leaves all ones
    low = (v & -v).bit_length() - 1
    shifted = v >> low
    return shifted & (shifted + 1) == 0


@dataclass(frozen=True)
class DecompositionTerm:
    prefix: UpperSeq
    primitive: PrimitiveBasisElement
    translation_offset: int

    def honest_value(self) -> Element:
        return apply_Q_iterated(self.prefix, self.primitive.value)


@dataclass(frozen=True)
class PrimitiveDecomposition:
    element: Element
    terms: tuple[DecompositionTerm, ...]
    residual: Element

    @property
    def residual_is_square(self) -> bool:
        return self.residual.is_square()

    def residual_root(self) -> Element:
        return self.residual.sqrt()

    def check(self) -> bool:
        """Recompute the defining identity element = sum(terms) + residual."""
        acc = self.residual
        for t in self.terms:
            acc = acc + t.honest_value()
        return acc == self.element


def primitive_decomposition(e: Element) -> PrimitiveDecomposition:
    """Split a primitive into Q^I' p_I'' contributions plus a residual.

    Every single-generator monomial Q^I[1]*[-2^len(I)] whose sequence has an
    odd entry is matched by applying the prefix before the last odd entry to
    the primitive of the remaining tail.  The recorded translation_offset is
    the translation mismatch against treating [k] factors as inert; it is
    always a difference of two powers of two.  For a primitive input the
    residual is zero in odd degrees and a square of a primitive in even ones;
    the caller can take residual_root() and recurse.
    """
    if e.space.model != MODEL_QS0:
        raise UnsupportedOperand("decomposition is defined on the unit-loop model")
    if e.terms and e.charge != 0:
        raise ChargeNonzero("decomposition needs the charge-zero component")
    if not is_primitive(e):
        raise NotPrimitive("decomposition over the p_I family needs a primitive input")
    linear, _ = split_decomposable(e)
    terms: list[DecompositionTerm] = []
    acc = e
    for m in sorted(linear.terms):
        seq = m.factors[0][0].seq
        odd_positions = [i for i, v in enumerate(seq.entries) if v % 2]
        if not odd_positions:
            continue
        b = odd_positions[-1]
        prefix, tail = UpperSeq(seq.entries[:b]), UpperSeq(seq.entries[b:])
        p = make_primitive_pI(tail.entries)
        k_off = -(2 ** len(seq)) + 2 ** len(tail)
        if not is_diff_of_powers_of_two(k_off):
            raise NonUnique(f"translation bookkeeping broke: {k_off}")
        term = DecompositionTerm(prefix, p, k_off)
        terms.append(term)
        acc = acc + term.honest_value()
    return PrimitiveDecomposition(e, tuple(terms), acc)
