"""Screening machinery for spherical classes, plus the quantitative bounds.

Three layers live here:

  * the extended module M(X): symbols Q^I(b) with excess(I) >= dim b, carrying
    the pulled-back Steenrod action, and the check that its odd-degree
    annihilated part sits inside the all-odd-entry span,
  * subspace screens over the honest homology: primitive and A-annihilated
    candidates in a degree, square detection, and the two independent
    refutations of annihilated primitive squares in even degrees,
  * closed-form dimension bounds with exhaustive oracles kept side by side.
    Printed bound and oracle value are both reported and never substituted
    for one another.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dlops import _admissible_to_monomial, apply_Q, apply_Q_iterated
from .errors import CounterexampleFound, UnsupportedOperand
from .f2algebra import (
    Element,
    Monomial,
    base_element,
    basis_enumerate,
    canonical_key,
    generator_monomial,
    generators_up_to,
    masks_for_term_sets,
    split_decomposable,
    translation_class,
)
from .hopf import is_primitive, primitive_space, reduced_coproduct
from .linalg_f2 import kernel_of_images, span_intersection
from .seqcore import BaseClass, UpperSeq, enumerate_admissible, excess, is_admissible, upper_dim
from .spaces import MODEL_QS0, SpaceDesc
from .steenrod import is_A_annihilated, sq_lower
from .suspension import suspend, within_loop_filtration

# ---------------------------------------------------------------------------
# The extended module M(X).


@dataclass(frozen=True, order=True)
class MSymbol:
    """Basis symbol Q^I(b) of the extended module: excess(I) >= dim b.

    Equality of excess and base dimension is allowed here; those symbols embed
    as power monomials of the honest homology rather than as generators.
    """

    base: BaseClass
    seq: UpperSeq

    def __post_init__(self) -> None:
        if not is_admissible(self.seq):
            raise ValueError(f"sequence {self.seq.entries} is not admissible")
        if excess(self.seq) < self.base.dimension:
            raise ValueError("excess below base dimension; the symbol vanishes")

    @property
    def dimension(self) -> int:
        return upper_dim(self.seq, self.base.dimension)

    @property
    def all_entries_odd(self) -> bool:
        return all(i % 2 for i in self.seq.entries)

    def __str__(self) -> str:
        body = ",".join(str(i) for i in self.seq.entries)
        head = f"x_{self.base.dimension}" if self.base.kind == "sphere" else (
            f"{self.base.name}_{self.base.dimension}"
        )
        return f"Q^({body}) {head}" if self.seq else head


class MInfinityModule:
    """M(X) for the sphere and suspension models, with its Steenrod action.

    The action is computed by embedding a symbol into the homology algebra,
    acting there, and pulling back.  The image of an embedded symbol is again
    a sum of embedded symbols (the mixed Cartan terms cancel mod 2); that
    closure is asserted on every call rather than assumed.
    """

    def __init__(self, space: SpaceDesc) -> None:
        if space.model == MODEL_QS0:
            raise UnsupportedOperand("the extended module needs a positive-dimension base")
        self.space = space

    def basis(self, degree: int) -> list[MSymbol]:
        out: list[MSymbol] = []
        for b in self.space.base_classes():
            if degree < b.dimension:
                continue
            for seq in enumerate_admissible(degree, b.dimension, b.dimension - 1):
                out.append(MSymbol(b, seq))
        out.sort()
        return out

    def embed(self, sym: MSymbol) -> Element:
        m = _admissible_to_monomial(sym.seq.entries, sym.base)
        if m is None:
            raise CounterexampleFound(f"symbol {sym} embedded to zero")
        return Element(self.space, frozenset({m}))

    def pullback_monomial(self, m: Monomial) -> MSymbol:
        if m.translation or len(m.factors) != 1:
            raise CounterexampleFound(f"image monomial {m} is not a generator power")
        g, e = m.factors[0]
        if e & (e - 1):
            raise CounterexampleFound(f"image exponent {e} is not a power of two")
        t = e.bit_length() - 1
        entries = g.seq.entries
        d = g.dimension
        for _ in range(t):
            entries = (d,) + entries
            d *= 2
        return MSymbol(g.base, UpperSeq(entries))

    def sq(self, r: int, sym: MSymbol) -> frozenset[MSymbol]:
        image = sq_lower(r, self.embed(sym))
        return frozenset(self.pullback_monomial(m) for m in image.terms)

    def annihilated_vectors(self, degree: int) -> list[frozenset[MSymbol]]:
        """Kernel basis of the total Steenrod action in one degree."""
        syms = self.basis(degree)
        if not syms:
            return []
        term_sets = []
        for s in syms:
            tags: set[tuple[int, MSymbol]] = set()
            for r in range(1, degree + 1):
                for out in self.sq(r, s):
                    tags ^= {(r, out)}
            term_sets.append(frozenset(tags))
        masks, _ = masks_for_term_sets(term_sets)
        return [
            frozenset(s for i, s in enumerate(syms) if combo >> i & 1)
            for combo in kernel_of_images(masks)
        ]


@dataclass(frozen=True)
class WellingtonReport:
    space: SpaceDesc
    degree: int
    annihilated: tuple[tuple[MSymbol, ...], ...]
    violations: tuple[tuple[MSymbol, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def wellington_check(space: SpaceDesc, degree: int) -> WellingtonReport:
    """Is every annihilated vector of M(X) in the all-odd-entry span?

    The containment is only claimed in odd degrees; the report computes it
    for whatever degree it is given.
    """
    module = MInfinityModule(space)
    vectors = module.annihilated_vectors(degree)
    annihilated = tuple(tuple(sorted(v)) for v in vectors)
    violations = tuple(
        tuple(sorted(v)) for v in vectors if not all(s.all_entries_odd for s in v)
    )
    return WellingtonReport(space, degree, annihilated, violations)


# ---------------------------------------------------------------------------
# Candidate screens over the honest homology.


def _pri_ann_kernel(space: SpaceDesc, degree: int, basis: list[Monomial]) -> list[Element]:
    """Kernel of the stacked (reduced coproduct, total Steenrod) map on a span.

    Every returned vector is re-verified against the definitions directly,
    so a bug in the kernel bookkeeping cannot silently pass.
    """
    if not basis:
        return []
    term_sets = []
    for m in basis:
        e = Element(space, frozenset({m}))
        tags: set = set()
        for u, v in reduced_coproduct(e).terms:
            tags ^= {("psi", u, v)}
        for r in range(1, degree + 1):
            for out in sq_lower(r, e).terms:
                tags ^= {("sq", r, out)}
        term_sets.append(frozenset(tags))
    masks, _ = masks_for_term_sets(term_sets)
    out = []
    for combo in kernel_of_images(masks):
        vec = Element(space, frozenset(m for i, m in enumerate(basis) if combo >> i & 1))
        if not is_primitive(vec) or not is_A_annihilated(vec):
            raise CounterexampleFound(f"kernel vector failed re-verification: {vec}")
        out.append(vec)
    return out


def primitive_annihilated_basis(space: SpaceDesc, degree: int) -> list[Element]:
    """Basis of the primitive A-annihilated subspace in one degree.

    Charge zero on the unit-loop model.
    """
    if degree <= 0:
        return []
    charge = 0 if space.has_charge() else None
    return _pri_ann_kernel(space, degree, basis_enumerate(space, degree, charge))


def generator_span(
    space: SpaceDesc, degree: int, loop: int | None = None
) -> list[Monomial]:
    """Single-operation monomials Q^I(base) of one degree, optionally cut to a
    loop filtration level.

    On the unit-loop model each generator is translated back to charge zero.
    Products and powers are excluded: spherical candidates above the bottom
    cell desuspend, and what desuspends is a sum of single operations.
    """
    out = []
    for g in generators_up_to(space, degree):
        if g.dimension != degree:
            continue
        m = generator_monomial(g, 1, -g.charge if space.has_charge() else 0)
        if within_loop_filtration(m, loop):
            out.append(m)
    out.sort(key=canonical_key)
    return out


def _squares_span_masks(space: SpaceDesc, degree: int, universe_sets: list) -> tuple:
    charge = 0 if space.has_charge() else None
    half = basis_enumerate(space, degree // 2, charge) if degree % 2 == 0 else []
    squares = [frozenset({m.square()}) for m in half]
    masks, ordered = masks_for_term_sets(universe_sets + squares)
    return masks[: len(universe_sets)], masks[len(universe_sets) :], ordered


@dataclass(frozen=True)
class ScreenReport:
    """One degree's screening verdict: surviving candidates and squares."""

    space: SpaceDesc
    degree: int
    loop: int | None
    candidates: tuple[Element, ...]
    squares: tuple[Element, ...]
    bounds: dict

    @property
    def verdict(self) -> str:
        if not self.candidates and not self.squares:
            return "no-spherical-candidates"
        if self.squares:
            return "candidates-include-squares"
        return "candidates-remain"

    def to_dict(self) -> dict:
        return {
            "space": self.space.label,
            "degree": self.degree,
            "loop": self.loop,
            "candidates": [str(c) for c in self.candidates],
            "squares": [str(s) for s in self.squares],
            "bounds": self.bounds,
        }


def screen_degree(
    space: SpaceDesc, degree: int, loop: int | None = None
) -> ScreenReport:
    """Candidates for spherical classes in one degree of one space.

    Candidates are the primitive A-annihilated vectors of the single-operation
    span, within the requested loop filtration.  Squares are handled as a
    second list: a surviving square is a 2^t-th Frobenius power of a candidate
    from the odd part of the degree.  Squares rooted in even-dimension
    non-square classes are not listed; the even-square verifier is the
    refutation that removes them.
    """
    if degree <= 0:
        raise ValueError("screening runs in positive degrees")
    candidates = _pri_ann_kernel(space, degree, generator_span(space, degree, loop))

    squares: list[Element] = []
    t = (degree & -degree).bit_length() - 1  # 2-adic valuation
    core = degree >> t
    if t and core >= 1:
        for root in _pri_ann_kernel(space, core, generator_span(space, core, loop)):
            power = root
            for _ in range(t):
                power = power.square()
            if not is_primitive(power) or not is_A_annihilated(power):
                raise CounterexampleFound(f"square candidate failed checks: {power}")
            squares.append(power)

    base_dims = [b.dimension for b in space.base_classes()]
    base = max(base_dims, default=1) or 1
    maxima = {str(l): max_generator_dim(l, base) for l in range(2, 7)}
    bounds = {
        "base_dim": base,
        "max_generator_dim": maxima,
        "degree_exceeds_max_at": [l for l in range(2, 7) if degree > maxima[str(l)]],
    }
    return ScreenReport(space, degree, loop, tuple(candidates), tuple(squares), bounds)


spherical_candidates = screen_degree


# ---------------------------------------------------------------------------
# Even-degree squares: two independent refutations.


@dataclass(frozen=True)
class MechanismEntry:
    root: str
    has_linear_part: bool
    product_nonzero: bool | None
    identity_holds: bool | None


@dataclass(frozen=True)
class EvenSquareDegree:
    degree: int
    kernel_ok: bool
    kernel_witnesses: tuple[str, ...]
    mechanism: tuple[MechanismEntry, ...]

    @property
    def ok(self) -> bool:
        checked = [m for m in self.mechanism if m.has_linear_part]
        return self.kernel_ok and all(
            m.product_nonzero and m.identity_holds for m in checked
        )


@dataclass(frozen=True)
class EvenSquareReport:
    space: SpaceDesc
    max_half_degree: int
    entries: tuple[EvenSquareDegree, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def even_square_screen_at(space: SpaceDesc, degree: int) -> EvenSquareDegree:
    """Refute annihilated primitive squares with a root of one even dimension.

    Kernel route: squares in H_{2 degree} are never hit by suspending a
    primitive annihilated class of H_{2 degree - 1} of the predecessor space,
    and candidates above the bottom cell must arrive by suspension.  Mechanism
    route: for each primitive root, desuspend its single-operation part to P0;
    the class Q^degree(P0) is not annihilated, because Sq^1_* Q^degree =
    Q^(degree - 1) lands on the bottom operation and squares P0.  A root with
    no single-operation part is a sum of squares and is handled at half its
    dimension, so it is recorded but not checked here.
    """
    if degree % 2:
        raise ValueError("the square screen runs in even root dimensions")
    if space.model == MODEL_QS0:
        raise UnsupportedOperand("run the square screen on a delooping, not qs0")
    pred = space.predecessor()

    upstairs = primitive_annihilated_basis(pred, 2 * degree - 1)
    images = [suspend(w) for w in upstairs]
    img_masks, sq_masks, ordered = _squares_span_masks(
        space, 2 * degree, [img.terms for img in images]
    )
    meet = span_intersection(img_masks, sq_masks)
    witnesses = tuple(
        str(Element(space, frozenset(m for i, m in enumerate(ordered) if v >> i & 1)))
        for v in meet
    )

    entries: list[MechanismEntry] = []
    for root in primitive_space(space, degree):
        linear, _ = split_decomposable(root)
        if not linear:
            entries.append(MechanismEntry(str(root), False, None, None))
            continue
        p0 = Element(pred, frozenset())
        for m in linear.terms:
            g = m.factors[0][0]
            down = base_element(pred, space.desuspended_base(g.base))
            piece = apply_Q_iterated(g.seq, down)
            if pred.model == MODEL_QS0:
                piece = piece * translation_class(pred, -(2 ** len(g.seq)))
            p0 = p0 + piece
        w0 = apply_Q(degree, p0)
        product = p0 * p0
        entries.append(
            MechanismEntry(
                str(root),
                True,
                bool(product),
                sq_lower(1, w0) == product,
            )
        )
    return EvenSquareDegree(degree, not meet, witnesses, tuple(entries))


def verify_no_even_squares(space: SpaceDesc, max_half_degree: int) -> EvenSquareReport:
    """Run the even-square refutation for every even root dimension up to the cap.

    Raises CounterexampleFound with the witness if either route fails; a
    genuine failure would falsify the no-even-square claim at desk scale.
    """
    entries = []
    for degree in range(2, max_half_degree + 1, 2):
        entry = even_square_screen_at(space, degree)
        if not entry.ok:
            bad = entry.kernel_witnesses or tuple(
                m.root for m in entry.mechanism
                if m.has_linear_part and not (m.product_nonzero and m.identity_holds)
            )
            raise CounterexampleFound(
                f"even-square refutation failed at root dimension {degree}: "
                + "; ".join(bad)
            )
        entries.append(entry)
    return EvenSquareReport(space, max_half_degree, tuple(entries))


# ---------------------------------------------------------------------------
# Quantitative bounds, their oracles, and derived thresholds.


def max_generator_dim(length_bound: int, base_dim: int) -> int:
    """Top dimension over lower-index sequences strictly increasing in
    {1, ..., length_bound - 1}, by the closed form.

    The maximum is attained by the full sequence (1, ..., length_bound - 1);
    at length_bound = 1 only the empty sequence qualifies and the value is the
    base dimension itself.
    """
    if length_bound < 1:
        raise ValueError("the family needs length_bound >= 1")
    if base_dim < 1:
        raise ValueError("base dimension must be positive")
    half = 2 ** (length_bound - 1)
    return half * base_dim + half * (length_bound - 2) + 1


def max_generator_dim_exhaustive(length_bound: int, base_dim: int) -> int:
    """The same maximum by brute force over all strictly increasing choices."""
    if length_bound < 1 or base_dim < 1:
        raise ValueError("need length_bound >= 1 and base_dim >= 1")
    pool = range(1, length_bound)
    best = 0
    for mask in range(1 << len(pool)):
        js = [j for i, j in enumerate(pool) if mask >> i & 1]
        dim = 2 ** len(js) * base_dim + sum(2**m * j for m, j in enumerate(js))
        best = max(best, dim)
    return best


def sum_identity_check(k: int) -> bool:
    """sum_{i=1..k} 2^(i-1) i == 2^k (k-1) + 1, both sides evaluated honestly."""
    lhs = sum(2 ** (i - 1) * i for i in range(1, k + 1))
    return lhs == 2**k * (k - 1) + 1


def bound_s_minus1(length_bound: int) -> int:
    """Printed degree bound for the one-cell-below family."""
    return 2 ** (length_bound - 1) * length_bound + 2


def oracle_s_minus1(length_bound: int) -> int:
    """Oracle counterpart: twice the top generator dimension over base 1."""
    return 2 * max_generator_dim(length_bound, 1)


def bound_main1(length_bound: int, k: int) -> int:
    """Printed degree bound in the main family, offset parameter k >= 0."""
    return 2**length_bound * (k + 2) + 2 ** (length_bound - 1) * (length_bound - 2) + 2


def oracle_main1(length_bound: int, k: int) -> int:
    return 2 * max_generator_dim(length_bound, k + 2)


@dataclass(frozen=True)
class BoundsReport:
    """Printed closed-form bound next to its exhaustive oracle, never merged."""

    kind: str
    l: int
    k: int
    printed: int
    oracle: int

    @property
    def discrepancy(self) -> bool:
        return self.printed != self.oracle


def bounds_report(l: int, k: int) -> BoundsReport:
    """Bound comparison for length l; k = -1 selects the one-cell-below case."""
    if l < 1:
        raise ValueError("need l >= 1")
    if k == -1:
        return BoundsReport("s-minus-1", l, k, bound_s_minus1(l), oracle_s_minus1(l))
    if k < 0:
        raise ValueError("k must be >= 0, or the sentinel -1")
    return BoundsReport("main-1", l, k, bound_main1(l, k), oracle_main1(l, k))


@dataclass(frozen=True)
class ThresholdReport:
    d: int
    k: int
    bound: int
    n_min: int
    oracle_bound: int
    oracle_n_min: int
    bound_kind: str

    @property
    def discrepancy(self) -> bool:
        return self.bound != self.oracle_bound


def immersion_threshold_report(d: int, k: int) -> ThresholdReport:
    """Smallest n past the degree bound for the (d, k) screening family.

    k = 1 uses the one-cell-below bound; k >= 2 uses the main bound with
    offset k - 2.  The threshold is bound - k + 1.  The oracle columns repeat
    the computation with the doubled exhaustive maximum in place of the
    printed closed form.
    """
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    if k == 1:
        bound, oracle, kind = bound_s_minus1(d), oracle_s_minus1(d), "s-minus-1"
    else:
        bound, oracle, kind = bound_main1(d, k - 2), oracle_main1(d, k - 2), "main-1"
    return ThresholdReport(d, k, bound, bound - k + 1, oracle, oracle - k + 1, kind)


def immersion_threshold(d: int, k: int) -> int:
    return immersion_threshold_report(d, k).n_min


def stable_range_check(d: int, n: int, l: int) -> bool:
    """Whether degree d sits inside the stable range of the l-fold structure
    over dimension n: d + l < 2(n + l - 1)."""
    return d + l < 2 * (n + l - 1)
