"""Homology suspension along the tower QS^0 -> QS^1 -> QS^2 -> ... and the
corresponding tower over an iterated suspension complex.

The suspension raises dimension by one, kills decomposables, forgets
translations, and sends a single generator Q^I(b) to Q^I(b') over the
suspended base.  The image sequence keeps its excess while the base dimension
grows by one, so excess equality can appear downstairs: the image is then a
power monomial, which _admissible_to_monomial already handles.
"""

from __future__ import annotations

from .dlops import _admissible_to_monomial
from .f2algebra import Element, Monomial, basis_enumerate, masks_for_term_sets
from .linalg_f2 import echelon, kernel_of_images, reduce_against
from .seqcore import upper_to_lower
from .spaces import MODEL_QS0, SpaceDesc


def loop_level(m: Monomial) -> int:
    """Smallest finite loop filtration level containing the monomial.

    A lower-indexed operation Q_j exists on an l-fold loop space when j < l,
    so a monomial lives at level max(j) + 1 over all its lower indices.
    Operation-free monomials sit at level 1.  The level of a product is the
    maximum of the levels of its factors, which makes filtration membership
    multiplicative.
    """
    level = 1
    for g, _ in m.factors:
        if g.seq:
            lows = upper_to_lower(g.seq, g.base.dimension)
            level = max(level, max(lows.entries) + 1)
    return level


def within_loop_filtration(m: Monomial, level: int | None) -> bool:
    """Membership of the monomial in the level-l loop filtration (None = all)."""
    return level is None or loop_level(m) <= level


def suspend(e: Element) -> Element:
    """Image of e under the homology suspension into the successor space."""
    target = e.space.successor()
    out: set[Monomial] = set()
    for m in e.terms:
        if m.gen_length != 1:
            continue  # decomposables and pure translations die
        g = m.factors[0][0]
        image = _admissible_to_monomial(g.seq.entries, e.space.suspended_base(g.base))
        if image is not None:
            out ^= {image}
    return Element(target, frozenset(out))


def suspension_kernel_basis(space: SpaceDesc, degree: int) -> list[Element]:
    """Basis of the kernel of the suspension out of one degree.

    On the unit-loop model this is the charge-zero component.
    """
    charge = 0 if space.model == MODEL_QS0 else None
    basis = basis_enumerate(space, degree, charge)
    if not basis:
        return []
    images = [suspend(Element(space, frozenset({m}))) for m in basis]
    masks, _ = masks_for_term_sets([img.terms for img in images])
    return [
        Element(space, frozenset(m for i, m in enumerate(basis) if combo >> i & 1))
        for combo in kernel_of_images(masks)
    ]


def in_suspension_image(e: Element) -> bool:
    """Whether e is hit by the suspension from the predecessor space."""
    if not e.terms:
        return True
    pred = e.space.predecessor()  # raises NoSuccessor at the bottom of the tower
    d = e.dimension
    charge = 0 if pred.model == MODEL_QS0 else None
    basis = basis_enumerate(pred, d - 1, charge)
    images = [suspend(Element(pred, frozenset({m}))) for m in basis]
    masks, _ = masks_for_term_sets([img.terms for img in images] + [e.terms])
    reduced = echelon(masks[:-1])
    return reduce_against(masks[-1], reduced) == 0
