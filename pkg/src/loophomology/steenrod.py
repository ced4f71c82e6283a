"""The lower (degree-decreasing) Steenrod action on the polynomial models.

Sq^r_* is dual to the cohomology operation Sq^r, so it lowers dimension by r.
It is computed from four facts:

  * base classes: spheres and components carry the trivial action; cells of a
    user-described complex carry whatever table the description provides,
  * products obey the dual Cartan formula
        Sq^r_*(u v) = sum over r' + r'' = r of Sq^(r')_* u * Sq^(r'')_* v,
  * generators obey the commutation rule with Q-operations
        Sq^r_* Q^a = sum over 2t <= r of C(a-r, r-2t) Q^(a-r+t) Sq^t_*,
    with C taken mod 2 and zero on a negative top argument,
  * Sq^0_* is the identity and Sq^r_* kills anything of dimension < r.

Squares come out of the Cartan formula on their own: the mixed terms of
Sq^r_*(z*z) cancel in pairs mod 2, leaving (Sq^(r/2)_* z)^2 for even r and
nothing for odd r.  The tests pin that consequence separately.
"""

from __future__ import annotations

from functools import lru_cache

from .dlops import _mul_sets, _q_monomial, lucas_binom
from .f2algebra import Element, Generator, Monomial, generator_monomial
from .spaces import SpaceDesc
from .seqcore import UpperSeq

__all__ = ["lucas_binom", "sq_lower", "is_A_annihilated"]

_EMPTY: frozenset[Monomial] = frozenset()


def _base_action(space: SpaceDesc, r: int, base) -> frozenset[Monomial]:
    targets = space.base_sq_action(r, base)
    out: set[Monomial] = set()
    for t in targets:
        out ^= {generator_monomial(Generator(t, UpperSeq(())))}
    return frozenset(out)


@lru_cache(maxsize=None)
def _sq_generator(space: SpaceDesc, r: int, g: Generator) -> frozenset[Monomial]:
    if r == 0:
        return frozenset({generator_monomial(g)})
    if r > g.dimension:
        return _EMPTY
    if not g.seq:
        return _base_action(space, r, g.base)
    a = g.seq.entries[0]
    inner = UpperSeq(g.seq.entries[1:])
    if inner:
        x: frozenset[Monomial] = frozenset({generator_monomial(Generator(g.base, inner))})
    elif g.base.kind == "unit_loop":
        x = frozenset({Monomial((), 1)})
    else:
        x = frozenset({generator_monomial(Generator(g.base, UpperSeq(())))})
    out: set[Monomial] = set()
    for t in range(r // 2 + 1):
        if not lucas_binom(a - r, r - 2 * t):
            continue
        for m in _sq_set(space, t, x):
            out ^= _q_monomial(a - r + t, m)
    return frozenset(out)


def _sq_set(space: SpaceDesc, r: int, ms: frozenset[Monomial]) -> frozenset[Monomial]:
    out: set[Monomial] = set()
    for m in ms:
        out ^= _sq_monomial(space, r, m)
    return frozenset(out)


@lru_cache(maxsize=None)
def _sq_monomial(space: SpaceDesc, r: int, m: Monomial) -> frozenset[Monomial]:
    if r == 0:
        return frozenset({m})
    if r > m.dimension:
        return _EMPTY
    if not m.factors:
        return _EMPTY  # translations sit in dimension 0
    if m.translation:
        # the translation factor only admits Sq^0_*, so it rides along
        bare = Monomial(m.factors, 0)
        out: set[Monomial] = set()
        for res in _sq_monomial(space, r, bare):
            out ^= {res.with_translation(res.translation + m.translation)}
        return frozenset(out)
    if len(m.factors) == 1 and m.factors[0][1] == 1:
        return _sq_generator(space, r, m.factors[0][0])
    g, e = m.factors[0]
    u = generator_monomial(g)
    v = Monomial(((g, e - 1),) + m.factors[1:], 0) if e > 1 else Monomial(m.factors[1:], 0)
    out = set()
    for i in range(r + 1):
        left = _sq_monomial(space, i, u)
        if not left:
            continue
        out ^= _mul_sets(left, _sq_monomial(space, r - i, v))
    return frozenset(out)


def sq_lower(r: int, e: Element) -> Element:
    if r < 0:
        raise ValueError("lower Steenrod operations have r >= 0")
    acc: set[Monomial] = set()
    for m in e.terms:
        acc ^= _sq_monomial(e.space, r, m)
    return Element(e.space, frozenset(acc))


def is_A_annihilated(e: Element) -> bool:
    """True when every Sq^r_* with r >= 1 kills e.

    Single operations suffice: composites of the Sq^r_* vanish once all the
    single ones do.  The zero element counts as annihilated.
    """
    if not e.terms:
        return True
    d = e.dimension  # raises on inhomogeneous input
    return all(not sq_lower(r, e) for r in range(1, d + 1))
