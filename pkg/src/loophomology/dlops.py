"""Evaluation of the homology operations Q^a on the polynomial models.

Ground rules, with z a homogeneous class:

    Q^a z = 0           for a < dim z,
    Q^a z = z*z         for a = dim z,
    Q^a (u v)           by the Cartan formula,

and on the component classes of the unit-loop model

    Q^0 [k] = [2k],
    Q^a [1] = the polynomial generator of that name   (a >= 1),
    Q^a [-1]            recursively from Q^a([1] * [-1]) = 0,
    Q^a [k]             by splitting one unit off k and applying Cartan.

Composites are straightened with the mod-2 Adem relations: for r > 2s,

    Q^r Q^s = sum over i of C(i-s-1, 2i-r) Q^(r+s-i) Q^i,

rewriting the leftmost inadmissible pair until every sequence is admissible,
then reading each admissible sequence off as a basis monomial (negative lower
index: zero; leading zero lower indices: repeated squaring).
"""

from __future__ import annotations

from functools import lru_cache

from .f2algebra import Element, Generator, Monomial, generator_monomial, translation_monomial
from .seqcore import BaseClass, LowerSeq, UpperSeq, lower_to_upper, upper


def lucas_binom(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas: 1 exactly when k's bits sit inside n's."""
    if n < 0 or k < 0 or k > n:
        return 0
    return 0 if k & (n - k) else 1


def adem_pairs(r: int, s: int) -> frozenset[tuple[int, int]]:
    """Admissible pairs appearing in Q^r Q^s, for the inadmissible range r > 2s."""
    if s < 0 or r <= 2 * s:
        raise ValueError(f"Q^{r} Q^{s} is already admissible")
    out = set()
    for i in range((r + 1) // 2, r - s):
        if lucas_binom(i - s - 1, 2 * i - r):
            out ^= {(r + s - i, i)}
    return frozenset(out)


@lru_cache(maxsize=None)
def _normalize_entries(entries: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    for m in range(len(entries) - 1):
        r, s = entries[m], entries[m + 1]
        if r > 2 * s:
            acc: set[tuple[int, ...]] = set()
            for a, b in adem_pairs(r, s):
                acc ^= {entries[:m] + (a, b) + entries[m + 2 :]}
            out: set[tuple[int, ...]] = set()
            for e in acc:
                out ^= set(_normalize_entries(e))
            return frozenset(out)
    return frozenset({entries})


def normalize_sequence(seq: UpperSeq) -> frozenset[UpperSeq]:
    """Admissible sequences whose sum equals the given composite."""
    return frozenset(UpperSeq(e) for e in _normalize_entries(seq.entries))


def _lower_indices(entries: tuple[int, ...], base_dim: int) -> tuple[int, ...]:
    js = []
    d = base_dim
    for i in reversed(entries):
        js.append(i - d)
        d = i + d
    return tuple(reversed(js))


def _admissible_to_monomial(entries: tuple[int, ...], base: BaseClass) -> Monomial | None:
    """Read an admissible sequence on a base class off as a basis monomial.

    Returns None when the composite vanishes (some lower index is negative).
    """
    if not entries:
        if base.kind == "unit_loop":
            return translation_monomial(1)
        return generator_monomial(Generator(base, upper()))
    js = _lower_indices(entries, base.dimension)
    if js[0] < 0:  # lower indices are nondecreasing, so the head is the minimum
        return None
    t = 0
    while t < len(js) and js[t] == 0:
        t += 1
    suffix = js[t:]
    if not suffix:
        if base.kind == "unit_loop":
            return translation_monomial(2**t)
        return generator_monomial(Generator(base, upper()), exponent=2**t)
    seq = lower_to_upper(LowerSeq(suffix), base.dimension)
    return generator_monomial(Generator(base, seq), exponent=2**t)


def _mul_sets(a: frozenset[Monomial], b: frozenset[Monomial]) -> frozenset[Monomial]:
    acc: set[Monomial] = set()
    for x in a:
        for y in b:
            acc ^= {x.times(y)}
    return frozenset(acc)


_EMPTY: frozenset[Monomial] = frozenset()


@lru_cache(maxsize=None)
def _q_translation(a: int, k: int) -> frozenset[Monomial]:
    if a < 0:
        return _EMPTY
    if a == 0:
        return frozenset({translation_monomial(2 * k)})
    if k == 0:
        return _EMPTY
    if k == 1:
        return frozenset({generator_monomial(Generator(BaseClass("unit_loop", 0), upper(a)))})
    if k == -1:
        # 0 = Q^a([1][-1]) = [2] Q^a[-1] + sum_{i>=1} Q^i[1] Q^(a-i)[-1]
        acc: set[Monomial] = set()
        for i in range(1, a + 1):
            acc ^= _mul_sets(_q_translation(i, 1), _q_translation(a - i, -1))
        return _mul_sets(frozenset({translation_monomial(-2)}), frozenset(acc))
    step = 1 if k > 0 else -1
    acc = set()
    for i in range(a + 1):
        acc ^= _mul_sets(_q_translation(i, step), _q_translation(a - i, k - step))
    return frozenset(acc)


@lru_cache(maxsize=None)
def _q_monomial(a: int, m: Monomial) -> frozenset[Monomial]:
    if a < 0:
        return _EMPTY
    d = m.dimension
    if a < d:
        return _EMPTY
    if a == d:
        return frozenset({m.square()})  # bottom operation is the Frobenius
    if not m.factors:
        return _q_translation(a, m.translation)
    if m.translation:
        bare = Monomial(m.factors, 0)
        acc: set[Monomial] = set()
        for i in range(a + 1):
            acc ^= _mul_sets(_q_translation(i, m.translation), _q_monomial(a - i, bare))
        return frozenset(acc)
    if len(m.factors) == 1 and m.factors[0][1] == 1:
        g = m.factors[0][0]
        out: set[Monomial] = set()
        for entries in _normalize_entries((a,) + g.seq.entries):
            result = _admissible_to_monomial(entries, g.base)
            if result is not None:
                out ^= {result}
        return frozenset(out)
    g, e = m.factors[0]
    u = generator_monomial(g)
    v = Monomial(((g, e - 1),) + m.factors[1:], 0) if e > 1 else Monomial(m.factors[1:], 0)
    acc = set()
    for i in range(a + 1):
        acc ^= _mul_sets(_q_monomial(i, u), _q_monomial(a - i, v))
    return frozenset(acc)


def apply_Q(a: int, e: Element) -> Element:
    acc: set[Monomial] = set()
    for m in e.terms:
        acc ^= _q_monomial(a, m)
    return Element(e.space, frozenset(acc))


def apply_Q_iterated(seq: UpperSeq, e: Element) -> Element:
    """Q^I e, applying the innermost (last) entry first."""
    for a in reversed(seq.entries):
        e = apply_Q(a, e)
    return e
