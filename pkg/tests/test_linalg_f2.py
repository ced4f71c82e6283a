"""Bitset GF(2) linear algebra against brute-force oracles."""

from __future__ import annotations

import itertools
import random

import pytest

from loophomology.errors import NoSolution
from loophomology.linalg_f2 import (
    echelon,
    in_span,
    kernel_of_images,
    rank,
    reduce_against,
    solve_linear,
    span_intersection,
)


def brute_span(rows: list[int]) -> set[int]:
    out = set()
    for bits in itertools.product((0, 1), repeat=len(rows)):
        v = 0
        for b, r in zip(bits, rows):
            if b:
                v ^= r
        out.add(v)
    return out


def random_rows(rng: random.Random, count: int, width: int) -> list[int]:
    return [rng.getrandbits(width) for _ in range(count)]


def test_echelon_fixture():
    rows = echelon([0b110, 0b011, 0b101])
    # 3-bit parity-check rows only span a plane
    assert len(rows) == 2
    assert rank([0b110, 0b011, 0b101]) == 2
    assert in_span(0b101, [0b110, 0b011])
    assert not in_span(0b100, [0b110, 0b011])


def test_echelon_matches_brute_span():
    rng = random.Random(7)
    for _ in range(40):
        rows = random_rows(rng, rng.randrange(0, 6), 7)
        reduced = echelon(rows)
        assert len(reduced) == rank(rows)
        assert brute_span(reduced) == brute_span(rows)
        # reduced echelon rows have distinct pivots
        pivots = [r.bit_length() for r in reduced]
        assert len(set(pivots)) == len(pivots)


def test_reduce_against_is_canonical():
    rng = random.Random(11)
    for _ in range(40):
        rows = echelon(random_rows(rng, 4, 6))
        v = rng.getrandbits(6)
        red = reduce_against(v, rows)
        assert (red == 0) == in_span(v, rows)
        assert (v ^ red) in brute_span(rows)


def test_kernel_of_images():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randrange(1, 7)
        images = random_rows(rng, n, 5)
        kernel = kernel_of_images(images)
        assert len(kernel) == n - rank(images)
        for combo in brute_span(kernel):
            v = 0
            for i in range(n):
                if (combo >> i) & 1:
                    v ^= images[i]
            assert v == 0
        # every brute kernel vector is in the reported span
        reduced = echelon(kernel)
        for bits in itertools.product((0, 1), repeat=n):
            v = 0
            mask = 0
            for i, b in enumerate(bits):
                if b:
                    v ^= images[i]
                    mask |= 1 << i
            if v == 0:
                assert in_span(mask, reduced)


def test_span_intersection():
    rng = random.Random(17)
    for _ in range(40):
        a = random_rows(rng, rng.randrange(0, 5), 6)
        b = random_rows(rng, rng.randrange(0, 5), 6)
        inter = span_intersection(a, b)
        expected = brute_span(a) & brute_span(b)
        assert brute_span(inter) == expected
        assert len(inter) == rank(inter)


def test_solve_linear():
    rng = random.Random(19)
    for _ in range(60):
        cols = random_rows(rng, rng.randrange(1, 6), 6)
        coeffs = rng.getrandbits(len(cols))
        target = 0
        for i, c in enumerate(cols):
            if (coeffs >> i) & 1:
                target ^= c
        solved = solve_linear(cols, target)
        v = 0
        for i, c in enumerate(cols):
            if (solved >> i) & 1:
                v ^= c
        assert v == target
    with pytest.raises(NoSolution):
        solve_linear([0b01], 0b10)
