"""Spherical-class screening, even-square refutation, quantitative bounds."""

from __future__ import annotations

import pytest

from loophomology.errors import UnsupportedOperand
from loophomology.screener import (
    MInfinityModule,
    MSymbol,
    bound_main1,
    bound_s_minus1,
    bounds_report,
    even_square_screen_at,
    generator_span,
    immersion_threshold,
    immersion_threshold_report,
    max_generator_dim,
    max_generator_dim_exhaustive,
    oracle_main1,
    oracle_s_minus1,
    screen_degree,
    spherical_candidates,
    stable_range_check,
    sum_identity_check,
    verify_no_even_squares,
    wellington_check,
)
from loophomology.seqcore import sphere_class, upper
from loophomology.spaces import qs0_space, qsn_space, two_cell_space

QS1 = qsn_space(1)


# --- extended module and the odd-entry containment ---------------------------


def test_msymbol_admits_excess_equal_base():
    s = MSymbol(sphere_class(1), upper(1))
    assert s.dimension == 2 and s.all_entries_odd
    assert not MSymbol(sphere_class(1), upper(2)).all_entries_odd
    with pytest.raises(ValueError):
        MSymbol(sphere_class(2), upper(1))  # excess below base dimension
    with pytest.raises(ValueError):
        MSymbol(sphere_class(1), upper(1, 3))  # inadmissible
    assert MSymbol(sphere_class(1), upper(5, 3)).all_entries_odd


def test_module_basis_low_degrees():
    mod = MInfinityModule(QS1)
    assert [str(s) for s in mod.basis(1)] == ["x_1"]
    assert [str(s) for s in mod.basis(2)] == ["Q^(1) x_1"]
    assert [str(s) for s in mod.basis(3)] == ["Q^(2) x_1"]
    with pytest.raises(UnsupportedOperand):
        MInfinityModule(qs0_space())


def test_module_action_pullback():
    mod = MInfinityModule(QS1)
    # Sq^1 of the embedded square x_1^2 is zero; of Q^(2)x_1 is the square symbol
    assert mod.sq(1, MSymbol(sphere_class(1), upper(1))) == frozenset()
    out = mod.sq(1, MSymbol(sphere_class(1), upper(2)))
    assert {str(s) for s in out} == {"Q^(1) x_1"}


def test_wellington_degree_nine():
    report = wellington_check(QS1, 9)
    assert report.ok
    assert [[str(s) for s in v] for v in report.annihilated] == [["Q^(5,3) x_1"]]
    assert report.violations == ()


@pytest.mark.parametrize("degree", (1, 3, 5, 7, 9, 11))
def test_wellington_odd_degrees_sphere(degree):
    assert wellington_check(QS1, degree).ok


@pytest.mark.parametrize("degree", (1, 3, 5, 7, 9))
def test_wellington_odd_degrees_two_cell(degree):
    assert wellington_check(two_cell_space(), degree).ok


# --- candidate screening ------------------------------------------------------


def test_generator_span_respects_filtration():
    assert [str(m) for m in generator_span(QS1, 9)] == ["Q^(5,3) x_1", "Q^8 x_1"]
    assert [str(m) for m in generator_span(QS1, 9, loop=3)] == ["Q^(5,3) x_1"]
    assert generator_span(QS1, 9, loop=2) == []


def test_screen_positive_degrees_only():
    with pytest.raises(ValueError):
        screen_degree(QS1, 0)
    assert spherical_candidates is screen_degree


def test_screen_degree_nine_loop_three():
    report = screen_degree(QS1, 9, loop=3)
    assert [str(c) for c in report.candidates] == ["Q^(5,3) x_1"]
    assert report.squares == ()
    assert report.verdict == "candidates-remain"
    cut = screen_degree(QS1, 9, loop=2)
    assert cut.candidates == () and cut.verdict == "no-spherical-candidates"


def test_screen_degree_four_lists_the_bottom_power():
    report = screen_degree(QS1, 4)
    assert [str(c) for c in report.candidates] == ["Q^3 x_1"]
    assert [str(s) for s in report.squares] == ["x_1^4"]
    assert report.verdict == "candidates-include-squares"


def test_screen_report_dict_shape():
    d = screen_degree(QS1, 9, loop=3).to_dict()
    assert set(d) == {"space", "degree", "loop", "candidates", "squares", "bounds"}
    assert d["space"] == "qs1" and d["degree"] == 9 and d["loop"] == 3
    assert set(d["bounds"]) == {"base_dim", "max_generator_dim", "degree_exceeds_max_at"}
    assert d["bounds"]["base_dim"] == 1
    assert d["bounds"]["max_generator_dim"]["3"] == 9


def test_even_square_screen_mechanism():
    entry = even_square_screen_at(QS1, 4)
    assert entry.ok and entry.kernel_ok and entry.kernel_witnesses == ()
    by_root = {m.root: m for m in entry.mechanism}
    assert by_root["Q^3 x_1"].has_linear_part
    assert by_root["Q^3 x_1"].product_nonzero and by_root["Q^3 x_1"].identity_holds
    # pure squares carry no single-operation part; handled at half dimension
    assert not by_root["x_1^4"].has_linear_part
    assert by_root["x_1^4"].product_nonzero is None


def test_even_square_screen_guards():
    with pytest.raises(ValueError):
        even_square_screen_at(QS1, 3)
    with pytest.raises(UnsupportedOperand):
        even_square_screen_at(qs0_space(), 4)


def test_verify_no_even_squares_small():
    report = verify_no_even_squares(QS1, 6)
    assert report.ok
    assert [e.degree for e in report.entries] == [2, 4, 6]
    tc = verify_no_even_squares(two_cell_space(), 6)
    assert tc.ok


# --- quantitative bounds ------------------------------------------------------


def test_max_generator_dim_fixtures():
    assert max_generator_dim(1, 1) == 1
    assert max_generator_dim(2, 1) == 3
    assert max_generator_dim(3, 1) == 9
    assert max_generator_dim(4, 1) == 25
    with pytest.raises(ValueError):
        max_generator_dim(0, 1)


@pytest.mark.parametrize("length_bound", range(1, 9))
@pytest.mark.parametrize("base_dim", (1, 2, 3))
def test_max_generator_dim_exhaustive(length_bound, base_dim):
    assert max_generator_dim(length_bound, base_dim) == max_generator_dim_exhaustive(
        length_bound, base_dim
    )


def test_sum_identity():
    for k in range(1, 25):
        assert sum_identity_check(k)


def test_bound_fixtures():
    assert bound_s_minus1(3) == 14 and oracle_s_minus1(3) == 18
    assert bound_main1(4, 1) == 66 and oracle_main1(4, 1) == 82
    r = bounds_report(3, -1)
    assert (r.printed, r.oracle, r.discrepancy) == (14, 18, True)
    r2 = bounds_report(4, 1)
    assert (r2.printed, r2.oracle, r2.discrepancy) == (66, 82, True)
    with pytest.raises(ValueError):
        bounds_report(3, -2)


def test_bounds_never_substituted():
    # printed values stay the closed forms even where the oracle disagrees
    for l in range(2, 8):
        assert bounds_report(l, -1).printed == bound_s_minus1(l)
        for k in range(0, 4):
            assert bounds_report(l, k).printed == bound_main1(l, k)


def test_immersion_thresholds():
    assert immersion_threshold(1, 1) == 3
    assert immersion_threshold(3, 2) == 21
    t = immersion_threshold_report(1, 1)
    assert t.bound_kind == "s-minus-1" and t.bound == 3 and t.n_min == 3
    assert t.oracle_n_min == 2 and t.discrepancy
    t2 = immersion_threshold_report(3, 2)
    assert t2.bound_kind == "main-1" and t2.n_min == 21 and t2.oracle_n_min == 25


def test_stable_range_boundary():
    for n in range(1, 8):
        for l in range(1, 8):
            assert stable_range_check(2 * n + l - 3, n, l)
            assert not stable_range_check(2 * n + l - 2, n, l)
