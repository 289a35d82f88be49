from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tablepaths.deltaops import DeltaPoly, Family, multiplier
from tablepaths.docs import parse_document, render_document
from tablepaths.errors import DomainError
from tablepaths.pathtable import build_table
from tablepaths.recurrence import (
    Recurrence,
    charpoly,
    det_bareiss,
    det_reduced,
    det_reduced_direct,
    det_reduced_formula,
    equivalence_report,
    even_matrix,
    format_xpoly,
    full_matrix,
    minimal_recurrence,
    odd_matrix,
    recurrence_report,
    reduced_matrix,
    row_constant_combinations,
    verify_annihilation,
    verify_charpoly_recursion,
    verify_column_sum_formulas,
    verify_constant_combinations,
    verify_determinants,
    verify_minimality,
    verify_polynomial_equivalence,
    verify_transfer,
    verify_window_determinants,
    window_det,
)

# -- matrix templates -----------------------------------------------------------


def test_small_templates_match_hand_written_forms():
    assert odd_matrix(1) == ((1,),)
    assert odd_matrix(2) == ((1, 1), (2, 1))
    assert odd_matrix(3) == ((1, 1, 0), (1, 1, 1), (0, 2, 1))
    assert even_matrix(1) == ((2,),)
    assert even_matrix(2) == ((1, 1), (1, 2))
    assert even_matrix(3) == ((1, 1, 0), (1, 1, 1), (0, 1, 2))


def test_reduced_matrix_dispatches_on_parity():
    assert reduced_matrix(5).rows == odd_matrix(3)
    assert reduced_matrix(6).rows == even_matrix(3)
    assert reduced_matrix(1).rows == ((1,),)
    with pytest.raises(DomainError):
        reduced_matrix(0)


def test_full_matrix_is_tridiagonal_ones():
    assert full_matrix(3) == ((1, 1, 0), (1, 1, 1), (0, 1, 1))


@given(m=st.integers(1, 12))
def test_reduced_matrix_advances_reduced_columns(m):
    table = build_table(m, 8)
    mat = reduced_matrix(m)
    for n in range(1, 8):
        cur = table.reduced_column(n).entries
        nxt = table.reduced_column(n + 1).entries
        assert tuple(sum(r * c for r, c in zip(row, cur)) for row in mat.rows) == nxt


# -- determinants ----------------------------------------------------------------


def test_bareiss_on_known_matrix():
    assert det_bareiss(((2, 5), (3, 7))) == -1
    assert det_bareiss(((1,),)) == 1
    assert det_bareiss(((0, 1), (1, 0))) == -1


def test_reduced_determinants_small_cases():
    assert [det_reduced(m) for m in range(1, 7)] == [1, 2, -1, 1, -2, -1]


def test_determinant_routes_agree_and_cycle():
    for m in range(1, 40):
        assert det_reduced_direct(m) == det_reduced_formula(m)
    # both parity tracks repeat with period six in k
    odd_track = [det_reduced(2 * k - 1) for k in range(1, 14)]
    even_track = [det_reduced(2 * k) for k in range(1, 14)]
    assert odd_track[:6] == [1, -1, -2, -1, 1, 2]
    assert even_track[:6] == [2, 1, -1, -2, -1, 1]
    assert odd_track[6:12] == odd_track[:6]
    assert even_track[6:12] == even_track[:6]


def test_determinant_sweep():
    assert verify_determinants(48) is None


def test_window_determinants():
    assert window_det(build_table(3, 10), 1) == -1
    assert window_det(build_table(5, 10), 2) == 4
    assert verify_window_determinants(8, 10) is None


# -- characteristic polynomial / recurrence ---------------------------------------


def test_charpoly_of_small_templates():
    assert charpoly(reduced_matrix(3)) == (-1, -2, 1)
    assert charpoly(reduced_matrix(5)) == (2, 0, -3, 1)
    assert charpoly(reduced_matrix(6)) == (1, 3, -4, 1)


def test_charpoly_recursion_sweep():
    assert verify_charpoly_recursion(24) is None


def test_minimal_recurrence_tiny_cases():
    assert minimal_recurrence(1).alphas == (1,)
    assert minimal_recurrence(2).alphas == (2,)
    assert minimal_recurrence(3).alphas == (1, 2)
    assert minimal_recurrence(5).alphas == (-2, 0, 3)


def test_recurrence_rendering_and_poly():
    rec = Recurrence(3, (-2, 0, 3))
    assert str(rec) == "a(n+3)=3a(n+2)-2a(n)"
    assert rec.poly() == (2, 0, -3, 1)
    assert str(Recurrence(2, (1, 2))) == "a(n+2)=2a(n+1)+a(n)"
    assert str(Recurrence(1, (1,))) == "a(n+1)=a(n)"


def test_recurrence_satisfied_by_rows_and_sums():
    table = build_table(5, 20)
    rec = minimal_recurrence(5)
    for y in range(1, 6):
        assert rec.satisfied_by(table.row(y), 17)
    assert rec.satisfied_by(table.column_sums(), 17)
    assert not rec.satisfied_by((1, 1, 2, 9, 9, 9), 3)


def test_three_polynomials_agree():
    for m in (1, 2, 3, 5, 8, 11):
        report = equivalence_report(m)
        assert report.equal, m
        assert report.charpoly == report.operator_poly == report.recurrence_poly
    assert verify_polynomial_equivalence(20) is None


def test_operator_polynomial_route_is_shift_composed():
    # same object the report builds, spelled out for one case
    mat = reduced_matrix(5)
    poly = multiplier(Family.ODD, mat.k).compose(DeltaPoly((-1, 1)))
    assert poly.coeffs == charpoly(mat)


def test_annihilation_and_transfer_sweeps():
    assert verify_transfer(10, 20) is None
    assert verify_annihilation(10, 20) is None
    assert verify_minimality(8) is None


def test_recurrence_report_round_trip():
    report = recurrence_report(5)
    doc = render_document(report)
    assert parse_document(doc) == report
    assert render_document(parse_document(doc)) == doc


def test_column_sum_formula_sweep():
    assert verify_column_sum_formulas(10, 20) is None


# -- constant row combinations ------------------------------------------------------


def test_witness_for_five_rows():
    report = row_constant_combinations(5)
    assert report.exists
    assert report.alphas == (1, 0, -1, 0, 1)
    assert report.lam == 1
    assert report.nullspace_dim == 3
    assert report.trivial_dim == 2


def test_witness_for_nine_rows():
    report = row_constant_combinations(9)
    assert report.exists
    assert report.alphas == (1, 0, -1, 0, 1, 0, -1, 0, 1)
    assert report.lam == 1


def test_no_witness_off_the_residue_class():
    for m in (2, 3, 4, 6, 7, 8, 10, 11, 12):
        report = row_constant_combinations(m)
        assert not report.exists, m
        assert report.lam is None
        assert report.alphas == ()
        assert report.nullspace_dim == report.trivial_dim == m // 2


def test_one_row_table_is_the_degenerate_witness():
    # the single row is constant 1,1,1,... so alpha=(1) works with lambda=1
    report = row_constant_combinations(1)
    assert report.exists
    assert report.alphas == (1,)
    assert report.lam == 1


def test_probe_depth_validated():
    with pytest.raises(DomainError):
        row_constant_combinations(5, n_probe=5)
    assert row_constant_combinations(5, n_probe=7).n_probe == 7


def test_row_combo_report_round_trip():
    for m in (4, 5):
        report = row_constant_combinations(m)
        doc = render_document(report)
        assert parse_document(doc) == report


def test_constant_combination_sweep():
    assert verify_constant_combinations(13) is None


# -- rendering helpers -----------------------------------------------------------


def test_xpoly_rendering():
    assert format_xpoly((2, 0, -3, 1)) == "x^3 - 3x^2 + 2"
    assert format_xpoly((-1, 1)) == "x - 1"
    assert format_xpoly((1,)) == "1"


@given(m=st.integers(1, 10))
@settings(deadline=None)
def test_window_determinant_is_power_of_base(m):
    table = build_table(m, m + 6)
    base = det_reduced(m)
    for shift in range(0, 4):
        assert window_det(table, shift) == base**shift
