from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tablepaths.deltaops import (
    DELTA,
    ONE,
    ZERO,
    DeltaPoly,
    Family,
    PrimeFunctionDiagnostic,
    base_constant,
    chebyshev_t,
    closed_form,
    fibonacci_poly,
    format_poly,
    lucas_poly,
    multiplier,
    parity_family,
    prime_function,
    prime_function_diagnostic,
    verify_action_theorem,
    verify_addition_theorem,
    verify_bridge_lemma,
    verify_classical,
    verify_closed_forms,
    verify_compose_factorization,
    verify_congruence,
    verify_partial_sums,
    verify_product_theorem,
    verify_uniform_factorization,
)
from tablepaths.errors import DomainError

coeff_lists = st.lists(st.integers(-50, 50), min_size=0, max_size=6)
polys = coeff_lists.map(lambda cs: DeltaPoly(tuple(cs)))


# -- canonical form and ring structure --------------------------------------


def test_trailing_zeros_are_trimmed():
    assert DeltaPoly((1, 2, 0, 0)) == DeltaPoly((1, 2))
    assert DeltaPoly((0, 0)).is_zero
    assert DeltaPoly(()).degree == -1
    assert DeltaPoly((0, 0, 7)).degree == 2


def test_coefficient_lookup():
    p = DeltaPoly((3, 0, -1))
    assert p.coefficient(0) == 3
    assert p.coefficient(1) == 0
    assert p.coefficient(2) == -1
    assert p.coefficient(9) == 0


@given(a=polys, b=polys, c=polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(a=polys, k=st.integers(-9, 9))
def test_integer_scalars_coerce(a, k):
    assert k * a == DeltaPoly((k,)) * a
    assert a + k == a + DeltaPoly((k,))
    assert k - a == DeltaPoly((k,)) - a


def test_compose_on_square():
    odd2 = DeltaPoly((-2, 0, 1))
    assert odd2.compose(odd2) == DeltaPoly((2, 0, -4, 0, 1))


@given(a=polys, b=polys)
@settings(max_examples=60)
def test_divmod_monic_reconstructs(a, b):
    monic = DeltaPoly(b.coeffs[:-1] + (1,)) if b.coeffs else DELTA
    q, r = a.divmod_monic(monic)
    assert q * monic + r == a
    assert r.degree < monic.degree


def test_divmod_requires_monic_divisor():
    with pytest.raises(DomainError):
        DELTA.divmod_monic(DeltaPoly((1, 2)))
    with pytest.raises(DomainError):
        DELTA.divmod_monic(ZERO)


def test_apply_uses_forward_differences():
    # (Delta^2 + 2*Delta + 1) at n=1 on the m=5 top row.
    row = (1, 2, 5, 13, 35)
    p = DeltaPoly((1, 2, 1))
    assert p.apply(row, 1) == 5
    # (Delta^2 - 2) at n=1 on the m=5 middle row.
    assert DeltaPoly((-2, 0, 1)).apply((1, 3, 9, 25, 69), 1) == 2


def test_apply_window_bounds_checked():
    p = DeltaPoly((0, 0, 1))
    with pytest.raises(DomainError):
        p.apply((1, 2, 3), 2)
    with pytest.raises(DomainError):
        p.apply((1, 2, 3), 0)


# -- parse / format -----------------------------------------------------------


def test_format_descending_terms():
    assert str(DeltaPoly((-2, 0, 1))) == "Δ^2 - 2"
    assert str(DeltaPoly((1, -3, 0, 2))) == "2Δ^3 - 3Δ + 1"
    assert str(ZERO) == "0"
    assert str(DELTA) == "Δ"
    assert format_poly((0, -1)) == "-Δ"


def test_parse_accepts_unicode_and_ascii_names():
    assert DeltaPoly.parse("Δ^2 - 2") == DeltaPoly((-2, 0, 1))
    assert DeltaPoly.parse("D^2-2") == DeltaPoly((-2, 0, 1))
    assert DeltaPoly.parse("-D + 3") == DeltaPoly((3, -1))
    assert DeltaPoly.parse("0") == ZERO
    assert DeltaPoly.parse("2*D^3") == DeltaPoly((0, 0, 0, 2))


def test_parse_rejects_garbage():
    for bad in ("", "x + 1", "D^", "2 +", "D**2"):
        with pytest.raises(DomainError):
            DeltaPoly.parse(bad)


@given(a=polys)
def test_parse_format_round_trip(a):
    assert DeltaPoly.parse(str(a)) == a


# -- operator families ---------------------------------------------------------


def test_family_seeds():
    assert multiplier(Family.ODD, 0) == DeltaPoly((2,))
    assert multiplier(Family.ODD, 1) == DELTA
    assert multiplier(Family.EVEN, 0) == ONE
    assert multiplier(Family.EVEN, 1) == DeltaPoly((-1, 1))
    assert multiplier(Family.PRIME, 0) == ONE
    assert multiplier(Family.PRIME, 1) == DELTA


def test_small_members_match_hand_expansion():
    assert multiplier(Family.ODD, 2) == DeltaPoly((-2, 0, 1))
    assert multiplier(Family.ODD, 3) == DeltaPoly((0, -3, 0, 1))
    assert multiplier(Family.ODD, 4) == DeltaPoly((2, 0, -4, 0, 1))
    assert multiplier(Family.EVEN, 2) == DeltaPoly((-1, -1, 1))
    assert multiplier(Family.EVEN, 3) == DeltaPoly((1, -2, -1, 1))
    assert multiplier(Family.EVEN, 4) == DeltaPoly((1, 2, -3, -1, 1))
    assert multiplier(Family.PRIME, 2) == DeltaPoly((-1, 0, 1))
    assert multiplier(Family.PRIME, 3) == DeltaPoly((0, -2, 0, 1))
    assert multiplier(Family.PRIME, 4) == DeltaPoly((1, 0, -3, 0, 1))


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        multiplier(Family.ODD, -1)


def test_parity_family_and_base_constant():
    assert parity_family(3) is Family.ODD
    assert parity_family(6) is Family.EVEN
    assert base_constant(Family.ODD) == 2
    assert base_constant(Family.EVEN) == 1
    assert base_constant(Family.PRIME) == 1


@given(family=st.sampled_from(list(Family)), n=st.integers(0, 30))
def test_closed_form_matches_recursion(family, n):
    assert closed_form(family, n) == multiplier(family, n)


# -- identities ------------------------------------------------------------------


def test_identity_sweeps_find_nothing():
    assert verify_closed_forms(30) is None
    assert verify_addition_theorem(8) is None
    assert verify_action_theorem(8) is None
    assert verify_product_theorem(6) is None
    assert verify_compose_factorization(8, 40) is None
    assert verify_uniform_factorization(24) is None
    assert verify_bridge_lemma(30) is None
    assert verify_partial_sums(30) is None
    assert verify_congruence(8) is None


def test_prime_function_reaches_composite_indices():
    assert prime_function(Family.PRIME, 2, 1) == multiplier(Family.PRIME, 2)
    assert prime_function(Family.ODD, 3, 2) == multiplier(Family.ODD, 6)
    assert prime_function(Family.EVEN, 5, 3) == multiplier(Family.EVEN, 15)


def test_prime_function_rejects_composite_p():
    with pytest.raises(DomainError):
        prime_function(Family.ODD, 4, 1)
    with pytest.raises(DomainError):
        prime_function(Family.ODD, 2, 0)


def test_diagnostic_shows_even_base_failing():
    diag = prime_function_diagnostic(Family.EVEN, 2, 1)
    assert isinstance(diag, PrimeFunctionDiagnostic)
    assert diag.expected == multiplier(Family.EVEN, 2)
    assert diag.odd_base_matches
    assert not diag.even_base_matches


def test_diagnostic_odd_base_holds_across_samples():
    for family in Family:
        for p, n in ((2, 1), (2, 3), (3, 2), (5, 2), (7, 1)):
            diag = prime_function_diagnostic(family, p, n)
            assert diag.odd_base_matches, (family, p, n)


# -- classical polynomial families -----------------------------------------------


def test_chebyshev_seeds_and_recursion():
    assert chebyshev_t(0) == (1,)
    assert chebyshev_t(1) == (0, 1)
    assert chebyshev_t(2) == (-1, 0, 2)
    assert chebyshev_t(5) == (0, 5, 0, -20, 0, 16)


def test_fibonacci_and_lucas_seeds():
    assert fibonacci_poly(1) == (1,)
    assert fibonacci_poly(2) == (0, 1)
    assert fibonacci_poly(3) == (1, 0, 1)
    assert fibonacci_poly(4) == (0, 2, 0, 1)
    assert lucas_poly(0) == (2,)
    assert lucas_poly(1) == (0, 1)
    assert lucas_poly(2) == (2, 0, 1)
    assert lucas_poly(3) == (0, 3, 0, 1)


def test_odd_member_halved_at_doubled_argument_is_chebyshev():
    # coefficient c_i of Odd(n) contributes c_i * 2^i / 2 to degree i.
    for n in range(0, 10):
        coeffs = multiplier(Family.ODD, n).coeffs
        halved = tuple(Fraction(c * 2**i, 2) for i, c in enumerate(coeffs))
        want = tuple(Fraction(c) for c in chebyshev_t(n))
        assert halved == want, n


def test_classical_comparison_sweep():
    assert verify_classical(16) is None
