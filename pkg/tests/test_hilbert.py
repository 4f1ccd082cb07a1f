from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from milnorreg.groebner import Ideal
from milnorreg.hilbert import (
    hilbert_function,
    hilbert_numerator,
    hilbert_polynomial,
    quotient_series,
    series_from_shifts,
    stability_threshold,
)
from milnorreg.polyring import Ring, count_monomials


def test_numerator_x0_times_m():
    H = hilbert_numerator([(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)], 4)
    assert H.numerator == (1, 0, -4, 6, -4, 1)


def test_fermat_cubic_series(R):
    J = Ideal(R, ["x0^2", "x1^2", "x2^2", "x3^2"])
    H = quotient_series(J)
    assert hilbert_function(H, 6) == [1, 4, 6, 4, 1, 0, 0]
    assert hilbert_polynomial(H).is_zero()
    assert stability_threshold(H) == 5


def test_two_planes(R):
    H = quotient_series(Ideal(R, ["x0", "x1"]))
    P = hilbert_polynomial(H)
    assert str(P) == "k + 1"
    assert stability_threshold(H) == -1


def test_binomial_basis(R):
    H = quotient_series(Ideal(R, ["x0"]))
    P = hilbert_polynomial(H)
    # C(k+2, 2) = 1 + 3/2 k + 1/2 k^2 in the basis C(k, j): 1 + 2 C(k,1) + C(k,2)
    assert P.monomial == (1, Fraction(3, 2), Fraction(1, 2))
    assert P.binomial == (1, 2, 1)


def test_zero_module(R):
    H = quotient_series(Ideal(R, [1]))
    assert H.is_zero()
    assert stability_threshold(H) is None


def test_series_from_shifts_koszul():
    H = series_from_shifts([[0], [1, 1], [2]], 2)
    assert hilbert_function(H, 3) == [1, 0, 0, 0]


def brute_force_hf(gens, nvars, k):
    count = 0
    for m in Ring(nvars).monomials_of_degree(k):
        if not any(all(a >= b for a, b in zip(m, g)) for g in gens):
            count += 1
    return count


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=5))
def test_numerator_matches_counting(gens):
    gens = [g for g in gens if sum(g)]
    H = hilbert_numerator(gens, 3)
    for k in range(9):
        want = brute_force_hf(gens, 3, k) if gens else count_monomials(3, k)
        assert hilbert_function(H, k)[k] == want


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=5))
def test_stability_threshold_definition(gens):
    gens = [g for g in gens if sum(g)]
    H = hilbert_numerator(gens, 3)
    st_ = stability_threshold(H)
    P = hilbert_polynomial(H)
    if st_ is None:
        return
    hf = hilbert_function(H, st_ + 12)
    assert all(hf[k] == P(k) for k in range(max(st_, 0), st_ + 12))
    if st_ - 1 >= 0:
        assert hf[st_ - 1] != P(st_ - 1)
    else:
        assert P(st_ - 1) != 0
