import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from milnorreg.bigraded import (
    GenericityFailure,
    bi_euler_vector,
    closed_form_bidegree,
    delta_minor,
    genericity_certificate,
    h_coefficients,
    kernel_is_syzygy,
    kernel_matrix,
    minimal_syzygy_search,
    resolution_first_syzygy_bidegrees,
    slice_kernel,
    slice_matrix,
    slice_parameters,
    strip_bieuler,
)
from milnorreg.polyring import bigraded_ring, random_bihomogeneous


def test_slice_parameters():
    assert slice_parameters(random_bihomogeneous(2, 5, 0)) == (2, 7, 2)


def test_even_second_degree_rejected():
    with pytest.raises(ValueError):
        slice_parameters(random_bihomogeneous(1, 4, 0))


def test_non_bigraded_rejected(R):
    with pytest.raises(ValueError):
        slice_parameters(R.parse("x0*x2^3"))


def test_h_coefficients_rebuild_f():
    f = random_bihomogeneous(2, 3, 1)
    S = f.ring
    h = h_coefficients(f)
    back = S.zero
    for j, hj in enumerate(h):
        lifted = hj.substitute_vars(S, [0, 1])
        back = back + S.parse(f"x2^{3 - j}*x3^{j}") * lifted
    assert back == f


@pytest.mark.parametrize(
    "k, d, eta, shape, stripped",
    [(1, 4, 3, (4, 6), (4, 5)), (2, 5, 3, (4, 6), (4, 5)), (6, 19, 18, None, (19, 20))],
)
def test_slice_matrix_sizes(k, d, eta, shape, stripped):
    f = random_bihomogeneous(k, d - k, 0)
    M = slice_matrix(f, eta)
    if shape is not None:
        assert (M.nrows, M.ncols) == shape
    K = kernel_matrix(f, eta)
    assert (K.nrows, K.ncols) == stripped


def test_low_slice_has_blocks_f2_f3_only():
    f = random_bihomogeneous(1, 3, 0)
    M = slice_matrix(f, 2)
    assert M.ncols == 2
    assert {b for b, _ in M.col_labels} == {2, 3}


def test_strip_removes_bi_euler_direction():
    f = random_bihomogeneous(1, 3, 0)
    M = slice_matrix(f, 3)
    S = strip_bieuler(M)
    assert S.ncols == M.ncols - 1
    assert all(b != 3 or ab[1] == 0 for b, ab in S.col_labels)


def test_bi_euler_annihilates_gradient():
    f = random_bihomogeneous(2, 5, 3)
    v = bi_euler_vector(f)
    acc = f.ring.zero
    for i, vi in enumerate(v):
        acc = acc + vi * f.derivative(i)
    assert not acc


@pytest.mark.parametrize("k, d", [(1, 4), (1, 6), (2, 5), (2, 7), (3, 8)])
def test_search_matches_closed_form(k, d):
    f = random_bihomogeneous(k, d - k, 0)
    res = minimal_syzygy_search(f)
    assert res.bidegree == closed_form_bidegree(k, d)
    assert res.matches_closed_form and res.expected_rank_condition
    mu = (d - k - 1) // 2
    assert res.zero_slices == list(range(3 * mu))


@pytest.mark.parametrize("k, d", [(1, 4), (2, 5), (1, 6)])
def test_linear_and_syzygy_routes_agree(k, d):
    f = random_bihomogeneous(k, d - k, 2)
    a = minimal_syzygy_search(f, method="linear")
    b = minimal_syzygy_search(f, method="syzygy")
    assert a.bidegree == b.bidegree


@pytest.mark.parametrize("k, d", [(1, 4), (2, 5), (2, 7)])
def test_resolution_scan(k, d):
    f = random_bihomogeneous(k, d - k, 0)
    mu = (d - k - 1) // 2
    assert resolution_first_syzygy_bidegrees(f) == {(k, 2 * mu + 1): 1, closed_form_bidegree(k, d): 1}


def test_kernel_generator_is_syzygy():
    f = random_bihomogeneous(2, 5, 0)
    M = kernel_matrix(f, 6)
    K = slice_kernel(M)
    assert K.rank == 1
    e, vec = K.generators[0]
    assert kernel_is_syzygy(M, vec)
    assert e == 12

def test_zero_slices_below_threshold():
    f = random_bihomogeneous(2, 5, 0)
    for eta in range(3 * 2):
        assert slice_kernel(kernel_matrix(f, eta)).is_zero()


def test_evaluate_is_numeric():
    f = random_bihomogeneous(1, 3, 0)
    A = slice_matrix(f, 3).evaluate((2, 5), 32003)
    assert isinstance(A, np.ndarray) and A.shape == (4, 6)


def test_large_case():
    f = random_bihomogeneous(6, 13, 0)
    res = minimal_syzygy_search(f)
    assert res.bidegree == (108, 18)
    assert res.total_degree == 126 and res.regularity_lower_bound == 124


def test_certificate_generic():
    f = random_bihomogeneous(2, 5, 0)
    c = genericity_certificate(f)
    assert c.passed and c.witness is None and c.selected_minor_nonzero
    assert delta_minor(f, 6)
    with pytest.raises(ValueError):
        delta_minor(f, 3)


def test_certificate_eta_range():
    f = random_bihomogeneous(2, 5, 0)
    with pytest.raises(ValueError):
        genericity_certificate(f, eta=2)


def test_certificate_witness_top_coefficient():
    S = bigraded_ring()
    # no x3^3 term: h_{2mu+1} = 0
    f = S.parse("x0*x2^3 + x1*x2^2*x3 + (x0+x1)*x2*x3^2")
    c = genericity_certificate(f)
    assert not c.passed and c.witness == "h_{2mu+1}"


def test_certificate_witness_derivative():
    S = bigraded_ring()
    # h_0 = x1 does not depend on x0
    f = S.parse("x1*x2^3 + x0*x2^2*x3 + x1*x2*x3^2 + (x0+x1)*x3^3")
    c = genericity_certificate(f)
    assert not c.passed and c.witness == "d/dx0 h_0"


def test_degenerate_form_raises_genericity_failure():
    S = bigraded_ring()
    f = S.parse("x0*x2^5 + x1*x3^5")
    assert genericity_certificate(f).witness == "Delta"
    with pytest.raises(GenericityFailure) as err:
        minimal_syzygy_search(f)
    assert err.value.eta == 5


def test_degenerate_form_misses_closed_form():
    S = bigraded_ring()
    f = S.parse("x0^2*(x2^3 + x3^3)")
    assert not genericity_certificate(f).passed
    assert not minimal_syzygy_search(f).matches_closed_form


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 10**6))
def test_search_random_seeds(seed):
    f = random_bihomogeneous(1, 3, seed)
    assert minimal_syzygy_search(f, seed=seed).bidegree == (2 + 1, 3)
