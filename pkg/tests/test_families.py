import pytest

from milnorreg.families import (
    NonReducedError,
    classify_free_nearly_free,
    cone_over_plane_curve,
    generic_determinantal,
    generic_hyperplane_arrangement,
    generic_linear_forms,
    hilbert_burch_degrees,
    is_reduced,
    surface_arrangement,
    v_family,
    v_prime_family,
)
from milnorreg.groebner import Ideal
from milnorreg.hilbert import quotient_series
from milnorreg.milnor import jacobian_ideal, milnor_report
from milnorreg.polyring import GF32003, Ring
from milnorreg.linalg import rank_field
from milnorreg.resolution import betti_table, minimal_free_resolution


def _betti(f):
    return betti_table(minimal_free_resolution(jacobian_ideal(f)))


def test_cone_ignores_x0():
    f = cone_over_plane_curve(Ring(3).parse("x0^3+x1^3+x2^3"))
    assert f == Ring(4).parse("x1^3+x2^3+x3^3")
    assert not f.derivative(0)


def test_cone_needs_three_variables():
    with pytest.raises(ValueError):
        cone_over_plane_curve(Ring(4).parse("x0^3"))


def test_linear_forms_are_generic():
    rows = generic_linear_forms(3, 6, seed=3)
    assert len(rows) == 6
    from itertools import combinations

    assert all(rank_field([rows[i] for i in s], GF32003) == 4 for s in combinations(range(6), 4))


def test_arrangement_rejects_small_d():
    with pytest.raises(ValueError):
        generic_hyperplane_arrangement(3, 3)


@pytest.mark.parametrize("d, reg", [(5, 4), (6, 6)])
def test_arrangement_regularity(d, reg):
    r = milnor_report(generic_hyperplane_arrangement(3, d, seed=0))
    assert r.reg == reg == 2 * d - 6
    assert r.depth == 0


def test_arrangement_four_planes_is_free():
    # four generic planes are projectively x0 x1 x2 x3
    f = generic_hyperplane_arrangement(3, 4, seed=0)
    r = milnor_report(f)
    assert (r.reg, r.depth, r.pd) == (2, 2, 2)
    v = classify_free_nearly_free(_betti(f), 4)
    assert v.kind == "free" and v.exponents == (1, 1, 1)


def test_arrangement_seed_reproducible():
    assert generic_hyperplane_arrangement(3, 5, seed=7) == generic_hyperplane_arrangement(3, 5, seed=7)


@pytest.mark.parametrize("sym, nvars, codim", [(False, 9, 4), (True, 6, 3)])
def test_determinantal_singular_locus(sym, nvars, codim):
    D = generic_determinantal(3, sym)
    assert D.ring.nvars == nvars
    assert D.f.degree() == 3
    assert nvars - quotient_series(D.minors).krull_dimension == codim


def test_determinantal_jacobian_is_minors():
    D = generic_determinantal(3)
    assert jacobian_ideal(D.f) == D.minors


def test_determinantal_candidates():
    assert generic_determinantal(3).candidate_regularities() == {"statement": 2, "proof": 1}
    assert generic_determinantal(3, True).candidate_regularities() == {"statement": 2, "proof": 1}


def test_determinantal_size_guard():
    with pytest.raises(ValueError):
        generic_determinantal(4)


def test_determinantal_names_round_trip():
    D = generic_determinantal(2)
    assert D.f == D.ring.parse("x00*x11 - x01*x10")


def test_is_reduced(R):
    assert is_reduced(R.parse("x0*x1"))
    assert not is_reduced(R.parse("x0^2*x1"))
    assert not is_reduced(R.parse("(x0+x1)^2*(x2^2+x3^2)"))


def test_surface_arrangement_rejects_repeats(R):
    with pytest.raises(NonReducedError):
        surface_arrangement(components=[R.parse("x0+x1"), R.parse("x0+x1")])


@pytest.mark.parametrize("degrees", [(1, 2), (2, 2), (1, 1, 2)])
def test_surface_identities(degrees):
    arr = surface_arrangement(degrees=degrees, seed=1)
    assert arr.jacobian_identity_holds()
    minors = arr.psi_minors()
    for i, m in enumerate(minors):
        assert m == arr.g[i] or m == -arr.g[i]
    assert arr.is_transverse()


def test_psi_times_g_vanishes():
    arr = surface_arrangement(degrees=(1, 2, 2), seed=2)
    ring = arr.f.ring
    for j in range(len(arr.components) - 1):
        acc = ring.zero
        for i, row in enumerate(arr.psi):
            acc = acc + arr.g[i] * row[j]
        assert not acc


def test_hilbert_burch_degrees():
    assert hilbert_burch_degrees(v_family(3)) == ([1, 3], [4])
    assert hilbert_burch_degrees(v_prime_family(3)) == ([3, 3], [6])
    arr = surface_arrangement(degrees=(1, 1, 2), seed=0)
    assert hilbert_burch_degrees(arr) == ([2, 3, 3], [4, 4])


def test_v_family_shapes():
    V = v_family(3)
    assert V.f == Ring(4).parse("x3*(x0^3+x1^3+x2^3)")
    assert V.info["d"] == 4
    assert v_prime_family(2).info["d"] == 4


def test_generic_pair_stability():
    arr = surface_arrangement(degrees=(2, 2), seed=0)
    r = milnor_report(arr.f)
    assert r.st == 2 * 4 + 2 * 2 - 7


def test_classify_cone_free(R):
    # cone over three lines: the zero partial contributes exponent 0
    f = R.parse("x1*x2*x3")
    v = classify_free_nearly_free(_betti(f), 3)
    assert v.kind == "free" and v.exponents == (0, 1, 1)


def test_classify_quadric_cone_is_neither(R):
    v = classify_free_nearly_free(_betti(R.parse("x1^2+x2^2+x3^2")), 2)
    assert v.kind == "neither"


def test_classify_fermat_is_neither(R):
    v = classify_free_nearly_free(_betti(R.parse("x0^3+x1^3+x2^3+x3^3")), 3)
    assert v.kind == "neither"
