import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorreg.groebner import Ideal
from milnorreg.hilbert import quotient_series
from milnorreg.milnor import jacobian_ideal
from milnorreg.polyring import Ring
from milnorreg.resolution import (
    BettiTable,
    ModuleMap,
    NotHomogeneous,
    NotMinimal,
    betti_from_frame,
    betti_table,
    depth_and_pd,
    free_resolution,
    minimal_free_resolution,
    minimalize,
    schreyer_syzygies,
)

# Betti numbers of S/J_f from Koszul homology (independent oracle), as {(i, degree): rank}
KOSZUL_BETTI = {
    "x0^3+x1^3+x2^3+x3^3": {(0, 0): 1, (1, 2): 4, (2, 4): 6, (3, 6): 4, (4, 8): 1},
    "x0*x1*x2*x3": {(0, 0): 1, (1, 3): 4, (2, 4): 3},
    "x3*(x0^2+x1^2+x2^2)": {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1},
    "x3*(x0^3+x1^3+x2^3)": {(0, 0): 1, (1, 3): 4, (2, 4): 1, (2, 5): 3, (3, 7): 1},
    "(x1^2+2*x2^2+x3^2)*(x0^2+x1^2+x2^2)": {
        (0, 0): 1, (1, 3): 4, (2, 5): 6, (2, 6): 1, (3, 6): 3, (3, 7): 2, (4, 8): 1,
    },
    "x1^3+x2^3+x3^3": {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1},
    "x0^4+x1^4+x2^4+x3^4": {(0, 0): 1, (1, 3): 4, (2, 6): 6, (3, 9): 4, (4, 12): 1},
}


@pytest.mark.parametrize("text", sorted(KOSZUL_BETTI))
def test_minimal_betti_matches_koszul(text, R):
    J = jacobian_ideal(R.parse(text))
    res = minimal_free_resolution(J)
    B = betti_table(res)
    assert B.entries == KOSZUL_BETTI[text]
    assert res.is_complex()
    assert res.hilbert_series().numerator == quotient_series(J).numerator


@pytest.mark.parametrize("text", sorted(KOSZUL_BETTI))
def test_frame_betti_without_minimalizing(text, R):
    J = jacobian_ideal(R.parse(text))
    assert betti_from_frame(free_resolution(J)).entries == KOSZUL_BETTI[text]


def test_koszul_complex(R):
    res = minimal_free_resolution(Ideal(R, R.gens))
    assert res.ranks() == [1, 4, 6, 4, 1]


def test_unit_ideal_resolution(R):
    res = minimalize(free_resolution(Ideal(R, [1])))
    assert res.zero and res.ranks() == []


def test_reg_and_depth(R):
    B = betti_table(minimal_free_resolution(jacobian_ideal(R.parse("x0*x1*x2*x3"))))
    assert B.reg == 2
    assert depth_and_pd(B) == (2, 2)


def test_betti_text_format():
    B = BettiTable({(0, 0): 1, (1, 3): 4, (2, 4): 3}, 4)
    assert B.to_text() == "\n".join([
        "       0 1 2",
        "total: 1 4 3",
        "    0: 1 . .",
        "    1: . . .",
        "    2: . 4 3",
    ])


def test_betti_text_collapses_long_gaps():
    B = BettiTable({(0, 0): 1, (1, 6): 2, (2, 7): 1}, 4)
    lines = B.to_text().splitlines()
    assert lines[3].strip().startswith(":")
    assert lines[-1].strip().startswith("5:")


def test_non_minimal_betti_rejected(R):
    res = free_resolution(Ideal(R, ["x0^2 + x1*x2", "x0*x1", "x1^3"]))
    with pytest.raises(NotMinimal):
        betti_table(res)


def test_inhomogeneous_rejected(R):
    with pytest.raises(NotHomogeneous):
        free_resolution(Ideal(R, ["x0^2 + x1"]))


def test_length_cap_keeps_minimal_top(R):
    J = jacobian_ideal(R.parse("x0^3+x1^3+x2^3+x3^3"))
    res = minimal_free_resolution(J, length_cap=2)
    assert res.ranks() == [1, 4, 6]


def test_schreyer_syzygies_koszul(R):
    S = schreyer_syzygies([R.parse(t) for t in ("x0^2", "x1^2", "x2^2", "x3^2")])
    assert S.ncols == 6
    assert all(s == (4,) for s in S.source_shifts)


def test_schreyer_syzygies_are_syzygies(R):
    gens = [R.parse(t) for t in ("x0^2 + x1*x2", "x0*x1", "x1^3")]
    F = ModuleMap(R, [{0: g} for g in gens], [g.shift() for g in gens], [(0,)])
    S = schreyer_syzygies(F)
    assert F.compose(S).is_zero()
    assert S.ncols == 3


def test_bigraded_betti_keys():
    B2 = Ring(4, split=2)
    res = minimal_free_resolution(Ideal(B2, ["x0*x2", "x1*x3"]))
    assert betti_table(res).entries == {(0, (0, 0)): 1, (1, (1, 1)): 2, (2, (2, 2)): 1}


mono = st.tuples(*[st.integers(0, 2)] * 4).filter(lambda m: sum(m) > 0)


@settings(max_examples=25, deadline=None)
@given(st.lists(mono, min_size=1, max_size=5), st.lists(st.integers(1, 5), min_size=5, max_size=5))
def test_random_binomial_ideals(monos, coeffs):
    S = Ring(4)
    gens = []
    for m, c in zip(monos, coeffs):
        other = tuple(reversed(m))
        gens.append(S.monomial(m) + S.monomial(other, c) if other != m else S.monomial(m))
    J = Ideal(S, gens)
    res = minimalize(free_resolution(J))
    assert res.is_complex()
    assert res.hilbert_series().numerator == quotient_series(J).numerator
    assert betti_table(res).entries == {k: v for k, v in betti_from_frame(free_resolution(J)).entries.items() if v}
