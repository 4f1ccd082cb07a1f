from hypothesis import given, settings
from hypothesis import strategies as st

from milnorreg.groebner import (
    DegreeCap,
    Ideal,
    buchberger,
    colon_ideal,
    divide,
    groebner_with_cofactors,
    intersect,
    irrelevant_ideal,
    is_groebner,
    lead_ideal,
    normal_form,
    saturate_irrelevant,
)
from milnorreg.polyring import QQ, Ring


def as_set(G):
    return {str(g) for g in G.elements}


def test_reduced_basis_small(RQ):
    # reference basis computed independently with sympy (grevlex)
    I = Ideal(RQ, ["x0^2+x1*x2", "x0*x1", "x1^3"])
    assert as_set(buchberger(I)) == {"x1^3", "x1^2*x2", "x0^2 + x1*x2", "x0*x1"}


def test_reduced_basis_twisted_cubic_like(RQ):
    I = Ideal(RQ, ["x0^3-x1*x2*x3", "x1^2-x0*x2", "x2^2*x3-x0^2*x1"])
    want = {"x0^3 - x1*x2*x3", "x0^2*x1 - x2^2*x3", "x1^2 - x0*x2"}
    assert as_set(buchberger(I)) == want
    Ip = Ideal(Ring(4), ["x0^3-x1*x2*x3", "x1^2-x0*x2", "x2^2*x3-x0^2*x1"])
    assert as_set(buchberger(Ip)) == want


def test_lex_elimination():
    S = Ring(3, QQ, order="lex")
    G = buchberger(Ideal(S, ["x0 - x1^2", "x1 - x2^3"]))
    assert as_set(G) == {"x0 - x2^6", "x1 - x2^3"}


def test_non_homogeneous():
    S = Ring(2, QQ)
    G = buchberger(Ideal(S, ["x0^2 + x1^2 - 1", "x0 - x1"]))
    assert is_groebner(G)
    assert normal_form(S.parse("2*x1^2 - 1"), G) == S.zero


def test_unit_ideal(R):
    assert Ideal(R, ["x0", "x0 + 1"]).is_unit()


def test_divide(R):
    I = Ideal(R, ["x0^2 - x1*x2", "x1^2 - x0*x3"])
    G = I.groebner()
    p = R.parse("x0^3*x1 + x1^3 - x2*x3^2")
    qs, r = divide(p, G)
    total = r
    for q, g in zip(qs, G.elements):
        total = total + q * g
    assert total == p
    assert r == normal_form(p, G)


def test_cofactors(R):
    I = Ideal(R, ["x0^2 + x1*x2", "x0*x1 - x3^2", "x1^3"])
    G, cofs = groebner_with_cofactors(I)
    for g, cof in zip(G.elements, cofs):
        acc = R.zero
        for j, c in cof.items():
            acc = acc + c * I.generators[j]
        assert acc == g


def test_colon_and_intersection(R):
    P = R.parse
    assert colon_ideal(Ideal(R, [P("x0*x1")]), Ideal(R, [P("x0"), P("x1")])) == Ideal(R, [P("x0*x1")])
    assert intersect(Ideal(R, ["x0"]), Ideal(R, ["x1"])) == Ideal(R, ["x0*x1"])
    assert colon_ideal(Ideal(R, ["x0^2", "x0*x1"]), Ideal(R, ["x1"])) == Ideal(R, ["x0"])


def test_saturation(R):
    m = irrelevant_ideal(R)
    I = Ideal(R, [R.parse("x0") * g for g in m.generators])
    assert saturate_irrelevant(I) == Ideal(R, ["x0"])
    J = Ideal(R, ["x0^2", "x1^2", "x2^2", "x3^2"])
    assert saturate_irrelevant(J).is_unit()


def test_degree_cap_truncates(R):
    I = Ideal(R, ["x0^2+x1*x2", "x0*x1", "x1^3"])
    G = I.groebner(DegreeCap(total=3))
    assert all(g.degree() <= 3 for g in G.elements)
    assert "x1^2*x2" in as_set(G)


def test_lead_ideal(RQ):
    G = buchberger(Ideal(RQ, ["x0^2+x1*x2", "x0*x1", "x1^3"]))
    assert {str(g) for g in lead_ideal(G).generators} == {"x0^2", "x0*x1", "x1^2*x2", "x1^3"}


coef = st.integers(-3, 3)
mono = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(mono, coef, min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3), polys, polys)
def test_groebner_properties(gens, a, b):
    S = Ring(3)
    gs = [S.from_dict(g) for g in gens]
    I = Ideal(S, gs)
    G = I.groebner()
    assert is_groebner(G)
    for g in gs:
        assert not normal_form(g, G)
    if gs[0]:
        p = S.from_dict(a) * gs[0] + S.from_dict(b) * gs[-1]
        assert not normal_form(p, G)
    assert buchberger(Ideal(S, G.elements)) == G
