from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorreg.linalg import det_poly, nullspace_field, nullspace_mod_p, rank_field, rank_mod_p
from milnorreg.polyring import GF32003, QQ, Ring

P = 32003


def test_rank_mod_p():
    A = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank_mod_p(A, P) == 2


def test_nullspace_mod_p():
    A = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    (x,) = nullspace_mod_p(A, P)
    assert not (A @ x % P).any()


def test_rank_rational():
    assert rank_field([[Fraction(1, 2), 1], [1, 2]], QQ) == 1
    (v,) = nullspace_field([[1, 2]], QQ, 2)
    assert v[0] + 2 * v[1] == 0


def test_det_poly():
    S = Ring(2, QQ)
    x0, x1 = S.gens
    M = [[x0, x1], [x1, x0]]
    assert det_poly(M) == x0 * x0 - x1 * x1
    assert det_poly([[x0, x1], [x0, x1]]) == S.zero


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_agrees_across_paths(rows):
    a = rank_field(rows, GF32003)
    b = rank_field(rows, QQ)
    assert a == b
    for v in nullspace_field(rows, QQ, 4):
        assert all(sum(r[i] * v[i] for i in range(4)) == 0 for r in rows)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_det_poly_matches_integer_det(vals):
    S = Ring(1, QQ)
    M = [[S.constant(vals[3 * i + j]) for j in range(3)] for i in range(3)]
    want = round(np.linalg.det(np.array(vals, dtype=float).reshape(3, 3)))
    got = det_poly(M)
    assert (got.lead_coeff if got else 0) == want
