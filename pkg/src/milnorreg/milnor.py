"""Milnor algebras M(f) = S/J_f: Hessians, saturation data and invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .groebner import Ideal, normal_form, saturate_irrelevant
from .hilbert import (
    hilbert_function,
    hilbert_function_at,
    hilbert_polynomial,
    quotient_series,
    stability_threshold,
)
from .linalg import det_poly
from .polyring import Polynomial
from .resolution import betti_table, depth_and_pd, free_resolution, minimalize


class CharacteristicError(ValueError):
    """The field characteristic is too small for the requested degree."""


class VerificationFailure(AssertionError):
    """An identity that must hold for a correct implementation failed."""


def _check_char(f: Polynomial, d: int):
    p = f.ring.field.characteristic
    if p and p <= d:
        raise CharacteristicError(f"characteristic {p} must exceed the degree {d}")


def _degree(f: Polynomial) -> int:
    if not f:
        raise ValueError("zero polynomial")
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")
    return f.degree()


def jacobian_ideal(f: Polynomial) -> Ideal:
    """(∂_0 f, ..., ∂_n f); zero partials are dropped from the generator list."""
    d = _degree(f)
    if d < 1:
        raise ValueError("degree must be at least 1")
    _check_char(f, d)
    return Ideal(f.ring, [f.derivative(i) for i in range(f.ring.nvars)])


def jacobian_generators(f: Polynomial):
    """All partial derivatives, including zero ones, in variable order."""
    return [f.derivative(i) for i in range(f.ring.nvars)]


def hessian_matrix(f: Polynomial):
    n = f.ring.nvars
    first = jacobian_generators(f)
    return [[first[i].derivative(j) for j in range(n)] for i in range(n)]


def hessian(f: Polynomial) -> Polynomial:
    """Determinant of the matrix of second partial derivatives."""
    d = _degree(f)
    if d < 2:
        raise ValueError("Hessian needs degree at least 2")
    _check_char(f, d)
    return det_poly(hessian_matrix(f))


def ambient_T(nvars: int, d: int) -> int:
    return nvars * (d - 2)


@dataclass(frozen=True)
class SpodziejaResult:
    hess_in_J: bool
    hess_in_colon: bool
    singular: bool

    @property
    def consistent(self) -> bool:
        return self.hess_in_J == self.singular and self.hess_in_colon

    def as_tuple(self):
        return (self.hess_in_J, self.hess_in_colon, self.singular)


def spodzieja_test(f: Polynomial, check=True, saturation=None) -> SpodziejaResult:
    """Hessian membership in J_f and (J_f : m), against a saturation verdict.

    ``singular`` is decided independently: V(f) is singular iff the
    saturation of J_f is a proper ideal.
    """
    J = jacobian_ideal(f)
    G = J.groebner()
    h = hessian(f)
    in_J = not normal_form(h, G)
    in_colon = all(not normal_form(x * h, G) for x in f.ring.gens)
    sat = saturation if saturation is not None else saturate_irrelevant(J)
    singular = not sat.is_unit()
    res = SpodziejaResult(in_J, in_colon, singular)
    if check and not res.consistent:
        raise VerificationFailure(f"Hessian membership disagrees with the singularity verdict: {res}")
    return res


@dataclass
class NData:
    """Graded pieces of N(f) = I_f / J_f over a degree window."""

    window: tuple
    dims: list
    indeg: int | None
    top: int | None
    zero: bool

    def to_json(self):
        return {"window": list(self.window), "dims": self.dims, "indeg": self.indeg, "top": self.top}


def n_module(f: Polynomial, window=None, saturation=None) -> NData:
    """dim N(f)_k = HF(S/J_f)(k) - HF(S/I_f)(k) for k in the window (default [0, T+2])."""
    d = _degree(f)
    J = jacobian_ideal(f)
    sat = saturation if saturation is not None else saturate_irrelevant(J)
    if window is None:
        window = (0, max(ambient_T(f.ring.nvars, d) + 2, 0))
    lo, hi = window
    HJ = quotient_series(J)
    HI = quotient_series(sat)
    dims = [hilbert_function_at(HJ, k) - hilbert_function_at(HI, k) for k in range(lo, hi + 1)]
    nz = [lo + i for i, v in enumerate(dims) if v]
    return NData((lo, hi), dims, nz[0] if nz else None, nz[-1] if nz else None, not nz)


@dataclass
class MilnorReport:
    d: int
    n: int
    T: int
    hf_samples: list
    hp: object
    st: int | None
    reg: int
    pd: int
    depth: int
    hess_in_J: bool
    hess_in_colon: bool
    singular: bool
    ndata: NData
    betti: object
    hp_constant: bool
    complete_intersection: bool
    extras: dict = field(default_factory=dict)

    @property
    def reg_vs_T(self) -> str:
        return "<" if self.reg < self.T else ("=" if self.reg == self.T else ">")

    @property
    def st_vs_T(self) -> str:
        if self.st is None:
            return "n/a"
        return "<" if self.st < self.T else ("=" if self.st == self.T else ">")

    def invariant_checks(self) -> dict:
        """Inequalities every Milnor algebra must satisfy."""
        checks = {
            "T": self.T == (self.n + 1) * (self.d - 2),
            "depth": self.depth == self.n + 1 - self.pd,
            "st<=reg+pd-n": self.st is None or self.st <= self.reg + self.pd - self.n,
            "reg>=topN": self.ndata.top is None or self.reg >= self.ndata.top,
            "hess_in_colon": self.hess_in_colon,
            "spodzieja": self.hess_in_J == self.singular,
        }
        return checks

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "T": self.T,
            "hf_samples": self.hf_samples,
            "hp": {"monomial": [str(c) for c in self.hp.monomial], "text": str(self.hp)},
            "st": self.st,
            "reg": self.reg,
            "pd": self.pd,
            "depth": self.depth,
            "hessInJ": self.hess_in_J,
            "hessInColon": self.hess_in_colon,
            "singular": self.singular,
            "N": self.ndata.to_json(),
            "comparisons": {"reg_vs_T": self.reg_vs_T, "st_vs_T": self.st_vs_T},
            "complete_intersection": self.complete_intersection,
            "betti": self.betti.to_json(),
            "checks": self.invariant_checks(),
        }

    def to_text(self) -> str:
        lines = [
            f"d = {self.d}   n = {self.n}   T = {self.T}",
            f"HF(0..) = {' '.join(map(str, self.hf_samples))}",
            f"HP(k) = {self.hp}",
            f"st = {self.st}   ({self.st_vs_T} T)",
            f"reg = {self.reg}   ({self.reg_vs_T} T)",
            f"pd = {self.pd}   depth = {self.depth}",
            f"hess in J: {self.hess_in_J}   hess in (J:m): {self.hess_in_colon}   singular: {self.singular}",
            f"N(f): indeg = {self.ndata.indeg}   top = {self.ndata.top}   dims = {self.ndata.dims}",
            "betti:",
            self.betti.to_text(),
        ]
        return "\n".join(lines)


def milnor_report(f: Polynomial, samples=None, window=None) -> MilnorReport:
    """Full invariant set of M(f)."""
    d = _degree(f)
    nv = f.ring.nvars
    T = ambient_T(nv, d)
    J = jacobian_ideal(f)
    H = quotient_series(J)
    P = hilbert_polynomial(H)
    st = stability_threshold(H)
    res = minimalize(free_resolution(J))
    B = betti_table(res)
    depth, pd = depth_and_pd(B)
    sat = saturate_irrelevant(J)
    spod = spodzieja_test(f, check=False, saturation=sat)
    nd = n_module(f, window=window, saturation=sat)
    if samples is None:
        samples = max(T + 2, (st or 0) + 2, 6)
    codim = nv - H.krull_dimension
    ci = pd == codim and nd.zero
    report = MilnorReport(
        d=d,
        n=nv - 1,
        T=T,
        hf_samples=hilbert_function(H, samples),
        hp=P,
        st=st,
        reg=B.reg,
        pd=pd,
        depth=depth,
        hess_in_J=spod.hess_in_J,
        hess_in_colon=spod.hess_in_colon,
        singular=spod.singular,
        ndata=nd,
        betti=B,
        hp_constant=P.degree <= 0,
        complete_intersection=ci,
    )
    report.extras["resolution"] = res
    report.extras["series"] = H
    return report


# -- bound formulas --------------------------------------------------------------


@dataclass(frozen=True)
class Codim2Bounds:
    d: int
    e1: int
    l1: int
    r: int | None
    eta0: int
    eta1: int
    eta2: int
    st_bound: int
    reg_bound: int


def codim2_bounds(d: int, e1: int, l1: int, r=None) -> Codim2Bounds:
    """Bounds on st and reg from the first Hilbert-Burch degrees e1 < l1."""
    if not 1 <= e1 <= d - 1:
        raise ValueError(f"need 1 <= e1 <= d-1, got e1={e1}, d={d}")
    if l1 <= e1:
        raise ValueError(f"minimality needs e1 < l1, got e1={e1}, l1={l1}")
    eta0 = 4 * d - 8 - 2 * e1
    eta1 = 3 * d - 7 - e1 + max(0, d - 1 - l1)
    eta2 = l1 - 4
    st_bound = max(eta0 + 1, eta2 + 1)
    if e1 < d - 1:
        reg_bound = max(4 * d - 8 - 2 * e1, l1 - 2)
    else:
        reg_bound = max(2 * d - 5, l1 - 2)
    return Codim2Bounds(d, e1, l1, r, eta0, eta1, eta2, st_bound, reg_bound)


@dataclass(frozen=True)
class IsolatedVerdict:
    applicable: bool
    branch: str
    st_bound: int | None
    reg_bound: int | None
    st_ok: bool
    reg_ok: bool

    @property
    def ok(self) -> bool:
        return self.applicable and self.st_ok and self.reg_ok


def isolated_bounds_check(report: MilnorReport, ndata: NData | None = None) -> IsolatedVerdict:
    """Check st <= T - indeg(N) + 1 and the matching regularity bound."""
    nd = ndata or report.ndata
    if not report.hp_constant:
        return IsolatedVerdict(False, "not isolated (HP not constant)", None, None, False, False)
    T, d, n = report.T, report.d, report.n
    indeg = nd.indeg if nd.indeg is not None else math.inf
    hp0 = report.hp.monomial[0] if report.hp.monomial else 0
    if report.complete_intersection and hp0 == (d - 1) ** n:
        branch = "complete intersection"
        reg_bound = T - min(d - 2, indeg)
    else:
        branch = "general"
        reg_bound = T - min(d - 1, indeg)
    st_bound = T - indeg + 1 if indeg != math.inf else None
    st_ok = report.st is None or st_bound is None or report.st <= st_bound
    reg_ok = report.reg <= reg_bound
    return IsolatedVerdict(True, branch, st_bound, int(reg_bound), st_ok, reg_ok)
