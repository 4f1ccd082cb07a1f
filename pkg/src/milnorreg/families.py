"""Constructors for the hypersurface classes under study, plus a free / nearly-free classifier."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .groebner import Ideal, saturate_irrelevant
from .hilbert import quotient_series
from .linalg import det_poly, rank_field
from .polyring import GF32003, Polynomial, Ring, random_bihomogeneous, random_form

MAX_RESAMPLES = 50


class GenericityError(RuntimeError):
    """Bounded resampling did not produce a generic instance."""


class NonReducedError(ValueError):
    """A product of components is not reduced."""


def _homogeneous_degree(f: Polynomial) -> int:
    if not f or not f.is_homogeneous():
        raise ValueError(f"{f} is not a nonzero homogeneous polynomial")
    return f.degree()


def is_reduced(f: Polynomial) -> bool:
    """f is squarefree iff its singular locus has codimension at least 2.

    A repeated factor h makes V(h) singular, so V(f, J_f) = V(J_f) (Euler)
    would contain a hypersurface.
    """
    d = _homogeneous_degree(f)
    if d == 1:
        return True
    J = Ideal(f.ring, [f] + [f.derivative(i) for i in range(f.ring.nvars)])
    if J.is_unit():
        return True
    return f.ring.nvars - quotient_series(J).krull_dimension >= 2


# -- cones -------------------------------------------------------------------------


def cone_over_plane_curve(g: Polynomial, ring: Ring | None = None) -> Polynomial:
    """f(x0..x3) = g(x1, x2, x3) for g in three variables."""
    _homogeneous_degree(g)
    if g.ring.nvars != 3:
        raise ValueError("g must live in a ring with 3 variables")
    ring = ring or Ring(4, g.ring.field)
    return g.substitute_vars(ring, [1, 2, 3])


# -- hyperplane arrangements ---------------------------------------------------------


def generic_linear_forms(n: int, d: int, seed=0, field_=GF32003):
    """d linear forms in n+1 variables with every (n+1)-subset independent."""
    if not d > n >= 2:
        raise ValueError("need d > n >= 2")
    rng = random.Random(seed)
    for _ in range(MAX_RESAMPLES):
        rows = [[field_.random_nonzero(rng) for _ in range(n + 1)] for _ in range(d)]
        if all(rank_field([rows[i] for i in sub], field_) == n + 1 for sub in combinations(range(d), n + 1)):
            return rows
    raise GenericityError(f"no generic arrangement after {MAX_RESAMPLES} draws")


def generic_hyperplane_arrangement(n: int, d: int, seed=0, field_=GF32003) -> Polynomial:
    """Product of d generic linear forms in P^n."""
    ring = Ring(n + 1, field_)
    f = ring.one
    for row in generic_linear_forms(n, d, seed, field_):
        f = f * ring.from_dict({tuple(int(i == j) for j in range(n + 1)): c for i, c in enumerate(row)})
    return f


# -- determinantal hypersurfaces ---------------------------------------------------------


@dataclass
class Determinantal:
    f: Polynomial
    ring: Ring
    matrix: list
    minors: Ideal
    symmetric: bool

    def candidate_regularities(self) -> dict:
        """Two readings of the claimed reg M(f) for this n, kept side by side."""
        n = len(self.matrix)
        if self.symmetric:
            return {"statement": 2 * n - 4, "proof": n - 2}
        return {"statement": n - 1, "proof": 2 * n - 5}


def _submaximal_minors(M):
    n = len(M)
    if n == 2:
        return [p for row in M for p in row]
    out = []
    for rows in combinations(range(n), n - 1):
        for cols in combinations(range(n), n - 1):
            out.append(det_poly([[M[r][c] for c in cols] for r in rows]))
    return out


def generic_determinantal(n: int, symmetric=False, field_=GF32003, allow_large=False) -> Determinantal:
    """det of the generic (or generic symmetric) n x n matrix of variables x_ij."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n > 3 and not allow_large:
        raise ValueError("n > 3 needs allow_large=True")
    if symmetric:
        cells = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        cells = [(i, j) for i in range(n) for j in range(n)]
    ring = Ring(len(cells), field_, names=[f"x{i}{j}" for i, j in cells])
    index = {c: k for k, c in enumerate(cells)}
    M = [[ring.var(index[(min(i, j), max(i, j))] if symmetric else index[(i, j)]) for j in range(n)] for i in range(n)]
    f = det_poly(M)
    return Determinantal(f, ring, M, Ideal(ring, _submaximal_minors(M)), symmetric)


# -- surface arrangements ------------------------------------------------------------


@dataclass
class SurfaceArrangement:
    f: Polynomial
    components: list
    g: list
    I: Ideal
    psi: list
    H: list
    info: dict = field(default_factory=dict)

    def jacobian_identity_holds(self) -> bool:
        """∂_j f = sum_i g_i H[i][j] for every j."""
        ring = self.f.ring
        for j in range(ring.nvars):
            acc = ring.zero
            for gi, row in zip(self.g, self.H):
                acc = acc + gi * row[j]
            if acc != self.f.derivative(j):
                return False
        return True

    def psi_minors(self):
        """Maximal minors of psi, the i-th one deleting row i."""
        r = len(self.psi)
        if r == 1:
            return [self.f.ring.one]
        return [det_poly([row for k, row in enumerate(self.psi) if k != i]) for i in range(r)]

    def is_transverse(self) -> bool:
        """Saturation of J_f equals I = (g_1, ..., g_r)."""
        from .milnor import jacobian_ideal

        return saturate_irrelevant(jacobian_ideal(self.f)) == self.I


def surface_arrangement(degrees=None, components=None, seed=0, ring: Ring | None = None) -> SurfaceArrangement:
    """Union of surfaces V(f_1), ..., V(f_r) in P^3 with the Hilbert-Burch data of I = (g_i)."""
    if components is None:
        if not degrees:
            raise ValueError("give component degrees or explicit components")
        ring = ring or Ring(4)
        rng = random.Random(seed)
        components = [random_form(ring, di, rng) for di in degrees]
    components = list(components)
    if not components:
        raise ValueError("no components")
    ring = components[0].ring
    degrees = [_homogeneous_degree(c) for c in components]
    if sum(degrees) < 2:
        raise ValueError("total degree must be at least 2")
    f = ring.one
    for c in components:
        f = f * c
    if not is_reduced(f):
        raise NonReducedError("product of components is not reduced")
    r = len(components)
    g = []
    for i in range(r):
        gi = ring.one
        for k, c in enumerate(components):
            if k != i:
                gi = gi * c
        g.append(gi)
    psi = [[ring.zero] * (r - 1) for _ in range(r)]
    for j in range(r - 1):
        psi[j][j] = components[j]
        psi[j + 1][j] = -components[j + 1]
    H = [[c.derivative(j) for j in range(ring.nvars)] for c in components]
    info = {"degrees": degrees, "d": sum(degrees)}
    return SurfaceArrangement(f, components, g, Ideal(ring, g), psi, H, info)


def hilbert_burch_degrees(arr: SurfaceArrangement):
    """Generator degrees e_i of I and the degrees l_i of the relation module, both sorted.

    Every column of psi maps S(-d) into the generators, so each l_i = d.
    """
    d = arr.info["d"]
    e = sorted(d - di for di in arr.info["degrees"])
    return e, [d] * (len(arr.components) - 1)


def v_family(d: int, ring: Ring | None = None) -> SurfaceArrangement:
    """x3 (x0^d + x1^d + x2^d), a degree d+1 surface."""
    ring = ring or Ring(4)
    P = ring.parse
    return surface_arrangement(components=[P("x3"), P(f"x0^{d}+x1^{d}+x2^{d}")])


def v_prime_family(d: int, ring: Ring | None = None) -> SurfaceArrangement:
    """(x1^d + 2x2^d + x3^d)(x0^d + x1^d + x2^d), a degree 2d surface."""
    ring = ring or Ring(4)
    P = ring.parse
    return surface_arrangement(components=[P(f"x1^{d}+2*x2^{d}+x3^{d}"), P(f"x0^{d}+x1^{d}+x2^{d}")])


def bigraded_family(k: int, d: int, seed=0) -> Polynomial:
    """Random bihomogeneous form of bidegree (k, d-k)."""
    return random_bihomogeneous(k, d - k, seed)


# -- free / nearly free --------------------------------------------------------------


@dataclass(frozen=True)
class FreenessVerdict:
    kind: str
    exponents: tuple = ()
    diagnostics: str = ""


def classify_free_nearly_free(B, d: int) -> FreenessVerdict:
    """Pattern-match the minimal graded Betti table of M(f)."""
    g = B.graded()
    n = g.nvars - 1
    pd = g.pd
    f1 = g.shifts_at(1)
    if not f1 or len(f1) > n + 1 or any(s != d - 1 for s in f1):
        return FreenessVerdict("neither", (), f"F1 shifts {f1} are not copies of d-1")
    # linearly dependent partials give constant syzygies, i.e. exponent 0
    missing = n + 1 - len(f1)
    f2 = [s - (d - 1) for s in g.shifts_at(2)]
    if pd == 2:
        exps = tuple(sorted([0] * missing + f2))
        if len(exps) == n and sum(exps) == d - 1 and min(f2, default=1) >= 1:
            return FreenessVerdict("free", exps)
        return FreenessVerdict("neither", (), f"pd 2 but syzygy degrees {exps}")
    if pd == 3 and missing == 0:
        f3 = g.shifts_at(3)
        if len(f3) != 1 or len(f2) != n + 1:
            return FreenessVerdict("neither", (), f"pd 3 with F2 {f2} and F3 {f3}")
        dn = f3[0] - d
        rest = sorted(f2)
        if dn not in rest:
            return FreenessVerdict("neither", (), f"F3 shift {f3[0]} does not match F2")
        rest.remove(dn)
        exps = tuple(sorted(rest))
        if max(exps) == dn and sum(exps) == d and min(exps) >= 1:
            return FreenessVerdict("nearly free", exps)
        return FreenessVerdict("neither", (), f"pd 3 but exponents {exps}")
    return FreenessVerdict("neither", (), f"projective dimension {pd}")
