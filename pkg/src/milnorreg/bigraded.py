"""Slices of the first syzygies of J_f for bihomogeneous f in k[x0,x1 ; x2,x3].

For f of bidegree (k, 2mu+1) the relations among f_0..f_3 of x2,x3-degree
eta form the kernel of a matrix over A = k[x0, x1] built from Sylvester
blocks.  Removing the multiples of the bi-Euler relation leaves a matrix
whose kernel M_eta is a free A-module.  The first nonzero M_eta detects the
minimal non-Euler first syzygy of J_f.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .groebner import Ideal
from .linalg import det_poly, nullspace_mod_p, rank_field, rank_mod_p
from .polyring import NotBihomogeneous, Polynomial, Ring
from .resolution import ModuleMap, betti_table, minimal_free_resolution, schreyer_syzygies


class GenericityFailure(RuntimeError):
    """A nonzero kernel turned up before the expected slice."""

    def __init__(self, message, eta=None):
        super().__init__(message)
        self.eta = eta


def slice_parameters(f: Polynomial):
    """(k, d, mu) of a bihomogeneous f with odd second degree."""
    ring = f.ring
    if ring.nvars != 4 or ring.split != 2:
        raise ValueError("f must live in the 2+2 bigraded ring")
    if not f.is_bihomogeneous():
        raise NotBihomogeneous(f"{f} is not bihomogeneous")
    k, m = f.bidegree()
    if m % 2 == 0:
        raise ValueError(f"second degree {m} must be odd")
    if k < 1:
        raise ValueError("first degree must be positive")
    return k, k + m, (m - 1) // 2


def base_ring(f: Polynomial) -> Ring:
    return Ring(2, f.ring.field)


def binary_coefficients(p: Polynomial, A: Ring, delta: int):
    """[c_0..c_delta] with p = sum_j x2^(delta-j) x3^j c_j(x0, x1), c_j in A."""
    groups = p.coefficients_in([2, 3])
    out = []
    for j in range(delta + 1):
        c = groups.get((delta - j, j))
        out.append(c.substitute_vars(A, [0, 1, 0, 1]) if c is not None else A.zero)
    return out


def h_coefficients(f: Polynomial):
    """h_0..h_{2mu+1} with f = sum_j x2^(2mu+1-j) x3^j h_j(x0, x1)."""
    k, d, mu = slice_parameters(f)
    return binary_coefficients(f, base_ring(f), 2 * mu + 1)


@dataclass
class SliceMatrix:
    """Matrix over A with rows x2^(eta-r) x3^r and labelled columns."""

    A: Ring
    eta: int
    k: int
    d: int
    mu: int
    columns: list  # list of {row: Polynomial in A}
    col_labels: list  # (partial index, (a, b)) meaning x2^a x3^b * f_i
    col_degrees: list  # A-degree of every entry in the column
    stripped: bool = False

    @property
    def nrows(self):
        return self.eta + 1

    @property
    def ncols(self):
        return len(self.columns)

    @property
    def row_labels(self):
        return [(self.eta - r, r) for r in range(self.eta + 1)]

    def entry(self, r, c):
        return self.columns[c].get(r, self.A.zero)

    def rows(self):
        return [[self.entry(r, c) for c in range(self.ncols)] for r in range(self.nrows)]

    def evaluate(self, point, p):
        """Numeric matrix at (x0, x1) = point over GF(p)."""
        M = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for c, col in enumerate(self.columns):
            for r, poly in col.items():
                M[r, c] = _eval(poly, point, p)
        return M

    def module_map(self) -> ModuleMap:
        return ModuleMap(self.A, self.columns, [(s,) for s in self.col_degrees], [(0,)] * self.nrows)


def _eval(poly, point, p):
    s = 0
    for (a, b), c in poly.terms():
        s = (s + int(c) * pow(point[0], a, p) * pow(point[1], b, p)) % p
    return s


def _sylvester(coeffs, eta, block, A):
    """Columns of multiplication by sum_j x2^(delta-j) x3^j coeffs[j] into degree eta."""
    delta = len(coeffs) - 1
    cols, labels = [], []
    for t in range(eta - delta + 1):
        col = {t + j: c for j, c in enumerate(coeffs) if c}
        cols.append(col)
        labels.append((block, (eta - delta - t, t)))
    return cols, labels


def slice_matrix(f: Polynomial, eta: int) -> SliceMatrix:
    """Sylvester blocks of the four partials in x2,x3-degree eta."""
    k, d, mu = slice_parameters(f)
    if eta < 0:
        raise ValueError("eta must be nonnegative")
    A = base_ring(f)
    cols, labels, degs = [], [], []
    for i in range(4):
        delta = 2 * mu + 1 if i < 2 else 2 * mu
        coeffs = binary_coefficients(f.derivative(i), A, delta)
        c, lab = _sylvester(coeffs, eta, i, A)
        cols += c
        labels += lab
        degs += [k - 1 if i < 2 else k] * len(c)
    return SliceMatrix(A, eta, k, d, mu, cols, labels, degs)


def strip_bieuler(M: SliceMatrix) -> SliceMatrix:
    """Drop the f_3 columns that carry bi-Euler multiples, keeping x2^(eta-2mu) f_3."""
    if M.stripped:
        raise ValueError("already stripped")
    if M.eta <= 2 * M.mu:
        raise ValueError("nothing to strip for eta <= 2mu")
    keep = [c for c, (i, (a, b)) in enumerate(M.col_labels) if i < 3 or b == 0]
    return SliceMatrix(
        M.A, M.eta, M.k, M.d, M.mu,
        [M.columns[c] for c in keep], [M.col_labels[c] for c in keep], [M.col_degrees[c] for c in keep],
        stripped=True,
    )


def kernel_matrix(f: Polynomial, eta: int) -> SliceMatrix:
    """The matrix whose kernel is M_eta (stripped when bi-Euler multiples exist)."""
    M = slice_matrix(f, eta)
    return strip_bieuler(M) if eta > 2 * M.mu else M


# -- kernels ------------------------------------------------------------------------


@dataclass
class SliceKernel:
    """Free A-module: generators as (degree, [A-polynomial per column])."""

    generators: list
    rank: int
    method: str
    dims: dict = field(default_factory=dict)

    @property
    def degrees(self):
        return sorted(deg for deg, _ in self.generators)

    def is_zero(self) -> bool:
        return self.rank == 0


def _prime(M: SliceMatrix):
    p = M.A.field.characteristic
    if not p:
        raise ValueError("the linear route needs a prime field")
    return p


def generic_rank(M: SliceMatrix, seed=0, tries=2) -> int:
    """Rank over the fraction field, as the max of ranks at random points."""
    if M.ncols == 0:
        return 0
    p = _prime(M)
    rng = random.Random(seed)
    best = 0
    for _ in range(tries):
        pt = (rng.randrange(1, p), rng.randrange(1, p))
        best = max(best, rank_mod_p(M.evaluate(pt, p), p))
        if best == min(M.nrows, M.ncols):
            break
    return best


def graded_system(M: SliceMatrix, U: int):
    """Coefficient matrix of sum_c M[r][c] a_c = 0 with deg(entry * a_c) = U.

    Unknowns are ordered (i, c) for the coefficient of x0^(U-deg_c-i) x1^i in
    a_c and equations (j, r), which keeps the matrix banded.
    Returns ``(matrix, unknowns)`` with ``unknowns[k] = (c, i)``.
    """
    p = _prime(M)
    R, C = M.nrows, M.ncols
    unknowns, index = [], {}
    for i in range(U + 1):
        for c in range(C):
            if i <= U - M.col_degrees[c]:
                index[(c, i)] = len(unknowns)
                unknowns.append((c, i))
    mat = np.zeros(((U + 1) * R, len(unknowns)), dtype=np.int64)
    for c, col in enumerate(M.columns):
        top = U - M.col_degrees[c]
        if top < 0:
            continue
        for r, poly in col.items():
            for (a, s), coef in poly.terms():
                v = int(coef) % p
                for i in range(top + 1):
                    mat[(i + s) * R + r, index[(c, i)]] = v
    return mat, unknowns


def kernel_dimension(M: SliceMatrix, U: int) -> int:
    if U < min(M.col_degrees, default=0):
        return 0
    mat, unknowns = graded_system(M, U)
    if not unknowns:
        return 0
    return len(unknowns) - rank_mod_p(mat, _prime(M))


def _kernel_vectors(M: SliceMatrix, U: int):
    mat, unknowns = graded_system(M, U)
    p = _prime(M)
    vecs = []
    for x in nullspace_mod_p(mat, p):
        cols = [dict() for _ in range(M.ncols)]
        for val, (c, i) in zip(x, unknowns):
            if val:
                cols[c][(U - M.col_degrees[c] - i, i)] = int(val)
        vecs.append([M.A.from_dict(d) for d in cols])
    return vecs


def _linear_kernel(M: SliceMatrix, seed=0, max_degree=None) -> SliceKernel:
    rho = M.ncols - generic_rank(M, seed)
    if rho == 0:
        return SliceKernel([], 0, "linear")
    dims = {}
    gens = []
    if rho == 1 and M.ncols == M.nrows + 1:
        # Cramer: the maximal minors give a kernel vector of degree sum(col_degrees)
        U0 = sum(M.col_degrees)
        dims[U0] = kernel_dimension(M, U0)
        e = U0 + 1 - dims[U0]
        dims[e] = kernel_dimension(M, e)
        dims[e - 1] = kernel_dimension(M, e - 1)
        if dims[e] != 1 or dims[e - 1] != 0:
            raise AssertionError(f"kernel dimensions {dims} do not fit a rank-one free module")
        return SliceKernel([(e, _kernel_vectors(M, e)[0])], 1, "linear", dims)
    # general case: second differences of dim K_U count new generators
    U = min(M.col_degrees)
    limit = max_degree if max_degree is not None else sum(sorted(M.col_degrees)[-M.nrows:]) + 1
    prev2 = prev1 = 0
    found = 0
    while found < rho:
        if U > limit:
            raise AssertionError("kernel generators not found below the degree bound")
        cur = kernel_dimension(M, U)
        dims[U] = cur
        new = cur - 2 * prev1 + prev2
        if new:
            vecs = _kernel_vectors(M, U)
            gens += [(U, v) for v in _independent_new(M, gens, vecs, U, new)]
            found += new
        prev2, prev1 = prev1, cur
        U += 1
    return SliceKernel(gens, rho, "linear", dims)


def _independent_new(M, gens, vecs, U, count):
    """Pick ``count`` vectors of degree U outside the span of A-multiples of ``gens``."""
    A = M.A
    span = []
    for deg, g in gens:
        for s in range(U - deg + 1):
            span.append([q.mul_term((U - deg - s, s)) for q in g])
    out = []

    def flat(v):
        row = []
        for c, q in enumerate(v):
            row += [q.coefficient((U - M.col_degrees[c] - i, i)) for i in range(U - M.col_degrees[c] + 1)]
        return row

    base = [flat(v) for v in span]
    r = rank_field(base, A.field) if base else 0
    for v in vecs:
        cand = base + [flat(v)]
        r2 = rank_field(cand, A.field)
        if r2 > r:
            base, r = cand, r2
            out.append(v)
            if len(out) == count:
                break
    return out


def _syzygy_kernel(M: SliceMatrix) -> SliceKernel:
    if M.ncols == 0:
        return SliceKernel([], 0, "syzygy")
    S = schreyer_syzygies(M.module_map())
    gens = [(S.source_shifts[c][0], [col.get(j, M.A.zero) for j in range(M.ncols)]) for c, col in enumerate(S.columns)]
    return SliceKernel(gens, len(gens), "syzygy")


def slice_kernel(M: SliceMatrix, method="linear", seed=0) -> SliceKernel:
    """Kernel of M as a graded A-module.

    ``linear`` solves the graded pieces by elimination over GF(p);
    ``syzygy`` runs the module Gröbner engine over A.
    """
    if method == "linear":
        return _linear_kernel(M, seed)
    if method == "syzygy":
        return _syzygy_kernel(M)
    raise ValueError(f"unknown method {method!r}")


def kernel_is_syzygy(M: SliceMatrix, vec) -> bool:
    for r in range(M.nrows):
        acc = M.A.zero
        for c, q in enumerate(vec):
            if q:
                acc = acc + M.entry(r, c) * q
        if acc:
            return False
    return True


# -- genericity ------------------------------------------------------------------------


@dataclass
class Certificate:
    passed: bool
    witness: str | None
    factors: dict
    selected_minor_nonzero: bool | None = None


def _selected_rows(eta, mu):
    top = list(range(eta - 2 * mu))
    delta_rows = list(range(eta - 2 * mu, 2 * eta - 4 * mu + 1))
    bottom = list(range(2 * mu + 1, eta + 1))
    return top, delta_rows, bottom


def delta_minor(f: Polynomial, eta: int) -> Polynomial:
    """Top (eta-2mu+1)-square minor of the f_2 block on the rows between the f_0 and f_1 minors."""
    k, d, mu = slice_parameters(f)
    if not 2 * mu + 1 <= eta <= 3 * mu:
        raise ValueError(f"eta must lie in [2mu+1, 3mu] = [{2 * mu + 1}, {3 * mu}]")
    M = kernel_matrix(f, eta)
    _, rows, _ = _selected_rows(eta, mu)
    cols = [c for c, (i, _) in enumerate(M.col_labels) if i == 2]
    return det_poly([[M.entry(r, c) for c in cols] for r in rows])


def genericity_certificate(f: Polynomial, eta=None, seed=0) -> Certificate:
    """Nonvanishing of h_{2mu+1}, d/dx0 h_0, d/dx1 h_{2mu+1} and Delta.

    Also evaluates the selected maximal minor at a random point, which is a
    direct certificate that the stripped matrix has the expected rank.
    """
    k, d, mu = slice_parameters(f)
    eta = 3 * mu if eta is None else eta
    if not 2 * mu + 1 <= eta <= 3 * mu:
        raise ValueError(f"eta must lie in [2mu+1, 3mu] = [{2 * mu + 1}, {3 * mu}]")
    h = h_coefficients(f)
    factors = {
        "h_{2mu+1}": h[2 * mu + 1],
        "d/dx0 h_0": h[0].derivative(0),
        "d/dx1 h_{2mu+1}": h[2 * mu + 1].derivative(1),
        "Delta": delta_minor(f, eta),
    }
    witness = next((name for name, p in factors.items() if not p), None)
    M = kernel_matrix(f, eta)
    top, mid, bottom = _selected_rows(eta, mu)
    if eta < 3 * mu:
        rows = top + mid + [2 * mu] + bottom
        cols = list(range(M.ncols))
    else:
        rows = top + mid + bottom
        cols = [c for c, (i, _) in enumerate(M.col_labels) if i < 3]
    minor_ok = None
    p = M.A.field.characteristic
    if p and len(rows) == len(cols):
        rng = random.Random(seed)
        pt = (rng.randrange(1, p), rng.randrange(1, p))
        sub = M.evaluate(pt, p)[np.ix_(rows, cols)]
        minor_ok = rank_mod_p(sub, p) == len(rows)
    return Certificate(witness is None, witness, {n: str(q) for n, q in factors.items()}, minor_ok)


# -- minimal syzygy search ---------------------------------------------------------------


def closed_form_bidegree(k: int, d: int):
    """(2k, 0) + ((d-k-1)/2) (3k-2, 3)."""
    mu = (d - k - 1) // 2
    return (2 * k + mu * (3 * k - 2), 3 * mu)


@dataclass
class SyzygySearch:
    k: int
    d: int
    e: int
    eta: int
    generator: list
    method: str
    closed_form: tuple
    zero_slices: list

    @property
    def bidegree(self):
        return (self.e, self.eta)

    @property
    def total_degree(self):
        return self.e + self.eta

    @property
    def regularity_lower_bound(self):
        return self.total_degree - 2

    @property
    def matches_closed_form(self):
        return self.bidegree == self.closed_form

    @property
    def expected_rank_condition(self):
        return 2 * self.eta == 3 * (self.d - self.k - 1)

    def to_json(self):
        return {
            "k": self.k,
            "d": self.d,
            "bidegree": list(self.bidegree),
            "total_degree": self.total_degree,
            "closed_form": list(self.closed_form),
            "matches_closed_form": self.matches_closed_form,
            "regularity_lower_bound": self.regularity_lower_bound,
            "method": self.method,
        }


def minimal_syzygy_search(f: Polynomial, method="linear", seed=0, eta_max=None) -> SyzygySearch:
    """First eta with M_eta != 0, and the degree of its generator."""
    k, d, mu = slice_parameters(f)
    eta_max = 3 * mu + 2 if eta_max is None else eta_max
    zero = []
    for eta in range(eta_max + 1):
        M = kernel_matrix(f, eta)
        K = slice_kernel(M, method, seed)
        if K.is_zero():
            zero.append(eta)
            continue
        if eta != 3 * mu or K.rank != 1:
            raise GenericityFailure(f"kernel of rank {K.rank} at eta={eta}", eta)
        e, vec = K.generators[0]
        if not kernel_is_syzygy(M, vec):
            raise AssertionError("kernel generator does not annihilate the slice matrix")
        return SyzygySearch(k, d, e, eta, vec, method, closed_form_bidegree(k, d), zero)
    raise GenericityFailure(f"no nonzero slice kernel up to eta={eta_max}", None)


def bi_euler_vector(f: Polynomial):
    """((d-k)x0, (d-k)x1, -k x2, -k x3)."""
    k, m = f.bidegree()
    x = f.ring.gens
    return [x[0].scale(m), x[1].scale(m), x[2].scale(-k), x[3].scale(-k)]


def resolution_first_syzygy_bidegrees(f: Polynomial, second_cap=None, degree_cap=None):
    """Bidegrees of minimal first syzygies of J_f with second component <= second_cap.

    Computed from a truncated Schreyer resolution of S/J_f, minimalised.
    """
    k, d, mu = slice_parameters(f)
    second_cap = 3 * mu if second_cap is None else second_cap
    J = Ideal(f.ring, [f.derivative(i) for i in range(4)])
    R = minimal_free_resolution(J, length_cap=2, degree_cap=degree_cap, second_cap=second_cap)
    B = betti_table(R)
    out = {}
    for (i, s), v in B.entries.items():
        if i == 2 and s[1] <= second_cap:
            out[s] = out.get(s, 0) + v
    return out
