"""Hilbert series, Hilbert function and Hilbert polynomial of graded quotients.

A series is stored as an integer numerator ``N(t)`` over ``(1-t)^nvars``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _shifted(a, k):
    return [0] * k + list(a)


# -- monomial ideals --------------------------------------------------------


def minimize_monomials(gens):
    """Minimal generators of a monomial ideal given by exponent tuples."""
    gens = sorted(set(map(tuple, gens)), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _numerator(gens, nvars):
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    support = [[i for i, a in enumerate(g) if a] for g in gens]
    seen = set()
    coprime = True
    for s in support:
        if seen.intersection(s):
            coprime = False
            break
        seen.update(s)
    if coprime:
        out = [1]
        for g in gens:
            out = poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    counts = [0] * nvars
    for s in support:
        for i in s:
            counts[i] += 1
    best = max(counts)
    v = counts.index(best)
    exps = sorted(g[v] for g in gens if g[v])
    e = exps[(len(exps) - 1) // 2]
    pivot = tuple(e if i == v else 0 for i in range(nvars))
    added = minimize_monomials([g for g in gens if g[v] < e] + [pivot])
    quot = minimize_monomials([tuple(max(a - e, 0) if i == v else a for i, a in enumerate(g)) for g in gens])
    return poly_add(_numerator(added, nvars), _shifted(_numerator(quot, nvars), e))


@dataclass(frozen=True)
class HilbertSeriesData:
    """Series ``numerator(t) / (1-t)^ambient_vars``."""

    numerator: tuple
    ambient_vars: int
    bigraded_numerator: dict | None = None

    def reduced(self):
        """``(Q, D)`` with ``numerator = Q(t) (1-t)^(ambient-D)`` and ``Q(1) != 0``."""
        q = list(self.numerator)
        dim = self.ambient_vars
        while q and sum(q) == 0 and dim > 0:
            # synthetic division by (1 - t)
            out = []
            acc = 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = _trim(out)
            dim -= 1
        return q, dim

    @property
    def krull_dimension(self) -> int:
        q, dim = self.reduced()
        return dim if q else -1

    def is_zero(self) -> bool:
        return not self.numerator


def hilbert_numerator(gens, nvars=None) -> HilbertSeriesData:
    """Numerator for ``S / (monomial ideal)``.

    ``gens`` may be exponent tuples, polynomials (their lead monomials are
    used) or an :class:`~milnorreg.groebner.Ideal` of monomials.
    """
    from .groebner import Ideal

    if isinstance(gens, Ideal):
        nvars = gens.ring.nvars
        gens = gens.generators
    tuples = []
    for g in gens:
        if hasattr(g, "lead_exps"):
            if len(g) != 1:
                raise ValueError(f"{g} is not a monomial")
            nvars = g.ring.nvars
            tuples.append(g.lead_exps)
        else:
            tuples.append(tuple(g))
    if nvars is None:
        if not tuples:
            raise ValueError("cannot infer the number of variables")
        nvars = len(tuples[0])
    num = _numerator(minimize_monomials(tuples), nvars)
    return HilbertSeriesData(tuple(num), nvars)


def quotient_series(I) -> HilbertSeriesData:
    """Series of ``S/I`` from the lead ideal of a Gröbner basis of ``I``."""
    G = I.groebner()
    return hilbert_numerator([g.lead_exps for g in G.elements], I.ring.nvars)


def series_from_shifts(shift_lists, nvars) -> HilbertSeriesData:
    """Series ``sum_i (-1)^i sum_j t^a_ij / (1-t)^nvars`` of a graded complex."""
    num = []
    for i, shifts in enumerate(shift_lists):
        sign = -1 if i % 2 else 1
        for a in shifts:
            num = poly_add(num, _shifted([sign], a))
    return HilbertSeriesData(tuple(num), nvars)


def hilbert_function_at(H: HilbertSeriesData, k: int) -> int:
    if k < 0:
        return 0
    n = H.ambient_vars
    return sum(c * comb(k - i + n - 1, n - 1) for i, c in enumerate(H.numerator) if i <= k)


def hilbert_function(H: HilbertSeriesData, upto: int):
    return [hilbert_function_at(H, k) for k in range(upto + 1)]


def series_coefficients(H: HilbertSeriesData, upto: int):
    return hilbert_function(H, upto)


@dataclass(frozen=True)
class HilbertPolynomialData:
    """P(k) as monomial coefficients (constant first) and in the basis C(k, j)."""

    monomial: tuple
    binomial: tuple

    def __call__(self, k):
        return sum(c * Fraction(k) ** i for i, c in enumerate(self.monomial))

    @property
    def degree(self) -> int:
        return len(self.monomial) - 1

    def is_zero(self) -> bool:
        return not self.monomial

    def __str__(self):
        if not self.monomial:
            return "0"
        parts = []
        for i in reversed(range(len(self.monomial))):
            c = self.monomial[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}{'*' + mono if mono else ''}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


def _binomial_poly(shift, r):
    """Monomial coefficients of k -> C(k - shift + r, r) as Fractions."""
    out = [Fraction(1)]
    for j in range(1, r + 1):
        # multiply by (k - shift + j) / j
        a = Fraction(j - shift, j)
        b = Fraction(1, j)
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c * a
            nxt[i + 1] += c * b
        out = nxt
    return out


def hilbert_polynomial(H: HilbertSeriesData) -> HilbertPolynomialData:
    q, dim = H.reduced()
    if not q or dim == 0:
        return HilbertPolynomialData((), ())
    coeffs = [Fraction(0)] * dim
    for i, c in enumerate(q):
        if c:
            for j, b in enumerate(_binomial_poly(i, dim - 1)):
                coeffs[j] += c * b
    mono = [int(c) if c.denominator == 1 else c for c in coeffs]
    mono = _trim(mono)
    # binomial basis C(k, j): forward differences at 0
    vals = [sum(c * Fraction(k) ** i for i, c in enumerate(mono)) for k in range(len(mono))]
    binom = []
    for _ in range(len(mono)):
        binom.append(vals[0])
        vals = [b - a for a, b in zip(vals, vals[1:])]
    binom = [int(c) if c.denominator == 1 else c for c in binom]
    return HilbertPolynomialData(tuple(mono), tuple(binom))


def stability_threshold(H: HilbertSeriesData):
    """Least q with HF(k) = HP(k) for all k >= q; ``None`` for the zero module."""
    q, dim = H.reduced()
    if not q:
        return None
    P = hilbert_polynomial(H)
    top = len(q) - 1 - dim
    for k in range(top, -dim - 2, -1):
        if hilbert_function_at(H, k) != P(k):
            return k + 1
    raise AssertionError("no disagreement found below the regularity index")


def hilbert_report(H: HilbertSeriesData, samples: int = 12) -> dict:
    """JSON fragment with HF samples, HP and st."""
    P = hilbert_polynomial(H)
    return {
        "hf_samples": hilbert_function(H, samples),
        "hp": {"monomial": [str(c) for c in P.monomial], "binomial": [str(c) for c in P.binomial], "text": str(P)},
        "st": stability_threshold(H),
    }
