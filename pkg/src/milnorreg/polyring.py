"""Exact multivariate polynomial arithmetic over Q and prime fields.

Monomials are exponent tuples at the API surface.  Internally every term is
stored as a triple ``(key, packed, coeff)``:

* ``key`` is an integer whose natural order is the ring's monomial order.
  All supported orders are linear in the exponents, so the key of a product
  is the sum of the keys.
* ``packed`` holds the exponents in fixed-width bit fields with a guard bit
  per field, so multiplication is addition and divisibility is one
  subtraction and a mask test.

Terms of a :class:`Polynomial` are kept strictly decreasing by key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from operator import mul

DEFAULT_PRIME = 32003

EXP_BITS = 16
MAX_EXP = (1 << (EXP_BITS - 1)) - 1
KEY_BITS = 24


class RingMismatch(ValueError):
    """Operands live in different rings."""


class NotBihomogeneous(ValueError):
    """A polynomial has terms of more than one bidegree."""


class ZeroPolynomialError(ValueError):
    """An operation is undefined for the zero polynomial."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic == 0`` means Q, otherwise GF(p)."""

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not 0 or a prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, value):
        """Convert an int, Fraction or numeric string into a field element."""
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if p == 0:
            value = Fraction(value)
            return int(value) if value.denominator == 1 else value
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        r = 1 / Fraction(c)
        return int(r) if r.denominator == 1 else r

    def reducer(self):
        """A callable normalising raw integer/Fraction arithmetic results."""
        p = self.characteristic
        if p:
            return p.__rmod__
        return _normalize_rational

    def signed(self, c):
        """Representative used for printing: symmetric range for GF(p)."""
        p = self.characteristic
        if p and c > p // 2:
            return c - p
        return c

    def random_nonzero(self, rng: random.Random, bound: int = DEFAULT_PRIME):
        p = self.characteristic
        if p:
            return rng.randrange(1, p)
        return rng.choice((-1, 1)) * rng.randrange(1, bound)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


def _normalize_rational(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


QQ = FieldSpec(0)
GF32003 = FieldSpec(DEFAULT_PRIME)


def parse_field(text) -> FieldSpec:
    """Parse ``"QQ"``, ``"0"``, ``"32003"`` or ``"GF(32003)"``."""
    if isinstance(text, FieldSpec):
        return text
    s = str(text).strip().upper()
    if s in ("QQ", "Q", "0"):
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    return FieldSpec(int(s))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by an integer weight per variable.

    ``grevlex`` and ``lex`` are the usual orders with x0 > x1 > ... .
    ``elim`` with ``block=b`` is the product order grevlex(x0..x_{b-1}) then
    grevlex(x_b..): an elimination order for the first ``b`` variables.
    Module orders induced by a Schreyer frame are built on top of these keys
    in :mod:`milnorreg.resolution`.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def weights(self, nvars: int) -> tuple[int, ...]:
        if self.kind == "lex":
            return tuple(1 << (KEY_BITS * (nvars - 1 - i)) for i in range(nvars))
        if self.kind == "grevlex":
            return _grevlex_weights(nvars, 0)
        b = self.block
        if b >= nvars:
            raise ValueError("elimination block must leave some variables")
        low = _grevlex_weights(nvars - b, 0)
        high = _grevlex_weights(b, KEY_BITS * (nvars - b))
        return high + low

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


def _grevlex_weights(n: int, offset: int) -> tuple[int, ...]:
    # fields, most significant first: e_0+..+e_{n-1}, e_0+..+e_{n-2}, ..., e_0
    return tuple(sum(1 << (offset + KEY_BITS * j) for j in range(i, n)) for i in range(n))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class Ring:
    """Polynomial ring over a field with a monomial order and a grading.

    ``split`` turns on the bigrading: variables ``0..split-1`` form the first
    block.  ``grading`` gives integer degree weights used for homogeneity and
    pair selection (all ones by default).
    """

    def __init__(self, nvars, field=GF32003, order=GREVLEX, names=None, split=None, grading=None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if isinstance(order, str):
            order = MonomialOrder(order)
        self.nvars = nvars
        self.field = parse_field(field)
        self.order = order
        self.names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")
        if split is not None and not 0 < split < nvars:
            raise ValueError("bigrading split must be strictly inside the variable range")
        self.split = split
        self.grading = tuple(grading) if grading is not None else (1,) * nvars
        self._kw = order.weights(nvars)
        self._shifts = tuple(EXP_BITS * i for i in range(nvars))
        self._guard = sum(1 << (s + EXP_BITS - 1) for s in self._shifts)
        self._sig = (nvars, self.field, order, self.names, split, self.grading)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._sig == other._sig

    def __hash__(self):
        return hash(self._sig)

    def __repr__(self):
        grading = f", split={self.split}" if self.split else ""
        return f"Ring({self.nvars}, {self.field}, {self.order}{grading})"

    @property
    def is_bigraded(self) -> bool:
        return self.split is not None

    # -- monomial encoding -------------------------------------------------

    def key(self, exps) -> int:
        return sum(map(mul, exps, self._kw))

    def pack(self, exps) -> int:
        e = 0
        for x, s in zip(exps, self._shifts):
            if x < 0 or x > MAX_EXP:
                raise OverflowError(f"exponent {x} out of range")
            e |= x << s
        return e

    def unpack(self, e: int) -> tuple[int, ...]:
        return tuple((e >> s) & MAX_EXP for s in self._shifts)

    def divides(self, a: int, b: int) -> bool:
        """Packed-exponent divisibility ``a | b``."""
        g = self._guard
        return ((b | g) - a) & g == g

    def packed_degree(self, e: int) -> int:
        return sum(((e >> s) & MAX_EXP) * w for s, w in zip(self._shifts, self.grading))

    def packed_lcm(self, a: int, b: int) -> int:
        out = 0
        for s in self._shifts:
            x, y = (a >> s) & MAX_EXP, (b >> s) & MAX_EXP
            out |= (x if x > y else y) << s
        return out

    def packed_exponent(self, e: int, i: int) -> int:
        return (e >> self._shifts[i]) & MAX_EXP

    def packed_key(self, e: int) -> int:
        return self.key(self.unpack(e))

    def degree_of(self, exps) -> int:
        return sum(map(mul, exps, self.grading))

    def bidegree_of(self, exps) -> tuple[int, int]:
        b = self.split
        return (sum(exps[:b]), sum(exps[b:]))

    def shift_of(self, exps) -> tuple[int, ...]:
        """(Bi)degree tuple used for module shifts."""
        if self.split is None:
            return (self.degree_of(exps),)
        return self.bidegree_of(exps)

    # -- construction --------------------------------------------------------

    def term(self, exps, coeff=1):
        return (self.key(exps), self.pack(exps), coeff)

    def from_dict(self, data) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}``."""
        conv = self.field
        acc = {}
        for exps, c in data.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(f"monomial {exps} has wrong length")
            c = conv(c)
            if not c:
                continue
            k = self.key(exps)
            if k in acc:
                t = acc[k]
                acc[k] = (k, t[1], conv(t[2] + c))
            else:
                acc[k] = (k, self.pack(exps), c)
        return Polynomial._from_sorted(self, sorted((t for t in acc.values() if t[2]), reverse=True))

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return self.from_dict({tuple(exps): coeff})

    def constant(self, c) -> "Polynomial":
        return self.monomial((0,) * self.nvars, c)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial._from_sorted(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def var(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def monomials_of_degree(self, deg: int, nvars=None):
        """Exponent tuples of the given total degree, in descending order."""
        n = self.nvars if nvars is None else nvars
        out = list(_compositions(deg, n))
        out.sort(key=self.key, reverse=True)
        return out

    def parse(self, text: str) -> "Polynomial":
        from .grammar import parse_polynomial

        return parse_polynomial(text, self)

    def with_order(self, order) -> "Ring":
        return Ring(self.nvars, self.field, order, self.names, self.split, self.grading)

    def convert(self, p: "Polynomial") -> "Polynomial":
        """Re-express ``p`` (same variables and field) in this ring."""
        if p.ring == self:
            return p
        if p.ring.nvars != self.nvars or p.ring.field != self.field:
            raise RingMismatch("rings differ in variables or field")
        return self.from_dict(dict(p.terms()))


def _compositions(total, n):
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


class Polynomial:
    """Immutable polynomial; terms strictly decreasing in the ring's order."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, data=None):
        src = ring.from_dict(data or {})
        self.ring = ring
        self._terms = src._terms
        self._hash = None

    @classmethod
    def _from_sorted(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = tuple(terms)
        obj._hash = None
        return obj

    @classmethod
    def _from_acc(cls, ring, acc):
        """Build from a ``{key: [packed, coeff]}`` accumulator."""
        return cls._from_sorted(ring, sorted(((k, v[0], v[1]) for k, v in acc.items() if v[1]), reverse=True))

    # -- inspection --------------------------------------------------------

    def terms(self):
        """List of ``(exponent tuple, coefficient)`` in descending order."""
        unpack = self.ring.unpack
        return [(unpack(e), c) for _, e, c in self._terms]

    def monomials(self):
        unpack = self.ring.unpack
        return [unpack(e) for _, e, _ in self._terms]

    def coefficient(self, exps):
        k = self.ring.key(exps)
        for kk, _, c in self._terms:
            if kk == k:
                return c
        return 0

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.terms())

    @property
    def lead_exps(self):
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self.ring.unpack(self._terms[0][1])

    @property
    def lead_coeff(self):
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self._terms[0][2]

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][1] == 0)

    def degree(self) -> int:
        """Maximal weighted degree of a term (-1 for zero)."""
        ring = self.ring
        return max((ring.degree_of(m) for m in self.monomials()), default=-1)

    def is_homogeneous(self) -> bool:
        ring = self.ring
        return len({ring.degree_of(m) for m in self.monomials()}) <= 1

    def bidegree(self) -> tuple[int, int]:
        ring = self.ring
        if ring.split is None:
            raise RingMismatch("ring is not bigraded")
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no bidegree")
        degs = {ring.bidegree_of(m) for m in self.monomials()}
        if len(degs) != 1:
            raise NotBihomogeneous(f"terms of bidegrees {sorted(degs)}")
        return degs.pop()

    def is_bihomogeneous(self) -> bool:
        try:
            self.bidegree()
        except (NotBihomogeneous, ZeroPolynomialError):
            return False
        return True

    def shift(self) -> tuple[int, ...]:
        """(Bi)degree tuple of a (bi)homogeneous polynomial."""
        ring = self.ring
        if ring.split is not None:
            return self.bidegree()
        return (self.degree(),)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        return _combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return _combine(self, other, -1)

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        red = self.ring.field.reducer()
        return Polynomial._from_sorted(self.ring, [(k, e, red(-c)) for k, e, c in self._terms])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        red = self.ring.field.reducer()
        acc = {}
        get = acc.get
        for k2, e2, c2 in b:
            for k1, e1, c1 in a:
                k = k1 + k2
                ent = get(k)
                if ent is None:
                    acc[k] = [e1 + e2, c1 * c2]
                else:
                    ent[1] += c1 * c2
        for ent in acc.values():
            ent[1] = red(ent[1])
        return Polynomial._from_acc(self.ring, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field(c)
        if not c:
            return self.ring.zero
        red = field.reducer()
        return Polynomial._from_sorted(self.ring, [(k, e, red(x * c)) for k, e, x in self._terms])

    def mul_term(self, exps, coeff=1) -> "Polynomial":
        ring = self.ring
        coeff = ring.field(coeff)
        if not coeff:
            return ring.zero
        k0, e0 = ring.key(exps), ring.pack(exps)
        red = ring.field.reducer()
        return Polynomial._from_sorted(ring, [(k + k0, e + e0, red(c * coeff)) for k, e, c in self._terms])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self._terms[0][2]))

    def derivative(self, i: int) -> "Polynomial":
        ring = self.ring
        if not 0 <= i < ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        conv = ring.field
        unit = 1 << ring._shifts[i]
        kw = ring._kw[i]
        out = []
        for k, e, c in self._terms:
            a = (e >> ring._shifts[i]) & MAX_EXP
            if a == 0:
                continue
            c2 = conv(a * c)
            if c2:
                out.append((k - kw, e - unit, c2))
        return Polynomial._from_sorted(ring, out)

    def divexact(self, g: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if ``g`` does not divide."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        red = ring.field.reducer()
        inv = ring.field.inv(g._terms[0][2])
        gk, ge, _ = g._terms[0]
        tail = g._terms[1:]
        work = {k: [e, c] for k, e, c in self._terms}
        quot = []
        while work:
            k = max(work)
            e, c = work.pop(k)
            if not c:
                continue
            if not ring.divides(ge, e):
                raise ArithmeticError("division is not exact")
            q = red(c * inv)
            dk, de = k - gk, e - ge
            quot.append((dk, de, q))
            for kt, et, ct in tail:
                kk = kt + dk
                ent = work.get(kk)
                if ent is None:
                    work[kk] = [et + de, red(-q * ct)]
                else:
                    ent[1] = red(ent[1] - q * ct)
        return Polynomial._from_sorted(ring, quot)

    def substitute_vars(self, target: Ring, mapping) -> "Polynomial":
        """Rename variables: variable ``i`` goes to ``target`` variable ``mapping[i]``."""
        data = {}
        for exps, c in self.terms():
            new = [0] * target.nvars
            for i, a in enumerate(exps):
                if a:
                    new[mapping[i]] += a
            new = tuple(new)
            data[new] = data.get(new, 0) + c
        return target.from_dict(data)

    def coefficients_in(self, variables):
        """Split by monomials in ``variables``: ``{exps in those vars: Polynomial}``."""
        ring = self.ring
        variables = list(variables)
        groups = {}
        for exps, c in self.terms():
            outer = tuple(exps[v] for v in variables)
            inner = list(exps)
            for v in variables:
                inner[v] = 0
            groups.setdefault(outer, {})[tuple(inner)] = c
        return {k: ring.from_dict(v) for k, v in groups.items()}

    # -- comparison & display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._terms))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _combine(p: Polynomial, q: Polynomial, sign: int) -> Polynomial:
    red = p.ring.field.reducer()
    acc = {k: [e, c] for k, e, c in p._terms}
    for k, e, c in q._terms:
        ent = acc.get(k)
        if ent is None:
            acc[k] = [e, red(sign * c)]
        else:
            ent[1] = red(ent[1] + sign * c)
    return Polynomial._from_acc(p.ring, acc)


def format_polynomial(p: Polynomial) -> str:
    """Render in the text grammar, e.g. ``x0^3 + 2*x1*x2^2 - x3^3``."""
    if not p._terms:
        return "0"
    ring = p.ring
    names = ring.names
    pieces = []
    for exps, c in p.terms():
        c = ring.field.signed(c)
        neg = c < 0
        mag = -c if neg else c
        factors = [f"{names[i]}^{a}" if a > 1 else names[i] for i, a in enumerate(exps) if a]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


# -- module-level operations -------------------------------------------------


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.derivative(i)


def bidegree(p: Polynomial) -> tuple[int, int]:
    return p.bidegree()


def random_form(ring: Ring, degree: int, rng: random.Random, variables=None) -> Polynomial:
    """Dense homogeneous form with every coefficient a random nonzero element."""
    variables = list(range(ring.nvars)) if variables is None else list(variables)
    data = {}
    for sub in _compositions(degree, len(variables)):
        exps = [0] * ring.nvars
        for v, a in zip(variables, sub):
            exps[v] = a
        data[tuple(exps)] = ring.field.random_nonzero(rng)
    return ring.from_dict(data)


def bigraded_ring(field=GF32003) -> Ring:
    """k[x0,x1,x2,x3] bigraded by the blocks {x0,x1} and {x2,x3}."""
    return Ring(4, field, GREVLEX, split=2)


def random_bihomogeneous(k: int, m: int, seed: int, ring: Ring | None = None) -> Polynomial:
    """Dense form of bidegree ``(k, m)`` with seeded nonzero coefficients.

    Every monomial ``x0^a x1^(k-a) x2^c x3^(m-c)`` is present.
    """
    if k < 1 or m < 1:
        raise ValueError("bidegree components must be positive")
    ring = ring or bigraded_ring()
    if ring.nvars != 4 or ring.split != 2:
        raise ValueError("random_bihomogeneous needs the 2+2 bigraded ring")
    rng = random.Random(seed)
    data = {}
    for a in range(k, -1, -1):
        for c in range(m, -1, -1):
            data[(a, k - a, c, m - c)] = ring.field.random_nonzero(rng)
    return ring.from_dict(data)


def count_monomials(nvars: int, degree: int) -> int:
    return comb(degree + nvars - 1, nvars - 1) if degree >= 0 else 0
