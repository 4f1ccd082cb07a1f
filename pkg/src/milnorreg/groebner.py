"""Gröbner bases, normal forms and ideal operations.

The engine works on raw term tuples ``(key, packed, coeff)``.  For ideals
the key is the ring's monomial key.  For submodules of a free module the
key of ``m * e_i`` is ``K(m) * space.scale + space.base[i]``; a
:class:`KeySpace` describes that encoding, which covers both the
term-over-position order used for arbitrary module maps and the
Schreyer orders built in :mod:`milnorreg.resolution`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .polyring import Polynomial, Ring, RingMismatch, MonomialOrder


@dataclass
class KeySpace:
    """Integer encoding of module monomials ``m * e_i``.

    ``base[i] % modulus`` is a rank unique to component ``i``; components
    with a larger rank win ties.  ``shifts[i]`` is the (bi)degree of
    ``e_i``.
    """

    modulus: int
    scale: int
    base: list
    shifts: list
    rank_to_comp: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.rank_to_comp:
            self.rank_to_comp = {b % self.modulus: i for i, b in enumerate(self.base)}

    def comp(self, mk: int) -> int:
        if self.modulus == 1:
            return 0
        return self.rank_to_comp[mk % self.modulus]

    def mult_key(self, mk: int, comp: int) -> int:
        return (mk - self.base[comp]) // self.scale

    @classmethod
    def ideal(cls, ring=None):
        return cls(1, 1, [0], [zero_shift(ring)])

    @classmethod
    def position_over_terms(cls, shifts):
        """Term-over-position order with ``e_0 > e_1 > ...`` on ties."""
        r = len(shifts)
        return cls(r, r, [r - 1 - i for i in range(r)], [tuple(s) for s in shifts])


def zero_shift(ring=None):
    return (0, 0) if ring is not None and ring.split is not None else (0,)


def add_shift(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Reducer:
    """A growing list of monic elements used as reducers."""

    def __init__(self, ring: Ring, space: KeySpace):
        self.ring = ring
        self.space = space
        self.elems = []
        self.leads = {}  # comp -> list of (packed lead, index)
        self._memo = {}  # (comp, packed) -> (index or -1, number checked)
        self.red = ring.field.reducer()

    def add(self, terms) -> int:
        idx = len(self.elems)
        self.elems.append(terms)
        mk, e, _ = terms[0]
        self.leads.setdefault(self.space.comp(mk), []).append((e, idx))
        return idx

    def find(self, comp, e):
        lst = self.leads.get(comp)
        if not lst:
            return -1
        key = (comp, e)
        hit = self._memo.get(key)
        start = 0
        if hit is not None:
            if hit[0] >= 0:
                return hit[0]
            start = hit[1]
            if start == len(lst):
                return -1
        g = self.ring._guard
        for pos in range(start, len(lst)):
            le, idx = lst[pos]
            if ((e | g) - le) & g == g:
                self._memo[key] = (idx, pos)
                return idx
        self._memo[key] = (-1, len(lst))
        return -1

    def reduce(self, terms, full=True, quotients=None, skip=-1):
        """Normal form of ``terms``; quotients appended as ``(idx, dk, de, q)``."""
        red = self.red
        space = self.space
        modulus = space.modulus
        comp_of = space.rank_to_comp
        elems = self.elems
        find = self.find
        acc = {}
        heap = []
        for k, e, c in terms:
            acc[k] = [e, c]
            heap.append(-k)
        heapq.heapify(heap)
        out = []
        while heap:
            k = -heapq.heappop(heap)
            e, c = acc.pop(k)
            if not c:
                continue
            comp = comp_of[k % modulus] if modulus > 1 else 0
            idx = find(comp, e)
            if idx == skip and idx >= 0:
                idx = self._find_other(comp, e, skip)
            if idx < 0:
                out.append((k, e, c))
                if not full:
                    while heap:
                        k2 = -heapq.heappop(heap)
                        e2, c2 = acc.pop(k2)
                        if c2:
                            out.append((k2, e2, c2))
                    break
                continue
            g = elems[idx]
            gk, ge, _ = g[0]
            dk, de = k - gk, e - ge
            if quotients is not None:
                quotients.append((idx, dk, de, c))
            for tk, te, tc in g[1:]:
                nk = tk + dk
                ent = acc.get(nk)
                if ent is None:
                    acc[nk] = [te + de, red(-c * tc)]
                    heapq.heappush(heap, -nk)
                else:
                    ent[1] = red(ent[1] - c * tc)
        return tuple(out)

    def _find_other(self, comp, e, skip):
        g = self.ring._guard
        for le, idx in self.leads.get(comp, ()):
            if idx != skip and ((e | g) - le) & g == g:
                return idx
        return -1


def make_monic(terms, field):
    if not terms:
        return terms
    c0 = terms[0][2]
    if c0 == 1:
        return terms
    inv = field.inv(c0)
    red = field.reducer()
    return tuple((k, e, red(c * inv)) for k, e, c in terms)


def shift_terms(terms, dk, de, c, red):
    return [(k + dk, e + de, red(x * c)) for k, e, x in terms]


def combine_terms(parts, red):
    """Sum several term lists; result sorted descending, zeros removed."""
    acc = {}
    for part in parts:
        for k, e, c in part:
            ent = acc.get(k)
            if ent is None:
                acc[k] = [e, c]
            else:
                ent[1] = red(ent[1] + c)
    return tuple(sorted(((k, v[0], v[1]) for k, v in acc.items() if v[1]), reverse=True))


class DegreeCap:
    """Truncation predicate on (bi)degree tuples; ``None`` means no bound."""

    def __init__(self, total=None, second=None):
        self.total = total
        self.second = second

    def allows(self, shift) -> bool:
        if self.total is not None and sum(shift) > self.total:
            return False
        if self.second is not None and len(shift) > 1 and shift[1] > self.second:
            return False
        return True

    @property
    def active(self) -> bool:
        return self.total is not None or self.second is not None


NO_CAP = DegreeCap()


def term_shift(ring: Ring, space: KeySpace, k: int, e: int):
    comp = space.comp(k)
    return add_shift(space.shifts[comp], ring.shift_of(ring.unpack(e)))


def _select_degree(shift):
    return sum(shift)


def buchberger_terms(ring: Ring, space: KeySpace, inputs, cap=NO_CAP, track=False):
    """Gröbner basis of the submodule generated by ``inputs`` (term tuples).

    Returns ``(basis, cofactors)``: the reduced basis as monic term tuples
    sorted by lead descending, and, when ``track`` is set, for each basis
    element a dict ``input index -> Polynomial`` expressing it through the
    inputs (multipliers live in ``ring``).
    """
    field_ = ring.field
    red = field_.reducer()
    reducer = Reducer(ring, space)
    is_ideal = space.modulus == 1
    cofs = []
    items = []  # heap of (degree, kind, a, b)
    for i, t in enumerate(inputs):
        if t:
            sh = term_shift(ring, space, t[0][0], t[0][1])
            if cap.allows(sh):
                items.append((_select_degree(sh), 0, i, 0))
    heapq.heapify(items)
    active = []  # indices into reducer.elems usable for new pairs
    pairs_live = set()
    lcm_of = {}
    unit = None

    def lead(i):
        return reducer.elems[i][0]

    def comp(i):
        return space.comp(lead(i)[0])

    def disjoint(a, b):
        ea, eb = lead(a)[1], lead(b)[1]
        return ring.packed_lcm(ea, eb) == ea + eb

    def divides(a, b):
        return ring.divides(a, b)

    def add_element(terms, cof):
        nonlocal unit
        h = reducer.add(terms)
        cofs.append(cof)
        if is_ideal and terms[0][1] == 0:
            unit = h
        hc, he = comp(h), lead(h)[1]
        cands = [g for g in active if comp(g) == hc]
        lcms = {g: ring.packed_lcm(lead(g)[1], he) for g in cands}
        # Gebauer-Moeller: criterion on new pairs
        kept = []
        cset = list(cands)
        for pos, g in enumerate(cset):
            lg = lcms[g]
            if is_ideal and disjoint(g, h):
                kept.append(g)
                continue
            dominated = False
            for g2 in cset[pos + 1:]:
                if divides(lcms[g2], lg):
                    dominated = True
                    break
            if not dominated:
                for g2 in kept:
                    if divides(lcms[g2], lg):
                        dominated = True
                        break
            if not dominated:
                kept.append(g)
        new_pairs = [g for g in kept if not (is_ideal and disjoint(g, h))]
        # old pairs made redundant by h
        dead = []
        for pr in pairs_live:
            a, b = pr
            if comp(a) != hc:
                continue
            l = lcm_of[pr]
            if divides(he, l):
                if ring.packed_lcm(lead(a)[1], he) != l and ring.packed_lcm(lead(b)[1], he) != l:
                    dead.append(pr)
        for pr in dead:
            pairs_live.discard(pr)
        for g in new_pairs:
            pr = (g, h)
            l = lcms[g]
            sh = add_shift(space.shifts[hc], ring.shift_of(ring.unpack(l)))
            if not cap.allows(sh):
                continue
            pairs_live.add(pr)
            lcm_of[pr] = l
            heapq.heappush(items, (_select_degree(sh), 1, g, h))
        active[:] = [g for g in active if not (comp(g) == hc and divides(he, lead(g)[1]))]
        active.append(h)

    while items and unit is None:
        _, kind, a, b = heapq.heappop(items)
        quot = [] if track else None
        if kind == 0:
            raw = inputs[a]
            nf = reducer.reduce(raw, quotients=quot)
            base_cof = {a: (ring.one,)} if track else None
        else:
            pr = (a, b)
            if pr not in pairs_live:
                continue
            pairs_live.discard(pr)
            l = lcm_of.pop(pr)
            ga, gb = reducer.elems[a], reducer.elems[b]
            la, lb = ga[0], gb[0]
            ka = ring.packed_key(l - la[1])
            kb = ring.packed_key(l - lb[1])
            ska, skb = ka * space.scale, kb * space.scale
            spoly = combine_terms(
                [shift_terms(ga, ska, l - la[1], 1, red), shift_terms(gb, skb, l - lb[1], -1, red)], red
            )
            nf = reducer.reduce(spoly, quotients=quot)
            base_cof = {"pair": (a, ka, l - la[1], b, kb, l - lb[1])} if track else None
        if not nf:
            continue
        c0 = nf[0][2]
        nf = make_monic(nf, field_)
        cof = None
        if track:
            cof = _cofactor(ring, space, cofs, base_cof, quot, field_.inv(c0))
        add_element(nf, cof)

    if unit is not None:
        one = ((0, 0, 1),)
        return [one], ([cofs[unit]] if track else None)

    # minimal basis, then interreduce
    order = sorted(active, key=lambda i: lead(i)[0], reverse=True)
    final = Reducer(ring, space)
    chosen = []
    for i in order:
        final.add(reducer.elems[i])
        chosen.append(i)
    basis = []
    out_cofs = []
    for pos, i in enumerate(chosen):
        terms = reducer.elems[i]
        quot = [] if track else None
        tail = final.reduce(terms[1:], quotients=quot, skip=pos) if len(terms) > 1 else ()
        basis.append((terms[0],) + tail)
        if track:
            cof = dict(cofs[i])
            for idx, dk, de, q in quot:
                mult = _mono(ring, space, dk, de, -q)
                for j, p in cofs[chosen[idx]].items():
                    cof[j] = _padd(cof.get(j), _pmul_mono(p, mult))
            out_cofs.append({j: p for j, p in cof.items() if p})
    return basis, (out_cofs if track else None)


def _mono(ring, space, dk, de, c):
    return (dk // space.scale, de, ring.field(c))


def _pmul_mono(p, mono):
    k0, e0, c0 = mono
    ring = p.ring
    red = ring.field.reducer()
    return Polynomial._from_sorted(ring, [(k + k0, e + e0, red(c * c0)) for k, e, c in p._terms])


def _padd(a, b):
    if a is None:
        return b
    return a + b


def _cofactor(ring, space, cofs, base, quot, scale):
    red = ring.field.reducer()
    out = {}
    if "pair" in base:
        a, ka, ea, b, kb, eb = base["pair"]
        for j, p in cofs[a].items():
            out[j] = _padd(out.get(j), _pmul_mono(p, (ka, ea, 1)))
        for j, p in cofs[b].items():
            out[j] = _padd(out.get(j), _pmul_mono(p, (kb, eb, red(-1))))
    else:
        for j, (p,) in base.items():
            out[j] = p
    for idx, dk, de, q in quot:
        mult = _mono(ring, space, dk, de, -q)
        for j, p in cofs[idx].items():
            out[j] = _padd(out.get(j), _pmul_mono(p, mult))
    return {j: p.scale(scale) for j, p in out.items() if p}


# -- public ideal layer -----------------------------------------------------


class GroebnerBasis:
    """Reduced, monic Gröbner basis sorted by lead monomial, descending."""

    def __init__(self, ring: Ring, elements):
        self.ring = ring
        self.elements = tuple(elements)
        self.order = ring.order
        self._reducer = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and bool(self.elements[0])

    def reducer(self) -> Reducer:
        if self._reducer is None:
            r = Reducer(self.ring, KeySpace.ideal(self.ring))
            for g in self.elements:
                r.add(g._terms)
            self._reducer = r
        return self._reducer

    def lead_exponents(self):
        return [g.lead_exps for g in self.elements]

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)


class Ideal:
    """Ideal given by generators; the Gröbner basis is cached per order."""

    def __init__(self, ring: Ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.parse(g) if isinstance(g, str) else ring.constant(g)
            if g.ring != ring:
                raise RingMismatch("generator from another ring")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def groebner(self, cap=NO_CAP) -> GroebnerBasis:
        if cap.active:
            return buchberger(self, cap=cap)
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def contains(self, p: Polynomial) -> bool:
        return not normal_form(p, self.groebner())

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self):
        return hash(self.groebner())

    def is_unit(self) -> bool:
        return self.groebner().is_unit

    def is_zero(self) -> bool:
        return not self.generators


def buchberger(I: Ideal, order=None, cap=NO_CAP) -> GroebnerBasis:
    """Reduced Gröbner basis of ``I`` (in ``order`` if given)."""
    ring = I.ring
    gens = I.generators
    if order is not None:
        if isinstance(order, str):
            order = MonomialOrder(order)
        ring = ring.with_order(order)
        gens = [ring.convert(g) for g in gens]
    if not gens:
        return GroebnerBasis(ring, [])
    basis, _ = buchberger_terms(ring, KeySpace.ideal(ring), [g._terms for g in gens], cap=cap)
    return GroebnerBasis(ring, [Polynomial._from_sorted(ring, t) for t in basis])


def groebner_with_cofactors(I: Ideal):
    """Reduced GB plus, per element, its expression in the generators."""
    ring = I.ring
    basis, cofs = buchberger_terms(ring, KeySpace.ideal(ring), [g._terms for g in I.generators], track=True)
    G = GroebnerBasis(ring, [Polynomial._from_sorted(ring, t) for t in basis])
    return G, cofs


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.ring != G.ring:
        raise RingMismatch("polynomial and basis live in different rings")
    if not p:
        return p
    return Polynomial._from_sorted(p.ring, G.reducer().reduce(p._terms))


def divide(p: Polynomial, G: GroebnerBasis):
    """Return ``(quotients, remainder)`` with ``p = sum q_i G_i + r``."""
    ring = p.ring
    quot = []
    r = G.reducer().reduce(p._terms, quotients=quot)
    acc = [dict() for _ in G.elements]
    red = ring.field.reducer()
    for idx, dk, de, c in quot:
        ent = acc[idx].get(dk)
        if ent is None:
            acc[idx][dk] = [de, c]
        else:
            ent[1] = red(ent[1] + c)
    qs = [Polynomial._from_acc(ring, a) for a in acc]
    return qs, Polynomial._from_sorted(ring, r)


def lead_ideal(G: GroebnerBasis) -> Ideal:
    ring = G.ring
    return Ideal(ring, [ring.monomial(g.lead_exps) for g in G.elements])


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    a, b = f.lead_exps, g.lead_exps
    l = tuple(max(x, y) for x, y in zip(a, b))
    ma = tuple(x - y for x, y in zip(l, a))
    mb = tuple(x - y for x, y in zip(l, b))
    fi, gi = ring.field.inv(f.lead_coeff), ring.field.inv(g.lead_coeff)
    return f.mul_term(ma, fi) - g.mul_term(mb, gi)


def is_groebner(G: GroebnerBasis) -> bool:
    """Buchberger's criterion checked directly on all pairs."""
    els = G.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if normal_form(s_polynomial(els[i], els[j]), G):
                return False
    return True


# -- ideal operations ---------------------------------------------------------


def _elimination_ring(ring: Ring) -> Ring:
    return Ring(
        ring.nvars + 1,
        ring.field,
        MonomialOrder("elim", 1),
        names=("_t",) + ring.names,
        grading=(0,) + ring.grading,
    )


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1-t)*J."""
    ring = I.ring
    if J.ring != ring:
        raise RingMismatch("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    big = _elimination_ring(ring)
    up = list(range(1, ring.nvars + 1))
    t = big.var(0)
    gens = [t * g.substitute_vars(big, up) for g in I.generators]
    gens += [(1 - t) * g.substitute_vars(big, up) for g in J.generators]
    G = buchberger(Ideal(big, gens))
    out = []
    for g in G.elements:
        if all(m[0] == 0 for m in g.monomials()):
            data = {}
            for exps, c in g.terms():
                data[exps[1:]] = c
            out.append(ring.from_dict(data))
    return Ideal(ring, out)


def colon_by_poly(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g) computed as (I ∩ (g)) / g."""
    if not g:
        raise ZeroDivisionError("colon by the zero polynomial")
    ring = I.ring
    if g.is_constant():
        return Ideal(ring, I.generators)
    inter = intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [h.divexact(g) for h in inter.generators])


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of (I : g) over generators g of J."""
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.generators:
        part = colon_by_poly(I, g)
        if result is None or result.is_unit():
            result = part
        elif not part.is_unit():
            result = intersect(result, part)
    return Ideal(I.ring, result.groebner().elements)


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens)


def saturate_irrelevant(I: Ideal) -> Ideal:
    """Stable value of I ⊆ (I:m) ⊆ (I:m^2) ⊆ ... ."""
    ring = I.ring
    m = irrelevant_ideal(ring)
    current = Ideal(ring, I.groebner().elements)
    while True:
        if current.is_unit():
            return current
        nxt = colon_ideal(current, m)
        if nxt.groebner() == current.groebner():
            return current
        current = nxt


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """Whether J ⊆ I."""
    G = I.groebner()
    return all(not normal_form(g, G) for g in J.generators)
