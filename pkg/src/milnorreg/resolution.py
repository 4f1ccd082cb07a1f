"""Graded free resolutions, syzygies and Betti tables.

A resolution of ``S/I`` is built as a Schreyer frame: level 1 is a reduced
Gröbner basis of ``I``; each further level consists of the syzygies coming
from S-pairs of elements sharing a lead component, which by Schreyer's
theorem form a Gröbner basis for the induced order.  Elements of a level are
sorted by descending exponent of one variable (x0 at level 1, x1 at level
2, ...), so leads of level ``L+1`` avoid x0..x_{L-1} and the frame has
length at most the number of variables.  The frame is then minimalized by
cancelling unit entries.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .groebner import (
    NO_CAP,
    DegreeCap,
    Ideal,
    KeySpace,
    Reducer,
    add_shift,
    buchberger_terms,
    combine_terms,
    shift_terms,
    zero_shift,
)
from .hilbert import HilbertSeriesData, series_from_shifts
from .linalg import nullspace_field, rank_field
from .polyring import Polynomial, Ring


class NotHomogeneous(ValueError):
    """A graded construction received non-homogeneous input."""


class NotMinimal(ValueError):
    """A Betti table was requested from a non-minimal resolution."""


class CapExceeded(RuntimeError):
    """A computation hit its length or degree cap before completing."""


# -- module maps ---------------------------------------------------------------


class ModuleMap:
    """Homogeneous matrix ``F -> G`` between shifted graded free modules.

    ``columns[j]`` is a dict ``row -> Polynomial`` (nonzero entries only).
    Shifts are (bi)degree tuples: ``S(-a)`` has shift ``a``.
    """

    def __init__(self, ring: Ring, columns, source_shifts, target_shifts):
        self.ring = ring
        self.columns = [dict(c) for c in columns]
        self.source_shifts = [tuple(s) for s in source_shifts]
        self.target_shifts = [tuple(s) for s in target_shifts]
        if len(self.columns) != len(self.source_shifts):
            raise ValueError("one source shift per column required")

    @classmethod
    def from_rows(cls, ring, rows, target_shifts=None, source_shifts=None):
        """Build from a dense row-major list of polynomials, inferring shifts."""
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{r: rows[r][c] for r in range(nrows) if rows[r][c]} for c in range(ncols)]
        width = len(zero_shift(ring))
        if target_shifts is None:
            target_shifts = [(0,) * width] * nrows
        if source_shifts is None:
            source_shifts = []
            for c in cols:
                if not c:
                    raise NotHomogeneous("cannot infer the shift of a zero column")
                r, p = next(iter(c.items()))
                source_shifts.append(add_shift(target_shifts[r], p.shift()))
        return cls(ring, cols, source_shifts, target_shifts)

    @property
    def nrows(self):
        return len(self.target_shifts)

    @property
    def ncols(self):
        return len(self.columns)

    def entry(self, r, c) -> Polynomial:
        return self.columns[c].get(r, self.ring.zero)

    def rows(self):
        return [[self.entry(r, c) for c in range(self.ncols)] for r in range(self.nrows)]

    def check_homogeneous(self) -> bool:
        for c, col in enumerate(self.columns):
            for r, p in col.items():
                want = tuple(a - b for a, b in zip(self.source_shifts[c], self.target_shifts[r]))
                try:
                    got = p.shift()
                except ValueError:
                    return False
                if got != want:
                    return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self ∘ other``."""
        if other.nrows != self.ncols:
            raise ValueError("incompatible shapes")
        cols = []
        for col in other.columns:
            acc = {}
            for k, q in col.items():
                for r, p in self.columns[k].items():
                    acc[r] = acc[r] + p * q if r in acc else p * q
            cols.append({r: p for r, p in acc.items() if p})
        return ModuleMap(self.ring, cols, other.source_shifts, self.target_shifts)

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def has_unit_entry(self) -> bool:
        return any(p.is_constant() for col in self.columns for p in col.values())

    def column_terms(self, space: KeySpace, c: int):
        """Column ``c`` as module term tuples in ``space``."""
        parts = []
        for r, p in self.columns[c].items():
            sc, base = space.scale, space.base[r]
            parts.append([(k * sc + base, e, x) for k, e, x in p._terms])
        return combine_terms(parts, self.ring.field.reducer())

    def __repr__(self):
        return f"ModuleMap({self.nrows}x{self.ncols})"


def _terms_to_column(ring, space, terms):
    groups = {}
    for mk, e, c in terms:
        comp = space.comp(mk)
        groups.setdefault(comp, []).append(((mk - space.base[comp]) // space.scale, e, c))
    return {r: Polynomial._from_sorted(ring, sorted(ts, reverse=True)) for r, ts in groups.items()}


# -- Schreyer frames -----------------------------------------------------------


@dataclass
class FrameLevel:
    space: KeySpace  # key space in which the elements live
    elements: list  # term tuples, sorted
    shifts: list  # (bi)degree of each element


def _sort_level(ring, space, elems, var):
    def sort_key(item):
        terms = item[0]
        mk, e, _ = terms[0]
        comp = space.comp(mk)
        x = ring.packed_exponent(e, var) if var < ring.nvars else 0
        return (comp, -x, -mk)

    return sorted(elems, key=sort_key)


def _next_space(ring, level: FrameLevel) -> KeySpace:
    n = len(level.elements)
    ranks = [n - 1 - i for i in range(n)]
    base = [level.elements[i][0][0] * n + ranks[i] for i in range(n)]
    return KeySpace(n, level.space.scale * n, base, list(level.shifts))


def _syzygies_of_level(ring, level: FrameLevel, cap: DegreeCap):
    """Schreyer syzygies of a sorted level; returns (space, [(terms, shift)])."""
    space = level.space
    red = ring.field.reducer()
    reducer = Reducer(ring, space)
    for t in level.elements:
        reducer.add(t)
    new_space = _next_space(ring, level)
    n_scale = new_space.scale
    by_comp = {}
    for i, t in enumerate(level.elements):
        by_comp.setdefault(space.comp(t[0][0]), []).append(i)
    out = []
    for comp, members in by_comp.items():
        for pos, a in enumerate(members):
            ga = level.elements[a]
            ea = ga[0][1]
            cands = []
            for b in members[pos + 1:]:
                eb = level.elements[b][0][1]
                nu = ring.packed_lcm(ea, eb) - ea
                cands.append((ring.packed_degree(nu), b, nu))
            cands.sort()
            kept = []
            for _, b, nu in cands:
                if any(ring.divides(nu2, nu) for _, nu2 in kept):
                    continue
                kept.append((b, nu))
            for b, nu in kept:
                sh = add_shift(level.shifts[a], ring.shift_of(ring.unpack(nu)))
                if not cap.allows(sh):
                    continue
                gb = level.elements[b]
                eb = gb[0][1]
                mu = ea + nu - eb
                knu, kmu = ring.packed_key(nu), ring.packed_key(mu)
                spoly = combine_terms(
                    [
                        shift_terms(ga, knu * space.scale, nu, 1, red),
                        shift_terms(gb, kmu * space.scale, mu, -1, red),
                    ],
                    red,
                )
                quot = []
                rem = reducer.reduce(spoly, quotients=quot)
                if rem:
                    raise AssertionError("S-pair of a Schreyer level did not reduce to zero")
                parts = [
                    [(knu * n_scale + new_space.base[a], nu, 1)],
                    [(kmu * n_scale + new_space.base[b], mu, red(-1))],
                ]
                parts.append(
                    [((dk // space.scale) * n_scale + new_space.base[idx], de, red(-q)) for idx, dk, de, q in quot]
                )
                syz = combine_terms(parts, red)
                if syz[0][2] != 1 or new_space.comp(syz[0][0]) != a:
                    raise AssertionError("unexpected lead term of a Schreyer syzygy")
                out.append((syz, sh))
    return new_space, out


def schreyer_frame(I: Ideal, length_cap=None, cap=NO_CAP):
    """Levels of the Schreyer frame of ``S/I``; also whether it completed."""
    ring = I.ring
    if not I.is_homogeneous():
        raise NotHomogeneous("ideal is not homogeneous")
    space = KeySpace.ideal(ring)
    basis, _ = buchberger_terms(ring, space, [g._terms for g in I.generators], cap=cap)
    width = len(zero_shift(ring))
    first = []
    for t in basis:
        sh = ring.shift_of(ring.unpack(t[0][1]))
        first.append((t, sh))
    first = _sort_level(ring, space, first, 0)
    levels = [FrameLevel(space, [t for t, _ in first], [s for _, s in first])]
    max_len = ring.nvars + 1
    limit = max_len if length_cap is None else min(length_cap, max_len)
    complete = True
    while True:
        cur = levels[-1]
        if not cur.elements:
            levels.pop()
            break
        if len(levels) >= limit:
            if length_cap is not None and len(levels) >= length_cap:
                # check whether another level would be nonempty
                if _has_pairs(ring, cur):
                    complete = False
            break
        new_space, syz = _syzygies_of_level(ring, cur, cap)
        if not syz:
            break
        syz = _sort_level(ring, new_space, syz, len(levels))
        levels.append(FrameLevel(new_space, [t for t, _ in syz], [s for _, s in syz]))
    del width
    return levels, complete


def _has_pairs(ring, level):
    seen = set()
    for t in level.elements:
        c = level.space.comp(t[0][0])
        if c in seen:
            return True
        seen.add(c)
    return False


# -- resolutions -----------------------------------------------------------------


@dataclass
class Resolution:
    """Chain of maps ``F_len -> ... -> F_1 -> F_0``; ``maps[i-1]`` is ``F_i -> F_{i-1}``."""

    ring: Ring
    maps: list
    minimal: bool = False
    complete: bool = True
    cap: DegreeCap = field(default_factory=DegreeCap)
    zero: bool = False

    @property
    def length(self) -> int:
        return len(self.maps)

    def shifts(self):
        """Shift lists of F_0, F_1, ... ."""
        if not self.maps:
            return [] if self.zero else [[zero_shift(self.ring)]]
        out = [self.maps[0].target_shifts]
        out += [m.source_shifts for m in self.maps]
        return out

    def ranks(self):
        return [len(s) for s in self.shifts()]

    def is_complex(self) -> bool:
        """d^2 = 0 for all consecutive maps."""
        return all(a.compose(b).is_zero() for a, b in zip(self.maps, self.maps[1:]))

    def hilbert_series(self) -> HilbertSeriesData:
        return series_from_shifts([[sum(s) for s in sh] for sh in self.shifts()], self.ring.nvars)


def frame_to_resolution(ring, levels, complete=True, cap=NO_CAP) -> Resolution:
    if not levels:
        return Resolution(ring, [], minimal=True, complete=complete, cap=cap)
    maps = []
    first = levels[0]
    zero = zero_shift(ring)
    cols = [_terms_to_column(ring, first.space, t) for t in first.elements]
    maps.append(ModuleMap(ring, cols, first.shifts, [zero]))
    for prev, lev in zip(levels, levels[1:]):
        cols = [_terms_to_column(ring, lev.space, t) for t in lev.elements]
        maps.append(ModuleMap(ring, cols, lev.shifts, prev.shifts))
    return Resolution(ring, maps, minimal=False, complete=complete, cap=cap)


def free_resolution(I: Ideal, length_cap=None, degree_cap=None, second_cap=None) -> Resolution:
    """Schreyer resolution of ``S/I`` (not minimal)."""
    cap = DegreeCap(degree_cap, second_cap)
    levels, complete = schreyer_frame(I, length_cap=length_cap, cap=cap)
    return frame_to_resolution(I.ring, levels, complete, cap)


def minimal_free_resolution(I: Ideal, length_cap=None, degree_cap=None, second_cap=None) -> Resolution:
    """Minimal resolution, keeping ``length_cap`` maps when given.

    The top map of a truncated frame cannot be minimalised without the map
    above it, so one extra level is computed and dropped afterwards.
    """
    extra = None if length_cap is None else length_cap + 1
    R = minimalize(free_resolution(I, extra, degree_cap, second_cap))
    if length_cap is not None and len(R.maps) > length_cap:
        R = Resolution(R.ring, R.maps[:length_cap], minimal=True, complete=False, cap=R.cap, zero=R.zero)
    return R


class _Work:
    """Mutable sparse copy of a module map used during minimalization."""

    def __init__(self, m: ModuleMap):
        self.cols = {j: dict(c) for j, c in enumerate(m.columns)}
        self.rows = {}
        for j, c in self.cols.items():
            for r in c:
                self.rows.setdefault(r, set()).add(j)
        self.alive_rows = set(range(m.nrows))
        self.alive_cols = set(range(m.ncols))
        self.src = list(m.source_shifts)
        self.tgt = list(m.target_shifts)

    def drop_row(self, r):
        for j in self.rows.pop(r, ()):
            self.cols[j].pop(r, None)
        self.alive_rows.discard(r)

    def drop_col(self, c):
        for r in self.cols.pop(c, {}):
            s = self.rows.get(r)
            if s is not None:
                s.discard(c)
        self.alive_cols.discard(c)

    def set(self, r, j, p):
        col = self.cols[j]
        if p:
            col[r] = p
            self.rows.setdefault(r, set()).add(j)
        else:
            if r in col:
                del col[r]
                self.rows[r].discard(j)

    def finish(self, ring) -> tuple:
        rows = sorted(self.alive_rows)
        cols = sorted(self.alive_cols)
        rmap = {r: i for i, r in enumerate(rows)}
        out = [{rmap[r]: p for r, p in self.cols[c].items()} for c in cols]
        return ModuleMap(ring, out, [self.src[c] for c in cols], [self.tgt[r] for r in rows]), rows, cols


def minimalize(R: Resolution) -> Resolution:
    """Cancel unit entries map by map (pivot: lowest row, then lowest column)."""
    ring = R.ring
    field_ = ring.field
    work = [_Work(m) for m in R.maps]
    for i, W in enumerate(work):
        heap = []
        for j, col in W.cols.items():
            for r, p in col.items():
                if p.is_constant():
                    heap.append((r, j))
        heapq.heapify(heap)
        while heap:
            r, c = heapq.heappop(heap)
            if r not in W.alive_rows or c not in W.alive_cols:
                continue
            u = W.cols[c].get(r)
            if u is None or not u.is_constant():
                continue
            uinv = field_.inv(u.lead_coeff)
            pivot_col = {rr: p for rr, p in W.cols[c].items() if rr != r}
            for j in sorted(W.rows.get(r, ()) - {c}):
                b = W.cols[j][r]
                factor = b.scale(uinv)
                for rr, a in pivot_col.items():
                    old = W.cols[j].get(rr)
                    new = (old - factor * a) if old is not None else -(factor * a)
                    W.set(rr, j, new)
                    if new and new.is_constant():
                        heapq.heappush(heap, (rr, j))
            W.drop_col(c)
            W.drop_row(r)
            if i + 1 < len(work):
                work[i + 1].drop_row(c)
            if i > 0:
                work[i - 1].drop_col(r)
    maps = []
    for W in work:
        m, _, _ = W.finish(ring)
        maps.append(m)
    zero = R.zero
    if maps and maps[0].nrows == 0:
        maps, zero = [], True
    while maps and maps[-1].ncols == 0:
        maps.pop()
    return Resolution(ring, maps, minimal=True, complete=R.complete, cap=R.cap, zero=zero)


# -- Betti tables --------------------------------------------------------------


@dataclass
class BettiTable:
    """Ranks ``entries[(i, shift)]``; ``shift`` is an int or a bidegree tuple."""

    entries: dict
    nvars: int
    certified_upto: int | None = None

    @property
    def bigraded(self) -> bool:
        return any(isinstance(s, tuple) for _, s in self.entries)

    def total(self, shift) -> int:
        return shift if isinstance(shift, int) else sum(shift)

    def graded(self) -> "BettiTable":
        """Collapse bidegrees to total degrees."""
        out = {}
        for (i, s), v in self.entries.items():
            key = (i, self.total(s))
            out[key] = out.get(key, 0) + v
        return BettiTable(out, self.nvars, self.certified_upto)

    def column_totals(self):
        pd = self.pd
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(pd + 1)]

    @property
    def pd(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    @property
    def reg(self) -> int:
        vals = [self.total(s) - i for (i, s), v in self.entries.items() if v]
        if not vals:
            raise ValueError("empty Betti table")
        return max(vals)

    def shifts_at(self, i):
        out = []
        for (k, s), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], self.total(kv[0][1]), kv[0][1])):
            if k == i:
                out += [s] * v
        return out

    def to_json(self) -> dict:
        rows = []
        for (i, s), v in sorted(self.entries.items(), key=lambda kv: (kv[0][0], self.total(kv[0][1]), kv[0][1])):
            if v:
                rows.append({"i": i, "deg": list(s) if isinstance(s, tuple) else s, "rank": v})
        return {"entries": rows}

    def to_text(self, gap=3) -> str:
        """Macaulay2-style table; runs of ``gap`` or more empty rows become ``:``."""
        g = self.graded()
        if not g.entries:
            return "total:"
        pd = g.pd
        lo = min(s - i for (i, s), v in g.entries.items() if v)
        hi = g.reg
        cells = {}
        for (i, s), v in g.entries.items():
            if v:
                cells[(s - i, i)] = cells.get((s - i, i), 0) + v
        totals = g.column_totals()
        widths = [max(len(str(i)), len(str(totals[i])), *(len(str(cells.get((r, i), "."))) for r in range(lo, hi + 1))) for i in range(pd + 1)]
        label_w = max(len("total:"), len(f"{hi}:"), len(f"{lo}:"))

        def line(label, vals):
            return label.rjust(label_w) + " " + " ".join(str(v).rjust(w) for v, w in zip(vals, widths))

        out = [line("", list(range(pd + 1))), line("total:", totals)]
        empty_run = []
        for r in range(lo, hi + 1):
            vals = [cells.get((r, i), ".") for i in range(pd + 1)]
            if all(v == "." for v in vals):
                empty_run.append(r)
                continue
            if empty_run:
                if len(empty_run) >= gap:
                    out.append(line(":", ["."] * (pd + 1)))
                else:
                    out += [line(f"{x}:", ["."] * (pd + 1)) for x in empty_run]
                empty_run = []
            out.append(line(f"{r}:", vals))
        return "\n".join(out)


def betti_table(R: Resolution) -> BettiTable:
    if not R.minimal:
        if any(m.has_unit_entry() for m in R.maps):
            raise NotMinimal("resolution has unit entries; minimalize it first")
    entries = {}
    bigraded = R.ring.split is not None
    for i, shifts in enumerate(R.shifts()):
        for s in shifts:
            key = (i, s if bigraded else s[0])
            entries[key] = entries.get(key, 0) + 1
    cert = R.cap.total if R.cap.active else None
    return BettiTable(entries, R.ring.nvars, cert)


def betti_from_frame(R: Resolution) -> BettiTable:
    """Minimal Betti numbers of a non-minimal resolution by degree-0 ranks.

    ``beta_{i,a} = #(F_i)_a - rank(phi_i)_a - rank(phi_{i+1})_a`` where
    ``(phi)_a`` is the scalar block between basis elements of degree ``a``.
    """
    field_ = R.ring.field
    shifts = R.shifts()
    bigraded = R.ring.split is not None

    def scalar_rank(m: ModuleMap, a):
        rows = [r for r, s in enumerate(m.target_shifts) if s == a]
        cols = [c for c, s in enumerate(m.source_shifts) if s == a]
        if not rows or not cols:
            return 0
        mat = [[m.columns[c][r].lead_coeff if r in m.columns[c] else 0 for c in cols] for r in rows]
        return rank_field(mat, field_)

    entries = {}
    for i, sh in enumerate(shifts):
        for a in sorted(set(sh)):
            n = sh.count(a)
            if i >= 1:
                n -= scalar_rank(R.maps[i - 1], a)
            if i < len(R.maps):
                n -= scalar_rank(R.maps[i], a)
            if n:
                entries[(i, a if bigraded else a[0])] = n
    return BettiTable(entries, R.ring.nvars)


def regularity_of(B: BettiTable) -> int:
    return B.reg


def depth_and_pd(B: BettiTable):
    pd = B.pd
    return B.nvars - pd, pd


# -- syzygies of arbitrary generators ------------------------------------------------


def schreyer_syzygies(F, order=None) -> ModuleMap:
    """Minimal homogeneous generators of the syzygies of the columns of ``F``.

    ``F`` is a :class:`ModuleMap`, an :class:`Ideal` or a list of
    polynomials.  A Gröbner basis of the column module is computed with
    cofactor tracking; Schreyer syzygies of that basis are pulled back to
    the original columns together with the division relations of the
    inputs, then pruned degree by degree to a minimal generating set.
    """
    if isinstance(F, Ideal):
        F = list(F.generators)
    if isinstance(F, (list, tuple)):
        if not F:
            raise ValueError("no generators")
        ring = F[0].ring
        for g in F:
            if not g.is_homogeneous():
                raise NotHomogeneous(f"{g} is not homogeneous")
        width = len(zero_shift(ring))
        F = ModuleMap(ring, [{0: g} for g in F], [g.shift() for g in F], [(0,) * width])
    ring = F.ring
    if not F.check_homogeneous():
        raise NotHomogeneous("module map is not homogeneous")
    m = F.ncols
    space = KeySpace.position_over_terms(F.target_shifts)
    inputs = [F.column_terms(space, c) for c in range(m)]
    basis, cofs = buchberger_terms(ring, space, inputs, track=True)
    # candidate syzygies as dicts input -> Polynomial
    cands = []
    level = FrameLevel(space, list(basis), [_lead_shift(ring, space, t) for t in basis])
    if basis and basis[0] == ((0, 0, 1),) and space.modulus == 1:
        pass
    _, syz = _syzygies_of_level(ring, level, NO_CAP) if basis else (None, [])
    nspace = _next_space(ring, level) if basis else None
    for terms, sh in syz:
        col = _terms_to_column(ring, nspace, terms)
        vec = {}
        for k, a in col.items():
            for j, p in cofs[k].items():
                vec[j] = vec[j] + a * p if j in vec else a * p
        vec = {j: p for j, p in vec.items() if p}
        if vec:
            cands.append((sh, vec))
    breducer = Reducer(ring, space)
    for t in basis:
        breducer.add(t)
    for c in range(m):
        if not inputs[c]:
            cands.append((F.source_shifts[c], {c: ring.one}))
            continue
        quot = []
        rem = breducer.reduce(inputs[c], quotients=quot)
        if rem:
            raise AssertionError("input not reduced to zero by its own Gröbner basis")
        vec = {c: ring.one}
        for idx, dk, de, q in quot:
            mono = Polynomial._from_sorted(ring, [(dk // space.scale, de, ring.field(-q))])
            for j, p in cofs[idx].items():
                vec[j] = vec[j] + mono * p if j in vec else mono * p
        vec = {j: p for j, p in vec.items() if p}
        if vec:
            cands.append((F.source_shifts[c], vec))
    kept = minimal_generators(ring, cands, F.source_shifts)
    cols = [v for _, v in kept]
    return ModuleMap(ring, cols, [s for s, _ in kept], F.source_shifts)


def _lead_shift(ring, space, terms):
    mk, e, _ = terms[0]
    return add_shift(space.shifts[space.comp(mk)], ring.shift_of(ring.unpack(e)))


def _vector_coords(ring, vec, shifts, deg, index):
    """Coefficient vector of a homogeneous module element in degree ``deg``."""
    out = {}
    for j, p in vec.items():
        for exps, c in p.terms():
            out[index[(j, exps)]] = c
    return out


def minimal_generators(ring, cands, shifts):
    """Prune homogeneous vectors (``(shift, {comp: poly})``) to a minimal generating set.

    Works degree by degree with linear algebra over the field: a candidate
    is kept when it is not in the span of the degree piece generated by the
    previously kept vectors.
    """
    from .polyring import _compositions

    cands = sorted(cands, key=lambda sv: (sum(sv[0]), sv[0]))
    kept = []
    nvars = ring.nvars
    bigraded = ring.split is not None
    for sh, vec in cands:
        deg = sum(sh)
        # basis monomials of the module piece of total degree deg
        index = {}
        for j, s in enumerate(shifts):
            dj = deg - sum(s)
            if dj < 0:
                continue
            for exps in _compositions(dj, nvars):
                if bigraded and add_shift(s, ring.bidegree_of(exps)) != sh:
                    continue
                index[(j, exps)] = len(index)
        if not index:
            continue
        span = []
        for ksh, kvec in kept:
            dd = deg - sum(ksh)
            if dd < 0:
                continue
            for exps in _compositions(dd, nvars):
                if bigraded and add_shift(ksh, ring.bidegree_of(exps)) != sh:
                    continue
                moved = {j: p.mul_term(exps) for j, p in kvec.items()}
                span.append(_vector_coords(ring, moved, shifts, deg, index))
        target = _vector_coords(ring, vec, shifts, deg, index)
        n = len(index)
        dense = [[row.get(i, 0) for i in range(n)] for row in span]
        r0 = rank_field(dense, ring.field) if dense else 0
        r1 = rank_field(dense + [[target.get(i, 0) for i in range(n)]], ring.field)
        if r1 > r0:
            kept.append((sh, vec))
    return kept


__all__ = [
    "BettiTable",
    "CapExceeded",
    "ModuleMap",
    "NotHomogeneous",
    "NotMinimal",
    "Resolution",
    "betti_from_frame",
    "betti_table",
    "depth_and_pd",
    "free_resolution",
    "minimal_free_resolution",
    "minimal_generators",
    "minimalize",
    "regularity_of",
    "schreyer_frame",
    "schreyer_syzygies",
    "nullspace_field",
]
