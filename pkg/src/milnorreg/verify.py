"""Acceptance items, shared by the command line and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .bigraded import (
    closed_form_bidegree,
    genericity_certificate,
    minimal_syzygy_search,
    resolution_first_syzygy_bidegrees,
    slice_parameters,
)
from .families import (
    cone_over_plane_curve,
    generic_determinantal,
    generic_hyperplane_arrangement,
    v_family,
    v_prime_family,
)
from .hilbert import hilbert_function, quotient_series
from .milnor import jacobian_ideal, milnor_report, spodzieja_test
from .polyring import Ring, random_bihomogeneous
from .resolution import betti_from_frame, betti_table


@dataclass
class ItemResult:
    item: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.item}. {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"item": self.item, "name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3), "data": self.data}


def _timed(item, name, fn):
    t = time.perf_counter()
    try:
        passed, detail, data = fn()
    except Exception as exc:  # an exception fails the item, it does not abort the suite
        passed, detail, data = False, f"{type(exc).__name__}: {exc}", {}
    return ItemResult(item, name, passed, detail, time.perf_counter() - t, data)


# -- individual items ---------------------------------------------------------------------


def item_fermat(seed=0, **_):
    def run():
        f = Ring(4).parse("x0^3+x1^3+x2^3+x3^3")
        r = milnor_report(f)
        hf = r.hf_samples[:6]
        ok = hf == [1, 4, 6, 4, 1, 0] and r.st == r.T + 1 == 5 and r.reg == r.T == 4 and r.pd == 4
        return ok, f"HF={hf[:5]} st={r.st} reg={r.reg} pd={r.pd} T={r.T}", {"st": r.st, "reg": r.reg, "pd": r.pd}

    return _timed(1, "Fermat cubic", run)


def item_v_family(seed=0, degrees=(2, 3, 4, 5), **_):
    def run():
        parts, ok, data = [], True, {}
        for d in degrees:
            r = milnor_report(v_family(d).f)
            want_hp = (Fraction(-d * (d - 3), 2) + (d - 1) ** 3, d)
            got_hp = tuple(Fraction(c) for c in r.hp.monomial)
            good = r.st == 3 * d - 5 and got_hp == want_hp
            ok &= good
            parts.append(f"d={d}: st={r.st} HP={r.hp}")
            data[d] = {"st": r.st, "hp": str(r.hp), "ok": good}
        return ok, "; ".join(parts), data

    return _timed(2, "V_{d+1} family", run)


def item_v_prime_family(seed=0, extended=False, **_):
    degrees = (2, 3, 4) if extended else (2, 3)

    def run():
        parts, ok, data = [], True, {}
        for d in degrees:
            r = milnor_report(v_prime_family(d).f)
            want_hp = (Fraction(d**3 - 4 * d**2 + 6 * d - 2), Fraction(d * d))
            got_hp = tuple(Fraction(c) for c in r.hp.monomial)
            good = r.st == 6 * d - 7 and got_hp == want_hp
            ok &= good
            parts.append(f"d={d}: st={r.st} HP={r.hp}")
            data[d] = {"st": r.st, "hp": str(r.hp), "ok": good}
        return ok, "; ".join(parts), data

    return _timed(3, "V'_{2d} family", run)


SMALL_BIGRADED = ((1, 4), (1, 6), (2, 5), (2, 7))


def item_small_bigraded(seed=0, cases=SMALL_BIGRADED, **_):
    def run():
        parts, ok, data = [], True, {}
        for k, d in cases:
            f = random_bihomogeneous(k, d - k, seed)
            _, _, mu = slice_parameters(f)
            want = closed_form_bidegree(k, d)
            a = minimal_syzygy_search(f, seed=seed).bidegree
            scan = resolution_first_syzygy_bidegrees(f)
            expected_scan = {(k, 2 * mu + 1): 1, want: 1}
            b = [s for s in scan if s != (k, 2 * mu + 1)]
            good = a == want and scan == expected_scan
            ok &= good
            parts.append(f"({k},{d}): slice={a} resolution={b} closed={want}")
            data[f"{k},{d}"] = {"slice": list(a), "resolution": [list(s) for s in scan], "ok": good}
        return ok, "; ".join(parts), data

    return _timed(4, "bigraded minimal syzygy (slice vs resolution)", run)


def item_large_bigraded(seed=0, **_):
    def run():
        f = random_bihomogeneous(6, 13, seed)
        cert = genericity_certificate(f, seed=seed)
        res = minimal_syzygy_search(f, seed=seed)
        ok = cert.passed and res.bidegree == (108, 18) and res.total_degree == 126 and res.regularity_lower_bound == 124
        detail = f"bidegree={res.bidegree} total={res.total_degree} reg>={res.regularity_lower_bound} certificate={cert.passed}"
        return ok, detail, res.to_json()

    return _timed(5, "bigraded (k,d)=(6,19) slice", run)


def item_arrangements(seed=0, degrees=(4, 5, 6), **_):
    def run():
        parts, ok, data = [], True, {}
        for d in degrees:
            r = milnor_report(generic_hyperplane_arrangement(3, d, seed))
            good = r.reg == 2 * d - 6 and r.depth == 0
            ok &= good
            parts.append(f"d={d}: reg={r.reg} depth={r.depth}")
            data[d] = {"reg": r.reg, "depth": r.depth, "ok": good}
        return ok, "; ".join(parts), data

    return _timed(6, "generic plane arrangements in P^3", run)


def spodzieja_battery(seed=0):
    R = Ring(4)
    P = R.parse
    polys = {
        "Fermat cubic": P("x0^3+x1^3+x2^3+x3^3"),
        "Fermat quartic": P("x0^4+x1^4+x2^4+x3^4"),
        "smooth quadric": P("x0^2+x1^2+x2^2+x3^2"),
        "two planes": P("x0*x1"),
        "four planes": P("x0*x1*x2*x3"),
        "cone over Fermat cubic": cone_over_plane_curve(Ring(3).parse("x0^3+x1^3+x2^3")),
        "V_3": P("x3*(x0^2+x1^2+x2^2)"),
        "bigraded (1,3)": random_bihomogeneous(1, 3, seed),
        "bigraded (2,3)": random_bihomogeneous(2, 3, seed),
    }
    return polys


def item_spodzieja(seed=0, **_):
    def run():
        parts, ok, data = [], True, {}
        for name, f in spodzieja_battery(seed).items():
            s = spodzieja_test(f, check=False)
            good = s.hess_in_J == s.singular and s.hess_in_colon
            ok &= good
            parts.append(f"{name}: {s.as_tuple()}")
            data[name] = list(s.as_tuple())
        return ok, "; ".join(parts), data

    return _timed(7, "Hessian membership battery", run)


def item_determinantal(seed=0, **_):
    def run():
        parts, ok, data = [], True, {}
        for sym in (False, True):
            D = generic_determinantal(3, sym)
            r = milnor_report(D.f)
            cand = D.candidate_regularities()
            good = r.reg < r.T
            ok &= good
            label = "symmetric" if sym else "generic"
            parts.append(f"{label}: reg={r.reg} T={r.T} candidates={cand}")
            data[label] = {"reg": r.reg, "T": r.T, "candidates": cand}
        return ok, "; ".join(parts), data

    return _timed(8, "determinantal n=3", run)


def property_examples(seed=0):
    """Polynomials used by the property item."""
    R = Ring(4)
    P = R.parse
    out = {
        "Fermat cubic": P("x0^3+x1^3+x2^3+x3^3"),
        "four planes": P("x0*x1*x2*x3"),
        "two planes": P("x0*x1"),
        "cone over Fermat cubic": cone_over_plane_curve(Ring(3).parse("x0^3+x1^3+x2^3")),
        "arrangement d=5": generic_hyperplane_arrangement(3, 5, seed),
        "determinantal generic": generic_determinantal(3).f,
        "determinantal symmetric": generic_determinantal(3, True).f,
        "bigraded (1,4)": random_bihomogeneous(1, 3, seed),
        "bigraded (2,5)": random_bihomogeneous(2, 3, seed),
    }
    for d in (2, 3, 4):
        out[f"V_{d + 1}"] = v_family(d).f
    for d in (2, 3):
        out[f"V'_{2 * d}"] = v_prime_family(d).f
    return out


def check_properties(f):
    """The exact identities every Milnor-algebra computation must satisfy."""
    r = milnor_report(f)
    R = r.extras["resolution"]
    H = r.extras["series"]
    n = r.n
    out = {}
    out["series"] = R.hilbert_series().numerator == H.numerator
    upto = max(r.T + 4, (r.st or 0) + 4, 8)
    betti_hf = hilbert_function(R.hilbert_series(), upto)
    out["betti_hf"] = betti_hf == hilbert_function(H, upto) == hilbert_function(quotient_series(jacobian_ideal(f)), upto)
    out["d2"] = R.is_complex()
    out["st<=reg+pd-n"] = r.st is None or r.st <= r.reg + r.pd - n
    out["reg>=topN"] = r.ndata.top is None or r.reg >= r.ndata.top
    x = f.ring.gens
    euler = f.ring.zero
    for i in range(f.ring.nvars):
        euler = euler + x[i] * f.derivative(i)
    ok_euler = euler == f.scale(r.d)
    if f.ring.split is not None:
        k, m = f.bidegree()
        bi = x[0] * f.derivative(0) + x[1] * f.derivative(1)
        bi = bi.scale(m) - (x[2] * f.derivative(2) + x[3] * f.derivative(3)).scale(k)
        ok_euler = ok_euler and not bi
    out["euler"] = ok_euler
    out["betti_cross"] = betti_table(R).entries == {k: v for k, v in betti_from_frame(R).entries.items() if v}
    return out


def item_properties(seed=0, **_):
    def run():
        bad, data = [], {}
        for name, f in property_examples(seed).items():
            checks = check_properties(f)
            data[name] = checks
            bad += [f"{name}:{c}" for c, v in checks.items() if not v]
        n = len(data)
        return not bad, (f"{n} examples, all identities hold" if not bad else "failed " + ", ".join(bad)), data

    return _timed(9, "property identities", run)


ITEMS = {
    1: item_fermat,
    2: item_v_family,
    3: item_v_prime_family,
    4: item_small_bigraded,
    5: item_large_bigraded,
    6: item_arrangements,
    7: item_spodzieja,
    8: item_determinantal,
    9: item_properties,
}


def run_suite(seed=0, items=None, extended=False):
    items = sorted(ITEMS) if not items else list(items)
    return [ITEMS[i](seed=seed, extended=extended) for i in items]
