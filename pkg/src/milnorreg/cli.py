"""Command-line front end.

Exit status: 0 on success, 1 on a computational or input error, 2 when a
verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bigraded import (
    GenericityFailure,
    closed_form_bidegree,
    genericity_certificate,
    minimal_syzygy_search,
    resolution_first_syzygy_bidegrees,
)
from .families import (
    classify_free_nearly_free,
    cone_over_plane_curve,
    generic_determinantal,
    generic_hyperplane_arrangement,
    surface_arrangement,
    v_family,
    v_prime_family,
)
from .grammar import PolynomialSyntaxError, max_variable_index, parse_polynomial
from .groebner import Ideal
from .hilbert import hilbert_report, quotient_series
from .milnor import VerificationFailure, isolated_bounds_check, jacobian_ideal, milnor_report, spodzieja_test
from .polyring import Ring, parse_field, random_bihomogeneous
from .resolution import betti_table, depth_and_pd, minimal_free_resolution
from .verify import run_suite

EXIT_OK, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2
JACOBIAN_DIRECTIVE = "# ideal: jacobian"


class VerifyFailed(Exception):
    """Raised to request exit status 2."""


def _config(args) -> dict:
    return {
        "command": args.command,
        "field": str(args.field),
        "seed": args.seed,
        "degree_cap": args.degree_cap,
        "length_cap": args.length_cap,
    }


def _read_inputs(args):
    """Polynomial texts from the positional arguments, else from stdin.

    Lines starting with ``#`` are comments; the directive line
    ``# ideal: jacobian`` asks for the Jacobian ideal of the single input.
    """
    texts = list(args.polys or [])
    directive = False
    args.names = None
    if not texts:
        for line in sys.stdin.read().splitlines():
            s = line.strip()
            if not s:
                continue
            if s.startswith("#"):
                directive |= s == JACOBIAN_DIRECTIVE
                if "variables:" in s:
                    args.names = s.split("variables:", 1)[1].split()[0].split(",")
                continue
            texts.append(s)
    if not texts:
        raise ValueError("no polynomials given")
    return texts, directive


def _ring_for(texts, args, nvars=None, split=None):
    names = getattr(args, "names", None)
    if names and nvars is None:
        return Ring(len(names), args.field, names=names, split=split)
    if nvars is None:
        nvars = max(4, 1 + max(max_variable_index(t) for t in texts))
    return Ring(nvars, args.field, split=split)


def _parse_all(texts, ring):
    return [parse_polynomial(t, ring) for t in texts]


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        payload = dict(payload)
        payload["config"] = _config(args)
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


# -- commands -----------------------------------------------------------------------


def cmd_gb(args):
    texts, _ = _read_inputs(args)
    ring = _ring_for(texts, args, args.nvars)
    if args.order != "grevlex":
        ring = ring.with_order(args.order)
    I = Ideal(ring, _parse_all(texts, ring))
    G = I.groebner()
    elems = [str(g) for g in G.elements]
    _emit(args, {"groebner_basis": elems}, "\n".join(elems))


def cmd_hilbert(args):
    texts, jac = _read_inputs(args)
    ring = _ring_for(texts, args, args.nvars)
    polys = _parse_all(texts, ring)
    I = jacobian_ideal(polys[0]) if (jac or args.jacobian) else Ideal(ring, polys)
    rep = hilbert_report(quotient_series(I), args.samples)
    text = f"HF(0..{args.samples}) = {' '.join(map(str, rep['hf_samples']))}\nHP(k) = {rep['hp']['text']}\nst = {rep['st']}"
    _emit(args, rep, text)


def cmd_resolve(args):
    texts, jac = _read_inputs(args)
    ring = _ring_for(texts, args, args.nvars)
    polys = _parse_all(texts, ring)
    if jac or args.jacobian:
        if len(polys) != 1:
            raise ValueError("the Jacobian ideal needs exactly one polynomial")
        I = jacobian_ideal(polys[0])
    else:
        I = Ideal(ring, polys)
    R = minimal_free_resolution(I, args.length_cap, args.degree_cap)
    B = betti_table(R)
    depth, pd = depth_and_pd(B)
    payload = {"betti": B.to_json(), "reg": B.reg, "pd": pd, "depth": depth, "complete": R.complete}
    text = B.to_text() + f"\nreg = {B.reg}   pd = {pd}   depth = {depth}"
    if not R.complete:
        text += "\n(truncated by caps)"
    _emit(args, payload, text)


def cmd_milnor_report(args):
    texts, _ = _read_inputs(args)
    ring = _ring_for(texts, args, args.nvars)
    (f,) = _parse_all(texts[:1], ring)
    r = milnor_report(f)
    payload = r.to_json()
    text = r.to_text()
    free = classify_free_nearly_free(r.betti, r.d)
    payload["freeness"] = {"kind": free.kind, "exponents": list(free.exponents)}
    text += f"\nfreeness: {free.kind} {list(free.exponents) if free.exponents else ''}".rstrip()
    if r.hp_constant:
        v = isolated_bounds_check(r)
        payload["isolated_bounds"] = {"branch": v.branch, "st_bound": v.st_bound, "reg_bound": v.reg_bound, "ok": v.ok}
        text += f"\nisolated bounds ({v.branch}): st <= {v.st_bound}, reg <= {v.reg_bound}: {'ok' if v.ok else 'VIOLATED'}"
    _emit(args, payload, text)
    if args.strict:
        spodzieja_test(f)
        if not all(r.invariant_checks().values()):
            raise VerificationFailure(f"invariant checks failed: {r.invariant_checks()}")


def _family_poly(args):
    field_ = args.field
    kind = args.kind
    if kind == "cone":
        if not args.g:
            raise ValueError("cone needs --g")
        g = parse_polynomial(args.g, Ring(3, field_))
        return cone_over_plane_curve(g, Ring(4, field_)), {}
    if kind == "arrangement":
        return generic_hyperplane_arrangement(args.n, args.d, args.seed, field_), {}
    if kind == "determinantal":
        D = generic_determinantal(args.n, args.symmetric, field_, allow_large=args.allow_large)
        return D.f, {"candidate_regularities": D.candidate_regularities()}
    if kind == "surface":
        comps = None
        ring = Ring(4, field_)
        if args.components:
            comps = [parse_polynomial(t, ring) for t in args.components]
        degrees = [int(x) for x in args.degrees.split(",")] if args.degrees else None
        A = surface_arrangement(degrees, comps, args.seed, ring)
        return A.f, {"components": [str(c) for c in A.components]}
    if kind == "bigraded":
        return random_bihomogeneous(args.k, args.d - args.k, args.seed, Ring(4, field_, split=2)), {}
    if kind == "v":
        return v_family(args.d, Ring(4, field_)).f, {}
    if kind == "vprime":
        return v_prime_family(args.d, Ring(4, field_)).f, {}
    raise ValueError(f"unknown family {kind}")


def cmd_family(args):
    f, extra = _family_poly(args)
    payload = {"kind": args.kind, "polynomial": str(f), "degree": f.degree(), "nvars": f.ring.nvars}
    payload.update(extra)
    names = ",".join(f.ring.names)
    lines = [f"# family: {args.kind}  degree: {f.degree()}  variables: {names}"]
    lines += [f"# {k}: {v}" for k, v in extra.items()]
    lines += [JACOBIAN_DIRECTIVE, str(f)]
    _emit(args, payload, "\n".join(lines))


def cmd_bigraded_syzygy(args):
    ring = Ring(4, args.field, split=2)
    if args.poly:
        f = parse_polynomial(args.poly, ring)
        k, m = f.bidegree()
        d = k + m
    else:
        if args.k is None or args.d is None:
            raise ValueError("give --k and --d, or --poly")
        k, d = args.k, args.d
        f = random_bihomogeneous(k, d - k, args.seed, ring)
    cert = genericity_certificate(f, seed=args.seed)
    res = minimal_syzygy_search(f, method=args.method, seed=args.seed)
    payload = res.to_json()
    payload["certificate"] = {"passed": cert.passed, "witness": cert.witness, "selected_minor_nonzero": cert.selected_minor_nonzero}
    text = [
        f"bidegree = {res.bidegree}   total degree = {res.total_degree}",
        f"closed form = {closed_form_bidegree(k, d)}   match: {res.matches_closed_form}",
        f"certificate: {'pass' if cert.passed else 'fail (' + str(cert.witness) + ')'}",
        f"reg M(f) >= {res.regularity_lower_bound}",
    ]
    if args.check_resolution:
        scan = resolution_first_syzygy_bidegrees(f, degree_cap=args.degree_cap)
        payload["resolution_scan"] = [[list(s), v] for s, v in sorted(scan.items())]
        text.append(f"resolution scan (second degree <= 3mu): {sorted(scan.items())}")
    _emit(args, payload, "\n".join(text))
    if not res.matches_closed_form:
        raise VerifyFailed("bidegree differs from the closed form")


def cmd_verify(args):
    items = [int(x) for x in args.items.split(",")] if args.items else None
    results = run_suite(args.seed, items, args.extended)
    payload = {"items": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    text = "\n".join(r.line() for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} items passed"
    _emit(args, payload, text)
    if not payload["passed"]:
        raise VerifyFailed("some acceptance items failed")


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=parse_field, default=parse_field("32003"), help="prime p or QQ (default 32003)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--degree-cap", type=int, default=None)
    common.add_argument("--length-cap", type=int, default=None)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="milnorreg", description="Milnor algebras, resolutions and bigraded syzygies.")
    sub = parser.add_subparsers(dest="command", required=True)

    def polys_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("polys", nargs="*", help="polynomials (read from stdin when omitted)")
        p.add_argument("--nvars", type=int, default=None, help="number of variables (default: at least 4)")
        p.set_defaults(func=func)
        return p

    p = polys_cmd("gb", cmd_gb, "reduced Gröbner basis")
    p.add_argument("--order", default="grevlex", choices=("grevlex", "lex"))
    p = polys_cmd("hilbert", cmd_hilbert, "Hilbert function, polynomial and stability threshold")
    p.add_argument("--samples", type=int, default=12)
    p.add_argument("--jacobian", action="store_true", help="use the Jacobian ideal of the single input")
    p = polys_cmd("resolve", cmd_resolve, "minimal free resolution and Betti table")
    p.add_argument("--jacobian", action="store_true", help="resolve the Milnor algebra of the single input")
    p = polys_cmd("milnor-report", cmd_milnor_report, "invariants of the Milnor algebra")
    p.add_argument("--strict", action="store_true", help="exit 2 when an identity check fails")

    p = sub.add_parser("family", parents=[common], help="construct a hypersurface")
    p.add_argument("kind", choices=("cone", "arrangement", "determinantal", "surface", "bigraded", "v", "vprime"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--g", help="plane curve for cone")
    p.add_argument("--degrees", help="comma separated component degrees for surface")
    p.add_argument("--components", nargs="*", help="explicit surface components")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bigraded-syzygy", parents=[common], help="minimal non-Euler first syzygy of a bihomogeneous f")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--poly", help="explicit bihomogeneous polynomial")
    p.add_argument("--method", choices=("linear", "syzygy"), default="linear")
    p.add_argument("--check-resolution", action="store_true", help="cross-check with a truncated resolution")
    p.set_defaults(func=cmd_bigraded_syzygy)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--items", help="comma separated item numbers")
    p.add_argument("--extended", action="store_true", help="include the larger optional cases")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (VerifyFailed, VerificationFailure, GenericityFailure) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PolynomialSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
