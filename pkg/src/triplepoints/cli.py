"""Command-line front end.

Every subcommand prints one JSON document.  Exit codes: 0 on success,
1 on a domain error (with an error JSON on stdout), 2 on usage errors.
The TRIPLEPOINT_THREADS environment variable caps internal parallelism
(0 = auto); all current computations run in a single process.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .fields import Field
from .poly import MultiPoly
from .surfaces import Surface, load_points, SCHEMA_VERSION
from . import bounds as bounds_mod
from . import invariants as inv_mod
from . import constructions, families, singular


def _emit(data, path=None):
    data = dict(data)
    data.setdefault("schema_version", SCHEMA_VERSION)
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


class DomainError(Exception):
    pass


def _parse_range(text):
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi) + 1)


def cmd_bounds(args):
    if args.table:
        table = {}
        for d in _parse_range(args.table):
            table[str(d)] = bounds_mod.combined_bound(d)
        _emit({"table": table})
        return
    if args.degree is None:
        raise DomainError("--degree or --table is required")
    d = args.degree
    out = {
        "polar": bounds_mod.polar_bound(d) if d >= 5 else None,
        "miyaoka": bounds_mod.miyaoka_bound(d) if d >= 7 else None,
        "spectrum": bounds_mod.spectrum_bound(
            d, bounds_mod.TRIPLE_POINT_SPECTRUM) if d >= 3 else None,
        "combined": bounds_mod.combined_bound(d),
    }
    _emit(out)


def cmd_spectrum(args):
    exponents = [int(v) for v in args.exponents.split(",")]
    spec = bounds_mod.brieskorn_spectrum(exponents)
    out = {"spectrum": [[str(v), m] for v, m in spec],
           "total": spec.total()}
    if args.interval:
        a, b = (Fraction(v) for v in args.interval.split(","))
        out["interval"] = args.interval
        out["count"] = spec.count_open(a, b)
    _emit(out)


def cmd_invariants(args):
    t = inv_mod.resolved_invariants(args.degree, args.nu, args.alpha)
    _emit(t.to_json())


def cmd_classify_sextic(args):
    exc = [int(v) for v in args.exc.split(",")] if args.exc else None
    row = inv_mod.sextic_classify(args.nu, args.pg, args.q, exc)
    _emit(row.to_json())


def _parse_params(text, field):
    if field is None:
        raise DomainError("--field is required for this family")
    params = {}
    if not text:
        return params
    for item in text.split(","):
        k, _, v = item.partition("=")
        if not _:
            raise DomainError(f"bad parameter {item!r}, expected key=value")
        params[k.strip()] = field.parse(v.strip())
    return params


def cmd_construct(args):
    field = Field.parse_tag(args.field) if args.field else None
    fam = args.family
    if fam == "sextic-ten-gf31":
        X = families.sextic_ten_gf31()
    elif fam == "septic-s4":
        p = _parse_params(args.params, field)
        X = families.septic_s4(field, p["mu"], p["nu"])
    elif fam == "k3-444":
        p = _parse_params(args.params, field)
        X = families.sextic_k3_444(
            field, p["a1"], p["a2"], p["a3"], p["b1"], p["b2"], p["b3"],
            p.get("alpha"), p.get("beta"))
    elif fam == "k3-228":
        p = _parse_params(args.params, field)
        X = families.sextic_k3_228(field, p["lambda"],
                                   p.get("alpha"), p.get("beta"))
    elif fam == "ell-222":
        p = _parse_params(args.params, field)
        X = families.sextic_elliptic_222(
            field, p["lambda"], p["mu"], p["nu"],
            p["b1"], p["b2"], p["b3"], p["b4"], p["b5"], p["b6"],
            p.get("alpha"), p.get("beta"), p.get("gamma"))
    elif fam in ("k3-246", "ell-224"):
        if not args.base:
            raise DomainError(f"{fam} requires --base")
        base = Surface.load(args.base)
        idx = [int(v) for v in args.fundamental.split(",")]
        fundamental = [base.points[i] for i in idx]
        ctor = (families.sextic_k3_246 if fam == "k3-246"
                else families.sextic_elliptic_224)
        X = ctor(base, fundamental)
    elif fam == "quintic-nu":
        if not args.points:
            raise DomainError("quintic-nu requires --points")
        pts = load_points(args.points, field)
        X = families.quintic_with_triple_points(pts)
    else:
        raise DomainError(f"unknown family {fam!r}")
    _emit(X.to_json(), args.output)


def cmd_certify(args):
    X = Surface.load(args.input)
    report = singular.certify(X, hilbert=args.hilbert or None)
    _emit(report.to_json(), args.output)


def cmd_cremona(args):
    X = Surface.load(args.input)
    image, mults = constructions.reciprocal_transform(X)
    out = image.to_json()
    out["vertex_multiplicities"] = list(mults)
    _emit(out, args.output)


def cmd_tangent_dim(args):
    X = Surface.load(args.input)
    pts = X.points
    if args.points:
        pts = load_points(args.points, X.field)
    if not pts:
        raise DomainError("no points declared or supplied")
    dim = singular.equisingular_tangent_dimension(X, pts)
    _emit({"dimension": dim, "points": len(pts)})


def cmd_dianode(args):
    field = Field.parse_tag(args.field)
    g = MultiPoly.parse(args.quartic, field)
    qs = [MultiPoly.parse(t, field) for t in args.quadric]
    if len(qs) != 3:
        raise DomainError("need exactly three --quadric forms")
    delta = constructions.dianode_surface(g, *qs)
    _emit({"polynomial": str(delta), "degree": delta.degree()})


def cmd_steiner(args):
    field = Field.parse_tag(args.field)
    qs = [MultiPoly.parse(t, field) for t in args.quadric]
    if len(qs) != 3:
        raise DomainError("need exactly three --quadric forms")
    minors = constructions.steiner_curve(*qs)
    _emit({"minors": [str(m) for m in minors]})


def cmd_linear_system(args):
    field = Field.parse_tag(args.field)
    pts = load_points(args.points, field)
    assignment = constructions.MultiplicityAssignment(
        [(P, args.multiplicity) for P in pts])
    basis = constructions.forms_with_multiplicity(args.degree, assignment)
    _emit({"dimension": len(basis),
           "basis": [str(g) for g in basis]})


def build_parser():
    p = argparse.ArgumentParser(
        prog="triplepoints",
        description="Exact computations on surfaces with ordinary "
                    "triple points.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="triple-point count bounds")
    b.add_argument("--degree", type=int)
    b.add_argument("--table", help="degree range lo..hi")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("spectrum", help="Brieskorn spectra")
    s.add_argument("--exponents", required=True)
    s.add_argument("--interval", help="open interval a,b")
    s.set_defaults(func=cmd_spectrum)

    i = sub.add_parser("invariants", help="resolution invariants")
    i.add_argument("--degree", type=int, required=True)
    i.add_argument("--nu", type=int, default=0)
    i.add_argument("--alpha", type=int, default=0)
    i.set_defaults(func=cmd_invariants)

    c = sub.add_parser("classify-sextic", help="the 18-class table")
    c.add_argument("--nu", type=int, required=True)
    c.add_argument("--pg", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--exc", help="(-1)-curve degrees c1,c2,c3")
    c.set_defaults(func=cmd_classify_sextic)

    co = sub.add_parser("construct", help="build a family member")
    co.add_argument("--family", required=True)
    co.add_argument("--params", default="")
    co.add_argument("--field")
    co.add_argument("--base", help="surface.json of the base member")
    co.add_argument("--fundamental", default="",
                    help="indices of the fundamental points")
    co.add_argument("--points", help="points.json for quintic-nu")
    co.add_argument("-o", "--output")
    co.set_defaults(func=cmd_construct)

    ce = sub.add_parser("certify", help="certify the singular locus")
    ce.add_argument("-i", "--input", required=True)
    ce.add_argument("--hilbert", action="store_true",
                    help="force the Hilbert-function computation")
    ce.add_argument("-o", "--output")
    ce.set_defaults(func=cmd_certify)

    cr = sub.add_parser("cremona", help="reciprocal transformation")
    cr.add_argument("-i", "--input", required=True)
    cr.add_argument("-o", "--output")
    cr.set_defaults(func=cmd_cremona)

    t = sub.add_parser("tangent-dim", help="equisingular tangent dimension")
    t.add_argument("-i", "--input", required=True)
    t.add_argument("--points")
    t.set_defaults(func=cmd_tangent_dim)

    d = sub.add_parser("dianode", help="Cayley dianode surface")
    d.add_argument("--field", required=True)
    d.add_argument("--quartic", required=True)
    d.add_argument("--quadric", action="append", default=[])
    d.set_defaults(func=cmd_dianode)

    st = sub.add_parser("steiner", help="Steiner curve of a net")
    st.add_argument("--field", required=True)
    st.add_argument("--quadric", action="append", default=[])
    st.set_defaults(func=cmd_steiner)

    ls = sub.add_parser("linear-system", help="forms through points")
    ls.add_argument("--field", required=True)
    ls.add_argument("--degree", type=int, required=True)
    ls.add_argument("--points", required=True)
    ls.add_argument("--multiplicity", type=int, default=1)
    ls.set_defaults(func=cmd_linear_system)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DomainError, ValueError, ArithmeticError, KeyError,
            FileNotFoundError, IndexError) as exc:
        sys.stdout.write(json.dumps(
            {"schema_version": SCHEMA_VERSION,
             "error": f"{type(exc).__name__}: {exc}"}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
