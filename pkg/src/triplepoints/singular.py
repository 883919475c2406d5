"""Local analysis at points of a surface: jets, multiplicity, the
ordinary-triple-point decision, singular-point enumeration over finite
fields, Jacobian Hilbert functions and the equisingular tangent space.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .fields import Field
from .poly import MultiPoly, exponents_of_degree, num_monomials
from .linalg import Matrix, rank, kernel_basis
from . import gfnum
from .surfaces import ProjPoint, Surface, SCHEMA_VERSION


class CertificationFailure(Exception):
    """A point is not an ordinary triple point; .reason says why."""

    def __init__(self, point, reason, **info):
        super().__init__(f"{point}: {reason}")
        self.point = point
        self.reason = reason
        self.info = info


class LocalJet:
    """Truncated Taylor expansion of a surface at a point.

    The chart coordinate is set to 1 and the remaining three coordinates,
    translated to the point, serve as local variables (in index order).
    terms maps local exponent triples of total degree <= order to
    coefficients.
    """

    __slots__ = ("field", "chart", "local_indices", "order", "terms")

    def __init__(self, field, chart, local_indices, order, terms):
        self.field = field
        self.chart = chart
        self.local_indices = tuple(local_indices)
        self.order = order
        self.terms = {e: c for e, c in terms.items() if c}

    def part(self, j: int) -> dict:
        return {e: c for e, c in self.terms.items() if sum(e) == j}

    def min_degree(self):
        """Order of vanishing, or None if the whole jet is zero."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def homogeneous_part_poly(self, j: int) -> MultiPoly:
        """Degree-j part as a MultiPoly in the global variable names."""
        terms = {}
        for e, c in self.part(j).items():
            ge = [0, 0, 0, 0]
            for m, idx in enumerate(self.local_indices):
                ge[idx] = e[m]
            terms[tuple(ge)] = c
        return MultiPoly(self.field, terms)

    def coeff_vector(self, up_to: int):
        """Coefficients against all local monomials of degree <= up_to."""
        z = self.field.zero
        out = []
        for j in range(up_to + 1):
            for e in exponents_of_degree(j, 3):
                out.append(self.terms.get(e, z))
        return out


def _binomial_factors(field, base, e, k):
    """Coefficients of (base + s)^e truncated at s^k, as a list."""
    out = []
    # term r: C(e, r) * base^(e-r) * s^r
    base_pows = [field.one]
    for _ in range(e):
        base_pows.append(base_pows[-1] * base)
    for r in range(min(e, k) + 1):
        out.append(field(comb(e, r)) * base_pows[e - r])
    return out


def local_jet(X: Surface, P: ProjPoint, k: int) -> LocalJet:
    """Order-k jet of X at P in the chart of P's leading coordinate."""
    if not (0 <= k):
        raise ValueError("negative jet order")
    field = X.field
    chart = P.chart
    local = [i for i in range(4) if i != chart]
    base = [P.coords[i] for i in local]
    jet_terms = {}
    fact_cache = {}
    for e, c in X.f.terms.items():
        # after setting the chart variable to 1, the term contributes
        # c * prod_m (base_m + s_m)^(e_m) truncated at total degree k
        parts = []
        for m in range(3):
            em = e[local[m]]
            key = (m, em)
            fl = fact_cache.get(key)
            if fl is None:
                fl = _binomial_factors(field, base[m], em, k)
                fact_cache[key] = fl
            parts.append(fl)
        for r0, f0 in enumerate(parts[0]):
            if not f0:
                continue
            for r1, f1 in enumerate(parts[1]):
                if r0 + r1 > k:
                    break
                if not f1:
                    continue
                f01 = f0 * f1
                for r2, f2 in enumerate(parts[2]):
                    if r0 + r1 + r2 > k:
                        break
                    if not f2:
                        continue
                    key2 = (r0, r1, r2)
                    v = c * f01 * f2
                    s = jet_terms.get(key2)
                    jet_terms[key2] = v if s is None else s + v
    return LocalJet(field, chart, local, k, jet_terms)


def multiplicity(X: Surface, P: ProjPoint) -> int:
    """Order of vanishing of X at P; 0 iff P is not on X."""
    jet = local_jet(X, P, X.degree)
    m = jet.min_degree()
    if m is None:
        # the dehomogenized translate of a nonzero form is nonzero
        raise AssertionError("zero local expansion of a nonzero surface")
    return m


class TriplePointCertificate:
    __slots__ = ("point", "multiplicity", "tangent_cone", "smooth_rank")

    def __init__(self, point, mult, tangent_cone, smooth_rank):
        self.point = point
        self.multiplicity = mult
        self.tangent_cone = tangent_cone
        self.smooth_rank = smooth_rank

    def __repr__(self):
        return f"TriplePointCertificate({self.point})"


def _cone_smooth_rank(cone_jet_part, field, local_indices):
    """Rank of degree-2-monomial multiples of the cone's partials.

    cone_jet_part: local exponent triple -> coefficient (degree 3).
    Full rank 15 means the three partial quadrics have no common
    projective zero, i.e. the cubic is smooth.
    """
    # partials of the ternary cubic with respect to the 3 local variables
    partials = []
    for i in range(3):
        d = {}
        for e, c in cone_jet_part.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            nc = c * e[i]
            if nc:
                d[tuple(ne)] = d.get(tuple(ne), field.zero) + nc
        partials.append(d)
    deg2 = exponents_of_degree(2, 3)
    deg4 = exponents_of_degree(4, 3)
    col = {e: j for j, e in enumerate(deg4)}
    rows = []
    for q in partials:
        for m in deg2:
            row = [field.zero] * 15
            for e, c in q.items():
                if c:
                    key = (e[0] + m[0], e[1] + m[1], e[2] + m[2])
                    row[col[key]] = row[col[key]] + c
            rows.append(row)
    return rank(Matrix(field, rows))


def certify_ordinary_triple_point(X: Surface, P: ProjPoint) -> TriplePointCertificate:
    """Certificate that P is an ordinary triple point of X, or raise.

    Requires multiplicity exactly 3 and a smooth tangent-cone cubic,
    decided by the rank-15 saturation test on the cone's partials.
    """
    if X.field.char in (2, 3):
        raise ValueError(
            "triple-point certification unsupported in characteristic 2, 3")
    jet = local_jet(X, P, 3)
    m = jet.min_degree()
    if m is None or m != 3:
        raise CertificationFailure(
            P, "multiplicity", multiplicity=(0 if m is None else m))
    cone = jet.part(3)
    r = _cone_smooth_rank(cone, X.field, jet.local_indices)
    if r != 15:
        raise CertificationFailure(P, "tangent cone singular", rank=r)
    return TriplePointCertificate(P, 3, jet.homogeneous_part_poly(3), r)


def is_ordinary_triple_point(X, P) -> bool:
    try:
        certify_ordinary_triple_point(X, P)
        return True
    except CertificationFailure:
        return False


# -- enumeration over finite fields -------------------------------------

_ENUM_LIMIT = 6_000_000


def _p3_chart_coords(q_elems, chart):
    """Canonical representatives (…,1,a,b,…) of one chart of P^3."""
    free = 3 - chart
    import itertools
    for tail in itertools.product(q_elems, repeat=free):
        yield (0,) * chart + (1,) + tail


def lift_poly(g: MultiPoly, big: Field) -> MultiPoly:
    """Lift a GF(p) polynomial into GF(p^2)."""
    return MultiPoly(big, {ex: big.lift(c) for ex, c in g.terms.items()})


def common_projective_zeros(polys, field: Field):
    """All points of P^3 over the finite field where every poly vanishes.

    Brute-force chart sweep; canonical points in lexicographic order of
    their canonical coordinates.
    """
    if field.kind == "QQ":
        raise ValueError("enumeration requires a finite field")
    p = field.p
    q = field.order
    if q**3 + q**2 + q + 1 > _ENUM_LIMIT:
        raise ValueError(f"P^3 over order-{q} field is too large to sweep")
    found = []
    if field.kind == "GF":
        terms_list = [[(ex, c.val) for ex, c in g.terms.items()] for g in polys]
        for chart in range(4):
            free = 3 - chart
            n = p**free
            coords = np.zeros((n, 4), dtype=np.int64)
            coords[:, chart] = 1
            idx = np.arange(n)
            for j in range(free):
                coords[:, chart + 1 + j] = (idx // p**(free - 1 - j)) % p
            ok = np.ones(n, dtype=bool)
            for terms in terms_list:
                vals = gfnum.eval_poly_batch(terms, coords, p)
                ok &= vals == 0
                if not ok.any():
                    break
            for row in coords[ok]:
                found.append(ProjPoint(field, [int(v) for v in row]))
    else:
        n_res = field.nonresidue
        terms_list = [[(ex, c.val) for ex, c in g.terms.items()] for g in polys]
        elems = [(a, b) for a in range(p) for b in range(p)]
        ea = np.array([t[0] for t in elems], dtype=np.int64)
        eb = np.array([t[1] for t in elems], dtype=np.int64)
        for chart in range(4):
            free = 3 - chart
            n = (p * p)**free
            ca = np.zeros((n, 4), dtype=np.int64)
            cb = np.zeros((n, 4), dtype=np.int64)
            ca[:, chart] = 1
            idx = np.arange(n)
            for j in range(free):
                sel = (idx // (p * p)**(free - 1 - j)) % (p * p)
                ca[:, chart + 1 + j] = ea[sel]
                cb[:, chart + 1 + j] = eb[sel]
            ok = np.ones(n, dtype=bool)
            for terms in terms_list:
                va, vb = gfnum.eval_poly_batch_ext(terms, ca, cb, p, n_res)
                ok &= (va == 0) & (vb == 0)
                if not ok.any():
                    break
            for ra, rb in zip(ca[ok], cb[ok]):
                found.append(ProjPoint(
                    field, [(int(a), int(b)) for a, b in zip(ra, rb)]))
    found.sort(key=lambda P: P.sort_key())
    return found


def enumerate_singular_points(X: Surface, e: int = 1):
    """All points of P^3(GF(p^e)) where f and its four partials vanish.

    e=2 lifts to the canonical quadratic extension (f is included along
    with the partials, which matters when p divides the degree).
    """
    if X.field.kind == "QQ":
        raise ValueError("enumeration requires a finite field")
    if e not in (1, 2):
        raise ValueError("extension degree must be 1 or 2")
    if X.field.kind == "GF2":
        if e != 1:
            raise ValueError("already an extension field")
        base = X.field
    else:
        base = X.field if e == 1 else X.field.extension()
    polys = [X.f] + [g for g in X.f.gradient() if g]
    if base != X.field:
        polys = [lift_poly(g, base) for g in polys]
    return common_projective_zeros(polys, base)


# -- Jacobian Hilbert function ------------------------------------------

def _hilbert_value(field, partials, d, k):
    """h(k) = dim (R/J)_k for J generated by the four partials."""
    nmon = num_monomials(k)
    if k < d - 1:
        return nmon
    mult_degree = k - d + 1
    col = {e: j for j, e in enumerate(exponents_of_degree(k))}
    if field.kind == "GF" and gfnum.NUMPY_SAFE_PRIME(field.p):
        p = field.p
        rows = []
        for g in partials:
            items = [(e, c.val) for e, c in g.terms.items()]
            for m in exponents_of_degree(mult_degree):
                row = np.zeros(nmon, dtype=np.int64)
                for e, c in items:
                    key = (e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3])
                    row[col[key]] = (row[col[key]] + c) % p
                rows.append(row)
        if not rows:
            return nmon
        r = gfnum.rank_mod_p(np.array(rows), p)
    else:
        rows = []
        z = field.zero
        for g in partials:
            for m in exponents_of_degree(mult_degree):
                row = [z] * nmon
                for e, c in g.terms.items():
                    key = (e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3])
                    row[col[key]] = row[col[key]] + c
                rows.append(row)
        if not rows:
            return nmon
        r = rank(Matrix(field, rows))
    return nmon - r


def jacobian_hilbert(X: Surface, k_max: int = None):
    """Hilbert function h(0..k_max) of R modulo the Jacobian ideal."""
    d = X.degree
    if k_max is None:
        k_max = 4 * d
    if k_max < d - 1:
        raise ValueError("k_max must be at least degree - 1")
    partials = [g for g in X.f.gradient() if g]
    return [_hilbert_value(X.field, partials, d, k) for k in range(k_max + 1)]


def singular_scheme_degree(X: Surface, k_max: int = None):
    """Degree of the singular scheme, or a positive-dimensional verdict.

    Computes the Jacobian Hilbert function until it is constant on three
    consecutive values (the degree) or the cutoff is hit with a strictly
    increasing tail (positive-dimensional); one retry at 2*k_max before
    giving up.

    Returns {"degree": n, "hilbert": [...]} or
    {"verdict": "positive-dimensional", "hilbert": [...]}.
    """
    d = X.degree
    if k_max is None:
        k_max = 4 * d
    partials = [g for g in X.f.gradient() if g]
    h = []
    for attempt in range(2):
        limit = k_max * (attempt + 1)
        k = len(h)
        while k <= limit:
            h.append(_hilbert_value(X.field, partials, d, k))
            k += 1
            if len(h) >= 3 and h[-1] == h[-2] == h[-3] and len(h) > d:
                return {"degree": h[-1], "hilbert": h}
        if h[-1] > h[-2] > h[-3]:
            return {"verdict": "positive-dimensional", "hilbert": h}
    raise ArithmeticError("Hilbert function did not stabilize; "
                          f"tail {h[-5:]}")


# -- equisingular tangent space -----------------------------------------

def _jet_coeff_vector(field, jet, order):
    """Jet as a vector over local monomials of degree <= order."""
    return jet.coeff_vector(order)


def equisingular_tangent_dimension(X: Surface, points) -> int:
    """Dimension of the projective equisingular tangent space at X.

    A degree-d form g is tangent to the equisingular stratum iff at each
    triple point its order-2 jet lies in the span of the order-2 jets of
    the four partials of f.  Returns dim of that space of forms minus 1
    (f itself always qualifies).
    """
    field = X.field
    d = X.degree
    for P in points:
        certify_ordinary_triple_point(X, P)
    partials = X.f.gradient()
    mons = exponents_of_degree(d)
    cond_rows = []
    for P in points:
        jets = [local_jet(_wrap(g), P, 2) if g else None for g in partials]
        jet_vecs = []
        for j in jets:
            if j is None:
                jet_vecs.append([field.zero] * 10)
            else:
                jet_vecs.append(j.coeff_vector(2))
        # annihilator of the span of the four jets
        functionals = kernel_basis(Matrix(field, jet_vecs))
        if not functionals:
            continue
        # order-2 jets of every degree-d monomial at P
        mono_jets = []
        for e in mons:
            mj = local_jet(_wrap(MultiPoly(field, {e: field.one})), P, 2)
            mono_jets.append(mj.coeff_vector(2))
        for phi in functionals:
            row = []
            for mv in mono_jets:
                s = field.zero
                for a, b in zip(phi, mv):
                    if a and b:
                        s = s + a * b
                row.append(s)
            cond_rows.append(row)
    nmon = len(mons)
    r = rank(Matrix(field, cond_rows)) if cond_rows else 0
    return nmon - r - 1


class _wrap:
    """Adapter exposing a bare polynomial with the Surface jet interface."""

    __slots__ = ("field", "f", "degree")

    def __init__(self, f):
        self.field = f.field
        self.f = f
        self.degree = max(f.degree(), 0)


# -- certification pipeline ---------------------------------------------

class CertificationReport:
    def __init__(self, surface, points_info, hilbert, expected_degree, verdict):
        self.surface = surface
        self.points_info = points_info
        self.hilbert = hilbert
        self.expected_degree = expected_degree
        self.verdict = verdict

    def to_json(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "surface": str(self.surface.f),
            "field": self.surface.field.tag,
            "points": self.points_info,
            "hilbert": self.hilbert,
            "expected_degree": self.expected_degree,
            "verdict": self.verdict,
        }


def certify(X: Surface, points=None, hilbert=None) -> CertificationReport:
    """Certify the singular locus of X.

    Over a finite field the singular points are enumerated; over the
    rationals the declared (or supplied) points are used.  hilbert=None
    computes the Hilbert evidence automatically over finite fields.
    """
    finite = X.field.kind != "QQ"
    if points is None:
        points = enumerate_singular_points(X) if finite else X.points
    if hilbert is None:
        hilbert = finite
    infos = []
    all_ok = True
    n_certified = 0
    for P in points:
        info = {"coords": P.to_json()}
        try:
            cert = certify_ordinary_triple_point(X, P)
            info["multiplicity"] = 3
            info["tangent_cone"] = str(cert.tangent_cone)
            info["smooth_rank"] = cert.smooth_rank
            n_certified += 1
        except CertificationFailure as exc:
            all_ok = False
            info["multiplicity"] = exc.info.get(
                "multiplicity", multiplicity(X, P))
            info["tangent_cone"] = None
            info["smooth_rank"] = exc.info.get("rank")
            info["failure"] = exc.reason
        infos.append(info)
    expected = 8 * n_certified
    hseq = None
    verdict = "failed"
    if hilbert:
        result = singular_scheme_degree(X)
        hseq = result["hilbert"]
        if "verdict" in result:
            verdict = "positive-dimensional-singular-locus"
        elif not all_ok:
            verdict = "failed"
        elif result["degree"] == expected:
            verdict = "certified-exact"
        else:
            verdict = "certified-rational-only"
    else:
        verdict = "certified-rational-only" if all_ok and infos else "failed"
    return CertificationReport(X, infos, hseq, expected, verdict)
