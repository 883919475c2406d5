"""Sparse homogeneous polynomials in x, y, z, w over an exact field.

Terms are stored as a map from exponent 4-tuples to nonzero coefficients.
The monomial order used everywhere a deterministic order is needed is
graded lexicographic with x > y > z > w.
"""
from __future__ import annotations

import re
from functools import lru_cache

from .fields import Field, FieldElement, FieldMismatchError

NVARS = 4
VAR_NAMES = ("x", "y", "z", "w")
_VAR_INDEX = {"x": 0, "y": 1, "z": 2, "w": 3, "t": 3}  # t is an alias of w


class InexactDivisionError(ArithmeticError):
    """Division left a nonzero remainder; the witness is `.remainder`."""

    def __init__(self, remainder):
        super().__init__(f"inexact division, remainder {remainder}")
        self.remainder = remainder


def grlex_key(exps):
    """Sort key; larger key = larger monomial in graded lex, x > y > z > w."""
    return (sum(exps), exps)


@lru_cache(maxsize=None)
def exponents_of_degree(k: int, nvars: int = NVARS):
    """All exponent tuples of total degree k, in grlex-descending order."""
    def gen(rest, n):
        if n == 1:
            yield (rest,)
            return
        for e in range(rest, -1, -1):
            for tail in gen(rest - e, n - 1):
                yield (e,) + tail
    return tuple(gen(k, nvars))


def num_monomials(k: int, nvars: int = NVARS) -> int:
    from math import comb
    return comb(k + nvars - 1, nvars - 1)


class MultiPoly:
    """Sparse polynomial in x, y, z, w.  Immutable by convention."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict):
        self.field = field
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {(0, 0, 0, 0): field(c)})

    @classmethod
    def variable(cls, field, i):
        e = [0] * NVARS
        e[i] = 1
        return cls(field, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, exps, c=1):
        return cls(field, {tuple(exps): field(c)})

    @classmethod
    def from_coeff_vector(cls, field, exps_list, coeffs):
        return cls(field, dict(zip(exps_list, coeffs)))

    # -- predicates and structure ---------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """The common degree of all terms, or None if not homogeneous."""
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def leading(self):
        """(exponents, coefficient) of the grlex-leading term."""
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]),
                      reverse=True)

    def _check(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine {self.field.tag} and {other.field.tag}")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.field, self.field(other))
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            terms[e] = c if s is None else s + c
        return MultiPoly(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = MultiPoly.constant(self.field, self.field(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(self.field(other))
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                c = c1 * c2
                s = terms.get(e)
                terms[e] = c if s is None else s + c
        return MultiPoly(self.field, terms)

    __rmul__ = __mul__

    def scale(self, c: FieldElement):
        c = self.field(c)
        if not c:
            return MultiPoly.zero(self.field)
        return MultiPoly(self.field, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus / evaluation ------------------------------------------

    def derivative(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            nc = c * e[i]
            if nc:
                terms[tuple(ne)] = terms.get(tuple(ne), self.field.zero) + nc
        return MultiPoly(self.field, terms)

    def gradient(self):
        return [self.derivative(i) for i in range(NVARS)]

    def evaluate(self, point) -> FieldElement:
        """Exact value at a 4-tuple of field elements."""
        pt = [self.field(c) for c in point]
        powers = [{0: self.field.one} for _ in range(NVARS)]
        total = self.field.zero
        for e, c in self.terms.items():
            v = c
            for i in range(NVARS):
                pw = powers[i].get(e[i])
                if pw is None:
                    pw = pt[i] ** e[i]
                    powers[i][e[i]] = pw
                v = v * pw
            total = total + v
        return total

    def substitute(self, images) -> "MultiPoly":
        """Replace each variable by the given polynomial, expanded exactly."""
        images = list(images)
        if len(images) != NVARS:
            raise ValueError("need one image per variable")
        for g in images:
            self._check(g)
        # fast path: every image is a monomial or zero, so terms map termwise
        if all(len(g.terms) <= 1 for g in images):
            mono = []
            for g in images:
                if g.terms:
                    ((e, c),) = g.terms.items()
                    mono.append((e, c))
                else:
                    mono.append(None)
            terms = {}
            for e, c in self.terms.items():
                ne = [0] * NVARS
                nc = c
                dead = False
                for i in range(NVARS):
                    if e[i] == 0:
                        continue
                    if mono[i] is None:
                        dead = True
                        break
                    me, mc = mono[i]
                    for j in range(NVARS):
                        ne[j] += me[j] * e[i]
                    if not mc.is_one():
                        nc = nc * mc ** e[i]
                if dead:
                    continue
                key = tuple(ne)
                s = terms.get(key)
                terms[key] = nc if s is None else s + nc
            return MultiPoly(self.field, terms)
        # general path with cached image powers
        pow_cache = [{0: MultiPoly.constant(self.field, 1)} for _ in range(NVARS)]

        def img_pow(i, e):
            pw = pow_cache[i].get(e)
            if pw is None:
                pw = img_pow(i, e - 1) * images[i]
                pow_cache[i][e] = pw
            return pw

        total = MultiPoly.zero(self.field)
        for e, c in self.terms.items():
            part = MultiPoly.constant(self.field, c)
            for i in range(NVARS):
                if e[i]:
                    part = part * img_pow(i, e[i])
            total = total + part
        return total

    def divide_exact(self, g: "MultiPoly") -> "MultiPoly":
        """Quotient h with self = g*h, else InexactDivisionError."""
        self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(g.terms) == 1:
            ((ge, gc),) = g.terms.items()
            gcinv = gc.inverse()
            terms = {}
            for e, c in self.terms.items():
                ne = tuple(e[i] - ge[i] for i in range(NVARS))
                if any(v < 0 for v in ne):
                    raise InexactDivisionError(
                        MultiPoly(self.field, {e: c}))
                terms[ne] = c * gcinv
            return MultiPoly(self.field, terms)
        ge, gc = g.leading()
        gcinv = gc.inverse()
        q_terms = {}
        r = self
        while r:
            re, rc = r.leading()
            ne = tuple(re[i] - ge[i] for i in range(NVARS))
            if any(v < 0 for v in ne):
                raise InexactDivisionError(r)
            qc = rc * gcinv
            q_terms[ne] = qc
            r = r - g * MultiPoly(self.field, {ne: qc})
        return MultiPoly(self.field, q_terms)

    def divisible_by_variable(self, i: int) -> bool:
        return bool(self.terms) and all(e[i] >= 1 for e in self.terms)

    def coeff_vector(self, exps_list):
        """Coefficients against an explicit monomial list."""
        z = self.field.zero
        return [self.terms.get(e, z) for e in exps_list]

    # -- text form -------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(VAR_NAMES, e) if k)
            sign = "+"
            cs = str(c)
            if self.field.kind == "QQ" and c.val < 0:
                sign = "-"
                cs = str(-c)
            if not mono:
                parts.append((sign, cs))
            elif cs == "1":
                parts.append((sign, mono))
            else:
                parts.append((sign, f"{cs}*{mono}"))
        first_sign, first = parts[0]
        out = (first if first_sign == "+" else "-" + first)
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"MultiPoly({self.field.tag}, {self})"

    @classmethod
    def parse(cls, text: str, field: Field) -> "MultiPoly":
        return _parse_poly(text, field)


_TOKEN_RE = re.compile(r"""
    (?P<gf2>\(\s*-?\d+\s*(?:\+\s*-?\d+\s*\*?\s*u\s*)?\))
  | (?P<num>\d+)
  | (?P<var>[xyzwt])
  | (?P<op>[\^+\-*/])
  | (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"bad character in polynomial at {text[pos:]!r}")
        pos = m.end()
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group()))
    return out


def _parse_poly(text: str, field: Field) -> MultiPoly:
    toks = _tokenize(text)
    i = 0
    n = len(toks)

    def peek():
        return toks[i] if i < n else (None, None)

    result = MultiPoly.zero(field)
    first = True
    while i < n:
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ValueError(f"expected + or - before {val!r}")
        first = False
        # term: optional coefficient then optional monomial
        coeff = None
        kind, val = peek()
        if kind == "gf2":
            coeff = field.parse(val)
            i += 1
        elif kind == "num":
            num = int(val)
            i += 1
            kind2, val2 = peek()
            if kind2 == "op" and val2 == "/":
                i += 1
                kind3, val3 = peek()
                if kind3 != "num":
                    raise ValueError("expected denominator")
                i += 1
                coeff = field.frac(num, int(val3))
            else:
                coeff = field(num)
        exps = [0, 0, 0, 0]
        saw_var = False
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                kind2, val2 = toks[i + 1] if i + 1 < n else (None, None)
                if kind2 != "var":
                    break
                i += 1
                kind, val = peek()
            if kind != "var":
                break
            idx = _VAR_INDEX[val]
            i += 1
            e = 1
            kind, val = peek()
            if kind == "op" and val == "^":
                i += 1
                kind, val = peek()
                if kind != "num":
                    raise ValueError("expected exponent after ^")
                e = int(val)
                i += 1
            exps[idx] += e
            saw_var = True
        if coeff is None and not saw_var:
            raise ValueError("empty term")
        if coeff is None:
            coeff = field.one
        if sign < 0:
            coeff = -coeff
        result = result + MultiPoly(field, {tuple(exps): coeff})
    if first:
        raise ValueError("empty polynomial text")
    return result


def poly_determinant(rows) -> MultiPoly:
    """Exact determinant of a square matrix of MultiPoly (n <= 8).

    Laplace expansion with memoized minors over column subsets.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n > 8:
        raise ValueError("determinant supported only for n <= 8")
    field = rows[0][0].field
    memo = {}

    def minor(cols):
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        if len(cols) == 1:
            val = rows[r][cols[0]]
        else:
            val = MultiPoly.zero(field)
            for j, c in enumerate(cols):
                entry = rows[r][c]
                if not entry:
                    continue
                sub = minor(cols[:j] + cols[j + 1:])
                term = entry * sub
                val = val + term if j % 2 == 0 else val - term
        memo[cols] = val
        return val

    return minor(tuple(range(n)))
