"""Exact polynomial algebra for implicit equations of focal curves.

Everything here runs over the rationals via ``fractions.Fraction``: univariate
polynomials, bivariate polynomials, rational functions, and the elimination
machinery (subresultant pseudo-remainder sequences) that turns a rational
parametrization into an implicit equation.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .geometry import PlanePoint

Rational = Fraction
Number = Union[int, float, Fraction]


class DegenerateParametrization(ValueError):
    """The parametrization traces a point or a repeated/defective locus."""


class DegenerateFamily(ValueError):
    """The requested family member reduces to an affine function."""


class NotAConic(ValueError):
    """The polynomial does not have total degree two."""


def _gcd_int(a: int, b: int) -> int:
    return math.gcd(a, b)


def _content_of(fracs: Iterable[Fraction]) -> Fraction:
    """Positive rational c such that the values divided by c are coprime integers."""
    num_gcd = 0
    den_lcm = 1
    seen = False
    for f in fracs:
        seen = True
        num_gcd = _gcd_int(num_gcd, f.numerator)
        den_lcm = den_lcm * f.denominator // _gcd_int(den_lcm, f.denominator)
    if not seen or num_gcd == 0:
        return Fraction(0)
    return Fraction(num_gcd, den_lcm)


# ---------------------------------------------------------------------------
# Univariate polynomials


class Poly1:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored low degree first; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly1 is immutable")

    @staticmethod
    def zero() -> "Poly1":
        return Poly1()

    @staticmethod
    def one() -> "Poly1":
        return Poly1([1])

    @staticmethod
    def variable() -> "Poly1":
        return Poly1([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly1":
        return Poly1([-c for c in self.coeffs])

    def __add__(self, other: "Poly1") -> "Poly1":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly1(out)

    def __sub__(self, other: "Poly1") -> "Poly1":
        return self + (-other)

    def __mul__(self, other: "Poly1") -> "Poly1":
        if self.is_zero() or other.is_zero():
            return Poly1()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly1(out)

    def scale(self, c: Number) -> "Poly1":
        c = Fraction(c)
        return Poly1([a * c for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly1":
        if n < 0:
            raise ValueError("negative power")
        result = Poly1.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly1"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree()
        lc = other.leading()
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] / lc
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[i + k] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly1(q), Poly1(rem)

    def __floordiv__(self, other: "Poly1") -> "Poly1":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly1") -> "Poly1":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly1") -> "Poly1":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly1":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def derivative(self) -> "Poly1":
        return Poly1([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> Fraction:
        return _content_of(self.coeffs)

    def primitive(self) -> "Poly1":
        c = self.content()
        if c == 0:
            return self
        return self.scale(1 / c)

    def eval(self, x):
        """Horner evaluation; exact when x is a Fraction, float otherwise."""
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __repr__(self) -> str:
        return f"Poly1({list(self.coeffs)!r})"


def poly1_gcd(a: Poly1, b: Poly1) -> Poly1:
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of coprime polynomials with joint integer-primitive coefficients.

    The denominator is nonzero with positive leading coefficient.
    """

    num: Poly1
    den: Poly1

    def __init__(self, num: Poly1, den: Poly1):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly1_gcd(num, den)
        if not g.is_zero() and g.degree() >= 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        c = _content_of(list(num.coeffs) + list(den.coeffs))
        if c != 0:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        if den.leading() < 0:
            num = -num
            den = -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def eval(self, t):
        d = self.den.eval(t)
        if d == 0:
            raise ZeroDivisionError("pole of the rational function")
        return self.num.eval(t) / d

    def degrees(self) -> tuple:
        return (self.num.degree(), self.den.degree())

    def is_affine(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 1


# ---------------------------------------------------------------------------
# Bivariate polynomials


def _gl_key(mon: tuple) -> tuple:
    # graded lexicographic order with x before y
    return (mon[0] + mon[1], mon[0])


class Poly2:
    """Bivariate polynomial in x and y with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for mon, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    cleaned[(int(mon[0]), int(mon[1]))] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Poly2 is immutable")

    @staticmethod
    def zero() -> "Poly2":
        return Poly2()

    @staticmethod
    def constant(c: Number) -> "Poly2":
        return Poly2({(0, 0): Fraction(c)})

    @staticmethod
    def one() -> "Poly2":
        return Poly2.constant(1)

    @staticmethod
    def x() -> "Poly2":
        return Poly2({(1, 0): 1})

    @staticmethod
    def y() -> "Poly2":
        return Poly2({(0, 1): 1})

    @staticmethod
    def monomial(dx: int, dy: int, c: Number = 1) -> "Poly2":
        return Poly2({(dx, dy): Fraction(c)})

    def coeff(self, dx: int, dy: int) -> Fraction:
        return self.terms.get((dx, dy), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.total_degree() <= 0

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for (i, j) in self.terms)

    def degree_x(self) -> int:
        if not self.terms:
            return -1
        return max(i for (i, _) in self.terms)

    def degree_y(self) -> int:
        if not self.terms:
            return -1
        return max(j for (_, j) in self.terms)

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=_gl_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly2":
        return Poly2({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly2(out)

    def __sub__(self, other: "Poly2") -> "Poly2":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return Poly2(out)

    def __mul__(self, other: "Poly2") -> "Poly2":
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly2(out)

    def scale(self, c: Number) -> "Poly2":
        c = Fraction(c)
        return Poly2({m: v * c for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValueError("negative power")
        result = Poly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: "Poly2") -> "Poly2":
        """Exact quotient; raises ValueError if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lt_mon = other.leading_monomial()
        lt_c = other.terms[lt_mon]
        rem = dict(self.terms)
        out = {}
        while rem:
            mon = max(rem, key=_gl_key)
            di, dj = mon[0] - lt_mon[0], mon[1] - lt_mon[1]
            if di < 0 or dj < 0:
                raise ValueError("division is not exact")
            qc = rem[mon] / lt_c
            out[(di, dj)] = out.get((di, dj), Fraction(0)) + qc
            for (oi, oj), oc in other.terms.items():
                k = (oi + di, oj + dj)
                nv = rem.get(k, Fraction(0)) - qc * oc
                if nv == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = nv
        return Poly2(out)

    def derivative(self, var: str) -> "Poly2":
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i > 0:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + i * c
            elif var == "y" and j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + j * c
        return Poly2(out)

    def eval(self, x, y):
        """Exact when x, y are Fractions, float otherwise."""
        result = x * 0
        for (i, j), c in self.terms.items():
            result = result + c * x**i * y**j
        return result

    def content(self) -> Fraction:
        return _content_of(self.terms.values())

    def normalized(self) -> "Poly2":
        """Integer coefficients with content one and positive leading coefficient.

        The leading term is taken in graded lexicographic order with x > y.
        """
        if self.is_zero():
            return self
        c = self.content()
        p = self.scale(1 / c)
        if p.leading_coeff() < 0:
            p = -p
        return p

    def substitute_linear(self, u: "Poly2", v: "Poly2") -> "Poly2":
        """Plain substitution x -> u, y -> v."""
        result = Poly2.zero()
        for (i, j), c in self.terms.items():
            result = result + (u**i * v**j).scale(c)
        return result

    def to_json_obj(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: _gl_key(kv[0]), reverse=True)
        return {
            "terms": [
                {"dx": m[0], "dy": m[1], "num": str(c.numerator), "den": str(c.denominator)}
                for m, c in items
            ]
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "Poly2":
        terms = {}
        for t in obj["terms"]:
            mon = (int(t["dx"]), int(t["dy"]))
            terms[mon] = terms.get(mon, Fraction(0)) + Fraction(int(t["num"]), int(t["den"]))
        return Poly2(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Poly2":
        return Poly2.from_json_obj(json.loads(text))

    def equation_str(self) -> str:
        """Render as a sum of monomials in descending graded-lex order, e.g. 'x^2 + 4*x*y - 2*x + 1'."""
        if self.is_zero():
            return "0"
        parts = []
        items = sorted(self.terms.items(), key=lambda kv: _gl_key(kv[0]), reverse=True)
        for idx, ((i, j), c) in enumerate(items):
            neg = c < 0
            mag = -c if neg else c
            factors = []
            if mag != 1 or (i == 0 and j == 0):
                if mag.denominator == 1:
                    factors.append(str(mag.numerator))
                else:
                    factors.append(f"{mag.numerator}/{mag.denominator}")
            if i == 1:
                factors.append("x")
            elif i > 1:
                factors.append(f"x^{i}")
            if j == 1:
                factors.append("y")
            elif j > 1:
                factors.append(f"y^{j}")
            term = "*".join(factors)
            if idx == 0:
                parts.append("-" + term if neg else term)
            else:
                parts.append((" - " if neg else " + ") + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly2({self.equation_str()!r})"


def substitute_rational(g: Poly2, u: Poly2, v: Poly2, w: Poly2) -> Poly2:
    """Homogenized substitution x -> u/w, y -> v/w cleared by w**total_degree(g)."""
    n = g.total_degree()
    if n < 0:
        return Poly2.zero()
    wpow = [Poly2.one()]
    for _ in range(n):
        wpow.append(wpow[-1] * w)
    result = Poly2.zero()
    for (i, j), c in g.terms.items():
        result = result + (u**i * v**j * wpow[n - i - j]).scale(c)
    return result


# ---------------------------------------------------------------------------
# Polynomials in an elimination variable t with Poly2 coefficients
#
# Represented as plain lists of Poly2, low degree first, trimmed.


def _pt_trim(cs: list) -> list:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _pt_prem(a: list, b: list) -> list:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lcr = r[-1]
        k = len(r) - 1 - db
        r = [lcb * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] = r[i + k] - lcr * bc
        r.pop()
        _pt_trim(r)
        e -= 1
    if e > 0:
        f = lcb**e
        r = [c * f for c in r]
    return r


def resultant_in_t(f: Sequence[Poly2], g: Sequence[Poly2]) -> Poly2:
    """Resultant of two polynomials in t with Poly2 coefficients.

    Subresultant pseudo-remainder sequence; all divisions are exact over
    the coefficient ring, so no coefficient blowup or rounding occurs.
    """
    a = _pt_trim(list(f))
    b = _pt_trim(list(g))
    if not a or not b:
        return Poly2.zero()
    da, db = len(a) - 1, len(b) - 1
    if da == 0 and db == 0:
        return Poly2.one()
    sign = 1
    if da < db:
        a, b = b, a
        if (da & 1) and (db & 1):
            sign = -sign
        da, db = db, da
    if db == 0:
        r = b[0] ** da
        return -r if sign < 0 else r
    gc = Poly2.one()
    h = Poly2.one()
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            sign = -sign
        r = _pt_prem(a, b)
        if not r:
            return Poly2.zero()
        denom = gc * h**delta
        nb = [c.exact_div(denom) for c in r]
        a = b
        gc = a[-1]
        if delta == 1:
            h = gc
        elif delta > 1:
            h = (gc**delta).exact_div(h ** (delta - 1))
        b = nb
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    lcb = b[0]
    if da == 1:
        res = lcb
    else:
        res = (lcb**da).exact_div(h ** (da - 1))
    return -res if sign < 0 else res


# ---------------------------------------------------------------------------
# Bivariate gcd and square-free part


def _as_x_poly(p: Poly2) -> list:
    """View a Poly2 as a polynomial in x with Poly1-in-y coefficients."""
    if p.is_zero():
        return []
    dx = p.degree_x()
    cols = [dict() for _ in range(dx + 1)]
    for (i, j), c in p.terms.items():
        cols[i][j] = c
    out = []
    for col in cols:
        if col:
            size = max(col) + 1
            cs = [col.get(k, Fraction(0)) for k in range(size)]
            out.append(Poly1(cs))
        else:
            out.append(Poly1())
    return _px_trim(out)


def _px_trim(cs: list) -> list:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _from_x_poly(cs: Sequence[Poly1]) -> Poly2:
    terms = {}
    for i, p in enumerate(cs):
        for j, c in enumerate(p.coeffs):
            if c != 0:
                terms[(i, j)] = c
    return Poly2(terms)


def _px_content(cs: Sequence[Poly1]) -> Poly1:
    g = Poly1.zero()
    for c in cs:
        g = poly1_gcd(g, c)
        if g.degree() == 0:
            return Poly1.one()
    return g if not g.is_zero() else Poly1.zero()


def _px_prem(a: list, b: list) -> list:
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lcr = r[-1]
        k = len(r) - 1 - db
        r = [lcb * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] = r[i + k] - lcr * bc
        r.pop()
        _px_trim(r)
        e -= 1
    if e > 0:
        f = lcb**e
        r = [c * f for c in r]
    return r


def poly2_gcd(f: Poly2, g: Poly2) -> Poly2:
    """Greatest common divisor in Q[x, y], returned in normalized form."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    fx = _as_x_poly(f)
    gx = _as_x_poly(g)
    cf = _px_content(fx)
    cg = _px_content(gx)
    ppf = [c.exact_div(cf) for c in fx]
    ppg = [c.exact_div(cg) for c in gx]
    cont_gcd = poly1_gcd(cf, cg)
    if len(ppf) - 1 < len(ppg) - 1:
        ppf, ppg = ppg, ppf
    # primitive pseudo-remainder sequence in x over Q[y]
    a, b = ppf, ppg
    while True:
        if not b:
            pp = a
            break
        if len(b) - 1 == 0:
            pp = [Poly1.one()]
            break
        r = _px_prem(a, b)
        if r:
            cr = _px_content(r)
            if cr.degree() > 0:
                r = [c.exact_div(cr) for c in r]
        a, b = b, r
    pc = _px_content(pp)
    if pc.degree() > 0:
        pp = [c.exact_div(pc) for c in pp]
    result = _from_x_poly(pp) * _from_x_poly([cont_gcd])
    return result.normalized()


def square_free_part(g: Poly2) -> Poly2:
    """Product of the distinct irreducible factors of g, normalized."""
    if g.is_zero() or g.is_constant():
        return g.normalized()
    d = poly2_gcd(poly2_gcd(g, g.derivative("x")), g.derivative("y"))
    if d.is_constant():
        return g.normalized()
    return g.exact_div(d).normalized()


# ---------------------------------------------------------------------------
# Focal parametrization of a rational function and its implicit equation


def focal_triple(rf: RationalFunction) -> tuple:
    """Numerators (A, B, C) of the homogeneous focal parametrization of P/Q.

    The moving focus of t -> P(t)/Q(t) is (A(t) : B(t) : C(t)) with
    A = Q^2, B = PQ - t*(P'Q - PQ'), C = PQ' - P'Q + Q^2; the common
    rational content of the three is removed.
    """
    p, q = rf.num, rf.den
    dp, dq = p.derivative(), q.derivative()
    t = Poly1.variable()
    wr = dp * q - p * dq
    a = q * q
    b = p * q - t * wr
    c = p * dq - dp * q + q * q
    cont = _content_of(list(a.coeffs) + list(b.coeffs) + list(c.coeffs))
    if cont not in (0, 1):
        a, b, c = a.scale(1 / cont), b.scale(1 / cont), c.scale(1 / cont)
    return (a, b, c)


def expected_degree(p: int, q: int) -> int:
    """Degree of the focal curve of a generic rational function with deg num p, deg den q."""
    if p < 0 or q < 0:
        raise ValueError("degrees must be nonnegative")
    if p <= q + 1:
        return 2 * q
    return p + q


def _probe_points(a: Poly1, b: Poly1, c: Poly1, count: int = 20) -> list:
    """Exact points (a/c, b/c)(t) at random rational parameters off the poles of c."""
    rng = random.Random(20260814)
    pts = []
    seen = set()
    guard = 0
    while len(pts) < count:
        guard += 1
        if guard > 10000:
            break
        t = Fraction(rng.randint(-240, 240), rng.randint(1, 16))
        if t in seen:
            continue
        seen.add(t)
        cv = c.eval(t)
        if cv == 0:
            continue
        pts.append((a.eval(t) / cv, b.eval(t) / cv))
    return pts


def implicitize(a: Poly1, b: Poly1, c: Poly1) -> Poly2:
    """Implicit equation of the curve traced by t -> (a(t)/c(t), b(t)/c(t)).

    Eliminates t from x*c - a and y*c - b by a subresultant resultant, then
    strips content factors pure in x or pure in y that vanish nowhere on the
    curve (checked at twenty exact random parameter probes) and returns the
    square-free normalized result.

    Raises DegenerateParametrization when the point is constant or the
    resultant vanishes identically.
    """
    if c.is_zero():
        raise DegenerateParametrization("zero denominator")
    g = poly1_gcd(poly1_gcd(a, b), c)
    if g.degree() > 0:
        a, b, c = a.exact_div(g), b.exact_div(g), c.exact_div(g)
    if a.degree() <= 0 and b.degree() <= 0 and c.degree() <= 0:
        raise DegenerateParametrization("the parametrization is a single point")
    f_t = _pt_trim([Poly2.x().scale(ci) - Poly2.constant(ai) for ci, ai in _padded(c, a)])
    g_t = _pt_trim([Poly2.y().scale(ci) - Poly2.constant(bi) for ci, bi in _padded(c, b)])
    res = resultant_in_t(f_t, g_t)
    if res.is_zero():
        raise DegenerateParametrization("the eliminant vanishes identically")
    pts = _probe_points(a, b, c)
    res = _strip_extraneous(res, pts)
    return square_free_part(res).normalized()


def _padded(c: Poly1, a: Poly1) -> list:
    n = max(len(c.coeffs), len(a.coeffs))
    cs = list(c.coeffs) + [Fraction(0)] * (n - len(c.coeffs))
    as_ = list(a.coeffs) + [Fraction(0)] * (n - len(a.coeffs))
    return list(zip(cs, as_))


def _content_in_x(p: Poly2) -> Poly2:
    """Gcd in Q[y] of the coefficients of p viewed as a polynomial in x."""
    cols = {}
    for (i, j), c in p.terms.items():
        cols.setdefault(i, {})[j] = c
    g = Poly1.zero()
    for col in cols.values():
        size = max(col) + 1
        g = poly1_gcd(g, Poly1([col.get(k, Fraction(0)) for k in range(size)]))
        if g.degree() == 0:
            return Poly2.one()
    return Poly2({(0, j): c for j, c in enumerate(g.coeffs) if c != 0})


def _content_in_y(p: Poly2) -> Poly2:
    cols = {}
    for (i, j), c in p.terms.items():
        cols.setdefault(j, {})[i] = c
    g = Poly1.zero()
    for col in cols.values():
        size = max(col) + 1
        g = poly1_gcd(g, Poly1([col.get(k, Fraction(0)) for k in range(size)]))
        if g.degree() == 0:
            return Poly2.one()
    return Poly2({(i, 0): c for i, c in enumerate(g.coeffs) if c != 0})


def _strip_extraneous(res: Poly2, pts: list) -> Poly2:
    """Remove pure-x / pure-y content factors that miss every probe point."""
    for extractor in (_content_in_x, _content_in_y):
        h = extractor(res)
        if h.total_degree() > 0 and pts and all(h.eval(px, py) != 0 for px, py in pts):
            res = res.exact_div(h)
    return res


# ---------------------------------------------------------------------------
# The conic family f(x) = (a x^2 + b x + c) / (d x + e)


def conic_from_family(a: Number, b: Number, c: Number, d: Number, e: Number) -> Poly2:
    """Implicit conic of the focal curve of (a*x^2 + b*x + c)/(d*x + e), in closed form.

    Raises DegenerateFamily when the quotient reduces to an affine function
    (zero denominator aside, that is exactly when the focal locus collapses).
    """
    a, b, c, d, e = (Fraction(v) for v in (a, b, c, d, e))
    if d == 0 and e == 0:
        raise DegenerateFamily("zero denominator")
    rf = RationalFunction(Poly1([c, b, a]), Poly1([e, d]))
    if rf.is_affine():
        raise DegenerateFamily("the function reduces to an affine function")
    coeff_x2 = b * b - 4 * a * c + 4 * c * d - 2 * b * e + e * e
    coeff_xy = -2 * (b * d - 2 * a * e + d * e)
    coeff_y2 = d * d
    coeff_x = -2 * (2 * c * d - b * e + e * e)
    coeff_y = 2 * d * e
    coeff_1 = e * e
    g = Poly2(
        {
            (2, 0): coeff_x2,
            (1, 1): coeff_xy,
            (0, 2): coeff_y2,
            (1, 0): coeff_x,
            (0, 1): coeff_y,
            (0, 0): coeff_1,
        }
    )
    if g.is_zero():
        raise DegenerateFamily("the focal conic collapses")
    return g.normalized()


class ConicClass(Enum):
    ELLIPSE = "ellipse"
    CIRCLE = "circle"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


def classify_conic(g: Poly2) -> ConicClass:
    """Classify a total-degree-two polynomial by exact rational arithmetic.

    The conic A x^2 + B xy + C y^2 + D x + E y + F is degenerate when the
    determinant of its symmetric matrix vanishes; otherwise the sign of
    B^2 - 4AC separates hyperbola, parabola and ellipse, with circles the
    ellipses having A = C and B = 0.
    """
    if g.total_degree() != 2:
        raise NotAConic("total degree is not two")
    A = g.coeff(2, 0)
    B = g.coeff(1, 1)
    C = g.coeff(0, 2)
    D = g.coeff(1, 0)
    E = g.coeff(0, 1)
    F = g.coeff(0, 0)
    det = (
        A * (C * F - E * E / 4)
        - (B / 2) * (B * F / 2 - E * D / 4)
        + (D / 2) * (B * E / 4 - C * D / 2)
    )
    if det == 0:
        return ConicClass.DEGENERATE
    disc = B * B - 4 * A * C
    if disc > 0:
        return ConicClass.HYPERBOLA
    if disc == 0:
        return ConicClass.PARABOLA
    if A == C and B == 0:
        return ConicClass.CIRCLE
    return ConicClass.ELLIPSE


def vertical_axis_meet(g: Poly2, rf: RationalFunction) -> list:
    """Intersections of the curve g = 0 with the input axis x = 0.

    rf is the family member whose focal curve g is; its denominator must
    have positive degree, otherwise the meeting point lies at infinity.
    Returns a list of (PlanePoint, tangent_is_vertical) pairs, one per real
    intersection, computed exactly for rational roots and by the quadratic
    formula otherwise; the tangent is vertical when dg/dy vanishes there.
    """
    if rf.den.degree() < 1:
        raise ValueError("denominator is constant: the axis meeting point is at infinity")
    coeffs = {}
    for (i, j), c in g.terms.items():
        if i == 0:
            coeffs[j] = c
    restricted = Poly1([coeffs.get(k, Fraction(0)) for k in range(max(coeffs, default=0) + 1)])
    if restricted.is_zero():
        raise ValueError("the curve contains the axis x = 0")
    roots = _real_roots(restricted)
    gy = g.derivative("y")
    out = []
    for r in roots:
        if isinstance(r, Fraction):
            vertical = gy.eval(Fraction(0), r) == 0
            out.append((PlanePoint(0.0, float(r)), vertical))
        else:
            vertical = abs(gy.eval(0.0, r)) <= 1e-9
            out.append((PlanePoint(0.0, r), vertical))
    return out


def _real_roots(p: Poly1) -> list:
    """Real roots of a polynomial of degree <= 2 (exact Fractions when rational)."""
    d = p.degree()
    if d <= 0:
        return []
    if d == 1:
        b, a = p.coeffs
        return [-b / a]
    if d == 2:
        c, b, a = p.coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        if disc == 0:
            return [-b / (2 * a)]
        s = _fraction_sqrt(disc)
        if s is not None:
            return sorted([(-b - s) / (2 * a), (-b + s) / (2 * a)])
        fs = math.sqrt(float(disc))
        return sorted([float((-b) / (2 * a)) - fs / float(2 * a), float((-b) / (2 * a)) + fs / float(2 * a)])
    raise ValueError("only degrees up to two are supported")


def _fraction_sqrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None
