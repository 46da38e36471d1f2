"""Hyperelliptic curves y^2 = f(x) and Jacobian arithmetic in Mumford
coordinates.

Curves are built from the distinct roots of f, so f = prod(x - alpha_i)
is monic of odd degree 2g+1 and the curve has a single point at infinity.
Group classes are the unique reduced Mumford pairs (U, V): U monic with
deg U <= g, deg V < deg U, and U dividing V^2 - f. The group law is
Cantor composition followed by classical reduction; it shares no code
with the closed-form halving formulas, which is what lets the two sides
check each other.

All enumeration orders are deterministic: field elements by canonical
index, points by (x index, y index) with infinity last, theta strata by
(deg U, U coefficient vector, V coefficient vector), two-torsion classes
by (subset size, lexicographic root indices).
"""

import itertools
import math

from . import errors
from .field import field_spec, parse_element, parse_field_spec, sqrt
from .poly import (
    NEG_INFINITY,
    Polynomial,
    from_roots,
    gcd_xgcd,
    poly_from_json,
    poly_to_json,
    roots_in_field,
)


class HyperellipticCurve:
    """y^2 = f(x) with f monic of odd degree, given by its roots."""

    __slots__ = ("field", "alphas", "g", "f", "_hash")

    def __init__(self, field, alphas):
        alphas = tuple(field(a) for a in alphas)
        n = len(alphas)
        if n % 2 == 0:
            raise errors.EvenCount("need an odd number of roots, got %d" % n)
        if n < 3:
            raise errors.TooFewRoots("need at least 3 roots, got %d" % n)
        if len(set(alphas)) != n:
            raise errors.DuplicateRoots("curve roots must be pairwise distinct")
        self.field = field
        self.alphas = alphas
        self.g = (n - 1) // 2
        self.f = from_roots(field, alphas)
        self._hash = None
        g, _, _ = gcd_xgcd(self.f, self.f.derivative())
        if g.degree != 0:
            raise errors.DuplicateRoots("f is not squarefree")

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, HyperellipticCurve):
            return self.field == other.field and self.alphas == other.alphas
        return NotImplemented


    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.alphas))
        return self._hash

    def __repr__(self):
        return "HyperellipticCurve(%r, g=%d)" % (self.field, self.g)


class CurvePoint:
    """A point of the curve: affine (x, y) with y^2 = f(x), or infinity."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x, y):
        self.curve = curve
        if x is None:
            if y is not None:
                raise ValueError("the point at infinity has no coordinates")
            self.x = None
            self.y = None
            return
        x = curve.field(x)
        y = curve.field(y)
        if y * y != curve.f.eval(x):
            raise errors.PointNotOnCurve("y^2 != f(x) at x = %s" % x)
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls, curve):
        return cls(curve, None, None)

    @property
    def is_infinity(self):
        return self.x is None

    def involution(self):
        """The hyperelliptic involution (x, y) -> (x, -y)."""
        if self.is_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __eq__(self, other):
        if isinstance(other, CurvePoint):
            return (self.curve == other.curve
                    and self.x == other.x and self.y == other.y)
        return NotImplemented


    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __str__(self):
        if self.is_infinity:
            return "inf"
        return "(%s, %s)" % (self.x, self.y)

    def __repr__(self):
        return "CurvePoint(%s)" % self


def _mumford_failure(curve, U, V):
    """None if (U, V) is a reduced Mumford pair on the curve, else why not."""
    if U.field != curve.field or V.field != curve.field:
        return "coefficient field does not match the curve"
    if U.is_zero() or not U.is_monic():
        return "U must be monic"
    if U.degree > curve.g:
        return "deg U exceeds the genus"
    if not V.degree < U.degree:
        return "deg V must be smaller than deg U"
    if not ((V * V - curve.f) % U).is_zero():
        return "U does not divide V^2 - f"
    return None


class MumfordDivisor:
    """Reduced Mumford pair (U, V) representing a Jacobian class."""

    __slots__ = ("curve", "U", "V")

    def __init__(self, curve, U, V, validate=True):
        if validate:
            why = _mumford_failure(curve, U, V)
            if why is not None:
                raise errors.InvalidDivisor(why)
        self.curve = curve
        self.U = U
        self.V = V

    @classmethod
    def identity(cls, curve):
        return cls(curve, Polynomial.one(curve.field),
                   Polynomial.zero(curve.field), validate=False)

    def is_identity(self):
        return self.U.degree == 0

    def __eq__(self, other):
        if isinstance(other, MumfordDivisor):
            return (self.curve == other.curve
                    and self.U == other.U and self.V == other.V)
        return NotImplemented


    def __hash__(self):
        return hash((self.curve, self.U, self.V))

    def __add__(self, other):
        if isinstance(other, MumfordDivisor):
            return add(self, other)
        return NotImplemented

    def __neg__(self):
        return neg(self)

    def __mul__(self, n):
        if isinstance(n, int):
            return scalar_mul(n, self)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return "(U = %s, V = %s)" % (self.U, self.V)

    def __repr__(self):
        return "MumfordDivisor%s" % (self,)


def curve_make(field, alphas):
    """Curve y^2 = prod(x - alpha_i) from 2g+1 distinct roots."""
    return HyperellipticCurve(field, alphas)


def curve_from_coeffs(field, coeffs):
    """Convenience constructor from the coefficients of f, which must be
    monic of odd degree and split over the field with distinct roots."""
    f = Polynomial(field, coeffs)
    if f.is_zero() or not f.is_monic():
        raise ValueError("f must be monic")
    found = roots_in_field(f)
    for r, m in found:
        if m > 1:
            raise errors.DuplicateRoots("root %s has multiplicity %d" % (r, m))
    if sum(m for _, m in found) != f.degree:
        raise errors.DoesNotSplit("f does not split over %r" % field)
    return HyperellipticCurve(field, [r for r, _ in found])


def mumford_validate(d):
    """True iff d's pair satisfies every reduced-Mumford invariant."""
    return _mumford_failure(d.curve, d.U, d.V) is None


def embed_point(P):
    """The class of (P) - (inf): infinity -> (1, 0), (a, b) -> (x - a, b)."""
    curve = P.curve
    if P.is_infinity:
        return MumfordDivisor.identity(curve)
    U = Polynomial(curve.field, [-P.x, curve.field.one()])
    V = Polynomial.constant(P.y)
    return MumfordDivisor(curve, U, V, validate=False)


def neg(d):
    """The inverse class: (U, V) -> (U, (-V) mod U)."""
    return MumfordDivisor(d.curve, d.U, (-d.V) % d.U, validate=False)


def _exact_div(a, b):
    q, r = a.divrem(b)
    if not r.is_zero():
        raise RuntimeError("inexact division inside the group law; arithmetic bug")
    return q


def add(d1, d2):
    """Cantor composition of two classes followed by reduction."""
    if d1.curve != d2.curve:
        raise errors.CurveMismatch("divisors live on different curves")
    curve = d1.curve
    f, g = curve.f, curve.g
    U1, V1, U2, V2 = d1.U, d1.V, d2.U, d2.V

    d0, e1, e2 = gcd_xgcd(U1, U2)
    d, c1, c2 = gcd_xgcd(d0, V1 + V2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2

    U = _exact_div(U1 * U2, d * d)
    V = _exact_div(s1 * U1 * V2 + s2 * U2 * V1 + s3 * (V1 * V2 + f), d) % U
    while U.degree > g:
        U = _exact_div(f - V * V, U).make_monic()
        V = (-V) % U
    return MumfordDivisor(curve, U, V, validate=False)


def double(d):
    return add(d, d)


def scalar_mul(n, d):
    """n times d by double-and-add; negative n goes through neg."""
    if n < 0:
        return scalar_mul(-n, neg(d))
    acc = MumfordDivisor.identity(d.curve)
    base = d
    while n:
        if n & 1:
            acc = add(acc, base)
        base = double(base)
        n >>= 1
    return acc


def weil_cap(curve):
    """floor((sqrt q + 1)^(2g)), an exact upper bound for the group order.

    Expanding the power splits it as A + B sqrt(q) with integers A, B, and
    floor then equals A + isqrt(B^2 q)."""
    q, g = curve.field.q, curve.g
    a = b = 0
    for j in range(2 * g + 1):
        c = math.comb(2 * g, j) * q ** (j // 2)
        if j % 2 == 0:
            a += c
        else:
            b += c
    return a + math.isqrt(b * b * q)


def order(d, cap=None):
    """Smallest n >= 1 with n*d = identity, by successive addition.

    The cap defaults to the Weil bound; exceeding it means the arithmetic
    is broken, not that the order is large."""
    if cap is None:
        cap = weil_cap(d.curve)
    ident = MumfordDivisor.identity(d.curve)
    acc = d
    n = 1
    while acc != ident:
        acc = add(acc, d)
        n += 1
        if n > cap:
            raise errors.CapExceeded("no identity after %d additions" % cap)
    return n


def two_torsion_classes(curve):
    """All 2^(2g) - 1 classes (prod_{i in I}(x - alpha_i), 0) over the
    nonempty root subsets I with |I| <= g, ordered by (|I|, lex indices)."""
    zero = Polynomial.zero(curve.field)
    out = []
    for m in range(1, curve.g + 1):
        for I in itertools.combinations(range(len(curve.alphas)), m):
            U = from_roots(curve.field, [curve.alphas[i] for i in I])
            out.append(MumfordDivisor(curve, U, zero, validate=False))
    return out


def _coeff_vectors(field, length):
    """All length-tuples of field elements, first coordinate fastest."""
    els = list(field.elements())
    for tup in itertools.product(els, repeat=length):
        yield tup[::-1]


def enumerate_theta(curve, d):
    """All classes whose reduced U has degree <= d, i.e. Theta_d(F_q).

    Scans monic U of each degree m <= d and all V with deg V < m, keeping
    the pairs with V^2 = f mod U. Reduced representatives are unique, so
    no deduplication is needed. d = g yields the whole group."""
    if not 0 <= d <= curve.g:
        raise errors.DegreeOutOfRange("need 0 <= d <= %d, got %d" % (curve.g, d))
    field, f = curve.field, curve.f
    one = field.one()
    out = [MumfordDivisor.identity(curve)]
    for m in range(1, d + 1):
        for uvec in _coeff_vectors(field, m):
            U = Polynomial(field, list(uvec) + [one])
            fmod = f % U
            for vvec in _coeff_vectors(field, m):
                V = Polynomial(field, vvec)
                if (V * V) % U == fmod:
                    out.append(MumfordDivisor(curve, U, V, validate=False))
    return out


def enumerate_points(curve):
    """All points of the curve over its base field, affine points ordered
    by (x index, y index), the point at infinity last."""
    field, f = curve.field, curve.f
    pts = []
    for x in field.elements():
        val = f.eval(x)
        if val.is_zero():
            pts.append(CurvePoint(curve, x, field.zero()))
            continue
        rr = sqrt(val)
        if rr is not None:
            pts.append(CurvePoint(curve, x, rr[0]))
            pts.append(CurvePoint(curve, x, rr[1]))
    pts.append(CurvePoint.infinity(curve))
    return pts


def _element_text(a):
    if a.field.k == 1:
        return str(a)
    return "(%s)" % a


def _split_top_level(text):
    """Split on commas that are not inside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in %r" % text)
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ValueError("unbalanced parentheses in %r" % text)
    parts.append(text[start:])
    return parts


def curve_spec(curve):
    """Text form `field=<fieldspec>;alphas=a1,a2,...`."""
    alphas = ",".join(_element_text(a) for a in curve.alphas)
    return "field=%s;alphas=%s" % (field_spec(curve.field), alphas)


def parse_curve_spec(text):
    parts = text.split(";")
    if len(parts) != 2 or not parts[0].startswith("field=") \
            or not parts[1].startswith("alphas="):
        raise ValueError("curve spec must look like field=...;alphas=...")
    field = parse_field_spec(parts[0][len("field="):])
    alpha_text = parts[1][len("alphas="):]
    if not alpha_text:
        raise ValueError("empty alphas list")
    alphas = [parse_element(field, t) for t in _split_top_level(alpha_text)]
    return curve_make(field, alphas)


def mumford_to_json(d):
    return {"U": poly_to_json(d.U), "V": poly_to_json(d.V)}


def mumford_from_json(curve, data):
    if not isinstance(data, dict) or set(data) != {"U", "V"}:
        raise ValueError('Mumford JSON must be {"U": [...], "V": [...]}')
    U = poly_from_json(curve.field, data["U"])
    V = poly_from_json(curve.field, data["V"])
    return MumfordDivisor(curve, U, V)
