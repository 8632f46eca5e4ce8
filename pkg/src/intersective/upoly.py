"""Univariate polynomials in x over Z or F_q[T].

Coefficients are plain ints or FqPoly values; both share +, -, *, divmod,
so most arithmetic here is ring-generic.  Ring-specific behaviour (content
gcds, unit normalization) goes through the ring adapter stored on the
polynomial.

Resultants are computed by the fraction-free subresultant PRS; an
independent Sylvester-determinant evaluation (fraction-free Bareiss
elimination) is exported alongside it as the cross-check used by the test
suite.
"""

from .errors import (
    NotPrimitive,
    RingMismatch,
    SpecMismatch,
    ZeroPolynomial,
)
from .fqpoly import INTEGERS, ring_of, residue_field, PrimeElement


class UPoly:
    """Dense polynomial in x; coefficients lowest degree first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        elems = []
        for c in coeffs:
            elems.append(ring.coerce(c))
        while elems and ring.is_zero(elems[-1]):
            elems.pop()
        self.ring = ring
        self.coeffs = tuple(elems)

    @classmethod
    def gen(cls, ring):
        """The polynomial x."""
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.ring.zero

    def is_zero(self):
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.ring != self.ring:
                raise RingMismatch("polynomials over different rings")
            return other
        if isinstance(other, int) or self.ring.is_element(other):
            return UPoly(self.ring, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.ring.zero
        cs = [(self.coeffs[i] if i < len(self.coeffs) else z)
              + (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)]
        return UPoly(self.ring, cs)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.ring.zero
        cs = [(self.coeffs[i] if i < len(self.coeffs) else z)
              - (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)]
        return UPoly(self.ring, cs)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UPoly(self.ring, [])
        z = self.ring.zero
        out = [z] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.ring, out)

    __rmul__ = __mul__

    def __neg__(self):
        return UPoly(self.ring, [-c for c in self.coeffs])

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly(self.ring, [self.ring.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        return UPoly(self.ring, [a * c for a in self.coeffs])

    def shift(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UPoly(self.ring, [self.ring.zero] * k + list(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring-aware operations ----------------------------------------------

    def derivative(self):
        """Formal derivative; terms with exponent divisible by the
        characteristic vanish."""
        ring = self.ring
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * ring.from_int(i))
        return UPoly(ring, out)

    def eval(self, a):
        """Horner evaluation at a ring element."""
        a = self.ring.coerce(a)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def eval_mod(self, a, m):
        """Horner evaluation with reduction mod m at every step."""
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % m
        return acc

    def content(self):
        """gcd of the coefficients, positive / monic normalized."""
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no content")
        ring = self.ring
        g = ring.zero
        for c in self.coeffs:
            if not ring.is_zero(c):
                g = c if ring.is_zero(g) else ring.gcd(g, c)
        return ring.unit_normalize(g)[1]

    def is_primitive(self):
        return bool(self.coeffs) and self.ring.is_unit(self.content())

    def map_coeffs(self, fn):
        return UPoly(self.ring, [fn(c) for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        ring = self.ring
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if ring.is_zero(c):
                continue
            sign = " + "
            if not ring.is_function_field and c < 0:
                sign = " - "
                c = -c
            cs = ring.element_str(c)
            if i == 0:
                term = cs
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                if cs == "1":
                    term = xpow
                elif ring.is_function_field and (" " in cs or "*" in cs):
                    term = f"({cs})*{xpow}"
                else:
                    term = f"{cs}*{xpow}"
            parts.append((sign, term))
        text = parts[0][1] if parts[0][0] == " + " else "-" + parts[0][1]
        for sign, term in parts[1:]:
            text += sign + term
        return text

    def __repr__(self):
        return f"UPoly({self.ring!r}, {self})"


def normalize_primitive(f):
    """(content, primitive) with content positive / monic and
    content * primitive == f."""
    if f.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    cont = f.content()
    if f.ring.is_unit(cont):
        return cont, f
    prim = f.map_coeffs(lambda c: f.ring.exact_div(c, cont))
    return cont, prim


def poly_pseudo_rem(f, g):
    """prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g, computed without
    coefficient division."""
    ring = f.ring
    df, dg = f.degree(), g.degree()
    if df < dg:
        raise ValueError("pseudo-remainder needs deg f >= deg g")
    lcg = g.lc()
    delta = df - dg
    r = f
    steps = 0
    while not r.is_zero() and r.degree() >= dg:
        steps += 1
        shift_amt = r.degree() - dg
        r = r.scale(lcg) - g.scale(r.lc()).shift(shift_amt)
    for _ in range(delta + 1 - steps):
        r = r.scale(lcg)
    return r


def poly_exact_div(f, g):
    """f / g when g divides f exactly over the ring, else None."""
    ring = f.ring
    if g.is_zero():
        raise ZeroPolynomial("division by zero polynomial")
    if f.is_zero():
        return f
    if f.degree() < g.degree():
        return None
    lcg = g.lc()
    q = [ring.zero] * (f.degree() - g.degree() + 1)
    r = f
    while not r.is_zero() and r.degree() >= g.degree():
        c = ring.exact_div(r.lc(), lcg)
        if c is None:
            return None
        k = r.degree() - g.degree()
        q[k] = c
        r = r - g.scale(c).shift(k)
    if not r.is_zero():
        return None
    return UPoly(ring, q)


def upoly_gcd(f, g):
    """gcd in O_K[x] via the primitive PRS; result primitive with
    positive / monic-normalized unit part, times the content gcd."""
    ring = f.ring
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd(0, 0)")
    if f.is_zero():
        return normalize_primitive(g)[1].scale(g.content())
    if g.is_zero():
        return normalize_primitive(f)[1].scale(f.content())
    cf, pf = normalize_primitive(f)
    cg, pg = normalize_primitive(g)
    cont = ring.unit_normalize(ring.gcd(cf, cg))[1]
    if pf.degree() < pg.degree():
        pf, pg = pg, pf
    while not pg.is_zero() and pg.degree() > 0:
        r = poly_pseudo_rem(pf, pg)
        if r.is_zero():
            pf, pg = pg, r
            break
        pf, pg = pg, normalize_primitive(r)[1]
    if not pg.is_zero():
        # last nonzero remainder is a constant: the primitive gcd is 1
        pf = UPoly(ring, [ring.one])
    unit, pf = _unit_normalize_poly(pf)
    return pf.scale(cont)


def _unit_normalize_poly(f):
    """Scale f by a unit so the leading coefficient is positive (Z) or is
    monic as a T-polynomial (F_q[T]); returns (unit, scaled f)."""
    ring = f.ring
    if f.is_zero():
        return ring.one, f
    if ring.is_function_field:
        lc_unit, _ = ring.unit_normalize(f.lc())
        if lc_unit == ring.one:
            return ring.one, f
        F = ring.field
        inv_unit = type(lc_unit)(F, [F.rinv(lc_unit.coeffs[0])])
        return lc_unit, f.map_coeffs(lambda c: c * inv_unit)
    if f.lc() < 0:
        return -1, -f
    return 1, f


def resultant(f, g):
    """res(f, g) via the fraction-free subresultant PRS (Cohen 3.3.7).

    Matches the Sylvester-matrix determinant with f-rows on top.
    """
    ring = f.ring
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    sign = ring.one
    if f.degree() < g.degree():
        if (f.degree() * g.degree()) % 2 == 1:
            sign = -sign
        f, g = g, f
    if g.degree() == 0:
        return sign * g.lc() ** f.degree()
    ca, A = normalize_primitive(f)
    cb, B = normalize_primitive(g)
    t = sign * ca ** g.degree() * cb ** f.degree()
    s = ring.one
    gg = ring.one
    h = ring.one
    while True:
        dA, dB = A.degree(), B.degree()
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = poly_pseudo_rem(A, B)
        A = B
        if R.is_zero():
            return ring.zero
        divisor = gg * h ** delta
        B = R.map_coeffs(lambda c: ring.exact_div(c, divisor))
        gg = A.lc()
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = ring.exact_div(gg ** delta, h ** (delta - 1))
        if B.degree() <= 0:
            break
    dA = A.degree()
    if dA == 1:
        hh = B.lc()
    else:
        hh = ring.exact_div(B.lc() ** dA, h ** (dA - 1))
    return s * t * hh


def sylvester_matrix(f, g):
    """The (deg f + deg g) square Sylvester matrix, f-rows first."""
    ring = f.ring
    n, m = f.degree(), g.degree()
    size = n + m
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([ring.zero] * i + fc + [ring.zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([ring.zero] * i + gc + [ring.zero] * (size - m - 1 - i))
    return rows


def resultant_sylvester(f, g):
    """res(f, g) as the Sylvester determinant, via fraction-free Bareiss
    elimination.  Independent of the PRS path; used as its oracle."""
    ring = f.ring
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    if f.degree() == 0 and g.degree() == 0:
        return ring.one
    if g.degree() == 0:
        return g.lc() ** f.degree()
    if f.degree() == 0:
        return f.lc() ** g.degree()
    M = sylvester_matrix(f, g)
    n = len(M)
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not ring.is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = ring.exact_div(val, prev)
            M[i][k] = ring.zero
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def reduce_mod_prime(f, prime):
    """Coefficient-wise reduction of a primitive f modulo a prime.

    Returns (residue field, raw coefficient list over it); the degree may
    drop when the leading coefficient reduces to zero, and the result is
    nonzero because f is primitive.
    """
    if not isinstance(prime, PrimeElement):
        prime = PrimeElement(prime)
    if f.is_zero():
        raise ZeroPolynomial("cannot reduce the zero polynomial")
    if not f.is_primitive():
        raise NotPrimitive("reduce_mod_prime needs a primitive polynomial")
    rf = residue_field(prime)
    F = rf.field
    coeffs = [rf.reduce(c) for c in f.coeffs]
    while coeffs and coeffs[-1] == F.zero_raw:
        coeffs.pop()
    return rf, coeffs
