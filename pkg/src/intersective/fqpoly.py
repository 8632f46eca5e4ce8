"""The coefficient rings: Z and F_q[T].

FqPoly is a univariate polynomial in T over a finite field, the ring
element type for the function-field case (plain Python ints serve for Z).
Both support +, -, *, divmod and ** natively, so higher layers can be
written once against that shared surface; everything else (content gcds,
unit normalization, residue enumeration, prime factorization, residue
fields) goes through the ring adapters IntegerRing / FunctionFieldRing.
"""

import functools
import math
import random
from dataclasses import dataclass

from .errors import (
    BothZero,
    ConstantInput,
    DivisionByZero,
    NotPrime,
    SpecMismatch,
    WrongRing,
    ZeroInput,
)
from . import fields
from .fields import FFElement, finite_field, is_prime_int


class FqPoly:
    """Element of F_q[T]: raw coefficient tuple, lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        raws = []
        for c in coeffs:
            if isinstance(c, FFElement):
                if c.field != field:
                    raise SpecMismatch("coefficient from a different field")
                raws.append(c.raw)
            elif isinstance(c, int):
                raws.append(field.rfrom_int(c))
            else:
                raws.append(c)
        while raws and raws[-1] == field.zero_raw:
            raws.pop()
        self.field = field
        self.coeffs = tuple(raws)

    @classmethod
    def gen(cls, field):
        """The polynomial T."""
        return cls(field, [0, 1])

    @classmethod
    def from_code(cls, field, code):
        coeffs = []
        while code:
            code, r = divmod(code, field.order)
            coeffs.append(field.rfrom_code(r))
        return cls(field, coeffs)

    def to_code(self):
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.order + self.field.rto_int(c)
        return code

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_unit(self):
        return len(self.coeffs) == 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one_raw

    def monic(self):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no monic associate")
        return FqPoly(self.field, fields.poly_monic(self.field, list(self.coeffs))[1])

    def _coerce(self, other):
        if isinstance(other, FqPoly):
            if other.field != self.field:
                raise SpecMismatch("polynomials over different fields")
            return other
        if isinstance(other, int):
            return FqPoly(self.field, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FqPoly(F, fields.poly_add(F, list(self.coeffs), list(o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FqPoly(F, fields.poly_sub(F, list(self.coeffs), list(o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        return FqPoly(F, fields.poly_mul(F, list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def __neg__(self):
        return FqPoly(self.field, fields.poly_neg(self.field, list(self.coeffs)))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise DivisionByZero("division by the zero polynomial")
        F = self.field
        q, r = fields.poly_divmod(F, list(self.coeffs), list(o.coeffs))
        return FqPoly(F, q), FqPoly(F, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        F = self.field
        result = FqPoly(F, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x):
        """Evaluate at a field element (FFElement or raw)."""
        raw = x.raw if isinstance(x, FFElement) else x
        return self.field.element(fields.poly_eval(self.field, list(self.coeffs), raw))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FqPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FqPoly(self.field, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.field.rto_int(self.coeffs[i])
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "T" if i == 1 else f"T^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FqPoly(GF({self.field.order}), {self})"


def fq_gcd(a, b):
    """Monic greatest common divisor in F_q[T]."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    F = a.field if a else b.field
    g = fields.poly_gcd(F, list(a.coeffs), list(b.coeffs))
    return FqPoly(F, g)


def fq_gcdex(a, b):
    """Extended gcd: (g monic, s, t) with s*a + t*b = g."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    F = a.field
    g, s, t = fields.poly_gcdex(F, list(a.coeffs), list(b.coeffs))
    return FqPoly(F, g), FqPoly(F, s), FqPoly(F, t)


def fq_irreducible(p):
    """Rabin irreducibility test for a nonconstant FqPoly."""
    if p.degree() < 1:
        raise ConstantInput("constant polynomials are not tested")
    return fields.poly_is_irreducible(p.field, list(p.coeffs))


@dataclass(frozen=True)
class PrimeElement:
    """A prime of the coefficient ring: a positive prime integer, or a
    monic irreducible polynomial in T."""

    value: object

    def __post_init__(self):
        v = self.value
        if isinstance(v, int):
            if v <= 0 or not is_prime_int(v):
                raise NotPrime(f"{v} is not a positive prime integer")
        elif isinstance(v, FqPoly):
            if not v.is_monic() or not fq_irreducible(v):
                raise NotPrime(f"{v} is not a monic irreducible polynomial")
        else:
            raise TypeError(f"unsupported prime value {v!r}")

    @classmethod
    def _trusted(cls, value):
        """Skip validation for values produced by the sieve / factorizer."""
        pe = object.__new__(cls)
        object.__setattr__(pe, "value", value)
        return pe

    def degree(self):
        if isinstance(self.value, int):
            raise WrongRing("integer primes have a norm, not a degree")
        return self.value.degree()

    def norm(self):
        """Size of the residue field."""
        if isinstance(self.value, int):
            return self.value
        return self.value.field.order ** self.value.degree()

    def __str__(self):
        return str(self.value)


def fq_enumerate_irreducibles(field, n_max):
    """All monic irreducibles of degree <= n_max, nondecreasing degree,
    code order inside each degree."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for d in range(1, n_max + 1):
        for raw in fields.irreducible_polys(field, d):
            yield PrimeElement._trusted(FqPoly(field, raw))


def monic_polys_of_degree(field, degree):
    """All monic T-polynomials of the given degree, canonical code order."""
    for code in range(field.order ** degree):
        low = FqPoly.from_code(field, code)
        yield low + FqPoly(field, [0] * degree + [1])


@dataclass(frozen=True)
class ResidueField:
    """Residue field O_K/(p) together with the reduction map and a section.

    ``reduce`` maps a ring element to a raw field element; ``lift`` maps a
    raw field element back to a canonical ring representative.
    """

    field: object
    prime: PrimeElement

    def reduce(self, a):
        v = self.prime.value
        if isinstance(v, int):
            return a % v
        d = v.degree()
        rem = a % v
        if d == 1:
            # F_q itself: evaluate at the root -c0 of the monic linear prime
            return rem.coeffs[0] if rem.coeffs else v.field.zero_raw
        base = v.field
        coeffs = list(rem.coeffs) + [base.zero_raw] * (d - len(rem.coeffs))
        return tuple(coeffs)

    def lift(self, raw):
        v = self.prime.value
        if isinstance(v, int):
            return raw
        if v.degree() == 1:
            return FqPoly(v.field, [raw])
        return FqPoly(v.field, list(raw))

    def reduce_element(self, a):
        return self.field.element(self.reduce(a))


def residue_field(prime):
    """O_K/(p) for a PrimeElement p: F_p for integer primes, and
    F_q[T]/(p) = F_{q^deg p} for polynomial primes."""
    if not isinstance(prime, PrimeElement):
        prime = PrimeElement(prime)
    v = prime.value
    if isinstance(v, int):
        return ResidueField(fields.PrimeField(v), prime)
    d = v.degree()
    if d == 1:
        return ResidueField(v.field, prime)
    ext = fields.ExtensionField(v.field, v.coeffs, check=False)
    return ResidueField(ext, prime)


# ---------------------------------------------------------------------------
# integer factorization (trial division, then Brent's rho)
# ---------------------------------------------------------------------------

_TRIAL_LIMIT = 10 ** 6


def _brent_rho(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def int_factorize(n):
    """(unit, [(prime, multiplicity)]) with primes ascending."""
    if n == 0:
        raise ZeroInput("cannot factorize 0")
    unit = 1
    if n < 0:
        unit = -1
        n = -n
    factors = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += wheel[w]
        w = (w + 1) % 8
    stack = [n] if n > 1 else []
    rng = random.Random(f"rho:{n}")
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime_int(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _brent_rho(m, rng)
        stack.append(g)
        stack.append(m // g)
    return unit, sorted(factors.items())


# ---------------------------------------------------------------------------
# ring adapters
# ---------------------------------------------------------------------------

class IntegerRing:
    """Z with unit normalization to positive values."""

    is_function_field = False
    name = "Z"
    zero = 0
    one = 1

    def from_int(self, n):
        return n

    def coerce(self, v):
        if isinstance(v, int):
            return v
        raise SpecMismatch(f"{v!r} is not an integer")

    def is_element(self, v):
        return isinstance(v, int)

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def gcd(self, a, b):
        return math.gcd(a, b)

    def unit_normalize(self, a):
        """a = unit * normal with normal >= 0."""
        if a < 0:
            return -1, -a
        return 1, a

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        return q if r == 0 else None

    def residue_count(self, m):
        return abs(m)

    def residues(self, m):
        return range(abs(m))

    def inv_mod(self, a, m):
        return pow(a, -1, abs(m))

    def factorize(self, a):
        unit, items = int_factorize(a)
        return unit, [(PrimeElement._trusted(p), e) for p, e in items]

    def is_prime_element(self, a):
        return is_prime_int(abs(a))

    def prime_element(self, a):
        return PrimeElement(abs(a))

    def primes(self, limit):
        """Primes up to limit, ascending (simple sieve)."""
        if limit < 2:
            return
        flags = bytearray([1]) * (limit + 1)
        flags[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(limit) + 1):
            if flags[i]:
                flags[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
        for i in range(2, limit + 1):
            if flags[i]:
                yield PrimeElement._trusted(i)

    def sort_key(self, a):
        return (abs(a), a < 0)

    def element_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")

    def __repr__(self):
        return "Z"


class FunctionFieldRing:
    """F_q[T] with unit normalization to monic values."""

    is_function_field = True

    def __init__(self, field):
        self.field = field
        self.zero = FqPoly(field, [])
        self.one = FqPoly(field, [1])
        self.T = FqPoly.gen(field)
        self.name = f"F{field.order}[T]"

    def from_int(self, n):
        return FqPoly(self.field, [n])

    def coerce(self, v):
        if isinstance(v, FqPoly):
            if v.field != self.field:
                raise SpecMismatch("polynomial over a different constant field")
            return v
        if isinstance(v, int):
            return self.from_int(v)
        raise SpecMismatch(f"{v!r} is not an element of {self.name}")

    def is_element(self, v):
        return isinstance(v, FqPoly) and v.field == self.field

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return a.is_unit()

    def gcd(self, a, b):
        return fq_gcd(a, b)

    def unit_normalize(self, a):
        """a = unit * normal with normal monic (unit is a constant poly)."""
        if not a:
            return self.one, a
        lc = a.lc()
        if lc == self.field.one_raw:
            return self.one, a
        unit = FqPoly(self.field, [lc])
        return unit, a.monic()

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        return q if not r else None

    def residue_count(self, m):
        return self.field.order ** m.degree()

    def residues(self, m):
        for code in range(self.field.order ** m.degree()):
            yield FqPoly.from_code(self.field, code)

    def inv_mod(self, a, m):
        g, s, _ = fq_gcdex(a % m, m)
        if g.degree() != 0:
            raise DivisionByZero(f"{a} is not invertible mod {m}")
        return s % m

    def factorize(self, a):
        if not a:
            raise ZeroInput("cannot factorize 0")
        lc, items = fields.poly_factor(self.field, list(a.coeffs))
        unit = FqPoly(self.field, [lc])
        out = [(PrimeElement._trusted(FqPoly(self.field, f)), e) for f, e in items]
        return unit, out

    def is_prime_element(self, a):
        return a.degree() >= 1 and fq_irreducible(a)

    def prime_element(self, a):
        return PrimeElement(a.monic())

    def primes(self, max_degree):
        return fq_enumerate_irreducibles(self.field, max_degree)

    def sort_key(self, a):
        return (a.degree(), a.to_code())

    def element_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, FunctionFieldRing) and other.field == self.field

    def __hash__(self):
        return hash(("FunctionFieldRing", self.field.order))

    def __repr__(self):
        return self.name


INTEGERS = IntegerRing()


@functools.lru_cache(maxsize=None)
def function_field_ring(q):
    return FunctionFieldRing(finite_field(q))


def ring_of(value):
    """The ring adapter an element belongs to."""
    if isinstance(value, int):
        return INTEGERS
    if isinstance(value, FqPoly):
        return function_field_ring(value.field.order)
    raise TypeError(f"{value!r} is not a ring element")


def ring_factorize(r, ring=None):
    """(unit, [(PrimeElement, multiplicity)]), primes canonically ordered."""
    if ring is None:
        ring = ring_of(r)
    if ring.is_zero(r):
        raise ZeroInput("cannot factorize 0")
    unit, items = ring.factorize(r)
    items.sort(key=lambda it: ring.sort_key(it[0].value))
    return unit, items


@dataclass(frozen=True)
class FieldProfile:
    """The global field the decision runs over.

    Only K = Q and K = F_q(T) are implemented; ``genus`` and ``degree``
    stay parametric in the function-field bound for forward compatibility
    (genus 0, degree 1 is the implemented case).
    """

    ring: object
    genus: int = 0
    degree: int = 1

    @classmethod
    def rationals(cls):
        return cls(ring=INTEGERS)

    @classmethod
    def function_field(cls, q, genus=0, degree=1):
        return cls(ring=function_field_ring(q), genus=genus, degree=degree)

    @property
    def is_function_field(self):
        return self.ring.is_function_field

    @property
    def q(self):
        if not self.is_function_field:
            raise WrongRing("q is defined for function fields only")
        return self.ring.field.order
