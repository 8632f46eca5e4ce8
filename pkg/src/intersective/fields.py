"""Finite fields F_{p^e} and dense polynomial kernels over them.

A field is either a prime field F_p or an extension F[u]/(m(u)) of a base
field F by a monic irreducible modulus m.  Residue fields of primes T - a
reuse the base field itself; residue fields of higher-degree primes are
extensions, so towers occur naturally when the constant field is not prime.

Elements travel in a compact "raw" form inside the kernels: an int in
[0, p) for prime fields and a fixed-length tuple of base-field raws for
extensions.  Raw values are immutable and hashable.  The FFElement wrapper
is the operator-overloaded public face.

Polynomials over a field are plain Python lists of raw coefficients,
lowest degree first, trimmed so the last entry is nonzero ([] is the zero
polynomial).  The poly_* functions implement the classic dense algorithms
(division, gcd, extended gcd, Rabin irreducibility, squarefree split,
distinct-degree and equal-degree factorization) for any field object.
"""

import functools
import random

from .errors import DivisionByZero, SpecMismatch, ConstantInput


class FiniteField:
    """Interface shared by PrimeField and ExtensionField."""

    characteristic = None
    order = None
    degree = None          # absolute degree over the prime field
    base = None            # base field of an extension, None for prime fields
    modulus = None         # raw coefficient tuple of the defining modulus

    # -- raw element protocol (implemented by subclasses) ------------------
    #   zero_raw, one_raw, radd, rsub, rneg, rmul, rinv,
    #   rfrom_int, rto_int, rfrom_code

    def rpow(self, a, e):
        if e < 0:
            a = self.rinv(a)
            e = -e
        result = self.one_raw
        while e:
            if e & 1:
                result = self.rmul(result, a)
            a = self.rmul(a, a)
            e >>= 1
        return result

    def raw_elements(self):
        """All raw elements in canonical (integer code) order."""
        for code in range(self.order):
            yield self.rfrom_code(code)

    # -- wrapped elements ---------------------------------------------------

    def __call__(self, value):
        if isinstance(value, FFElement):
            if value.field != self:
                raise SpecMismatch(f"element of {value.field} given to {self}")
            return value
        if isinstance(value, int):
            return FFElement(self, self.rfrom_int(value))
        if isinstance(value, tuple):
            return FFElement(self, value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def element(self, raw):
        return FFElement(self, raw)

    @property
    def zero(self):
        return FFElement(self, self.zero_raw)

    @property
    def one(self):
        return FFElement(self, self.one_raw)

    def elements(self):
        for raw in self.raw_elements():
            yield FFElement(self, raw)

    def _key(self):
        mod = self.modulus if self.base is None else tuple(
            self.base.rto_int(c) for c in self.modulus)
        base_key = self.base._key() if self.base is not None else None
        return (self.characteristic, self.degree, mod, base_key)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GF({self.order})"


class PrimeField(FiniteField):
    """F_p with raw elements the ints 0..p-1."""

    def __init__(self, p):
        if p < 2 or not is_prime_int(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.order = p
        self.degree = 1
        self.zero_raw = 0
        self.one_raw = 1

    def radd(self, a, b):
        return (a + b) % self.characteristic

    def rsub(self, a, b):
        return (a - b) % self.characteristic

    def rneg(self, a):
        return -a % self.characteristic

    def rmul(self, a, b):
        return a * b % self.characteristic

    def rinv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, -1, self.characteristic)

    def rfrom_int(self, n):
        return n % self.characteristic

    def rto_int(self, a):
        return a

    def rfrom_code(self, code):
        return code


class ExtensionField(FiniteField):
    """base[u]/(m(u)) with raw elements tuples of base raws, length deg m."""

    def __init__(self, base, modulus, check=True):
        d = len(modulus) - 1
        if d < 1:
            raise ValueError("modulus must be nonconstant")
        if modulus[-1] != base.one_raw:
            raise ValueError("modulus must be monic")
        if check and not poly_is_irreducible(base, list(modulus)):
            raise ValueError("modulus is reducible")
        self.base = base
        self.modulus = tuple(modulus)
        self.characteristic = base.characteristic
        self.degree = base.degree * d
        self.order = base.order ** d
        self.ext_degree = d
        self.zero_raw = (base.zero_raw,) * d
        self.one_raw = (base.one_raw,) + (base.zero_raw,) * (d - 1)
        self._prime_base = isinstance(base, PrimeField)
        # reduction rows: u^(d+j) mod m, as length-d tuples
        top = [base.rneg(c) for c in modulus[:d]]
        rows = [tuple(top)]
        for _ in range(d - 2):
            prev = rows[-1]
            shifted = [base.zero_raw] + list(prev[:d - 1])
            lead = prev[d - 1]
            if lead != base.zero_raw:
                shifted = [base.radd(shifted[i], base.rmul(lead, top[i]))
                           for i in range(d)]
            rows.append(tuple(shifted))
        self._red = rows

    def radd(self, a, b):
        if self._prime_base:
            p = self.characteristic
            return tuple((x + y) % p for x, y in zip(a, b))
        base = self.base
        return tuple(base.radd(x, y) for x, y in zip(a, b))

    def rsub(self, a, b):
        if self._prime_base:
            p = self.characteristic
            return tuple((x - y) % p for x, y in zip(a, b))
        base = self.base
        return tuple(base.rsub(x, y) for x, y in zip(a, b))

    def rneg(self, a):
        if self._prime_base:
            p = self.characteristic
            return tuple(-x % p for x in a)
        base = self.base
        return tuple(base.rneg(x) for x in a)

    def rmul(self, a, b):
        d = self.ext_degree
        if self._prime_base:
            p = self.characteristic
            conv = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        conv[i + j] += ai * bj
            for k in range(2 * d - 2, d - 1, -1):
                c = conv[k] % p
                if c:
                    row = self._red[k - d]
                    for i in range(d):
                        conv[i] += c * row[i]
            return tuple(c % p for c in conv[:d])
        base = self.base
        conv = [base.zero_raw] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == base.zero_raw:
                continue
            for j, bj in enumerate(b):
                if bj != base.zero_raw:
                    conv[i + j] = base.radd(conv[i + j], base.rmul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if c == base.zero_raw:
                continue
            row = self._red[k - d]
            for i in range(d):
                if row[i] != base.zero_raw:
                    conv[i] = base.radd(conv[i], base.rmul(c, row[i]))
        return tuple(conv[:d])

    def rinv(self, a):
        if a == self.zero_raw:
            raise DivisionByZero(f"inverse of 0 in {self}")
        base = self.base
        g, s, _ = poly_gcdex(base, poly_trim(base, list(a)), list(self.modulus))
        if len(g) != 1:
            raise DivisionByZero("modulus not coprime with element")
        s = poly_scale(base, s, base.rinv(g[0]))
        s = s + [base.zero_raw] * (self.ext_degree - len(s))
        return tuple(s)

    def rfrom_int(self, n):
        return (self.base.rfrom_int(n),) + (self.base.zero_raw,) * (self.ext_degree - 1)

    def rto_int(self, a):
        base = self.base
        code = 0
        for c in reversed(a):
            code = code * base.order + base.rto_int(c)
        return code

    def rfrom_code(self, code):
        base = self.base
        coords = []
        for _ in range(self.ext_degree):
            code, rem = divmod(code, base.order)
            coords.append(base.rfrom_code(rem))
        return tuple(coords)


class FFElement:
    """An element of a finite field; immutable and hashable."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise SpecMismatch("elements of different fields")
            return other.raw
        if isinstance(other, int):
            return self.field.rfrom_int(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FFElement(self.field, self.field.radd(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FFElement(self.field, self.field.rsub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FFElement(self.field, self.field.rsub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FFElement(self.field, self.field.rmul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FFElement(self.field, self.field.rmul(self.raw, self.field.rinv(raw)))

    def __pow__(self, e):
        return FFElement(self.field, self.field.rpow(self.raw, e))

    def __neg__(self):
        return FFElement(self.field, self.field.rneg(self.raw))

    def inverse(self):
        return FFElement(self.field, self.field.rinv(self.raw))

    @property
    def coords(self):
        """Coordinates over the prime field, power-basis order, flattened."""
        f = self.field
        if f.base is None:
            return (self.raw,)
        flat = []
        for c in self.raw:
            flat.extend(FFElement(f.base, c).coords)
        return tuple(flat)

    def to_int(self):
        return self.field.rto_int(self.raw)

    def __int__(self):
        return self.to_int()

    def __bool__(self):
        return self.raw != self.field.zero_raw

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field.rfrom_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.raw))

    def __repr__(self):
        return f"GF({self.field.order}).{self.to_int()}"


# ---------------------------------------------------------------------------
# dense polynomial kernels over a field (raw coefficient lists, low-first)
# ---------------------------------------------------------------------------

def poly_trim(F, cs):
    z = F.zero_raw
    while cs and cs[-1] == z:
        cs.pop()
    return cs


def poly_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.radd(out[i], c)
    return poly_trim(F, out)


def poly_sub(F, a, b):
    n = max(len(a), len(b))
    z = F.zero_raw
    out = [F.rsub(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
           for i in range(n)]
    return poly_trim(F, out)


def poly_neg(F, a):
    return [F.rneg(c) for c in a]


def poly_scale(F, a, k):
    if k == F.zero_raw:
        return []
    return [F.rmul(c, k) for c in a]


def poly_mul(F, a, b):
    if not a or not b:
        return []
    if isinstance(F, PrimeField):
        p = F.characteristic
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return poly_trim(F, [c % p for c in out])
    z = F.zero_raw
    out = [z] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == z:
            continue
        for j, bj in enumerate(b):
            if bj != z:
                out[i + j] = F.radd(out[i + j], F.rmul(ai, bj))
    return poly_trim(F, out)


def poly_divmod(F, a, b):
    """Quotient and remainder; the divisor may be any nonzero polynomial."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], a
    inv_lc = F.one_raw if b[-1] == F.one_raw else F.rinv(b[-1])
    if isinstance(F, PrimeField):
        p = F.characteristic
        q = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            c = a[k + db] % p
            if c:
                c = c * inv_lc % p
                q[k] = c
                for i in range(db + 1):
                    a[k + i] -= c * b[i]
        return poly_trim(F, q), poly_trim(F, [c % p for c in a])
    z = F.zero_raw
    q = [z] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db]
        if c != z:
            c = F.rmul(c, inv_lc)
            q[k] = c
            for i in range(db + 1):
                if b[i] != z:
                    a[k + i] = F.rsub(a[k + i], F.rmul(c, b[i]))
    return poly_trim(F, q), poly_trim(F, a)


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    """Return (leading coefficient, monic associate)."""
    lc = a[-1]
    if lc == F.one_raw:
        return lc, list(a)
    return lc, poly_scale(F, a, F.rinv(lc))


def poly_gcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_mod(F, a, b)
    if not a:
        return []
    return poly_monic(F, a)[1]


def poly_gcdex(F, a, b):
    """Extended gcd: returns monic g and s, t with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one_raw], []
    t0, t1 = [], [F.one_raw]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    if not r0:
        return [], s0, t0
    lc = r0[-1]
    if lc != F.one_raw:
        inv = F.rinv(lc)
        r0 = poly_scale(F, r0, inv)
        s0 = poly_scale(F, s0, inv)
        t0 = poly_scale(F, t0, inv)
    return r0, s0, t0


def poly_eval(F, cs, x):
    acc = F.zero_raw
    for c in reversed(cs):
        acc = F.radd(F.rmul(acc, x), c)
    return acc


def poly_deriv(F, cs):
    out = []
    for i in range(1, len(cs)):
        k = F.rfrom_int(i)
        out.append(F.rmul(cs[i], k))
    return poly_trim(F, out)


def poly_pow_mod(F, base, e, mod):
    result = [F.one_raw]
    base = poly_mod(F, base, mod)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return result


def _prime_divisors_small(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(F, f):
    """Rabin's test: x^(Q^n) = x mod f and gcd(x^(Q^(n/r)) - x, f) = 1
    for every prime r dividing n = deg f."""
    n = len(f) - 1
    if n < 1:
        raise ConstantInput("irreducibility is about nonconstant polynomials")
    if n == 1:
        return True
    _, f = poly_monic(F, f)
    Q = F.order
    x = [F.zero_raw, F.one_raw]
    for r in _prime_divisors_small(n):
        h = poly_pow_mod(F, x, Q ** (n // r), f)
        g = poly_gcd(F, poly_sub(F, h, x), f)
        if len(g) != 1:
            return False
    h = poly_pow_mod(F, x, Q ** n, f)
    return not poly_sub(F, h, x)


def poly_pth_root(F, f):
    """Write f = g(x^p) and return g with p-th roots of the coefficients.

    Valid for any f with zero derivative over these perfect fields.
    """
    p = F.characteristic
    e = F.order // p
    out = []
    for i in range(0, len(f), p):
        out.append(F.rpow(f[i], e))
    return out


def poly_squarefree_decomposition(F, f):
    """Yun-style decomposition of monic f into [(g, multiplicity)] with the
    g monic, squarefree and pairwise coprime; handles characteristic p via
    p-th roots (fields here are perfect, so roots always exist)."""
    p = F.characteristic
    out = []
    mult = 1
    _, f = poly_monic(F, f)
    while len(f) > 1:
        d = poly_deriv(F, f)
        if not d:
            f = poly_pth_root(F, f)
            mult *= p
            continue
        g = poly_gcd(F, f, d)
        w = poly_divmod(F, f, g)[0]
        i = 1
        while len(w) > 1:
            y = poly_gcd(F, w, g)
            z = poly_divmod(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            w = y
            g = poly_divmod(F, g, y)[0]
            i += 1
        f = g
    return out


def _edf_rng(F, f):
    codes = ",".join(str(F.rto_int(c)) for c in f)
    return random.Random(f"edf:{F.order}:{codes}")


def poly_equal_degree_split(F, f, d, rng=None):
    """Cantor-Zassenhaus split of monic squarefree f whose irreducible
    factors all have degree d; returns the list of monic factors."""
    n = len(f) - 1
    if n == d:
        return [f]
    if rng is None:
        rng = _edf_rng(F, f)
    Q = F.order
    while True:
        a = [F.rfrom_code(rng.randrange(Q)) for _ in range(n)]
        a = poly_trim(F, a)
        if len(a) <= 1:
            continue
        g = poly_gcd(F, a, f)
        if 1 < len(g) < len(f):
            h = g
        elif F.characteristic == 2:
            # trace map over GF(2^k): a + a^2 + ... + a^(2^(kd-1))
            k = F.degree
            t = list(a)
            w = list(a)
            for _ in range(k * d - 1):
                w = poly_mod(F, poly_mul(F, w, w), f)
                t = poly_add(F, t, w)
            h = poly_gcd(F, t, f)
            if not 1 <= len(h) or not (1 < len(h) < len(f)):
                continue
        else:
            b = poly_pow_mod(F, a, (Q ** d - 1) // 2, f)
            h = poly_gcd(F, poly_sub(F, b, [F.one_raw]), f)
            if not (1 < len(h) < len(f)):
                continue
        left = poly_equal_degree_split(F, h, d, rng)
        right = poly_equal_degree_split(F, poly_divmod(F, f, h)[0], d, rng)
        return left + right


def poly_distinct_degree(F, f):
    """Distinct-degree decomposition of monic squarefree f as
    [(product of degree-d factors, d)]."""
    out = []
    Q = F.order
    h = [F.zero_raw, F.one_raw]
    x = [F.zero_raw, F.one_raw]
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        h = poly_pow_mod(F, h, Q, f)
        g = poly_gcd(F, poly_sub(F, h, x), f)
        if len(g) > 1:
            out.append((g, d))
            f = poly_divmod(F, f, g)[0]
            h = poly_mod(F, h, f)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def poly_factor(F, f):
    """Complete factorization over the field: (lc, [(monic irreducible, e)]).

    Factors are returned in a canonical order (degree, then coefficient
    code), so results are reproducible.
    """
    lc, f = poly_monic(F, f)
    factors = {}
    for part, mult in poly_squarefree_decomposition(F, f):
        for prod, d in poly_distinct_degree(F, part):
            for irr in poly_equal_degree_split(F, prod, d):
                key = tuple(irr)
                factors[key] = factors.get(key, 0) + mult
    items = [(list(k), e) for k, e in factors.items()]
    items.sort(key=lambda it: (len(it[0]), [F.rto_int(c) for c in it[0]][::-1]))
    return lc, items


def poly_roots(F, f):
    """All roots of f in F, sorted by integer code."""
    if not f:
        raise ValueError("zero polynomial has every root")
    if len(f) == 1:
        return []
    if F.order <= 256:
        roots = [a for a in F.raw_elements() if poly_eval(F, f, a) == F.zero_raw]
        return roots
    _, fm = poly_monic(F, f)
    x = [F.zero_raw, F.one_raw]
    h = poly_pow_mod(F, x, F.order, fm)
    g = poly_gcd(F, poly_sub(F, h, x), fm)
    if len(g) <= 1:
        return []
    roots = [F.rneg(lin[0]) for lin in poly_equal_degree_split(F, g, 1)]
    return sorted(roots, key=F.rto_int)


def poly_has_root(F, f):
    """Existence-only variant of poly_roots (cheaper on large fields)."""
    if len(f) == 1:
        return False
    if F.order <= 256:
        return any(poly_eval(F, f, a) == F.zero_raw for a in F.raw_elements())
    _, fm = poly_monic(F, f)
    x = [F.zero_raw, F.one_raw]
    h = poly_pow_mod(F, x, F.order, fm)
    return len(poly_gcd(F, poly_sub(F, h, x), fm)) > 1


def irreducible_polys(F, degree):
    """Monic irreducibles of the given degree in canonical code order."""
    z, o = F.zero_raw, F.one_raw
    for code in range(F.order ** degree):
        coeffs = []
        c = code
        for _ in range(degree):
            c, r = divmod(c, F.order)
            coeffs.append(F.rfrom_code(r))
        f = coeffs + [o]
        if degree == 1 or (f[0] != z and poly_is_irreducible(F, f)):
            yield f


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------

def is_prime_int(n):
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n >= 3317044064679887385961981:
        rng = random.Random(n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(40))
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_prime_power(q):
    """q = p^e with p prime, or ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    return q, 1


@functools.lru_cache(maxsize=None)
def finite_field(q):
    """The field with q elements; extensions use the code-least monic
    irreducible modulus over F_p, so the presentation is reproducible."""
    p, e = factor_prime_power(q)
    base = PrimeField(p)
    if e == 1:
        return base
    modulus = next(irreducible_polys(base, e))
    return ExtensionField(base, tuple(modulus), check=False)
