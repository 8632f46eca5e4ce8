"""Factorization of x-polynomials into irreducibles over Q or F_q(T).

Over Q: factor mod a good odd prime, Hensel-lift the modular factors past
a Mignotte-style coefficient bound, then recombine subsets (Zassenhaus).
Over F_q(T): pick an evaluation prime p(T) preserving degree and
squarefreeness (degree-1 primes are evaluation points T = a; higher-degree
primes cover the small-q case where every a is bad), factor the specialized
polynomial in the residue field, lift p-adically past twice the T-degree,
and recombine with leading-coefficient correction.

The Hensel machinery is written once against coefficients that support
+, -, * and % (ints mod p^k, FqPoly mod p(T)^k).

Subset recombination is exponential in the number of modular factors,
which is fine at the degrees this package targets (deg_x <= 8 or so).
"""

import itertools
import math
from dataclasses import dataclass

from .errors import (
    InseparableFactor,
    ProductMismatch,
    ReducibleClaimedFactor,
    ZeroPolynomial,
)
from . import fields
from .fqpoly import FqPoly, PrimeElement, fq_enumerate_irreducibles, residue_field
from .upoly import (
    UPoly,
    _unit_normalize_poly,
    normalize_primitive,
    poly_exact_div,
    upoly_gcd,
)


@dataclass(frozen=True)
class IrreducibleFactor:
    poly: UPoly
    multiplicity: int
    separable: bool


@dataclass(frozen=True)
class FactoredPolynomial:
    """content * prod(g_i^e_i) == original, every g_i irreducible over K."""

    content: object
    factors: tuple
    original: UPoly

    def radical(self):
        """Product of the distinct irreducible factors."""
        ring = self.original.ring
        acc = UPoly(ring, [ring.one])
        for fac in self.factors:
            acc = acc * fac.poly
        return acc

    def reconstruct(self):
        ring = self.original.ring
        acc = UPoly(ring, [self.content])
        for fac in self.factors:
            acc = acc * fac.poly ** fac.multiplicity
        return acc


def _poly_sort_key(f):
    ring = f.ring
    return (f.degree(), tuple(ring.sort_key(c) for c in f.coeffs))


def squarefree_split(f):
    """Yun-style decomposition of a primitive f into [(part, multiplicity)].

    In characteristic p a leftover with zero derivative (p-th powers and
    inseparable factors) is passed through as a single component with
    multiplicity 1; factor_irreducible deflates it.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot split the zero polynomial")
    ring = f.ring
    if f.degree() == 0:
        return []
    parts = []
    d = f.derivative()
    if d.is_zero():
        return [(_unit_normalize_poly(f)[1], 1)]
    g = upoly_gcd(f, d)
    w = poly_exact_div(f, g)
    i = 1
    while w.degree() > 0:
        y = upoly_gcd(w, g)
        z = poly_exact_div(w, y)
        if z.degree() > 0:
            parts.append((_unit_normalize_poly(z)[1], i))
        w = y
        g = poly_exact_div(g, y)
        i += 1
    if g.degree() > 0:
        # char p leftover: zero derivative by construction
        parts.append((_unit_normalize_poly(g)[1], 1))
    return parts


# ---------------------------------------------------------------------------
# coefficient-list arithmetic modulo m (ints or FqPoly; m = p^k or p(T)^k)
# ---------------------------------------------------------------------------

def _mp_trim(cs, zero):
    while cs and cs[-1] == zero:
        cs.pop()
    return cs


def _mp_add(a, b, m, zero):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else zero
        y = b[i] if i < len(b) else zero
        out.append((x + y) % m)
    return _mp_trim(out, zero)


def _mp_sub(a, b, m, zero):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else zero
        y = b[i] if i < len(b) else zero
        out.append((x - y) % m)
    return _mp_trim(out, zero)


def _mp_mul(a, b, m, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _mp_trim([c % m for c in out], zero)


def _mp_divmod_monic(a, b, m, zero):
    """divmod by a monic divisor; only +, -, * on coefficients."""
    a = [c % m for c in a]
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _mp_trim(a, zero)
    q = [zero] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] % m
        if c != zero:
            q[k] = c
            for i in range(db + 1):
                a[k + i] = (a[k + i] - c * b[i]) % m
    return _mp_trim(q, zero), _mp_trim(a, zero)


def _hensel_step(ring, m, f, g, h, s, t):
    """One quadratic Hensel step: from f = g*h and s*g + t*h = 1 (mod m)
    to the same relations mod m^2, h monic throughout."""
    M = m * m
    zero = ring.zero
    e = _mp_sub(f, _mp_mul(g, h, M, zero), M, zero)
    q, r = _mp_divmod_monic(_mp_mul(s, e, M, zero), h, M, zero)
    G = _mp_add(g, _mp_add(_mp_mul(t, e, M, zero), _mp_mul(q, g, M, zero), M, zero), M, zero)
    H = _mp_add(h, r, M, zero)
    b = _mp_sub(_mp_add(_mp_mul(s, G, M, zero), _mp_mul(t, H, M, zero), M, zero),
                [ring.one], M, zero)
    c, d = _mp_divmod_monic(_mp_mul(s, b, M, zero), H, M, zero)
    S = _mp_sub(s, d, M, zero)
    T = _mp_sub(t, _mp_add(_mp_mul(t, b, M, zero), _mp_mul(c, G, M, zero), M, zero), M, zero)
    return M, G, H, S, T


def _hensel_lift_list(ring, rf, f_list, mod_factors, p_val, target):
    """Lift a factorization f = lc * prod(mod_factors) (mod p) to monic
    factors mod target = p^l, divide-and-conquer over the factor list."""
    zero = ring.zero
    r = len(mod_factors)
    if r == 1:
        lc = f_list[-1]
        inv = ring.inv_mod(lc, target)
        return [_mp_trim([c * inv % target for c in f_list], zero)]
    k = r // 2
    g = [f_list[-1] % p_val]
    for fac in mod_factors[:k]:
        g = _mp_mul(g, fac, p_val, zero)
    h = mod_factors[k]
    for fac in mod_factors[k + 1:]:
        h = _mp_mul(h, fac, p_val, zero)
    s_raw, t_raw = _bezout_mod_prime(rf, g, h)
    m, G, H, S, T = p_val, g, h, s_raw, t_raw
    while m < target if isinstance(m, int) else m.degree() < target.degree():
        m, G, H, S, T = _hensel_step(ring, m, f_list, G, H, S, T)
    G = _mp_trim([c % target for c in G], zero)
    H = _mp_trim([c % target for c in H], zero)
    left = _hensel_lift_list(ring, rf, G, mod_factors[:k], p_val, target)
    right = _hensel_lift_list(ring, rf, H, mod_factors[k:], p_val, target)
    return left + right


def _bezout_mod_prime(rf, g, h):
    """s, t with s*g + t*h = 1 mod the prime, as ring coefficient lists."""
    F = rf.field
    gbar = [rf.reduce(c) for c in g]
    hbar = [rf.reduce(c) for c in h]
    one, s, t = fields.poly_gcdex(F, fields.poly_trim(F, gbar), fields.poly_trim(F, hbar))
    if len(one) != 1:
        raise ArithmeticError("modular factors are not coprime")
    inv = F.rinv(one[0])
    s = fields.poly_scale(F, s, inv)
    t = fields.poly_scale(F, t, inv)
    return [rf.lift(c) for c in s], [rf.lift(c) for c in t]


def _recombine(f, lifted, modulus, symmetrize):
    """Zassenhaus subset search; returns the primitive irreducible factors."""
    ring = f.ring
    zero = ring.zero
    found = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in itertools.combinations(remaining, size):
            cand = [current.lc() % modulus]
            for i in subset:
                cand = _mp_mul(cand, lifted[i], modulus, zero)
            cand = [symmetrize(c) for c in cand]
            cand_poly = UPoly(ring, cand)
            if cand_poly.is_zero():
                continue
            cand_poly = normalize_primitive(cand_poly)[1]
            cand_poly = _unit_normalize_poly(cand_poly)[1]
            quotient = poly_exact_div(current, cand_poly)
            if quotient is not None:
                found.append(cand_poly)
                current = _unit_normalize_poly(normalize_primitive(quotient)[1])[1]
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    if current.degree() > 0:
        found.append(_unit_normalize_poly(normalize_primitive(current)[1])[1])
    return found


def _factor_squarefree_zz(f):
    """Zassenhaus for a primitive squarefree f in Z[x], deg >= 2."""
    n = f.degree()
    coeffs = list(f.coeffs)
    lc = f.lc()
    candidates = []
    p = 1
    while len(candidates) < 3:
        p = _next_odd_prime(p)
        if lc % p == 0:
            continue
        F = fields.PrimeField(p)
        fbar = fields.poly_trim(F, [c % p for c in coeffs])
        if len(fbar) - 1 != n:
            continue
        der = fields.poly_deriv(F, fbar)
        if not der or len(fields.poly_gcd(F, fbar, der)) != 1:
            continue
        _, facs = fields.poly_factor(F, fbar)
        if len(facs) == 1:
            return [f]
        candidates.append((p, F, [list(g) for g, _ in facs]))
    p, F, mod_factors = min(candidates, key=lambda c: len(c[2]))
    mod_factors = [[c for c in g] for g in mod_factors]

    norm2 = math.isqrt(sum(c * c for c in coeffs)) + 1
    bound = (1 << n) * norm2 * abs(lc)
    target = p
    while target <= 2 * bound:
        target *= p
    rf = residue_field(PrimeElement(p))
    lifted = _hensel_lift_list(f.ring, rf, coeffs, mod_factors, p, target)

    half = target // 2

    def symmetrize(c):
        c %= target
        return c - target if c > half else c

    return _recombine(f, lifted, target, symmetrize)


def _next_odd_prime(p):
    p += 2 if p > 2 else 1
    while not fields.is_prime_int(p):
        p += 2
    return p


def _factor_constant_coeff_ff(f):
    """f in F_q[x] viewed inside F_q[T][x]: factor over the constant field
    (irreducibility over F_q persists over F_q(T))."""
    ring = f.ring
    F = ring.field
    cs = [c.coeffs[0] if c else F.zero_raw for c in f.coeffs]
    _, facs = fields.poly_factor(F, cs)
    out = []
    for g, e in facs:
        poly = UPoly(ring, [FqPoly(F, [c]) for c in g])
        out.extend([poly] * e)
    return out


def _factor_squarefree_ff(f):
    """Evaluation + Hensel + recombination for primitive squarefree
    separable f in F_q[T][x], deg_x >= 2."""
    ring = f.ring
    F = ring.field
    n = f.degree()
    deg_t = max(c.degree() for c in f.coeffs)
    if deg_t == 0:
        return _factor_constant_coeff_ff(f)
    lc = f.lc()
    chosen = None
    for deg in range(1, 2 * deg_t * n + 4):
        for prime in fq_enumerate_irreducibles(F, deg):
            if prime.degree() != deg:
                continue
            rf = residue_field(prime)
            if rf.reduce(lc) == rf.field.zero_raw:
                continue
            fbar = fields.poly_trim(rf.field, [rf.reduce(c) for c in f.coeffs])
            der = fields.poly_deriv(rf.field, fbar)
            if not der or len(fields.poly_gcd(rf.field, fbar, der)) != 1:
                continue
            chosen = (prime, rf, fbar)
            break
        if chosen:
            break
    if chosen is None:
        raise ArithmeticError("no good evaluation prime found")
    prime, rf, fbar = chosen
    _, facs = fields.poly_factor(rf.field, fbar)
    if len(facs) == 1:
        return [f]
    mod_factors = [[rf.lift(c) for c in g] for g, _ in facs]
    p_val = prime.value
    s = (2 * deg_t + 2 + prime.degree() - 1) // prime.degree()
    target = p_val ** s
    lifted = _hensel_lift_list(ring, rf, list(f.coeffs), mod_factors, p_val, target)
    return _recombine(f, lifted, target, lambda c: c)


def _factor_squarefree(f):
    if f.degree() == 1:
        return [f]
    if f.ring.is_function_field:
        return _factor_squarefree_ff(f)
    return _factor_squarefree_zz(f)


def _deflate(f, p):
    """F with F(x^p) = f; valid when f has zero derivative."""
    ring = f.ring
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            out.append(c)
        elif not ring.is_zero(c):
            raise AssertionError("zero-derivative polynomial with bad support")
    return UPoly(ring, out)


def _coeff_pth_root(c):
    """p-th root of an FqPoly, or None when it has none."""
    F = c.field
    p = F.characteristic
    for j in range(len(c.coeffs)):
        if j % p and c.coeffs[j] != F.zero_raw:
            return None
    root = []
    e = F.order // p
    for j in range(0, len(c.coeffs), p):
        root.append(F.rpow(c.coeffs[j], e))
    return FqPoly(F, root)


def _poly_pth_root(f, p):
    """h with h^p = f(x^p) shape, i.e. coefficient-wise p-th roots,
    or None if some coefficient has no p-th root."""
    roots = []
    for c in f.coeffs:
        r = _coeff_pth_root(c)
        if r is None:
            return None
        roots.append(r)
    return UPoly(f.ring, roots)


def _inflate(f, p):
    """f(x^p)."""
    ring = f.ring
    out = []
    for c in f.coeffs:
        out.append(c)
        out.extend([ring.zero] * (p - 1))
    return UPoly(ring, out[:len(out) - (p - 1)] if f.coeffs else [])


def _accumulate_factors(f, mult, result):
    """Factor a primitive polynomial into result (dict poly -> mult),
    deflating zero-derivative components; raises InseparableFactor."""
    ring = f.ring
    if f.degree() == 0:
        return
    for part, part_mult in squarefree_split(f):
        m = mult * part_mult
        if part.derivative().is_zero():
            p = ring.field.characteristic
            deflated = normalize_primitive(_deflate(part, p))[1]
            sub = {}
            _accumulate_factors(deflated, 1, sub)
            for g, e in sub.items():
                h = _poly_pth_root(g, p)
                if h is None:
                    raise InseparableFactor(_inflate(g, p))
                _accumulate_factors(normalize_primitive(h)[1], m * e * p, result)
        elif part.degree() >= 1:
            for g in _factor_squarefree(part):
                result[g] = result.get(g, 0) + m


def factor_irreducible(f):
    """Complete factorization of a nonzero f over K into a
    FactoredPolynomial; raises InseparableFactor when an irreducible
    factor has zero derivative."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    ring = f.ring
    content, prim = normalize_primitive(f)
    result = {}
    _accumulate_factors(prim, 1, result)
    product = UPoly(ring, [ring.one])
    for g, e in result.items():
        product = product * g ** e
    unit_poly = poly_exact_div(prim, product)
    if unit_poly is None or unit_poly.degree() != 0:
        raise ArithmeticError("internal factorization reconstruction failed")
    content_total = content * unit_poly.constant_term()
    factors = tuple(
        IrreducibleFactor(g, e, separable=not g.derivative().is_zero())
        for g, e in sorted(result.items(), key=lambda it: _poly_sort_key(it[0]))
    )
    return FactoredPolynomial(content=content_total, factors=factors, original=f)


def verify_factored_input(claimed, f):
    """Validate a user-supplied factorization of f.

    Accepts iff the product matches f up to a unit and every claimed
    factor is irreducible (per the built-in factorizer); raises
    ProductMismatch or ReducibleClaimedFactor otherwise.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot verify factors of the zero polynomial")
    ring = f.ring
    merged = {}
    for g, e in claimed:
        if g.is_zero() or e < 1:
            raise ProductMismatch("claimed factor is zero or has bad multiplicity")
        g = _unit_normalize_poly(normalize_primitive(g)[1])[1]
        merged[g] = merged.get(g, 0) + e
    product = UPoly(ring, [ring.one])
    for g, e in merged.items():
        product = product * g ** e
    content_poly = poly_exact_div(f, product)
    if content_poly is None or content_poly.degree() != 0:
        raise ProductMismatch("claimed factors do not multiply back to the input")
    for g in merged:
        if g.degree() < 1:
            raise ReducibleClaimedFactor(f"{g} is constant")
        sub = factor_irreducible(g)
        if len(sub.factors) != 1 or sub.factors[0].multiplicity != 1:
            raise ReducibleClaimedFactor(f"{g} is reducible")
    factors = tuple(
        IrreducibleFactor(g, e, separable=not g.derivative().is_zero())
        for g, e in sorted(merged.items(), key=lambda it: _poly_sort_key(it[0]))
    )
    for fac in factors:
        if not fac.separable:
            raise InseparableFactor(fac.poly)
    return FactoredPolynomial(content=content_poly.constant_term(),
                              factors=factors, original=f)
