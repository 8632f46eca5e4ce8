"""Roots of a polynomial modulo primes, prime powers and factored moduli.

Existence mod a prime is decided in the residue field (root extraction by
equal-degree splitting).  Existence mod a prime power lifts level by level:
a root whose derivative is a unit mod the prime lifts uniquely by Newton
steps; a singular root branches over all residue-field lifts, keeping the
candidates that survive at the next level.  A factored modulus is handled
componentwise (the Chinese Remainder Theorem glues the residues).
"""

from dataclasses import dataclass

from .errors import NotPrimitive, SpecMismatch
from .fields import poly_roots, poly_has_root
from .fqpoly import PrimeElement, ring_of
from .upoly import reduce_mod_prime


@dataclass(frozen=True)
class PrimePower:
    prime: PrimeElement
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("exponent must be at least 1")

    def value(self):
        return self.prime.value ** self.exponent

    def residue_count(self):
        return self.prime.norm() ** self.exponent

    def __str__(self):
        base = str(self.prime.value)
        if self.exponent == 1:
            return base
        if any(ch in base for ch in " +*"):
            base = f"({base})"
        return f"{base}^{self.exponent}"


@dataclass(frozen=True)
class Modulus:
    """A nonempty-or-empty product of powers of pairwise distinct primes."""

    parts: tuple

    def __post_init__(self):
        seen = set()
        for pp in self.parts:
            if pp.prime.value in seen:
                raise ValueError("modulus primes must be pairwise distinct")
            seen.add(pp.prime.value)

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple(PrimePower(p, e) for p, e in pairs))

    def is_empty(self):
        return not self.parts

    def value(self):
        if not self.parts:
            raise ValueError("the empty modulus has no single value")
        acc = self.parts[0].value()
        for pp in self.parts[1:]:
            acc = acc * pp.value()
        return acc

    def residue_count(self):
        n = 1
        for pp in self.parts:
            n *= pp.residue_count()
        return n

    def __str__(self):
        if not self.parts:
            return "(1)"
        return " * ".join(str(pp) for pp in self.parts)


def _reduced(f, prime):
    ring = f.ring
    if ring_of(prime.value) != ring:
        raise SpecMismatch("prime from a different ring than the polynomial")
    return reduce_mod_prime(f, prime)


def has_root_mod_prime(f, prime, want_root=True):
    """(exists, root) for f mod a prime; the root is a canonical ring
    representative when it exists.  f must be primitive.

    With want_root=False the root extraction (equal-degree splitting) is
    skipped; existence needs only gcd(x^Q - x, f mod p).
    """
    if not isinstance(prime, PrimeElement):
        prime = PrimeElement(prime)
    rf, fbar = _reduced(f, prime)
    if len(fbar) <= 1:
        # nonzero constant (or the degree collapsed entirely): no root
        return False, None
    if not want_root:
        return poly_has_root(rf.field, fbar), None
    roots = poly_roots(rf.field, fbar)
    if not roots:
        return False, None
    return True, rf.lift(roots[0])


def roots_mod_prime(f, prime):
    """All roots of f mod the prime, as canonical ring representatives."""
    if not isinstance(prime, PrimeElement):
        prime = PrimeElement(prime)
    rf, fbar = _reduced(f, prime)
    if len(fbar) <= 1:
        return []
    return [rf.lift(r) for r in poly_roots(rf.field, fbar)]


def _newton_lift(f, fprime, root, prime_value, exponent, ring):
    """Lift a simple root mod p to a root mod p^exponent (unit derivative)."""
    m = prime_value
    r = root
    for _ in range(exponent - 1):
        m = m * prime_value
        d = fprime.eval_mod(r, m)
        r = (r - f.eval_mod(r, m) * ring.inv_mod(d, m)) % m
    return r


def has_root_mod_prime_power(f, pp, all_roots=False):
    """Existence of a root of f modulo prime^exponent.

    Returns (exists, root) by default; with all_roots=True returns the
    full sorted list of root residues instead (used by the oracle tests).
    Branching at singular roots is bounded by the residue-field size per
    level, which is fine at the exponents the Delta moduli produce.
    """
    prime = pp.prime
    k = pp.exponent
    ring = f.ring
    rf, fbar = _reduced(f, prime)
    base_roots = []
    if len(fbar) > 1:
        base_roots = [rf.lift(r) for r in poly_roots(rf.field, fbar)]
    if not base_roots:
        return ([] if all_roots else (False, None))
    if k == 1:
        if all_roots:
            return sorted(base_roots, key=ring.sort_key)
        return True, base_roots[0]

    fprime = f.derivative()
    p_val = prime.value
    simple = [r for r in base_roots if _residue_nonzero(rf, fprime, r, p_val)]
    singular = [r for r in base_roots if not _residue_nonzero(rf, fprime, r, p_val)]

    if not all_roots and simple:
        return True, _newton_lift(f, fprime, simple[0], p_val, k, ring)

    found = []
    if all_roots:
        # simple roots have exactly one lift chain; enumerate them exactly
        frontier = list(base_roots)
    else:
        frontier = list(singular)
    m = p_val
    for level in range(1, k):
        m_next = m * p_val
        next_frontier = []
        seen = set()
        for r in frontier:
            if _residue_nonzero(rf, fprime, r, p_val):
                d = fprime.eval_mod(r, m_next)
                cand = (r - f.eval_mod(r, m_next) * ring.inv_mod(d, m_next)) % m_next
                if cand not in seen:
                    seen.add(cand)
                    next_frontier.append(cand)
            else:
                for t in ring.residues(p_val):
                    cand = (r + t * m) % m_next
                    if ring.is_zero(f.eval_mod(cand, m_next)) and cand not in seen:
                        seen.add(cand)
                        next_frontier.append(cand)
        frontier = next_frontier
        m = m_next
        if not frontier:
            break
        if not all_roots and level == k - 1:
            return True, frontier[0]
    if all_roots:
        return sorted(frontier, key=ring.sort_key)
    if frontier:
        return True, frontier[0]
    return False, None


def _residue_nonzero(rf, poly, r, p_val):
    """Whether poly(r) is a unit mod the prime (reduction nonzero)."""
    val = poly.eval_mod(r, p_val)
    red = rf.reduce(val)
    return red != rf.field.zero_raw


def has_root_mod_modulus(f, modulus):
    """f has a root mod every component iff it has one mod the product.

    Returns (exists, component_roots, failing_component); component_roots
    is a list of (PrimePower, root) pairs for the components that passed.
    """
    if not f.is_primitive():
        raise NotPrimitive("has_root_mod_modulus needs a primitive polynomial")
    roots = []
    for pp in modulus.parts:
        ok, root = has_root_mod_prime_power(f, pp)
        if not ok:
            return False, roots, pp
        roots.append((pp, root))
    return True, roots, None
