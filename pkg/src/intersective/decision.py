"""The decision core: Delta profiles, least-prime bounds, family shortcuts
and the full intersectivity pipeline.

A polynomial f over O_K (Z or F_q[T]) with separable irreducible factors is
intersective iff f = 0 mod Delta is solvable and f has a root mod every
prime up to an explicit bound: degree <= ceil(2 log_q(2D' + 2dD'' + 8g D''
+ 4)) in the function-field case (where the criterion is exhaustive and
exact), norm <= N(D)^12577 over Q (astronomically beyond enumeration, so
the integer pipeline is honest and returns Inconclusive unless a family
analysis settles the question exactly).

Verdicts carry machine-checkable certificates (a root in O_K, the list of
primes exhaustively checked plus the Delta roots, or a family criterion)
or witnesses (a concrete modulus without a root, or the Galois obstruction
of Corollary 1 with a located witness prime).  All verdicts describe the
primitive polynomial after content removal; intersectivity is invariant
under that normalization, and witnesses are rescaled for repeated factors
so they remain directly verifiable against the reported polynomial.
"""

import math
from dataclasses import dataclass, field as dataclass_field

from .errors import InseparableFactor, WrongRing, ZeroPolynomial
from .factor import FactoredPolynomial, factor_irreducible, verify_factored_input
from .fqpoly import FieldProfile, FqPoly, PrimeElement, ring_factorize
from .localroots import (
    Modulus,
    PrimePower,
    has_root_mod_modulus,
    has_root_mod_prime,
    has_root_mod_prime_power,
)
from .upoly import UPoly, normalize_primitive, resultant


# ---------------------------------------------------------------------------
# verdicts and certificates
# ---------------------------------------------------------------------------

INTERSECTIVE = "intersective"
NOT_INTERSECTIVE = "not_intersective"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TrivialRootInOK:
    root: object
    kind = "trivial_root_in_OK"


@dataclass(frozen=True)
class ExhaustiveFunctionField:
    bound: int
    primes_per_degree: tuple     # ((degree, count), ...) for every degree <= bound
    total_primes: int
    delta_roots: tuple           # ((PrimePower, root), ...)
    kind = "exhaustive_function_field"


@dataclass(frozen=True)
class FamilyCriterion:
    family: str                  # "multiquadratic" or "linear_splitting_field"
    details: tuple               # ((name, value), ...) human-readable conditions
    delta_roots: tuple
    kind = "family_criterion"


@dataclass(frozen=True)
class ModulusWithoutRoot:
    modulus: Modulus
    kind = "modulus_without_root"


@dataclass(frozen=True)
class GaloisObstruction:
    reason: str                  # "IrreducibleDegGe2" or "NoRootDegLe4"
    witness_prime: object = None
    kind = "galois_obstruction"


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: object = None
    witness: object = None
    scanned_bound: object = None     # Inconclusive: largest prime scanned
    nf_bound: tuple = None           # Inconclusive: (N(D), 12577)
    profile: object = None
    polynomial: object = None        # the primitive polynomial decided

    @property
    def is_intersective(self):
        return self.status == INTERSECTIVE


@dataclass(frozen=True)
class DeltaProfile:
    """Everything Theorem 1's setup derives from the factorization."""

    resultants: tuple            # r_i = res(g_i, g_i') per distinct factor
    q_product: object            # q = r_1 ... r_m
    q_factorization: tuple       # ((PrimeElement, b_i), ...)
    delta: Modulus               # exponents 2 b_i + 1
    delta_prime: object          # sum b_i deg(p_i), function field only
    d_prime: int                 # prod n_i!
    d_norm: object               # prod |disc g_i|^(D'(1 - 1/n_i)), Z only
    degrees: tuple               # n_i


@dataclass
class DecideConfig:
    max_prime: int = 10_000          # integer-prime scan bound
    use_shortcuts: bool = True       # Corollary 1 / multiquadratic analyses
    witness_scan: bool = True        # locate a concrete witness prime
    pre_factored: object = None      # list of (UPoly, multiplicity)


def build_delta_profile(fp):
    """DeltaProfile of a FactoredPolynomial (multiplicities are dropped;
    the congruence condition sees only the zero set)."""
    ring = fp.original.ring
    resultants = []
    degrees = []
    d_prime = 1
    d_norm = 1 if not ring.is_function_field else None
    for fac in fp.factors:
        if not fac.separable:
            raise InseparableFactor(fac.poly)
        g = fac.poly
        r = resultant(g, g.derivative())
        if ring.is_zero(r):
            raise InseparableFactor(g)
        resultants.append(r)
        n = g.degree()
        degrees.append(n)
        d_prime *= math.factorial(n)
    if d_norm is not None:
        for g_fac, r in zip(fp.factors, resultants):
            n = g_fac.poly.degree()
            if n < 2:
                continue
            disc = abs(r) // abs(g_fac.poly.lc())
            exponent = d_prime * (n - 1) // n
            d_norm *= disc ** exponent
    q_product = ring.one
    for r in resultants:
        q_product = q_product * r
    if ring.is_unit(q_product):
        q_fact = ()
    else:
        _, q_fact = ring_factorize(q_product, ring)
        q_fact = tuple(q_fact)
    delta = Modulus(tuple(PrimePower(p, 2 * b + 1) for p, b in q_fact))
    delta_prime = None
    if ring.is_function_field:
        delta_prime = sum(b * p.degree() for p, b in q_fact)
    return DeltaProfile(
        resultants=tuple(resultants),
        q_product=q_product,
        q_factorization=q_fact,
        delta=delta,
        delta_prime=delta_prime,
        d_prime=d_prime,
        d_norm=d_norm,
        degrees=tuple(degrees),
    )


def ff_prime_bound(profile, field):
    """ceil(2 log_q(2D' + 2dD'' + 8gD'' + 4)) by exact integer bracketing:
    the least n with q^n >= M^2."""
    if not field.is_function_field:
        raise WrongRing("function-field bound requested over the integers")
    if profile.delta_prime is None:
        raise WrongRing("profile was built over the integers")
    q = field.q
    m = (2 * profile.delta_prime + 2 * field.degree * profile.d_prime
         + 8 * field.genus * profile.d_prime + 4)
    target = m * m
    n = 0
    power = 1
    while power < target:
        power *= q
        n += 1
    return max(n, 1)


def nf_bound(profile):
    """(N(D), 12577), reported symbolically and never expanded."""
    if profile.d_norm is None:
        raise WrongRing("number-field bound requested over a function field")
    return profile.d_norm, 12577


def shortcut_corollary1(fp):
    """Corollary 1 on the radical: a single irreducible factor of degree
    >= 2, or radical degree <= 4 with no linear factor, is never
    intersective.  Returns the bare obstruction (no witness prime); the
    pipeline enriches it with a scanned witness."""
    factors = fp.factors
    if not factors or any(fac.poly.degree() == 1 for fac in factors):
        return None
    if len(factors) == 1 and factors[0].poly.degree() >= 2:
        return Verdict(NOT_INTERSECTIVE, witness=GaloisObstruction("IrreducibleDegGe2"))
    if sum(fac.poly.degree() for fac in factors) <= 4:
        return Verdict(NOT_INTERSECTIVE, witness=GaloisObstruction("NoRootDegLe4"))
    return None


def _match_multiquadratic(fp):
    """(theta_1, theta_2, theta_1*theta_2) when the radical is exactly the
    multiquadratic family over non-associate primes, else None."""
    ring = fp.original.ring
    if len(fp.factors) != 3:
        return None
    if any(fac.poly.degree() != 2 for fac in fp.factors):
        return None
    thetas = []
    for fac in fp.factors:
        g = fac.poly
        if g.lc() != ring.one or not ring.is_zero(g.coeffs[1]):
            return None
        thetas.append(-g.coeffs[0])
    for k in range(3):
        i, j = [idx for idx in range(3) if idx != k]
        t1, t2, t3 = thetas[i], thetas[j], thetas[k]
        if t3 != t1 * t2:
            continue
        if not (ring.is_prime_element(t1) and ring.is_prime_element(t2)):
            continue
        if ring.unit_normalize(t1)[1] == ring.unit_normalize(t2)[1]:
            continue
        return t1, t2, t3
    return None


def analyze_multiquadratic(fp, profile=None):
    """Exact analysis of (x^2-t1)(x^2-t2)(x^2-t1 t2) for non-associate
    primes t1, t2 (odd characteristic or Z).

    Its splitting field has Klein four-group and the conjugates of the
    root-fixing subgroups cover it, so intersectivity reduces to the
    Delta congruence: over F_q (q odd) that is exactly "t1 is a square
    mod t2^5 and t2 is a square mod t1^5"; over Z the 2-power component
    of Delta is an additional genuine condition (both square conditions
    can hold while the polynomial is not intersective).
    """
    ring = fp.original.ring
    if ring.is_function_field and ring.field.characteristic == 2:
        return None
    match = _match_multiquadratic(fp)
    if match is None:
        return None
    t1, t2, _ = match
    if profile is None:
        profile = build_delta_profile(fp)
    p1 = ring.prime_element(t1)
    p2 = ring.prime_element(t2)
    x = UPoly.gen(ring)
    sq1, _ = has_root_mod_prime_power(x * x - t1, PrimePower(p2, 5))
    sq2, _ = has_root_mod_prime_power(x * x - t2, PrimePower(p1, 5))
    details = [
        ("theta1", ring.element_str(t1)),
        ("theta2", ring.element_str(t2)),
        ("theta1_square_mod_theta2^5", sq1),
        ("theta2_square_mod_theta1^5", sq2),
    ]
    radical = fp.radical()
    ok, delta_roots, failing = has_root_mod_modulus(radical, profile.delta)
    if not ring.is_function_field:
        two_part = next((pp for pp in profile.delta.parts if pp.prime.value == 2), None)
        if two_part is not None:
            # delta components are checked in canonical order, 2 first, so a
            # non-2 failure means the 2-power component passed
            two_ok = failing is None or failing.prime.value != 2
            details.append((f"root_mod_{two_part}", two_ok))
    if ok:
        cert = FamilyCriterion(family="multiquadratic", details=tuple(details),
                               delta_roots=tuple(delta_roots))
        return Verdict(INTERSECTIVE, certificate=cert, profile=profile,
                       polynomial=fp.original)
    return Verdict(NOT_INTERSECTIVE,
                   witness=ModulusWithoutRoot(Modulus((failing,))),
                   profile=profile, polynomial=fp.original)


def _integral_root(f):
    """A root of f in O_K, or None.  Roots divide the constant term."""
    ring = f.ring
    a0 = f.constant_term()
    if ring.is_zero(a0):
        return ring.zero
    if f.degree() == 0:
        return None
    _, items = ring_factorize(a0, ring)
    divisors = [ring.one]
    for prime, e in items:
        divisors = [d * prime.value ** k for d in divisors for k in range(e + 1)]
    if ring.is_function_field:
        F = ring.field
        units = [FqPoly(F, [F.rfrom_code(code)]) for code in range(1, F.order)]
        candidates = [u * d for d in divisors for u in units]
    else:
        candidates = [d for d in divisors] + [-d for d in divisors]
    candidates.sort(key=ring.sort_key)
    for r in candidates:
        if ring.is_zero(f.eval(r)):
            return r
    return None


def _scan_primes_for_witness(radical, ring, limit):
    """First prime (by canonical order) where the radical has no root."""
    for prime in ring.primes(limit):
        ok, _ = has_root_mod_prime(radical, prime, want_root=False)
        if not ok:
            return prime
    return None


def _witness_for_multiplicities(witness, prim, max_mult):
    """A radical witness need not refute a polynomial with repeated
    factors; the exponents scaled by the largest multiplicity always do,
    but the unscaled modulus usually already works, so try it first."""
    if max_mult <= 1:
        return witness
    ok, _, _ = has_root_mod_modulus(prim, witness.modulus)
    if not ok:
        return witness
    parts = tuple(PrimePower(pp.prime, pp.exponent * max_mult)
                  for pp in witness.modulus.parts)
    return ModulusWithoutRoot(Modulus(parts))


def decide(f, field=None, config=None):
    """The full pipeline of Theorem 1; see the module docstring.

    Deterministic: identical inputs yield identical verdicts.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot decide the zero polynomial")
    ring = f.ring
    if field is None:
        field = (FieldProfile.function_field(ring.field.order)
                 if ring.is_function_field else FieldProfile.rationals())
    if field.ring != ring:
        raise WrongRing("field profile does not match the polynomial's ring")
    if config is None:
        config = DecideConfig()

    _, prim = normalize_primitive(f)

    fp = None
    if config.pre_factored is not None:
        # claimed factorizations are validated up front, regardless of how
        # the verdict is later reached
        fp = verify_factored_input(config.pre_factored, prim)

    root = _integral_root(prim)
    if root is not None:
        return Verdict(INTERSECTIVE, certificate=TrivialRootInOK(root),
                       polynomial=prim)
    if prim.degree() == 0:
        # unit constant: no root modulo any nontrivial modulus
        wp = next(iter(ring.primes(2 if not ring.is_function_field else 1)))
        return Verdict(NOT_INTERSECTIVE,
                       witness=ModulusWithoutRoot(Modulus((PrimePower(wp, 1),))),
                       polynomial=prim)

    if fp is None:
        fp = factor_irreducible(prim)
    radical = fp.radical()
    max_mult = max(fac.multiplicity for fac in fp.factors)
    profile = build_delta_profile(fp)

    if config.use_shortcuts:
        shortcut = shortcut_corollary1(fp)
        if shortcut is not None:
            witness_prime = None
            if config.witness_scan:
                if ring.is_function_field:
                    bound = ff_prime_bound(profile, field)
                    witness_prime = _scan_primes_for_witness(radical, ring, bound)
                else:
                    witness_prime = _scan_primes_for_witness(
                        radical, ring, config.max_prime)
            witness = GaloisObstruction(shortcut.witness.reason, witness_prime)
            return Verdict(NOT_INTERSECTIVE, witness=witness, profile=profile,
                           polynomial=prim)

    ok, delta_roots, failing = has_root_mod_modulus(radical, profile.delta)
    if not ok:
        witness = ModulusWithoutRoot(Modulus((failing,)))
        witness = _witness_for_multiplicities(witness, prim, max_mult)
        return Verdict(NOT_INTERSECTIVE, witness=witness, profile=profile,
                       polynomial=prim)

    if ring.is_function_field:
        bound = ff_prime_bound(profile, field)
        per_degree = {}
        for prime in ring.primes(bound):
            has, _ = has_root_mod_prime(radical, prime, want_root=False)
            if not has:
                return Verdict(
                    NOT_INTERSECTIVE,
                    witness=ModulusWithoutRoot(Modulus((PrimePower(prime, 1),))),
                    profile=profile, polynomial=prim)
            d = prime.degree()
            per_degree[d] = per_degree.get(d, 0) + 1
        cert = ExhaustiveFunctionField(
            bound=bound,
            primes_per_degree=tuple(sorted(per_degree.items())),
            total_primes=sum(per_degree.values()),
            delta_roots=tuple(delta_roots))
        return Verdict(INTERSECTIVE, certificate=cert, profile=profile,
                       polynomial=prim)

    # integer ring
    if all(n == 1 for n in profile.degrees):
        # splitting field is Q: Delta solvability is the only condition
        cert = FamilyCriterion(family="linear_splitting_field",
                               details=(("all_factors_linear", True),),
                               delta_roots=tuple(delta_roots))
        return Verdict(INTERSECTIVE, certificate=cert, profile=profile,
                       polynomial=prim)
    if config.use_shortcuts:
        mq = analyze_multiquadratic(fp, profile)
        if mq is not None:
            if mq.status == NOT_INTERSECTIVE:
                witness = _witness_for_multiplicities(mq.witness, prim, max_mult)
                return Verdict(NOT_INTERSECTIVE, witness=witness, profile=profile,
                               polynomial=prim)
            return Verdict(mq.status, certificate=mq.certificate,
                           witness=mq.witness, profile=profile, polynomial=prim)
    witness_prime = _scan_primes_for_witness(radical, ring, config.max_prime)
    if witness_prime is not None:
        return Verdict(NOT_INTERSECTIVE,
                       witness=ModulusWithoutRoot(
                           Modulus((PrimePower(witness_prime, 1),))),
                       profile=profile, polynomial=prim)
    return Verdict(INCONCLUSIVE, scanned_bound=config.max_prime,
                   nf_bound=nf_bound(profile), profile=profile, polynomial=prim)


@dataclass(frozen=True)
class DensityRow:
    degree: object               # prime degree (FF) or scan label (Z)
    primes: int
    with_root: int

    @property
    def fraction(self):
        return self.with_root / self.primes if self.primes else float("nan")


def prime_density_diagnostic(f, field=None, bound=4):
    """Chebotarev-flavoured statistics: how often f has a root mod primes.

    Function field: one row per prime degree up to the bound.  Integers:
    a single row over the primes up to the bound.  Diagnostic only.
    """
    ring = f.ring
    _, prim = normalize_primitive(f)
    if ring.is_function_field:
        counts = {}
        for prime in ring.primes(bound):
            d = prime.degree()
            total, hits = counts.get(d, (0, 0))
            ok, _ = has_root_mod_prime(prim, prime, want_root=False)
            counts[d] = (total + 1, hits + (1 if ok else 0))
        return [DensityRow(d, t, h) for d, (t, h) in sorted(counts.items())]
    total = hits = 0
    for prime in ring.primes(bound):
        total += 1
        ok, _ = has_root_mod_prime(prim, prime, want_root=False)
        hits += 1 if ok else 0
    return [DensityRow(f"p <= {bound}", total, hits)]
