import pytest

from intersective import (
    Modulus,
    NotPrimitive,
    PrimeElement,
    PrimePower,
    UPoly,
    has_root_mod_modulus,
    has_root_mod_prime,
    has_root_mod_prime_power,
    roots_mod_prime,
)
from intersective.fqpoly import fq_enumerate_irreducibles

from conftest import random_poly, seeded


def _brute_roots(f, ring, m):
    return [r for r in ring.residues(m) if ring.is_zero(f.eval_mod(r, m))]


def test_has_root_mod_prime_examples(zz, r3):
    x = UPoly.gen(zz)
    ok, root = has_root_mod_prime(x ** 2 - 13, PrimeElement(17))
    assert ok and (root * root - 13) % 17 == 0
    assert root in (8, 9)  # the two square roots of 13 mod 17

    T, xt = r3.T, UPoly.gen(r3)
    ok, root = has_root_mod_prime(xt ** 2 - T, PrimeElement(T + 1))
    assert not ok and root is None  # x^2 = 2 has no solution in F_3

    ok, root = has_root_mod_prime(xt - T, PrimeElement(T * T + 1))
    assert ok and r3.is_zero((root - T) % (T * T + 1))


def test_has_root_mod_prime_requires_primitive(zz):
    x = UPoly.gen(zz)
    with pytest.raises(NotPrimitive):
        has_root_mod_prime(3 * x ** 2 + 3, PrimeElement(5))


def test_roots_mod_prime_matches_enumeration(zz, r3):
    rng = seeded("roots-vs-enumeration")
    int_primes = [p for p in zz.primes(50)]
    ff_primes = list(fq_enumerate_irreducibles(r3.field, 2))
    for _ in range(100):
        f = random_poly(rng, zz, max_deg=5)
        if not f.is_primitive():
            continue
        for p in int_primes:
            expected = _brute_roots(f, zz, p.value)
            assert roots_mod_prime(f, p) == expected, (str(f), p.value)
        g = random_poly(rng, r3, max_deg=5)
        if not g.is_primitive():
            continue
        for p in ff_primes:
            expected = _brute_roots(g, r3, p.value)
            got = roots_mod_prime(g, p)
            assert sorted(got, key=r3.sort_key) == expected, (str(g), str(p.value))


def test_prime_power_examples(zz, r3):
    x = UPoly.gen(zz)
    ok, root = has_root_mod_prime_power(x ** 2 - 17, PrimePower(PrimeElement(2), 13))
    assert ok and (root * root - 17) % 2 ** 13 == 0

    ok, root = has_root_mod_prime_power(x ** 2 - 3, PrimePower(PrimeElement(2), 3))
    assert not ok  # squares mod 8 are {0, 1, 4}
    assert _brute_roots(x ** 2 - 3, zz, 8) == []

    T, xt = r3.T, UPoly.gen(r3)
    pp = PrimePower(PrimeElement(T), 5)
    ok, root = has_root_mod_prime_power(xt ** 2 - (T + 1), pp)
    assert ok and r3.is_zero((root * root - (T + 1)) % T ** 5)
    assert len(_brute_roots(xt ** 2 - (T + 1), r3, T ** 5)) == 2


def test_prime_power_all_roots_matches_enumeration(zz, r3):
    rng = seeded("hensel-vs-enumeration")
    x = UPoly.gen(zz)
    cases = [
        (x ** 2 - 17, PrimePower(PrimeElement(2), 13)),
        (x ** 2 - 1, PrimePower(PrimeElement(2), 6)),
        (x ** 3 - x, PrimePower(PrimeElement(3), 4)),
        ((x - 2) * (x - 2) - 49, PrimePower(PrimeElement(7), 3)),
    ]
    for f, pp in cases:
        got = has_root_mod_prime_power(f, pp, all_roots=True)
        assert got == _brute_roots(f, zz, pp.value())
    for _ in range(60):
        f = random_poly(rng, zz, max_deg=4)
        if not f.is_primitive():
            continue
        for p, k in ((2, 3), (3, 3), (5, 2), (7, 2)):
            pp = PrimePower(PrimeElement(p), k)
            if pp.residue_count() > 10 ** 4:
                continue
            got = has_root_mod_prime_power(f, pp, all_roots=True)
            assert got == _brute_roots(f, zz, pp.value()), (str(f), p, k)
    T = r3.T
    for _ in range(40):
        f = random_poly(rng, r3, max_deg=3)
        if not f.is_primitive():
            continue
        for prime, k in ((T, 4), (T + 1, 4), (T * T + 1, 2)):
            pp = PrimePower(PrimeElement(prime), k)
            if pp.residue_count() > 10 ** 4:
                continue
            got = has_root_mod_prime_power(f, pp, all_roots=True)
            expected = _brute_roots(f, r3, pp.value())
            assert sorted(got, key=r3.sort_key) == expected, (str(f), str(prime), k)


def test_hensel_regularity():
    # a simple root mod p lifts to every exponent
    rng = seeded("hensel-regularity")
    zz_primes = [3, 5, 7, 11, 13]
    from intersective import INTEGERS
    x = UPoly.gen(INTEGERS)
    checked = 0
    for _ in range(200):
        f = random_poly(rng, INTEGERS, max_deg=4)
        if not f.is_primitive():
            continue
        fp = f.derivative()
        for p in zz_primes:
            for r in _brute_roots(f, INTEGERS, p):
                if fp.eval_mod(r, p) % p != 0:
                    ok, root = has_root_mod_prime_power(
                        f, PrimePower(PrimeElement(p), 6))
                    assert ok
                    checked += 1
    assert checked > 50


def test_modulus_examples(zz, r5):
    x = UPoly.gen(zz)
    f = (x ** 2 - 3) * (x ** 2 - 13) * (x ** 2 - 39)
    # mod 8 there IS a root (x=1: residues 6*4*2 = 48 = 0 mod 8) even though
    # no single factor vanishes; the first rootless 2-power is 2^5
    ok, roots, failing = has_root_mod_modulus(f, Modulus.from_pairs([(PrimeElement(2), 3)]))
    assert ok
    assert _brute_roots(f, zz, 8) != []
    ok, roots, failing = has_root_mod_modulus(f, Modulus.from_pairs([(PrimeElement(2), 5)]))
    assert not ok and failing.exponent == 5
    assert _brute_roots(f, zz, 32) == []

    T5, x5 = r5.T, UPoly.gen(r5)
    g = (x5 ** 2 - T5) * (x5 ** 2 - (T5 + 4)) * (x5 ** 2 - T5 * (T5 + 4))
    m = Modulus.from_pairs([(PrimeElement(T5), 5), (PrimeElement(T5 + 4), 5)])
    ok, roots, failing = has_root_mod_modulus(g, m)
    assert ok and len(roots) == 2

    # empty modulus is vacuously satisfied
    ok, roots, failing = has_root_mod_modulus(f, Modulus(()))
    assert ok and roots == []


def test_crt_consistency(zz, r3):
    rng = seeded("crt-consistency")
    pairs_checked = 0
    x = UPoly.gen(zz)
    int_pps = [(2, 3), (3, 2), (5, 2), (7, 1), (11, 1), (13, 1)]
    while pairs_checked < 100:
        f = random_poly(rng, zz, max_deg=4)
        if not f.is_primitive():
            continue
        (p1, k1), (p2, k2) = rng.sample(int_pps, 2)
        m_joint = Modulus.from_pairs([(PrimeElement(p1), k1), (PrimeElement(p2), k2)])
        a = has_root_mod_modulus(f, Modulus.from_pairs([(PrimeElement(p1), k1)]))[0]
        b = has_root_mod_modulus(f, Modulus.from_pairs([(PrimeElement(p2), k2)]))[0]
        joint = has_root_mod_modulus(f, m_joint)[0]
        assert joint == (a and b)
        # cross-check against direct enumeration of the product modulus
        if p1 ** k1 * p2 ** k2 <= 4000:
            assert joint == bool(_brute_roots(f, zz, p1 ** k1 * p2 ** k2))
        pairs_checked += 1


def test_modulus_rejects_repeated_primes(zz):
    with pytest.raises(ValueError):
        Modulus.from_pairs([(PrimeElement(2), 3), (PrimeElement(2), 5)])
