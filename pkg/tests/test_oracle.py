import pytest

from intersective import (
    CapExceeded,
    Modulus,
    PrimeElement,
    PrimePower,
    UPoly,
    ZeroInput,
    has_root_mod_prime_power,
    oracle_has_root_mod,
    oracle_scan,
)

from conftest import random_poly, seeded


def test_oracle_examples(zz):
    x = UPoly.gen(zz)
    report = oracle_has_root_mod(x ** 2 - 13, 17)
    assert report.root == 8 and report.residues_tried == 9

    report = oracle_has_root_mod(x ** 2 - 3, 8)
    assert report.root is None and report.residues_tried == 8

    report = oracle_has_root_mod(x, 12345)
    assert report.root == 0


def test_oracle_rejects_bad_moduli(zz):
    x = UPoly.gen(zz)
    with pytest.raises(ZeroInput):
        oracle_has_root_mod(x, 0)
    with pytest.raises(ZeroInput):
        oracle_has_root_mod(x, 1)
    with pytest.raises(CapExceeded):
        oracle_has_root_mod(x, 10 ** 9, cap=10 ** 6)


def test_oracle_scan_examples(zz, r3):
    x = UPoly.gen(zz)
    f = (x ** 2 - 3) * (x ** 2 - 13) * (x ** 2 - 39)
    # x = 1 gives (-2)(-12)(-38) = -912 = 8 * (-114), so 8 has a root; the
    # first rootless modulus is 2^5 = 32
    assert f.eval(1) % 8 == 0
    assert oracle_scan(f, 20) is None
    assert oracle_scan(f, 40) == 32

    assert oracle_scan(x * (x - 1), 50) is None

    T, xt = r3.T, UPoly.gen(r3)
    g = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    witness = oracle_scan(g, 5)
    assert witness == (T + 1) ** 3
    # the witness divides Delta = T^5 (T+1)^5
    delta = T ** 5 * (T + 1) ** 5
    assert r3.is_zero(delta % witness)


def test_oracle_homomorphic_necessity(zz):
    # a root mod a*b implies roots mod a and mod b
    rng = seeded("oracle-homomorphic")
    x = UPoly.gen(zz)
    coprime_pairs = [(3, 8), (5, 9), (7, 16), (11, 25), (4, 27)]
    for _ in range(60):
        f = random_poly(rng, zz, max_deg=4)
        a, b = coprime_pairs[rng.randrange(len(coprime_pairs))]
        full = oracle_has_root_mod(f, a * b)
        if full.has_root:
            assert oracle_has_root_mod(f, a).has_root
            assert oracle_has_root_mod(f, b).has_root


def test_oracle_agrees_with_localroots(zz, r3):
    rng = seeded("oracle-vs-hensel")
    x = UPoly.gen(zz)
    int_pps = [(2, 4), (3, 3), (5, 2), (13, 1)]
    for _ in range(50):
        f = random_poly(rng, zz, max_deg=4)
        if not f.is_primitive():
            continue
        for p, k in int_pps:
            pp = PrimePower(PrimeElement(p), k)
            hensel, _ = has_root_mod_prime_power(f, pp)
            brute = oracle_has_root_mod(f, p ** k).has_root
            assert hensel == brute, (str(f), p, k)
    T = r3.T
    ff_pps = [(T, 3), (T + 2, 3), (T * T + 1, 2)]
    for _ in range(40):
        f = random_poly(rng, r3, max_deg=3)
        if not f.is_primitive():
            continue
        for prime, k in ff_pps:
            pp = PrimePower(PrimeElement(prime), k)
            hensel, _ = has_root_mod_prime_power(f, pp)
            brute = oracle_has_root_mod(f, prime ** k).has_root
            assert hensel == brute, (str(f), str(prime), k)


def test_oracle_report_root_satisfies_congruence(zz, r3):
    rng = seeded("oracle-roots-valid")
    for ring in (zz, r3):
        for _ in range(40):
            f = random_poly(rng, ring, max_deg=4)
            m = (rng.randrange(2, 200) if ring is zz
                 else ring.T ** 2 + ring.from_int(rng.randrange(3)))
            m = ring.coerce(m)
            if ring.is_zero(m) or ring.is_unit(m):
                continue
            report = oracle_has_root_mod(f, m)
            if report.has_root:
                assert ring.is_zero(f.eval_mod(report.root, m))
