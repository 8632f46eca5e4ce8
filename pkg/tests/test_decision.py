import dataclasses

import pytest

from intersective import (
    DecideConfig,
    ExhaustiveFunctionField,
    FamilyCriterion,
    FieldProfile,
    FqPoly,
    GaloisObstruction,
    InseparableFactor,
    ModulusWithoutRoot,
    PrimeElement,
    TrivialRootInOK,
    UPoly,
    WrongRing,
    ZeroPolynomial,
    analyze_multiquadratic,
    build_delta_profile,
    decide,
    factor_irreducible,
    ff_prime_bound,
    nf_bound,
    oracle_has_root_mod,
    oracle_scan,
    prime_density_diagnostic,
    shortcut_corollary1,
)

from conftest import random_poly, seeded


def _profile_of(f):
    return build_delta_profile(factor_irreducible(f))


def test_delta_profile_ff_family(r3):
    T, xt = r3.T, UPoly.gen(r3)
    f = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    prof = _profile_of(f)
    assert str(prof.delta) == "T^5 * (T + 1)^5"
    assert [(str(p.value), b) for p, b in prof.q_factorization] == [("T", 2), ("T + 1", 2)]
    assert prof.delta_prime == 4
    assert prof.d_prime == 8
    assert sorted(prof.degrees) == [2, 2, 2]


def test_delta_profile_zz_family(zz):
    x = UPoly.gen(zz)
    f = (x ** 2 - 13) * (x ** 2 - 17) * (x ** 2 - 221)
    prof = _profile_of(f)
    assert sorted(prof.resultants, key=abs) == [-52, -68, -884]
    assert prof.q_product == -(2 ** 6) * 13 ** 2 * 17 ** 2
    assert [(p.value, 2 * b + 1) for p, b in prof.q_factorization] == \
        [(2, 13), (13, 5), (17, 5)]
    assert str(prof.delta) == "2^13 * 13^5 * 17^5"
    assert prof.d_prime == 8
    assert prof.d_norm == 2 ** 24 * 13 ** 8 * 17 ** 8


def test_delta_profile_degenerate_linear(zz):
    x = UPoly.gen(zz)
    prof = _profile_of(x - 5)
    assert prof.resultants == (1,)
    assert prof.delta.is_empty()
    assert prof.d_prime == 1
    assert prof.d_norm == 1


def test_ff_prime_bound_examples(r3, r5):
    T, xt = r3.T, UPoly.gen(r3)
    f3 = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    prof3 = _profile_of(f3)
    assert (prof3.delta_prime, prof3.d_prime) == (4, 8)
    assert ff_prime_bound(prof3, FieldProfile.function_field(3)) == 7

    T5, x5 = r5.T, UPoly.gen(r5)
    f5 = (x5 ** 2 - T5) * (x5 ** 2 - (T5 + 4)) * (x5 ** 2 - T5 * (T5 + 4))
    prof5 = _profile_of(f5)
    assert (prof5.delta_prime, prof5.d_prime) == (4, 8)
    assert ff_prime_bound(prof5, FieldProfile.function_field(5)) == 5

    # Delta' = 0, D' = 1: ceil(2 log_3 6) = 4
    base = dataclasses.replace(prof3, delta_prime=0, d_prime=1)
    assert ff_prime_bound(base, FieldProfile.function_field(3)) == 4


def test_ff_prime_bound_monotone(r3):
    T, xt = r3.T, UPoly.gen(r3)
    prof = _profile_of(xt ** 2 - T)
    field = FieldProfile.function_field(3)
    last = 0
    for dp in range(0, 30, 3):
        cur = ff_prime_bound(dataclasses.replace(prof, delta_prime=dp), field)
        assert cur >= last
        last = cur
    last = 0
    for dpr in (1, 2, 6, 24, 120):
        cur = ff_prime_bound(dataclasses.replace(prof, d_prime=dpr), field)
        assert cur >= last
        last = cur


def test_ff_prime_bound_wrong_ring(zz):
    x = UPoly.gen(zz)
    prof = _profile_of(x ** 2 - 13)
    with pytest.raises(WrongRing):
        ff_prime_bound(prof, FieldProfile.rationals())


def test_nf_bound_examples(zz):
    x = UPoly.gen(zz)
    prof = _profile_of((x ** 2 - 13) * (x ** 2 - 17) * (x ** 2 - 221))
    assert nf_bound(prof) == (2 ** 24 * 13 ** 8 * 17 ** 8, 12577)

    prof = _profile_of((2 * x + 1) * (3 * x + 1))
    assert nf_bound(prof) == (1, 12577)

    prof = _profile_of(x ** 2 - 13)
    assert nf_bound(prof) == (52, 12577)

    with pytest.raises(WrongRing):
        ff_prime_bound(prof, FieldProfile.rationals())


def test_shortcut_corollary1(zz, r3):
    x = UPoly.gen(zz)
    v = shortcut_corollary1(factor_irreducible(x ** 2 - 2))
    assert v is not None and v.witness.reason == "IrreducibleDegGe2"

    v = shortcut_corollary1(factor_irreducible((x ** 2 - 2) * (x ** 2 - 3)))
    assert v is not None and v.witness.reason == "NoRootDegLe4"

    assert shortcut_corollary1(factor_irreducible(x * (x - 1))) is None
    assert shortcut_corollary1(
        factor_irreducible((x ** 2 - 13) * (x ** 2 - 17) * (x ** 2 - 221))) is None

    # a square of an irreducible quadratic is still obstructed (radical view)
    v = shortcut_corollary1(factor_irreducible((x ** 2 - 2) ** 2))
    assert v is not None and v.witness.reason == "IrreducibleDegGe2"


def test_decide_corollary1_ff_witness(r3):
    T, xt = r3.T, UPoly.gen(r3)
    v = decide(xt ** 2 - T)
    assert v.status == "not_intersective"
    assert v.witness.reason == "IrreducibleDegGe2"
    assert v.witness.witness_prime.value == T + 1  # 2 is not a square in F_3
    bound = ff_prime_bound(v.profile, FieldProfile.function_field(3))
    assert v.witness.witness_prime.degree() <= bound


def test_analyze_multiquadratic_ff_negative(r3):
    T, xt = r3.T, UPoly.gen(r3)
    f = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    v = analyze_multiquadratic(factor_irreducible(f))
    assert v is not None and v.status == "not_intersective"
    assert isinstance(v.witness, ModulusWithoutRoot)
    # T = 2 mod (T+1) is not a square in F_3, so the (T+1)^5 component fails
    assert str(v.witness.modulus) == "(T + 1)^5"


def test_analyze_multiquadratic_ff_positive(r5):
    T5, x5 = r5.T, UPoly.gen(r5)
    f = (x5 ** 2 - T5) * (x5 ** 2 - (T5 + 4)) * (x5 ** 2 - T5 * (T5 + 4))
    v = analyze_multiquadratic(factor_irreducible(f))
    assert v is not None and v.status == "intersective"
    details = dict(v.certificate.details)
    assert details["theta1_square_mod_theta2^5"] is True
    assert details["theta2_square_mod_theta1^5"] is True


def test_analyze_multiquadratic_zz(zz):
    x = UPoly.gen(zz)
    f = (x ** 2 - 13) * (x ** 2 - 17) * (x ** 2 - 221)
    v = analyze_multiquadratic(factor_irreducible(f))
    assert v is not None and v.status == "intersective"
    details = dict(v.certificate.details)
    assert details["theta1_square_mod_theta2^5"] is True
    assert details["theta2_square_mod_theta1^5"] is True
    assert details["root_mod_2^13"] is True

    # both square conditions hold for (3, 13) yet f is not intersective:
    # the 2-power component of Delta has no root
    g = (x ** 2 - 3) * (x ** 2 - 13) * (x ** 2 - 39)
    v = analyze_multiquadratic(factor_irreducible(g))
    assert v is not None and v.status == "not_intersective"
    assert str(v.witness.modulus) == "2^13"


def test_analyze_multiquadratic_inactive_cases(zz):
    x = UPoly.gen(zz)
    assert analyze_multiquadratic(factor_irreducible(x ** 2 - 2)) is None
    f = (x ** 2 - 13) * (x ** 2 - 17) * (x ** 2 - 19)  # 19 != 13*17
    assert analyze_multiquadratic(factor_irreducible(f)) is None
    f = (x ** 2 - 4) * (x ** 2 - 13)  # wrong shape entirely
    assert analyze_multiquadratic(factor_irreducible(f)) is None


def test_decide_trivial_root(zz):
    x = UPoly.gen(zz)
    v = decide(x * (x - 1))
    assert v.status == "intersective"
    assert isinstance(v.certificate, TrivialRootInOK) and v.certificate.root == 0


def test_decide_ff_positive_family(r5):
    T5, x5 = r5.T, UPoly.gen(r5)
    f = (x5 ** 2 - T5) * (x5 ** 2 - (T5 + 4)) * (x5 ** 2 - T5 * (T5 + 4))
    v = decide(f)
    assert v.status == "intersective"
    cert = v.certificate
    assert isinstance(cert, ExhaustiveFunctionField)
    assert cert.bound == 5
    assert cert.primes_per_degree == ((1, 5), (2, 10), (3, 40), (4, 150), (5, 624))
    assert cert.total_primes == 829


def test_decide_zz_negative_family(zz):
    x = UPoly.gen(zz)
    f = (x ** 2 - 3) * (x ** 2 - 13) * (x ** 2 - 39)
    v = decide(f)
    assert v.status == "not_intersective"
    assert isinstance(v.witness, ModulusWithoutRoot)
    assert str(v.witness.modulus) == "2^13"
    report = oracle_has_root_mod(v.polynomial, v.witness.modulus.value())
    assert not report.has_root


def test_decide_all_linear_factors(zz):
    x = UPoly.gen(zz)
    v = decide((2 * x + 1) * (3 * x + 1))
    assert v.status == "intersective"
    assert isinstance(v.certificate, FamilyCriterion)
    assert v.certificate.family == "linear_splitting_field"
    # classic: no root in Z, yet solvable modulo everything
    assert oracle_scan(v.polynomial, 60) is None

    v = decide(2 * x + 1)
    assert v.status == "not_intersective"
    assert str(v.witness.modulus) == "2^3"
    assert not oracle_has_root_mod(v.polynomial, 8).has_root


def test_decide_inconclusive_is_honest(zz):
    x = UPoly.gen(zz)
    # intersective-looking input outside the recognized families: quadratics
    # over primes 13, 17, 29 all congruent to 1 mod 8 would still leave the
    # 2-adic component fine, but no family analysis applies to 4 factors
    f = (x ** 2 - 17) * (x ** 2 - 41) * (x ** 2 - 697) * (x ** 2 - 13 * 41 * 17)
    v = decide(f, config=DecideConfig(max_prime=300))
    assert v.status in ("inconclusive", "not_intersective")
    if v.status == "inconclusive":
        assert v.scanned_bound == 300
        base, exp = v.nf_bound
        assert exp == 12577 and base > 1


def test_decide_zero_polynomial(zz):
    with pytest.raises(ZeroPolynomial):
        decide(UPoly(zz, []))


def test_decide_inseparable(r3):
    T, xt = r3.T, UPoly.gen(r3)
    with pytest.raises(InseparableFactor):
        decide(xt ** 3 - T)


def test_decide_unit_constant(zz):
    v = decide(UPoly(zz, [5]))
    assert v.status == "not_intersective"
    assert isinstance(v.witness, ModulusWithoutRoot)
    assert not oracle_has_root_mod(v.polynomial, v.witness.modulus.value()).has_root


def test_decide_content_is_stripped(zz):
    x = UPoly.gen(zz)
    assert decide(7 * x * (x - 1)).status == "intersective"
    v = decide(6 * (x ** 2 - 2))
    assert v.status == "not_intersective"


def test_decide_repeated_factor_witness_is_verifiable(zz):
    x = UPoly.gen(zz)
    f = (x ** 2 - 3) ** 2 * (x ** 2 - 13) * (x ** 2 - 39)
    v = decide(f)
    assert v.status == "not_intersective"
    assert isinstance(v.witness, ModulusWithoutRoot)
    # the witness is scaled so it refutes the reported (non-radical) polynomial
    assert not oracle_has_root_mod(v.polynomial, v.witness.modulus.value()).has_root


def test_decide_deterministic(zz, r3):
    x = UPoly.gen(zz)
    f = (x ** 2 - 3) * (x ** 2 - 13) * (x ** 2 - 39)
    assert decide(f) == decide(f)
    T, xt = r3.T, UPoly.gen(r3)
    g = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    assert decide(g) == decide(g)


def test_decide_pre_factored_route(r3):
    T, xt = r3.T, UPoly.gen(r3)
    f = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    claimed = [(xt ** 2 - T, 1), (xt ** 2 - (T + 1), 1), (xt ** 2 - T * (T + 1), 1)]
    v = decide(f, config=DecideConfig(pre_factored=claimed))
    assert v == decide(f)


def test_shortcuts_agree_with_generic_pipeline_ff(r3, r5):
    T, xt = r3.T, UPoly.gen(r3)
    cases = [
        xt ** 2 - T,
        (xt ** 2 - T) * (xt ** 2 - (T + 1)),
        (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1)),
    ]
    T5, x5 = r5.T, UPoly.gen(r5)
    cases5 = [
        (x5 ** 2 - T5) * (x5 ** 2 - (T5 + 4)) * (x5 ** 2 - T5 * (T5 + 4)),
        x5 ** 2 - T5,
    ]
    for f in cases:
        fast = decide(f)
        slow = decide(f, config=DecideConfig(use_shortcuts=False))
        assert fast.status == slow.status, str(f)
    for f in cases5:
        fast = decide(f)
        slow = decide(f, config=DecideConfig(use_shortcuts=False))
        assert fast.status == slow.status, str(f)
    # and the analyzer itself agrees where it fires
    mq = analyze_multiquadratic(factor_irreducible(cases[2]))
    assert mq.status == decide(cases[2]).status


def test_decide_soundness_on_random_ff_corpus(r3):
    rng = seeded("decision-soundness")
    checked_neg = checked_pos = 0
    for _ in range(40):
        f = random_poly(rng, r3, max_deg=4)
        if f.degree() < 1:
            continue
        try:
            v = decide(f)
        except InseparableFactor:
            continue
        if v.status == "not_intersective":
            if isinstance(v.witness, ModulusWithoutRoot):
                m = v.witness.modulus.value()
                if r3.residue_count(m) <= 10 ** 5:
                    assert not oracle_has_root_mod(f if f.is_primitive() else v.polynomial,
                                                   m, cap=10 ** 5).has_root
                    checked_neg += 1
            elif isinstance(v.witness, GaloisObstruction) and v.witness.witness_prime:
                m = v.witness.witness_prime.value
                if r3.residue_count(m) <= 10 ** 5:
                    assert not oracle_has_root_mod(v.polynomial, m, cap=10 ** 5).has_root
                    checked_neg += 1
        else:
            assert v.status == "intersective"
            assert oracle_scan(v.polynomial, 3) is None
            checked_pos += 1
    assert checked_neg >= 5
    assert checked_pos >= 2


def test_density_diagnostic_examples(r3):
    T, xt = r3.T, UPoly.gen(r3)
    rows = prime_density_diagnostic(xt ** 2 - T, bound=4)
    assert [r.degree for r in rows] == [1, 2, 3, 4]
    # Chebotarev predicts |C cap U| / |G| = 1/2 asymptotically
    for row in rows:
        assert 0.3 <= row.fraction <= 0.7, (row.degree, row.fraction)
    # cross-check counts against direct enumeration
    from intersective import has_root_mod_prime
    for row in rows:
        total = hits = 0
        for p in r3.primes(row.degree):
            if p.degree() != row.degree:
                continue
            total += 1
            residues = [r for r in r3.residues(p.value)]
            f = xt ** 2 - T
            hits += any(r3.is_zero(f.eval_mod(r, p.value)) for r in residues)
        assert (total, hits) == (row.primes, row.with_root)

    linear = prime_density_diagnostic(xt - T, bound=4)
    assert all(r.fraction == 1.0 for r in linear)

    family = (xt ** 2 - T) * (xt ** 2 - (T + 1)) * (xt ** 2 - T * (T + 1))
    rows = prime_density_diagnostic(family, bound=4)
    assert all(r.fraction == 1.0 for r in rows)


def test_density_diagnostic_integers(zz):
    x = UPoly.gen(zz)
    rows = prime_density_diagnostic(x ** 2 - 13, bound=100)
    assert len(rows) == 1
    assert rows[0].primes == 25  # primes up to 100
    assert 0.3 <= rows[0].fraction <= 0.8
