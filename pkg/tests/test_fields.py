import pytest

from intersective import DivisionByZero, SpecMismatch, finite_field
from intersective.fields import (
    ExtensionField,
    PrimeField,
    irreducible_polys,
    poly_factor,
    poly_gcd,
    poly_is_irreducible,
    poly_mul,
    poly_roots,
)

from conftest import seeded


def test_inverse_in_f3():
    F3 = finite_field(3)
    two = F3(2)
    assert two.inverse() == two  # 2*2 = 4 = 1


def test_lagrange_small_fields_exhaustive():
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81):
        F = finite_field(q)
        for a in F.elements():
            if a:
                assert a ** (q - 1) == F.one


def test_f9_inverse_against_independent_oracle():
    # independent multiplication rule for F_3[u]/(u^2+1): u^2 = -1
    F9 = finite_field(9)
    assert F9.modulus == (1, 0, 1)

    def mul9(a, b):
        a0, a1 = a
        b0, b1 = b
        return ((a0 * b0 - a1 * b1) % 3, (a0 * b1 + a1 * b0) % 3)

    def inverse_oracle(a):
        hits = [b for b in F9.raw_elements() if mul9(a, b) == (1, 0)]
        assert len(hits) == 1
        return hits[0]

    u = F9((0, 1))
    assert u.inverse().raw == (0, 2)  # 2u, since u*2u = 2u^2 = -2 = 1
    for a in F9.elements():
        if a:
            assert a.inverse().raw == inverse_oracle(a.raw)
            assert (a * a.inverse()) == F9.one


def test_inverse_of_zero_raises():
    F9 = finite_field(9)
    with pytest.raises(DivisionByZero):
        F9.zero.inverse()
    with pytest.raises(DivisionByZero):
        finite_field(7)(0).inverse()


def test_mixed_field_arithmetic_rejected():
    a = finite_field(3)(1)
    b = finite_field(5)(1)
    with pytest.raises(SpecMismatch):
        a + b


def test_field_axioms_random():
    rng = seeded("field-axioms")
    for q in (5, 9, 27):
        F = finite_field(q)
        elems = list(F.elements())
        for _ in range(200):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert a + (b + c) == (a + b) + c
            if b:
                assert (a / b) * b == a


def test_pow_square_and_multiply_matches_iteration():
    F = finite_field(27)
    g = F.element(F.rfrom_code(5))
    acc = F.one
    for e in range(1, 30):
        acc = acc * g
        assert g ** e == acc


def test_coords_length_and_range():
    F9 = finite_field(9)
    for a in F9.elements():
        assert len(a.coords) == 2
        assert all(0 <= c < 3 for c in a.coords)


def test_irreducible_polys_degree_one_and_canonical_modulus():
    F3 = finite_field(3)
    linears = [list(f) for f in irreducible_polys(F3, 1)]
    assert linears == [[0, 1], [1, 1], [2, 1]]
    # canonical modulus choice for GF(9) is the code-least irreducible u^2+1
    F9 = finite_field(9)
    assert isinstance(F9, ExtensionField)
    assert F9.base.order == 3 and F9.modulus == (1, 0, 1)


def test_poly_roots_matches_enumeration_over_extension():
    rng = seeded("roots-ext")
    F = finite_field(9)
    for _ in range(50):
        coeffs = [F.rfrom_code(rng.randrange(9)) for _ in range(rng.randrange(1, 5))]
        coeffs.append(F.rfrom_code(rng.randrange(1, 9)))
        brute = [a for a in F.raw_elements()
                 if _eval(F, coeffs, a) == F.zero_raw]
        assert sorted(poly_roots(F, coeffs), key=F.rto_int) == brute


def _eval(F, cs, x):
    acc = F.zero_raw
    for c in reversed(cs):
        acc = F.radd(F.rmul(acc, x), c)
    return acc


def test_poly_factor_reexpands():
    rng = seeded("cz-factor")
    for q in (2, 3, 5, 9):
        F = finite_field(q)
        for _ in range(60):
            deg = rng.randrange(1, 7)
            cs = [F.rfrom_code(rng.randrange(q)) for _ in range(deg)]
            cs.append(F.rfrom_code(rng.randrange(1, q)))
            lc, factors = poly_factor(F, list(cs))
            prod = [lc]
            for g, e in factors:
                for _ in range(e):
                    prod = poly_mul(F, prod, g)
                assert poly_is_irreducible(F, list(g))
            assert prod == list(_trim(F, cs))


def _trim(F, cs):
    cs = list(cs)
    while cs and cs[-1] == F.zero_raw:
        cs.pop()
    return cs


def test_gcd_of_coprime_products():
    F = finite_field(5)
    a = poly_mul(F, [1, 1], [2, 1])
    b = poly_mul(F, [3, 1], [4, 1])
    assert poly_gcd(F, a, b) == [1]
    shared = [1, 2, 1]  # (x+1)^2, monic
    assert poly_gcd(F, poly_mul(F, a, shared), poly_mul(F, b, shared)) == shared
