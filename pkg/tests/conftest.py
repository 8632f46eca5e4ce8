import random

import pytest

from intersective import FqPoly, UPoly, INTEGERS, function_field_ring


@pytest.fixture(scope="session")
def zz():
    return INTEGERS


@pytest.fixture(scope="session")
def r3():
    return function_field_ring(3)


@pytest.fixture(scope="session")
def r5():
    return function_field_ring(5)


def random_int_poly(rng, ring, max_deg=4, height=20):
    deg = rng.randrange(0, max_deg + 1)
    coeffs = [rng.randrange(-height, height + 1) for _ in range(deg)]
    lead = 0
    while lead == 0:
        lead = rng.randrange(-height, height + 1)
    return UPoly(ring, coeffs + [lead])


def random_fq_elt(rng, ring, max_tdeg=1):
    F = ring.field
    deg = rng.randrange(0, max_tdeg + 1)
    return FqPoly(F, [rng.randrange(F.order) for _ in range(deg + 1)])


def random_ff_poly(rng, ring, max_xdeg=4, max_tdeg=1):
    deg = rng.randrange(0, max_xdeg + 1)
    coeffs = [random_fq_elt(rng, ring, max_tdeg) for _ in range(deg)]
    lead = ring.zero
    while ring.is_zero(lead):
        lead = random_fq_elt(rng, ring, max_tdeg)
    return UPoly(ring, coeffs + [lead])


def random_poly(rng, ring, max_deg=4, size=20):
    if ring.is_function_field:
        return random_ff_poly(rng, ring, max_xdeg=max_deg, max_tdeg=1)
    return random_int_poly(rng, ring, max_deg=max_deg, height=size)


def seeded(name):
    return random.Random(f"intersective-tests:{name}")
