"""Brute-force ground truth: exhaustive root search modulo arbitrary moduli.

Deliberately naive; used to verify witnesses and to cross-check the
decision pipeline.  Enumeration order is canonical (numeric for integers,
degree-then-code for T-polynomials) so reported witnesses are reproducible.
"""

from dataclasses import dataclass

from .errors import CapExceeded, NotPrimitive, ZeroInput
from .fqpoly import monic_polys_of_degree

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class OracleReport:
    modulus: object
    residues_tried: int
    root: object
    work: int

    @property
    def has_root(self):
        return self.root is not None


def oracle_has_root_mod(f, m, cap=DEFAULT_CAP):
    """Try every residue class mod m; first root wins (canonical order)."""
    ring = f.ring
    m = ring.coerce(m)
    if ring.is_zero(m):
        raise ZeroInput("modulus must be nonzero")
    if ring.is_unit(m):
        raise ZeroInput("modulus must not be a unit")
    count = ring.residue_count(m)
    if count > cap:
        raise CapExceeded(f"{count} residues exceed the cap {cap}")
    work = 0
    for r in ring.residues(m):
        work += 1
        if ring.is_zero(f.eval_mod(r, m)):
            return OracleReport(modulus=m, residues_tried=work, root=r, work=work)
    return OracleReport(modulus=m, residues_tried=work, root=None, work=work)


def oracle_scan(f, size_bound, cap=DEFAULT_CAP):
    """First modulus without a root, or None.

    Integers: every m with 2 <= m <= size_bound.  Function field: every
    monic m with 1 <= deg m <= size_bound, degree-then-code order.
    """
    if not f.is_primitive():
        raise NotPrimitive("oracle_scan needs a primitive polynomial")
    ring = f.ring
    if ring.is_function_field:
        moduli = (m for d in range(1, size_bound + 1)
                  for m in monic_polys_of_degree(ring.field, d))
    else:
        moduli = range(2, size_bound + 1)
    for m in moduli:
        report = oracle_has_root_mod(f, m, cap=cap)
        if not report.has_root:
            return m
    return None
