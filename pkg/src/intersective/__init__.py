"""Intersective polynomial decision procedure over Z and F_q[T].

A polynomial is intersective when it has a root modulo every finite-index
subgroup (equivalently, every ideal) of the coefficient ring.  The
``decide`` pipeline settles this exactly over F_q(T) and for recognized
integer families, always returning a machine-checkable certificate or
witness; a brute-force oracle provides independent ground truth.
"""

from .errors import (
    BothZero,
    CapExceeded,
    ConstantInput,
    DivisionByZero,
    EmptyInput,
    InseparableFactor,
    IntersectiveError,
    NotPrime,
    NotPrimitive,
    PolySyntaxError,
    ProductMismatch,
    ReducibleClaimedFactor,
    RingMismatch,
    SpecMismatch,
    UnknownSymbol,
    WrongRing,
    ZeroInput,
    ZeroPolynomial,
)
from .fields import FFElement, ExtensionField, FiniteField, PrimeField, finite_field
from .fqpoly import (
    FieldProfile,
    FqPoly,
    INTEGERS,
    PrimeElement,
    ResidueField,
    fq_enumerate_irreducibles,
    fq_gcd,
    fq_irreducible,
    function_field_ring,
    residue_field,
    ring_factorize,
)
from .upoly import (
    UPoly,
    normalize_primitive,
    reduce_mod_prime,
    resultant,
    resultant_sylvester,
    sylvester_matrix,
    upoly_gcd,
)
from .factor import (
    FactoredPolynomial,
    IrreducibleFactor,
    factor_irreducible,
    squarefree_split,
    verify_factored_input,
)
from .localroots import (
    Modulus,
    PrimePower,
    has_root_mod_modulus,
    has_root_mod_prime,
    has_root_mod_prime_power,
    roots_mod_prime,
)
from .decision import (
    DecideConfig,
    DeltaProfile,
    ExhaustiveFunctionField,
    FamilyCriterion,
    GaloisObstruction,
    ModulusWithoutRoot,
    TrivialRootInOK,
    Verdict,
    analyze_multiquadratic,
    build_delta_profile,
    decide,
    ff_prime_bound,
    nf_bound,
    prime_density_diagnostic,
    shortcut_corollary1,
)
from .oracle import OracleReport, oracle_has_root_mod, oracle_scan
from .parsing import parse_poly
from .cli import run_cli

__version__ = "0.1.0"
