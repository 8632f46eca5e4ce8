"""Command-line front end.

    intersective --ring z  --poly "(x^2 - 13)*(x^2 - 17)*(x^2 - 221)"
    intersective --ring fq --q 5 --poly "(x^2-T)*(x^2-(T+4))*(x^2-T*(T+4))" --json

Exit codes: 0 intersective, 1 not intersective, 2 inconclusive,
64 usage / parse / invalid input, 65 unsupported input (inseparable factor).
"""

import argparse
import json
import sys
import time

from .errors import (
    InseparableFactor,
    IntersectiveError,
    PolySyntaxError,
    ProductMismatch,
    ReducibleClaimedFactor,
)
from .decision import (
    DecideConfig,
    ExhaustiveFunctionField,
    FamilyCriterion,
    GaloisObstruction,
    ModulusWithoutRoot,
    TrivialRootInOK,
    INTERSECTIVE,
    NOT_INTERSECTIVE,
    INCONCLUSIVE,
    decide,
    ff_prime_bound,
    prime_density_diagnostic,
)
from .fields import factor_prime_power
from .fqpoly import FieldProfile, INTEGERS, function_field_ring
from .oracle import oracle_has_root_mod, oracle_scan
from .parsing import parse_poly

EXIT_BY_STATUS = {INTERSECTIVE: 0, NOT_INTERSECTIVE: 1, INCONCLUSIVE: 2}
EXIT_USAGE = 64
EXIT_UNSUPPORTED = 65


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="intersective",
        description="Decide whether a polynomial over Z or F_q[T] has a "
                    "root modulo every modulus.")
    ap.add_argument("--ring", choices=("z", "fq"), required=True)
    ap.add_argument("--q", type=int, default=None,
                    help="field size (prime power), required with --ring fq")
    ap.add_argument("--poly", required=True, help="polynomial in x (and T)")
    ap.add_argument("--factors", default=None,
                    help="semicolon-separated pre-factored form; repeat a "
                         "factor to indicate multiplicity")
    ap.add_argument("--max-prime", type=int, default=10_000,
                    help="integer prime scan bound (default 10000)")
    ap.add_argument("--oracle", type=int, default=None, metavar="BOUND",
                    help="cross-check the verdict by brute force up to BOUND")
    ap.add_argument("--diagnostics", type=int, default=None, metavar="DEG",
                    help="print per-degree root statistics up to DEG")
    ap.add_argument("--json", action="store_true")
    return ap


def _serialize_modulus(modulus):
    return [[str(pp.prime.value), pp.exponent] for pp in modulus.parts]


def _serialize_certificate(cert):
    if cert is None:
        return None
    if isinstance(cert, TrivialRootInOK):
        return {"kind": cert.kind, "root": str(cert.root)}
    if isinstance(cert, ExhaustiveFunctionField):
        return {
            "kind": cert.kind,
            "bound": cert.bound,
            "primes_per_degree": [list(it) for it in cert.primes_per_degree],
            "total_primes": cert.total_primes,
            "delta_roots": [[str(pp), str(root)] for pp, root in cert.delta_roots],
        }
    if isinstance(cert, FamilyCriterion):
        return {
            "kind": cert.kind,
            "family": cert.family,
            "details": {name: (value if isinstance(value, bool) else str(value))
                        for name, value in cert.details},
            "delta_roots": [[str(pp), str(root)] for pp, root in cert.delta_roots],
        }
    raise TypeError(f"unknown certificate {cert!r}")


def _serialize_witness(witness):
    if witness is None:
        return None
    if isinstance(witness, ModulusWithoutRoot):
        return {
            "kind": witness.kind,
            "modulus": _serialize_modulus(witness.modulus),
            "modulus_str": str(witness.modulus),
        }
    if isinstance(witness, GaloisObstruction):
        return {
            "kind": witness.kind,
            "reason": witness.reason,
            "witness_prime": (None if witness.witness_prime is None
                              else str(witness.witness_prime.value)),
        }
    raise TypeError(f"unknown witness {witness!r}")


def _serialize_profile(verdict, field):
    profile = verdict.profile
    if profile is None:
        return None
    if field.is_function_field:
        bound = {"kind": "function_field_degree",
                 "max_degree": ff_prime_bound(profile, field)}
    else:
        base, exponent = profile.d_norm, 12577
        bound = {"kind": "number_field_norm", "base": str(base),
                 "exponent": exponent}
    return {
        "delta": _serialize_modulus(profile.delta),
        "delta_prime": profile.delta_prime,
        "D_prime": profile.d_prime,
        "bound": bound,
    }


def _oracle_section(verdict, bound):
    prim = verdict.polynomial
    section = {"bound": bound}
    if verdict.status == NOT_INTERSECTIVE:
        witness = verdict.witness
        modulus_value = None
        if isinstance(witness, ModulusWithoutRoot):
            modulus_value = witness.modulus.value()
        elif isinstance(witness, GaloisObstruction) and witness.witness_prime:
            modulus_value = witness.witness_prime.value
        if modulus_value is None:
            section["checked"] = "no concrete witness to verify"
            return section
        report = oracle_has_root_mod(prim, modulus_value)
        section["witness"] = str(modulus_value)
        section["witness_root_free"] = not report.has_root
        section["residues_tried"] = report.residues_tried
        return section
    counterexample = oracle_scan(prim, bound)
    section["counterexample"] = None if counterexample is None else str(counterexample)
    return section


def _human_report(verdict, field, oracle_info, diagnostics, elapsed, out):
    print(f"polynomial: {verdict.polynomial}", file=out)
    print(f"verdict: {verdict.status}", file=out)
    cert = verdict.certificate
    if isinstance(cert, TrivialRootInOK):
        print(f"certificate: root {cert.root} in the coefficient ring", file=out)
    elif isinstance(cert, ExhaustiveFunctionField):
        per_deg = ", ".join(f"deg {d}: {n}" for d, n in cert.primes_per_degree)
        print(f"certificate: all {cert.total_primes} primes of degree <= "
              f"{cert.bound} have roots ({per_deg})", file=out)
    elif isinstance(cert, FamilyCriterion):
        details = ", ".join(f"{k}={v}" for k, v in cert.details)
        print(f"certificate: {cert.family} ({details})", file=out)
    witness = verdict.witness
    if isinstance(witness, ModulusWithoutRoot):
        print(f"witness: no root modulo {witness.modulus}", file=out)
    elif isinstance(witness, GaloisObstruction):
        extra = (f"; witness prime {witness.witness_prime.value}"
                 if witness.witness_prime else "")
        print(f"witness: Galois obstruction {witness.reason}{extra}", file=out)
    if verdict.status == INCONCLUSIVE:
        base, exp = verdict.nf_bound
        print(f"scanned primes up to {verdict.scanned_bound}; the criterion "
              f"bound N(D)^{exp} with N(D) = {base} is beyond enumeration",
              file=out)
    if verdict.profile is not None:
        prof = verdict.profile
        line = f"delta: {prof.delta}  D': {prof.d_prime}"
        if prof.delta_prime is not None:
            line += f"  delta': {prof.delta_prime}"
            line += f"  prime-degree bound: {ff_prime_bound(prof, field)}"
        print(line, file=out)
    if oracle_info is not None:
        if "counterexample" in oracle_info:
            found = oracle_info["counterexample"]
            msg = ("no counterexample modulus" if found is None
                   else f"COUNTEREXAMPLE modulus {found}")
            print(f"oracle (bound {oracle_info['bound']}): {msg}", file=out)
        elif "witness_root_free" in oracle_info:
            status = "confirmed root-free" if oracle_info["witness_root_free"] \
                else "REFUTED (has a root!)"
            print(f"oracle: witness {oracle_info['witness']} {status} "
                  f"({oracle_info['residues_tried']} residues)", file=out)
        else:
            print(f"oracle: {oracle_info['checked']}", file=out)
    if diagnostics is not None:
        print("degree  primes  with_root  fraction", file=out)
        for row in diagnostics:
            print(f"{row.degree!s:>6}  {row.primes:6d}  {row.with_root:9d}"
                  f"  {row.fraction:8.4f}", file=out)
    print(f"timing: {elapsed:.3f}s", file=out)


def run_cli(argv, out=None, err=None):
    """Run the CLI; returns the exit status (see module docstring)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT_USAGE

    try:
        if args.ring == "fq":
            if args.q is None:
                print("--ring fq requires --q", file=err)
                return EXIT_USAGE
            factor_prime_power(args.q)
            ring = function_field_ring(args.q)
            field = FieldProfile.function_field(args.q)
        else:
            if args.q is not None:
                print("--q is only meaningful with --ring fq", file=err)
                return EXIT_USAGE
            ring = INTEGERS
            field = FieldProfile.rationals()
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE

    started = time.perf_counter()
    try:
        f = parse_poly(args.poly, ring)
        pre_factored = None
        if args.factors is not None:
            pre_factored = [(parse_poly(text, ring), 1)
                            for text in args.factors.split(";") if text.strip()]
        config = DecideConfig(max_prime=args.max_prime, pre_factored=pre_factored)
        verdict = decide(f, field, config)
        oracle_info = (None if args.oracle is None
                       else _oracle_section(verdict, args.oracle))
        diagnostics = (None if args.diagnostics is None
                       else prime_density_diagnostic(f, field, args.diagnostics))
    except PolySyntaxError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except InseparableFactor as exc:
        print(f"unsupported input: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except (ProductMismatch, ReducibleClaimedFactor) as exc:
        print(f"invalid factored input: {exc}", file=err)
        return EXIT_USAGE
    except IntersectiveError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    elapsed = time.perf_counter() - started

    if args.json:
        payload = {
            "verdict": verdict.status,
            "certificate": _serialize_certificate(verdict.certificate),
            "witness": _serialize_witness(verdict.witness),
            "scanned_bound": verdict.scanned_bound,
            "profile": _serialize_profile(verdict, field),
            "oracle": oracle_info,
            "timing": round(elapsed, 6),
        }
        if diagnostics is not None:
            payload["diagnostics"] = [
                {"degree": row.degree, "primes": row.primes,
                 "with_root": row.with_root, "fraction": row.fraction}
                for row in diagnostics]
        print(json.dumps(payload, indent=2), file=out)
    else:
        _human_report(verdict, field, oracle_info, diagnostics, elapsed, out)
    return EXIT_BY_STATUS[verdict.status]


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
