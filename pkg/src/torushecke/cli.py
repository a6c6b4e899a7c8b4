"""Command-line verification surface and report assembly.

Verbs: `field info`, `invariants`, `verify`, `scan-primes`, `spanning-set`.
Native fields come from `--d <squarefree>`; external descriptors from
`--descriptor <path>`.  Reports are byte-deterministic: configuration order,
dict key order, and scan order are all pinned.

Exit codes: 0 all checks pass, 1 a check failed or a computation rejected
its input, 2 a scan budget or enumeration cap was exhausted before the
answer was determined.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import congruence
from .classnumber import degree_one_primes_over, real_quadratic_field
from .eigen import eigensystem_report
from .errors import (
    BudgetShortfall,
    CapExceeded,
    Inconclusive,
    TorusHeckeError,
    ValidationError,
)
from .field import FieldDescriptor, load_descriptor, poly_discriminant
from .galois import is_prime
from .hecke import compute_tp, psi_report, scan_t1, spanning_set
from .ideals import IdealHNF, ideal_product, unit_ideal
from .primes import balanced_coeffs, factor_prime, prime_to_ideal
from .rayclass import ray_class_group
from .units import InvariantsRecord, compute_rp, e_units, unit_image_in_modulus

DEFAULT_BUDGET = 50


# ---------------------------------------------------------------- moduli


def prime_ideal_blocks(F: FieldDescriptor, bound):
    """(ideal, norm) for every prime of Z[theta] with norm <= bound."""
    disc = abs(poly_discriminant(F.min_poly))
    out = []
    ell = 2
    while ell <= bound:
        if is_prime(ell):
            if disc % ell == 0:
                out.extend((a, ell) for a in degree_one_primes_over(F, ell))
            else:
                for v in factor_prime(ell, F):
                    if v.norm <= bound:
                        out.append((prime_to_ideal(v, F), v.norm))
        ell += 1
    return out


def moduli_upto(F: FieldDescriptor, bound):
    """All integral ideals of norm <= bound, by prime factorization.

    Unique ideal factorization makes every product distinct, so the list is
    complete and duplicate-free; sorted by (norm, HNF entries).
    """
    items = [(unit_ideal(F), 1)]
    for q, nq in prime_ideal_blocks(F, bound):
        grown = list(items)
        for a, na in items:
            b, nb = a, na
            while nb * nq <= bound:
                b = ideal_product(b, q, F)
                nb *= nq
                grown.append((b, nb))
        items = grown
    items.sort(key=lambda t: (t[1], t[0].hnf))
    return items


def moduli_of_norm(F: FieldDescriptor, norm):
    return [a for a, n in moduli_upto(F, norm) if n == norm]


# ---------------------------------------------------------------- reports


def assemble_report(F: FieldDescriptor, modulus: IdealHNF, p: int, budget: int = DEFAULT_BUDGET):
    """Full per-configuration report; raises BudgetShortfall on scan failure."""
    psi = psi_report(F, modulus, p, budget)
    eig = eigensystem_report(F, modulus, p, budget)
    report = {
        "field": F.label,
        "modulus_norm": modulus.norm,
        "p": p,
        "r": psi.r,
        "r_p": psi.r_p,
        "delta_p": psi.delta_p,
        "t_p": psi.t_p,
        "h_plus": psi.h_plus,
        "index": psi.index,
        "hypothesis_A": psi.hypothesis,
        "dim_H0": psi.dim_H0,
        "dim_H1": psi.dim_H1,
        "dim_psi_domain": psi.dim_domain,
        "dim_psi_image": psi.dim_image,
        "psi_isomorphism": psi.is_isomorphism,
        "certificate_primes": [phi.prime.ell for phi in psi.scan.certificate],
        "eigensystems": {
            "count": eig.count,
            "matched_both_degrees": eig.matched_both_degrees,
        },
    }
    return psi, eig, report


def run_invariants(F: FieldDescriptor, modulus: IdealHNF, p: int, budget: int = DEFAULT_BUDGET):
    """InvariantsRecord plus report dict; asserts the rank identity."""
    psi, _, report = assemble_report(F, modulus, p, budget)
    record = InvariantsRecord(
        p=p,
        r=psi.r,
        r_p=psi.r_p,
        delta_p=psi.delta_p,
        index=psi.index,
        t_p=psi.t_p,
        h_plus=psi.h_plus,
    )
    if record.t_p != record.expected_tp():
        raise ArithmeticError(
            f"rank identity failed: t_p = {record.t_p}, expected {record.expected_tp()}"
        )
    return record, report


def verify_config(F: FieldDescriptor, modulus: IdealHNF, p: int, budget: int):
    """Named pass/fail checks for one configuration."""
    _, _, report = assemble_report(F, modulus, p, budget)
    checks = [
        ("rank-identity", report["t_p"] == report["r_p"] - report["delta_p"]),
        (
            "pairing-dimensions",
            report["dim_psi_domain"] == report["h_plus"] * report["t_p"]
            and report["dim_psi_image"] == report["h_plus"] * report["t_p"],
        ),
    ]
    if report["hypothesis_A"]:
        checks.append(("iso-under-hypothesis", report["psi_isomorphism"]))
        checks.append(
            ("eigensystem-matching", report["eigensystems"]["matched_both_degrees"])
        )
    else:
        allowed = report["delta_p"] == report["r_p"] - report["r"]
        checks.append(
            ("iso-pattern-without-hypothesis", (not report["psi_isomorphism"]) or allowed)
        )
    return checks, report


@dataclass(frozen=True)
class SweepConfig:
    """One theorem sweep: fields x coprime moduli x primes, fixed budget."""

    fields: tuple
    modulus_norm_bound: int
    primes: tuple
    budget: int = DEFAULT_BUDGET
    fmt: str = "json"


def run_verify(sweep: SweepConfig):
    """(exit code, aggregated report) over every sweep configuration."""
    results = []
    failures = []
    shortfall = False
    for F in sweep.fields:
        pairs = moduli_upto(F, sweep.modulus_norm_bound)
        for p in sweep.primes:
            for modulus, norm in pairs:
                if norm % p == 0:
                    continue
                try:
                    checks, report = verify_config(F, modulus, p, sweep.budget)
                except (BudgetShortfall, CapExceeded) as e:
                    shortfall = True
                    results.append(
                        {
                            "field": F.label,
                            "modulus_norm": norm,
                            "modulus_hnf": [list(r) for r in modulus.hnf],
                            "p": p,
                            "error": f"{type(e).__name__}: {e}",
                        }
                    )
                    continue
                report["modulus_hnf"] = [list(r) for r in modulus.hnf]
                report["checks"] = {name: ok for name, ok in checks}
                results.append(report)
                for name, ok in checks:
                    if not ok:
                        failures.append(
                            {
                                "field": F.label,
                                "modulus_norm": norm,
                                "modulus_hnf": [list(r) for r in modulus.hnf],
                                "p": p,
                                "check": name,
                            }
                        )
    code = 0
    if failures:
        code = 1
    if shortfall:
        code = 2
    aggregated = {
        "configurations": len(results),
        "failures": failures,
        "pass": code == 0,
        "results": results,
    }
    return code, aggregated


CSV_HEADER = (
    "field,modulus_norm,p,r,r_p,delta_p,t_p,h_plus,index,"
    "hypothesis_A,psi_isomorphism,eigensystems_matched"
)


def report_to_csv_row(report):
    def render(x):
        if isinstance(x, bool):
            return "true" if x else "false"
        return str(x)

    cells = [
        report["field"],
        report["modulus_norm"],
        report["p"],
        report["r"],
        report["r_p"],
        report["delta_p"],
        report["t_p"],
        report["h_plus"],
        report["index"],
        report["hypothesis_A"],
        report["psi_isomorphism"],
        report["eigensystems"]["matched_both_degrees"],
    ]
    return ",".join(render(c) for c in cells)


def render_reports(reports, fmt):
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [report_to_csv_row(r) for r in reports]) + "\n"
    return json.dumps(reports if len(reports) != 1 else reports[0], indent=2) + "\n"


# ---------------------------------------------------------------- CLI


def _field_from_args(args):
    if args.descriptor:
        return load_descriptor(args.descriptor)
    if args.d is None:
        raise ValidationError("one of --d or --descriptor is required")
    return real_quadratic_field(args.d)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flag_even_prime(p):
    if p == 2:
        print(
            "note: p = 2 engages the torsion coordinate; expect delta_2 > 0 "
            "for most moduli",
            file=sys.stderr,
        )


def cmd_field_info(args):
    F = _field_from_args(args)
    from .field import validate_descriptor

    cert = validate_descriptor(F)
    info = {
        "label": F.label,
        "min_poly": list(F.min_poly),
        "signature": list(F.signature),
        "degree": F.degree,
        "unit_rank": F.unit_rank,
        "discriminant": poly_discriminant(F.min_poly),
        "torsion_order": F.torsion_order,
        "fundamental_units": [list(u) for u in F.fundamental_units],
        "class_number": F.class_number,
        "narrow_class_number": ray_class_group(F, unit_ideal(F)).order,
        "irreducibility_certificate_prime": cert["irreducibility_certificate_prime"],
        "provenance": F.provenance,
    }
    _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def cmd_invariants(args):
    F = _field_from_args(args)
    _flag_even_prime(args.prime)
    moduli = moduli_of_norm(F, args.modulus_norm)
    if not moduli:
        print(f"no integral ideal has norm {args.modulus_norm}", file=sys.stderr)
        return 1
    reports = []
    for modulus in moduli:
        if modulus.norm % args.prime == 0:
            print(
                f"skipping modulus of norm {modulus.norm}: not coprime to p",
                file=sys.stderr,
            )
            continue
        _, report = run_invariants(F, modulus, args.prime, args.budget)
        reports.append(report)
    _emit(render_reports(reports, args.format), args.out)
    return 0


def cmd_verify(args):
    fields = []
    if args.descriptor:
        fields.append(load_descriptor(args.descriptor))
    for d in args.d or []:
        fields.append(real_quadratic_field(d))
    primes = tuple(args.prime or (3, 5, 7))
    for p in primes:
        _flag_even_prime(p)
    sweep = SweepConfig(
        fields=tuple(fields),
        modulus_norm_bound=args.modulus_norm,
        primes=primes,
        budget=args.budget,
    )
    code, aggregated = run_verify(sweep)
    if args.format == "csv":
        rows = [r for r in aggregated["results"] if "error" not in r]
        _emit(render_reports(rows, "csv"), args.out)
    else:
        _emit(json.dumps(aggregated, indent=2) + "\n", args.out)
    return code


def cmd_scan_primes(args):
    F = _field_from_args(args)
    _flag_even_prime(args.prime)
    lines = []
    for modulus in moduli_of_norm(F, args.modulus_norm):
        if modulus.norm % args.prime == 0:
            continue
        lines.append(f"# modulus norm {modulus.norm} hnf {modulus.hnf}")
        for v, phi in scan_t1(F, modulus, args.prime, args.budget):
            bal = balanced_coeffs(v.g_poly, v.ell)
            lines.append(
                f"ell={v.ell} f={v.f} g={bal} generator_encoding="
                f"{phi.generator_encoding} values={list(phi.values)}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_spanning_set(args):
    F = _field_from_args(args)
    _flag_even_prime(args.prime)
    scan = spanning_set(F, args.prime, args.budget)
    payload = {
        "field": F.label,
        "p": args.prime,
        "target": scan.target,
        "primes": [[v.ell, v.f, list(balanced_coeffs(v.g_poly, v.ell))] for v in scan.primes],
        "matrix": [list(row) for row in scan.rows],
        "shortfall": scan.shortfall,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 2 if scan.shortfall else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="torushecke",
        description="Exact verification of derived Hecke structure on arithmetic tori",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(sp, multi_d=False, with_modulus=True):
        if multi_d:
            sp.add_argument("--d", type=int, action="append", help="native field d (repeatable)")
        else:
            sp.add_argument("--d", type=int, help="native real quadratic field Q(sqrt d)")
        sp.add_argument("--descriptor", help="path to a field descriptor JSON")
        if with_modulus:
            sp.add_argument("--modulus-norm", type=int, default=1, help="modulus ideal norm")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="scan budget")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--cap-residue", type=int, help="residue enumeration cap override")
        sp.add_argument("--out", help="write the report to this path")

    p_field = sub.add_parser("field", help="descriptor inspection")
    field_sub = p_field.add_subparsers(dest="field_verb", required=True)
    p_info = field_sub.add_parser("info", help="validated field summary")
    common(p_info, with_modulus=False)
    p_info.set_defaults(func=cmd_field_info)

    p_inv = sub.add_parser("invariants", help="full report for one modulus norm")
    common(p_inv)
    p_inv.add_argument("--prime", type=int, required=True, help="the prime p")
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify", help="theorem sweep over moduli and primes")
    common(p_ver, multi_d=True)
    p_ver.add_argument(
        "--prime", type=int, action="append", help="prime p (repeatable; default 3 5 7)"
    )
    p_ver.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan-primes", help="stream scan primes and functionals")
    common(p_scan)
    p_scan.add_argument("--prime", type=int, required=True)
    p_scan.set_defaults(func=cmd_scan_primes)

    p_span = sub.add_parser("spanning-set", help="character spanning set for the unit dual")
    common(p_span, with_modulus=False)
    p_span.add_argument("--prime", type=int, required=True)
    p_span.set_defaults(func=cmd_spanning_set)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap_residue", None):
        congruence.RESIDUE_ENUMERATION_CAP = args.cap_residue
    try:
        return args.func(args)
    except (BudgetShortfall, CapExceeded) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except Inconclusive as e:
        print(f"Inconclusive: {e}", file=sys.stderr)
        return 2
    except TorusHeckeError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ArithmeticError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
