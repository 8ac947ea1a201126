"""
Command line interface.

Subcommands:

  verify      run a named verification suite (relations, spectra, braid and
              reflection equations, cylinder identity, permutation-module
              intertwiners, double centralizer, cabled generators)
  dims        the eight signed-power dimensions (quotient and kernel flavours)
  decompose   the full Schur-Weyl decomposition ledger
  schur       the Schur functor of one bipartition
  eigen       Jucys-Murphy and central-element spectra at a rational point
  centralizer Schur algebra dimensions by independent methods

Backends: --backend symbolic (exact rational functions) or --backend
"Q=<rat>,q=<rat>" (exact rational specialization).  Exit status is 0 when all
requested checks pass, 1 when a check fails, 2 on usage or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .rep import (
    SYMBOLIC,
    BudgetExceeded,
    PermutationModule,
    SpecializedBackend,
    barv_map,
    central_candidate_eigenvalues,
    eigenvalue_multiplicities,
    generator_matrix,
    index_shift_matrix,
    jm_candidate_eigenvalues,
    rho,
    verify_coideal_commutation,
    verify_k_against_center,
    verify_rho_relations,
    verify_rk_equations,
)
from .exactlinalg import minimal_polynomial, poly_is_squarefree
from .hecke import central_element, cylinder_identity_holds, jucys_murphy
from .scalars import InvalidSpecialization, Specialization
from .schur import (
    PM_KINDS,
    check_budget,
    expected_pm_dimension,
    pm_power_dimension,
    schur_algebra_dimension_commutant,
    schur_algebra_dimension_orbit,
    schur_functor_diagram_subspace,
    schur_functor_subspace,
    schur_weyl_decompose,
    verify_double_centralizer,
    verify_e_hecke,
)
from .weylcomb import (
    semistandard_bitableaux_count,
    shift_outward,
    standard_bitableaux_count,
)

SUITES = (
    "hecke-relations",
    "jucys-murphy",
    "spectra",
    "rk-equations",
    "cylinder",
    "permutation",
    "double-centralizer",
    "e-hecke",
    "all",
)


class UsageError(Exception):
    pass


def parse_backend(text):
    if text == "symbolic":
        return SYMBOLIC
    parts = dict(p.split("=", 1) for p in text.split(",") if "=" in p)
    if set(parts) != {"Q", "q"}:
        raise UsageError("backend must be 'symbolic' or 'Q=<rat>,q=<rat>'")
    try:
        spec = Specialization(Fraction(parts["Q"]), Fraction(parts["q"]))
    except (ValueError, ZeroDivisionError, InvalidSpecialization) as exc:
        raise UsageError("invalid specialization: %s" % exc)
    return SpecializedBackend(spec)


def parse_shape(text):
    if "|" not in text:
        raise UsageError("shape must look like '2,1|1' (use '-' for an empty side)")
    left, right = text.split("|", 1)

    def side(s):
        s = s.strip()
        if s in ("", "-"):
            return ()
        try:
            parts = tuple(int(x) for x in s.split(","))
        except ValueError:
            raise UsageError("bad partition %r" % s)
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise UsageError("partition parts must be positive and weakly decreasing")
        return parts

    return side(left), side(right)


def fmt_shape(shape):
    def side(p):
        return ",".join(str(x) for x in p) if p else "-"

    return "%s|%s" % (side(shape[0]), side(shape[1]))


# ---------------------------------------------------------------------------
# suites


def run_suite(suite, n, d, e, bk):
    checks = {}
    if suite in ("hecke-relations", "all"):
        check_budget(n, d, bk)
        checks["rho_relations"] = verify_rho_relations(n, d, bk)
    if suite in ("jucys-murphy", "all"):
        ks = [jucys_murphy(d, i) for i in range(1, d + 1)]
        ok = True
        for i in range(d):
            for j in range(i + 1, d):
                ok = ok and (ks[i] * ks[j] == ks[j] * ks[i])
        ck = central_element(d)
        from .hecke import HeckeElement

        for i in range(d):
            g = HeckeElement.generator(d, i)
            ok = ok and (ck * g == g * ck)
        checks["jucys_murphy_commute"] = ok
    if suite in ("spectra", "all"):
        if bk.is_symbolic:
            if suite == "spectra":
                raise UsageError("spectra requires a specialized backend")
        else:
            check_budget(n, d, bk)
            s = bk.spec
            ok = True
            for i in range(1, d + 1):
                m = rho(jucys_murphy(d, i), n, bk)
                try:
                    eigenvalue_multiplicities(m, jm_candidate_eigenvalues(i, s))
                except Exception:
                    ok = False
                ok = ok and poly_is_squarefree(minimal_polynomial(m), m.one)
            mc = rho(central_element(d), n, bk)
            try:
                eigenvalue_multiplicities(mc, central_candidate_eigenvalues(d, s))
            except Exception:
                ok = False
            checks["spectra"] = ok
    if suite in ("rk-equations", "all"):
        res = verify_rk_equations(n, e, bk)
        checks["rk_equations"] = res["all"]
        control = verify_rk_equations(n, e, bk, sabotage_k=True)
        checks["rk_negative_control_fails"] = not control["all"]
        checks["k_matches_central_element"] = verify_k_against_center(n, d, bk)
    if suite in ("cylinder", "all"):
        checks["cylinder_identity"] = cylinder_identity_holds(d, max(1, e))
    if suite in ("permutation", "all"):
        if n % 2 == 0 or n < 3:
            if suite == "permutation":
                raise UsageError("the permutation suite needs an odd n >= 3")
        else:
            ok = True
            pm = PermutationModule(n, (2,) * d, bk)
            psi = index_shift_matrix(pm, lambda v: shift_outward(v, 2), n + 2)
            for i in range(d):
                ok = ok and psi * pm.generator(i) == generator_matrix(n + 2, d, i, bk) * psi
            a = (0,) * d
            phi = barv_map(a, n, bk)
            pmz = PermutationModule(n, a, bk)
            ok = ok and phi.rank() == pmz.dim
            for i in range(d):
                ok = ok and phi * pmz.generator(i) == generator_matrix(n + 1, d, i, bk) * phi
            checks["permutation_intertwiners"] = ok
    if suite in ("double-centralizer", "all"):
        check_budget(n, d, bk)
        rep = verify_double_centralizer(n, d, bk)
        checks["double_centralizer"] = rep["double_centralizer"]
        checks["coideal_commutation"] = not verify_coideal_commutation(n, d, bk)
    if suite in ("e-hecke", "all"):
        check_budget(n, d * max(1, e), bk)
        checks["e_hecke_consistency"] = verify_e_hecke(n, d, max(1, e), bk)
    return checks


# ---------------------------------------------------------------------------
# output handling


def emit(payload, args):
    lines = []
    if args.output == "json":
        doc = {k: v for k, v in payload.items() if not k.startswith("results_")}
        lines.append(json.dumps(doc, indent=2, sort_keys=True, default=str))
    elif args.output == "tsv":
        for row in payload.get("results_tsv", []):
            lines.append("\t".join(str(x) for x in row))
    else:
        for line in payload.get("results_text", []):
            lines.append(line)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def payload_base(command, params, results, ok):
    clean = {k: v for k, v in results.items() if not k.startswith("results_")}
    out = {
        "tool": "heckeb",
        "version": __version__,
        "command": command,
        "params": params,
        "results": clean,
        "pass": bool(ok),
    }
    out["results_text"] = results.get("results_text", [])
    out["results_tsv"] = results.get("results_tsv", [])
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args, bk):
    checks = run_suite(args.suite, args.n, args.d, args.e, bk)
    ok = all(checks.values())
    text = ["%s: %s" % (k, "PASS" if v else "FAIL") for k, v in sorted(checks.items())]
    text.append("overall: %s" % ("PASS" if ok else "FAIL"))
    results = dict(checks)
    results["results_text"] = text
    results["results_tsv"] = [[k, "PASS" if v else "FAIL"] for k, v in sorted(checks.items())]
    return payload_base(
        "verify",
        {"suite": args.suite, "n": args.n, "d": args.d, "e": args.e, "backend": args.backend},
        results,
        ok,
    ), ok


def cmd_dims(args, bk):
    check_budget(args.n, args.d, bk)
    rows = []
    ok = True
    for kind in PM_KINDS:
        exp = expected_pm_dimension(kind, args.n, args.d)
        for flavour in ("quotient", "kernel"):
            got = pm_power_dimension(kind, args.n, args.d, bk, flavour)
            ok = ok and got == exp
            rows.append((kind, flavour, got, exp))
    results = {
        "dims": {"%s_%s" % (k, f): g for k, f, g, _ in rows},
        "expected": {k: expected_pm_dimension(k, args.n, args.d) for k in PM_KINDS},
        "results_text": ["%s %s: %d (expected %d)" % r for r in rows],
        "results_tsv": [list(r) for r in rows],
    }
    return payload_base(
        "dims", {"n": args.n, "d": args.d, "backend": args.backend}, results, ok
    ), ok


def cmd_decompose(args, bk):
    led = schur_weyl_decompose(args.n, args.d, bk)
    text = []
    tsv = []
    for r in led["rows"]:
        text.append(
            "%-12s dimL=%-4d dimM=%-4d (formula %d)"
            % (fmt_shape(r["shape"]), r["dimL"], r["dimM"], r["dimL_formula"])
        )
        tsv.append([fmt_shape(r["shape"]), r["dimL"], r["dimM"], r["dimL_formula"]])
    text.append(
        "sum dimL*dimM = %d (tensor dim %d)" % (led["sum_dimL_dimM"], led["tensor_dim"])
    )
    text.append(
        "sum dimL^2 = %d (Schur algebra dim %d)"
        % (led["sum_dimL_sq"], led["schur_algebra_dim"])
    )
    results = {
        "rows": [
            {
                "shape": fmt_shape(r["shape"]),
                "dimL": r["dimL"],
                "dimM": r["dimM"],
                "dimL_formula": r["dimL_formula"],
            }
            for r in led["rows"]
        ],
        "sum_dimL_dimM": led["sum_dimL_dimM"],
        "tensor_dim": led["tensor_dim"],
        "sum_dimL_sq": led["sum_dimL_sq"],
        "schur_algebra_dim": led["schur_algebra_dim"],
        "results_text": text,
        "results_tsv": tsv,
    }
    return payload_base(
        "decompose", {"n": args.n, "d": args.d, "backend": args.backend}, results, led["pass"]
    ), led["pass"]


def cmd_schur(args, bk):
    shape = parse_shape(args.shape)
    d = sum(shape[0]) + sum(shape[1])
    check_budget(args.n, d, bk)
    sub = schur_functor_subspace(shape, args.n, bk)
    dia = schur_functor_diagram_subspace(shape, args.n, bk)
    formula = semistandard_bitableaux_count(shape, args.n)
    routes_equal = sub == dia
    ok = routes_equal and sub.dim == formula
    results = {
        "shape": fmt_shape(shape),
        "dim": sub.dim,
        "dim_formula": formula,
        "diagram_dim": dia.dim,
        "routes_equal": routes_equal,
        "dimM": standard_bitableaux_count(shape),
        "results_text": [
            "schur functor %s on V_%d: dim %d (formula %d)"
            % (fmt_shape(shape), args.n, sub.dim, formula),
            "diagram route dim %d, images %s"
            % (dia.dim, "equal" if routes_equal else "DIFFER"),
            "multiplicity space dim %d" % standard_bitableaux_count(shape),
        ],
        "results_tsv": [[fmt_shape(shape), sub.dim, formula, dia.dim, int(routes_equal)]],
    }
    return payload_base(
        "schur", {"shape": args.shape, "n": args.n, "backend": args.backend}, results, ok
    ), ok


def cmd_eigen(args, bk):
    if bk.is_symbolic:
        raise UsageError("eigen requires a specialized backend")
    check_budget(args.n, args.d, bk)
    s = bk.spec
    text = []
    tsv = []
    data = {}
    ok = True
    for i in range(1, args.d + 1):
        m = rho(jucys_murphy(args.d, i), args.n, bk)
        mults = eigenvalue_multiplicities(m, jm_candidate_eigenvalues(i, s))
        sf = poly_is_squarefree(minimal_polynomial(m), m.one)
        ok = ok and sf
        vals = sorted(mults)
        data["K_%d" % i] = {str(v): mults[v] for v in vals}
        text.append(
            "K_%d eigenvalues: %s%s"
            % (i, ", ".join(str(v) for v in vals), "" if sf else " (NOT semisimple)")
        )
        for v in vals:
            tsv.append(["K_%d" % i, str(v), mults[v]])
    mc = rho(central_element(args.d), args.n, bk)
    mults = eigenvalue_multiplicities(mc, central_candidate_eigenvalues(args.d, s))
    vals = sorted(mults)
    data["c_K"] = {str(v): mults[v] for v in vals}
    text.append("c_K eigenvalues: %s" % ", ".join(str(v) for v in vals))
    for v in vals:
        tsv.append(["c_K", str(v), mults[v]])
    results = {"spectra": data, "results_text": text, "results_tsv": tsv}
    return payload_base(
        "eigen", {"n": args.n, "d": args.d, "backend": args.backend}, results, ok
    ), ok


def cmd_centralizer(args, bk):
    check_budget(args.n, args.d, bk)
    orbit = schur_algebra_dimension_orbit(args.n, args.d, bk)
    results = {"orbit_method": orbit}
    ok = True
    if args.n ** args.d <= 30:
        comm = schur_algebra_dimension_commutant(args.n, args.d, bk)
        results["commutant_method"] = comm
        ok = comm == orbit
    text = ["Schur algebra dim (orbit method): %d" % orbit]
    if "commutant_method" in results:
        text.append("Schur algebra dim (commutant method): %d" % results["commutant_method"])
    results["results_text"] = text
    results["results_tsv"] = [[k, v] for k, v in sorted(results.items()) if isinstance(v, int)]
    return payload_base(
        "centralizer", {"n": args.n, "d": args.d, "backend": args.backend}, results, ok
    ), ok


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="heckeb", description=__doc__.splitlines()[1])
    p.add_argument("--version", action="version", version="heckeb %s" % __version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_d=True):
        sp.add_argument("--n", type=int, required=True, help="dimension of the base space")
        if need_d:
            sp.add_argument("--d", type=int, required=True, help="tensor degree")
        sp.add_argument(
            "--backend",
            default="symbolic",
            help="'symbolic' or 'Q=<rat>,q=<rat>' (default: symbolic)",
        )
        sp.add_argument("--output", choices=("text", "tsv", "json"), default="text")
        sp.add_argument("--out", default=None, help="write output to a file")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--e", type=int, default=1, help="cable width for block checks")
    common(sp)

    sp = sub.add_parser("dims", help="signed power dimensions")
    common(sp)

    sp = sub.add_parser("decompose", help="Schur-Weyl decomposition ledger")
    common(sp)

    sp = sub.add_parser("schur", help="Schur functor of a bipartition")
    sp.add_argument("--shape", required=True, help="bipartition, e.g. '2,1|1' or '2|-'")
    common(sp, need_d=False)

    sp = sub.add_parser("eigen", help="Jucys-Murphy spectra at a rational point")
    common(sp)

    sp = sub.add_parser("centralizer", help="Schur algebra dimension")
    common(sp)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        bk = parse_backend(args.backend)
        if args.command == "verify":
            payload, ok = cmd_verify(args, bk)
        elif args.command == "dims":
            payload, ok = cmd_dims(args, bk)
        elif args.command == "decompose":
            payload, ok = cmd_decompose(args, bk)
        elif args.command == "schur":
            payload, ok = cmd_schur(args, bk)
        elif args.command == "eigen":
            payload, ok = cmd_eigen(args, bk)
        elif args.command == "centralizer":
            payload, ok = cmd_centralizer(args, bk)
        else:  # pragma: no cover
            raise UsageError("unknown command")
    except (UsageError, BudgetExceeded) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    emit(payload, args)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
