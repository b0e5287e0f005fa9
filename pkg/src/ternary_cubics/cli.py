"""Command-line interface.

Subcommands:

    char         irreducible dimensions and plethysm decompositions
    tableau      semistandard tableau counts and listings
    concomitant  the symbolic catalog: types, expansion sizes, evaluation
    locus        parameterizations and sample points
    ideal        graded kernels, characters, syzygies, Hilbert values
    betti        published tables and their internal consistency
    specseq      spectral-sequence character identities
    verify-all   the whole verification suite with a machine-readable report

Default primes and seed can be overridden with the environment variables
TERNARY_CUBICS_PRIMES (comma-separated) and TERNARY_CUBICS_SEED.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__, brackets, characters, ideals, linalg, loci, resolution, tableaux


def _default_primes():
    env = os.environ.get("TERNARY_CUBICS_PRIMES")
    if env:
        return tuple(int(x) for x in env.split(","))
    return linalg.DEFAULT_PRIMES


def _default_seed():
    return int(os.environ.get("TERNARY_CUBICS_SEED", "0"))


def _parse_cubic(text):
    if text in loci.NAMED_CUBICS:
        return loci.NAMED_CUBICS[text]
    vals = tuple(int(x) for x in text.split(","))
    if len(vals) != 10:
        raise ValueError("cubic needs 10 comma-separated coefficients")
    return vals


def _fmt_modules(dec):
    return " + ".join(f"{m}({a},{b})" if m > 1 else f"({a},{b})"
                      for (a, b), m in dec) or "0"


# ---------------------------------------------------------------------------
# simple subcommands
# ---------------------------------------------------------------------------

def cmd_char(args):
    if args.action == "dim":
        print(characters.dim_irrep(args.a, args.b))
    elif args.action == "decompose-sym":
        c = characters.sym_power(args.power, characters.weyl_character(args.a, args.b))
        print(_fmt_modules(characters.decompose(c)))
    elif args.action == "decompose-ext":
        c = characters.ext_power(args.power, characters.weyl_character(args.a, args.b))
        print(_fmt_modules(characters.decompose(c)))
    elif args.action == "tensor":
        c = characters.weyl_character(args.a, args.b) * characters.weyl_character(args.a2, args.b2)
        print(_fmt_modules(characters.decompose(c)))
    return 0


def cmd_tableau(args):
    tabs = tableaux.enumerate_tableaux(args.m, args.n)
    if args.action == "count":
        print(len(tabs))
    else:
        for t in tabs:
            row1 = " ".join(map(str, t[0]))
            row2 = " ".join(map(str, t[1]))
            print(f"[{row1} | {row2}]")
    return 0


def cmd_concomitant(args):
    if args.action == "list":
        for name in sorted(brackets.CATALOG):
            t = brackets.validate(brackets.catalog(name))
            print(f"{name:18s} {t.as_tuple()}")
        return 0
    conc = brackets.catalog_concomitant(args.name)
    if args.action == "type":
        print(conc.ctype.as_tuple())
    elif args.action == "terms":
        print(len(conc.poly.terms))
    elif args.action == "eval":
        val = brackets.evaluate_at_cubic(conc, _parse_cubic(args.cubic))
        if not val:
            print(0)
        else:
            print(val.to_text())
    return 0


def cmd_locus(args):
    if args.action == "dims":
        for lid in loci.LOCI:
            print(f"{lid:6s} dim {loci.LOCUS_DIM[lid]}  generators in degree "
                  f"{loci.GENERATOR_DEGREES[lid]}")
    elif args.action == "sample":
        pt = loci.sample(args.locus, seed=args.seed)
        print(",".join(map(str, pt)))
    elif args.action == "tact-invariant":
        print(loci.tact_polynomial().to_text())
    return 0


def cmd_ideal(args):
    primes = tuple(args.prime) if args.prime else _default_primes()
    if args.action == "dim":
        gp = ideals.graded_kernel(args.locus, args.degree, primes)
        print(gp.dimension())
    elif args.action == "character":
        gp = ideals.graded_kernel(args.locus, args.degree, primes)
        print(_fmt_modules(gp.decomposition))
    elif args.action == "syzygy":
        sp = ideals.syzygy_kernel(args.locus, args.degree, primes)
        print(f"{sp.dimension()} = {_fmt_modules(sp.decomposition)}")
    elif args.action == "hilbert":
        print(ideals.hilbert_value(args.locus, args.degree,
                                   prime=primes[0], seed=args.seed))
    elif args.action == "export":
        gp = ideals.graded_kernel(args.locus, args.degree, primes)
        print(json.dumps(ideals.piece_to_dict(gp), indent=2))
    return 0


def cmd_betti(args):
    if args.action == "table":
        betti = resolution.betti_table(args.locus)
        js = sorted({j for j, _ in betti})
        ps = range(max(p for _, p in betti) + 1)
        print("j\\p " + " ".join(f"{p:>5d}" for p in ps))
        for j in js:
            row = " ".join(f"{betti.get((j, p), ''):>5}" for p in ps)
            print(f"{j:>3d} {row}")
    elif args.action == "modules":
        for (j, p), mods in sorted(resolution.tables()[args.locus]["modules"].items()):
            print(f"M[{j},{p}] = " + " ".join(f"({a},{b})" for a, b in mods))
    elif args.action == "check":
        bad = [r for r in resolution.ledger_dim_check() if not r["ok"]]
        bad += [r for r in resolution.duality_check() if not r["ok"]]
        print("PASS" if not bad else f"FAIL {bad}")
        return 0 if not bad else 1
    elif args.action == "numerator":
        print(resolution.numerator(args.locus))
    return 0


def cmd_specseq(args):
    names = resolution.IDENTITY_NAMES if args.name == "all" else (args.name,)
    rc = 0
    for name in names:
        r = resolution.spectral_identity(name)
        print(f"{name}: {'PASS' if r['ok'] else 'FAIL ' + str(r)}")
        if not r["ok"]:
            rc = 1
    return rc


# ---------------------------------------------------------------------------
# verify-all
# ---------------------------------------------------------------------------

KERNEL_ANCHORS = [
    ("equiv", 2, 27, [((4, 2), 1)]),
    ("neq", 3, 20, [((3, 3), 1), ((3, 0), 1)]),
    ("y", 3, 20, [((3, 3), 1), ((3, 0), 1)]),
    ("delta", 4, 35, [((5, 1), 1)]),
    ("tact", 4, 1, [((0, 0), 1)]),
    ("tact", 5, 20, [((3, 3), 1), ((3, 0), 1)]),
    ("empty", 8, 35, [((5, 4), 1)]),
]

SYZYGY_ANCHORS = [
    ("equiv", 2, 105, [((5, 4), 1), ((5, 1), 1), ((4, 2), 1), ((2, 1), 1)]),
    ("neq", 3, 45, [((4, 2), 1), ((3, 3), 1), ((2, 1), 1)]),
    ("y", 3, 45, [((4, 2), 1), ((3, 3), 1), ((2, 1), 1)]),
    ("delta", 4, 119, [((6, 3), 1), ((6, 0), 1), ((4, 2), 1)]),
    ("empty", 8, 70, [((5, 4), 1), ((4, 2), 1), ((2, 1), 1)]),
]

CONCOMITANT_LOCI = [
    ("Phi222", "equiv", 2), ("Phi303", "neq", 3), ("Phi330", "neq", 3),
    ("Phi406", "neq", 4), ("Phi441", "delta", 4), ("Phi400", "tact", 4),
    ("Phi503", "tact", 5), ("Phi814", "empty", 8),
]


def _check_dimension_formula(config):
    for m in range(9):
        for n in range(9):
            formula = characters.dim_irrep(m + n, n)
            count = len(tableaux.enumerate_tableaux(m, n))
            if formula != count:
                return "fail", "formula == SSYT count", f"mismatch at ({m},{n})"
    return "pass", "formula == SSYT count for m,n <= 8", "all equal"


def _check_kernel(lid, deg, dim, dec):
    def run(config):
        gp = ideals.graded_kernel(lid, deg, config["primes"])
        got = (gp.dimension(), gp.decomposition)
        ok = got == (dim, dec)
        return ("pass" if ok else "fail",
                f"{dim} = {_fmt_modules(dec)}",
                f"{got[0]} = {_fmt_modules(got[1])}")
    return run


def _check_syzygy(lid, deg, dim, dec):
    def run(config):
        sp = ideals.syzygy_kernel(lid, deg, config["primes"])
        got = (sp.dimension(), sp.decomposition)
        ok = got == (dim, dec)
        return ("pass" if ok else "fail",
                f"{dim} = {_fmt_modules(dec)}",
                f"{got[0]} = {_fmt_modules(got[1])}")
    return run


def _check_ledger(config):
    bad = [r for r in resolution.ledger_dim_check() if not r["ok"]]
    return ("pass" if not bad else "fail", "all cells match", str(bad or "all cells match"))


def _check_hilbert(lid):
    def run(config):
        for seed in (config["seed"], config["seed"] + 1):
            for ell in range(1, config["lmax"] + 1):
                expected = resolution.hilbert_from_numerator(lid, ell)
                actual = ideals.hilbert_value(lid, ell, prime=config["primes"][0],
                                              seed=seed)
                if expected != actual:
                    return "fail", f"H({ell}) = {expected}", str(actual)
        return "pass", f"numerator coefficients to degree {config['lmax']}", "all equal"
    return run


def _check_identity(name):
    def run(config):
        r = resolution.spectral_identity(name)
        return ("pass" if r["ok"] else "fail", "exact character identity",
                "equal" if r["ok"] else str(r))
    return run


def _check_eagon_northcott(config):
    bad = [r for r in resolution.eagon_northcott_check() if not r["ok"]]
    return ("pass" if not bad else "fail", "four terms match the ledger",
            str(bad or "all match"))


def _check_duality(config):
    bad = [c for c in resolution.duality_check() if not c["ok"]]
    return ("pass" if not bad else "fail", "published dual symmetries",
            str(bad or "all match"))


def _check_codim(config):
    for lid in loci.LOCI:
        mult = resolution.numerator_multiplicity(lid)
        codim = 9 - loci.LOCUS_DIM[lid]
        if mult != codim:
            return "fail", f"{lid}: multiplicity {codim}", str(mult)
    return "pass", "(1-t)-multiplicity equals codimension", "all six agree"


def _check_concomitant_types(config):
    for name in sorted(brackets.CATALOG):
        conc = brackets.catalog_concomitant(name)
        declared = brackets.CATALOG_TYPES[name]
        if conc.is_zero:
            return "fail", f"{name} nonzero", "zero after expansion"
        if conc.ctype.as_tuple()[:3] != declared:
            return "fail", f"{name} type {declared}", str(conc.ctype.as_tuple())
    return "pass", "all catalog entries nonzero of declared type", "all ok"


def _check_isotypic(name, lid, deg):
    def run(config):
        ok = ideals.isotypic_match(name, lid, deg, config["primes"])
        return ("pass" if ok else "fail",
                f"{name} inside kernel({lid},{deg})", "member" if ok else "not a member")
    return run


def _check_vanishing(name, lid):
    def run(config):
        p = config["primes"][0]
        conc = brackets.catalog_concomitant(name)
        for k in range(50):
            pt = loci.sample(lid, seed=(config["seed"], name, k), p=p)
            if not brackets.vanishes_at_cubic(conc, pt, p):
                return "fail", f"{name} = 0 on {lid}", f"nonzero at sample {k}"
        return "pass", f"{name} = 0 on 50 samples of {lid}", "vanishes"
    return run


def _check_hessian(config):
    import random
    from fractions import Fraction
    conc = brackets.catalog_concomitant("Phi330")
    rng = random.Random(config["seed"])
    ratios = set()
    for _ in range(20):
        a = [rng.randint(-9, 9) for _ in range(10)]
        lhs = brackets.evaluate_at_cubic(conc, a)
        rhs = brackets.hessian_oracle(a)
        if not rhs:
            if lhs:
                return "fail", "proportional", "oracle zero, bracket nonzero"
            continue
        mo, c = next(iter(rhs.terms.items()))
        r = Fraction(lhs.terms.get(mo, 0), c)
        if lhs != rhs * r:
            return "fail", "proportional", "not proportional"
        ratios.add(r)
    if len(ratios) != 1:
        return "fail", "single global constant", f"ratios {sorted(ratios)}"
    return "pass", "bracket Hessian = c * partials determinant", f"c = {ratios.pop()}"


def _check_tact_formula(config):
    ok = loci.tact_polynomial() == loci.tact_printed_formula()
    return ("pass" if ok else "fail", "resultant route == 12-term polynomial",
            "identical" if ok else "differ")


def _check_aronhold(config):
    import random
    conc = brackets.catalog_concomitant("Phi400")
    z1 = brackets.evaluate_at_cubic(conc, loci.NAMED_CUBICS["fermat"])
    cube = tuple(1 if r == 0 else 0 for r in range(10))
    z2 = brackets.evaluate_at_cubic(conc, cube)
    rng = random.Random(config["seed"] + 7)
    z3 = brackets.evaluate_at_cubic(conc, [rng.randint(-9, 9) for _ in range(10)])
    ok = (not z1) and (not z2) and bool(z3)
    return ("pass" if ok else "fail", "0 at Fermat and cube, nonzero generically",
            f"fermat={bool(z1)} cube={bool(z2)} random={bool(z3)}")


def _check_sym8_product(config):
    s3 = characters.weyl_character(3, 0)
    sym8 = characters.sym_power(8, s3)
    m54 = characters.multiplicity(sym8, (5, 4))
    m51 = characters.multiplicity(sym8, (5, 1))
    prod = (brackets.catalog_concomitant("Phi400").poly
            * brackets.catalog_concomitant("Phi441").poly)
    deg = prod.degree({"a"})
    dx = prod.degree({"x"})
    du = prod.degree({"u"})
    ok = m54 == 1 and m51 == 1 and bool(prod) and (deg, dx, du) == (8, 4, 1)
    return ("pass" if ok else "fail",
            "mult(5,4)=mult(5,1)=1 in sym8; product of type (8,4,1)",
            f"mults=({m54},{m51}) product type ({deg},{dx},{du})")


def _check_syzygy_relations(config):
    counts = ideals.syzygy_relation_check()
    expected = {"Psi54": 35, "Psi51": 35, "Psi42": 27, "Psi21": 8}
    ok = counts == expected and sum(counts.values()) == 105
    return ("pass" if ok else "fail", "35/35/27/8 relations totaling 105", str(counts))


def build_checks():
    checks = [("dimension-formula", _check_dimension_formula)]
    for lid, deg, dim, dec in KERNEL_ANCHORS:
        checks.append((f"kernel-{lid}-{deg}", _check_kernel(lid, deg, dim, dec)))
    for lid, deg, dim, dec in SYZYGY_ANCHORS:
        checks.append((f"syzygy-{lid}-{deg}", _check_syzygy(lid, deg, dim, dec)))
    checks.append(("ledger-dimensions", _check_ledger))
    for lid in loci.LOCI:
        checks.append((f"hilbert-{lid}", _check_hilbert(lid)))
    for name in resolution.IDENTITY_NAMES:
        checks.append((f"identity-{name}", _check_identity(name)))
    checks.append(("eagon-northcott", _check_eagon_northcott))
    checks.append(("duality", _check_duality))
    checks.append(("numerator-codimension", _check_codim))
    checks.append(("concomitant-types", _check_concomitant_types))
    for name, lid, deg in CONCOMITANT_LOCI:
        checks.append((f"isotypic-{name}-{lid}", _check_isotypic(name, lid, deg)))
    for name, lid, _deg in CONCOMITANT_LOCI:
        checks.append((f"vanishing-{name}-{lid}", _check_vanishing(name, lid)))
    checks.append(("hessian-oracle", _check_hessian))
    checks.append(("tact-formula", _check_tact_formula))
    checks.append(("aronhold-vanishing", _check_aronhold))
    checks.append(("sym8-product", _check_sym8_product))
    checks.append(("syzygy-relations", _check_syzygy_relations))
    return checks


def run_verify_all(config):
    checks = build_checks()

    def run_one(item):
        cid, fn = item
        t0 = time.monotonic()
        try:
            status, expected, actual = fn(config)
        except linalg.UnluckyPrimeError as exc:
            status, expected, actual = "fail", "consistent primes", f"unlucky prime: {exc}"
        except Exception as exc:  # computational failure: report, don't crash
            status, expected, actual = "fail", "no exception", f"{type(exc).__name__}: {exc}"
        ms = int((time.monotonic() - t0) * 1000)
        return {"id": cid, "status": status, "expected": expected,
                "actual": actual, "ms": ms if config["timings"] else 0}

    if config["threads"] > 1:
        with ThreadPoolExecutor(max_workers=config["threads"]) as pool:
            results = list(pool.map(run_one, checks))
    else:
        results = [run_one(c) for c in checks]
    report = {
        "version": __version__,
        "config": {"primes": list(config["primes"]), "seed": config["seed"],
                   "threads": config["threads"], "lmax": config["lmax"]},
        "checks": results,
    }
    return report


def format_report(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "status", "expected", "actual", "ms"])
        for c in report["checks"]:
            w.writerow([c["id"], c["status"], c["expected"], c["actual"], c["ms"]])
        return buf.getvalue()
    if fmt == "md":
        lines = [f"# verification report (v{report['version']})", "",
                 "| check | status | expected | actual | ms |",
                 "|---|---|---|---|---|"]
        for c in report["checks"]:
            lines.append(f"| {c['id']} | {c['status']} | {c['expected']} "
                         f"| {c['actual']} | {c['ms']} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt}")


def cmd_verify_all(args):
    primes = tuple(args.prime) if args.prime else _default_primes()
    if len(primes) < 1 or any(p <= 65536 for p in primes):
        print("error: need at least one prime > 2^16", file=sys.stderr)
        return 2
    config = {"primes": primes, "seed": args.seed, "threads": args.threads,
              "lmax": args.lmax, "timings": args.timings}
    report = run_verify_all(config)
    text = format_report(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    for c in failed:
        print(f"FAIL {c['id']}: expected {c['expected']}, got {c['actual']}",
              file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="ternary-cubics",
                                description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--prime", type=int, action="append",
                        help="modular prime (repeatable); default 1000003, 65537")
        sp.add_argument("--seed", type=int, default=_default_seed())

    sp = sub.add_parser("char", help="character calculus")
    sp.add_argument("action", choices=["dim", "decompose-sym", "decompose-ext", "tensor"])
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("a2", type=int, nargs="?", default=0)
    sp.add_argument("b2", type=int, nargs="?", default=0)
    sp.add_argument("--power", type=int, default=1)
    sp.set_defaults(fn=cmd_char)

    sp = sub.add_parser("tableau", help="semistandard tableaux on (m+n, n)")
    sp.add_argument("action", choices=["count", "list"])
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(fn=cmd_tableau)

    sp = sub.add_parser("concomitant", help="the symbolic catalog")
    sp.add_argument("action", choices=["list", "type", "terms", "eval"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--cubic", default="fermat",
                    help="named cubic or 10 comma-separated coefficients")
    sp.set_defaults(fn=cmd_concomitant)

    sp = sub.add_parser("locus", help="loci and their parameterizations")
    sp.add_argument("action", choices=["dims", "sample", "tact-invariant"])
    sp.add_argument("--locus", choices=loci.LOCI)
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.set_defaults(fn=cmd_locus)

    sp = sub.add_parser("ideal", help="graded pieces of the defining ideals")
    sp.add_argument("action", choices=["dim", "character", "syzygy", "hilbert", "export"])
    sp.add_argument("--locus", required=True, choices=loci.LOCI)
    sp.add_argument("--degree", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_ideal)

    sp = sub.add_parser("betti", help="published Betti tables")
    sp.add_argument("action", choices=["table", "modules", "check", "numerator"])
    sp.add_argument("--locus", choices=loci.LOCI, default="equiv")
    sp.set_defaults(fn=cmd_betti)

    sp = sub.add_parser("specseq", help="character identities")
    sp.add_argument("verb", choices=["verify"])
    sp.add_argument("name", choices=list(resolution.IDENTITY_NAMES) + ["all"])
    sp.set_defaults(fn=cmd_specseq)

    sp = sub.add_parser("verify-all", help="run the whole verification suite")
    common(sp)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--lmax", type=int, default=8)
    sp.add_argument("--format", choices=["json", "csv", "md"], default="json")
    sp.add_argument("--out")
    sp.add_argument("--timings", action="store_true",
                    help="include real elapsed ms (reports are then not byte-stable)")
    sp.set_defaults(fn=cmd_verify_all)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except linalg.UnluckyPrimeError as exc:
        print(f"computational failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
