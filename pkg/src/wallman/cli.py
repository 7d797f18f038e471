"""Command-line interface.

Exit codes: 0 — everything requested passed; 1 — a check or certification
failed (the written report carries the witnesses); 2 — input or
configuration error.  All subcommands are pure JSON-in/JSON-out and fully
deterministic; ``report`` additionally renders figures and CSV series from a
previously written report.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .certify import NumericConfig, certify_exact, certify_numeric
from .errors import WallmanError
from .families import exact_family_from_description, sampled_family_from_description
from .jsonio import load_json, load_space_document, write_report
from .lattice import lattice_from_description
from .limits import (
    function_from_description,
    limit_table,
    restrict_table,
    sup_distance,
    verify_extension_continuity,
    verify_limit_localization,
)
from .selftest import DEFAULT_CASES, run_selftest
from .spaces import format_value
from .topology import (
    build_space,
    check_compactness,
    check_hausdorff,
    verify_principal_embedding,
    verify_star_identities,
)

CHECK_NAMES = ("star", "embedding", "compact", "hausdorff")


def _parse_eps_list(text: str, exact: bool):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        out.append(Fraction(tok) if exact else float(Fraction(tok)))
    return out


def cmd_build(args) -> int:
    doc = load_json(args.lattice)
    lattice = lattice_from_description(doc, cap=args.cap)
    space = build_space(lattice)
    report = space.describe()
    write_report(report, args.out)
    print(f"built space: {len(lattice)} lattice elements, {len(space.points)} ultrafilters")
    return 0


def cmd_verify(args) -> int:
    space = load_space_document(load_json(args.space))
    requested = [c.strip() for c in args.checks.split(",") if c.strip()]
    for c in requested:
        if c not in CHECK_NAMES:
            raise WallmanError(f"unknown check {c!r}; available: {', '.join(CHECK_NAMES)}")
    results = {}
    if "star" in requested:
        results["star"] = verify_star_identities(space).describe()
    if "embedding" in requested:
        results["embedding"] = verify_principal_embedding(space).describe()
    if "compact" in requested:
        results["compact"] = check_compactness(space).describe()
    if "hausdorff" in requested:
        results["hausdorff"] = check_hausdorff(space).describe()
    ok = all(r["pass"] for r in results.values())
    report = {"kind": "verify", "checks": results, "pass": ok}
    if args.out:
        write_report(report, args.out)
    for name, r in results.items():
        print(f"{name}: {'pass' if r['pass'] else 'FAIL'}")
    return 0 if ok else 1


def cmd_limits(args) -> int:
    space = load_space_document(load_json(args.space))
    doc = load_json(args.functions)
    descs = doc["functions"] if isinstance(doc, dict) and "functions" in doc else doc
    functions = [
        function_from_description(space.lattice.space, d) for d in descs
    ]
    tables = [limit_table(f, space) for f in functions]
    localization = []
    for fi, (f, tab) in enumerate(zip(functions, tables)):
        for ui, uf in enumerate(space.points):
            loc = verify_limit_localization(f, uf)
            localization.append(
                {"function": fi, "ultrafilter": ui, "pass": loc["all_pass"]}
            )
    pairs = []
    for i in range(len(functions)):
        for j in range(i + 1, len(functions)):
            cont = verify_extension_continuity(functions[i], functions[j], space)
            pairs.append(
                {
                    "i": i,
                    "j": j,
                    "d_ground": format_value(cont["d_ground"]),
                    "d_extension": format_value(cont["d_extension"]),
                    "forward_bound": cont["forward_bound"],
                    "inverse_bound": cont["inverse_bound"],
                    "distances_equal": cont["distances_equal"],
                }
            )
    round_trips = []
    for fi, tab in enumerate(tables):
        back = restrict_table(tab, space)
        round_trips.append(
            {"function": fi, "distance": format_value(sup_distance(back, functions[fi]))}
        )
    ok = all(l["pass"] for l in localization) and all(
        p["forward_bound"] for p in pairs
    )
    report = {
        "kind": "limits",
        "tables": [t.describe() for t in tables],
        "localization": localization,
        "pairs": pairs,
        "round_trip": round_trips,
        "pass": ok,
    }
    if args.out:
        write_report(report, args.out)
    print(f"limits: {len(functions)} functions, {len(space.points)} ultrafilters, "
          f"{'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_certify(args) -> int:
    doc = load_json(args.family)
    if args.mode == "exact":
        family = exact_family_from_description(doc)
        space = build_space(family.lattice)
        eps = _parse_eps_list(args.eps, exact=True)
        cert = certify_exact(family, space, eps)
    else:
        family = sampled_family_from_description(doc, tail_tol=args.tail_tol)
        eps = _parse_eps_list(args.eps, exact=False)
        cert = certify_numeric(family, eps, NumericConfig())
    report = dict(cert.describe(), kind="certificate")
    write_report(report, args.out)
    print(f"verdict: {cert.verdict}")
    return 0 if cert.verdict == "RelativelyCompact" else 1


def cmd_selftest(args) -> int:
    cases = None
    if args.cases:
        cases = {name: args.cases for name in DEFAULT_CASES}
    report = dict(
        run_selftest(args.seed, cases=cases, max_functions=args.max_functions),
        kind="selftest",
    )
    if args.out:
        write_report(report, args.out)
    for name, s in report["suites"].items():
        status = "pass" if not s["failures"] else f"FAIL ({len(s['failures'])})"
        print(f"{name}: {s['checks']} checks, {status}")
    return 0 if report["pass"] else 1


def cmd_report(args) -> int:
    from .figures import render_report

    doc = load_json(args.input)
    written = render_report(doc, args.outdir)
    for path in written:
        print(path)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wallman",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=f"wallman {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="generate a lattice closure and its ultrafilter space")
    b.add_argument("--lattice", required=True, help="lattice description JSON")
    b.add_argument("--out", required=True, help="output space JSON")
    b.add_argument("--cap", type=int, default=4096, help="lattice element cap (default 4096)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run topology checks on a built space")
    v.add_argument("--space", required=True, help="space JSON from 'build'")
    v.add_argument(
        "--checks",
        default=",".join(CHECK_NAMES),
        help=f"comma list from: {', '.join(CHECK_NAMES)} (default: all)",
    )
    v.add_argument("--out", help="optional report JSON")
    v.set_defaults(func=cmd_verify)

    l = sub.add_parser("limits", help="ultrafilter limits, localization and distance bounds")
    l.add_argument("--space", required=True, help="space JSON from 'build'")
    l.add_argument("--functions", required=True, help="function list JSON")
    l.add_argument("--out", help="optional report JSON")
    l.set_defaults(func=cmd_limits)

    c = sub.add_parser("certify", help="relative-compactness certificate for a family")
    c.add_argument("--family", required=True, help="family JSON (exact or sampled)")
    c.add_argument("--mode", choices=("exact", "numeric"), required=True)
    c.add_argument("--eps", default="0.25,0.125", help="comma list of scales (default 0.25,0.125)")
    c.add_argument("--out", required=True, help="certificate JSON")
    c.add_argument(
        "--tail-tol",
        type=float,
        default=0.1,
        help="numeric mode: allowed gap between boundary samples and declared tails (default 0.1)",
    )
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("selftest", help="seeded randomized property suites")
    s.add_argument("--seed", type=int, default=42, help="suite seed (default 42)")
    s.add_argument("--cases", type=int, help="override per-suite case count")
    s.add_argument(
        "--max-functions", type=int, default=32, help="family size bound (default 32)"
    )
    s.add_argument("--out", help="optional report JSON")
    s.set_defaults(func=cmd_selftest)

    r = sub.add_parser("report", help="render figures and CSV series from a report")
    r.add_argument("--input", required=True, help="report/certificate JSON")
    r.add_argument("--outdir", required=True, help="output directory for figures and CSV")
    r.set_defaults(func=cmd_report)

    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except WallmanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
