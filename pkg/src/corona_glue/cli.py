"""Command-line interface: ``corona-glue <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import catalog, families, geography, oracle
from .core import GluingError, validate
from .invariants import cusp_classes, invariants
from .io import ParseError, dumps, export_dot, format_rational, loads

__all__ = ["main"]


def _read_surface(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return loads(text)


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_perm(text):
    if text in families.SEAMS:
        return families.SEAMS[text]
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected one of {sorted(families.SEAMS)} or a comma-separated permutation") from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise GluingError(f"build {args.family} needs --{' --'.join(missing)}")


def cmd_build(args):
    fam = args.family
    if fam == "circle":
        _require(args, "k", "l")
        s = families.x_kl(args.k, args.l)
    elif fam == "x13":
        s = families.x13()
    elif fam == "stick":
        _require(args, "k")
        s = families.stick(args.k)
    elif fam == "double-cover":
        s = families.double_cover()
    elif fam == "virus-ring":
        _require(args, "n")
        s = families.virus_ring(args.n, args.seam or families.SEAMS["identity"])
    else:
        _require(args, "k", "l", "a")
        s = families.corona(args.k, args.l, args.a)
    _write(dumps(s), args.out)
    return 0


def _fmt(v):
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "undefined"
    if isinstance(v, int):
        return str(v)
    return format_rational(v)


def cmd_invariants(args):
    s = _read_surface(args.file)
    check = validate(s)
    if not check.ok:
        for v in check.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    r = invariants(s)
    if args.json:
        out = {key: (format_rational(v) if key in ("chi", "ksq", "p2") and v is not None else v)
               for key, v in r.summary().items()}
        out["cusps"] = [{"nodes": c.node_count, "fixed": c.contains_fixed_point,
                         "type": c.cusp_type.value, "members": [str(x) for x in c.members]}
                        for c in r.cusps]
        print(json.dumps(out, indent=2))
        return 0
    fields = [
        ("tiles", len(s.tiles)), ("mu_bar", r.mu_bar), ("chi_boundary", r.chi_boundary),
        ("delta", r.delta), ("rho", r.rho), ("chi", r.chi), ("chi_integral", r.chi_integral),
        ("ksq", r.ksq), ("index", r.gorenstein_index), ("p2", r.p2),
        ("obstructed_local", r.certificate.obstructed_local),
        ("obstructed_global", r.certificate.obstructed_global),
    ]
    for key, v in fields:
        print(f"{key}={_fmt(v)}")
    if r.p2 is None:
        print(f"p2_reason={r.p2_reason}")
    for i, c in enumerate(r.cusps):
        kind = "z2_quotient" if c.contains_fixed_point else "cusp"
        print(f"class {i}: {kind} nodes={c.node_count} type={c.cusp_type.value}")
    for a in check.annotations:
        print(f"note: {a}")
    if not r.chi_integral:
        print("warning: chi is not integral; the data is likely not realisable")
    return 0


def cmd_sites(args):
    s = _read_surface(args.file)
    for site in families.list_attachment_sites(s):
        print(f"{site.index}: {site.first} <-> {site.second}")
    return 0


def cmd_infect(args):
    s = _read_surface(args.file)
    for _ in range(args.times):
        s = families.infect(s, args.site, args.choice)
    _write(dumps(s), args.out)
    return 0


def cmd_sweep(args):
    diagnostics: list[str] = []
    rows = geography.sweep(args.kmax, args.lmax, diagnostics)
    if args.out in (None, "-"):
        fh = sys.stdout
    else:
        fh = open(args.out, "w", encoding="utf-8", newline="")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(geography.CSV_COLUMNS)
        for r in rows:
            w.writerow([r.k, r.l, r.a, r.family.family.value, format_rational(r.ksq),
                        format_rational(r.chi), r.delta, r.rho, r.index,
                        _fmt(r.p2), _fmt(r.obstructed_local), _fmt(r.obstructed_global)])
    finally:
        if fh is not sys.stdout:
            fh.close()
    for d in diagnostics:
        print(f"diagnostic: {d}", file=sys.stderr)
    return 0


def cmd_tiles(args):
    if args.action == "list":
        for name, bp in catalog.TILES.items():
            bds = ",".join(f"{b.label}[{b.marked_point_count}]" for b in bp.boundaries)
            sings = ",".join(s.kind.value for s in bp.interior_singularities) or "-"
            print(f"{name}\tchi={bp.chi}\tkplusd_sq={format_rational(bp.kplusd_sq)}"
                  f"\tboundary={bds}\tnodes={len(bp.node_pairing)}\tsingularities={sings}")
        return 0
    matchings = catalog.enumerate_L34_matchings()
    print(f"matchings L3->L4: {len(matchings)}")
    for label, members in catalog.classify_matchings_up_to_iso().items():
        shown = " ".join("{" + ",".join(f"{a}->{b}" for a, b in m) + "}" for m in members)
        print(f"type {label}: {shown}")
    return 0


def cmd_verify(args):
    s = _read_surface(args.file)
    check = validate(s)
    results = [("validate", check.ok, "; ".join(check.violations))]
    if check.ok:
        main_classes = [c.members for c in cusp_classes(s)]
        results.append(("cusp classes == traversal oracle",
                        main_classes == oracle.delta_bruteforce(s), ""))
        r = invariants(s)
        chi2 = oracle.chi_from_cycles(s)
        results.append(("chi == chi_from_cycles", chi2 == r.chi,
                        f"{format_rational(r.chi)} vs {format_rational(chi2)}"))
        sites = [tuple(sorted((tuple(x.first), tuple(x.second))))
                 for x in families.list_attachment_sites(s)]
        results.append(("attachment sites == exhaustive scan",
                        sorted(sites) == oracle.sites_bruteforce(s), ""))
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail and not ok else ""))
        failed += not ok
    return 1 if failed else 0


def cmd_export_dot(args):
    s = _read_surface(args.file)
    check = validate(s)
    if not check.ok:
        for v in check.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    _write(export_dot(s), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="corona-glue",
                                description="Glued stable surfaces and their invariants")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a family member as a JSON document")
    b.add_argument("family", choices=["circle", "x13", "stick", "double-cover", "virus-ring",
                                      "corona"])
    b.add_argument("--k", type=int)
    b.add_argument("--l", type=int)
    b.add_argument("--a", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--seam", type=_parse_perm,
                   help="virus ring seam: identity, transposition, 3-cycle or e.g. 1,2,0")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_build)

    inv = sub.add_parser("invariants", help="print the invariants of a surface document")
    inv.add_argument("file", help="path or - for stdin")
    inv.add_argument("--json", action="store_true")
    inv.set_defaults(func=cmd_invariants)

    si = sub.add_parser("sites", help="list attachment sites for infection")
    si.add_argument("file")
    si.set_defaults(func=cmd_sites)

    i = sub.add_parser("infect", help="insert virus tiles")
    i.add_argument("file")
    i.add_argument("--site", type=int, default=0)
    i.add_argument("--times", type=int, default=1)
    i.add_argument("--choice", type=_parse_perm, default=None,
                   help="bijection from the site's first component onto C1")
    i.add_argument("--out", default="-")
    i.set_defaults(func=cmd_infect)

    sw = sub.add_parser("sweep", help="CSV table of coronas over a (k, l) box")
    sw.add_argument("--kmax", type=int, required=True)
    sw.add_argument("--lmax", type=int, required=True)
    sw.add_argument("--out", default="-", help="CSV path or - for stdout")
    sw.set_defaults(func=cmd_sweep)

    t = sub.add_parser("tiles", help="list catalog tiles or classify L3/L4 matchings")
    t.add_argument("action", choices=["list", "classify"])
    t.set_defaults(func=cmd_tiles)

    v = sub.add_parser("verify", help="check a surface against the brute-force oracles")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("export-dot", help="Graphviz rendering of the strand graph")
    d.add_argument("file")
    d.add_argument("--out", default="-")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GluingError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
