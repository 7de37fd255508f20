"""Command-line interface.

Subcommands:
  verify <background-id | file.json>   theory verifier + max-susy checks
  enumerate [--tables]                 parallelisable geometry tables
  susy <geometry-id>                   frame-constant supersymmetry counts
  canonicalize-cw <matrix.json>        plane-wave moduli invariant
  reduce <algebra-id> --along ...      group reduction identities
  bench                                compare the rational backends

Exit code 0 iff every requested check passes.
"""

import argparse
import json
import os
import sys

from .exactnum import parse_scalar
from .liealg import CWData, cw_canonicalize, nw6, so12_so3, e15, su3
from .kaluza import reduce_group
from . import catalog
from ._backend import BACKEND_NAME


def _emit_report(rep):
    """Reports also land in SUGRAVERIFY_REPORT_DIR as <name>.json when set."""
    outdir = os.environ.get("SUGRAVERIFY_REPORT_DIR")
    if outdir:
        os.makedirs(outdir, exist_ok=True)
        path = os.path.join(outdir, f"{rep.background}.json")
        with open(path, "w") as fh:
            fh.write(rep.to_json())


def _verify_one(name):
    rep = catalog.verify_background(catalog.get_background(name))
    return name, rep.passed, rep


def cmd_verify(args):
    perturb = None
    if args.perturb:
        perturb = {}
        for item in args.perturb.split(","):
            key, val = item.split("=")
            assert key[0] == "A"
            i, j = int(key[1]) - 1, int(key[2]) - 1
            perturb[(i, j)] = parse_scalar(val.lstrip("+"))
    if args.background == "all":
        # every catalog entry, verified in parallel, reported sorted by id
        import concurrent.futures
        names = sorted(catalog.background_ids())
        results = {}
        with concurrent.futures.ProcessPoolExecutor() as ex:
            for name, passed, rep in ex.map(_verify_one, names):
                results[name] = (passed, rep)
        all_ok = True
        for name in names:
            passed, rep = results[name]
            all_ok = all_ok and passed
            _emit_report(rep)
            if args.format == "json":
                print(rep.to_json())
            else:
                print(f"{'PASS' if passed else 'FAIL'}  {name}")
        return 0 if all_ok else 1
    if os.path.exists(args.background):
        b = catalog.load_background(args.background)
    else:
        try:
            b = catalog.get_background(args.background, mu=args.mu, Rv=args.r,
                                       perturb=perturb)
        except KeyError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    try:
        rep = catalog.verify_background(b)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit_report(rep)
    if args.format == "json":
        print(rep.to_json())
    else:
        print(rep.to_text())
    return 0 if rep.passed else 1


def cmd_enumerate(args):
    t2 = catalog.table2_lines()
    t3 = catalog.table3_lines()
    rej = catalog.table3_rejections()
    payload = {"parallelisable_geometries": t2,
               "backgrounds_with_dilaton": t3,
               "rejected": rej}
    if args.tables:
        payload["susy_counts"] = catalog.table4_lines()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"ten-dimensional parallelisable geometries ({len(t2)}):")
        for l in t2:
            print(f"  {l}")
        print(f"type-II backgrounds with dilaton ({len(t3)}):")
        for l in t3:
            print(f"  {l}")
        print("rejected geometries:")
        for l in rej:
            print(f"  {l}")
        if args.tables:
            print("frame-constant supersymmetry counts:")
            for l in payload["susy_counts"]:
                print(f"  {l}")
    ok = len(t2) == 17 and len(t3) == 12 and len(rej) == 5
    return 0 if ok else 1


def cmd_susy(args):
    products = {p.ident(): p for p in catalog.enumerate_parallelisable(10)}
    p = products.get(args.geometry)
    if p is None:
        print(f"error: unknown geometry id {args.geometry!r}; have "
              f"{sorted(products)}", file=sys.stderr)
        return 2
    sol = catalog.solve_dilaton(p)
    out = {"geometry": p.display(), "sector": "frame-constant"}
    if not sol.accepted:
        out["rejected"] = sol.reason
    else:
        if catalog.has_constant_dilaton_member(p):
            out["constant"] = catalog.susy_count(p, "constant")
        else:
            out["constant"] = "no background with constant dilaton"
        out["nonconstant"] = catalog.susy_count(p, "nonconstant")
        out["note"] = ("enhanced counts for special plane-wave profiles are "
                       "not computed (out of scope)")
    if args.format == "json":
        print(json.dumps(out, indent=2, default=str))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0 if sol.accepted else 1


def cmd_canonicalize_cw(args):
    with open(args.matrix) as fh:
        rows = json.load(fh)
    A = [[parse_scalar(str(x)) for x in row] for row in rows]
    tup, degenerate, exact = cw_canonicalize(CWData(A))
    out = {
        "canonical_tuple": [str(x) for x in tup],
        "degenerate": degenerate,
        "exact": exact,
    }
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print("canonical tuple:", ", ".join(out["canonical_tuple"]))
        print("degenerate:", degenerate, " exact:", exact)
    return 0


_ALGEBRAS = {
    "nw6": nw6,
    "so12+so3": lambda: so12_so3(1, 1),
    "e15": e15,
    "su3": su3,
}


def _algebra_by_id(name):
    if name in _ALGEBRAS:
        return _ALGEBRAS[name]()
    if name.startswith("d2n2(") and name.endswith(")"):
        from .liealg import d2n2
        weights = [parse_scalar(w) for w in name[5:-1].split(",")]
        return d2n2(weights)
    if name.startswith("so12+so3(") and name.endswith(")"):
        a = parse_scalar(name[9:-1])
        return so12_so3(a, a)
    return None


def cmd_reduce(args):
    if args.algebra == "e1_10" or args.algebra == "e1_10_flat":
        from .kaluza import reduce_flat_d11
        comps = [parse_scalar(x) for x in args.along.split(",")]
        try:
            red = reduce_flat_d11({"type": "translation",
                                   "components": comps})
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
        print(json.dumps(red, indent=2) if args.format == "json"
              else "\n".join(f"{k}: {v}" for k, v in red.items()))
        return 0
    g = _algebra_by_id(args.algebra)
    if g is None:
        print(f"error: unknown algebra {args.algebra!r}; have "
              f"{sorted(_ALGEBRAS)}, d2n2(w1,...), and e1_10",
              file=sys.stderr)
        return 2
    X = [parse_scalar(x) for x in args.along.split(",")]
    if len(X) != g.dim:
        print(f"error: expected {g.dim} components", file=sys.stderr)
        return 2
    try:
        red = reduce_group(g, X)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out = {k: bool(v) for k, v in red.checks.items()}
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for k, v in out.items():
            print(f"{'PASS' if v else 'FAIL'}  {k}")
    return 0 if red.passed else 1


def cmd_bench(args):
    from . import _bench
    return _bench.run(args)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="sugraverify",
        description="exact verification of maximally supersymmetric and "
                    "parallelisable supergravity backgrounds "
                    f"(rational backend: {BACKEND_NAME})")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="verify a background")
    pv.add_argument("background", help="catalog id or background file")
    pv.add_argument("--mu", type=int, default=None)
    pv.add_argument("--r", type=int, default=None)
    pv.add_argument("--perturb", default=None,
                    help="profile perturbation, e.g. A11=+1")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("enumerate", help="reproduce the geometry tables")
    pe.add_argument("--tables", action="store_true",
                    help="include the susy-count table")
    pe.add_argument("--format", choices=("text", "json"), default="text")
    pe.set_defaults(func=cmd_enumerate)

    ps = sub.add_parser("susy", help="frame-constant susy counts")
    ps.add_argument("geometry")
    ps.add_argument("--format", choices=("text", "json"), default="text")
    ps.set_defaults(func=cmd_susy)

    pc = sub.add_parser("canonicalize-cw", help="plane-wave moduli invariant")
    pc.add_argument("matrix", help="JSON file with the profile matrix")
    pc.add_argument("--format", choices=("text", "json"), default="text")
    pc.set_defaults(func=cmd_canonicalize_cw)

    pr = sub.add_parser("reduce", help="group reduction identities")
    pr.add_argument("algebra")
    pr.add_argument("--along", required=True,
                    help="comma-separated frame components")
    pr.add_argument("--format", choices=("text", "json"), default="text")
    pr.set_defaults(func=cmd_reduce)

    pb = sub.add_parser("bench", help="compare rational backends")
    pb.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
