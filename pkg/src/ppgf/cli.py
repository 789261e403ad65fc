"""Command-line front end: ``ppgf <verb> [flags]``."""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import conegeom, enumeration, omega, recursion
from .multipoly import Polynomial, to_text
from .ratgf import FactoredGF, gf_clear_to, gf_series, truncated_product

SYMBOLIC_MAX_K = 5
COUNTS_MAX_K = 12


class UsageError(Exception):
    pass


def _table(rows) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        lines.append(" ".join(str(v).rjust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _check_k(args, limit=SYMBOLIC_MAX_K, lo=1):
    if args.k < lo:
        raise UsageError(f"--k must be >= {lo}")
    if args.k > limit and not args.allow_large:
        raise UsageError(f"--k above {limit} needs --allow-large")


def _gf_text(g: FactoredGF) -> str:
    return f"num: {to_text(g.num)}\nden: {g.den}"


def cmd_rays(args):
    if args.k < 1 or args.k > COUNTS_MAX_K and not args.allow_large:
        raise UsageError(f"--k must be in 1..{COUNTS_MAX_K}")
    rays = conegeom.rays_Uk(args.k)
    if args.format == "json":
        return {"k": args.k, "rays": [list(r) for r in rays]}
    lines = [f"|k | {args.k}|", "|ray nr | ray |"]
    lines += [f"|{i:02} | ({', '.join(map(str, r))}) |" for i, r in enumerate(rays)]
    return "\n".join(lines)


def counts_rows(max_k: int, min_k: int = 2) -> list:
    rows = []
    for k in range(min_k, max_k + 1):
        rows.append([k, 2 * k, len(conegeom.rays_Uk(k)), math.comb(k + 2, 2) - 1,
                     conegeom.count_linear_extensions(k), conegeom.catalan(k)])
    return rows


COUNTS_HEADER = ["k", "dim(C)=2k", "nr rays", "binom(2+k,2)-1", "nr cones in tri", "Catalan k"]


def cmd_counts(args):
    if args.max_k < 2 or args.max_k > COUNTS_MAX_K and not args.allow_large:
        raise UsageError(f"--max-k must be in 2..{COUNTS_MAX_K}")
    rows = counts_rows(args.max_k)
    if args.format == "json":
        return {"columns": COUNTS_HEADER, "rows": rows}
    return _table([COUNTS_HEADER] + rows)


def cmd_triangulate(args):
    _check_k(args, limit=8)
    index = {r: i for i, r in enumerate(conegeom.rays_Uk(args.k))}
    cones = conegeom.triangulation(args.k)
    data = [{"rays": [index[r] for r in c.rays], "marked": sorted(index[c.rays[i]] for i in c.halfopen_marks)}
            for c in cones]
    if args.format == "json":
        return {"k": args.k, "cones": data}
    lines = [f"|k | {args.k}| cones {len(cones)}", "|cone | rays | marked |"]
    for i, d in enumerate(data):
        lines.append(f"|{i:02} | {' '.join(map(str, d['rays']))} | {' '.join(map(str, d['marked']))} |")
    return "\n".join(lines)


def _gf_for(args) -> FactoredGF:
    return recursion.compute_Qtilde(args.k) if args.tilde else recursion.compute_Q(args.k)


def cmd_gf(args):
    _check_k(args, lo=0)
    g = _gf_for(args)
    if args.single_y:
        g = recursion.specialize_single_y(g, args.k)
    return g.to_json() if args.format == "json" else _gf_text(g)


def cmd_numerator(args):
    _check_k(args)
    p = recursion.numerator(args.k, args.tilde)
    return p.to_json() if args.format == "json" else to_text(p)


def _series_args(args):
    _check_k(args)
    if args.degree < 0:
        raise UsageError("--degree must be >= 0")


def cmd_series(args):
    _series_args(args)
    g = recursion.compute_Q(args.k) if args.strict_last else recursion.compute_Qtilde(args.k)
    p = gf_series(g, args.degree)
    return p.to_json() if args.format == "json" else to_text(p)


def cmd_oracle(args):
    _series_args(args)
    p = enumeration.oracle_series(args.k, args.degree, args.strict_last)
    return p.to_json() if args.format == "json" else to_text(p)


def cmd_omega_p22(args):
    b = omega.p22_via_omega()
    return b.value.to_json() if args.format == "json" else _gf_text(b.value)


def cmd_ap_step(args):
    if args.n < 1 or args.n > 3 and not args.allow_large:
        raise UsageError("--n must be in 1..3")
    b = omega.p21()
    while b.n < args.n:
        b = omega.ap_step(b)
    b = omega.ap_step(b)
    return b.value.to_json() if args.format == "json" else _gf_text(b.value)


def verify_checks(k: int, degree: int) -> list:
    """(name, ok) pairs comparing every route at width k."""
    checks = []
    Q, Qt = recursion.compute_Q(k), recursion.compute_Qtilde(k)
    checks.append(("recursion=oracle (Q)",
                   gf_series(Q, degree) == enumeration.oracle_series(k, degree, True)))
    checks.append(("recursion=oracle (Q~)",
                   gf_series(Qt, degree) == enumeration.oracle_series(k, degree, False)))
    den = recursion.denominator_Dk(k)
    target = recursion.numerator(k, tilde=True)
    checks.append(("triangulation=recursion", gf_clear_to(conegeom.gf_via_triangulation(k), den) == target))
    if k <= 3:
        b = omega.p21()
        while b.n < k:
            b = omega.ap_step(b)
        checks.append(("omega=recursion", gf_clear_to(b.renamed(), den) == target))
        if k == 2:
            checks.append(("omega-p22=recursion", gf_clear_to(omega.p22_via_omega().renamed(), den) == target))
    # the product is exact below degree N, so N below the cutoff proves nothing
    cutoff = target.total_degree()
    n = max(degree, cutoff)
    lhs = truncated_product(gf_series(Qt, n), den, cutoff)
    checks.append((f"numerator stabilization (N={n}, cutoff={cutoff})", lhs == target))
    return checks


def cmd_verify(args):
    _check_k(args, limit=4)
    checks = verify_checks(args.k, args.degree)
    ok = all(v for _, v in checks)
    status = 0 if ok else 1
    if args.format == "json":
        return {"k": args.k, "degree": args.degree, "ok": ok, "checks": {n: v for n, v in checks}}, status
    lines = [f"{'ok  ' if v else 'FAIL'} {name}" for name, v in checks]
    lines.append("OK" if ok else "FAILED")
    return "\n".join(lines), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ppgf", description="Generating functions of two-row plane partitions.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--allow-large", action="store_true", help="lift the default size limits")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        return p

    add("rays", cmd_rays).add_argument("--k", type=int, required=True)
    add("counts", cmd_counts).add_argument("--max-k", type=int, default=COUNTS_MAX_K)
    add("triangulate", cmd_triangulate).add_argument("--k", type=int, required=True)
    p = add("gf", cmd_gf)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tilde", action="store_true")
    p.add_argument("--single-y", action="store_true")
    p = add("numerator", cmd_numerator)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tilde", action="store_true")
    for name, func in (("series", cmd_series), ("oracle", cmd_oracle)):
        p = add(name, func)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--strict-last", action="store_true")
    add("omega-p22", cmd_omega_p22)
    add("ap-step", cmd_ap_step).add_argument("--n", type=int, required=True)
    p = add("verify", cmd_verify)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, default=8)

    # global flags are also accepted after the verb
    for p in sub.choices.values():
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.add_argument("--allow-large", action="store_true", default=argparse.SUPPRESS)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"ppgf: error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, ValueError) as exc:
        print(f"ppgf: computation failed: {exc}", file=sys.stderr)
        return 1
    status = 0
    if isinstance(result, tuple):
        result, status = result
    if args.format == "json":
        text = json.dumps(result, indent=2, sort_keys=True)
    else:
        text = result
    out.write(text.rstrip("\n") + "\n")
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
